use std::collections::VecDeque;

use super::{Bits, Graph, GraphError};

/// Vertex connectivity `κ(G)`.
///
/// `κ(K_n) = n - 1`; a disconnected graph has `κ = 0`. Otherwise the result
/// is the minimum, over non-adjacent pairs `(s, t)`, of the number of
/// internally vertex-disjoint `s`–`t` paths, found as a unit-capacity max
/// flow on the vertex-split graph.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.order();
    if n < 2 {
        return Err(GraphError::Domain("vertex connectivity needs at least 2 vertices"));
    }
    if !g.is_connected()? {
        return Ok(0);
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    let mut best = g.min_degree()?;
    let mut net = SplitNetwork::new(g);
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            best = best.min(net.disjoint_paths(s, t, best));
            if best == 0 {
                return Ok(0);
            }
        }
    }
    Ok(best)
}

/// Vertex `v` becomes `in = 2v` and `out = 2v + 1` joined by a unit arc;
/// every edge `uv` becomes arcs `out(u) -> in(v)` and `out(v) -> in(u)`.
struct SplitNetwork<'g> {
    g: &'g Graph,
    nodes: usize,
    cap: Vec<i32>,
}

impl<'g> SplitNetwork<'g> {
    fn new(g: &'g Graph) -> Self {
        let nodes = 2 * g.order();
        SplitNetwork {
            g,
            nodes,
            cap: vec![0; nodes * nodes],
        }
    }

    fn reset(&mut self) {
        self.cap.fill(0);
        let n = self.g.order();
        let big = n as i32;
        for v in 0..n {
            self.cap[(2 * v) * self.nodes + 2 * v + 1] = 1;
            for w in Bits(self.g.rows()[v]) {
                self.cap[(2 * v + 1) * self.nodes + 2 * w] = big;
            }
        }
    }

    /// Number of internally disjoint paths, stopping once `limit` is reached.
    fn disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.reset();
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        let mut parent = vec![usize::MAX; self.nodes];
        let mut queue = VecDeque::new();
        while flow < limit {
            parent.fill(usize::MAX);
            parent[source] = source;
            queue.clear();
            queue.push_back(source);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                let row = &self.cap[x * self.nodes..(x + 1) * self.nodes];
                for (y, &c) in row.iter().enumerate() {
                    if c > 0 && parent[y] == usize::MAX {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let x = parent[y];
                self.cap[x * self.nodes + y] -= 1;
                self.cap[y * self.nodes + x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }
}
