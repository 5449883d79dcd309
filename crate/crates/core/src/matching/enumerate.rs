use crate::graph::{bit, low_mask, Edge, Graph, VertexSet};

use super::Matching;

/// Depth-first walk over the `k`-matchings of the subgraph induced by an
/// alive mask, in lexicographic order of sorted edge lists.
///
/// The cursor exposes the current matching without allocating, which is
/// what the deciders use; [`Matchings`] wraps it as an iterator.
pub struct MatchingCursor {
    edges: Vec<Edge>,
    /// `first_from[u]` is the index of the first edge whose low end is `>= u`.
    first_from: Vec<usize>,
    k: usize,
    alive: u64,
    chosen: Vec<usize>,
    current: Vec<Edge>,
    covered: u64,
    started: bool,
    done: bool,
}

impl MatchingCursor {
    pub fn new(g: &Graph, alive: VertexSet, k: usize) -> Self {
        let alive = alive.bits() & g.vertices().bits();
        let edges: Vec<Edge> = g
            .edges()
            .into_iter()
            .filter(|e| e.vertices().bits() & !alive == 0)
            .collect();
        let n = g.order();
        let mut first_from = vec![edges.len(); n + 2];
        for (i, e) in edges.iter().enumerate().rev() {
            first_from[e.u()] = i;
        }
        for u in (0..=n).rev() {
            first_from[u] = first_from[u].min(first_from[u + 1]);
        }
        MatchingCursor {
            edges,
            first_from,
            k,
            alive,
            chosen: Vec::with_capacity(k),
            current: Vec::with_capacity(k),
            covered: 0,
            started: false,
            done: false,
        }
    }

    /// Moves to the next matching; `false` once the walk is exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let mut from = if !self.started {
            self.started = true;
            0
        } else {
            match self.pop() {
                Some(i) => i + 1,
                None => {
                    self.done = true;
                    return false;
                }
            }
        };
        loop {
            if self.chosen.len() == self.k {
                return true;
            }
            match self.find(from) {
                Some(j) => {
                    self.chosen.push(j);
                    self.current.push(self.edges[j]);
                    self.covered |= self.edges[j].vertices().bits();
                    from = j + 1;
                }
                None => match self.pop() {
                    Some(i) => from = i + 1,
                    None => {
                        self.done = true;
                        return false;
                    }
                },
            }
        }
    }

    fn pop(&mut self) -> Option<usize> {
        let i = self.chosen.pop()?;
        self.current.pop();
        self.covered &= !self.edges[i].vertices().bits();
        Some(i)
    }

    fn find(&self, mut j: usize) -> Option<usize> {
        let need = 2 * (self.k - self.chosen.len()) as u32;
        while j < self.edges.len() {
            let e = self.edges[j];
            let free_above = self.alive & !self.covered & !low_mask(e.u());
            if free_above.count_ones() < need {
                return None;
            }
            if self.covered & bit(e.u()) != 0 {
                j = self.first_from[e.u() + 1];
                continue;
            }
            if self.covered & bit(e.v()) == 0 {
                return Some(j);
            }
            j += 1;
        }
        None
    }

    pub fn edges(&self) -> &[Edge] {
        &self.current
    }

    pub fn covered(&self) -> VertexSet {
        VertexSet::from_bits(self.covered)
    }

    pub fn to_matching(&self) -> Matching {
        Matching::from_parts(self.current.clone(), self.covered())
    }
}

/// Lazy stream of every `k`-matching, see [`super::enumerate_matchings`].
pub struct Matchings {
    cursor: MatchingCursor,
}

impl Matchings {
    pub(crate) fn new(cursor: MatchingCursor) -> Self {
        Matchings { cursor }
    }
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        self.cursor
            .advance()
            .then(|| self.cursor.to_matching())
    }
}
