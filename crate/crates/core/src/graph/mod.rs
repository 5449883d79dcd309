//! Small simple undirected graphs with one `u64` adjacency row per vertex.
//!
//! Every graph holds at most [`MAX_ORDER`] vertices, labeled `0..order`.
//! Rows never contain bits at or above `order` and never contain the
//! vertex's own bit.

mod connectivity;
pub mod graph6;
mod subsets;

use std::fmt;

use thiserror::Error;

pub use connectivity::vertex_connectivity;
pub use subsets::Subsets;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {order} exceeds the capacity of {MAX_ORDER} vertices")]
    Capacity { order: usize },
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge ({0}, {0}) would be a loop")]
    Loop(usize),
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("{0}")]
    Domain(&'static str),
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word in ascending order.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

/// A set of vertex labels below 64, stored as a bit vector.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    pub const fn all(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_ORDER, "vertex {v} out of range");
        VertexSet(bit(v))
    }

    pub fn range(range: std::ops::Range<usize>) -> Self {
        range.fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_ORDER, "vertex {v} out of range");
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_ORDER {
            self.0 &= !bit(v);
        }
    }

    #[must_use]
    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl ExactSizeIterator<Item = usize> {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Sorted list notation, e.g. `[0, 1, 2, 3]`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// An unordered pair of distinct vertices, normalized so that `u < v`.
///
/// The derived ordering is lexicographic on `(u, v)`, which is the edge
/// order used for enumeration and witness selection.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge, GraphError> {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn vertices(self) -> VertexSet {
        VertexSet(bit(self.u) | bit(self.v))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Which of the two trivial graphs [`Graph::basic`] builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    /// `K_n`
    Complete,
    /// `I_n`
    Edgeless,
}

/// An immutable simple undirected graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

/// Result of [`Graph::delete_vertices`]: the induced subgraph plus, for each
/// new label, the original label it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub graph: Graph,
    pub original: Vec<usize>,
}

fn check_order(order: usize) -> Result<(), GraphError> {
    if order > MAX_ORDER {
        Err(GraphError::Capacity { order })
    } else {
        Ok(())
    }
}

impl Graph {
    pub fn empty(order: usize) -> Result<Graph, GraphError> {
        check_order(order)?;
        Ok(Graph {
            order,
            rows: vec![0; order],
        })
    }

    /// Builds a graph from adjacency rows. Rows are validated for range,
    /// loops and symmetry.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph, GraphError> {
        let order = rows.len();
        check_order(order)?;
        let mask = low_mask(order);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    order,
                });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::Loop(v));
            }
            for w in Bits(row) {
                if rows[w] & bit(v) == 0 {
                    return Err(GraphError::Domain("adjacency rows are not symmetric"));
                }
            }
        }
        Ok(Graph { order, rows })
    }

    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(order)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        for x in [a, b] {
            if x >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    order: self.order,
                });
            }
        }
        let e = Edge::new(a, b)?;
        self.rows[e.u] |= bit(e.v);
        self.rows[e.v] |= bit(e.u);
        Ok(())
    }

    /// `K_n` or `I_n`.
    pub fn basic(kind: BasicKind, n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        if kind == BasicKind::Complete {
            let all = low_mask(n);
            for (v, row) in g.rows.iter_mut().enumerate() {
                *row = all & !bit(v);
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        Graph::basic(BasicKind::Complete, n)
    }

    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        Graph::basic(BasicKind::Edgeless, n)
    }

    /// The cycle `C_n` with edges `(i, i+1)` and `(0, n-1)`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::Domain("a cycle needs at least 3 vertices"));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `P_n` on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Complete bipartite `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
        Graph::join(&Graph::edgeless(a)?, &Graph::edgeless(b)?)
    }

    /// Disjoint union; `g2` is relabeled by offset `g1.order()`.
    pub fn union(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
        let order = g1.order + g2.order;
        check_order(order)?;
        let shift = g1.order;
        let rows = g1
            .rows
            .iter()
            .copied()
            .chain(g2.rows.iter().map(|&r| r << shift))
            .collect();
        Ok(Graph { order, rows })
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
        let mut g = Graph::union(g1, g2)?;
        let left = low_mask(g1.order);
        let right = low_mask(g.order) & !left;
        for (v, row) in g.rows.iter_mut().enumerate() {
            *row |= if v < g1.order { right } else { left };
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::all(self.order)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order && b < self.order && self.rows[a] & bit(b) != 0
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for (u, &row) in self.rows.iter().enumerate() {
            for v in Bits(row & !low_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Induced subgraph on the complement of `s`, relabeled in increasing
    /// order of the surviving original labels.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<Reduced, GraphError> {
        if !s.is_subset(self.vertices()) {
            let stray = s.difference(self.vertices()).first().unwrap_or(0);
            return Err(GraphError::VertexOutOfRange {
                vertex: stray,
                order: self.order,
            });
        }
        let keep = self.vertices().difference(s);
        let original = keep.to_vec();
        let rows = original
            .iter()
            .map(|&old| compact(self.rows[old] & keep.0, keep.0))
            .collect();
        Ok(Reduced {
            graph: Graph {
                order: original.len(),
                rows,
            },
            original,
        })
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.contains_edge(e) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut g = self.clone();
        g.rows[e.u] &= !bit(e.v);
        g.rows[e.v] &= !bit(e.u);
        Ok(g)
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn component_of(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> Result<bool, GraphError> {
        if self.order == 0 {
            return Err(GraphError::Domain("connectivity is undefined for the null graph"));
        }
        Ok(self.component_of(0, low_mask(self.order)) == low_mask(self.order))
    }

    /// Connected components as vertex sets, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = low_mask(self.order);
        let mut out = Vec::new();
        while left != 0 {
            let comp = self.component_of(left.trailing_zeros() as usize, left);
            out.push(VertexSet(comp));
            left &= !comp;
        }
        out
    }

    /// A 2-coloring `(U, W)` if one exists. In every component the lowest
    /// vertex lands in `U`.
    pub fn is_bipartite(&self) -> Option<(VertexSet, VertexSet)> {
        let mut u = 0u64;
        let mut w = 0u64;
        let mut left = low_mask(self.order);
        while left != 0 {
            let root = left.trailing_zeros() as usize;
            u |= bit(root);
            let mut seen = bit(root);
            let mut frontier = bit(root);
            let mut side_u = true;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.rows[v];
                }
                // neighbors of the current layer must sit on the other side
                let same = if side_u { u } else { w };
                if next & same != 0 {
                    return None;
                }
                next &= !seen;
                if side_u {
                    w |= next;
                } else {
                    u |= next;
                }
                seen |= next;
                frontier = next;
                side_u = !side_u;
            }
            left &= !seen;
        }
        Some((VertexSet(u), VertexSet(w)))
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .ok_or(GraphError::Domain("minimum degree is undefined for the null graph"))
    }

    /// Number of edges with one end in `x` and the other in `y`.
    pub fn cross_edge_count(&self, x: VertexSet, y: VertexSet) -> Result<usize, GraphError> {
        if !x.is_disjoint(y) {
            return Err(GraphError::Domain("cross edge count needs disjoint vertex sets"));
        }
        let all = self.vertices();
        if !x.is_subset(all) || !y.is_subset(all) {
            return Err(GraphError::Domain("vertex set is not inside the graph"));
        }
        Ok(x.iter()
            .map(|v| (self.rows[v] & y.0).count_ones() as usize)
            .sum())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order;
        self.rows
            .iter()
            .enumerate()
            .all(|(v, &r)| r == low_mask(n) & !bit(v))
    }
}

/// Packs the bits of `word` selected by `keep` into the low positions.
fn compact(word: u64, keep: u64) -> u64 {
    let mut out = 0;
    for (i, v) in Bits(keep).enumerate() {
        if word & bit(v) != 0 {
            out |= bit(i);
        }
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_graphs() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.size(), 6);
        let i3 = Graph::edgeless(3).unwrap();
        assert_eq!((i3.order(), i3.size()), (3, 0));
        let k1 = Graph::complete(1).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        assert!(Graph::complete(64).is_ok());
        assert_eq!(
            Graph::complete(65),
            Err(GraphError::Capacity { order: 65 })
        );
    }

    #[test]
    fn union_and_join() {
        let k3 = Graph::complete(3).unwrap();
        let k1 = Graph::complete(1).unwrap();
        let side = Graph::union(&k3, &k1).unwrap();
        assert_eq!((side.order(), side.size()), (4, 3));
        assert!(!side.is_connected().unwrap());

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(Graph::union(&Graph::edgeless(0).unwrap(), &c5).unwrap(), c5);

        let wheel = Graph::join(&k1, &Graph::cycle(4).unwrap()).unwrap();
        assert_eq!((wheel.order(), wheel.size()), (5, 8));

        let g2 = Graph::join(&side, &side).unwrap();
        assert_eq!((g2.order(), g2.size()), (8, 22));
        assert!(g2.is_connected().unwrap());

        let k22 = Graph::join(&Graph::edgeless(2).unwrap(), &Graph::edgeless(2).unwrap()).unwrap();
        assert_eq!(k22.size(), 4);
        assert_eq!(k22.degrees(), vec![2; 4]);
        assert!(k22.is_bipartite().is_some());
        assert!(Graph::union(&Graph::complete(40).unwrap(), &Graph::complete(25).unwrap()).is_err());
    }

    #[test]
    fn delete_vertices_relabels() {
        let c5 = Graph::cycle(5).unwrap();
        let r = c5.delete_vertices(VertexSet::singleton(0)).unwrap();
        assert_eq!(r.original, vec![1, 2, 3, 4]);
        assert_eq!(r.graph, Graph::path(4).unwrap());

        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.delete_vertices(VertexSet::EMPTY).unwrap().graph, k4);

        let side = Graph::union(&Graph::complete(3).unwrap(), &Graph::complete(1).unwrap()).unwrap();
        let g2 = Graph::join(&side, &side).unwrap();
        let r = g2.delete_vertices(VertexSet::range(0..4)).unwrap();
        assert_eq!(r.graph, side);
        assert_eq!(r.original, vec![4, 5, 6, 7]);

        assert!(k4.delete_vertices(VertexSet::singleton(9)).is_err());
    }

    #[test]
    fn delete_edge_cases() {
        let k4 = Graph::complete(4).unwrap();
        let e = Edge::new(2, 1).unwrap();
        assert_eq!(k4.delete_edge(e).unwrap().size(), 5);

        let c6 = Graph::cycle(6).unwrap();
        let p6 = c6.delete_edge(Edge::new(5, 0).unwrap()).unwrap();
        assert_eq!(p6, Graph::path(6).unwrap());

        let c5 = Graph::cycle(5).unwrap();
        let p5 = c5.delete_edge(Edge::new(0, 1).unwrap()).unwrap();
        let mut degs = p5.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2, 2]);

        let missing = Edge::new(0, 2).unwrap();
        assert_eq!(c5.delete_edge(missing), Err(GraphError::MissingEdge(missing)));
        assert_eq!(Edge::new(3, 3), Err(GraphError::Loop(3)));
    }

    #[test]
    fn connectivity_and_bipartition() {
        assert!(Graph::complete(1).unwrap().is_connected().unwrap());
        assert!(Graph::empty(0).unwrap().is_connected().is_err());

        let c6 = Graph::cycle(6).unwrap();
        let (u, w) = c6.is_bipartite().unwrap();
        assert_eq!(u.to_vec(), vec![0, 2, 4]);
        assert_eq!(w.to_vec(), vec![1, 3, 5]);
        assert!(Graph::cycle(5).unwrap().is_bipartite().is_none());

        // second component's lowest vertex also goes to U
        let two = Graph::union(&Graph::path(2).unwrap(), &Graph::path(3).unwrap()).unwrap();
        let (u, w) = two.is_bipartite().unwrap();
        assert_eq!(u.to_vec(), vec![0, 2, 4]);
        assert_eq!(w.to_vec(), vec![1, 3]);
    }

    #[test]
    fn degrees_and_cross_edges() {
        assert_eq!(Graph::cycle(5).unwrap().min_degree().unwrap(), 2);
        assert_eq!(Graph::complete(1).unwrap().min_degree().unwrap(), 0);
        assert!(Graph::empty(0).unwrap().min_degree().is_err());

        let k4 = Graph::complete(4).unwrap();
        let x = VertexSet::range(0..2);
        let y = VertexSet::range(2..4);
        assert_eq!(k4.cross_edge_count(x, y).unwrap(), 4);
        assert!(k4.cross_edge_count(x, x).is_err());

        let i5 = Graph::edgeless(5).unwrap();
        assert_eq!(i5.cross_edge_count(x, VertexSet::range(2..5)).unwrap(), 0);
    }

    #[test]
    fn from_rows_validates() {
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b100, 0]).is_err());
    }

    #[test]
    fn vertex_set_display() {
        let s: VertexSet = [3, 0, 5].into_iter().collect();
        assert_eq!(s.to_string(), "[0, 3, 5]");
        assert_eq!(VertexSet::EMPTY.to_string(), "[]");
    }
}
