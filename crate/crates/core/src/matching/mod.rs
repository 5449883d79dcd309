//! Maximum matching, perfect-matching tests and `k`-matching enumeration.

mod blossom;
mod enumerate;
mod sample;

use std::fmt;

use thiserror::Error;

use crate::graph::{bit, Bits, Edge, Graph, VertexSet};

pub(crate) use blossom::perfect_matching_exists;
pub use enumerate::{MatchingCursor, Matchings};
pub use sample::{sample_matching, MatchingSampler};

/// Largest order [`brute_force_max_matching`] accepts.
pub const BRUTE_FORCE_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edge {0} is not in the graph")]
    EdgeNotInGraph(Edge),
    #[error("vertex {0} is covered by two matching edges")]
    Overlap(usize),
    #[error("brute-force matching is limited to {BRUTE_FORCE_MAX_ORDER} vertices, got {order}")]
    Budget { order: usize },
}

/// A set of pairwise vertex-disjoint edges, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<Edge>,
    covered: VertexSet,
}

impl Matching {
    pub fn empty() -> Matching {
        Matching {
            edges: Vec::new(),
            covered: VertexSet::EMPTY,
        }
    }

    /// Validates that the edges belong to `g` and share no endpoint.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Matching, MatchingError> {
        let mut list: Vec<Edge> = edges.into_iter().collect();
        list.sort_unstable();
        let mut covered = VertexSet::EMPTY;
        for &e in &list {
            if !g.contains_edge(e) {
                return Err(MatchingError::EdgeNotInGraph(e));
            }
            for v in [e.u(), e.v()] {
                if covered.contains(v) {
                    return Err(MatchingError::Overlap(v));
                }
                covered.insert(v);
            }
        }
        Ok(Matching {
            edges: list,
            covered,
        })
    }

    pub(crate) fn from_parts(edges: Vec<Edge>, covered: VertexSet) -> Matching {
        debug_assert_eq!(covered.len(), 2 * edges.len());
        Matching { edges, covered }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.covered
    }

    /// Partner of `v`, if `v` is matched.
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|e| match e.endpoints() {
            (a, b) if a == v => Some(b),
            (a, b) if b == v => Some(a),
            _ => None,
        })
    }

    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        self.covered == g.vertices()
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sorted `(u,v)` pairs, e.g. `[(0,1), (2,3)]`.
impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// A maximum-cardinality matching, computed by Edmonds' blossom algorithm.
///
/// Deterministic: a greedy pass over vertices and neighbors in ascending
/// order, then augmentation from each exposed vertex in ascending order.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut b = blossom::Blossom::new(g.rows(), g.vertices().bits());
    b.solve();
    let mut edges = Vec::with_capacity(b.size());
    let mut covered = VertexSet::EMPTY;
    for v in 0..g.order() {
        let w = b.mate[v];
        if w != blossom::NONE && v < w {
            edges.push(Edge::new(v, w).expect("mates are distinct"));
            covered = covered.with(v).with(w);
        }
    }
    Matching::from_parts(edges, covered)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    perfect_matching_exists(g.rows(), g.vertices().bits())
}

/// Every matching of exactly `k` edges, lazily, in lexicographic order of
/// sorted edge lists. Each one is yielded exactly once.
pub fn enumerate_matchings(g: &Graph, k: usize) -> Matchings {
    Matchings::new(MatchingCursor::new(g, g.vertices(), k))
}

/// Whether `m` is contained in a perfect matching of `g`.
pub fn extends_to_perfect(g: &Graph, m: &Matching) -> Result<bool, MatchingError> {
    for &e in m.edges() {
        if !g.contains_edge(e) {
            return Err(MatchingError::EdgeNotInGraph(e));
        }
    }
    let alive = g.vertices().difference(m.covered());
    Ok(perfect_matching_exists(g.rows(), alive.bits()))
}

/// Maximum matching size by exhaustive branching: the lowest uncovered
/// vertex is either matched to one of its neighbors or left exposed.
pub fn brute_force_max_matching(g: &Graph) -> Result<usize, MatchingError> {
    if g.order() > BRUTE_FORCE_MAX_ORDER {
        return Err(MatchingError::Budget { order: g.order() });
    }
    fn best(rows: &[u64], left: u64) -> usize {
        if left == 0 {
            return 0;
        }
        let v = left.trailing_zeros() as usize;
        let rest = left & !bit(v);
        let mut top = best(rows, rest);
        for w in Bits(rows[v] & rest) {
            top = top.max(1 + best(rows, rest & !bit(w)));
        }
        top
    }
    Ok(best(g.rows(), g.vertices().bits()))
}
