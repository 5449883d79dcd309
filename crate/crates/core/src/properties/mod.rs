//! Deciders for extendability, half-extendability, factor-criticality,
//! minimality and balanced bipartite criticality.
//!
//! Every decider walks its universal quantifier in a fixed order (matchings
//! lexicographically by sorted edge list, vertex subsets lexicographically
//! by sorted member list) and reports the first counterexample it meets.
//! Questions that are ill-posed for the given order or parameter come back
//! as [`PropertyError`], never as a failing verdict.

mod verdict;

use std::fmt;

use rand::Rng;
use rustc_hash::FxHashMap;

use crate::graph::{bit, Graph, Subsets, VertexSet};
use crate::matching::{perfect_matching_exists, sample_matching, MatchingCursor};

pub use verdict::{Budget, PropertyError, Reason, Verdict, Witness};

/// Perfect-matching tests on induced subgraphs, cached by vertex mask.
struct PerfectMatchings<'g> {
    rows: &'g [u64],
    memo: FxHashMap<u64, bool>,
}

impl<'g> PerfectMatchings<'g> {
    fn new(g: &'g Graph) -> Self {
        PerfectMatchings {
            rows: g.rows(),
            memo: FxHashMap::default(),
        }
    }

    fn exists(&mut self, alive: u64) -> bool {
        let rows = self.rows;
        *self
            .memo
            .entry(alive)
            .or_insert_with(|| perfect_matching_exists(rows, alive))
    }
}

/// Admissible `k` for `k`-extendability: `0 <= k <= (ν-2)/2`, `ν` even.
fn check_extendable_params(g: &Graph, k: usize) -> Result<(), PropertyError> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(PropertyError::WrongParity { order: n, param: k });
    }
    if 2 * k + 2 > n {
        return Err(PropertyError::ParamOutOfRange {
            order: n,
            param: k,
            min: 0,
            max: n.checked_sub(2).map(|m| m / 2),
        });
    }
    Ok(())
}

/// Admissible `k` for `k½`-extendability: `0 <= k <= (ν-3)/2`, `ν` odd.
fn check_half_params(g: &Graph, k: usize) -> Result<(), PropertyError> {
    let n = g.order();
    if n % 2 == 0 {
        return Err(PropertyError::WrongParity { order: n, param: k });
    }
    if 2 * k + 3 > n {
        return Err(PropertyError::ParamOutOfRange {
            order: n,
            param: k,
            min: 0,
            max: n.checked_sub(3).map(|m| m / 2),
        });
    }
    Ok(())
}

/// Admissible `n` for `n`-factor-criticality: `0 <= n <= ν-2`, `n ≡ ν (mod 2)`.
fn check_critical_params(g: &Graph, n: usize) -> Result<(), PropertyError> {
    let order = g.order();
    if (order + n) % 2 == 1 {
        return Err(PropertyError::WrongParity { order, param: n });
    }
    if n + 2 > order {
        return Err(PropertyError::ParamOutOfRange {
            order,
            param: n,
            min: 0,
            max: order.checked_sub(2),
        });
    }
    Ok(())
}

fn connected(g: &Graph) -> bool {
    g.is_connected().unwrap_or(false)
}

pub fn is_k_extendable(g: &Graph, k: usize) -> Result<Verdict, PropertyError> {
    is_k_extendable_within(g, k, &mut Budget::unlimited())
}

/// `g` is connected, has a `k`-matching, and every `k`-matching lies in a
/// perfect matching. The first non-extendable matching is the witness.
pub fn is_k_extendable_within(
    g: &Graph,
    k: usize,
    budget: &mut Budget,
) -> Result<Verdict, PropertyError> {
    check_extendable_params(g, k)?;
    if !connected(g) {
        return Ok(Verdict::fails(Reason::Disconnected, None));
    }
    let all = g.vertices().bits();
    let mut pm = PerfectMatchings::new(g);
    let mut cursor = MatchingCursor::new(g, g.vertices(), k);
    let mut any = false;
    while cursor.advance() {
        budget.tick()?;
        any = true;
        if !pm.exists(all & !cursor.covered().bits()) {
            return Ok(Verdict::fails(
                Reason::NonExtendableMatching,
                Some(Witness::Matching(cursor.to_matching())),
            ));
        }
    }
    if !any {
        return Ok(Verdict::fails(Reason::NoKMatching, None));
    }
    Ok(Verdict::holds())
}

pub fn is_half_extendable(g: &Graph, k: usize) -> Result<Verdict, PropertyError> {
    is_half_extendable_within(g, k, &mut Budget::unlimited())
}

/// For every vertex `v`, `G - v` has a `k`-matching and each of them lies
/// in a perfect matching of `G - v`. Connectivity is required as well.
pub fn is_half_extendable_within(
    g: &Graph,
    k: usize,
    budget: &mut Budget,
) -> Result<Verdict, PropertyError> {
    check_half_params(g, k)?;
    if !connected(g) {
        return Ok(Verdict::fails(Reason::Disconnected, None));
    }
    let all = g.vertices().bits();
    let mut pm = PerfectMatchings::new(g);
    for v in 0..g.order() {
        let alive = all & !bit(v);
        let mut cursor = MatchingCursor::new(g, VertexSet::from_bits(alive), k);
        let mut any = false;
        while cursor.advance() {
            budget.tick()?;
            any = true;
            if !pm.exists(alive & !cursor.covered().bits()) {
                return Ok(Verdict::fails(
                    Reason::NonExtendableMatching,
                    Some(Witness::VertexMatching {
                        vertex: v,
                        matching: Some(cursor.to_matching()),
                    }),
                ));
            }
        }
        if !any {
            return Ok(Verdict::fails(
                Reason::NoKMatching,
                Some(Witness::VertexMatching {
                    vertex: v,
                    matching: None,
                }),
            ));
        }
    }
    Ok(Verdict::holds())
}

pub fn is_factor_critical(g: &Graph, n: usize) -> Result<Verdict, PropertyError> {
    is_factor_critical_within(g, n, &mut Budget::unlimited())
}

/// `G - S` has a perfect matching for every `n`-subset `S`.
pub fn is_factor_critical_within(
    g: &Graph,
    n: usize,
    budget: &mut Budget,
) -> Result<Verdict, PropertyError> {
    check_critical_params(g, n)?;
    let all = g.vertices().bits();
    for s in Subsets::new(g.vertices(), n) {
        budget.tick()?;
        if !perfect_matching_exists(g.rows(), all & !s.bits()) {
            return Ok(Verdict::fails(Reason::BadSubset, Some(Witness::VertexSet(s))));
        }
    }
    Ok(Verdict::holds())
}

pub fn is_balanced_bipartite_critical(g: &Graph, k: usize) -> Result<Verdict, PropertyError> {
    is_balanced_bipartite_critical_within(g, k, &mut Budget::unlimited())
}

/// Bipartite analogue of `2k`-factor-criticality: removing any `k` vertices
/// from each side of the bipartition `(U, W)` leaves a perfect matching.
/// Needs `1 <= k <= ν/2 - 1`.
pub fn is_balanced_bipartite_critical_within(
    g: &Graph,
    k: usize,
    budget: &mut Budget,
) -> Result<Verdict, PropertyError> {
    let order = g.order();
    if k == 0 || 2 * k + 2 > order {
        return Err(PropertyError::ParamOutOfRange {
            order,
            param: k,
            min: 1,
            max: (order / 2).checked_sub(1).filter(|&m| m >= 1),
        });
    }
    let (u, w) = g.is_bipartite().ok_or(PropertyError::NotBipartite)?;
    if !connected(g) {
        return Ok(Verdict::fails(Reason::Disconnected, None));
    }
    if u.len() != w.len() {
        return Ok(Verdict::fails(Reason::UnbalancedBipartition, None));
    }
    let all = g.vertices().bits();
    for su in Subsets::new(u, k) {
        for sw in Subsets::new(w, k) {
            budget.tick()?;
            let s = su.union(sw);
            if !perfect_matching_exists(g.rows(), all & !s.bits()) {
                return Ok(Verdict::fails(Reason::BadSubset, Some(Witness::VertexSet(s))));
            }
        }
    }
    Ok(Verdict::holds())
}

/// A property that [`is_minimal`] can test edge-minimality for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Extendable(usize),
    HalfExtendable(usize),
    FactorCritical(usize),
}

impl Property {
    pub fn check(self, g: &Graph, budget: &mut Budget) -> Result<Verdict, PropertyError> {
        match self {
            Property::Extendable(k) => is_k_extendable_within(g, k, budget),
            Property::HalfExtendable(k) => is_half_extendable_within(g, k, budget),
            Property::FactorCritical(n) => is_factor_critical_within(g, n, budget),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Extendable(k) => write!(f, "{k}-extendable"),
            Property::HalfExtendable(k) => write!(f, "{k}½-extendable"),
            Property::FactorCritical(n) => write!(f, "{n}-factor-critical"),
        }
    }
}

pub fn is_minimal(g: &Graph, property: Property) -> Result<Verdict, PropertyError> {
    is_minimal_within(g, property, &mut Budget::unlimited())
}

/// `g` has the property and loses it when any single edge is deleted.
/// Fails with the base verdict, or with the first edge whose removal keeps
/// the property.
pub fn is_minimal_within(
    g: &Graph,
    property: Property,
    budget: &mut Budget,
) -> Result<Verdict, PropertyError> {
    let base = property.check(g, budget)?;
    if !base.holds {
        return Ok(base);
    }
    for e in g.edges() {
        let h = g.delete_edge(e).expect("edge comes from the graph");
        if property.check(&h, budget)?.holds {
            return Ok(Verdict::fails(
                Reason::EdgeRemovalSurvives,
                Some(Witness::Edge(e)),
            ));
        }
    }
    Ok(Verdict::holds())
}

/// Largest parameters for which each property holds; `None` when the base
/// case fails or the parity rules the property out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Profile {
    pub max_extendability: Option<usize>,
    pub max_half_extendability: Option<usize>,
    pub max_factor_criticality: Option<usize>,
}

/// Extendability and half-extendability are monotone in `k`, so those scans
/// stop at the first failure. Factor-criticality is tested at every
/// admissible `n` independently.
pub fn profile(g: &Graph) -> Profile {
    let n = g.order();
    let mut out = Profile::default();
    if n % 2 == 0 && n >= 2 {
        for k in 0..=(n - 2) / 2 {
            match is_k_extendable(g, k) {
                Ok(v) if v.holds => out.max_extendability = Some(k),
                _ => break,
            }
        }
    }
    if n % 2 == 1 && n >= 3 {
        for k in 0..=(n - 3) / 2 {
            match is_half_extendable(g, k) {
                Ok(v) if v.holds => out.max_half_extendability = Some(k),
                _ => break,
            }
        }
    }
    if n >= 2 {
        for c in (n % 2..=n - 2).step_by(2) {
            if matches!(is_factor_critical(g, c), Ok(v) if v.holds) {
                out.max_factor_criticality = Some(c);
            }
        }
    }
    out
}

/// Sampled `k`-extendability: `draws` uniformly random `k`-matchings are
/// tested instead of all of them. `holds` here only means no sampled
/// matching failed.
pub fn is_k_extendable_sampled<R: Rng>(
    g: &Graph,
    k: usize,
    draws: u64,
    rng: &mut R,
) -> Result<Verdict, PropertyError> {
    check_extendable_params(g, k)?;
    if !connected(g) {
        return Ok(Verdict::fails(Reason::Disconnected, None));
    }
    let all = g.vertices().bits();
    let mut pm = PerfectMatchings::new(g);
    for _ in 0..draws {
        let Some(m) = sample_matching(g, g.vertices(), k, rng) else {
            return Ok(Verdict::fails(Reason::NoKMatching, None));
        };
        if !pm.exists(all & !m.covered().bits()) {
            return Ok(Verdict::fails(
                Reason::NonExtendableMatching,
                Some(Witness::Matching(m)),
            ));
        }
    }
    Ok(Verdict::holds())
}

/// Sampled `k½`-extendability: each draw picks a uniform vertex `v` and a
/// uniform `k`-matching of `G - v`.
pub fn is_half_extendable_sampled<R: Rng>(
    g: &Graph,
    k: usize,
    draws: u64,
    rng: &mut R,
) -> Result<Verdict, PropertyError> {
    check_half_params(g, k)?;
    if !connected(g) {
        return Ok(Verdict::fails(Reason::Disconnected, None));
    }
    let all = g.vertices().bits();
    let mut pm = PerfectMatchings::new(g);
    for _ in 0..draws {
        let v = rng.random_range(0..g.order());
        let alive = all & !bit(v);
        let Some(m) = sample_matching(g, VertexSet::from_bits(alive), k, rng) else {
            return Ok(Verdict::fails(
                Reason::NoKMatching,
                Some(Witness::VertexMatching {
                    vertex: v,
                    matching: None,
                }),
            ));
        };
        if !pm.exists(alive & !m.covered().bits()) {
            return Ok(Verdict::fails(
                Reason::NonExtendableMatching,
                Some(Witness::VertexMatching {
                    vertex: v,
                    matching: Some(m),
                }),
            ));
        }
    }
    Ok(Verdict::holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use crate::matching::Matching;

    fn g2() -> Graph {
        let side = Graph::union(&Graph::complete(3).unwrap(), &Graph::complete(1).unwrap()).unwrap();
        Graph::join(&side, &side).unwrap()
    }

    fn h2() -> Graph {
        let right = Graph::union(&Graph::complete(5).unwrap(), &Graph::complete(4).unwrap()).unwrap();
        Graph::join(&Graph::edgeless(4).unwrap(), &right).unwrap()
    }

    fn edge(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn extendability_examples() {
        assert!(is_k_extendable(&g2(), 2).unwrap().holds);

        let p4 = Graph::path(4).unwrap();
        let v = is_k_extendable(&p4, 1).unwrap();
        assert_eq!(v.reason, Reason::NonExtendableMatching);
        let mid = Matching::new(&p4, [edge(1, 2)]).unwrap();
        assert_eq!(v.witness, Some(Witness::Matching(mid)));

        assert!(is_k_extendable(&Graph::cycle(6).unwrap(), 1).unwrap().holds);
    }

    #[test]
    fn extendability_errors_and_base_cases() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(matches!(
            is_k_extendable(&c5, 1),
            Err(PropertyError::WrongParity { order: 5, param: 1 })
        ));
        let c6 = Graph::cycle(6).unwrap();
        assert!(matches!(
            is_k_extendable(&c6, 3),
            Err(PropertyError::ParamOutOfRange { max: Some(2), .. })
        ));
        assert!(is_k_extendable(&c6, 0).unwrap().holds);
        let two_k2 = Graph::union(&Graph::complete(2).unwrap(), &Graph::complete(2).unwrap()).unwrap();
        assert_eq!(is_k_extendable(&two_k2, 0).unwrap().reason, Reason::Disconnected);
        // K_{1,3}: connected and even, but without a perfect matching
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert_eq!(
            is_k_extendable(&star, 0).unwrap().reason,
            Reason::NonExtendableMatching
        );
        // a star on 6 vertices has no 2-matching at all
        let star6 = Graph::complete_bipartite(1, 5).unwrap();
        assert_eq!(is_k_extendable(&star6, 2).unwrap().reason, Reason::NoKMatching);
    }

    #[test]
    fn half_extendability_examples() {
        assert!(is_half_extendable(&Graph::cycle(5).unwrap(), 0).unwrap().holds);
        assert!(is_half_extendable(&h2(), 2).unwrap().holds);

        let c7 = Graph::cycle(7).unwrap();
        let v = is_half_extendable(&c7, 1).unwrap();
        assert_eq!(v.reason, Reason::NonExtendableMatching);
        let m = Matching::new(&c7, [edge(2, 3)]).unwrap();
        assert_eq!(
            v.witness,
            Some(Witness::VertexMatching {
                vertex: 0,
                matching: Some(m)
            })
        );
        assert!(matches!(
            is_half_extendable(&Graph::cycle(6).unwrap(), 1),
            Err(PropertyError::WrongParity { .. })
        ));
        assert!(matches!(
            is_half_extendable(&Graph::complete(5).unwrap(), 2),
            Err(PropertyError::ParamOutOfRange { max: Some(1), .. })
        ));
    }

    #[test]
    fn factor_criticality_examples() {
        let v = is_factor_critical(&g2(), 4).unwrap();
        assert_eq!(v.reason, Reason::BadSubset);
        assert_eq!(v.witness, Some(Witness::VertexSet(VertexSet::range(0..4))));
        assert!(is_factor_critical(&Graph::cycle(5).unwrap(), 1).unwrap().holds);
        assert!(is_factor_critical(&Graph::complete(6).unwrap(), 4).unwrap().holds);
        assert!(matches!(
            is_factor_critical(&Graph::complete(6).unwrap(), 3),
            Err(PropertyError::WrongParity { .. })
        ));
        assert!(matches!(
            is_factor_critical(&Graph::complete(6).unwrap(), 6),
            Err(PropertyError::ParamOutOfRange { .. })
        ));
        // zero-criticality is just a perfect matching, connected or not
        let two_k2 = Graph::union(&Graph::complete(2).unwrap(), &Graph::complete(2).unwrap()).unwrap();
        assert!(is_factor_critical(&two_k2, 0).unwrap().holds);
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal(&Graph::cycle(6).unwrap(), Property::Extendable(1)).unwrap().holds);
        assert!(is_minimal(&Graph::cycle(5).unwrap(), Property::FactorCritical(1)).unwrap().holds);
        let v = is_minimal(&Graph::complete(6).unwrap(), Property::Extendable(1)).unwrap();
        assert_eq!(v.reason, Reason::EdgeRemovalSurvives);
        assert_eq!(v.witness, Some(Witness::Edge(edge(0, 1))));
        // base property failing is reported as such
        let v = is_minimal(&Graph::path(4).unwrap(), Property::Extendable(1)).unwrap();
        assert_eq!(v.reason, Reason::NonExtendableMatching);
    }

    #[test]
    fn balanced_bipartite_examples() {
        assert!(is_balanced_bipartite_critical(&Graph::cycle(6).unwrap(), 1).unwrap().holds);
        assert!(is_balanced_bipartite_critical(&Graph::complete_bipartite(3, 3).unwrap(), 2)
            .unwrap()
            .holds);
        let v = is_balanced_bipartite_critical(&Graph::path(4).unwrap(), 1).unwrap();
        assert_eq!(v.reason, Reason::BadSubset);
        assert_eq!(v.witness, Some(Witness::VertexSet([1, 2].into_iter().collect())));
        assert_eq!(
            is_balanced_bipartite_critical(&Graph::cycle(5).unwrap(), 1),
            Err(PropertyError::NotBipartite)
        );
        let unbalanced = Graph::complete_bipartite(2, 4).unwrap();
        assert_eq!(
            is_balanced_bipartite_critical(&unbalanced, 1).unwrap().reason,
            Reason::UnbalancedBipartition
        );
        assert!(matches!(
            is_balanced_bipartite_critical(&Graph::cycle(6).unwrap(), 0),
            Err(PropertyError::ParamOutOfRange { .. })
        ));
    }

    #[test]
    fn profiles() {
        let k8 = profile(&Graph::complete(8).unwrap());
        assert_eq!(
            (k8.max_extendability, k8.max_half_extendability, k8.max_factor_criticality),
            (Some(3), None, Some(6))
        );
        let c5 = profile(&Graph::cycle(5).unwrap());
        assert_eq!(
            (c5.max_extendability, c5.max_half_extendability, c5.max_factor_criticality),
            (None, Some(0), Some(1))
        );
        let g = profile(&g2());
        assert_eq!(
            (g.max_extendability, g.max_half_extendability, g.max_factor_criticality),
            (Some(2), None, Some(2))
        );
        assert_eq!(profile(&Graph::empty(0).unwrap()), Profile::default());
    }

    #[test]
    fn budget_aborts() {
        let k8 = Graph::complete(8).unwrap();
        let mut budget = Budget::new(10);
        assert_eq!(
            is_k_extendable_within(&k8, 2, &mut budget),
            Err(PropertyError::BudgetExceeded { limit: 10 })
        );
        let mut budget = Budget::new(1000);
        assert!(is_factor_critical_within(&k8, 2, &mut budget).unwrap().holds);
        assert_eq!(budget.used(), 28);
    }
}
