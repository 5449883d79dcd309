use rand::seq::index;
use rand::Rng;

use crate::graph::{Edge, Graph, VertexSet};

use super::Matching;

/// Attempts per draw before concluding that no `k`-matching is reachable.
const MAX_ATTEMPTS: usize = 100_000;

/// Uniform sampling of `k`-matchings by rejection: a uniformly random
/// `k`-subset of edges, conditioned on being pairwise disjoint, is a
/// uniformly random `k`-matching.
#[derive(Debug, Clone)]
pub struct MatchingSampler {
    edges: Vec<Edge>,
    k: usize,
    feasible: bool,
}

impl MatchingSampler {
    pub fn new(g: &Graph, alive: VertexSet, k: usize) -> Self {
        let alive = alive.intersection(g.vertices());
        let edges: Vec<Edge> = g
            .edges()
            .into_iter()
            .filter(|e| e.vertices().is_subset(alive))
            .collect();
        let feasible = k <= edges.len() && 2 * k <= alive.len();
        MatchingSampler { edges, k, feasible }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<Matching> {
        if !self.feasible {
            return None;
        }
        'attempt: for _ in 0..MAX_ATTEMPTS {
            let mut picked = Vec::with_capacity(self.k);
            let mut covered = VertexSet::EMPTY;
            for i in index::sample(rng, self.edges.len(), self.k) {
                let e = self.edges[i];
                if !covered.is_disjoint(e.vertices()) {
                    continue 'attempt;
                }
                covered = covered.union(e.vertices());
                picked.push(e);
            }
            picked.sort_unstable();
            return Some(Matching::from_parts(picked, covered));
        }
        None
    }
}

/// One uniformly random `k`-matching of the subgraph induced by `alive`.
pub fn sample_matching<R: Rng + ?Sized>(
    g: &Graph,
    alive: VertexSet,
    k: usize,
    rng: &mut R,
) -> Option<Matching> {
    MatchingSampler::new(g, alive, k).sample(rng)
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::matching::enumerate_matchings;

    #[test]
    fn samples_are_matchings_and_roughly_uniform() {
        let g = Graph::complete(6).unwrap();
        let total = enumerate_matchings(&g, 2).count();
        assert_eq!(total, 45);
        let sampler = MatchingSampler::new(&g, g.vertices(), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut counts: HashMap<Matching, usize> = HashMap::new();
        let draws = 45_000;
        for _ in 0..draws {
            let m = sampler.sample(&mut rng).unwrap();
            assert_eq!(Matching::new(&g, m.edges().iter().copied()).unwrap(), m);
            *counts.entry(m).or_default() += 1;
        }
        assert_eq!(counts.len(), total);
        // expected 1000 each; 5 sigma is about 160
        assert!(counts.values().all(|&c| (840..=1160).contains(&c)));
    }

    #[test]
    fn infeasible_requests() {
        let star = Graph::complete_bipartite(1, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(sample_matching(&star, star.vertices(), 2, &mut rng).is_none());
        assert!(sample_matching(&star, star.vertices(), 9, &mut rng).is_none());
        assert_eq!(sample_matching(&star, star.vertices(), 0, &mut rng), Some(Matching::empty()));
    }
}
