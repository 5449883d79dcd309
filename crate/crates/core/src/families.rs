//! The two extremal families showing that the extendability /
//! factor-criticality equivalence thresholds cannot be lowered.
//!
//! `G^(k) = (K_{2k-1} ∪ K_1) ∨ (K_{2k-1} ∪ K_1)` has order `4k`, is
//! `k`-extendable and not `2k`-factor-critical.
//!
//! `H^(k) = I_{k+2} ∨ (K_{k+3} ∪ K_{2k})` has order `4k + 5`, is
//! `k½`-extendable and not `(2k+1)`-factor-critical.
//!
//! Vertex layouts are fixed:
//!
//! | graph    | part        | labels            |
//! |----------|-------------|-------------------|
//! | `G^(k)`  | clique 1    | `0 ..= 2k-2`      |
//! |          | singleton 1 | `2k-1`            |
//! |          | clique 2    | `2k ..= 4k-2`     |
//! |          | singleton 2 | `4k-1`            |
//! | `H^(k)`  | `I_{k+2}`   | `0 ..= k+1`       |
//! |          | `K_{k+3}`   | `k+2 ..= 2k+4`    |
//! |          | `K_{2k}`    | `2k+5 ..= 4k+4`   |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    G,
    H,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::G => "G",
            Family::H => "H",
        })
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Family, FamilyError> {
        match s {
            "G" | "g" => Ok(Family::G),
            "H" | "h" => Ok(Family::H),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family {family} needs {min} <= k <= {max}, got k = {k}")]
    ParamOutOfRange {
        family: Family,
        k: usize,
        min: usize,
        max: usize,
    },
    #[error("unknown family {0:?}, expected G or H")]
    UnknownFamily(String),
}

/// A family member, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    family: Family,
    k: usize,
}

pub const MIN_K: usize = 2;

impl Family {
    /// Largest `k` whose graph fits in [`MAX_ORDER`] vertices.
    pub const fn max_k(self) -> usize {
        match self {
            Family::G => MAX_ORDER / 4,
            Family::H => (MAX_ORDER - 5) / 4,
        }
    }

    pub const fn order(self, k: usize) -> usize {
        match self {
            Family::G => 4 * k,
            Family::H => 4 * k + 5,
        }
    }
}

impl FamilySpec {
    pub fn new(family: Family, k: usize) -> Result<FamilySpec, FamilyError> {
        if k < MIN_K || k > family.max_k() {
            return Err(FamilyError::ParamOutOfRange {
                family,
                k,
                min: MIN_K,
                max: family.max_k(),
            });
        }
        Ok(FamilySpec { family, k })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn order(self) -> usize {
        self.family.order(self.k)
    }

    pub fn graph(self) -> Graph {
        let built = match self.family {
            Family::G => {
                let side = Graph::union(
                    &Graph::complete(2 * self.k - 1).expect("fits"),
                    &Graph::complete(1).expect("fits"),
                )
                .expect("fits");
                Graph::join(&side, &side)
            }
            Family::H => {
                let right = Graph::union(
                    &Graph::complete(self.k + 3).expect("fits"),
                    &Graph::complete(2 * self.k).expect("fits"),
                )
                .expect("fits");
                Graph::join(&Graph::edgeless(self.k + 2).expect("fits"), &right)
            }
        };
        built.expect("validated k keeps the order within capacity")
    }

    /// The vertex set whose removal leaves no perfect matching.
    ///
    /// For `G^(k)`: all of the first side, `{0, ..., 2k-1}`, leaving
    /// `K_{2k-1} ∪ K_1`. For `H^(k)`: the whole independent part, the first
    /// `k-2` vertices of `K_{k+3}` and the first vertex of `K_{2k}`, leaving
    /// `K_5 ∪ K_{2k-1}`, two odd cliques.
    pub fn tightness_witness(self) -> VertexSet {
        let k = self.k;
        match self.family {
            Family::G => VertexSet::range(0..2 * k),
            Family::H => VertexSet::range(0..k + 2)
                .union(VertexSet::range(k + 2..2 * k))
                .with(2 * k + 5),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^({})", self.family, self.k)
    }
}

pub fn family_g(k: usize) -> Result<Graph, FamilyError> {
    Ok(FamilySpec::new(Family::G, k)?.graph())
}

pub fn family_h(k: usize) -> Result<Graph, FamilyError> {
    Ok(FamilySpec::new(Family::H, k)?.graph())
}

pub fn tightness_witness(spec: FamilySpec) -> VertexSet {
    spec.tightness_witness()
}
