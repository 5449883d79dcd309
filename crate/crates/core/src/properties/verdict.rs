use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, VertexSet};
use crate::matching::Matching;

/// Why a decider answered the way it did.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    Ok,
    Disconnected,
    WrongParity,
    ParamOutOfRange,
    NoKMatching,
    NonExtendableMatching,
    BadSubset,
    NotBipartite,
    UnbalancedBipartition,
    EdgeRemovalSurvives,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::Ok => "ok",
            Reason::Disconnected => "disconnected",
            Reason::WrongParity => "wrong-parity",
            Reason::ParamOutOfRange => "param-out-of-range",
            Reason::NoKMatching => "no-k-matching",
            Reason::NonExtendableMatching => "non-extendable-matching",
            Reason::BadSubset => "bad-subset",
            Reason::NotBipartite => "not-bipartite",
            Reason::UnbalancedBipartition => "unbalanced-bipartition",
            Reason::EdgeRemovalSurvives => "edge-removal-survives",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// The concrete object certifying a failed property.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    Matching(Matching),
    VertexSet(VertexSet),
    Edge(Edge),
    /// A deleted vertex, with the matching of `G - v` that does not extend,
    /// or `None` when `G - v` has no matching of the required size.
    VertexMatching {
        vertex: usize,
        matching: Option<Matching>,
    },
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Matching(_) => "matching",
            Witness::VertexSet(_) => "vertex-set",
            Witness::Edge(_) => "edge",
            Witness::VertexMatching { .. } => "vertex-matching",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Matching(m) => write!(f, "matching {m}"),
            Witness::VertexSet(s) => write!(f, "vertex set {s}"),
            Witness::Edge(e) => write!(f, "edge {e}"),
            Witness::VertexMatching {
                vertex,
                matching: Some(m),
            } => write!(f, "vertex {vertex}, matching {m}"),
            Witness::VertexMatching {
                vertex,
                matching: None,
            } => write!(f, "vertex {vertex}, no matching of the required size"),
        }
    }
}

/// Outcome of a decider. `holds` implies reason `Ok` and no witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub reason: Reason,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds() -> Verdict {
        Verdict {
            holds: true,
            reason: Reason::Ok,
            witness: None,
        }
    }

    pub fn fails(reason: Reason, witness: Option<Witness>) -> Verdict {
        debug_assert_ne!(reason, Reason::Ok);
        Verdict {
            holds: false,
            reason,
            witness,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            return f.write_str("holds");
        }
        write!(f, "fails ({})", self.reason)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

/// An ill-posed question, as opposed to a property that fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropertyError {
    #[error("parameter {param} has the wrong parity for a graph of order {order}")]
    WrongParity { order: usize, param: usize },
    #[error("parameter {param} is outside the admissible range for order {order}: {}", range_text(.min, .max))]
    ParamOutOfRange {
        order: usize,
        param: usize,
        min: usize,
        /// `None` when no value is admissible for this order.
        max: Option<usize>,
    },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("enumeration budget of {limit} steps exhausted")]
    BudgetExceeded { limit: u64 },
}

impl PropertyError {
    /// The verdict reason code this error corresponds to, if any.
    pub fn reason(&self) -> Option<Reason> {
        match self {
            PropertyError::WrongParity { .. } => Some(Reason::WrongParity),
            PropertyError::ParamOutOfRange { .. } => Some(Reason::ParamOutOfRange),
            PropertyError::NotBipartite => Some(Reason::NotBipartite),
            PropertyError::BudgetExceeded { .. } => None,
        }
    }
}

fn range_text(min: &usize, max: &Option<usize>) -> String {
    match max {
        Some(max) => format!("{min}..={max}"),
        None => "no admissible value".to_string(),
    }
}

/// Caps the number of matchings or vertex subsets a decider may examine.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget {
            limit: None,
            used: 0,
        }
    }

    pub fn new(limit: u64) -> Budget {
        Budget {
            limit: Some(limit),
            used: 0,
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), PropertyError> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(PropertyError::BudgetExceeded { limit }),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
