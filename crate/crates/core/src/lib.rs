//! Deciders for matching extendability and factor-criticality, the extremal
//! families that show the equivalence bounds are tight, and an exhaustive
//! verifier that checks the surrounding theorems over graph corpora.

pub mod families;
pub mod graph;
pub mod matching;
pub mod properties;
pub mod verifier;

pub use families::{family_g, family_h, tightness_witness, Family, FamilyError, FamilySpec};
pub use graph::graph6::Graph6Error;
pub use graph::{vertex_connectivity, BasicKind, Edge, Graph, GraphError, Reduced, VertexSet};
pub use matching::{
    brute_force_max_matching, enumerate_matchings, extends_to_perfect, has_perfect_matching,
    maximum_matching, Matching, MatchingError,
};
pub use properties::{
    is_balanced_bipartite_critical, is_factor_critical, is_half_extendable, is_k_extendable,
    is_minimal, profile, Budget, Profile, Property, PropertyError, Reason, Verdict, Witness,
};
