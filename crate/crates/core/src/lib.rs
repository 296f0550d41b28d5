//! Exact combinatorics for the decomposition of the homogeneous coordinate
//! ring of a Grassmannian Schubert variety `X(w)` into irreducible modules
//! of a block-diagonal Levi subgroup.

pub mod decompose;
pub mod error;
pub mod grassmann;
pub mod levi;
pub mod linalg;
pub mod lr;
pub mod partition;
pub mod sphericity;
pub mod straighten;
pub mod tableau;

pub use decompose::{
    branching_of_rectangle, character_check, check_monomials, decompose_degree, module_of_head, DecompositionReport,
    IrreducibleLabel,
};
pub use error::{Error, Result};
pub use grassmann::{bruhat_leq, GrassmannWord, HasseDiagram, HasseEdge, SchubertContext};
pub use levi::{str_compare, HeadSequence, LeviContext, StrOrder};
pub use lr::{lr_coefficient, skew_weyl_decomposition, weyl_character, weyl_dimension, Character, WeightVector};
pub use partition::{Partition, SkewShape};
pub use sphericity::{classify, empirical_multiplicity_check, scan, SphericityVerdict, TheoremVerdict};
pub use straighten::{
    chevalley_action, evaluate_plucker, restrict_to_schubert, shuffle, straighten, Direction, IntMatrix,
    PluckerMonomial, StandardExpansion,
};
pub use tableau::{
    block_restriction, count_ssyt, enumerate_ssyt, psi, reconstruct_monomial, shapes_of_head, tableau_of_monomial,
    SkewTableau,
};
