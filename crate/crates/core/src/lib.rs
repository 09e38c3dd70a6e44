//! Combinatorial commutative algebra for Stanley-Reisner ideals: simplicial
//! complexes and their recognition predicates, monomial ideals, Scarf
//! complexes, irreducible decompositions, and generic Cohen-Macaulay
//! deformations of matroid, shifted and tree complexes.

pub mod bitset;
pub mod cli;
pub mod complex;
pub mod deform;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod json;
pub mod oracle;
pub mod scarf;

pub use bitset::{LabelSet, VertexSet};
pub use complex::{SearchLimits, SimplicialComplex};
pub use deform::{
    auto_deform, matroid_deformation, shifted_deformation, tree_deformation, DeformMethod, DeformationReport,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use ideal::{Monomial, MonomialIdeal};
pub use scarf::{
    cm_test, extended_scarf_complex, irreducible_decomposition, scarf_complex, CmVerdict, IrreducibleComponent,
    ScarfComplex,
};
