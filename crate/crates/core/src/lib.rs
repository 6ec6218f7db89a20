//! Exact linear algebra, Leibniz algebras, their differential graded Lie
//! envelopes, and the Leibniz and Chevalley-Eilenberg (co)homology complexes
//! that compare them.

pub mod corpus;
pub mod dgla;
pub mod exactla;
pub mod freealg;
pub mod homology;
pub mod leibcore;

pub use exactla::{Matrix, Scalar, Subspace, Tensor3};
pub use leibcore::{
    Convention, LeibnizAlgebra, LieAlgebra, LieModule, Representation, Rule, Violation,
};
