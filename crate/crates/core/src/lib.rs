//! Generalized Hermite normal forms of matrices over `Z[x]`.
//!
//! The columns of a matrix `F ∈ Z[x]^{n×m}` generate a submodule of `Z[x]^n`.
//! Its generalized Hermite normal form (GHNF) is the reduced Gröbner basis of
//! that module under the position-over-degree order, written as a staircase
//! matrix. This crate computes it by repeatedly taking integer Hermite normal
//! forms of coefficient matrices with a degree-capped prolongation, and ships
//! everything needed to check the answer independently:
//!
//! * [`poly`]: integer polynomials, vectors and matrices over `Z[x]`, the term
//!   order, reduction and S-vectors.
//! * [`zhnf`]: column Hermite normal form of big-integer matrices with the
//!   unimodular transform and syzygy columns.
//! * [`ghnf`]: coefficient matrices, the polynomial HNF operator, prolongation
//!   and the iteration itself, plus syzygies for polynomial vectors.
//! * [`verify`]: the GHNF predicate, the Buchberger criterion and membership.
//! * [`oracle`]: two references, pair completion and a degree-window lattice
//!   computation.
//! * [`bounds`]: closed-form degree, height and loop bounds.
//! * [`instances`]: seeded random inputs.

pub mod bounds;
mod error;
pub mod ghnf;
pub mod instances;
pub mod oracle;
pub mod poly;
pub mod verify;
pub mod zhnf;

pub use error::{Error, Result};
pub use ghnf::{ghnf1, ghnfn, phnf, GhnfOptions, GhnfRun, Strategy};
pub use poly::{IntPoly, Monomial, PolyMatrix, PolyVec, Term};
pub use zhnf::{hnf, hnf_with_transform, HnfResult, IntMatrix};
