//! Polynomials in `Z[x]`, vectors in `Z[x]^n` and matrices over `Z[x]`.

mod gcd;
mod int_poly;
mod reduce;
mod vector;

pub use gcd::{content_primpart, poly_gcd};
pub use int_poly::IntPoly;
pub use reduce::{
    ext_gcd, inter_reduce, is_reduced_by, is_reduced_by_basis, lcm_svector, reduce_by_basis,
    reduce_term_by, svector,
};
pub use vector::{Monomial, PolyMatrix, PolyVec, Term};
