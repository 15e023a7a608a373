//! Exact symbolic computation for the homogeneous ideals of Mukai varieties.
//!
//! The crate provides a small computer-algebra kernel (sparse multivariate
//! polynomials over arbitrary-precision rationals, Groebner bases, Pfaffians
//! and polynomial matrices), constructors for the defining ideals of
//! G(2,n), the ten-dimensional spinor variety, LG(3,6) and the adjoint G2
//! variety, and verification pipelines that check, as exact polynomial-ideal
//! identities, that projections of nodal linear sections of these varieties
//! are linear sections of the next variety in the genus sequence. Each
//! pipeline emits a machine-readable certificate.

pub mod geometry;
pub mod groebner;
mod linalg;
pub mod poly;
pub mod polymat;
pub mod theorems;
pub mod varieties;

pub use poly::{parse_poly, Polynomial, Rational, VariableContext};
