//! Exact symbolic computation for torus-link rank polynomials.
//!
//! The crate computes, with exact arithmetic throughout:
//! - lattice-path tuples attached to a pair of marker sequences (v, w),
//!   their statistics, and partial Schroeder paths;
//! - the raising/lowering operator calculus on polynomials tensored with
//!   symmetric functions, and characteristic functions of Schroeder paths;
//! - the recursion computing the generating function L(v, w) and the
//!   recursion computing the graded rank p(v, w), together with the
//!   specialization bridging the two;
//! - the elliptic Hall operators Q_{m,n} built from the Macdonald operators
//!   D_k, and the checker comparing Q_{m,n}^k(1) against L(0^M, 0^N).

pub mod config;
pub mod error;
pub mod hall;
pub mod labeled;
pub mod laurent;
pub mod operators;
pub mod partition;
pub mod paths;
pub mod ratfun;
pub mod recursion;
pub mod symfunc;
pub mod xpoly;

pub use error::{Error, Result};
