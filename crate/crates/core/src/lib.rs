//! Exact computations behind the McKay correspondence for finite subgroups of
//! `SL₂(ℂ)` and `SL₃(ℂ)`.
//!
//! Everything here is exact: integers and rationals are arbitrary precision,
//! group elements live over cyclotomic fields, and every series or
//! determinant is an integer polynomial or a quotient of two. The crate is
//! `no_std` and only needs an allocator.
//!
//! Layout:
//!
//! * [`arith`]: rationals, cyclotomic numbers, integer polynomials,
//!   rational functions, truncated power series and polynomial determinants.
//! * [`groups`]: closure of a generator set, conjugacy classes and character
//!   tables computed with Dixon's method.
//! * [`mckay`]: the McKay matrices `B`, `B*`, the matrices `M(t)`, `M₀(t)`,
//!   Molien series and the Clebsch–Gordan recursions.
//! * [`coxeter`]: the graphs `T⁻`, `T`, `T⁺` and ADE diagrams, their Coxeter
//!   elements and characteristic polynomials.
//! * [`catalog`]: weight systems, expected determinant factorizations and the
//!   catalog entry model.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod catalog;
pub mod coxeter;
mod error;
pub mod groups;
pub mod mckay;

pub use error::{Error, Result};
