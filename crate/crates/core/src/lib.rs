//! Exact graded commutative algebra for the regularity of projective curves.
//!
//! The crate computes reduced Gröbner bases, ideal operations, Hilbert series,
//! minimal free resolutions and Betti tables over a prime field or the
//! rationals, and builds on them to construct curve configurations in small
//! projective spaces and check regularity bounds on them.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod curves;
pub mod error;
pub mod field;
pub mod geometry;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals};
pub use monomial::{mono_cmp, Monomial, MonomialOrder};
pub use ideal::Ideal;
pub use poly::{Polynomial, Ring};
