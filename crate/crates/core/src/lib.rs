//! Exact-arithmetic kernel for the algebraic degree δ(m, n, r) of semidefinite
//! programming.
//!
//! The crate is `no_std` (with `alloc`). Everything is computed over
//! arbitrary-precision rationals; there is no floating point anywhere.
//!
//! - [`polynomial`]: sparse multivariate polynomials, capped multiplication,
//!   `h_d` / `e_k` over multisets of linear forms.
//! - [`partitions`]: partitions and the index-set correspondence `λ(I)`.
//! - [`schur`]: Schur polynomials, Pieri rule, Schur decomposition and the
//!   Pascal-minor coefficients `ψ_I`.
//! - [`degree`]: three independent algorithms for δ plus a cross-checking
//!   dispatcher.
//! - [`oracle`]: brute-force residue sums used as ground truth in tests.
//!
//! The `std` feature (on by default) only adds wall-clock timing to
//! [`degree::DegreeResult`].
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod degree;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod polynomial;
pub mod schur;

pub use error::{Error, Result};

/// Exact rational scalar used for every coefficient and sample point.
pub type Rational = num_rational::BigRational;
pub use num_bigint::BigInt;
