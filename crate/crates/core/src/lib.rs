//! Exact reduction of Witten multiple zeta values attached to sl(4).
//!
//! Every convergent value `ζ_sl4(s1, …, s6)` (and the generalized depth-three
//! sum `ζ_3(s1, …, s7)`) at nonnegative integers is rewritten as a finite
//! ℚ-linear combination of Euler–Zagier multiple zeta values. The crate is
//! `no_std` and only needs an allocator.
//!
//! * [`arith`]: exact rationals, binomials, Bernoulli and power-sum polynomials.
//! * [`mzv`]: MZV symbols, linear combinations, stuffle products,
//!   regularization and normalization of integer arguments.
//! * [`pfrac`]: the partial-fraction expansion over products of linear forms
//!   and the convergence criteria.
//! * [`mt`]: Mordell–Tornheim sums via laminar merging and lattice counting.
//! * [`sl4`]: the step machine reducing `ζ_sl4` and `ζ_3`.
//! * [`numeric`]: fixed-point evaluation of MZVs and brute-force lattice oracles.
#![no_std]

extern crate alloc;

pub mod arith;
mod error;
pub mod mt;
pub mod mzv;
pub mod numeric;
pub mod pfrac;
pub mod sl4;

pub use arith::Rational;
pub use error::{Error, Result};
pub use mzv::{MzvCombination, MzvIndex};
