//! Multiple zeta symbols and their ℚ-linear combinations.
//!
//! An index `(s1, …, sd)` denotes `ζ(s1, …, sd) = Σ_{m1 > … > md ≥ 1} m1^{-s1} ⋯ md^{-sd}`.
//! Indices may carry arbitrary integer entries as long as the series converges;
//! [`normalize_integer_args`] rewrites those in terms of positive-argument MZVs.
//! Divergent symbols `ζ̄(1, …)` are handled through stuffle regularization with
//! a single formal variable `T = ζ̄(1)`.

mod combination;
mod euler;
mod index;
mod normalize;
mod regularize;
mod stuffle;

pub use combination::{Factor, Monomial, MzvCombination};
pub use euler::{euler_decomposition, euler_sum_formula};
pub use index::MzvIndex;
pub use normalize::normalize_integer_args;
pub use regularize::{canonicalize, expand_regularized};
pub use stuffle::{stuffle, stuffle_product, stuffle_words};
