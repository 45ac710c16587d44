use alloc::format;

use num_bigint::BigInt;

use super::{MzvCombination, MzvIndex};
use crate::arith::{binomial, Rational};
use crate::{Error, Result};

/// Both sides of Euler's decomposition for `s, t ≥ 2`:
/// `ζ(s)ζ(t) = Σ_{a<s} C(t-1+a, a) ζ(t+a, s-a) + Σ_{b<t} C(s-1+b, b) ζ(s+b, t-b)`.
///
/// The left side is returned as the unexpanded product monomial.
pub fn euler_decomposition(s: i64, t: i64) -> Result<(MzvCombination, MzvCombination)> {
    if s < 2 || t < 2 {
        return Err(Error::Precondition(format!(
            "Euler decomposition needs s, t >= 2 (got {s}, {t})"
        )));
    }
    let lhs = MzvCombination::product([MzvIndex::from([s]), MzvIndex::from([t])]);
    let mut rhs = MzvCombination::zero();
    for a in 0..s {
        let c = binomial((t - 1 + a) as u64, a);
        rhs.add_scaled(&MzvCombination::symbol([t + a, s - a]), &Rational::from_integer(c));
    }
    for b in 0..t {
        let c = binomial((s - 1 + b) as u64, b);
        rhs.add_scaled(&MzvCombination::symbol([s + b, t - b]), &Rational::from_integer(c));
    }
    Ok((lhs, rhs))
}

/// `ζ(s+1) = Σ_{a=1}^{s-1} ζ(1+a, s-a)` for `s ≥ 2`.
pub fn euler_sum_formula(s: i64) -> Result<(MzvCombination, MzvCombination)> {
    if s < 2 {
        return Err(Error::Precondition(format!("sum formula needs s >= 2 (got {s})")));
    }
    let lhs = MzvCombination::symbol([s + 1]);
    let mut rhs = MzvCombination::zero();
    for a in 1..s {
        rhs.add_scaled(&MzvCombination::symbol([1 + a, s - a]), &Rational::from_integer(BigInt::from(1)));
    }
    Ok((lhs, rhs))
}
