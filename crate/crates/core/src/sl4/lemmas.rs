//! Closed forms for the boundary sums met in the last branch of the
//! reduction, where the signed expansion produces terms that only converge
//! in combination.

use alloc::format;

use super::steps::binom;
use crate::mt::{reduce_mt, zeta, MtArgs};
use crate::mzv::{canonicalize, euler_decomposition, expand_regularized, MzvCombination, MzvIndex};
use crate::{Error, Result};

fn mt(parts: &[i64], outer: i64) -> Result<MzvCombination> {
    reduce_mt(&MtArgs::new(parts, outer))
}

/// `Σ m1^{-s1} (m1+m2)^{-s4} (m2+m3)^{-t}`, i.e. `ζ_sl4(s1,0,0,s4,t,0)`:
///
/// `ζ(t)·ζ(s4,s1) - ζ_MT(s1,t;s4) - ζ_MT(s1,t,0;s4)`.
pub fn case_a(s1: i64, s4: i64, t: i64) -> Result<MzvCombination> {
    if s1 < 1 || s4 < 2 || t < 2 {
        return Err(Error::Precondition(format!(
            "case A needs s1 >= 1, s4 >= 2, t >= 2 (got {s1}, {s4}, {t})"
        )));
    }
    let mut out = canonicalize(&MzvCombination::product([
        MzvIndex::from([t]),
        MzvIndex::from([s4, s1]),
    ]))?;
    out.sub(&mt(&[s1, t], s4)?);
    out.sub(&mt(&[s1, t, 0], s4)?);
    Ok(out)
}

/// The convergent limit of the two boundary terms, for `s4 ≥ 2`:
///
/// `ζ_MT(s,1;s4) - ζ(s4,s,1) - ζ(s4,s+1) - ζ(s4,1,s) - ζ(s4+1,s) + ζ_MT(s,1,0;s4)`.
///
/// Its value is `-Σ m1^{-s} (m1+m2)^{-s4} Σ_{n=m2+1}^{m1+m2} 1/n`.
pub fn case_b_limit(s: i64, s4: i64) -> Result<MzvCombination> {
    if s < 1 || s4 < 2 {
        return Err(Error::Precondition(format!(
            "case B needs s >= 1, s4 >= 2 (got {s}, {s4})"
        )));
    }
    let mut out = mt(&[s, 1], s4)?;
    for idx in [[s4, s, 1].as_slice(), &[s4, s + 1], &[s4, 1, s], &[s4 + 1, s]] {
        out.sub(&zeta(idx)?);
    }
    out.add(&mt(&[s, 1, 0], s4)?);
    Ok(out)
}

/// The combination built from regularized symbols whose value is
/// `Σ_{m1,m2} Σ_{n=m2+1}^{m1+m2} 1 / (m1^s (m1+m2) n^t)`, before expansion.
pub fn tech_lemma_regularized(s: i64, t: i64) -> Result<MzvCombination> {
    if s < 1 || t < 1 || s + t < 3 {
        return Err(Error::Precondition(format!(
            "the lemma needs s, t >= 1 and s + t >= 3 (got {s}, {t})"
        )));
    }
    let mut c = MzvCombination::regularized([1, t, s]);
    c.add(&MzvCombination::regularized([1, s + t]));
    c.add(&MzvCombination::regularized([1, s, t]));
    c.add(&zeta(&[t + 1, s])?);
    c.sub(&mt(&[s, t], 1)?);
    for a in 0..s {
        c.add_scaled(&MzvCombination::regularized([1, t + a, s - a]), &-binom(t + a - 1, a));
    }
    for b in 0..t {
        c.add_scaled(&MzvCombination::regularized([1, s + b, t - b]), &-binom(s + b - 1, b));
    }
    Ok(c)
}

/// The zero-valued combination from Euler's identities that cancels the `T`
/// coefficient of [`tech_lemma_regularized`].
fn euler_residual(s: i64, t: i64) -> Result<MzvCombination> {
    if s >= 2 && t >= 2 {
        let (lhs, rhs) = euler_decomposition(s, t)?;
        let mut z = rhs;
        z.sub(&canonicalize(&lhs)?);
        return Ok(z);
    }
    let u = s.max(t);
    let mut z = MzvCombination::zero();
    for a in 1..u {
        z.add(&MzvCombination::symbol([1 + a, u - a]));
    }
    z.sub(&MzvCombination::symbol([u + 1]));
    Ok(z)
}

/// The `T` coefficient of the expanded lemma plus the Euler residual. The
/// lemma is sound exactly when this is the zero combination.
pub fn tech_lemma_t_residue(s: i64, t: i64) -> Result<MzvCombination> {
    let expanded = expand_regularized(&tech_lemma_regularized(s, t)?)?;
    if expanded.max_t_power() > 1 {
        return Err(Error::DivergentResidue(format!(
            "T^{} survives in the lemma at ({s}, {t})",
            expanded.max_t_power()
        )));
    }
    let mut x = expanded.t_coefficient(1);
    x.add(&euler_residual(s, t)?);
    Ok(x)
}

/// `Σ_{m1,m2} Σ_{n=m2+1}^{m1+m2} 1 / (m1^s (m1+m2) n^t)` as canonical MZVs of
/// weight `s+t+1`.
pub fn tech_lemma(s: i64, t: i64) -> Result<MzvCombination> {
    let residue = tech_lemma_t_residue(s, t)?;
    if !residue.is_zero() {
        return Err(Error::DivergentResidue(format!(
            "T coefficient {residue} does not cancel at ({s}, {t})"
        )));
    }
    let expanded = expand_regularized(&tech_lemma_regularized(s, t)?)?;
    canonicalize(&expanded.t_coefficient(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guards() {
        assert!(case_a(1, 2, 1).is_err());
        assert!(case_b_limit(1, 1).is_err());
        assert!(tech_lemma(1, 1).is_err());
    }

    #[test]
    fn t_coefficient_cancels() {
        for s in 1..=6 {
            for t in 1..=6 {
                if s + t < 3 {
                    continue;
                }
                assert!(tech_lemma_t_residue(s, t).unwrap().is_zero(), "({s}, {t})");
                let out = tech_lemma(s, t).unwrap();
                for (idx, _) in out.canonical_terms() {
                    assert_eq!(idx.weight(), s + t + 1);
                    assert!(idx.depth() <= 3);
                }
            }
        }
    }

    #[test]
    fn pure_weight_outputs() {
        for (s1, s4, t) in [(1, 2, 2), (2, 3, 2), (3, 2, 4)] {
            for (idx, _) in case_a(s1, s4, t).unwrap().canonical_terms() {
                assert_eq!(idx.weight(), s1 + s4 + t);
            }
        }
        for (s, s4) in [(1, 2), (2, 2), (3, 4)] {
            for (idx, _) in case_b_limit(s, s4).unwrap().canonical_terms() {
                assert_eq!(idx.weight(), s + s4 + 1);
            }
        }
    }
}
