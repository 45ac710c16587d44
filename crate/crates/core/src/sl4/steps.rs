//! The splitting steps. Each one applies the partial-fraction identity to a
//! few of the seven forms and reads the result back as new argument tuples.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::args::{sl4_to_zeta3, zeta3_to_sl4, Tuple};
use crate::arith::Rational;
use crate::pfrac::{conv_check_zeta3, pf_expand, LinearForm, ZETA3_MASKS};
use crate::{Error, Result};

pub type Terms7 = Vec<(Rational, [i64; 7])>;
pub type Terms6 = Vec<(Rational, [i64; 6])>;

fn slot_form(slot: usize) -> LinearForm {
    LinearForm::from_mask(3, ZETA3_MASKS[slot])
}

fn slot_of(form: &LinearForm) -> Option<usize> {
    let mask = form.as_mask()?;
    ZETA3_MASKS.iter().position(|&m| m == mask)
}

fn signed_pow(sign: i64, content: i64, e: i64) -> Rational {
    // (sign · content)^{-e}
    let base = Rational::from_integer(BigInt::from(sign * content));
    base.pow(-(e as i32))
}

/// Applies the partial-fraction identity to the forms `sign · form(slot)` of
/// the given slots, each carrying its current exponent, and returns the
/// resulting seven-slot tuples. Every output is checked for convergence.
pub fn expand_slots(s: &[i64; 7], picks: &[(usize, i64)]) -> Result<Terms7> {
    let mut factors = Vec::with_capacity(picks.len());
    let mut base = *s;
    let mut coeff = Rational::one();
    for &(slot, sign) in picks {
        let form = if sign < 0 { slot_form(slot).neg() } else { slot_form(slot) };
        factors.push((form, s[slot]));
        // form(slot)^{-e} = (sign · x)^{-e}
        coeff *= signed_pow(sign, 1, s[slot]);
        base[slot] = 0;
    }
    let mut out = Vec::new();
    for term in pf_expand(&factors)? {
        let mut t = base;
        let mut c = &coeff * &term.coefficient;
        for (form, e) in &term.factors {
            let (sign, content, prim) = form.normalized();
            let slot = slot_of(&prim).ok_or_else(|| {
                Error::Precondition(format!("form {prim} is not one of the seven"))
            })?;
            c *= signed_pow(sign, content, *e);
            t[slot] += e;
        }
        if !conv_check_zeta3(&t) {
            return Err(Error::Precondition(format!(
                "expansion of {} produced divergent term {}",
                Tuple(s),
                Tuple(&t)
            )));
        }
        out.push((c, t));
    }
    Ok(out)
}

fn expand6(s: &[i64; 6], picks: &[(usize, i64)]) -> Result<Terms6> {
    let picks7: Vec<(usize, i64)> = picks
        .iter()
        .map(|&(slot, sign)| (if slot == 5 { 6 } else { slot }, sign))
        .collect();
    expand_slots(&sl4_to_zeta3(s), &picks7)?
        .into_iter()
        .map(|(c, t)| {
            zeta3_to_sl4(&t)
                .map(|t6| (c, t6))
                .ok_or_else(|| Error::Precondition(format!("term {} left the sl4 family", Tuple(&t))))
        })
        .collect()
}

fn require(cond: bool, what: &str, s: &[i64]) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} does not apply to {}", Tuple(s))))
    }
}

/// Uses `2(m1+m2+m3) = (m1+m2) + (m2+m3) + (m1+m3)` to make one of the three
/// pair forms vanish. Tuples that already have a zero pair slot pass through.
pub fn step_i(s: &[i64; 7]) -> Result<Terms7> {
    if !conv_check_zeta3(s) {
        return Err(Error::Divergent {
            what: format!("ζ_3{}", Tuple(s)),
            violated: crate::pfrac::zeta3_violations(s),
        });
    }
    if s[3] == 0 || s[4] == 0 || s[5] == 0 {
        return Ok(vec![(Rational::one(), *s)]);
    }
    expand_slots(s, &[(3, 1), (4, 1), (5, 1)])
}

/// Permutes the variables so that the vanishing pair slot becomes `m1+m3`,
/// giving a six-slot tuple. Slot `m1+m3` is preferred, then `m1+m2`, then
/// `m2+m3`.
pub fn zeta3_symmetrize(s: &[i64; 7]) -> Result<[i64; 6]> {
    let [s1, s2, s3, s4, s5, s6, s7] = *s;
    if s6 == 0 {
        Ok([s1, s2, s3, s4, s5, s7])
    } else if s4 == 0 {
        // m2 <-> m3
        Ok([s1, s3, s2, s6, s5, s7])
    } else if s5 == 0 {
        // m1 <-> m2
        Ok([s2, s1, s3, s4, s6, s7])
    } else {
        Err(Error::Precondition(format!("{} has no vanishing pair slot", Tuple(s))))
    }
}

/// `x1 = m1`, `x2 = m2+m3`: leaves `s1 = 0` or `s5 = 0`.
pub fn step_ii(s: &[i64; 6]) -> Result<Terms6> {
    require(s[0] >= 1 && s[4] >= 1, "step (ii)", s)?;
    expand6(s, &[(0, 1), (4, 1)])
}

/// With `s5 = 0`: `x1 = m1`, `x2 = m2`, merging into `m1+m2`.
pub fn step_ii1_first(s: &[i64; 6]) -> Result<Terms6> {
    require(s[4] == 0 && s[0] >= 1 && s[1] >= 1, "step (ii.1)", s)?;
    expand6(s, &[(0, 1), (1, 1)])
}

/// With `s1 = s5 = 0`: `x1 = m1+m2`, `x2 = m3`, merging into the total.
pub fn step_ii1_second(s: &[i64; 6]) -> Result<Terms6> {
    require(s[4] == 0 && s[0] == 0 && s[2] >= 1 && s[3] >= 1, "step (ii.1)", s)?;
    expand6(s, &[(3, 1), (2, 1)])
}

/// With `s1 = 0`: `x1 = m1+m2`, `x2 = m3`; leaves `s4 = 0` or `s3 = 0`.
pub fn step_ii2(s: &[i64; 6]) -> Result<Terms6> {
    require(s[0] == 0 && s[4] >= 1 && s[2] >= 1 && s[3] >= 1, "step (ii.2)", s)?;
    expand6(s, &[(3, 1), (2, 1)])
}

/// With `s1 = s4 = 0`: `x1 = m2`, `x2 = m3`, merging into `m2+m3`.
pub fn step_ii21(s: &[i64; 6]) -> Result<Terms6> {
    require(s[0] == 0 && s[3] == 0 && s[1] >= 1 && s[2] >= 1, "step (ii.2.1)", s)?;
    expand6(s, &[(1, 1), (2, 1)])
}

/// With `s1 = s3 = 0`: `x1 = -m2`, `x2 = m1+m2`, `x3 = m2+m3`, summing to the
/// total.
pub fn step_ii22(s: &[i64; 6]) -> Result<Terms6> {
    require(
        s[0] == 0 && s[2] == 0 && s[1] >= 1 && s[3] >= 1 && s[4] >= 1,
        "step (ii.2.2)",
        s,
    )?;
    expand6(s, &[(1, -1), (3, 1), (4, 1)])
}

/// `(-1)^e`.
pub(crate) fn parity(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub(crate) fn binom(n: i64, k: i64) -> Rational {
    debug_assert!(n >= 0);
    Rational::from_integer(crate::arith::binomial(n as u64, k))
}
