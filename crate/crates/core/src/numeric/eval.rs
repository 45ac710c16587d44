//! MZVs via Hölder convolution: the iterated integral over `[0, 1]` is split
//! at `1/2`, and both halves are multiple polylogarithms at `1/2`, which
//! converge geometrically.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive};

use super::{Fixed, Method, NumericResult};
use crate::mzv::{MzvCombination, MzvIndex};
use crate::{Error, Result};

/// Caching evaluator at a fixed working precision.
pub struct Evaluator {
    bits: u32,
    li: BTreeMap<Vec<u32>, (Fixed, f64)>,
}

/// Lowest working precision, about 38 decimal digits.
const MIN_BITS: u32 = 128;

fn bits_for(target: f64) -> u32 {
    let need = if target > 0.0 { -libm::log2(target) } else { 200.0 };
    MIN_BITS.max(need as u32 + 40)
}

/// Letters of the iterated-integral word: `s ↦ 0^{s-1} 1`.
fn word(index: &[i64]) -> Vec<u8> {
    let mut w = Vec::new();
    for &s in index {
        w.extend(core::iter::repeat_n(0u8, s as usize - 1));
        w.push(1);
    }
    w
}

/// Exponents `(r1, …, rk)` of a word ending in `1`.
fn composition(w: &[u8]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut zeros = 0;
    for &a in w {
        if a == 0 {
            zeros += 1;
        } else {
            out.push(zeros + 1);
            zeros = 0;
        }
    }
    debug_assert_eq!(zeros, 0, "word must end in 1");
    out
}

impl Evaluator {
    pub fn new(bits: u32) -> Self {
        Evaluator { bits: bits.max(MIN_BITS), li: BTreeMap::new() }
    }

    pub fn for_target(target: f64) -> Self {
        Self::new(bits_for(target))
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// `Li_r(1/2) = Σ_{n1>…>nk≥1} 2^{-n1} ∏ n_i^{-r_i}` with an error bound.
    fn li_half(&mut self, r: &[u32]) -> (Fixed, f64) {
        if r.is_empty() {
            return (Fixed::one(self.bits), 0.0);
        }
        if let Some(hit) = self.li.get(r) {
            return hit.clone();
        }
        let bits = self.bits;
        let k = r.len();
        let m = bits as usize + 3 * k + 16;
        // innermost sum first; acc[n] holds the inner value at n
        let mut acc: Vec<Fixed> = (1..=m as u64).map(|n| Fixed::inv_pow(n, r[k - 1], bits)).collect();
        for &ri in r[..k - 1].iter().rev() {
            let mut prefix = Fixed::zero(bits);
            let mut next = Vec::with_capacity(m);
            for (i, a) in acc.iter().enumerate() {
                let n = i as u64 + 1;
                next.push(prefix.mul(&Fixed::inv_pow(n, ri, bits)));
                prefix.add_assign(a);
            }
            acc = next;
        }
        let mut total = Fixed::zero(bits);
        for (i, a) in acc.iter().enumerate() {
            total.add_assign(&a.shr(i as u32 + 1));
        }
        let tail = libm::ldexp(2.0, -(m as i32)) * libm::pow(1.0 + libm::log(2.0 * m as f64), k as f64);
        let rounding = libm::ldexp(4.0 * (m * k) as f64, -(bits as i32));
        let out = (total, tail + rounding);
        self.li.insert(r.to_vec(), out.clone());
        out
    }

    /// `ζ(index)` for a canonical index.
    pub fn mzv(&mut self, index: &MzvIndex) -> Result<(Fixed, f64)> {
        if !index.is_canonical() {
            return Err(Error::Precondition(format!("{index} is not canonical")));
        }
        let w = word(index.exponents());
        let mut total = Fixed::zero(self.bits);
        let mut err = 0.0;
        for j in 0..=w.len() {
            let upper: Vec<u8> = w[..j].iter().rev().map(|a| 1 - a).collect();
            let (a, ea) = self.li_half(&composition(&upper));
            let (b, eb) = self.li_half(&composition(&w[j..]));
            total.add_assign(&a.mul(&b));
            // both factors lie in [0, 1]
            err += ea + eb + ea * eb + libm::ldexp(1.0, -(self.bits as i32));
        }
        Ok((total, err))
    }

    pub fn combo(&mut self, combo: &MzvCombination) -> Result<NumericResult> {
        if !combo.is_canonical() {
            return Err(Error::Precondition(format!("combination {combo} is not canonical")));
        }
        let mut total = Fixed::zero(self.bits);
        let mut err = 0.0;
        for (index, c) in combo.canonical_terms() {
            let (v, e) = self.mzv(index)?;
            total.add_assign(&v.scale(c));
            let mag = c.abs().to_f64().unwrap_or(f64::INFINITY);
            err += mag * e + libm::ldexp(1.0, -(self.bits as i32));
        }
        Ok(NumericResult {
            value: total.to_f64(),
            error_bound: err,
            method: Method::AcceleratedSeries,
            fixed: Some(total),
        })
    }
}

fn check(result: NumericResult, target: f64) -> Result<NumericResult> {
    if result.error_bound > target {
        return Err(Error::Precision { requested: target, achieved: result.error_bound });
    }
    Ok(result)
}

/// `ζ(index)` within `target`.
pub fn eval_mzv(index: &MzvIndex, target: f64) -> Result<NumericResult> {
    let mut ev = Evaluator::for_target(target);
    let (v, e) = ev.mzv(index)?;
    check(
        NumericResult { value: v.to_f64(), error_bound: e, method: Method::AcceleratedSeries, fixed: Some(v) },
        target,
    )
}

/// A canonical combination within `target`; the working precision grows with
/// the size of the coefficients.
pub fn eval_combo(combo: &MzvCombination, target: f64) -> Result<NumericResult> {
    let weight: f64 = combo
        .terms()
        .map(|(_, c)| c.abs().to_f64().unwrap_or(f64::INFINITY))
        .sum::<f64>()
        + 1.0;
    let mut ev = Evaluator::for_target(target / weight);
    check(ev.combo(combo)?, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    const PI: f64 = core::f64::consts::PI;

    fn z(e: &[i64]) -> f64 {
        eval_mzv(&MzvIndex::from(e), 1e-30).unwrap().value
    }

    #[test]
    fn known_constants() {
        assert!((z(&[2]) - PI * PI / 6.0).abs() < 1e-15);
        assert!((z(&[3]) - 1.2020569031595942).abs() < 1e-15);
        assert!((z(&[4]) - PI.powi(4) / 90.0).abs() < 1e-15);
        assert!((z(&[2, 1]) - z(&[3])).abs() < 1e-15);
        assert!((z(&[3, 1]) - PI.powi(4) / 360.0).abs() < 1e-15);
        assert!((z(&[2, 1, 1]) - z(&[4])).abs() < 1e-15);
    }

    #[test]
    fn high_precision_digits() {
        // ζ(3) to 30 places
        let r = eval_mzv(&MzvIndex::from([3]), 1e-32).unwrap();
        assert_eq!(r.to_decimal(30), "1.202056903159594285399738161511");
        assert!(r.error_bound < 1e-32);
    }

    #[test]
    fn stuffle_square() {
        // ζ(2)² - ζ(4) = 2ζ(2,2)
        let mut c = MzvCombination::symbol([2, 2]).scaled(&int(2));
        c.add(&MzvCombination::symbol([4]));
        let v = eval_combo(&c, 1e-20).unwrap();
        assert!((v.value - z(&[2]) * z(&[2])).abs() < 1e-14);
    }

    #[test]
    fn empty_combination_is_zero() {
        let v = eval_combo(&MzvCombination::zero(), 1e-12).unwrap();
        assert_eq!(v.value, 0.0);
        assert_eq!(v.to_decimal(3), "0.000");
    }

    #[test]
    fn error_bound_shrinks_with_precision() {
        let idx = MzvIndex::from([2, 1, 3]);
        let mut last = f64::INFINITY;
        for bits in [128, 160, 224, 320] {
            let (_, e) = Evaluator::new(bits).mzv(&idx).unwrap();
            assert!(e <= last);
            last = e;
        }
    }

    #[test]
    fn rejects_non_canonical() {
        assert!(eval_mzv(&MzvIndex::from([1, 2]), 1e-10).is_err());
        let c = MzvCombination::symbol([3, 0]).scaled(&rat(1, 2));
        assert!(eval_combo(&c, 1e-10).is_err());
    }
}
