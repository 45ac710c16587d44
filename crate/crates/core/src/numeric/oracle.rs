//! Brute-force truncated sums. Partial sums `S(K)` over the box
//! `max(m_i) ≤ K` are collected for every `K` in one pass and the limit is
//! extrapolated from the window `[N / 2^levels, N]`; the reported bound is the
//! shift in that limit when the window is halved.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::fit::extrapolate_tail;
use super::{Method, NumericResult};
use crate::mt::MtArgs;
use crate::pfrac::{conv_violations, LinearForm, ZETA3_MASKS};
use crate::sl4::WittenArgs;
use crate::{Error, Result};

/// Box size used when the caller has no better choice.
pub const DEFAULT_CUTOFF: usize = 1024;
/// Number of halvings spanned by the fitting window.
pub const DEFAULT_LEVELS: u32 = 3;

const ORDERS: usize = 3;
const LOG_POWERS: usize = 2;
/// Relative resolution of the f64 tail fit.
const FIT_FLOOR: f64 = 1e-9;

fn window(partial: &[f64], lo: usize, hi: usize) -> Vec<(f64, f64)> {
    (lo.max(1)..=hi).map(|k| (k as f64, partial[k])).collect()
}

/// Limit and bound from partial sums indexed by `K` (entry 0 unused).
fn limit(partial: &[f64], levels: u32) -> NumericResult {
    let n = partial.len() - 1;
    let lo = (n >> levels).max(2);
    let fine = extrapolate_tail(&window(partial, lo, n), ORDERS, LOG_POWERS);
    let coarse = extrapolate_tail(&window(partial, (lo / 2).max(1), n / 2), ORDERS, LOG_POWERS);
    let err = libm::fabs(fine - coarse).max(FIT_FLOOR * libm::fabs(fine));
    NumericResult {
        value: fine,
        error_bound: err,
        method: Method::TruncatedSumExtrapolation,
        fixed: None,
    }
}

fn cumulative(buckets: &[f64]) -> Vec<f64> {
    let mut acc = 0.0;
    buckets
        .iter()
        .map(|b| {
            acc += b;
            acc
        })
        .collect()
}

fn power_table(max: usize, e: i64) -> Vec<f64> {
    (0..=max)
        .map(|x| if x == 0 { 0.0 } else { libm::pow(x as f64, -(e as f64)) })
        .collect()
}

/// `Σ_{m ∈ ℕ^d} ∏ form(m)^{-e}` for forms with nonnegative coefficients.
pub fn oracle_lattice_sum(
    forms: &[(LinearForm, i64)],
    d: usize,
    cutoff: usize,
    levels: u32,
) -> Result<NumericResult> {
    if !(1..=3).contains(&d) {
        return Err(Error::Precondition(format!("lattice oracle supports d = 1..3, got {d}")));
    }
    let mut support: BTreeMap<u32, i64> = BTreeMap::new();
    let mut active = Vec::new();
    for (form, e) in forms {
        let c = form.coeffs();
        if c.len() > d || c.iter().any(|&x| x < 0) || form.is_zero() {
            return Err(Error::Precondition(format!("form {form} is not a positive form in {d} variables")));
        }
        if *e == 0 {
            continue;
        }
        let mask = c.iter().enumerate().filter(|(_, &x)| x > 0).fold(0u32, |m, (i, _)| m | 1 << i);
        *support.entry(mask).or_insert(0) += e;
        let mut coeffs = [0usize; 3];
        for (i, &x) in c.iter().enumerate() {
            coeffs[i] = x as usize;
        }
        let max = coeffs.iter().sum::<usize>() * cutoff;
        active.push((coeffs, power_table(max, *e)));
    }
    let violated = conv_violations(d, &support);
    if !violated.is_empty() {
        return Err(Error::Divergent {
            what: String::from("lattice sum"),
            violated: violated.iter().map(|m| format!("subset {m:b}")).collect(),
        });
    }

    let n = cutoff;
    let mut buckets = vec![0.0f64; n + 1];
    let ranges = [n, if d >= 2 { n } else { 1 }, if d >= 3 { n } else { 1 }];
    let mut base = vec![0usize; active.len()];
    for m1 in 1..=ranges[0] {
        for m2 in 1..=ranges[1] {
            let m2v = if d >= 2 { m2 } else { 0 };
            for (b, (c, _)) in base.iter_mut().zip(&active) {
                *b = c[0] * m1 + c[1] * m2v;
            }
            let outer = m1.max(m2v);
            let mut same = 0.0;
            for m3 in 1..=ranges[2] {
                let m3v = if d >= 3 { m3 } else { 0 };
                let mut term = 1.0;
                for (b, (c, table)) in base.iter().zip(&active) {
                    term *= table[b + c[2] * m3v];
                }
                if m3v <= outer {
                    same += term;
                } else {
                    buckets[m3v] += term;
                }
            }
            buckets[outer] += same;
        }
    }
    Ok(limit(&cumulative(&buckets), levels))
}

/// The seven-slot (or embedded six-slot) sum.
pub fn oracle_witten(args: &WittenArgs, cutoff: usize, levels: u32) -> Result<NumericResult> {
    if !args.is_convergent() {
        return Err(args.divergence());
    }
    let forms: Vec<(LinearForm, i64)> = ZETA3_MASKS
        .iter()
        .zip(args.as_zeta3())
        .map(|(&m, e)| (LinearForm::from_mask(3, m), e))
        .collect();
    oracle_lattice_sum(&forms, 3, cutoff, levels)
}

pub fn oracle_mt(args: &MtArgs, cutoff: usize, levels: u32) -> Result<NumericResult> {
    let d = args.depth();
    let mut forms: Vec<(LinearForm, i64)> =
        (0..d).map(|i| (LinearForm::var(d, i), args.parts[i])).collect();
    forms.push((LinearForm::from_mask(d, (1 << d) - 1), args.outer));
    oracle_lattice_sum(&forms, d, cutoff, levels)
}

/// `Σ_{n1>…>nd≥1} ∏ n_i^{-s_i}` for arbitrary integer exponents, truncated at
/// `n1 ≤ K`.
pub fn oracle_mzv_sum(exponents: &[i64], cutoff: usize, levels: u32) -> Result<NumericResult> {
    let index = crate::mzv::MzvIndex::from(exponents);
    if let Some(l) = index.first_divergent_prefix() {
        return Err(Error::Divergent {
            what: format!("{index}"),
            violated: vec![format!("s1+…+s{l} > {l}")],
        });
    }
    let n = cutoff;
    let k = exponents.len();
    let pw = |m: usize, s: i64| libm::pow(m as f64, -(s as f64));
    // inner[j] accumulates the sum over the last k-j variables below the current n
    let mut inner = vec![0.0f64; k + 1];
    inner[k] = 1.0;
    let mut partial = Vec::with_capacity(n + 1);
    partial.push(0.0f64);
    let mut total = 0.0;
    for m in 1..=n {
        // terms with n_j = m for all depths, deepest first uses the old inner
        let contrib: Vec<f64> = (0..k).map(|j| pw(m, exponents[j]) * inner[j + 1]).collect();
        total += contrib[0];
        for j in 1..k {
            inner[j] += contrib[j];
        }
        partial.push(total);
    }
    Ok(limit(&partial, levels))
}

/// `Σ_{m1,m2≥1} m1^{-s} (m1+m2)^{-u} Σ_{n=m2+1}^{m1+m2} n^{-t}`.
pub fn oracle_harmonic_difference(s: i64, u: i64, t: i64, cutoff: usize, levels: u32) -> Result<NumericResult> {
    if s < 1 || u < 0 || t < 1 || s + u + t < 3 {
        return Err(Error::Precondition(format!("harmonic oracle needs a convergent ({s},{u},{t})")));
    }
    let n = cutoff;
    let mut h = vec![0.0f64; 2 * n + 1];
    for i in 1..=2 * n {
        h[i] = h[i - 1] + libm::pow(i as f64, -(t as f64));
    }
    let ps = power_table(n, s);
    let pu = power_table(2 * n, u);
    let mut buckets = vec![0.0f64; n + 1];
    for m1 in 1..=n {
        for m2 in 1..=n {
            let x = m1 + m2;
            buckets[m1.max(m2)] += ps[m1] * pu[x] * (h[x] - h[m2]);
        }
    }
    Ok(limit(&cumulative(&buckets), levels))
}
