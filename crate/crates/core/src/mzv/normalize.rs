use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Factor, Monomial, MzvCombination, MzvIndex};
use crate::arith::{faulhaber, RatPolynomial, Rational};
use crate::{Error, Result};

/// Rewrites a convergent MZV with arbitrary integer arguments as a combination
/// of canonical MZVs of no larger weight and depth.
///
/// The leftmost nonpositive entry `s_j = -t` is summed out: the range
/// `m_{j+1} < m_j < m_{j-1}` contributes `P_t(m_{j-1} - 1) - P_t(m_{j+1})`, and
/// each monomial of those power-sum polynomials shifts a neighbouring exponent.
pub fn normalize_integer_args(index: &MzvIndex) -> Result<MzvCombination> {
    if let Some(l) = index.first_divergent_prefix() {
        return Err(Error::Divergent {
            what: format!("{index}"),
            violated: alloc::vec![format!("s1+…+s{l} > {l}")],
        });
    }
    let mut acc = BTreeMap::new();
    let mut sums = Vec::new();
    eliminate(index.exponents(), &Rational::one(), &mut sums, &mut acc);
    Ok(acc
        .into_iter()
        .map(|(e, c)| (Monomial::single(Factor::plain(MzvIndex::new(e))), c))
        .collect())
}

/// Cached pairs `(P_t(x), P_t(x - 1))`.
type PowerSums = Vec<(RatPolynomial, RatPolynomial)>;

fn power_sum(sums: &mut PowerSums, t: usize) -> &(RatPolynomial, RatPolynomial) {
    while sums.len() <= t {
        let p = faulhaber(sums.len());
        let shifted = p.shift(-1);
        sums.push((p, shifted));
    }
    &sums[t]
}

fn eliminate(
    e: &[i64],
    coeff: &Rational,
    sums: &mut PowerSums,
    out: &mut BTreeMap<Vec<i64>, Rational>,
) {
    let Some(j) = e.iter().position(|&s| s <= 0) else {
        let slot = out.entry(e.to_vec()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            out.remove(e);
        }
        return;
    };
    // convergence forces s_1 > 1, so j ≥ 1
    debug_assert!(j >= 1);
    let t = (-e[j]) as usize;
    let (p, upper) = power_sum(sums, t).clone();
    let mut rest: Vec<i64> = e.to_vec();
    rest.remove(j);

    // upper end: P_t(m_{j-1} - 1) as a polynomial in m_{j-1}
    for (k, a) in upper.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let mut next = rest.clone();
        next[j - 1] -= k as i64;
        eliminate(&next, &(coeff * a), sums, out);
    }
    // lower end: -P_t(m_{j+1})
    if j < rest.len() {
        for (k, a) in p.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut next = rest.clone();
            next[j] -= k as i64;
            eliminate(&next, &(-(coeff * a)), sums, out);
        }
    }
}
