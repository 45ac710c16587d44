use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Factor, Monomial, MzvCombination, MzvIndex};
use crate::arith::Rational;
use crate::{Error, Result};

/// Quasi-shuffle of two exponent words with multiplicities:
/// `(a·u) * (b·v) = a·(u * b·v) + b·(a·u * v) + (a+b)·(u * v)`.
pub fn stuffle_words(u: &[i64], v: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let mut out = BTreeMap::new();
    let mut prefix = Vec::with_capacity(u.len() + v.len());
    stuffle_into(u, v, &mut prefix, &mut out);
    out
}

fn stuffle_into(u: &[i64], v: &[i64], prefix: &mut Vec<i64>, out: &mut BTreeMap<Vec<i64>, u64>) {
    if u.is_empty() || v.is_empty() {
        let mut w = prefix.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        *out.entry(w).or_insert(0) += 1;
        return;
    }
    prefix.push(u[0]);
    stuffle_into(&u[1..], v, prefix, out);
    prefix.pop();

    prefix.push(v[0]);
    stuffle_into(u, &v[1..], prefix, out);
    prefix.pop();

    prefix.push(u[0] + v[0]);
    stuffle_into(&u[1..], &v[1..], prefix, out);
    prefix.pop();
}

/// Stuffle product of two symbols.
///
/// Both must be convergent, or exactly one may be a regularized `ζ̄(1, tail)`;
/// output words that still start with that unmerged `1` stay regularized.
pub fn stuffle(u: &Factor, v: &Factor) -> Result<MzvCombination> {
    if u.regularized && v.regularized {
        return Err(Error::UnsupportedRegularization(format!(
            "product of two regularized symbols {u} * {v}"
        )));
    }
    for f in [u, v] {
        if f.regularized {
            if f.index.exponents()[0] != 1 {
                return Err(Error::UnsupportedRegularization(format!("{f}")));
            }
        } else if !f.index.is_convergent() {
            return Err(Error::Divergent {
                what: format!("{}", f.index),
                violated: alloc::vec![format!(
                    "prefix {}",
                    f.index.first_divergent_prefix().unwrap_or(0)
                )],
            });
        }
    }
    let regularized = u.regularized || v.regularized;
    let mut out = MzvCombination::zero();
    for (w, mult) in stuffle_words(u.index.exponents(), v.index.exponents()) {
        let reg = regularized && w[0] == 1;
        let factor = Factor { index: MzvIndex::new(w), regularized: reg };
        out.add_term(
            Monomial::single(factor),
            Rational::from_integer(BigInt::from(mult)),
        );
    }
    Ok(out)
}

/// Product of two combinations whose terms are single plain symbols, expanded
/// by the stuffle rule. Constant terms multiply through.
pub fn stuffle_product(a: &MzvCombination, b: &MzvCombination) -> Result<MzvCombination> {
    let mut out = MzvCombination::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let coeff = ca * cb;
            if coeff.is_zero() {
                continue;
            }
            if ma.t_power() != 0 || mb.t_power() != 0 || ma.factors().len() > 1 || mb.factors().len() > 1 {
                return Err(Error::Precondition(format!(
                    "stuffle_product needs single symbols, got {ma} and {mb}"
                )));
            }
            match (ma.factors().first(), mb.factors().first()) {
                (None, _) => out.add_term(mb.clone(), coeff),
                (_, None) => out.add_term(ma.clone(), coeff),
                (Some(fa), Some(fb)) => out.add_scaled(&stuffle(fa, fb)?, &coeff),
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn multiplicity(words: &BTreeMap<Vec<i64>, u64>) -> u64 {
        words.values().sum()
    }

    fn sym(e: &[i64]) -> MzvCombination {
        MzvCombination::symbol(MzvIndex::from(e))
    }

    #[test]
    fn depth_one_stuffle() {
        let got = stuffle(&Factor::plain([2]), &Factor::plain([3])).unwrap();
        let mut want = sym(&[2, 3]);
        want.add(&sym(&[3, 2]));
        want.add(&sym(&[5]));
        assert_eq!(got, want);
    }

    #[test]
    fn regularized_head_stuffle() {
        for s in 2..6 {
            let got = stuffle(&Factor::regularized([1]), &Factor::plain([s])).unwrap();
            let mut want = MzvCombination::regularized([1, s]);
            want.add(&sym(&[s, 1]));
            want.add(&sym(&[s + 1]));
            assert_eq!(got, want);
        }
    }

    #[test]
    fn depth_one_by_two() {
        let got = stuffle(&Factor::plain([2]), &Factor::plain([2, 1])).unwrap();
        let mut want = sym(&[2, 2, 1]).scaled(&int(2));
        want.add(&sym(&[2, 1, 2]));
        want.add(&sym(&[2, 3]));
        want.add(&sym(&[4, 1]));
        assert_eq!(got, want);
    }

    #[test]
    fn two_regularized_rejected() {
        assert!(stuffle(&Factor::regularized([1]), &Factor::regularized([1, 2])).is_err());
    }

    /// Number of stuffle words of lengths p and q, counted with multiplicity,
    /// is the Delannoy number D(p, q).
    #[test]
    fn multiplicities_are_delannoy_numbers() {
        fn delannoy(p: u64, q: u64) -> u64 {
            if p == 0 || q == 0 {
                1
            } else {
                delannoy(p - 1, q) + delannoy(p, q - 1) + delannoy(p - 1, q - 1)
            }
        }
        for p in 1..5usize {
            for q in 1..5usize {
                let u: Vec<i64> = (0..p as i64).map(|i| i + 2).collect();
                let v: Vec<i64> = (0..q as i64).map(|i| 10 * i + 3).collect();
                assert_eq!(multiplicity(&stuffle_words(&u, &v)), delannoy(p as u64, q as u64));
            }
        }
    }
}
