//! Partial fractions over products of linear forms, and the convergence
//! criteria for generalized multiple zeta sums.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{factorial, Rational};
use crate::{Error, Result};

/// Integer linear form `c1·m1 + … + cd·md` with no constant term.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LinearForm {
    coeffs: Vec<i64>,
}

impl LinearForm {
    pub fn new(coeffs: impl Into<Vec<i64>>) -> Self {
        LinearForm { coeffs: coeffs.into() }
    }

    /// The form `m_{i+1}` in `d` variables (zero-based `i`).
    pub fn var(d: usize, i: usize) -> Self {
        let mut coeffs = vec![0; d];
        coeffs[i] = 1;
        LinearForm { coeffs }
    }

    /// Sum of the variables whose bits are set in `mask`.
    pub fn from_mask(d: usize, mask: u32) -> Self {
        LinearForm { coeffs: (0..d).map(|i| ((mask >> i) & 1) as i64).collect() }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        let n = self.coeffs.len().max(other.coeffs.len());
        let at = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
        LinearForm { coeffs: (0..n).map(|i| at(&self.coeffs, i) + at(&other.coeffs, i)).collect() }
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(x)
            .map(|(&c, v)| Rational::from_integer(c.into()) * v)
            .sum()
    }

    /// Splits the form as `sign · content · primitive` where the primitive
    /// form has coprime coefficients and a positive first nonzero entry.
    pub fn normalized(&self) -> (i64, i64, LinearForm) {
        let content = self.coeffs.iter().fold(0i64, |g, &c| g.gcd(&c));
        if content == 0 {
            return (1, 0, self.clone());
        }
        let lead = self.coeffs.iter().copied().find(|&c| c != 0).unwrap_or(1);
        let sign = lead.signum();
        let prim = self.coeffs.iter().map(|c| c / (sign * content)).collect();
        (sign, content, LinearForm { coeffs: prim })
    }

    /// Bitmask of the variables when every coefficient is 0 or 1.
    pub fn as_mask(&self) -> Option<u32> {
        let mut mask = 0;
        for (i, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => mask |= 1 << i,
                _ => return None,
            }
        }
        Some(mask)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "m{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `coefficient / ∏ form^exponent`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredTerm {
    pub coefficient: Rational,
    pub factors: Vec<(LinearForm, i64)>,
}

impl FactoredTerm {
    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|(_, n)| n).sum()
    }

    /// Value at a point where every form is nonzero.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut v = self.coefficient.clone();
        for (form, n) in &self.factors {
            v /= form.eval(x).pow(*n as i32);
        }
        v
    }
}

/// Partial-fraction identity for `1 / ∏ x_j^{n_j}` with `x = x_1 + … + x_r`:
///
/// `Σ_j Σ_{a_k < n_k, k≠j} M_j / (x^{n_j+A_j} ∏_{k≠j} x_k^{n_k-a_k})`,
/// `M_j = (n_j+A_j-1)! / ((n_j-1)! ∏ a_k!)`, `A_j = Σ_{k≠j} a_k`.
///
/// In each output term the merged form `x` comes first, followed by the
/// surviving input forms in their original order.
pub fn pf_expand(factors: &[(LinearForm, i64)]) -> Result<Vec<FactoredTerm>> {
    if factors.len() < 2 {
        return Err(Error::Precondition(format!(
            "partial fractions need at least two forms, got {}",
            factors.len()
        )));
    }
    if let Some(&(_, n)) = factors.iter().find(|(_, n)| *n < 1) {
        return Err(Error::NonPositiveExponent(n));
    }
    let sum = factors.iter().fold(LinearForm::new(Vec::new()), |acc, (f, _)| acc.add(f));
    if sum.is_zero() {
        return Err(Error::ZeroSumForm);
    }

    let mut out = Vec::new();
    for (j, &(_, nj)) in factors.iter().enumerate() {
        let others: Vec<usize> = (0..factors.len()).filter(|&k| k != j).collect();
        let mut a = vec![0i64; others.len()];
        loop {
            let big_a: i64 = a.iter().sum();
            let mut m = Rational::from_integer(factorial((nj + big_a - 1) as u64))
                / Rational::from_integer(factorial((nj - 1) as u64));
            for &ak in &a {
                m /= Rational::from_integer(factorial(ak as u64));
            }
            let mut term = vec![(sum.clone(), nj + big_a)];
            for (pos, &k) in others.iter().enumerate() {
                term.push((factors[k].0.clone(), factors[k].1 - a[pos]));
            }
            out.push(FactoredTerm { coefficient: m, factors: term });

            // odometer over a_k in [0, n_k - 1]
            let mut pos = 0;
            while pos < a.len() {
                a[pos] += 1;
                if a[pos] < factors[others[pos]].1 {
                    break;
                }
                a[pos] = 0;
                pos += 1;
            }
            if pos == a.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// Subsets `i` of `[d]` whose condition `Σ_{J ∩ i ≠ ∅} s_J > |i|` fails.
/// Subsets are bitmasks over the summation variables.
pub fn conv_violations(d: usize, exponents: &BTreeMap<u32, i64>) -> Vec<u32> {
    let mut bad = Vec::new();
    for i in 1u32..(1 << d) {
        let total: i64 = exponents
            .iter()
            .filter(|(&j, _)| j & i != 0)
            .map(|(_, &s)| s)
            .sum();
        if total <= i.count_ones() as i64 {
            bad.push(i);
        }
    }
    bad
}

/// Convergence of `Σ_{m ∈ ℕ^d} ∏_J (Σ_{i∈J} m_i)^{-s_J}` at integer exponents.
pub fn conv_check_general(d: usize, exponents: &BTreeMap<u32, i64>) -> bool {
    conv_violations(d, exponents).is_empty()
}

/// Variable sets of the seven forms `m1, m2, m3, m1+m2, m2+m3, m1+m3,
/// m1+m2+m3` of the depth-three sum.
pub const ZETA3_MASKS: [u32; 7] = [0b001, 0b010, 0b100, 0b011, 0b110, 0b101, 0b111];

fn zeta3_conditions() -> [(u32, &'static str); 7] {
    [
        (0b001, "s1+s4+s6+s7 > 1"),
        (0b010, "s2+s4+s5+s7 > 1"),
        (0b100, "s3+s5+s6+s7 > 1"),
        (0b011, "s1+s2+s4+s5+s6+s7 > 2"),
        (0b101, "s1+s3+s4+s5+s6+s7 > 2"),
        (0b110, "s2+s3+s4+s5+s6+s7 > 2"),
        (0b111, "s1+s2+s3+s4+s5+s6+s7 > 3"),
    ]
}

/// The violated conditions among the seven depth-three inequalities, as
/// printable strings in `s1..s7` labelling.
pub fn zeta3_violations(s: &[i64; 7]) -> Vec<String> {
    zeta3_conditions()
        .iter()
        .filter(|(i, _)| {
            let total: i64 = ZETA3_MASKS
                .iter()
                .zip(s)
                .filter(|(&j, _)| j & i != 0)
                .map(|(_, &v)| v)
                .sum();
            total <= i.count_ones() as i64
        })
        .map(|(_, text)| String::from(*text))
        .collect()
}

pub fn conv_check_zeta3(s: &[i64; 7]) -> bool {
    zeta3_violations(s).is_empty()
}

/// The exponent assignment of a depth-three tuple, merging equal masks.
pub fn zeta3_exponents(s: &[i64; 7]) -> BTreeMap<u32, i64> {
    let mut m = BTreeMap::new();
    for (&mask, &v) in ZETA3_MASKS.iter().zip(s) {
        if v != 0 {
            *m.entry(mask).or_insert(0) += v;
        }
    }
    m
}

/// Checks the identity of [`pf_expand`] at one rational point.
pub fn pf_identity_holds(factors: &[(LinearForm, i64)], x: &[Rational]) -> Result<bool> {
    let mut lhs = Rational::one();
    for (form, n) in factors {
        let v = form.eval(x);
        if v.is_zero() {
            return Err(Error::Precondition(format!("form {form} vanishes at the point")));
        }
        lhs /= v.pow(*n as i32);
    }
    let rhs: Rational = pf_expand(factors)?.iter().map(|t| t.eval(x)).sum();
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn x(i: usize) -> LinearForm {
        LinearForm::var(3, i)
    }

    #[test]
    fn two_simple_forms() {
        let terms = pf_expand(&[(x(0), 1), (x(1), 1)]).unwrap();
        let sum = x(0).add(&x(1));
        assert_eq!(
            terms,
            vec![
                FactoredTerm { coefficient: int(1), factors: vec![(sum.clone(), 1), (x(1), 1)] },
                FactoredTerm { coefficient: int(1), factors: vec![(sum, 1), (x(0), 1)] },
            ]
        );
    }

    #[test]
    fn unequal_exponents() {
        // 1/(x1 x2^2) = 1/(x x2^2) + 1/(x^2 x2) + 1/(x^2 x1)
        let terms = pf_expand(&[(x(0), 1), (x(1), 2)]).unwrap();
        assert_eq!(terms.len(), 3);
        assert!(terms.iter().all(|t| t.coefficient == int(1) && t.degree() == 3));
        let p = [rat(2, 3), rat(-5, 7), int(0)];
        assert!(pf_identity_holds(&[(x(0), 1), (x(1), 2)], &p).unwrap());
    }

    #[test]
    fn three_forms_symmetric() {
        let f = [(x(0), 1), (x(1), 1), (x(2), 1)];
        assert_eq!(pf_expand(&f).unwrap().len(), 3);
        assert!(pf_identity_holds(&f, &[int(1), int(1), int(2)]).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(pf_expand(&[(x(0), 1), (x(0).neg(), 1)]), Err(Error::ZeroSumForm));
        assert_eq!(pf_expand(&[(x(0), 0), (x(1), 1)]), Err(Error::NonPositiveExponent(0)));
        assert!(pf_expand(&[(x(0), 1)]).is_err());
    }

    #[test]
    fn normalized_forms() {
        let f = LinearForm::new([0, -2, -2]);
        assert_eq!(f.normalized(), (-1, 2, LinearForm::new([0, 1, 1])));
        assert_eq!(LinearForm::new([1, 1, 0]).as_mask(), Some(0b011));
        assert_eq!(format!("{}", LinearForm::new([1, -1, 2])), "m1 - m2 + 2m3");
    }

    #[test]
    fn general_convergence_examples() {
        let one: BTreeMap<u32, i64> = [(1, 2)].into();
        assert!(conv_check_general(1, &one));
        let sl4 = |s: [i64; 6]| zeta3_exponents(&[s[0], s[1], s[2], s[3], s[4], 0, s[5]]);
        assert!(!conv_check_general(3, &sl4([0, 0, 0, 1, 1, 1])));
        assert!(conv_check_general(3, &sl4([0, 0, 0, 1, 1, 2])));
    }

    #[test]
    fn zeta3_convergence_examples() {
        assert!(conv_check_zeta3(&[1; 7]));
        assert!(!conv_check_zeta3(&[0, 0, 0, 0, 0, 0, 3]));
        assert!(conv_check_zeta3(&[0, 0, 0, 0, 0, 0, 4]));
        assert_eq!(zeta3_violations(&[0, 0, 0, 1, 1, 0, 1]), ["s1+s2+s3+s4+s5+s6+s7 > 3"]);
    }

    #[test]
    fn zeta3_matches_general_criterion() {
        let mut s = [0i64; 7];
        for code in 0..4usize.pow(7) {
            let mut c = code;
            for v in s.iter_mut() {
                *v = (c % 4) as i64;
                c /= 4;
            }
            assert_eq!(conv_check_zeta3(&s), conv_check_general(3, &zeta3_exponents(&s)), "{s:?}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn factor_set() -> impl Strategy<Value = (Vec<(LinearForm, i64)>, Vec<Rational>)> {
            (2usize..=4).prop_flat_map(|r| {
                (
                    proptest::collection::vec(
                        (proptest::collection::vec(-2i64..=2, 3), 1i64..=3),
                        r,
                    ),
                    proptest::collection::vec((-40i64..40, 1i64..9), 3),
                )
                    .prop_map(|(fs, pt)| {
                        let fs = fs.into_iter().map(|(c, n)| (LinearForm::new(c), n)).collect();
                        let pt = pt.into_iter().map(|(a, b)| rat(a, b)).collect();
                        (fs, pt)
                    })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn identity_and_degree((fs, pt) in factor_set()) {
                let sum = fs.iter().fold(LinearForm::new(Vec::new()), |a, (f, _)| a.add(f));
                prop_assume!(!sum.eval(&pt).is_zero());
                prop_assume!(fs.iter().all(|(f, _)| !f.eval(&pt).is_zero()));
                let deg: i64 = fs.iter().map(|(_, n)| n).sum();
                prop_assert!(pf_expand(&fs).unwrap().iter().all(|t| t.degree() == deg));
                prop_assert!(pf_identity_holds(&fs, &pt).unwrap());
            }
        }
    }
}
