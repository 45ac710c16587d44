use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::MzvIndex;
use crate::arith::Rational;

/// One factor of a monomial: a plain symbol `ζ(s)` or a regularized `ζ̄(1, …)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Factor {
    pub index: MzvIndex,
    pub regularized: bool,
}

impl Factor {
    pub fn plain(index: impl Into<MzvIndex>) -> Self {
        Factor { index: index.into(), regularized: false }
    }

    pub fn regularized(index: impl Into<MzvIndex>) -> Self {
        Factor { index: index.into(), regularized: true }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.regularized {
            f.write_str("ζ̄")?;
            let e = self.index.exponents();
            f.write_str("(")?;
            for (i, s) in e.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
            f.write_str(")")
        } else {
            write!(f, "{}", self.index)
        }
    }
}

/// `T^k` times a sorted product of factors. The empty product is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    t_power: u32,
    factors: Vec<Factor>,
}

impl Monomial {
    pub fn new(t_power: u32, mut factors: Vec<Factor>) -> Self {
        factors.sort();
        Monomial { t_power, factors }
    }

    pub fn unit() -> Self {
        Monomial { t_power: 0, factors: Vec::new() }
    }

    pub fn single(factor: Factor) -> Self {
        Monomial { t_power: 0, factors: vec![factor] }
    }

    pub fn t_power(&self) -> u32 {
        self.t_power
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn weight(&self) -> i64 {
        self.t_power as i64 + self.factors.iter().map(|f| f.index.weight()).sum::<i64>()
    }

    /// Total depth of all factors.
    pub fn depth(&self) -> usize {
        self.factors.iter().map(|f| f.index.depth()).sum()
    }

    /// The index when this is a lone canonical symbol.
    pub fn as_canonical(&self) -> Option<&MzvIndex> {
        match (self.t_power, self.factors.as_slice()) {
            (0, [f]) if !f.regularized && f.index.is_canonical() => Some(&f.index),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Monomial::new(self.t_power + other.t_power, factors)
    }

    pub fn without_t(&self) -> Monomial {
        Monomial { t_power: 0, factors: self.factors.clone() }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.depth().cmp(&other.depth()))
            .then(self.t_power.cmp(&other.t_power))
            .then(self.factors.len().cmp(&other.factors.len()))
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.t_power > 0 {
            f.write_str("T")?;
            if self.t_power > 1 {
                write!(f, "^{}", self.t_power)?;
            }
            first = false;
        }
        for factor in &self.factors {
            if !first {
                f.write_str("·")?;
            }
            write!(f, "{factor}")?;
            first = false;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Finite ℚ-linear combination of monomials; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct MzvCombination {
    terms: BTreeMap<Monomial, Rational>,
}

impl MzvCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_monomial(m: Monomial, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    /// The plain symbol `ζ(index)` with coefficient one.
    pub fn symbol(index: impl Into<MzvIndex>) -> Self {
        Self::from_monomial(Monomial::single(Factor::plain(index)), Rational::one())
    }

    /// The regularized symbol `ζ̄(index)`.
    pub fn regularized(index: impl Into<MzvIndex>) -> Self {
        Self::from_monomial(Monomial::single(Factor::regularized(index)), Rational::one())
    }

    /// Product of plain symbols, e.g. `ζ(2)·ζ(2,1)`.
    pub fn product(indices: impl IntoIterator<Item = MzvIndex>) -> Self {
        let factors = indices.into_iter().map(Factor::plain).collect();
        Self::from_monomial(Monomial::new(0, factors), Rational::one())
    }

    /// The formal variable `T`.
    pub fn t() -> Self {
        Self::from_monomial(Monomial::new(1, Vec::new()), Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_monomial(Monomial::unit(), c)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &MzvCombination, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn add(&mut self, other: &MzvCombination) {
        self.add_scaled(other, &Rational::one());
    }

    pub fn sub(&mut self, other: &MzvCombination) {
        self.add_scaled(other, &-Rational::one());
    }

    pub fn scaled(&self, c: &Rational) -> MzvCombination {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> MzvCombination {
        self.scaled(&-Rational::one())
    }

    /// Formal product: monomials multiply by concatenating factors.
    pub fn mul(&self, other: &MzvCombination) -> MzvCombination {
        let mut out = Self::zero();
        for (m1, a) in &self.terms {
            for (m2, b) in &other.terms {
                out.add_term(m1.mul(m2), a * b);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every term is a single plain canonical symbol.
    pub fn is_canonical(&self) -> bool {
        self.terms.keys().all(|m| m.as_canonical().is_some())
    }

    /// Iterates `(index, coefficient)` of a canonical combination; panics if
    /// some term is not canonical.
    pub fn canonical_terms(&self) -> impl Iterator<Item = (&MzvIndex, &Rational)> {
        self.terms.iter().map(|(m, c)| {
            let idx = m.as_canonical().expect("combination is not canonical");
            (idx, c)
        })
    }

    /// The coefficient of `T^k`, itself a combination free of `T`.
    pub fn t_coefficient(&self, k: u32) -> MzvCombination {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.t_power() == k {
                out.add_term(m.without_t(), c.clone());
            }
        }
        out
    }

    pub fn max_t_power(&self) -> u32 {
        self.terms.keys().map(Monomial::t_power).max().unwrap_or(0)
    }
}

impl FromIterator<(Monomial, Rational)> for MzvCombination {
    fn from_iter<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in iter {
            out.add_term(m, c);
        }
        out
    }
}

impl fmt::Display for MzvCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}·")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use alloc::string::ToString;

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut c = MzvCombination::symbol([2, 1]);
        c.sub(&MzvCombination::symbol([2, 1]));
        assert!(c.is_zero());
        c.add_term(Monomial::single(Factor::plain([3])), int(0));
        assert!(c.is_zero());
    }

    #[test]
    fn display_is_ordered() {
        let mut c = MzvCombination::symbol([2, 1]);
        c.add_scaled(&MzvCombination::symbol([3]), &int(-2));
        c.add(&MzvCombination::product([MzvIndex::from([2]), MzvIndex::from([2])]));
        assert_eq!(c.to_string(), "-2·ζ(3) + ζ(2,1) + ζ(2)·ζ(2)");
    }

    #[test]
    fn t_coefficients_split() {
        let mut c = MzvCombination::t().mul(&MzvCombination::symbol([3]));
        c.add(&MzvCombination::symbol([2, 1]));
        assert_eq!(c.t_coefficient(1), MzvCombination::symbol([3]));
        assert_eq!(c.t_coefficient(0), MzvCombination::symbol([2, 1]));
        assert_eq!(c.max_t_power(), 1);
    }
}
