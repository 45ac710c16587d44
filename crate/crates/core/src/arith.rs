//! Exact scalars and the small amount of univariate polynomial algebra the
//! reductions need: binomials, Bernoulli polynomials and power sums.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational; always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Bernoulli numbers `B_0..=B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += Rational::from_integer(binomial(m as u64 + 1, k as i64)) * bk;
        }
        b.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Polynomial in one variable with exact rational coefficients, lowest
/// degree first. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPolynomial {
    coeffs: Vec<Rational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&int(x))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// The composition `p(x + c)`.
    pub fn shift(&self, c: i64) -> Self {
        let c = int(c);
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (k, a) in self.coeffs.iter().enumerate() {
            // a (x + c)^k = a sum_i C(k, i) c^{k-i} x^i
            let mut cpow = Rational::one();
            for i in (0..=k).rev() {
                out[i] += a * Rational::from_integer(binomial(k as u64, i as i64)) * &cpow;
                cpow *= &c;
            }
        }
        Self::new(out)
    }
}

impl fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `B_n(x) = sum_k C(n, k) B_k x^{n-k}`, so that `B_n(0) = B_n` and
/// `B_1(x) = x - 1/2`.
pub fn bernoulli_poly(n: usize) -> RatPolynomial {
    let b = bernoulli_numbers(n);
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (k, bk) in b.iter().enumerate() {
        coeffs[n - k] = Rational::from_integer(binomial(n as u64, k as i64)) * bk;
    }
    RatPolynomial::new(coeffs)
}

/// The power-sum polynomial `P_t` with `P_t(n) = 1^t + 2^t + … + n^t`.
///
/// Computed as `(B_{t+1}(n+1) - B_{t+1}(1)) / (t+1)`; subtracting `B_{t+1}(1)`
/// rather than `B_{t+1}(0)` keeps `P_0(n) = n`.
pub fn faulhaber(t: usize) -> RatPolynomial {
    let b = bernoulli_poly(t + 1);
    let at_one = b.eval_int(1);
    b.shift(1)
        .sub(&RatPolynomial::constant(at_one))
        .scale(&rat(1, t as i64 + 1))
}
