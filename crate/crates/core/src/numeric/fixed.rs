use alloc::string::String;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rational;

/// Binary fixed-point number `mantissa · 2^-bits`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fixed {
    mantissa: BigInt,
    bits: u32,
}

impl Fixed {
    pub fn zero(bits: u32) -> Self {
        Fixed { mantissa: BigInt::zero(), bits }
    }

    pub fn one(bits: u32) -> Self {
        Fixed { mantissa: BigInt::one() << bits, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    /// `1 / n^r`, rounded down.
    pub fn inv_pow(n: u64, r: u32, bits: u32) -> Self {
        let den = BigInt::from(n).pow(r);
        Fixed { mantissa: (BigInt::one() << bits) / den, bits }
    }

    pub fn add_assign(&mut self, other: &Fixed) {
        debug_assert_eq!(self.bits, other.bits);
        self.mantissa += &other.mantissa;
    }

    pub fn mul(&self, other: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, other.bits);
        Fixed { mantissa: (&self.mantissa * &other.mantissa) >> self.bits, bits: self.bits }
    }

    pub fn shr(&self, k: u32) -> Fixed {
        Fixed { mantissa: &self.mantissa >> k, bits: self.bits }
    }

    pub fn scale(&self, c: &Rational) -> Fixed {
        Fixed { mantissa: (&self.mantissa * c.numer()).div_floor(c.denom()), bits: self.bits }
    }

    pub fn to_f64(&self) -> f64 {
        // keep 80 significant bits before converting
        let len = self.mantissa.bits() as i64;
        let drop = (len - 80).max(0);
        let top = (&self.mantissa >> drop as usize).to_f64().unwrap_or(f64::NAN);
        libm::ldexp(top, (drop - self.bits as i64) as i32)
    }

    /// Rounded decimal expansion with `digits` places after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scaled = &self.mantissa.abs() * BigInt::from(10u32).pow(digits as u32);
        let half = BigInt::one() << (self.bits.max(1) - 1);
        let q: BigInt = (scaled + half) >> self.bits;
        let mut s = q.to_str_radix(10);
        if s.len() <= digits {
            s = core::iter::repeat_n('0', digits + 1 - s.len()).chain(s.chars()).collect();
        }
        let split = s.len() - digits;
        let mut out = String::new();
        if self.mantissa.sign() == Sign::Minus && q_nonzero(&s) {
            out.push('-');
        }
        out.push_str(&s[..split]);
        if digits > 0 {
            out.push('.');
            out.push_str(&s[split..]);
        }
        out
    }
}

fn q_nonzero(s: &str) -> bool {
    s.bytes().any(|b| b != b'0')
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(f.precision().unwrap_or(15)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn decimal_rendering() {
        let x = Fixed::one(64).scale(&rat(-1, 3));
        assert_eq!(x.to_decimal(5), "-0.33333");
        assert_eq!(Fixed::one(64).scale(&rat(5, 4)).to_decimal(3), "1.250");
        assert_eq!(Fixed::inv_pow(2, 3, 64).to_decimal(4), "0.1250");
        assert!((Fixed::inv_pow(3, 1, 128).to_f64() - 1.0 / 3.0).abs() < 1e-16);
    }
}
