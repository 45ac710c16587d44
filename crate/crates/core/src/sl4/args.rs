use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::pfrac::zeta3_violations;
use crate::{Error, Result};

/// Which sum a tuple of arguments belongs to.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Kind {
    /// Six slots for `m1, m2, m3, m1+m2, m2+m3, m1+m2+m3`.
    Sl4,
    /// Seven slots, adding `m1+m3` before the total.
    Zeta3,
}

impl Kind {
    pub fn arity(self) -> usize {
        match self {
            Kind::Sl4 => 6,
            Kind::Zeta3 => 7,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Sl4 => "sl4",
            Kind::Zeta3 => "zeta3",
        }
    }
}

/// Embeds a six-slot tuple as `(s1, …, s5, 0, s6)`.
pub fn sl4_to_zeta3(s: &[i64; 6]) -> [i64; 7] {
    [s[0], s[1], s[2], s[3], s[4], 0, s[5]]
}

/// Inverse of [`sl4_to_zeta3`]; `None` when the `m1+m3` slot is used.
pub fn zeta3_to_sl4(s: &[i64; 7]) -> Option<[i64; 6]> {
    (s[5] == 0).then(|| [s[0], s[1], s[2], s[3], s[4], s[6]])
}

/// Validated nonnegative arguments of `ζ_sl4` or `ζ_3`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WittenArgs {
    kind: Kind,
    values: Vec<i64>,
}

impl WittenArgs {
    pub fn new(kind: Kind, values: impl Into<Vec<i64>>) -> Result<Self> {
        let values = values.into();
        if values.len() != kind.arity() {
            return Err(Error::Precondition(format!(
                "{} takes {} arguments, got {}",
                kind.name(),
                kind.arity(),
                values.len()
            )));
        }
        if let Some(&v) = values.iter().find(|&&v| v < 0) {
            return Err(Error::Precondition(format!("arguments must be nonnegative, got {v}")));
        }
        Ok(WittenArgs { kind, values })
    }

    pub fn sl4(s: [i64; 6]) -> Result<Self> {
        Self::new(Kind::Sl4, s)
    }

    pub fn zeta3(s: [i64; 7]) -> Result<Self> {
        Self::new(Kind::Zeta3, s)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn weight(&self) -> i64 {
        self.values.iter().sum()
    }

    pub fn as_zeta3(&self) -> [i64; 7] {
        match self.kind {
            Kind::Zeta3 => self.values.as_slice().try_into().expect("arity checked"),
            Kind::Sl4 => sl4_to_zeta3(&self.values.as_slice().try_into().expect("arity checked")),
        }
    }

    pub fn as_sl4(&self) -> Option<[i64; 6]> {
        zeta3_to_sl4(&self.as_zeta3())
    }

    /// Violated convergence conditions, in the seven-slot labelling.
    pub fn violations(&self) -> Vec<String> {
        zeta3_violations(&self.as_zeta3())
    }

    pub fn is_convergent(&self) -> bool {
        self.violations().is_empty()
    }

    /// Error value for a divergent tuple.
    pub fn divergence(&self) -> Error {
        Error::Divergent { what: format!("{self}"), violated: self.violations() }
    }
}

impl fmt::Display for WittenArgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            Kind::Sl4 => "ζ_sl4",
            Kind::Zeta3 => "ζ_3",
        };
        write!(f, "{name}{}", Tuple(&self.values))
    }
}

/// Formats a slice as `(a,b,c)`.
pub struct Tuple<'a>(pub &'a [i64]);

impl fmt::Display for Tuple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// The nine zero patterns whose reductions mix weights.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum IrregularCase {
    /// `(0,0,0,b,0,a)`
    Irr1a,
    /// `(0,0,0,0,b,a)`
    Irr1b,
    /// `(b,0,0,0,0,a)`
    Irr2a,
    /// `(0,b,0,0,0,a)`
    Irr2b,
    /// `(0,0,b,0,0,a)`
    Irr2c,
    /// `(0,0,0,0,0,a)`
    Irr3,
    /// `(0,0,s3,s4,0,s6)`
    Irr4a,
    /// `(s1,0,0,0,s5,s6)`
    Irr4b,
    /// `(0,0,0,a,b,0)`
    Irr5,
}

impl IrregularCase {
    pub const ALL: [IrregularCase; 9] = [
        IrregularCase::Irr1a,
        IrregularCase::Irr1b,
        IrregularCase::Irr2a,
        IrregularCase::Irr2b,
        IrregularCase::Irr2c,
        IrregularCase::Irr3,
        IrregularCase::Irr4a,
        IrregularCase::Irr4b,
        IrregularCase::Irr5,
    ];

    /// Slots (zero-based) forced to vanish.
    pub fn zero_slots(self) -> &'static [usize] {
        match self {
            IrregularCase::Irr1a => &[0, 1, 2, 4],
            IrregularCase::Irr1b => &[0, 1, 2, 3],
            IrregularCase::Irr2a => &[1, 2, 3, 4],
            IrregularCase::Irr2b => &[0, 2, 3, 4],
            IrregularCase::Irr2c => &[0, 1, 3, 4],
            IrregularCase::Irr3 => &[0, 1, 2, 3, 4],
            IrregularCase::Irr4a => &[0, 1, 4],
            IrregularCase::Irr4b => &[1, 2, 3],
            IrregularCase::Irr5 => &[0, 1, 2, 5],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IrregularCase::Irr1a => "irr1a",
            IrregularCase::Irr1b => "irr1b",
            IrregularCase::Irr2a => "irr2a",
            IrregularCase::Irr2b => "irr2b",
            IrregularCase::Irr2c => "irr2c",
            IrregularCase::Irr3 => "irr3",
            IrregularCase::Irr4a => "irr4a",
            IrregularCase::Irr4b => "irr4b",
            IrregularCase::Irr5 => "irr5",
        }
    }

    fn matches(self, s: &[i64; 6]) -> bool {
        self.zero_slots().iter().all(|&i| s[i] == 0)
    }
}

impl fmt::Display for IrregularCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RegularityClass {
    Regular,
    Irregular(IrregularCase),
}

impl RegularityClass {
    pub fn is_regular(self) -> bool {
        self == RegularityClass::Regular
    }
}

impl fmt::Display for RegularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegularityClass::Regular => f.write_str("regular"),
            RegularityClass::Irregular(c) => write!(f, "irregular ({c})"),
        }
    }
}

/// Classifies a convergent six-slot tuple; overlapping patterns resolve as
/// irr3, then irr1/irr2, then irr4, then irr5.
pub fn classify(s: &[i64; 6]) -> Result<RegularityClass> {
    let args = WittenArgs::sl4(*s)?;
    if !args.is_convergent() {
        return Err(args.divergence());
    }
    use IrregularCase::*;
    let order = [Irr3, Irr1a, Irr1b, Irr2a, Irr2b, Irr2c, Irr4a, Irr4b, Irr5];
    Ok(order
        .into_iter()
        .find(|c| c.matches(s))
        .map_or(RegularityClass::Regular, RegularityClass::Irregular))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&[0, 0, 0, 0, 0, 4]).unwrap(), RegularityClass::Irregular(IrregularCase::Irr3));
        assert_eq!(classify(&[1, 1, 1, 1, 1, 1]).unwrap(), RegularityClass::Regular);
        assert_eq!(classify(&[0, 0, 0, 2, 2, 0]).unwrap(), RegularityClass::Irregular(IrregularCase::Irr5));
        assert_eq!(classify(&[0, 0, 0, 1, 0, 3]).unwrap(), RegularityClass::Irregular(IrregularCase::Irr1a));
        assert_eq!(classify(&[0, 0, 1, 1, 0, 2]).unwrap(), RegularityClass::Irregular(IrregularCase::Irr4a));
        assert!(classify(&[0, 0, 0, 1, 1, 1]).is_err());
    }

    #[test]
    fn divergence_lists_conditions() {
        let a = WittenArgs::sl4([0, 0, 0, 1, 1, 1]).unwrap();
        assert_eq!(a.violations(), ["s1+s2+s3+s4+s5+s6+s7 > 3"]);
        assert_eq!(a.to_string(), "ζ_sl4(0,0,0,1,1,1)");
    }

    #[test]
    fn arity_and_sign_checked() {
        assert!(WittenArgs::new(Kind::Sl4, [1, 1, 1]).is_err());
        assert!(WittenArgs::new(Kind::Zeta3, [1, 1, 1, 1, 1, 1, -1]).is_err());
    }
}
