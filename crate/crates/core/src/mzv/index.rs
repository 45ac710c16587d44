use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Exponent tuple `(s1, …, sd)` of one multiple zeta symbol, outermost first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MzvIndex(Vec<i64>);

impl MzvIndex {
    /// Panics on an empty tuple.
    pub fn new(exponents: impl Into<Vec<i64>>) -> Self {
        let exponents = exponents.into();
        assert!(!exponents.is_empty(), "an MZV index needs at least one entry");
        MzvIndex(exponents)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<i64> {
        self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Length of the first prefix whose exponent sum does not exceed its
    /// length, if any.
    pub fn first_divergent_prefix(&self) -> Option<usize> {
        let mut acc = 0i64;
        for (l, s) in self.0.iter().enumerate() {
            acc += s;
            if acc <= l as i64 + 1 {
                return Some(l + 1);
            }
        }
        None
    }

    /// `s1 + … + sℓ > ℓ` for every prefix.
    pub fn is_convergent(&self) -> bool {
        self.first_divergent_prefix().is_none()
    }

    /// Positive entries with a leading entry of at least two.
    pub fn is_canonical(&self) -> bool {
        self.0[0] >= 2 && self.0.iter().all(|&s| s >= 1)
    }
}

impl From<&[i64]> for MzvIndex {
    fn from(s: &[i64]) -> Self {
        MzvIndex::new(s.to_vec())
    }
}

impl From<Vec<i64>> for MzvIndex {
    fn from(s: Vec<i64>) -> Self {
        MzvIndex::new(s)
    }
}

impl<const N: usize> From<[i64; N]> for MzvIndex {
    fn from(s: [i64; N]) -> Self {
        MzvIndex::new(s.to_vec())
    }
}

/// Weight, then depth, then lexicographic.
impl Ord for MzvIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.depth().cmp(&other.depth()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MzvIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MzvIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MzvIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ζ(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convergence_by_prefix_sums() {
        assert!(MzvIndex::from([2, 1, 1]).is_convergent());
        assert!(!MzvIndex::from([1, 2]).is_convergent());
        assert_eq!(MzvIndex::from([3, -1]).first_divergent_prefix(), Some(2));
        assert!(MzvIndex::from([4, -1]).is_convergent());
        assert!(MzvIndex::from([4, 0, 0]).is_convergent());
        assert!(!MzvIndex::from([3, 0, 0]).is_convergent());
    }

    #[test]
    fn canonical_means_positive_with_leading_two() {
        assert!(MzvIndex::from([2, 1]).is_canonical());
        assert!(!MzvIndex::from([3, 0]).is_canonical());
        assert!(!MzvIndex::from([1, 3]).is_canonical());
    }

    #[test]
    fn ordering_is_weight_depth_lex() {
        let mut v = alloc::vec![
            MzvIndex::from([3, 1]),
            MzvIndex::from([4]),
            MzvIndex::from([2, 1, 1]),
            MzvIndex::from([2, 2]),
            MzvIndex::from([3]),
        ];
        v.sort();
        let want: Vec<MzvIndex> = alloc::vec![
            MzvIndex::from([3]),
            MzvIndex::from([4]),
            MzvIndex::from([2, 2]),
            MzvIndex::from([3, 1]),
            MzvIndex::from([2, 1, 1]),
        ];
        assert_eq!(v, want);
    }
}
