//! Mordell–Tornheim sums `ζ_MT(s1, …, sd; s)` and, more generally, lattice
//! sums whose denominators are subset sums forming a laminar family.
//!
//! A laminar family is merged pairwise with [`pf_expand`] until it becomes a
//! chain `C1 ⊂ … ⊂ Ck = [d]`; a chain sum is an MZV with integer arguments,
//! finished by [`normalize_integer_args`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::mzv::{normalize_integer_args, Factor, Monomial, MzvCombination, MzvIndex};
use crate::pfrac::{conv_violations, pf_expand, LinearForm};
use crate::{Error, Result};

/// Arguments of `ζ_MT(parts; outer)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MtArgs {
    pub parts: Vec<i64>,
    pub outer: i64,
}

impl MtArgs {
    pub fn new(parts: impl Into<Vec<i64>>, outer: i64) -> Self {
        MtArgs { parts: parts.into(), outer }
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().sum::<i64>() + self.outer
    }

    fn full(&self) -> u32 {
        (1u32 << self.depth()) - 1
    }

    /// Exponents keyed by variable subset: `{i} ↦ s_i` and `[d] ↦ s`.
    pub fn exponents(&self) -> BTreeMap<u32, i64> {
        let mut m = BTreeMap::new();
        for (i, &s) in self.parts.iter().enumerate() {
            if s != 0 {
                *m.entry(1u32 << i).or_insert(0) += s;
            }
        }
        if self.outer != 0 {
            *m.entry(self.full()).or_insert(0) += self.outer;
        }
        m
    }

    /// The violated convergence conditions, written in `s1..sd; s` labels.
    pub fn violations(&self) -> Vec<String> {
        conv_violations(self.depth(), &self.exponents())
            .into_iter()
            .map(|mask| {
                let mut terms: Vec<String> = (0..self.depth())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| format!("s{}", i + 1))
                    .collect();
                terms.push(String::from("s"));
                format!("{} > {}", terms.join("+"), mask.count_ones())
            })
            .collect()
    }

    pub fn is_convergent(&self) -> bool {
        self.violations().is_empty()
    }
}

impl fmt::Display for MtArgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ζ_MT(")?;
        for (i, s) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ";{})", self.outer)
    }
}

/// Sorted `(subset, exponent)` pairs with positive exponents.
type Family = Vec<(u32, i64)>;

fn is_laminar(family: &Family) -> bool {
    family.iter().all(|&(a, _)| {
        family
            .iter()
            .all(|&(b, _)| a & b == 0 || a & b == a || a & b == b)
    })
}

/// Two children of the deepest node that has at least two, if any. The root
/// is the full variable set whether or not it carries an exponent.
fn mergeable_pair(family: &Family, full: u32) -> Option<(usize, usize)> {
    let parent = |m: u32| -> u32 {
        family
            .iter()
            .map(|&(p, _)| p)
            .filter(|&p| p != m && p & m == m)
            .min_by_key(|p| p.count_ones())
            .unwrap_or(full)
    };
    let mut children: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, &(m, _)) in family.iter().enumerate() {
        if m != full {
            children.entry(parent(m)).or_default().push(i);
        }
    }
    let (_, mut kids) = children
        .into_iter()
        .filter(|(_, k)| k.len() >= 2)
        .min_by_key(|(node, _)| (node.count_ones(), *node))?;
    // largest exponents first, smaller subset on ties
    kids.sort_by_key(|&i| (-family[i].1, family[i].0));
    Some((kids[0], kids[1]))
}

/// Chain `C1 ⊂ … ⊂ Ck` as an integer-argument MZV index, outermost first.
fn chain_index(family: &Family, full: u32) -> Result<MzvIndex> {
    let mut chain = family.clone();
    chain.sort_by_key(|&(m, _)| m.count_ones());
    let top = chain.last().map(|&(m, _)| m).unwrap_or(0);
    if top != full {
        return Err(Error::Divergent {
            what: format!("lattice sum with free variables {:b}", full & !top),
            violated: vec![String::from("every variable must occur in some form")],
        });
    }
    let mut out = Vec::new();
    let mut inner = 0u32;
    for &(m, e) in &chain {
        let gap = (m.count_ones() - inner.count_ones()) as usize;
        let mut block = vec![0; gap];
        block[0] = e;
        out.push(block);
        inner = m;
    }
    Ok(MzvIndex::new(out.into_iter().rev().flatten().collect::<Vec<i64>>()))
}

fn insert(family: &mut Family, mask: u32, e: i64) {
    match family.iter_mut().find(|(m, _)| *m == mask) {
        Some(slot) => slot.1 += e,
        None => family.push((mask, e)),
    }
}

/// Reduces `Σ_{m ∈ ℕ^d} ∏ (Σ_{i∈J} m_i)^{-e_J}` over a laminar family of subsets
/// to canonical MZVs. Nonpositive exponents are not allowed.
pub fn reduce_laminar(d: usize, exponents: &BTreeMap<u32, i64>) -> Result<MzvCombination> {
    let full = (1u32 << d) - 1;
    let violated = conv_violations(d, exponents);
    if !violated.is_empty() {
        return Err(Error::Divergent {
            what: format!("lattice sum {exponents:?}"),
            violated: violated.iter().map(|m| format!("subset {m:b}")).collect(),
        });
    }
    let start: Family = exponents.iter().filter(|(_, &e)| e != 0).map(|(&m, &e)| (m, e)).collect();
    if let Some(&(_, e)) = start.iter().find(|(_, e)| *e < 0) {
        return Err(Error::NonPositiveExponent(e));
    }
    if !is_laminar(&start) {
        return Err(Error::Precondition(format!("family {start:?} is not laminar")));
    }

    let mut pending: BTreeMap<Family, Rational> = BTreeMap::new();
    pending.insert(start, Rational::one());
    let mut chains: BTreeMap<MzvIndex, Rational> = BTreeMap::new();
    while let Some((family, coeff)) = pending.pop_first() {
        let Some((i, j)) = mergeable_pair(&family, full) else {
            *chains.entry(chain_index(&family, full)?).or_insert_with(Rational::zero) += coeff;
            continue;
        };
        let (a, ea) = family[i];
        let (b, eb) = family[j];
        let rest: Family = family
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, &f)| f)
            .collect();
        let terms = pf_expand(&[
            (LinearForm::from_mask(d, a), ea),
            (LinearForm::from_mask(d, b), eb),
        ])?;
        for t in terms {
            let mut next = rest.clone();
            for (form, e) in &t.factors {
                let mask = form.as_mask().expect("subset forms stay 0/1");
                insert(&mut next, mask, *e);
            }
            next.sort();
            *pending.entry(next).or_insert_with(Rational::zero) += &coeff * &t.coefficient;
        }
    }

    let mut out = MzvCombination::zero();
    for (index, c) in chains {
        if !c.is_zero() {
            out.add_scaled(&normalize_integer_args(&index)?, &c);
        }
    }
    Ok(out)
}

/// Canonical MZV combination equal to `ζ_MT(parts; outer)`.
pub fn reduce_mt(args: &MtArgs) -> Result<MzvCombination> {
    if !(1..=3).contains(&args.depth()) {
        return Err(Error::Precondition(format!("{args}: depth must be 1, 2 or 3")));
    }
    if let Some(&s) = args.parts.iter().chain([&args.outer]).find(|&&s| s < 0) {
        return Err(Error::NonPositiveExponent(s));
    }
    let violated = args.violations();
    if !violated.is_empty() {
        return Err(Error::Divergent { what: format!("{args}"), violated });
    }
    reduce_laminar(args.depth(), &args.exponents())
}

/// Sums in which only the last part and the outer exponent survive:
/// `Σ m_d^{-last} (m1+…+md)^{-outer}` with `zero_count` vanishing parts. The
/// number of ways to split `n - m_d` into the other parts turns this into one
/// integer-argument MZV, e.g. `(2, s3, s) ↦ ζ(s, 0, s3)`.
pub fn mt_base_counting(zero_count: usize, last_part: i64, outer: i64) -> Result<MzvCombination> {
    if !(1..=3).contains(&zero_count) {
        return Err(Error::Precondition(format!("zero count {zero_count} out of range")));
    }
    let mut parts = vec![0; zero_count];
    if last_part > 0 {
        parts.push(last_part);
    }
    let args = MtArgs::new(parts.clone(), outer);
    let violated = args.violations();
    if !violated.is_empty() {
        return Err(Error::Divergent { what: format!("{args}"), violated });
    }
    let mut index = vec![outer];
    index.extend(core::iter::repeat_n(0, zero_count - 1));
    if last_part > 0 {
        index.push(last_part);
    }
    normalize_integer_args(&MzvIndex::new(index))
}

/// A single `ζ(index)` as a combination, normalized if needed.
pub(crate) fn zeta(index: &[i64]) -> Result<MzvCombination> {
    let idx = MzvIndex::from(index);
    if idx.is_canonical() {
        return Ok(MzvCombination::from_monomial(Monomial::single(Factor::plain(idx)), Rational::one()));
    }
    normalize_integer_args(&idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn sym(e: &[i64]) -> MzvCombination {
        MzvCombination::symbol(MzvIndex::from(e))
    }

    #[test]
    fn one_one_one_is_twice_zeta_two_one() {
        let got = reduce_mt(&MtArgs::new([1, 1], 1)).unwrap();
        assert_eq!(got, sym(&[2, 1]).scaled(&int(2)));
    }

    #[test]
    fn leading_zero_part() {
        for s2 in 1..4 {
            for s in 2..5 {
                let got = reduce_mt(&MtArgs::new([0, s2], s)).unwrap();
                assert_eq!(got, zeta(&[s, s2]).unwrap());
            }
        }
    }

    #[test]
    fn all_parts_zero() {
        let got = reduce_mt(&MtArgs::new([0, 0, 0], 4)).unwrap();
        let mut want = sym(&[2]).scaled(&rat(1, 2));
        want.add_scaled(&sym(&[3]), &rat(-3, 2));
        want.add(&sym(&[4]));
        assert_eq!(got, want);
    }

    #[test]
    fn counting_base_cases() {
        let got = mt_base_counting(2, 2, 3).unwrap();
        let mut want = sym(&[2, 2]);
        want.sub(&sym(&[3, 1]));
        want.sub(&sym(&[3, 2]));
        assert_eq!(got, want);
        assert_eq!(got, reduce_mt(&MtArgs::new([0, 0, 2], 3)).unwrap());
        assert_eq!(mt_base_counting(3, 0, 4).unwrap(), reduce_mt(&MtArgs::new([0, 0, 0], 4)).unwrap());
        assert_eq!(mt_base_counting(1, 2, 3).unwrap(), reduce_mt(&MtArgs::new([0, 2], 3)).unwrap());
    }

    #[test]
    fn product_of_zetas_without_outer() {
        // ζ_MT(2,3;0) = ζ(2)ζ(3) = ζ(2,3) + ζ(3,2) + ζ(5)
        let got = reduce_mt(&MtArgs::new([2, 3], 0)).unwrap();
        let mut want = sym(&[2, 3]);
        want.add(&sym(&[3, 2]));
        want.add(&sym(&[5]));
        crate::testing::assert_same_value(&got, &want);
    }

    #[test]
    fn divergence_is_reported() {
        match reduce_mt(&MtArgs::new([1, 1], 0)) {
            Err(Error::Divergent { violated, .. }) => {
                assert!(violated.contains(&String::from("s1+s2+s > 2")));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn positive_parts_keep_weight_and_depth() {
        for a in 1..4 {
            for b in 1..4 {
                for c in 1..4 {
                    for s in 0..4 {
                        let args = MtArgs::new([a, b, c], s);
                        if !args.is_convergent() {
                            continue;
                        }
                        let out = reduce_mt(&args).unwrap();
                        for (idx, _) in out.canonical_terms() {
                            assert_eq!(idx.weight(), args.weight(), "{args} -> {idx}");
                            assert!(idx.depth() <= 3);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chain_families_map_directly() {
        let fam: BTreeMap<u32, i64> = [(0b010, 1), (0b011, 1), (0b111, 2)].into();
        assert_eq!(reduce_laminar(3, &fam).unwrap(), sym(&[2, 1, 1]));
    }

    #[test]
    fn non_laminar_rejected() {
        let fam: BTreeMap<u32, i64> = [(0b011, 2), (0b110, 2), (0b111, 2)].into();
        assert!(matches!(reduce_laminar(3, &fam), Err(Error::Precondition(_))));
    }
}
