use alloc::format;
use alloc::vec::Vec;

use num_traits::One;

use super::{normalize_integer_args, stuffle, stuffle_product, Factor, Monomial, MzvCombination};
use crate::arith::Rational;
use crate::{Error, Result};

/// `ζ̄(1, tail) = T·ζ(tail) - (ζ̄(1) * ζ(tail) - ζ̄(1, tail))`; the bracket has
/// no regularized terms when `tail` converges.
fn expand_factor(f: &Factor) -> Result<MzvCombination> {
    let e = f.index.exponents();
    if e[0] != 1 {
        return Err(Error::UnsupportedRegularization(format!("{f}")));
    }
    if e.len() == 1 {
        return Ok(MzvCombination::t());
    }
    let tail = Factor::plain(&e[1..]);
    if !tail.index.is_convergent() {
        return Err(Error::UnsupportedRegularization(format!(
            "{f}: tail {} diverges",
            tail.index
        )));
    }
    let mut rest = stuffle(&Factor::regularized([1]), &tail)?;
    rest.sub(&MzvCombination::from_monomial(Monomial::single(f.clone()), Rational::one()));
    debug_assert!(rest.terms().all(|(m, _)| m.factors().iter().all(|x| !x.regularized)));

    let mut out = MzvCombination::t().mul(&MzvCombination::from_monomial(
        Monomial::single(tail),
        Rational::one(),
    ));
    out.sub(&rest);
    Ok(out)
}

/// Replaces every regularized factor by a polynomial in `T` with convergent
/// coefficients. Combinations without regularized factors come back unchanged.
pub fn expand_regularized(combo: &MzvCombination) -> Result<MzvCombination> {
    let mut out = MzvCombination::zero();
    for (m, c) in combo.terms() {
        let (reg, plain): (Vec<&Factor>, Vec<&Factor>) =
            m.factors().iter().partition(|f| f.regularized);
        let mut acc = MzvCombination::from_monomial(
            Monomial::new(m.t_power(), plain.into_iter().cloned().collect()),
            c.clone(),
        );
        for f in reg {
            acc = acc.mul(&expand_factor(f)?);
        }
        out.add(&acc);
    }
    Ok(out)
}

/// Brings a combination to canonical form: single plain symbols with positive
/// arguments and leading entry at least two.
///
/// Regularized factors are expanded first and the result must be free of `T`.
/// Integer arguments are normalized and products are expanded by stuffle.
pub fn canonicalize(combo: &MzvCombination) -> Result<MzvCombination> {
    let expanded = expand_regularized(combo)?;
    if expanded.max_t_power() > 0 {
        let k = expanded.max_t_power();
        return Err(Error::DivergentResidue(format!(
            "coefficient of T^{k} is {}",
            expanded.t_coefficient(k)
        )));
    }
    let mut out = MzvCombination::zero();
    for (m, c) in expanded.terms() {
        if m.as_canonical().is_some() {
            out.add_term(m.clone(), c.clone());
            continue;
        }
        let mut acc = MzvCombination::constant(c.clone());
        for f in m.factors() {
            let normal = normalize_integer_args(&f.index)?;
            acc = stuffle_product(&acc, &normal)?;
        }
        out.add(&acc);
    }
    Ok(out)
}
