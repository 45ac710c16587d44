use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use super::args::{classify, IrregularCase, RegularityClass, Tuple, WittenArgs};
use super::lemmas::{case_a, case_b_limit, tech_lemma};
use super::steps::{
    binom, parity, step_i, step_ii, step_ii1_first, step_ii1_second, step_ii2, step_ii21,
    step_ii22, zeta3_symmetrize, Terms6,
};
use crate::arith::Rational;
use crate::mt::{reduce_mt, zeta, MtArgs};
use crate::mzv::MzvCombination;
use crate::{Error, Result};

/// One applied rule.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceEntry {
    pub depth: usize,
    pub rule: &'static str,
    pub args: Vec<i64>,
    pub note: String,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:indent$}{} {}", "", self.rule, Tuple(&self.args), indent = 2 * self.depth)?;
        if !self.note.is_empty() {
            write!(f, ": {}", self.note)?;
        }
        Ok(())
    }
}

/// Reduction driver with a write-once memo of finished six-slot values and an
/// optional rule trace.
#[derive(Default)]
pub struct Reducer {
    memo: BTreeMap<[i64; 6], MzvCombination>,
    trace: Option<Vec<TraceEntry>>,
    depth: usize,
    max_depth: usize,
}

impl Reducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_trace() -> Self {
        Reducer { trace: Some(Vec::new()), ..Self::default() }
    }

    pub fn trace(&self) -> &[TraceEntry] {
        self.trace.as_deref().unwrap_or(&[])
    }

    pub fn take_trace(&mut self) -> Vec<TraceEntry> {
        self.trace.as_mut().map(core::mem::take).unwrap_or_default()
    }

    /// Deepest nesting of six-slot reductions seen so far.
    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    fn note(&mut self, rule: &'static str, args: &[i64], note: impl FnOnce() -> String) {
        let depth = self.depth;
        if let Some(t) = self.trace.as_mut() {
            t.push(TraceEntry { depth, rule, args: args.to_vec(), note: note() });
        }
    }

    fn sum_children(&mut self, terms: Terms6) -> Result<MzvCombination> {
        let mut out = MzvCombination::zero();
        for (c, t) in terms {
            out.add_scaled(&self.reduce_sl4(t)?, &c);
        }
        Ok(out)
    }

    /// `ζ_sl4(s)` as canonical MZVs.
    pub fn reduce_sl4(&mut self, s: [i64; 6]) -> Result<MzvCombination> {
        let args = WittenArgs::sl4(s)?;
        if !args.is_convergent() {
            return Err(args.divergence());
        }
        if let Some(hit) = self.memo.get(&s) {
            return Ok(hit.clone());
        }
        self.depth += 1;
        self.max_depth = self.max_depth.max(self.depth);
        let out = self.dispatch(s);
        self.depth -= 1;
        let out = out?;
        self.memo.insert(s, out.clone());
        Ok(out)
    }

    fn dispatch(&mut self, s: [i64; 6]) -> Result<MzvCombination> {
        if let RegularityClass::Irregular(case) = classify(&s)? {
            self.note("irregular", &s, || String::from(case.name()));
            return self.reduce_irregular(s, case);
        }
        let [s1, s2, s3, s4, s5, _] = s;
        if s1 >= 1 && s5 >= 1 {
            let terms = step_ii(&s)?;
            self.note("step_ii", &s, || format!("{} terms", terms.len()));
            return self.sum_children(terms);
        }
        if s5 == 0 {
            return self.step_ii1(s);
        }
        if s4 == 0 {
            self.step_ii21(s)
        } else if s3 == 0 && s2 >= 1 {
            self.step_ii22(s)
        } else if s2 == 0 && s3 == 0 {
            self.step_ii23(s)
        } else {
            let terms = step_ii2(&s)?;
            self.note("step_ii2", &s, || format!("{} terms", terms.len()));
            self.sum_children(terms)
        }
    }

    /// `ζ_3(s)`: remove one pair form, permute into six slots, reduce.
    pub fn reduce_zeta3(&mut self, s: [i64; 7]) -> Result<MzvCombination> {
        let args = WittenArgs::zeta3(s)?;
        if !args.is_convergent() {
            return Err(args.divergence());
        }
        let terms = step_i(&s)?;
        self.note("step_i", &s, || format!("{} terms", terms.len()));
        let mut out = MzvCombination::zero();
        for (c, t) in terms {
            let six = zeta3_symmetrize(&t)?;
            self.note("symmetrize", &t, || format!("{}", Tuple(&six)));
            out.add_scaled(&self.reduce_sl4(six)?, &c);
        }
        Ok(out)
    }

    /// Closed forms for the nine irregular families.
    pub fn reduce_irregular(&mut self, s: [i64; 6], case: IrregularCase) -> Result<MzvCombination> {
        use IrregularCase::*;
        let [s1, s2, s3, s4, s5, s6] = s;
        match case {
            Irr1a => zeta(&[s6, s4, 0]),
            Irr1b => zeta(&[s6, s5, 0]),
            Irr2a => zeta(&[s6, 0, s1]),
            Irr2b => zeta(&[s6, 0, s2]),
            Irr2c => zeta(&[s6, 0, s3]),
            Irr3 => zeta(&[s6, 0, 0]),
            Irr4b => {
                let terms = step_ii(&s)?;
                self.note("step_ii", &s, || format!("{} terms", terms.len()));
                self.sum_children(terms)
            }
            Irr4a => {
                // m1 <-> m3 swaps m1+m2 with m2+m3
                let r = [s3, s2, s1, s5, s4, s6];
                self.note("reflect", &s, || format!("{}", Tuple(&r)));
                self.reduce_sl4(r)
            }
            Irr5 => {
                let (a, b) = (s4, s5);
                let mut out = zeta(&[a, b, 0])?;
                out.add(&zeta(&[b, a, 0])?);
                out.add(&zeta(&[a + b, 0])?);
                Ok(out)
            }
        }
    }

    /// `s5 = 0`: merge `m1, m2`, then `m1+m2, m3`, ending in `ζ(s6,s4,s2)` or
    /// `ζ_MT(s2,s3,0;s6)`.
    pub fn step_ii1(&mut self, s: [i64; 6]) -> Result<MzvCombination> {
        let [s1, s2, s3, s4, s5, s6] = s;
        if s5 != 0 {
            return Err(Error::Precondition(format!("step (ii.1) needs s5 = 0, got {}", Tuple(&s))));
        }
        if s1 >= 1 && s2 >= 1 {
            let terms = step_ii1_first(&s)?;
            self.note("step_ii1", &s, || format!("merge m1, m2: {} terms", terms.len()));
            let mut out = MzvCombination::zero();
            for (c, t) in terms {
                out.add_scaled(&self.step_ii1(t)?, &c);
            }
            return Ok(out);
        }
        if s1 >= 1 {
            // s2 = 0; the sum is symmetric in m1, m2 when s5 = 0
            return self.step_ii1([s2, s1, s3, s4, s5, s6]);
        }
        if s2 == 0 {
            return Err(Error::Precondition(format!(
                "{} is irregular and must not reach step (ii.1)",
                Tuple(&s)
            )));
        }
        if s3 >= 1 && s4 >= 1 {
            let terms = step_ii1_second(&s)?;
            self.note("step_ii1", &s, || format!("merge m1+m2, m3: {} terms", terms.len()));
            let mut out = MzvCombination::zero();
            for (c, t) in terms {
                out.add_scaled(&self.step_ii1(t)?, &c);
            }
            return Ok(out);
        }
        if s3 == 0 {
            self.note("base", &s, || format!("ζ({s6},{s4},{s2})"));
            zeta(&[s6, s4, s2])
        } else {
            self.note("base", &s, || format!("ζ_MT({s2},{s3},0;{s6})"));
            reduce_mt(&MtArgs::new([s2, s3, 0], s6))
        }
    }

    /// `s1 = s4 = 0`: merge `m2, m3` into `m2+m3`.
    pub fn step_ii21(&mut self, s: [i64; 6]) -> Result<MzvCombination> {
        let [s1, s2, s3, s4, s5, s6] = s;
        if s1 != 0 || s4 != 0 || s5 < 1 {
            return Err(Error::Precondition(format!("step (ii.2.1) does not apply to {}", Tuple(&s))));
        }
        let base = |t: [i64; 6]| -> Result<MzvCombination> {
            let [_, b2, b3, _, b5, b6] = t;
            if b3 == 0 {
                zeta(&[b6, b5, b2])
            } else if b2 == 0 {
                zeta(&[b6, b5, b3])
            } else {
                Err(Error::Precondition(format!("{} is not a base of step (ii.2.1)", Tuple(&t))))
            }
        };
        if s2 >= 1 && s3 >= 1 {
            let terms = step_ii21(&s)?;
            self.note("step_ii21", &s, || format!("{} terms", terms.len()));
            let mut out = MzvCombination::zero();
            for (c, t) in terms {
                out.add_scaled(&base(t)?, &c);
            }
            return Ok(out);
        }
        self.note("base", &s, || String::from("depth-three chain"));
        base([s1, s2, s3, s4, s5, s6])
    }

    /// `s1 = s3 = 0`: signed expansion with `x1 = -m2`.
    pub fn step_ii22(&mut self, s: [i64; 6]) -> Result<MzvCombination> {
        let terms = step_ii22(&s)?;
        self.note("step_ii22", &s, || format!("{} terms", terms.len()));
        let mut out = MzvCombination::zero();
        for (c, t) in terms {
            let [_, b2, _, b4, b5, b6] = t;
            let piece = if b2 == 0 {
                self.step_ii23(t)?
            } else if b4 == 0 {
                zeta(&[b6, b5, b2])?
            } else if b5 == 0 {
                zeta(&[b6, b4, b2])?
            } else {
                return Err(Error::Precondition(format!(
                    "unexpected term {} in step (ii.2.2)",
                    Tuple(&t)
                )));
            };
            out.add_scaled(&piece, &c);
        }
        Ok(out)
    }

    /// `s1 = s2 = s3 = 0`: expansion with `x1 = -(m2+m3)`, `x2 = m1+m2+m3`. The
    /// two divergent boundary terms are taken together as one limit.
    pub fn step_ii23(&mut self, s: [i64; 6]) -> Result<MzvCombination> {
        let [s1, s2, s3, s4, s5, s6] = s;
        if s1 != 0 || s2 != 0 || s3 != 0 || s4 < 1 || s5 < 1 || s6 < 1 {
            return Err(Error::Precondition(format!("step (ii.2.3) does not apply to {}", Tuple(&s))));
        }
        let args = WittenArgs::sl4(s)?;
        if !args.is_convergent() {
            return Err(args.divergence());
        }
        let (s4, s5) = if s5 > s4 {
            self.note("reflect", &s, || format!("{}", Tuple(&[0, 0, 0, s5, s4, s6])));
            (s5, s4)
        } else {
            (s4, s5)
        };
        self.note("step_ii23", &[0, 0, 0, s4, s5, s6], String::new);
        let mut out = MzvCombination::zero();
        for a5 in 0..=s5 - 2 {
            let c = binom(s6 + a5 - 1, a5) * parity(a5);
            out.add_scaled(&case_a(s6 + a5, s4, s5 - a5)?, &c);
        }
        for a6 in 0..=s6 - 2 {
            let c = binom(s5 + a6 - 1, a6) * parity(s5);
            out.add_scaled(&zeta(&[s6 - a6, s4, s5 + a6])?, &c);
        }
        let s = s5 + s6 - 1;
        let limit = if s4 >= 2 {
            case_b_limit(s, s4)?
        } else {
            tech_lemma(s, 1)?.scaled(&-Rational::one())
        };
        out.add_scaled(&limit, &(binom(s5 + s6 - 2, s5 - 1) * parity(s5)));
        Ok(out)
    }
}

/// `ζ_sl4(s)` with a fresh reducer.
pub fn reduce_sl4(s: [i64; 6]) -> Result<MzvCombination> {
    Reducer::new().reduce_sl4(s)
}

/// `ζ_3(s)` with a fresh reducer.
pub fn reduce_zeta3(s: [i64; 7]) -> Result<MzvCombination> {
    Reducer::new().reduce_zeta3(s)
}

/// Reduces either kind of tuple.
pub fn reduce(args: &WittenArgs) -> Result<MzvCombination> {
    let mut r = Reducer::new();
    match args.as_sl4() {
        Some(s) if args.kind() == super::args::Kind::Sl4 => r.reduce_sl4(s),
        _ => r.reduce_zeta3(args.as_zeta3()),
    }
}
