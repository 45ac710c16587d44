//! Verification suites: published values and randomized oracle agreement.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use wittenmzv_core::mzv::canonicalize;
use wittenmzv_core::numeric::{oracle_witten, Evaluator};
use wittenmzv_core::sl4::{reduce_sl4, reduce_zeta3, Reducer, WittenArgs};
use wittenmzv_core::{MzvCombination, MzvIndex, Rational};

use crate::Failure;

/// `(numerator, denominator, factors)`: one product term of a closed form.
pub type ProductTerm = (i64, i64, &'static [&'static [i64]]);

const Z2: &[&[i64]] = &[&[2]];
const Z3: &[&[i64]] = &[&[3]];
const Z2_2: &[&[i64]] = &[&[2], &[2]];
const Z2_6: &[&[i64]] = &[&[2], &[2], &[2], &[2], &[2], &[2]];

/// Closed form `a ζ(2) + b ζ(3) + c ζ(2)²` of the weight-four census.
pub struct CensusLine {
    pub tuples: &'static [[i64; 6]],
    pub form: [(i64, i64); 3],
    /// Grouping differs from the published list; see the README.
    pub corrected: bool,
}

pub const WEIGHT_FOUR: &[CensusLine] = &[
    CensusLine { tuples: &[[0, 0, 0, 0, 0, 4]], form: [(1, 2), (-3, 2), (2, 5)], corrected: false },
    CensusLine { tuples: &[[0, 0, 0, 2, 2, 0]], form: [(0, 1), (3, 1), (-1, 1)], corrected: false },
    CensusLine {
        tuples: &[[0, 0, 0, 0, 1, 3], [0, 0, 0, 1, 0, 3]],
        form: [(1, 1), (-1, 1), (-1, 10)],
        corrected: false,
    },
    CensusLine {
        tuples: &[[0, 0, 0, 0, 2, 2], [0, 0, 0, 2, 0, 2]],
        form: [(0, 1), (1, 1), (-3, 10)],
        corrected: false,
    },
    CensusLine {
        tuples: &[[1, 0, 0, 0, 1, 2], [0, 0, 1, 1, 0, 2]],
        form: [(0, 1), (1, 1), (-1, 5)],
        corrected: false,
    },
    CensusLine {
        tuples: &[[1, 0, 0, 0, 2, 1], [0, 0, 1, 2, 0, 1]],
        form: [(0, 1), (2, 1), (-1, 2)],
        corrected: false,
    },
    CensusLine {
        tuples: &[[0, 0, 1, 0, 0, 3], [0, 1, 0, 0, 0, 3], [1, 0, 0, 0, 0, 3]],
        form: [(-1, 1), (2, 1), (-1, 10)],
        corrected: false,
    },
    CensusLine { tuples: &[[0, 1, 0, 1, 1, 1]], form: [(0, 1), (0, 1), (7, 10)], corrected: false },
    CensusLine {
        tuples: &[[1, 0, 0, 1, 2, 0], [0, 0, 1, 2, 1, 0]],
        form: [(0, 1), (0, 1), (7, 10)],
        corrected: true,
    },
    CensusLine { tuples: &[[1, 1, 1, 0, 0, 1]], form: [(0, 1), (0, 1), (12, 5)], corrected: false },
    CensusLine { tuples: &[[0, 0, 0, 1, 1, 2]], form: [(0, 1), (0, 1), (1, 10)], corrected: false },
    CensusLine {
        tuples: &[[0, 0, 0, 1, 2, 1], [0, 0, 0, 2, 1, 1]],
        form: [(0, 1), (0, 1), (1, 5)],
        corrected: true,
    },
    CensusLine { tuples: &[[1, 0, 1, 1, 1, 0]], form: [(0, 1), (0, 1), (17, 10)], corrected: false },
    CensusLine {
        tuples: &[[1, 0, 1, 0, 0, 2], [0, 1, 1, 0, 0, 2], [1, 1, 0, 0, 0, 2]],
        form: [(0, 1), (0, 1), (4, 5)],
        corrected: false,
    },
    CensusLine {
        tuples: &[[1, 0, 0, 1, 1, 1], [0, 0, 1, 1, 1, 1]],
        form: [(0, 1), (0, 1), (1, 2)],
        corrected: false,
    },
    CensusLine {
        tuples: &[[0, 1, 0, 1, 0, 2], [1, 0, 0, 1, 0, 2], [0, 1, 0, 0, 1, 2], [0, 0, 1, 0, 1, 2]],
        form: [(0, 1), (0, 1), (2, 5)],
        corrected: false,
    },
    CensusLine {
        tuples: &[[1, 1, 0, 0, 1, 1], [1, 0, 1, 1, 0, 1], [1, 0, 1, 0, 1, 1], [0, 1, 1, 1, 0, 1]],
        form: [(0, 1), (0, 1), (6, 5)],
        corrected: false,
    },
];

pub enum Target {
    Sl4([i64; 6]),
    Zeta3([i64; 7]),
}

/// A higher-weight value with its decimal expansion and closed form.
pub struct Golden {
    pub target: Target,
    pub decimal: f64,
    pub form: &'static [ProductTerm],
}

pub const GOLDENS: &[Golden] = &[
    Golden {
        target: Target::Sl4([1, 1, 0, 1, 1, 1]),
        decimal: 0.6150150376,
        form: &[(5, 2, &[&[5]]), (-1, 1, &[&[2], &[3]])],
    },
    Golden {
        target: Target::Sl4([0, 1, 1, 1, 1, 1]),
        decimal: 0.6150150376,
        form: &[(5, 2, &[&[5]]), (-1, 1, &[&[2], &[3]])],
    },
    Golden {
        target: Target::Sl4([1, 0, 1, 1, 1, 1]),
        decimal: 0.4219127176,
        form: &[(-3, 2, &[&[5]]), (1, 1, &[&[2], &[3]])],
    },
    Golden {
        target: Target::Sl4([1, 1, 1, 1, 1, 1]),
        decimal: 0.2617453537,
        form: &[(-62, 105, &[&[2], &[2], &[2]]), (2, 1, &[&[3], &[3]])],
    },
    Golden {
        target: Target::Zeta3([1, 1, 1, 1, 1, 1, 1]),
        decimal: 0.08840016918,
        form: &[(21, 8, &[&[7]]), (-3, 2, &[&[2], &[5]])],
    },
    Golden { target: Target::Sl4([2, 2, 2, 2, 2, 2]), decimal: 0.0083233212, form: &[(368, 875875, Z2_6)] },
    Golden {
        target: Target::Sl4([1, 2, 3, 3, 2, 1]),
        decimal: 0.0129650292,
        form: &[
            (1, 1, &[&[2], &[8, 2]]),
            (811324, 238875, Z2_6),
            (-5, 2, &[&[2], &[5], &[5]]),
            (-37, 2, &[&[3], &[9]]),
            (-35, 1, &[&[5], &[7]]),
            (-2, 1, &[&[7], &[2], &[3]]),
            (37, 4, &[&[10, 2]]),
        ],
    },
    Golden {
        target: Target::Sl4([3, 2, 1, 1, 2, 3]),
        decimal: 0.0056078053,
        form: &[
            (10, 1, &[&[2], &[8, 2]]),
            (-120112, 53625, Z2_6),
            (-6, 1, &[&[2], &[5], &[5]]),
            (44, 1, &[&[3], &[9]]),
            (40, 1, &[&[5], &[7]]),
            (-20, 1, &[&[7], &[2], &[3]]),
            (-22, 1, &[&[10, 2]]),
        ],
    },
];

/// Canonical form of `Σ c · ∏ ζ(index)`.
pub fn closed_form(terms: &[ProductTerm]) -> Result<MzvCombination, Failure> {
    let mut raw = MzvCombination::zero();
    for &(n, d, factors) in terms {
        let p = MzvCombination::product(factors.iter().map(|f| MzvIndex::from(*f)));
        raw.add_scaled(&p, &Rational::new(n.into(), d.into()));
    }
    Ok(canonicalize(&raw)?)
}

impl CensusLine {
    pub fn closed_form(&self) -> Result<MzvCombination, Failure> {
        let [a, b, c] = self.form;
        closed_form(&[(a.0, a.1, Z2), (b.0, b.1, Z3), (c.0, c.1, Z2_2)])
    }
}

impl Target {
    pub fn label(&self) -> String {
        let join = |s: &[i64]| s.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        match self {
            Target::Sl4(s) => format!("ζ_sl4({})", join(s)),
            Target::Zeta3(s) => format!("ζ_3({})", join(s)),
        }
    }

    pub fn reduce(&self) -> Result<MzvCombination, Failure> {
        Ok(match self {
            Target::Sl4(s) => reduce_sl4(*s)?,
            Target::Zeta3(s) => reduce_zeta3(*s)?,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub label: String,
    pub got: f64,
    pub want: f64,
    pub diff: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), cases: Vec::new() }
    }

    fn check(&mut self, label: String, got: f64, want: f64, tolerance: f64) {
        let diff = (got - want).abs();
        self.cases.push(CaseResult { label, got, want, diff, tolerance, pass: diff <= tolerance });
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.pass).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            let _ = writeln!(
                s,
                "{} {:<40} got {:.12} want {:.12} diff {:.1e} (tol {:.0e})",
                if c.pass { "PASS" } else { "FAIL" },
                c.label,
                c.got,
                c.want,
                c.diff,
                c.tolerance
            );
        }
        let _ = writeln!(s, "{}: {} cases, {} failed", self.suite, self.cases.len(), self.failures());
        s
    }
}

/// Every published value: the weight-four census against its closed forms,
/// and the higher-weight goldens against both their decimals and closed forms.
pub fn paper_suite(tolerance: f64) -> Result<Report, Failure> {
    let mut report = Report::new("paper");
    let mut ev = Evaluator::new(200);
    let mut reducer = Reducer::new();
    for line in WEIGHT_FOUR {
        let want = ev.combo(&line.closed_form()?)?.value;
        for s in line.tuples {
            let got = ev.combo(&reducer.reduce_sl4(*s)?)?.value;
            let note = if line.corrected { " (regrouped)" } else { "" };
            report.check(format!("{}{note}", Target::Sl4(*s).label()), got, want, tolerance);
        }
    }
    for g in GOLDENS {
        let got = ev.combo(&g.target.reduce()?)?.value;
        report.check(g.target.label(), got, g.decimal, tolerance);
        let form = ev.combo(&closed_form(g.form)?)?.value;
        report.check(format!("{} closed form", g.target.label()), got, form, tolerance);
    }
    Ok(report)
}

/// A uniformly drawn convergent tuple of weight at most `max_weight`.
fn random_tuple<const K: usize>(rng: &mut ChaCha8Rng, max_weight: i64) -> [i64; K] {
    loop {
        let mut s = [0i64; K];
        for x in s.iter_mut() {
            *x = rng.random_range(0..=3);
        }
        let w: i64 = s.iter().sum();
        if w > max_weight {
            continue;
        }
        let ok = match K {
            6 => WittenArgs::new(wittenmzv_core::sl4::Kind::Sl4, s.to_vec()),
            _ => WittenArgs::new(wittenmzv_core::sl4::Kind::Zeta3, s.to_vec()),
        }
        .map(|a| a.is_convergent())
        .unwrap_or(false);
        if ok {
            return s;
        }
    }
}

/// Cutoff of the brute-force sums in the oracle suite.
pub const ORACLE_CUTOFF: usize = 160;

/// Reductions of seeded random tuples against brute-force lattice sums,
/// alternating six- and seven-slot tuples.
pub fn oracle_suite(samples: usize, seed: u64, tolerance: f64) -> Result<Report, Failure> {
    let mut report = Report::new("oracle");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ev = Evaluator::new(160);
    let mut reducer = Reducer::new();
    for i in 0..samples {
        let (target, args) = if i % 2 == 0 {
            let s = random_tuple::<6>(&mut rng, 8);
            (Target::Sl4(s), WittenArgs::sl4(s)?)
        } else {
            let s = random_tuple::<7>(&mut rng, 8);
            (Target::Zeta3(s), WittenArgs::zeta3(s)?)
        };
        let combo = match &target {
            Target::Sl4(s) => reducer.reduce_sl4(*s)?,
            Target::Zeta3(s) => reducer.reduce_zeta3(*s)?,
        };
        let got = ev.combo(&combo)?.value;
        let oracle = oracle_witten(&args, ORACLE_CUTOFF, 3)?;
        report.check(target.label(), got, oracle.value, tolerance);
    }
    Ok(report)
}
