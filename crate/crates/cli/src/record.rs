//! The serialized result of one reduction.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use wittenmzv_core::mt::{reduce_mt, MtArgs};
use wittenmzv_core::numeric::eval_combo;
use wittenmzv_core::sl4::{classify, Kind, Reducer, RegularityClass, WittenArgs};
use wittenmzv_core::{MzvCombination, MzvIndex, Rational};

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValueKind {
    Sl4,
    Zeta3,
    Mt,
}

impl ValueKind {
    pub fn parse(s: &str) -> Result<Self, Failure> {
        match s {
            "sl4" => Ok(ValueKind::Sl4),
            "zeta3" => Ok(ValueKind::Zeta3),
            "mt" => Ok(ValueKind::Mt),
            _ => Err(Failure::Usage(format!("unknown kind {s:?}; expected sl4, zeta3 or mt"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ValueKind::Sl4 => "sl4",
            ValueKind::Zeta3 => "zeta3",
            ValueKind::Mt => "mt",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coefficient {
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coefficient: Coefficient,
    pub index: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regularity {
    pub regular: bool,
    pub case: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Numeric {
    pub value: String,
    pub error_bound: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionRecord {
    pub kind: ValueKind,
    pub args: Vec<i64>,
    pub regular: Regularity,
    pub combination: Vec<Term>,
    pub numeric: Numeric,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<Vec<String>>,
}

/// Options that change the content of a record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecordOptions {
    pub digits: usize,
    pub trace: bool,
}

impl Default for RecordOptions {
    fn default() -> Self {
        RecordOptions { digits: 15, trace: false }
    }
}

fn pure_weight(c: &MzvCombination, w: i64) -> bool {
    c.canonical_terms().all(|(i, _)| i.weight() == w)
}

/// Reduces, evaluates and packages one value.
pub fn build(kind: ValueKind, args: &[i64], opts: RecordOptions) -> Result<ReductionRecord, Failure> {
    if args.iter().any(|&s| s < 0) {
        return Err(Failure::Usage(format!("arguments must be nonnegative, got {args:?}")));
    }
    let weight: i64 = args.iter().sum();
    let mut trace = None;
    let (combo, regular) = match kind {
        ValueKind::Sl4 | ValueKind::Zeta3 => {
            let core_kind = if kind == ValueKind::Sl4 { Kind::Sl4 } else { Kind::Zeta3 };
            let w = WittenArgs::new(core_kind, args.to_vec()).map_err(|e| Failure::Usage(e.to_string()))?;
            if !w.is_convergent() {
                return Err(w.divergence().into());
            }
            let mut r = if opts.trace { Reducer::with_trace() } else { Reducer::new() };
            let combo = match w.as_sl4() {
                Some(s) if kind == ValueKind::Sl4 => r.reduce_sl4(s)?,
                _ => r.reduce_zeta3(w.as_zeta3())?,
            };
            if opts.trace {
                trace = Some(r.take_trace().iter().map(ToString::to_string).collect());
            }
            let regular = match w.as_sl4() {
                Some(s) => match classify(&s)? {
                    RegularityClass::Regular => Regularity { regular: true, case: None },
                    RegularityClass::Irregular(c) => {
                        Regularity { regular: false, case: Some(c.name().to_string()) }
                    }
                },
                None => Regularity { regular: pure_weight(&combo, weight), case: None },
            };
            (combo, regular)
        }
        ValueKind::Mt => {
            let (outer, parts) = args
                .split_last()
                .filter(|(_, p)| (1..=3).contains(&p.len()))
                .ok_or_else(|| Failure::Usage(String::from("mt takes 2 to 4 arguments: parts then outer")))?;
            let m = MtArgs::new(parts.to_vec(), *outer);
            let combo = reduce_mt(&m)?;
            let regular = Regularity { regular: pure_weight(&combo, weight), case: None };
            (combo, regular)
        }
    };
    let target = 10f64.powi(-(opts.digits as i32) - 2);
    let value = eval_combo(&combo, target)?;
    Ok(ReductionRecord {
        kind,
        args: args.to_vec(),
        regular,
        combination: combo
            .canonical_terms()
            .map(|(i, c)| Term {
                coefficient: Coefficient { num: c.numer().to_string(), den: c.denom().to_string() },
                index: i.exponents().to_vec(),
            })
            .collect(),
        numeric: Numeric {
            value: value.to_decimal(opts.digits),
            error_bound: format!("{:.1e}", value.error_bound),
        },
        trace,
    })
}

impl ReductionRecord {
    /// The combination rebuilt from its serialized terms.
    pub fn combination(&self) -> Result<MzvCombination, Failure> {
        let mut out = MzvCombination::zero();
        for t in &self.combination {
            let parse = |s: &str| {
                s.parse::<BigInt>().map_err(|e| Failure::Internal(format!("bad coefficient {s:?}: {e}")))
            };
            let c = Rational::new(parse(&t.coefficient.num)?, parse(&t.coefficient.den)?);
            out.add_scaled(&MzvCombination::symbol(MzvIndex::new(t.index.clone())), &c);
        }
        Ok(out)
    }

    pub fn value(&self) -> f64 {
        self.numeric.value.parse().unwrap_or(f64::NAN)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn label(&self) -> String {
        let args: Vec<String> = self.args.iter().map(i64::to_string).collect();
        match self.kind {
            ValueKind::Sl4 => format!("ζ_sl4({})", args.join(",")),
            ValueKind::Zeta3 => format!("ζ_3({})", args.join(",")),
            ValueKind::Mt => {
                let (outer, parts) = args.split_last().expect("mt records have arguments");
                format!("ζ_MT({};{outer})", parts.join(","))
            }
        }
    }

    /// Human-readable multi-line rendering.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let class = match (&self.regular.regular, &self.regular.case) {
            (_, Some(c)) => format!("irregular ({c})"),
            (true, None) => String::from("regular"),
            (false, None) => String::from("mixed weight"),
        };
        let _ = writeln!(s, "{} [{class}]", self.label());
        let combo = self.combination().map(|c| c.to_string()).unwrap_or_default();
        let _ = writeln!(s, "  = {combo}");
        let _ = writeln!(s, "  ≈ {} (± {})", self.numeric.value, self.numeric.error_bound);
        if let Some(trace) = &self.trace {
            for line in trace {
                let _ = writeln!(s, "  | {line}");
            }
        }
        s
    }
}
