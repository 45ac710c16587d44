//! Numeric evaluation of canonical MZV combinations and brute-force lattice
//! oracles used to check reductions.

mod eval;
mod fit;
mod fixed;
mod oracle;

pub use eval::{eval_combo, eval_mzv, Evaluator};
pub use fit::extrapolate_tail;
pub use fixed::Fixed;
pub use oracle::{
    oracle_harmonic_difference, oracle_lattice_sum, oracle_mt, oracle_mzv_sum, oracle_witten,
    DEFAULT_CUTOFF, DEFAULT_LEVELS,
};

/// How a [`NumericResult`] was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    AcceleratedSeries,
    TruncatedSumExtrapolation,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::AcceleratedSeries => "accelerated-series",
            Method::TruncatedSumExtrapolation => "truncated-sum+extrapolation",
        }
    }
}

/// A value with an engineering error bound.
#[derive(Clone, PartialEq, Debug)]
pub struct NumericResult {
    pub value: f64,
    pub error_bound: f64,
    pub method: Method,
    /// Full-precision value, present for series evaluations.
    pub fixed: Option<Fixed>,
}

impl NumericResult {
    /// Decimal expansion with `digits` places after the point.
    pub fn to_decimal(&self, digits: usize) -> alloc::string::String {
        match &self.fixed {
            Some(f) => f.to_decimal(digits),
            None => alloc::format!("{:.*}", digits, self.value),
        }
    }

    /// `|self - other|` does not exceed the sum of both bounds plus `slack`.
    pub fn agrees_with(&self, other: &NumericResult, slack: f64) -> bool {
        libm::fabs(self.value - other.value) <= self.error_bound + other.error_bound + slack
    }
}
