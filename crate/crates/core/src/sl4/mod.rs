//! Reduction of `ζ_sl4(s1, …, s6)` and `ζ_3(s1, …, s7)` at nonnegative
//! integers to canonical MZV combinations.
//!
//! A tuple is first classified. The nine irregular zero patterns have direct
//! closed forms of mixed weight; every other tuple is split by partial
//! fractions until only chains, Mordell–Tornheim sums and two boundary
//! lemmas remain.

mod args;
mod lemmas;
mod reducer;
mod steps;

pub use args::{
    classify, sl4_to_zeta3, zeta3_to_sl4, IrregularCase, Kind, RegularityClass, Tuple, WittenArgs,
};
pub use lemmas::{case_a, case_b_limit, tech_lemma, tech_lemma_regularized, tech_lemma_t_residue};
pub use reducer::{reduce, reduce_sl4, reduce_zeta3, Reducer, TraceEntry};
pub use steps::{
    expand_slots, step_i, step_ii, step_ii1_first, step_ii1_second, step_ii2, step_ii21, step_ii22,
    zeta3_symmetrize, Terms6, Terms7,
};
