//! Reductions against brute-force lattice sums.

use wittenmzv_core::mt::{reduce_mt, MtArgs};
use wittenmzv_core::mzv::normalize_integer_args;
use wittenmzv_core::numeric::{
    eval_combo, oracle_harmonic_difference, oracle_mt, oracle_mzv_sum, oracle_witten, NumericResult,
};
use wittenmzv_core::sl4::{case_a, case_b_limit, reduce_sl4, reduce_zeta3, tech_lemma, WittenArgs};
use wittenmzv_core::{MzvCombination, MzvIndex};

const N: usize = 192;

fn value(c: &MzvCombination) -> f64 {
    eval_combo(c, 1e-20).unwrap().value
}

#[track_caller]
fn agree(exact: &MzvCombination, oracle: &NumericResult, tol: f64, what: &str) {
    let v = value(exact);
    let slack = tol.max(4.0 * oracle.error_bound);
    assert!((v - oracle.value).abs() <= slack, "{what}: reduced {v}, oracle {} ± {}", oracle.value, oracle.error_bound);
}

fn tuples6(weight: i64) -> Vec<[i64; 6]> {
    let mut out = Vec::new();
    let w = weight as usize;
    for code in 0..(w + 1).pow(5) {
        let mut s = [0i64; 6];
        let mut c = code;
        for slot in s.iter_mut().take(5) {
            *slot = (c % (w + 1)) as i64;
            c /= w + 1;
        }
        s[5] = weight - s[..5].iter().sum::<i64>();
        if s[5] >= 0 && WittenArgs::sl4(s).unwrap().is_convergent() {
            out.push(s);
        }
    }
    out
}

#[test]
fn low_weight_sl4_tuples() {
    for w in 3..=5 {
        for s in tuples6(w) {
            let exact = reduce_sl4(s).unwrap();
            let o = oracle_witten(&WittenArgs::sl4(s).unwrap(), N, 3).unwrap();
            agree(&exact, &o, 1e-5, &format!("ζ_sl4{s:?}"));
        }
    }
}

#[test]
fn seven_slot_tuples() {
    let cases = [
        [1, 1, 1, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 2],
        [1, 0, 0, 1, 1, 1, 1],
        [0, 1, 0, 2, 0, 1, 1],
        [0, 0, 1, 0, 1, 2, 1],
        [2, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 2, 2],
        [1, 2, 0, 1, 0, 2, 0],
    ];
    for s in cases {
        let args = WittenArgs::zeta3(s).unwrap();
        let exact = reduce_zeta3(s).unwrap();
        let o = oracle_witten(&args, N, 3).unwrap();
        agree(&exact, &o, 1e-5, &format!("{args}"));
    }
}

#[test]
fn boundary_case_a() {
    for s1 in 1..=2 {
        for s4 in 2..=3 {
            for t in 2..=3 {
                let o = oracle_witten(&WittenArgs::sl4([s1, 0, 0, s4, t, 0]).unwrap(), N, 3).unwrap();
                agree(&case_a(s1, s4, t).unwrap(), &o, 1e-5, &format!("A({s1},{s4},{t})"));
            }
        }
    }
}

#[test]
fn boundary_limit_and_lemma() {
    for s in 1..=3 {
        for s4 in 2..=3 {
            let o = oracle_harmonic_difference(s, s4, 1, 600, 3).unwrap();
            let neg = NumericResult { value: -o.value, ..o };
            agree(&case_b_limit(s, s4).unwrap(), &neg, 1e-6, &format!("B({s},{s4})"));
        }
    }
    for (s, t) in [(1, 2), (2, 1), (2, 2), (3, 1), (1, 3), (2, 3)] {
        let o = oracle_harmonic_difference(s, 1, t, 600, 3).unwrap();
        agree(&tech_lemma(s, t).unwrap(), &o, 1e-5, &format!("lemma({s},{t})"));
    }
}

#[test]
fn mordell_tornheim() {
    let cases = [
        MtArgs::new([1, 1], 1),
        MtArgs::new([2, 1], 1),
        MtArgs::new([1, 2], 2),
        MtArgs::new([0, 2], 2),
        MtArgs::new([1, 1, 1], 1),
        MtArgs::new([1, 0, 2], 2),
        MtArgs::new([0, 0, 2], 3),
        MtArgs::new([2, 1, 0], 2),
    ];
    for m in cases {
        let o = oracle_mt(&m, N, 3).unwrap();
        agree(&reduce_mt(&m).unwrap(), &o, 1e-5, &format!("{m}"));
    }
}

#[test]
fn normalization_of_integer_arguments() {
    let mut checked = 0;
    for a in -2..=6i64 {
        for b in -2..=6i64 {
            for c in [None, Some(-2), Some(0), Some(1), Some(3)] {
                let mut e = vec![a, b];
                e.extend(c);
                let idx = MzvIndex::new(e.clone());
                if !idx.is_convergent() {
                    continue;
                }
                // keep the brute-force tail within reach of the fit
                let slack: i64 = e.iter().sum::<i64>() - e.len() as i64;
                if slack < 2 {
                    continue;
                }
                let exact = normalize_integer_args(&idx).unwrap();
                let o = oracle_mzv_sum(&e, 4000, 3).unwrap();
                agree(&exact, &o, 1e-6, &format!("{idx}"));
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn series_evaluation_matches_nested_sums() {
    use wittenmzv_core::numeric::eval_mzv;
    for w in 2..=6i64 {
        for a in 2..=w {
            for b in 0..=w - a {
                for c in 0..=w - a - b {
                    if a + b + c != w || (b == 0 && c > 0) {
                        continue;
                    }
                    let e: Vec<i64> = [a, b, c].into_iter().filter(|&x| x > 0).collect();
                    let idx = MzvIndex::new(e.clone());
                    let fast = eval_mzv(&idx, 1e-12).unwrap();
                    let slow = oracle_mzv_sum(&e, 20000, 3).unwrap();
                    assert!(fast.agrees_with(&slow, 1e-6), "{idx}: {} vs {} ± {}", fast.value, slow.value, slow.error_bound);
                }
            }
        }
    }
}

#[test]
fn oracle_error_does_not_grow_with_cutoff() {
    for s in [[1, 1, 1, 1, 1, 1], [0, 0, 0, 1, 1, 2], [2, 2, 2, 2, 2, 2], [1, 0, 1, 1, 1, 1]] {
        let args = WittenArgs::sl4(s).unwrap();
        let mut last = f64::INFINITY;
        for n in [32, 64, 128, 256] {
            let r = oracle_witten(&args, n, 3).unwrap();
            assert!(r.error_bound <= last * (1.0 + 1e-6), "{s:?} at N={n}: {} > {last}", r.error_bound);
            last = r.error_bound;
        }
    }
    let mut last = f64::INFINITY;
    for n in [64, 256, 1024, 4096] {
        let r = oracle_mzv_sum(&[2, 1, 1], n, 3).unwrap();
        assert!(r.error_bound <= last * (1.0 + 1e-6), "N={n}: {} > {last}", r.error_bound);
        last = r.error_bound;
    }
}
