use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};

/// Least-squares limit of partial sums `S(K)` as `K → ∞`, fitting
/// `S(K) = S∞ + Σ_{k=1}^{orders} Σ_{j=0}^{log_powers} c_{kj} (ln K)^j / K^k`.
///
/// `samples` are `(K, S(K))`; the basis is rescaled by the largest `K` for
/// conditioning, which leaves the fitted constant unchanged.
pub fn extrapolate_tail(samples: &[(f64, f64)], orders: usize, log_powers: usize) -> f64 {
    let cols = 1 + orders * (log_powers + 1);
    if samples.len() < cols {
        return samples.last().map_or(0.0, |s| s.1);
    }
    let kmax = samples.iter().map(|s| s.0).fold(1.0, f64::max);
    let mut data = Vec::with_capacity(samples.len() * cols);
    for &(k, _) in samples {
        let u = kmax / k;
        let l = libm::log(k / kmax);
        data.push(1.0);
        for order in 1..=orders {
            for j in 0..=log_powers {
                data.push(libm::pow(u, order as f64) * libm::pow(l, j as f64));
            }
        }
    }
    let a = DMatrix::from_row_slice(samples.len(), cols, &data);
    let b = DVector::from_iterator(samples.len(), samples.iter().map(|s| s.1));
    let svd = a.svd(true, true);
    match svd.solve(&b, 1e-14) {
        Ok(x) => x[0],
        Err(_) => samples.last().map_or(0.0, |s| s.1),
    }
}
