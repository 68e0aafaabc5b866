use std::f64::consts::PI;

use super::{SpectraError, Spectrum, SIGN_TOL};
use crate::graph::cycle_negative_count;
use crate::InertiaTriple;

/// `λ_j = a₁ + a₂ωʲ + … + aₙω^{(n−1)j}` for `j = 1..=n`, `ω = e^{2πi/n}`,
/// in that order. Fails if an imaginary part exceeds `1e-9 · ‖row‖₁`, which
/// means the circulant was not symmetric.
pub fn circulant_eigenvalues_indexed(first_row: &[f64]) -> Result<Vec<f64>, SpectraError> {
    let n = first_row.len();
    let l1: f64 = first_row.iter().map(|x| x.abs()).sum();
    let bound = 1e-9 * l1;
    (1..=n)
        .map(|j| {
            let (mut re, mut im) = (0.0, 0.0);
            for (k, &a) in first_row.iter().enumerate() {
                // reduce k·j mod n first so the angle stays in [0, 2π)
                let angle = 2.0 * PI * ((k * j) % n) as f64 / n as f64;
                re += a * angle.cos();
                im += a * angle.sin();
            }
            if im.abs() > bound {
                Err(SpectraError::NonRealSpectrum(im))
            } else {
                Ok(re)
            }
        })
        .collect()
}

/// Circulant spectrum as a sorted [`Spectrum`].
pub fn circulant_eigenvalues(first_row: &[f64]) -> Result<Spectrum, SpectraError> {
    Ok(Spectrum::new(circulant_eigenvalues_indexed(first_row)?, SIGN_TOL))
}

/// Closed-form `λ_j` of `Δ(C_n)`, `j = 1..=n`:
///
/// ```text
/// λ_j = 2cos(πj) · ( [n even]·n²/8 + Σ_{k=1}^{⌊(n−1)/2⌋} k² cos((n − 2k)πj/n) )
/// ```
///
/// Pairs of circulant terms `k²(ωᵏʲ + ω⁻ᵏʲ)` fold into the cosines; for even
/// `n` the middle entry `(n/2)²` appears once, giving the `n²/8` term.
pub fn cycle_eigenvalue_closed(n: usize, j: usize) -> Result<f64, SpectraError> {
    if n < 3 || j == 0 || j > n {
        return Err(SpectraError::IndexOutOfRange { n, j });
    }
    let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    let nf = n as f64;
    let mut inner = if n.is_multiple_of(2) { nf * nf / 8.0 } else { 0.0 };
    for k in 1..=(n - 1) / 2 {
        let kf = k as f64;
        inner += kf * kf * ((n - 2 * k) as f64 * PI * j as f64 / nf).cos();
    }
    Ok(2.0 * sign * inner)
}

/// Inertia of `Δ(C_n)`, `n >= 3`. No eigenvalue is ever zero.
///
/// Panics for `n < 3`.
pub fn cycle_inertia_closed(n: usize) -> InertiaTriple {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let neg = cycle_negative_count(n);
    InertiaTriple::new(n - neg, neg, 0)
}
