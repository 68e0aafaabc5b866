//! Floating-point spectra: a cyclic Jacobi eigensolver used as a numeric
//! cross-check, and the closed-form spectra of cycles and saturated cycles.
//!
//! Signs read off these spectra are never used to decide a zero eigenvalue;
//! that is always left to [`crate::exact`].

mod circulant;
mod saturated;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::InertiaTriple;

pub use circulant::{
    circulant_eigenvalues, circulant_eigenvalues_indexed, cycle_eigenvalue_closed,
    cycle_inertia_closed,
};
pub use saturated::{
    saturated_beta, saturated_block, saturated_block_raw, saturated_pair, saturated_root,
    SaturatedBlock,
};

/// Default absolute threshold for calling an eigenvalue zero.
pub const SIGN_TOL: f64 = 1e-6;

/// Jacobi stops once the off-diagonal Frobenius norm is below
/// `min(tol, JACOBI_CONVERGENCE) · ‖M‖_F`.
pub const JACOBI_CONVERGENCE: f64 = 1e-12;

pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("matrix is not square")]
    NotSquare,
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("Jacobi did not converge in {0} sweeps")]
    NoConvergence(usize),
    #[error("circulant spectrum has imaginary residue {0}")]
    NonRealSpectrum(f64),
    #[error("index {j} out of range for n = {n}")]
    IndexOutOfRange { n: usize, j: usize },
}

/// Eigenvalues sorted ascending, with the tolerance used to classify signs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    pub fn new(mut eigenvalues: Vec<f64>, tol: f64) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        Self { eigenvalues, tol }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Sign counts with `|λ| <= tol` counted as zero.
    pub fn inertia(&self) -> InertiaTriple {
        let mut out = InertiaTriple::default();
        for &x in &self.eigenvalues {
            if x.abs() <= self.tol {
                out.i_zero += 1;
            } else if x > 0.0 {
                out.i_plus += 1;
            } else {
                out.i_minus += 1;
            }
        }
        out
    }

    /// Largest elementwise gap to `other` relative to `max(1, |λ|)`, after
    /// both are sorted. `None` if the lengths differ.
    pub fn max_relative_gap(&self, other: &Spectrum) -> Option<f64> {
        max_relative_gap(&self.eigenvalues, &other.eigenvalues)
    }
}

/// Compares two multisets of reals: sorts both and returns the largest
/// `|a - b| / max(1, |b|)`.
pub fn max_relative_gap(a: &[f64], b: &[f64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    Some(
        a.iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs() / y.abs().max(1.0))
            .fold(0.0, f64::max),
    )
}

fn frobenius(a: &[Vec<f64>]) -> (f64, f64) {
    let mut total = 0.0;
    let mut off = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            total += x * x;
            if i != j {
                off += x * x;
            }
        }
    }
    (total.sqrt(), off.sqrt())
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
#[allow(clippy::needless_range_loop)]
pub fn jacobi_eigenvalues(m: &[Vec<f64>], tol: f64) -> Result<Spectrum, SpectraError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(SpectraError::BadTolerance(tol));
    }
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(SpectraError::NotSquare);
    }
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (m[i][j], m[j][i]);
            if (x - y).abs() > 1e-12 * x.abs().max(y.abs()).max(1.0) {
                return Err(SpectraError::NonSymmetric);
            }
        }
    }
    let mut a = m.to_vec();
    let (norm, _) = frobenius(&a);
    let target = tol.min(JACOBI_CONVERGENCE) * norm;

    let mut sweeps = 0;
    loop {
        let (_, off) = frobenius(&a);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectraError::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (rp, rq) = (row[p], row[q]);
                    row[p] = c * rp - s * rq;
                    row[q] = s * rp + c * rq;
                }
                for k in 0..n {
                    let (pk, qk) = (a[p][k], a[q][k]);
                    a[p][k] = c * pk - s * qk;
                    a[q][k] = s * pk + c * qk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    Ok(Spectrum::new((0..n).map(|i| a[i][i]).collect(), tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_spectrum() {
        let m = vec![vec![0.0, 1.0, 4.0], vec![1.0, 0.0, 1.0], vec![4.0, 1.0, 0.0]];
        let s = jacobi_eigenvalues(&m, 1e-12).unwrap();
        let six = 6f64.sqrt();
        let expect = [-4.0, 2.0 - six, 2.0 + six];
        for (a, b) in s.eigenvalues.iter().zip(expect) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
        assert_eq!(s.inertia(), InertiaTriple::new(1, 2, 0));
    }

    #[test]
    fn identity_and_c4() {
        let id: Vec<Vec<f64>> = (0..5)
            .map(|i| (0..5).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        let s = jacobi_eigenvalues(&id, SIGN_TOL).unwrap();
        assert!(s.eigenvalues.iter().all(|&x| (x - 1.0).abs() < 1e-12));

        let c4: Vec<Vec<f64>> = (0..4)
            .map(|i| (0..4).map(|j| [0.0, 1.0, 4.0, 1.0][(j + 4 - i) % 4]).collect())
            .collect();
        let s = jacobi_eigenvalues(&c4, SIGN_TOL).unwrap();
        let expect = [-4.0, -4.0, 2.0, 6.0];
        for (a, b) in s.eigenvalues.iter().zip(expect) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            jacobi_eigenvalues(&[vec![0.0, 1.0], vec![2.0, 0.0]], 1e-6),
            Err(SpectraError::NonSymmetric)
        );
        assert_eq!(
            jacobi_eigenvalues(&[vec![0.0, 1.0]], 1e-6),
            Err(SpectraError::NotSquare)
        );
        assert_eq!(
            jacobi_eigenvalues(&[vec![1.0]], 0.0),
            Err(SpectraError::BadTolerance(0.0))
        );
        let zero = jacobi_eigenvalues(&[vec![0.0; 3], vec![0.0; 3], vec![0.0; 3]], 1e-6).unwrap();
        assert_eq!(zero.inertia(), InertiaTriple::new(0, 0, 3));
    }

    #[test]
    fn gap_metric() {
        assert_eq!(max_relative_gap(&[1.0, 2.0], &[2.0, 1.0]), Some(0.0));
        assert_eq!(max_relative_gap(&[1.0], &[1.0, 2.0]), None);
        let g = max_relative_gap(&[100.0 + 1e-6], &[100.0]).unwrap();
        assert!((g - 1e-8).abs() < 1e-12);
    }
}
