//! Spectrum of a saturated even cycle `C_2m` with one pendant per vertex.
//!
//! Ordering the cycle vertices first and the pendants second,
//! `Δ = [[A, B], [B, C]]` with `A`, `B`, `C` symmetric circulants. They share
//! the Fourier eigenvectors, so for each index `j` the eigenvalues
//! `λⱼ, μⱼ, ρⱼ` of `A, B, C` give two eigenvalues of `Δ`:
//!
//! ```text
//! h = (ρ + λ)/2 ± sqrt((ρ − λ)²/4 + μ²)
//! ```

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

/// Eigenvalues of the three circulant blocks at index `j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SaturatedBlock {
    pub m: usize,
    pub j: usize,
    pub lambda_j: f64,
    pub mu_j: f64,
    pub rho_j: f64,
}

fn check(m: usize, j: usize) {
    assert!(m >= 2, "saturated cycles need m >= 2");
    assert!(j < 2 * m, "index {j} out of range for p = {}", 2 * m);
}

/// Block eigenvalues from the raw cosine sums of the first rows
/// `A: [0, 1, 4, …, m², …, 4, 1]`, `B: [1, 4, …, (m+1)², …, 4]`,
/// `C: [0, 9, 16, …, (m+2)², …, 16, 9]`.
pub fn saturated_block_raw(m: usize, j: usize) -> SaturatedBlock {
    check(m, j);
    let p = (2 * m) as f64;
    let alt = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mf = m as f64;
    let (mut lam, mut mu, mut rho) = (mf * mf * alt, (mf + 1.0).powi(2) * alt + 1.0, (mf + 2.0).powi(2) * alt);
    for l in 1..m {
        let c = 2.0 * (2.0 * PI * (l * j) as f64 / p).cos();
        let lf = l as f64;
        lam += c * lf * lf;
        mu += c * (lf + 1.0).powi(2);
        rho += c * (lf + 2.0).powi(2);
    }
    SaturatedBlock {
        m,
        j,
        lambda_j: lam,
        mu_j: mu,
        rho_j: rho,
    }
}

/// Block eigenvalues in closed form. With `c = csc(πj/2m)²`:
/// even `j ≠ 0` gives `λ = μ = m·c`, `ρ = λ − 4`; odd `j` gives
/// `λ = −m·c`, `μ = (−2 − m)·c`, `ρ = −4 + (−4 − m)·c`. The csc forms are
/// singular at `j = 0`, which falls back to the raw sums.
///
/// Panics unless `m >= 2` and `j < 2m`.
pub fn saturated_block(m: usize, j: usize) -> SaturatedBlock {
    check(m, j);
    if j == 0 {
        return saturated_block_raw(m, 0);
    }
    let mf = m as f64;
    let csc2 = 1.0 / (PI * j as f64 / (2.0 * mf)).sin().powi(2);
    let (lambda_j, mu_j, rho_j) = if j.is_multiple_of(2) {
        (mf * csc2, mf * csc2, mf * csc2 - 4.0)
    } else {
        (-mf * csc2, (-2.0 - mf) * csc2, -4.0 + (-4.0 - mf) * csc2)
    };
    SaturatedBlock {
        m,
        j,
        lambda_j,
        mu_j,
        rho_j,
    }
}

/// `(h₋, h₊)` at index `j`.
pub fn saturated_pair(m: usize, j: usize) -> (f64, f64) {
    let b = saturated_block(m, j);
    let mid = (b.rho_j + b.lambda_j) / 2.0;
    let rad = ((b.rho_j - b.lambda_j).powi(2) / 4.0 + b.mu_j * b.mu_j).sqrt();
    (mid - rad, mid + rad)
}

/// Lower root `r = (2m/π)·arcsin(1/√m)` of the odd-index `h₊` branch.
pub fn saturated_root(m: usize) -> f64 {
    let mf = m as f64;
    (1.0 / mf.sqrt()).asin() * 2.0 * mf / PI
}

/// Largest integer `k <= m` with `m·sin²(πk/2m) <= 1`, i.e. `⌊r⌋`.
///
/// `sin²` is increasing on the range, so this avoids reading `⌊r⌋` off a
/// rounded float: at `m = 2` the root is exactly 1 while the float formula
/// lands just below it.
fn floor_root(m: usize) -> usize {
    let mf = m as f64;
    (0..=m)
        .take_while(|&k| mf * (PI * k as f64 / (2.0 * mf)).sin().powi(2) <= 1.0 + 1e-12)
        .last()
        .unwrap_or(0)
}

/// Number of positive eigenvalues `β = 2⌊(⌊r⌋ + 1)/2⌋` that the odd-index
/// branch contributes below the lower root.
pub fn saturated_beta(m: usize) -> usize {
    assert!(m >= 2, "saturated cycles need m >= 2");
    2 * floor_root(m).div_ceil(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distance_squared, build_family, FamilySpec};
    use crate::spectra::{circulant_eigenvalues_indexed, jacobi_eigenvalues, max_relative_gap};

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1.0)
    }

    #[test]
    fn m2_examples() {
        let b = saturated_block(2, 1);
        assert!(close(b.lambda_j, -4.0, 1e-12));
        assert!(close(b.mu_j, -8.0, 1e-12));
        assert!(close(b.rho_j, -16.0, 1e-12));
        let b = saturated_block(2, 2);
        assert!(close(b.lambda_j, 2.0, 1e-12));
        assert!(close(b.mu_j, 2.0, 1e-12));
        assert!(close(b.rho_j, -2.0, 1e-12));
    }

    /// Oracle: the block rows read straight off Δ of the saturated cycle.
    #[test]
    fn closed_blocks_match_delta_rows() {
        for m in 2..=10 {
            let p = 2 * m;
            let d = all_pairs_distance_squared(&build_family(&FamilySpec::SaturatedCycle(p)).unwrap())
                .unwrap();
            let row = |r: usize, off: usize| -> Vec<f64> { (0..p).map(|c| d.get(r, off + c) as f64).collect() };
            let la = circulant_eigenvalues_indexed(&row(0, 0)).unwrap();
            let mb = circulant_eigenvalues_indexed(&row(0, p)).unwrap();
            let rc = circulant_eigenvalues_indexed(&row(p, p)).unwrap();
            for j in 0..p {
                // indexed output runs j = 1..=p; j = p is j = 0
                let idx = if j == 0 { p - 1 } else { j - 1 };
                for b in [saturated_block(m, j), saturated_block_raw(m, j)] {
                    assert!(close(b.lambda_j, la[idx], 1e-8), "m={m} j={j}");
                    assert!(close(b.mu_j, mb[idx], 1e-8), "m={m} j={j}");
                    assert!(close(b.rho_j, rc[idx], 1e-8), "m={m} j={j}");
                }
            }
        }
    }

    #[test]
    fn even_index_lambda_equals_mu() {
        for m in 2..=9 {
            for j in (2..2 * m).step_by(2) {
                let b = saturated_block(m, j);
                assert_eq!(b.lambda_j, b.mu_j);
                let (_, hp) = saturated_pair(m, j);
                assert!(hp > 0.0);
            }
        }
    }

    #[test]
    fn lower_branch_is_negative() {
        for m in 2..=12 {
            for j in 0..2 * m {
                assert!(saturated_pair(m, j).0 < 0.0, "m={m} j={j}");
            }
        }
    }

    #[test]
    fn pairs_match_jacobi_m2() {
        let d = all_pairs_distance_squared(&build_family(&FamilySpec::SaturatedCycle(4)).unwrap()).unwrap();
        let jac = jacobi_eigenvalues(&d.to_f64_rows(), 1e-12).unwrap();
        let pairs: Vec<f64> = (0..4)
            .flat_map(|j| {
                let (a, b) = saturated_pair(2, j);
                [a, b]
            })
            .collect();
        assert!(max_relative_gap(&pairs, &jac.eigenvalues).unwrap() < 1e-7);
    }

    #[test]
    fn beta_examples() {
        assert!((saturated_root(2) - 1.0).abs() < 1e-12);
        assert_eq!(saturated_beta(2), 2);
        assert!((saturated_root(3) - 1.1755).abs() < 1e-4);
        assert_eq!(saturated_beta(3), 2);
        assert!((saturated_root(8) - 1.8404).abs() < 1e-4);
        assert_eq!(saturated_beta(8), 2);
        for m in 2..=40 {
            assert!(saturated_beta(m) <= m);
            let r = saturated_root(m);
            if (r - r.round()).abs() > 1e-9 {
                assert_eq!(floor_root(m), r.floor() as usize, "m={m}");
            }
        }
    }
}
