//! Explicit congruences and inverses for pendant groups and even cycles.

use num_traits::{One, Zero};

use super::{congruence_transform, rat, ratio, ExactError, Rational, RationalMatrix, RationalSymMatrix};
use crate::graph::{all_pairs_distance_squared, build_family, FamilySpec};

/// Congruence that splits off a group of `k` pendants sharing a neighbor.
///
/// Vertices `0..k` of `delta` must be those pendants. With `p = k - 1` the
/// last of them, the transform uses the columns `e_i - e_p` (`i < p`) and
/// `e_p + (1/k) Σ_{i<p} (e_i - e_p)`, which yields the block diagonal
///
/// ```text
/// [ -4I - 4J (size k-1)          0                     ]
/// [        0           Δ_k + (4 - 4/k) e_p e_pᵀ        ]
/// ```
///
/// where `Δ_k` is `delta` without rows/columns `0..k-1`.
pub fn pendant_reduction(delta: &RationalSymMatrix, k: usize) -> Result<RationalSymMatrix, ExactError> {
    let n = delta.n();
    if k == 0 || k >= n {
        return Err(ExactError::BadOrdering(format!(
            "need 1 <= k < n, got k={k}, n={n}"
        )));
    }
    let four = rat(4);
    for i in 0..k {
        for j in i + 1..k {
            if delta.get(i, j) != &four {
                return Err(ExactError::BadOrdering(format!(
                    "rows {i} and {j} are not at squared distance 4"
                )));
            }
        }
        for o in k..n {
            if delta.get(i, o) != delta.get(0, o) {
                return Err(ExactError::BadOrdering(format!(
                    "pendants 0 and {i} differ in column {o}"
                )));
            }
        }
    }
    let last = k - 1;
    let inv_k = ratio(1, k as i64);
    let mut s = RationalMatrix::identity(n);
    for i in 0..last {
        s.set(last, i, -Rational::one());
        // column `last`: e_p + (1/k) Σ (e_i - e_p)
        s.set(i, last, inv_k.clone());
    }
    s.set(last, last, Rational::one() - &inv_k * rat(last as i64));
    congruence_transform(delta, &s)
}

/// `m(2m² + 1)/3`: the common row sum of `Δ(C_2m)`, its largest eigenvalue.
pub fn even_cycle_row_sum(m: usize) -> Rational {
    let m = m as i64;
    ratio(m * (2 * m * m + 1), 3)
}

fn check_even(p: usize) -> Result<usize, ExactError> {
    if !p.is_multiple_of(2) || p < 4 {
        return Err(ExactError::OddLength(p));
    }
    Ok(p / 2)
}

/// Closed-form `Δ(C_p)⁻¹` for even `p = 2m`: `(2J + B) / (4λm)` where `B`
/// is the circulant whose row `i` holds `-λ, 2λ, -λ` at columns
/// `i+m-1, i+m, i+m+1` (mod `p`) and `λ` is the row sum of `Δ(C_p)`.
pub fn even_cycle_inverse(p: usize) -> Result<RationalSymMatrix, ExactError> {
    let m = check_even(p)?;
    let lambda = even_cycle_row_sum(m);
    let scale = (rat(4) * &lambda * rat(m as i64)).recip();
    let two = rat(2);
    let inv = RationalMatrix::from_fn(p, |i, j| {
        let off = (j + p - i) % p;
        let band = if off == m {
            &lambda * rat(2)
        } else if off == m - 1 || off == m + 1 {
            -lambda.clone()
        } else {
            Rational::zero()
        };
        (&two + band) * &scale
    });
    RationalSymMatrix::new(inv)
}

/// `xᵀ Δ̃⁻¹ x` for an even cycle `C_p` with one pendant, where `Δ̃ = Δ(C_p)`
/// and `x` holds the pendant's squared distances to the cycle vertices.
/// The value is what the pendant contributes through the Schur complement;
/// it is always positive.
pub fn schur_scalar(p: usize) -> Result<Rational, ExactError> {
    let inv = even_cycle_inverse(p)?;
    let x = pendant_row(p);
    Ok(inv.quadratic_form(&x))
}

/// First `p` entries of the pendant row of `Δ(C_p + pendant at 0)`.
pub fn pendant_row(p: usize) -> Vec<Rational> {
    let spec = FamilySpec::EvenCycleOneTree {
        p,
        tree: Box::new(FamilySpec::Path(1)),
        attach: 0,
    };
    let g = build_family(&spec).expect("even cycle with one pendant");
    let d = all_pairs_distance_squared(&g).expect("connected");
    (0..p).map(|i| rat(d.get(p, i))).collect()
}

/// Polynomial form of [`schur_scalar`] in `m = p/2`, with `λ = m(2m²+1)/3`:
///
/// ```text
/// (1/(4λm)) · ( 2·((2m³ + 6m² + 7m)/3)²  −  (4/3)λm³ − 8λm² − (26/3)λm )
/// ```
///
/// The first term is `2 xᵀJx`; the rest is `xᵀBx`, where row `i` of `B x`
/// is `(4m + 2)λ` for the row whose band is centered on the pendant's
/// antipode, `-6λ` for the row centered on the attachment vertex, and
/// `-2λ` elsewhere.
pub fn schur_scalar_closed_form(m: usize) -> Rational {
    let mr = rat(m as i64);
    let lambda = even_cycle_row_sum(m);
    let m2 = &mr * &mr;
    let m3 = &m2 * &mr;
    let row_total = (rat(2) * &m3 + rat(6) * &m2 + rat(7) * &mr) / rat(3);
    let jx = rat(2) * &row_total * &row_total;
    let bx = &lambda * (-ratio(4, 3) * &m3 - rat(8) * &m2 - ratio(26, 3) * &mr);
    (jx + bx) / (rat(4) * lambda * mr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ldlt_inertia, linear_solve};
    use crate::InertiaTriple;

    fn delta(spec: FamilySpec) -> RationalSymMatrix {
        RationalSymMatrix::from(&all_pairs_distance_squared(&build_family(&spec).unwrap()).unwrap())
    }

    #[test]
    fn star3_reduction() {
        // star with leaves first: leaves 0,1; center 2
        let g = build_family(&FamilySpec::Star(3)).unwrap().relabel(&[2, 0, 1]).unwrap();
        let d = RationalSymMatrix::from(&all_pairs_distance_squared(&g).unwrap());
        let r = pendant_reduction(&d, 2).unwrap();
        let expected =
            RationalSymMatrix::from_i64_rows(&[vec![-8, 0, 0], vec![0, 2, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(r, expected);
        assert_eq!(ldlt_inertia(&r), ldlt_inertia(&d));
        assert_eq!(ldlt_inertia(&r), InertiaTriple::new(1, 2, 0));
    }

    #[test]
    fn reduction_block_structure() {
        // five pendants on cycle vertex 0 of C6, pendants relabeled to the front
        let g = build_family(&FamilySpec::EvenCycleOneTree {
            p: 6,
            tree: Box::new(FamilySpec::Star(6)),
            attach: 0,
        })
        .unwrap();
        // star center is 6, leaves 7..=11; reorder leaves first
        let mut perm = vec![0; g.n()];
        for (new, old) in (7..12).chain(0..7).enumerate() {
            perm[old] = new;
        }
        let d = RationalSymMatrix::from(&all_pairs_distance_squared(&g.relabel(&perm).unwrap()).unwrap());
        let k = 5;
        let r = pendant_reduction(&d, k).unwrap();
        for i in 0..k - 1 {
            for j in 0..d.n() {
                let expect = if j >= k - 1 {
                    rat(0)
                } else if i == j {
                    rat(-8)
                } else {
                    rat(-4)
                };
                assert_eq!(r.get(i, j), &expect, "({i},{j})");
            }
        }
        let shift = rat(4) - ratio(4, k as i64);
        for i in k - 1..d.n() {
            for j in k - 1..d.n() {
                let mut expect = d.get(i, j).clone();
                if i == k - 1 && j == k - 1 {
                    expect += &shift;
                }
                assert_eq!(r.get(i, j), &expect);
            }
        }
        assert_eq!(ldlt_inertia(&r), ldlt_inertia(&d));
    }

    #[test]
    fn reduction_rejects_non_pendants() {
        let d = delta(FamilySpec::Path(4));
        assert!(matches!(pendant_reduction(&d, 2), Err(ExactError::BadOrdering(_))));
        assert!(matches!(pendant_reduction(&d, 4), Err(ExactError::BadOrdering(_))));
    }

    #[test]
    fn inverse_small_cycles() {
        for p in [4, 6] {
            let d = delta(FamilySpec::Cycle(p));
            let x = even_cycle_inverse(p).unwrap();
            assert_eq!(d.as_matrix() * x.as_matrix(), RationalMatrix::identity(p));
            let m = p / 2;
            for i in 0..p {
                let sum = (0..p).fold(rat(0), |acc, j| acc + x.get(i, j));
                assert_eq!(sum, ratio(3, (m * (2 * m * m + 1)) as i64));
            }
        }
        assert_eq!(even_cycle_inverse(5), Err(ExactError::OddLength(5)));
        // p = 4: band row is [0, -λ, 2λ, -λ] with λ = 6
        let x = even_cycle_inverse(4).unwrap();
        assert_eq!(x.get(0, 0), &ratio(2, 48));
        assert_eq!(x.get(0, 1), &ratio(2 - 6, 48));
        assert_eq!(x.get(0, 2), &ratio(2 + 12, 48));
    }

    #[test]
    fn schur_scalar_matches_direct_solve() {
        for p in [4, 6, 8, 10] {
            let d = delta(FamilySpec::Cycle(p));
            let x = pendant_row(p);
            let y = linear_solve(d.as_matrix(), &x).unwrap();
            let direct = x.iter().zip(&y).fold(rat(0), |acc, (a, b)| acc + a * b);
            let value = schur_scalar(p).unwrap();
            assert_eq!(value, direct);
            assert!(value > rat(0));
        }
        assert_eq!(schur_scalar(4).unwrap(), rat(6));
        assert_eq!(schur_scalar(6).unwrap(), ratio(96, 19));
    }

    #[test]
    fn schur_polynomial_matches() {
        for m in 2..=10 {
            assert_eq!(schur_scalar_closed_form(m), schur_scalar(2 * m).unwrap(), "m={m}");
        }
    }
}
