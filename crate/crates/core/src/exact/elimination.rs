use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational, RationalMatrix, RationalSymMatrix};
use crate::InertiaTriple;

fn cmp_abs(a: &Rational, b: &Rational) -> Ordering {
    a.abs().cmp(&b.abs())
}

/// Exact inertia by symmetric elimination with full pivoting.
///
/// Each step takes the largest nonzero diagonal entry as a 1×1 pivot. When
/// the remaining diagonal is entirely zero but some off-diagonal `a` is not,
/// the block `[[0, a], [a, 0]]` is used as a 2×2 pivot, which contributes
/// one positive and one negative eigenvalue. A remaining all-zero block
/// contributes to `i_zero`. Every step is a congruence, so the counts are
/// the inertia of the input.
pub fn ldlt_inertia(m: &RationalSymMatrix) -> InertiaTriple {
    let n = m.n();
    let mut a: Vec<Vec<Rational>> = m.as_matrix().rows();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = InertiaTriple::default();

    while !active.is_empty() {
        let diag = active
            .iter()
            .copied()
            .filter(|&i| !a[i][i].is_zero())
            .max_by(|&i, &j| cmp_abs(&a[i][i], &a[j][j]));

        if let Some(k) = diag {
            let d = a[k][k].clone();
            if d.is_positive() {
                out.i_plus += 1;
            } else {
                out.i_minus += 1;
            }
            active.retain(|&x| x != k);
            let col: Vec<Rational> = active.iter().map(|&r| &a[r][k] / &d).collect();
            for (ri, &r) in active.iter().enumerate() {
                if col[ri].is_zero() {
                    continue;
                }
                for &s in &active {
                    if s < r || a[k][s].is_zero() {
                        continue;
                    }
                    let upd = &a[r][s] - &col[ri] * &a[k][s];
                    a[s][r] = upd.clone();
                    a[r][s] = upd;
                }
            }
            continue;
        }

        let mut off: Option<(usize, usize)> = None;
        for (ii, &i) in active.iter().enumerate() {
            for &j in &active[ii + 1..] {
                if !a[i][j].is_zero()
                    && off.is_none_or(|(p, q)| cmp_abs(&a[i][j], &a[p][q]) == Ordering::Greater)
                {
                    off = Some((i, j));
                }
            }
        }
        let Some((i, j)) = off else {
            out.i_zero += active.len();
            break;
        };
        out.i_plus += 1;
        out.i_minus += 1;
        let c = a[i][j].clone();
        active.retain(|&x| x != i && x != j);
        // rest -= (u vᵀ + v uᵀ) / c with u = column i, v = column j
        for &r in &active {
            for &s in &active {
                if s < r {
                    continue;
                }
                let t = &a[r][i] * &a[j][s] + &a[r][j] * &a[i][s];
                if t.is_zero() {
                    continue;
                }
                let upd = &a[r][s] - t / &c;
                a[s][r] = upd.clone();
                a[r][s] = upd;
            }
        }
    }
    out
}

/// Reduced row echelon form; returns the pivot columns.
fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &RationalMatrix) -> usize {
    rref(&mut m.rows()).len()
}

/// Exact inverse by Gauss-Jordan elimination; `None` when singular.
pub fn inverse(m: &RationalMatrix) -> Option<RationalMatrix> {
    let n = m.n();
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    RationalMatrix::from_rows(aug.into_iter().map(|r| r[n..].to_vec()).collect()).ok()
}

/// Solves `M y = b` for nonsingular `M`.
pub fn linear_solve(m: &RationalMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.n();
    if b.len() != n {
        return None;
    }
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

/// Scales a rational vector to coprime integers with a positive leading entry.
fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        g = -g;
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

/// Basis of the right null space, one primitive integer vector per free
/// column of the reduced echelon form.
pub fn nullspace(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let n = m.n();
    let mut rows = m.rows();
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][f].clone();
            }
            primitive(v)
        })
        .collect()
}

/// Exact null-space basis of a symmetric matrix; its length is `i_zero`.
pub fn rational_nullspace(m: &RationalSymMatrix) -> Vec<Vec<Rational>> {
    nullspace(m.as_matrix())
}

/// `SᵀMS` for nonsingular `S`.
pub fn congruence_transform(
    m: &RationalSymMatrix,
    s: &RationalMatrix,
) -> Result<RationalSymMatrix, ExactError> {
    if s.n() != m.n() {
        return Err(ExactError::DimensionMismatch {
            expected: m.n(),
            found: s.n(),
        });
    }
    if rank(s) < s.n() {
        return Err(ExactError::SingularS);
    }
    let prod = &(&s.transpose() * m.as_matrix()) * s;
    RationalSymMatrix::new(prod)
}

/// `H₂₂ − H₁₂ᵀ H₁₁⁻¹ H₁₂` for the split after the leading `k` rows.
pub fn schur_complement(h: &RationalSymMatrix, k: usize) -> Result<RationalSymMatrix, ExactError> {
    let n = h.n();
    if k > n {
        return Err(ExactError::DimensionMismatch { expected: n, found: k });
    }
    let lead: Vec<usize> = (0..k).collect();
    let inv = inverse(h.principal(&lead).as_matrix()).ok_or(ExactError::SingularLeadingBlock)?;
    let rest = n - k;
    let mut out = RationalMatrix::zeros(rest);
    for i in 0..rest {
        // w = H₁₁⁻¹ · column (k + i) of H₁₂
        let col: Vec<Rational> = (0..k).map(|r| h.get(r, k + i).clone()).collect();
        let w = inv.mul_vec(&col);
        for j in i..rest {
            let corr = (0..k).fold(Rational::zero(), |acc, r| acc + h.get(r, k + j) * &w[r]);
            let v = h.get(k + i, k + j) - corr;
            out.set(i, j, v.clone());
            out.set(j, i, v);
        }
    }
    RationalSymMatrix::new(out)
}

/// Inertia as `i(H₁₁) + i(Schur complement of H₁₁)`; the leading `k×k`
/// block must be nonsingular.
pub fn haynsworth_inertia(h: &RationalSymMatrix, k: usize) -> Result<InertiaTriple, ExactError> {
    let schur = schur_complement(h, k)?;
    let lead: Vec<usize> = (0..k).collect();
    Ok(ldlt_inertia(&h.principal(&lead)) + ldlt_inertia(&schur))
}
