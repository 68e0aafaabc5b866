use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::ExactError;
use crate::graph::IntSymMatrix;

/// Exact rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or the integer shorthand `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::Parse(format!("bad rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Always `"p/q"`, including `"k/1"` for integers.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Dense square matrix over the rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(ExactError::NotSquare);
        }
        Ok(Self {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, ExactError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.n + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Principal submatrix on the given index list, in that order.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        use num_traits::ToPrimitive;
        (0..self.n)
            .map(|i| self.row(i).iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = RationalMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * n + j;
                        out.data[idx] = &out.data[idx] + a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A [`RationalMatrix`] known to be symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct RationalSymMatrix(RationalMatrix);

impl RationalSymMatrix {
    pub fn new(m: RationalMatrix) -> Result<Self, ExactError> {
        if m.is_symmetric() {
            Ok(Self(m))
        } else {
            Err(ExactError::NotSymmetric)
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, ExactError> {
        Self::new(RationalMatrix::from_i64_rows(rows)?)
    }

    pub fn zeros(n: usize) -> Self {
        Self(RationalMatrix::zeros(n))
    }

    pub fn identity(n: usize) -> Self {
        Self(RationalMatrix::identity(n))
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.0.get(i, j)
    }

    pub fn as_matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> RationalMatrix {
        self.0
    }

    pub fn principal(&self, idx: &[usize]) -> Self {
        Self(self.0.principal(idx))
    }

    /// The matrix with row and column `i` deleted.
    pub fn delete(&self, i: usize) -> Self {
        let idx: Vec<usize> = (0..self.n()).filter(|&k| k != i).collect();
        self.principal(&idx)
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.n() != other.n() {
            return Err(ExactError::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Self(RationalMatrix::from_fn(self.n(), |i, j| {
            self.get(i, j) + other.get(i, j)
        })))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        self.0.mul_vec(v)
    }

    /// `vᵀ M v`.
    pub fn quadratic_form(&self, v: &[Rational]) -> Rational {
        self.mul_vec(v)
            .iter()
            .zip(v)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }
}

impl From<&IntSymMatrix> for RationalSymMatrix {
    fn from(m: &IntSymMatrix) -> Self {
        Self(RationalMatrix::from_fn(m.n(), |i, j| rat(m.get(i, j))))
    }
}

/// Wire format: `{"n": 2, "data": [["0/1","1/2"],["1/2","3"]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub data: Vec<Vec<String>>,
}

impl TryFrom<MatrixJson> for RationalMatrix {
    type Error = ExactError;

    fn try_from(j: MatrixJson) -> Result<Self, Self::Error> {
        if j.data.len() != j.n {
            return Err(ExactError::DimensionMismatch {
                expected: j.n,
                found: j.data.len(),
            });
        }
        let rows = j
            .data
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        RationalMatrix::from_rows(rows)
    }
}

impl From<&RationalMatrix> for MatrixJson {
    fn from(m: &RationalMatrix) -> Self {
        MatrixJson {
            n: m.n(),
            data: (0..m.n())
                .map(|i| m.row(i).iter().map(format_rational).collect())
                .collect(),
        }
    }
}

impl TryFrom<MatrixJson> for RationalSymMatrix {
    type Error = ExactError;

    fn try_from(j: MatrixJson) -> Result<Self, Self::Error> {
        RationalSymMatrix::new(RationalMatrix::try_from(j)?)
    }
}

impl From<RationalSymMatrix> for MatrixJson {
    fn from(m: RationalSymMatrix) -> Self {
        MatrixJson::from(&m.0)
    }
}
