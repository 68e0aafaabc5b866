use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// Counts of positive, negative and zero eigenvalues of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct InertiaTriple {
    pub i_plus: usize,
    pub i_minus: usize,
    pub i_zero: usize,
}

impl InertiaTriple {
    pub const fn new(i_plus: usize, i_minus: usize, i_zero: usize) -> Self {
        Self {
            i_plus,
            i_minus,
            i_zero,
        }
    }

    /// Dimension of the source matrix.
    pub const fn dim(&self) -> usize {
        self.i_plus + self.i_minus + self.i_zero
    }

    pub const fn rank(&self) -> usize {
        self.i_plus + self.i_minus
    }
}

impl Add for InertiaTriple {
    type Output = InertiaTriple;

    fn add(self, rhs: Self) -> Self {
        InertiaTriple::new(
            self.i_plus + rhs.i_plus,
            self.i_minus + rhs.i_minus,
            self.i_zero + rhs.i_zero,
        )
    }
}

impl fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i_plus, self.i_minus, self.i_zero)
    }
}
