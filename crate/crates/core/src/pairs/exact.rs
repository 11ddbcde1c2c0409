//! Integer matrices for the three-term sequences
//! `0 → Sym_{n-1} Q → Q ⊗ Sym_{n-2} Q → Sym_{n-3} Q ⊗ ∧²Q → 0`
//! and its pair-dependent variant, with exactness decided by Smith forms.
//!
//! Bases: `Sym_m Q` uses `sym(x^{m-a} y^a)` for `a = 0..=m`; the middle term
//! uses `x ⊗ s_j` (columns `0..n-1`) then `y ⊗ s_j` (columns `n-1..2n-2`)
//! with `s_j = sym(x^{n-1-j} y^{j-1})`. Matrices act on row vectors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactalg::intmat::IntMatrix;

fn col_x(j: usize) -> usize {
    j - 1
}

fn col_y(n: usize, j: usize) -> usize {
    n - 1 + j - 1
}

/// `q_1 ⋯ q_{n-1} ↦ q_1 ⊗ q_2 ⋯ q_{n-1}`, an `n × 2(n-1)` matrix.
pub fn fixed_left(n: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, 2 * (n - 1));
    for a in 0..n {
        if a + 1 < n {
            m.set(a, col_x(a + 1), BigInt::one());
        }
        if a >= 1 {
            m.set(a, col_y(n, a), BigInt::one());
        }
    }
    m
}

/// `q_1 ⊗ q_2 ⋯ q_{n-1} ↦ q_2 ⋯ q_{n-2} ⊗ (q_{n-1} ∧ q_1)`, a
/// `2(n-1) × (n-2)` matrix with columns `sym(x^{n-3-b} y^b)`.
pub fn fixed_right(n: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(2 * (n - 1), n - 2);
    for j in 1..n {
        if j >= 2 {
            m.set(col_x(j), j - 2, -BigInt::one());
        }
        if j <= n - 2 {
            m.set(col_y(n, j), j - 1, BigInt::one());
        }
    }
    m
}

/// The right map of a pair, `q ⊗ s ↦ (k ↦ q ∧ φ(s)∘k)`, given the images
/// `images[j-1][k-1] = (ẋ, ẏ)` of `ζ_j k_k` in `Q`.
pub fn pair_right(n: usize, images: &[Vec<(BigInt, BigInt)>]) -> IntMatrix {
    let mut m = IntMatrix::zeros(2 * (n - 1), n - 2);
    for j in 1..n {
        for k in 1..=n - 2 {
            let (x, y) = &images[j - 1][k - 1];
            // x ∧ (X x + Y y) = Y, y ∧ (X x + Y y) = -X
            m.set(col_x(j), k - 1, y.clone());
            m.set(col_y(n, j), k - 1, -x.clone());
        }
    }
    m
}

/// Smith data for a candidate exact sequence `0 → A → B → C → 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessReport {
    pub composite_zero: bool,
    pub left_invariants: Vec<BigInt>,
    pub right_invariants: Vec<BigInt>,
    pub left_rows: usize,
    pub right_cols: usize,
}

impl ExactnessReport {
    /// Left map injective with saturated image, right map surjective, and
    /// ranks adding up, so the image of the left map is the kernel of the
    /// right map.
    pub fn is_exact(&self) -> bool {
        let ones = |v: &[BigInt], len: usize| v.len() == len && v.iter().all(One::is_one);
        self.composite_zero
            && ones(&self.left_invariants, self.left_rows)
            && ones(&self.right_invariants, self.right_cols)
    }
}

pub fn exactness(left: &IntMatrix, right: &IntMatrix) -> Result<ExactnessReport> {
    let composite = left.mul(right)?;
    let abs = |v: Vec<BigInt>| v.into_iter().map(|x| if x < BigInt::zero() { -x } else { x }).collect();
    Ok(ExactnessReport {
        composite_zero: composite.is_zero(),
        left_invariants: abs(left.smith_normal_form().invariant_factors()),
        right_invariants: abs(right.smith_normal_form().invariant_factors()),
        left_rows: left.nrows(),
        right_cols: right.ncols(),
    })
}

/// The report for the fixed sequence of rank-2 free `Q`.
pub fn fixed_sequence_report(n: usize) -> Result<ExactnessReport> {
    exactness(&fixed_left(n), &fixed_right(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_sequence_is_exact() {
        for n in 3..=8 {
            let r = fixed_sequence_report(n).unwrap();
            assert!(r.is_exact(), "n = {n}: {r:?}");
            assert_eq!(r.left_invariants.len(), n);
            assert_eq!(r.right_invariants.len(), n - 2);
        }
    }

    #[test]
    fn broken_right_map_is_not_exact() {
        let n = 5;
        let mut r = fixed_right(n);
        r.set(0, 0, BigInt::from(2));
        assert!(!exactness(&fixed_left(n), &r).unwrap().is_exact());
    }
}
