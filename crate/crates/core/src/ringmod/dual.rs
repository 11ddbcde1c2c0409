//! The duality between `I'_k` and `I_{n-2-k}` and the inverse different.
//!
//! Both pairings are multiplication into `I_{n-2}` followed by `φ`, the
//! `ζ_{n-1}` coordinate in the basis `1, θ, …, θ^{n-2}, ζ_{n-1}`.

use super::words::{BasisKind, Word, Words};
use super::{build_ring, ActionTable};
use crate::error::{Error, Result};
use crate::exactalg::matrix::{self, Mat};
use crate::exactalg::ring::Ring;
use crate::forms::BinaryForm;

fn phi<R: Ring>(w: &Words<'_, R>, a: Word, b: Word) -> Result<R::Elem> {
    let n = w.n();
    let mut v = w.combo_coords(&w.word_product(a, b), n as i32 - 2)?;
    Ok(v.pop().expect("rank n ≥ 2"))
}

/// `M[s][t] = φ(u_s v_t)` with `u` the primed basis of `I'_k` and `v` the
/// alternate basis of `I_{n-2-k}` in reverse order.
pub fn dual_pairing_matrix<R: Ring>(f: &BinaryForm<R>, k: i32) -> Result<Mat<R::Elem>> {
    let n = f.degree();
    if !(-1..n as i32).contains(&k) {
        return Err(Error::OutOfRange(format!("k = {k} for n = {n}")));
    }
    let w = Words::new(f.ring(), f.coeffs());
    let u = BasisKind::Primed(k).words(n)?;
    let mut v = BasisKind::Alternate(n as i32 - 2 - k).words(n)?;
    v.reverse();
    u.iter()
        .map(|&a| v.iter().map(|&b| phi(&w, a, b)).collect())
        .collect()
}

/// The map `I'_{n-2} → Hom(R_f, O)`, `j ↦ (r ↦ φ(r j))`.
#[derive(Debug, Clone)]
pub struct InverseDifferent<R: Ring> {
    /// `matrix[s][t] = φ(ζ_t u_s)`.
    pub matrix: Mat<R::Elem>,
    /// The action of `R_f` on `I'_{n-2}` in the primed basis.
    pub action: ActionTable<R>,
    pub det: R::Elem,
}

impl<R: Ring> InverseDifferent<R> {
    pub fn is_unimodular(&self) -> bool {
        self.action.ring().is_unit(&self.det)
    }
}

/// Builds the inverse-different map and checks that it is an isomorphism of
/// `R_f`-modules, where `Hom(R_f, O)` carries `(r·h)(x) = h(r x)`.
pub fn inverse_different_map<R: Ring>(f: &BinaryForm<R>) -> Result<InverseDifferent<R>> {
    let n = f.degree();
    let r = f.ring();
    let w = Words::new(r, f.coeffs());
    let kind = BasisKind::Primed(n as i32 - 2);
    let u = kind.words(n)?;
    let m: Mat<R::Elem> = u
        .iter()
        .map(|&a| (0..n).map(|t| phi(&w, Word::new(0, t), a)).collect())
        .collect::<Result<_>>()?;
    let action = super::build_module_in(f, kind)?;
    let table = build_ring(f);
    for i in 1..n {
        // ζ_i u_s = Σ A_i[s][s'] u_s'
        let lhs = matrix::mat_mul(r, action.action_matrix(i), &m);
        let rhs: Mat<R::Elem> = m
            .iter()
            .map(|row| (0..n).map(|t| r.dot(&table.constants()[i][t], row)).collect())
            .collect();
        if !matrix::mat_eq(r, &lhs, &rhs) {
            return Err(Error::Inconsistent(format!(
                "inverse different map does not commute with ζ_{i}"
            )));
        }
    }
    let det = matrix::det(r, &m)?;
    Ok(InverseDifferent { matrix: m, action, det })
}
