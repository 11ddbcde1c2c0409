//! Binary n-pairs: a rank-n ring `R`, an `R`-module `I`, a rank-2 quotient
//! `I → Q`, and an identification `Sym_{n-2} Q ≅ R/O`.
//!
//! Bases are fixed as follows. `R` has `1, ζ_1, …, ζ_{n-1}`. `I` has
//! `k_1, …, k_{n-2}` spanning the kernel of `I → Q`, followed by lifts of
//! `x` and `y`. `phi` row `i-1` holds the image of `sym(x^{n-1-i} y^{i-1})`
//! in the coordinates `ζ_1, …, ζ_{n-1}` of `R/O`. Wedges use
//! `(u x + v y) ∧ (s x + t y) = ut - vs` against `x ∧ y`.

pub mod exact;
pub mod reconstruct;
pub mod search;

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::integers::Integers;
use crate::exactalg::matrix::{self, Mat};
use crate::exactalg::ring::{ContextDescriptor, Ring};
use crate::forms::BinaryForm;
use crate::ringmod::{build_module, build_ring, ActionTable, MultTable};

pub use exact::{fixed_left, fixed_sequence_report, fixed_right, ExactnessReport};
pub use reconstruct::reconstruct_from_coefficients;

#[derive(Debug, Clone)]
pub struct BinaryPair<R: Ring> {
    pub ring_table: MultTable<R>,
    pub module: ActionTable<R>,
    /// `2 × n`: row 0 is the `x` coordinate, row 1 the `y` coordinate.
    pub quot: Mat<R::Elem>,
    /// `(n-1) × (n-1)`.
    pub phi: Mat<R::Elem>,
    /// Twist of the associated form.
    pub twist: i32,
}

/// A pair in the normalized bases together with its coefficients.
#[derive(Debug, Clone)]
pub struct BasedPair<R: Ring> {
    pub pair: BinaryPair<R>,
    pub a: Vec<R::Elem>,
}

/// One failed condition found by [`validate_pair`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The ring or module axioms fail.
    Structure(String),
    /// The quotient map is not `[0 | 1]`.
    Quotient,
    /// `phi` is not invertible.
    Phi(String),
    /// The `α_alpha` coefficient of `ζ_zeta β_beta` is wrong, where
    /// `α_1 = y`, `α_2 = x` and `β_k = k_k`.
    ZerosOnes {
        alpha: usize,
        zeta: usize,
        beta: usize,
        expected: String,
        found: String,
    },
    /// The three-term sequence is not exact.
    Exactness(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Structure(s) => write!(f, "structure: {s}"),
            Violation::Quotient => write!(f, "quotient map is not [0 | 1]"),
            Violation::Phi(s) => write!(f, "phi: {s}"),
            Violation::ZerosOnes {
                alpha,
                zeta,
                beta,
                expected,
                found,
            } => write!(
                f,
                "α_{alpha} coefficient of ζ_{zeta} β_{beta} is {found}, expected {expected}"
            ),
            Violation::Exactness(s) => write!(f, "exactness: {s}"),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Result of the exact-sequence criterion; `None` outside `Z`.
    pub exact: Option<bool>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty() && self.exact != Some(false)
    }

    /// True when the zeros-and-ones criterion found nothing wrong.
    pub fn zeros_ones_ok(&self) -> bool {
        !self
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ZerosOnes { .. }))
    }
}

/// Which entry [`BinaryPair::perturbed`] changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Perturbation {
    /// `d[i][s][t]` of the module, `i ≥ 1`.
    Action { i: usize, s: usize, t: usize },
    /// `c[i][j][k]` of the ring, `i, j ≥ 1`, kept symmetric.
    Mult { i: usize, j: usize, k: usize },
    /// `phi[i][j]`.
    Phi { i: usize, j: usize },
}

fn standard_quot<R: Ring>(ring: &R, n: usize) -> Mat<R::Elem> {
    let mut q = matrix::zeros(ring, 2, n);
    q[0][n - 2] = ring.one();
    q[1][n - 1] = ring.one();
    q
}

impl<R: Ring> BinaryPair<R> {
    /// A pair with the standard quotient and `phi = 1`.
    pub fn new(ring_table: MultTable<R>, module: ActionTable<R>, twist: i32) -> Result<Self> {
        let n = ring_table.n();
        if n < 3 || module.n() != n {
            return Err(Error::Malformed(format!(
                "pair needs equal ranks n ≥ 3, got {n} and {}",
                module.n()
            )));
        }
        let r = ring_table.ring().clone();
        Ok(BinaryPair {
            quot: standard_quot(&r, n),
            phi: matrix::identity(&r, n - 1),
            ring_table,
            module,
            twist,
        })
    }

    pub fn n(&self) -> usize {
        self.ring_table.n()
    }

    pub fn ring(&self) -> &R {
        self.ring_table.ring()
    }

    fn check_shapes(&self) -> Result<()> {
        let n = self.n();
        let ok = n >= 3
            && self.module.n() == n
            && self.quot.len() == 2
            && self.quot.iter().all(|r| r.len() == n)
            && self.phi.len() == n - 1
            && self.phi.iter().all(|r| r.len() == n - 1);
        if ok {
            Ok(())
        } else {
            Err(Error::Malformed(format!("pair dimensions for n = {n}")))
        }
    }

    /// `(ẋ, ẏ)` of `φ(sym_j) · b_s` for `1 ≤ j ≤ n-1`, module index `s`.
    fn q_image(&self, j: usize, s: usize) -> (R::Elem, R::Elem) {
        let r = self.ring();
        let n = self.n();
        let mut x = r.zero();
        let mut y = r.zero();
        for (l, p) in self.phi[j - 1].iter().enumerate() {
            if r.is_zero(p) {
                continue;
            }
            let row = &self.module.action_matrix(l + 1)[s];
            r.add_mul_assign(&mut x, p, &row[n - 2]);
            r.add_mul_assign(&mut y, p, &row[n - 1]);
        }
        (x, y)
    }

    /// `(ẋ, ẏ)` of `ζ_j b_s` with `ζ_j = 0` outside `1 ≤ j ≤ n-1`.
    fn q_image_or_zero(&self, j: i64, s: usize) -> (R::Elem, R::Elem) {
        if j < 1 || j > self.n() as i64 - 1 {
            (self.ring().zero(), self.ring().zero())
        } else {
            self.q_image(j as usize, s)
        }
    }

    /// The same pair with `R` rebased so that `phi` is the identity.
    pub fn in_sym_basis(&self) -> Result<Self> {
        self.check_shapes()?;
        let r = self.ring();
        let n = self.n();
        if matrix::is_identity(r, &self.phi) {
            return Ok(self.clone());
        }
        let mut p = vec![r.unit_vec(n, 0)];
        for row in &self.phi {
            let mut v = vec![r.zero()];
            v.extend(row.iter().cloned());
            p.push(v);
        }
        let id = matrix::identity(r, n);
        Ok(BinaryPair {
            ring_table: self.ring_table.change_basis(&p)?,
            module: self.module.change_basis(&p, &id)?,
            quot: self.quot.clone(),
            phi: matrix::identity(r, n - 1),
            twist: self.twist,
        })
    }

    /// Changes the lifts: `x += Σ xs_j k_j`, `y += Σ ys_j k_j`,
    /// `ζ_i += zs_i`. The pair must be in the sym basis for `zs` to keep
    /// that property.
    pub fn relift(&self, xs: &[R::Elem], ys: &[R::Elem], zs: &[R::Elem]) -> Result<Self> {
        let r = self.ring();
        let n = self.n();
        if xs.len() != n - 2 || ys.len() != n - 2 || zs.len() != n - 1 {
            return Err(Error::Malformed("relift vectors have the wrong length".into()));
        }
        let mut pr = matrix::identity(r, n);
        for i in 1..n {
            pr[i][0] = zs[i - 1].clone();
        }
        let mut pm = matrix::identity(r, n);
        pm[n - 2][..n - 2].clone_from_slice(xs);
        pm[n - 1][..n - 2].clone_from_slice(ys);
        Ok(BinaryPair {
            ring_table: self.ring_table.change_basis(&pr)?,
            module: self.module.change_basis(&pr, &pm)?,
            quot: self.quot.clone(),
            phi: self.phi.clone(),
            twist: self.twist,
        })
    }

    /// A copy with one entry shifted by `delta`.
    pub fn perturbed(&self, p: Perturbation, delta: &R::Elem) -> Result<Self> {
        let r = self.ring().clone();
        let n = self.n();
        let mut out = self.clone();
        match p {
            Perturbation::Action { i, s, t } => {
                if i == 0 || i >= n || s >= n || t >= n {
                    return Err(Error::OutOfRange(format!("action entry ({i}, {s}, {t})")));
                }
                let mut d = self.module.constants().clone();
                d[i][s][t] = r.add(&d[i][s][t], delta);
                out.module = ActionTable::from_full(r, self.module.basis(), self.module.twist(), d)?;
            }
            Perturbation::Mult { i, j, k } => {
                if i == 0 || j == 0 || i >= n || j >= n || k >= n {
                    return Err(Error::OutOfRange(format!("ring entry ({i}, {j}, {k})")));
                }
                let mut c = self.ring_table.constants().clone();
                c[i][j][k] = r.add(&c[i][j][k], delta);
                if i != j {
                    c[j][i][k] = r.add(&c[j][i][k], delta);
                }
                out.ring_table = MultTable::from_full(r, c)?;
            }
            Perturbation::Phi { i, j } => {
                if i >= n - 1 || j >= n - 1 {
                    return Err(Error::OutOfRange(format!("phi entry ({i}, {j})")));
                }
                out.phi[i][j] = r.add(&out.phi[i][j], delta);
            }
        }
        Ok(out)
    }

    /// The zeros-and-ones criterion in the given kernel basis.
    pub fn zeros_and_ones(&self) -> Vec<Violation> {
        let r = self.ring();
        let n = self.n();
        let mut out = Vec::new();
        for j in 1..n {
            for k in 1..=n - 2 {
                let (x, y) = self.q_image(j, k - 1);
                for (alpha, found) in [(1usize, y), (2, x)] {
                    let expected = if alpha + j + k == n + 1 { r.one() } else { r.zero() };
                    if !r.equal(&found, &expected) {
                        out.push(Violation::ZerosOnes {
                            alpha,
                            zeta: j,
                            beta: k,
                            expected: r.render(&expected),
                            found: r.render(&found),
                        });
                    }
                }
            }
        }
        out
    }

    /// Images of `ζ_j k_k` in `Q` as integers, when the context is `Z`.
    fn integer_images(&self) -> Option<Vec<Vec<(BigInt, BigInt)>>> {
        if self.ring().descriptor() != ContextDescriptor::Integers {
            return None;
        }
        let r = self.ring();
        let n = self.n();
        (1..n)
            .map(|j| {
                (1..=n - 2)
                    .map(|k| {
                        let (x, y) = self.q_image(j, k - 1);
                        Some((r.as_integer(&x)?, r.as_integer(&y)?))
                    })
                    .collect()
            })
            .collect()
    }

    /// The exact-sequence criterion; `None` outside `Z`.
    pub fn exactness(&self) -> Result<Option<ExactnessReport>> {
        let Some(images) = self.integer_images() else {
            return Ok(None);
        };
        let n = self.n();
        Ok(Some(exact::exactness(
            &fixed_left(n),
            &exact::pair_right(n, &images),
        )?))
    }

    pub fn equal(&self, other: &Self) -> bool {
        let r = self.ring();
        self.ring_table.equal(&other.ring_table)
            && self.module.equal(&other.module)
            && matrix::mat_eq(r, &self.quot, &other.quot)
            && matrix::mat_eq(r, &self.phi, &other.phi)
    }

    /// Describes the first differing table entry, if any.
    pub fn first_difference(&self, other: &Self) -> Option<String> {
        if let Some((i, j, k)) = self.ring_table.first_difference(&other.ring_table) {
            return Some(format!("R: c[{i}][{j}][{k}]"));
        }
        if let Some((i, s, t)) = self.module.first_difference(&other.module) {
            return Some(format!("I: d[{i}][{s}][{t}]"));
        }
        if !matrix::mat_eq(self.ring(), &self.quot, &other.quot) {
            return Some("quot".into());
        }
        if !matrix::mat_eq(self.ring(), &self.phi, &other.phi) {
            return Some("phi".into());
        }
        None
    }

    pub fn to_json(&self) -> Value {
        let r = self.ring();
        let mat = |m: &Mat<R::Elem>| -> Value {
            m.iter()
                .map(|row| row.iter().map(|e| crate::ringmod::elem_json(r, e)).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .into()
        };
        json!({
            "n": self.n(),
            "R": self.ring_table.to_json(),
            "I": self.module.to_json(),
            "quot": mat(&self.quot),
            "phi": mat(&self.phi),
            "twist": self.twist,
        })
    }

    pub fn from_json(ring: R, v: &Value) -> Result<Self> {
        let get = |k: &str| v.get(k).ok_or_else(|| Error::Malformed(format!("missing field {k:?}")));
        let ring_table = MultTable::from_json(ring.clone(), get("R")?)?;
        let module = ActionTable::from_json(ring.clone(), get("I")?)?;
        let mat = |val: &Value| -> Result<Mat<R::Elem>> {
            val.as_array()
                .ok_or_else(|| Error::Malformed("matrix must be an array".into()))?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| Error::Malformed("matrix row must be an array".into()))?
                        .iter()
                        .map(|e| crate::ringmod::elem_from_json(&ring, e))
                        .collect()
                })
                .collect()
        };
        let twist = get("twist")?
            .as_i64()
            .ok_or_else(|| Error::Malformed("twist must be an integer".into()))? as i32;
        let pair = BinaryPair {
            quot: mat(get("quot")?)?,
            phi: mat(get("phi")?)?,
            ring_table,
            module,
            twist,
        };
        pair.check_shapes()?;
        Ok(pair)
    }
}

impl<R: Ring> BasedPair<R> {
    pub fn n(&self) -> usize {
        self.pair.n()
    }

    pub fn equal(&self, other: &Self) -> bool {
        self.pair.equal(&other.pair) && self.pair.ring().vec_eq(&self.a, &other.a)
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.pair.to_json();
        let r = self.pair.ring();
        v["a"] = self.a.iter().map(|e| crate::ringmod::elem_json(r, e)).collect::<Vec<_>>().into();
        v
    }
}

/// Runs both criteria plus the ring and module axioms.
pub fn validate_pair<R: Ring>(p: &BinaryPair<R>) -> Result<ValidationReport> {
    p.check_shapes()?;
    let r = p.ring();
    let n = p.n();
    let mut report = ValidationReport::default();
    if !matrix::mat_eq(r, &p.quot, &standard_quot(r, n)) {
        report.violations.push(Violation::Quotient);
    }
    let det = matrix::det(r, &p.phi)?;
    if !r.is_unit(&det) {
        report
            .violations
            .push(Violation::Phi(format!("determinant {} is not a unit", r.render(&det))));
    }
    if let Err(e) = p.ring_table.check() {
        report.violations.push(Violation::Structure(e.to_string()));
    }
    if let Err(e) = p.module.check(&p.ring_table) {
        report.violations.push(Violation::Structure(e.to_string()));
    }
    report.violations.extend(p.zeros_and_ones());
    if let Some(ex) = p.exactness()? {
        report.exact = Some(ex.is_exact());
        if !ex.is_exact() {
            report.violations.push(Violation::Exactness(format!(
                "left invariants {:?}, right invariants {:?}, composite zero {}",
                ex.left_invariants, ex.right_invariants, ex.composite_zero
            )));
        }
    }
    Ok(report)
}

fn require_valid<R: Ring>(p: &BinaryPair<R>) -> Result<()> {
    let report = validate_pair(p)?;
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::Precondition(format!("invalid pair: {v}"))),
    }
}

/// Moves the lifts of `x`, `y` and `ζ_i` into the normalized position and
/// reads off `a_0, …, a_n`.
pub fn normalize<R: Ring>(p: &BinaryPair<R>) -> Result<BasedPair<R>> {
    require_valid(p)?;
    let p = p.in_sym_basis()?;
    let r = p.ring().clone();
    let n = p.n();
    let (ix, iy) = (n - 2, n - 1);
    let zero_r = r.zero_vec(n - 1);
    let zero_k = r.zero_vec(n - 2);

    // ẏ(ζ_i x) = 0 for i ≥ 2, moving x along k_{n-i}
    let mut xs = zero_k.clone();
    for i in 2..n {
        xs[n - i - 1] = r.neg(&p.q_image(i, ix).1);
    }
    let p = p.relift(&xs, &zero_k, &zero_r)?;

    // ẋ(ζ_i x) = 0 for i ≥ 1, moving ζ_i along 1
    let zs: Vec<R::Elem> = (1..n).map(|i| r.neg(&p.q_image(i, ix).0)).collect();
    let p = p.relift(&zero_k, &zero_k, &zs)?;

    // ẏ(ζ_i y) = 0 for i ≥ 2, moving y along k_{n-i}
    let mut ys = zero_k.clone();
    for i in 2..n {
        ys[n - i - 1] = r.neg(&p.q_image(i, iy).1);
    }
    let p = p.relift(&zero_k, &ys, &zero_r)?;

    let mut a = vec![p.q_image(1, ix).1, p.q_image(1, iy).1];
    for i in 1..n {
        a.push(r.neg(&p.q_image(i, iy).0));
    }
    Ok(BasedPair { pair: p, a })
}

/// The form `q ↦ q ∧ φ(q^{n-2}) q`, evaluated on `sym(x^{n-i} y^i)` to give
/// its `i`-th coefficient. Works for any lifts.
pub fn pair_to_form<R: Ring>(p: &BinaryPair<R>) -> Result<BinaryForm<R>> {
    p.check_shapes()?;
    let r = p.ring().clone();
    let n = p.n();
    // well-definedness: Sym_{n-1} Q ⊗ ker → ∧²Q vanishes
    for a in 0..n {
        for k in 0..n - 2 {
            let t = r.sub(
                &p.q_image_or_zero(a as i64 + 1, k).1,
                &p.q_image_or_zero(a as i64, k).0,
            );
            if !r.is_zero(&t) {
                return Err(Error::Inconsistent(format!(
                    "sym(x^{} y^{a}) ⊗ k_{} pairs to {}",
                    n - 1 - a,
                    k + 1,
                    r.render(&t)
                )));
            }
        }
    }
    let (ix, iy) = (n - 2, n - 1);
    let coeffs = (0..=n as i64)
        .map(|i| {
            let mut acc = p.q_image_or_zero(i + 1, ix).1;
            acc = r.add(&acc, &p.q_image_or_zero(i, iy).1);
            acc = r.sub(&acc, &p.q_image_or_zero(i, ix).0);
            r.sub(&acc, &p.q_image_or_zero(i - 1, iy).0)
        })
        .collect();
    BinaryForm::new(r, coeffs, p.twist)
}

/// `R = R_f`, `I = I_{f,n-3}` with `k_j = θ^{j-1}`, `x = ζ_{n-2}`,
/// `y = ζ_{n-1}`, and `phi = 1`, before normalization.
pub fn form_to_raw_pair<R: Ring>(f: &BinaryForm<R>) -> Result<BinaryPair<R>> {
    let n = f.degree();
    if n < 3 {
        return Err(Error::Precondition(format!("pairs need n ≥ 3, got {n}")));
    }
    BinaryPair::new(build_ring(f), build_module(f, n as i32 - 3)?, f.twist())
}

/// The based pair of `f`.
pub fn form_to_pair<R: Ring>(f: &BinaryForm<R>) -> Result<BasedPair<R>> {
    normalize(&form_to_raw_pair(f)?)
}

/// For `n = 3`: the matrix of `r ↦ r k_1`, an isomorphism `R ≅ I`.
pub fn cubic_module_witness<R: Ring>(p: &BinaryPair<R>) -> Result<Mat<R::Elem>> {
    if p.n() != 3 {
        return Err(Error::Precondition("the witness is for n = 3".into()));
    }
    let r = p.ring();
    let m: Mat<R::Elem> = (0..3).map(|i| p.module.action_matrix(i)[0].clone()).collect();
    let det = matrix::det(r, &m)?;
    if !r.is_unit(&det) {
        return Err(Error::Inconsistent(format!(
            "r ↦ r k_1 has determinant {}",
            r.render(&det)
        )));
    }
    Ok(m)
}

/// Runs the zeros-and-ones and exact-sequence criteria on an integer pair.
pub fn criteria_agree(p: &BinaryPair<Integers>) -> Result<(bool, bool)> {
    p.check_shapes()?;
    let a = p.zeros_and_ones().is_empty();
    let b = p
        .exactness()?
        .map(|r| r.is_exact())
        .ok_or_else(|| Error::Unsupported("exactness outside Z".into()))?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::poly::PolyRing;
    use crate::forms::universal_form;

    fn form(c: &[i64]) -> BinaryForm<Integers> {
        BinaryForm::from_ints(c).unwrap()
    }

    #[test]
    fn cubic_example_coefficients() {
        let b = form_to_pair(&form(&[1, 0, 0, 1])).unwrap();
        let want: Vec<BigInt> = [1, 0, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(b.a, want);
        cubic_module_witness(&b.pair).unwrap();
    }

    #[test]
    fn universal_round_trips() {
        for n in 3..=5 {
            let f = universal_form(n).unwrap();
            let b = form_to_pair(&f).unwrap();
            assert!(f.ring().vec_eq(&b.a, f.coeffs()), "n = {n}");
            let g = pair_to_form(&b.pair).unwrap();
            assert!(g.same_as(&f));
            let rebuilt = reconstruct_from_coefficients(f.ring(), &b.a).unwrap();
            assert_eq!(b.pair.first_difference(&rebuilt.pair), None, "n = {n}");
        }
    }

    #[test]
    fn zeros_and_ones_pattern() {
        let f = universal_form(4).unwrap();
        let p = form_to_raw_pair(&f).unwrap();
        assert!(p.zeros_and_ones().is_empty());
        assert!(validate_pair(&p).unwrap().passes());
    }

    #[test]
    fn normalization_is_unique() {
        let f = form(&[2, -1, 3, 0, 5]);
        let raw = form_to_raw_pair(&f).unwrap();
        let base = normalize(&raw).unwrap();
        let i = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let moved = raw.relift(&i(&[3, -2]), &i(&[1, -4]), &i(&[5, -1, 2])).unwrap();
        let again = normalize(&moved).unwrap();
        assert!(again.equal(&base));
        assert!(normalize(&base.pair).unwrap().equal(&base));
        let g = pair_to_form(&moved).unwrap();
        assert!(g.same_as(&f));
    }

    #[test]
    fn perturbation_is_reported() {
        let p = form_to_raw_pair(&form(&[1, 2, 3, 4, 5])).unwrap();
        let bad = p
            .perturbed(Perturbation::Action { i: 1, s: 1, t: 3 }, &BigInt::from(1))
            .unwrap();
        let rep = validate_pair(&bad).unwrap();
        assert!(!rep.passes());
        assert!(rep.violations.iter().any(|v| matches!(
            v,
            Violation::ZerosOnes { alpha: 1, zeta: 1, beta: 2, .. }
        )));
        assert_eq!(rep.exact, Some(false));
    }

    #[test]
    fn zero_form_pair() {
        let f = form(&[0, 0, 0, 0, 0]);
        let b = form_to_pair(&f).unwrap();
        assert!(b.a.iter().all(|x| *x == BigInt::from(0)));
        assert!(b.pair.ring_table.is_zero_product());
        let rebuilt = reconstruct_from_coefficients(&Integers, &b.a).unwrap();
        assert!(rebuilt.equal(&b));
    }

    #[test]
    fn json_round_trip() {
        let b = form_to_pair(&universal_form(3).unwrap()).unwrap();
        let ring = PolyRing::universal(3).unwrap();
        let back = BinaryPair::from_json(ring, &b.pair.to_json()).unwrap();
        assert!(back.equal(&b.pair));
    }
}
