//! Multiplication and action tables for `R_f` and the modules `I_{f,k}`.
//!
//! Tables are built symbolically by [`words::Words`], so the same code works
//! over `Z`, `Z/m`, and the universal polynomial ring, including `f ≡ 0`.
//! Module tables are computed once over `Z[f0,…,fn]` per `(n, basis)` and
//! specialized.

pub mod dual;
pub mod gl2;
pub mod invert;
pub mod words;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::hom::Hom;
use crate::exactalg::matrix;
use crate::exactalg::poly::{Poly, PolyRing};
use crate::exactalg::ring::{ContextDescriptor, Ring};
use crate::forms::BinaryForm;

pub use dual::{dual_pairing_matrix, inverse_different_map, InverseDifferent};
pub use gl2::{gl2_invariance_witness, Gl2Witness};
pub use invert::{is_gorenstein, is_invertible_family};
pub use words::{BasisKind, Word, Words};

pub type Cube<E> = Vec<Vec<Vec<E>>>;

/// `ζ_i ζ_j = Σ_k c[i][j][k] ζ_k` for `0 ≤ i, j, k < n`, with `ζ_0 = 1`.
#[derive(Debug, Clone)]
pub struct MultTable<R: Ring> {
    ring: R,
    n: usize,
    c: Cube<R::Elem>,
}

/// `ζ_i · b_s = Σ_t d[i][s][t] b_t` for a module basis `b`.
#[derive(Debug, Clone)]
pub struct ActionTable<R: Ring> {
    ring: R,
    n: usize,
    basis: BasisKind,
    twist: i32,
    d: Cube<R::Elem>,
}

/// Identity `ζ_0` rows: `c[0][j] = e_j`.
fn with_unit_rows<R: Ring>(ring: &R, n: usize, rest: Cube<R::Elem>) -> Cube<R::Elem> {
    let first: Vec<Vec<R::Elem>> = (0..n).map(|j| ring.unit_vec(n, j)).collect();
    std::iter::once(first).chain(rest).collect()
}

fn map_cube<S: Ring, T: Ring, H: Hom<S, T>>(cube: &Cube<S::Elem>, hom: &H) -> Cube<T::Elem> {
    cube.iter()
        .map(|m| m.iter().map(|row| hom.apply_vec(row)).collect())
        .collect()
}

fn cube_eq<R: Ring>(ring: &R, a: &Cube<R::Elem>, b: &Cube<R::Elem>) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| matrix::mat_eq(ring, x, y))
}

fn first_cube_diff<R: Ring>(ring: &R, a: &Cube<R::Elem>, b: &Cube<R::Elem>) -> Option<(usize, usize, usize)> {
    for (i, (ma, mb)) in a.iter().zip(b).enumerate() {
        for (j, (ra, rb)) in ma.iter().zip(mb).enumerate() {
            for (k, (x, y)) in ra.iter().zip(rb).enumerate() {
                if !ring.equal(x, y) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

pub(crate) fn elem_json<R: Ring>(ring: &R, e: &R::Elem) -> Value {
    let s = ring.render(e);
    match s.parse::<i64>() {
        Ok(v) => json!(v),
        Err(_) => json!(s),
    }
}

pub(crate) fn elem_from_json<R: Ring>(ring: &R, v: &Value) -> Result<R::Elem> {
    match v {
        Value::Number(x) => ring.parse_elem(&x.to_string()),
        Value::String(s) => ring.parse_elem(s),
        other => Err(Error::Malformed(format!("table entry {other}"))),
    }
}

fn cube_json<R: Ring>(ring: &R, cube: &[Vec<Vec<R::Elem>>]) -> Value {
    Value::Array(
        cube.iter()
            .map(|m| {
                Value::Array(
                    m.iter()
                        .map(|row| Value::Array(row.iter().map(|e| elem_json(ring, e)).collect()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn cube_from_json<R: Ring>(ring: &R, v: &Value, dims: (usize, usize, usize)) -> Result<Cube<R::Elem>> {
    let bad = || Error::Malformed(format!("expected a {}x{}x{} array", dims.0, dims.1, dims.2));
    let outer = v.as_array().ok_or_else(bad)?;
    if outer.len() != dims.0 {
        return Err(bad());
    }
    outer
        .iter()
        .map(|m| {
            let m = m.as_array().filter(|m| m.len() == dims.1).ok_or_else(bad)?;
            m.iter()
                .map(|row| {
                    let row = row.as_array().filter(|r| r.len() == dims.2).ok_or_else(bad)?;
                    row.iter().map(|e| elem_from_json(ring, e)).collect()
                })
                .collect()
        })
        .collect()
}

fn json_usize(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Malformed(format!("missing integer field {key:?}")))
}

fn json_i32(v: &Value, key: &str) -> Result<i32> {
    v.get(key)
        .and_then(Value::as_i64)
        .map(|x| x as i32)
        .ok_or_else(|| Error::Malformed(format!("missing integer field {key:?}")))
}

/// Checks that a JSON table was written for this context.
fn check_context<R: Ring>(ring: &R, v: &Value) -> Result<()> {
    let ctx = v
        .get("context")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Malformed("missing field \"context\"".into()))?;
    let parsed: ContextDescriptor = ctx.parse()?;
    if parsed != ring.descriptor() {
        return Err(Error::Malformed(format!(
            "table context {ctx} does not match {}",
            ring.descriptor()
        )));
    }
    Ok(())
}

impl<R: Ring> MultTable<R> {
    /// Builds a table from the constants for `1 ≤ i, j < n`, indexed from 0.
    pub fn from_constants(ring: R, n: usize, c: Cube<R::Elem>) -> Result<Self> {
        if n < 2 || c.len() != n - 1 || c.iter().any(|m| m.len() != n - 1 || m.iter().any(|r| r.len() != n)) {
            return Err(Error::Malformed(format!("multiplication constants for n = {n}")));
        }
        let rest = (0..n - 1)
            .map(|i| {
                let mut m = vec![ring.unit_vec(n, i + 1)];
                m.extend(c[i].iter().cloned());
                m
            })
            .collect();
        let c = with_unit_rows(&ring, n, rest);
        Ok(MultTable { ring, n, c })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `c[i][j][k]` for `0 ≤ i, j, k < n`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &R::Elem {
        &self.c[i][j][k]
    }

    pub fn constants(&self) -> &Cube<R::Elem> {
        &self.c
    }

    /// Product of two elements given in `ζ` coordinates.
    pub fn mul(&self, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
        let r = &self.ring;
        let mut out = r.zero_vec(self.n);
        for (i, xi) in x.iter().enumerate() {
            if r.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if r.is_zero(yj) {
                    continue;
                }
                r.vec_axpy(&mut out, &r.mul(xi, yj), &self.c[i][j]);
            }
        }
        out
    }

    /// Matrix of multiplication by `ζ_i`: row `j` holds `ζ_i ζ_j`.
    pub fn regular(&self, i: usize) -> Vec<Vec<R::Elem>> {
        self.c[i].clone()
    }

    /// Verifies commutativity, associativity and that `ζ_0` is the identity.
    pub fn check(&self) -> Result<()> {
        let r = &self.ring;
        let n = self.n;
        for i in 0..n {
            if !r.vec_eq(&self.c[0][i], &r.unit_vec(n, i)) || !r.vec_eq(&self.c[i][0], &r.unit_vec(n, i)) {
                return Err(Error::Inconsistent(format!("ζ_0 ζ_{i} ≠ ζ_{i}")));
            }
            for j in 0..n {
                if !r.vec_eq(&self.c[i][j], &self.c[j][i]) {
                    return Err(Error::Inconsistent(format!("ζ_{i} ζ_{j} ≠ ζ_{j} ζ_{i}")));
                }
            }
        }
        for i in 1..n {
            for j in 1..n {
                for k in 1..n {
                    let left = self.mul(&self.c[i][j], &r.unit_vec(n, k));
                    let right = self.mul(&r.unit_vec(n, i), &self.c[j][k]);
                    if !r.vec_eq(&left, &right) {
                        return Err(Error::Inconsistent(format!(
                            "(ζ_{i} ζ_{j}) ζ_{k} ≠ ζ_{i} (ζ_{j} ζ_{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds a table from the full cube including the `ζ_0` rows.
    pub fn from_full(ring: R, c: Cube<R::Elem>) -> Result<Self> {
        let n = c.len();
        if n < 2 || c.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
            return Err(Error::Malformed("multiplication cube is not n×n×n".into()));
        }
        Ok(MultTable { ring, n, c })
    }

    /// The table in the basis whose `i`-th element has old coordinates
    /// `p[i]`. The first new basis element must be `1`.
    pub fn change_basis(&self, p: &[Vec<R::Elem>]) -> Result<Self> {
        let r = &self.ring;
        let n = self.n;
        if p.len() != n || !r.vec_eq(&p[0], &r.unit_vec(n, 0)) {
            return Err(Error::Malformed("new basis must start with 1".into()));
        }
        let inv = matrix::inverse(r, &p.to_vec())?;
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| matrix::vec_mat(r, &self.mul(&p[i], &p[j]), &inv))
                    .collect()
            })
            .collect();
        Ok(MultTable { ring: r.clone(), n, c })
    }

    pub fn map<T: Ring, H: Hom<R, T>>(&self, hom: &H) -> MultTable<T> {
        MultTable {
            ring: hom.target().clone(),
            n: self.n,
            c: map_cube(&self.c, hom),
        }
    }

    pub fn equal(&self, other: &Self) -> bool {
        self.n == other.n && cube_eq(&self.ring, &self.c, &other.c)
    }

    /// First `(i, j, k)` where the tables differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, usize)> {
        if self.n != other.n {
            return Some((0, 0, 0));
        }
        first_cube_diff(&self.ring, &self.c, &other.c)
    }

    /// True when every product of two non-identity basis elements vanishes.
    pub fn is_zero_product(&self) -> bool {
        self.c[1..]
            .iter()
            .all(|m| m[1..].iter().all(|row| row.iter().all(|e| self.ring.is_zero(e))))
    }

    /// `{"n", "context", "c"}` with `c` indexed by `1 ≤ i, j < n`, `0 ≤ k < n`.
    pub fn to_json(&self) -> Value {
        let inner: Vec<Vec<Vec<R::Elem>>> = self.c[1..].iter().map(|m| m[1..].to_vec()).collect();
        json!({
            "n": self.n,
            "context": self.ring.descriptor().to_string(),
            "c": cube_json(&self.ring, &inner),
        })
    }

    pub fn from_json(ring: R, v: &Value) -> Result<Self> {
        check_context(&ring, v)?;
        let n = json_usize(v, "n")?;
        if n < 2 {
            return Err(Error::Malformed(format!("n = {n}")));
        }
        let c = cube_from_json(&ring, v.get("c").unwrap_or(&Value::Null), (n - 1, n - 1, n))?;
        MultTable::from_constants(ring, n, c)
    }

    /// Aligned `ζ_i ζ_j = …` lines.
    pub fn render(&self) -> String {
        let mut lines = Vec::new();
        for i in 1..self.n {
            for j in i..self.n {
                lines.push(format!("ζ{i}·ζ{j} = {}", self.render_vec(&self.c[i][j])));
            }
        }
        lines.join("\n")
    }

    fn render_vec(&self, v: &[R::Elem]) -> String {
        render_combo(&self.ring, v, |k| if k == 0 { String::new() } else { format!("ζ{k}") })
    }
}

/// Renders `Σ v_k · label(k)` with an empty label meaning a constant.
pub(crate) fn render_combo<R: Ring>(ring: &R, v: &[R::Elem], label: impl Fn(usize) -> String) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, e)| !ring.is_zero(e))
        .map(|(k, e)| {
            let l = label(k);
            let s = ring.render(e);
            let s = if s.contains(' ') { format!("({s})") } else { s };
            match (l.is_empty(), s.as_str()) {
                (true, _) => s,
                (false, "1") => l,
                (false, "-1") => format!("-{l}"),
                (false, _) => format!("{s}*{l}"),
            }
        })
        .collect();
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        match (i, p.strip_prefix('-')) {
            (0, _) => out.push_str(p),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl<R: Ring> ActionTable<R> {
    pub fn from_constants(ring: R, n: usize, basis: BasisKind, twist: i32, d: Cube<R::Elem>) -> Result<Self> {
        if n < 2 || d.len() != n - 1 || d.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
            return Err(Error::Malformed(format!("action constants for n = {n}")));
        }
        let id = matrix::identity(&ring, n);
        let d = std::iter::once(id).chain(d).collect();
        Ok(ActionTable { ring, n, basis, twist, d })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The level `k` of `I_{f,k}`.
    pub fn k(&self) -> i32 {
        self.basis.level()
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    pub fn twist(&self) -> i32 {
        self.twist
    }

    pub fn d(&self, i: usize, s: usize, t: usize) -> &R::Elem {
        &self.d[i][s][t]
    }

    pub fn constants(&self) -> &Cube<R::Elem> {
        &self.d
    }

    /// Matrix of `ζ_i` acting on row vectors: `ζ_i · x = x · A_i`.
    pub fn action_matrix(&self, i: usize) -> &Vec<Vec<R::Elem>> {
        &self.d[i]
    }

    /// `x · m` for `x` in `ζ` coordinates and `m` in module coordinates.
    pub fn act(&self, x: &[R::Elem], m: &[R::Elem]) -> Vec<R::Elem> {
        let r = &self.ring;
        let mut out = r.zero_vec(self.n);
        for (i, xi) in x.iter().enumerate() {
            if r.is_zero(xi) {
                continue;
            }
            let moved = matrix::vec_mat(r, m, &self.d[i]);
            r.vec_axpy(&mut out, xi, &moved);
        }
        out
    }

    /// Verifies `(ζ_i ζ_j) · b = ζ_i · (ζ_j · b)` over `table`.
    pub fn check(&self, table: &MultTable<R>) -> Result<()> {
        let r = &self.ring;
        let n = self.n;
        if table.n != n {
            return Err(Error::Malformed("rank mismatch".into()));
        }
        if !matrix::is_identity(r, &self.d[0]) {
            return Err(Error::Inconsistent("ζ_0 does not act as the identity".into()));
        }
        for i in 1..n {
            for j in 1..n {
                // A_j A_i is "ζ_j first, then ζ_i" on row vectors
                let composed = matrix::mat_mul(r, &self.d[j], &self.d[i]);
                let mut via = matrix::zeros(r, n, n);
                for (l, c) in table.c[i][j].iter().enumerate() {
                    if r.is_zero(c) {
                        continue;
                    }
                    for (row, src) in via.iter_mut().zip(&self.d[l]) {
                        r.vec_axpy(row, c, src);
                    }
                }
                if !matrix::mat_eq(r, &composed, &via) {
                    return Err(Error::Inconsistent(format!(
                        "module axiom fails for ζ_{i} ζ_{j}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Builds a table from the full cube including the identity `ζ_0` slice.
    pub fn from_full(ring: R, basis: BasisKind, twist: i32, d: Cube<R::Elem>) -> Result<Self> {
        let n = d.len();
        if n < 2 || d.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
            return Err(Error::Malformed("action cube is not n×n×n".into()));
        }
        Ok(ActionTable { ring, n, basis, twist, d })
    }

    /// The table after changing the ring basis to rows of `pr` and the
    /// module basis to rows of `pm`, both in old coordinates.
    pub fn change_basis(&self, pr: &[Vec<R::Elem>], pm: &[Vec<R::Elem>]) -> Result<Self> {
        let r = &self.ring;
        let n = self.n;
        if pr.len() != n || pm.len() != n {
            return Err(Error::Malformed("basis change of the wrong size".into()));
        }
        let inv = matrix::inverse(r, &pm.to_vec())?;
        let d = pr
            .iter()
            .map(|x| {
                pm.iter()
                    .map(|m| matrix::vec_mat(r, &self.act(x, m), &inv))
                    .collect()
            })
            .collect();
        Ok(ActionTable { ring: r.clone(), n, basis: self.basis, twist: self.twist, d })
    }

    pub fn with_twist(mut self, twist: i32) -> Self {
        self.twist = twist;
        self
    }

    pub fn map<T: Ring, H: Hom<R, T>>(&self, hom: &H) -> ActionTable<T> {
        ActionTable {
            ring: hom.target().clone(),
            n: self.n,
            basis: self.basis,
            twist: self.twist,
            d: map_cube(&self.d, hom),
        }
    }

    pub fn equal(&self, other: &Self) -> bool {
        self.n == other.n && self.basis == other.basis && cube_eq(&self.ring, &self.d, &other.d)
    }

    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, usize)> {
        if self.n != other.n {
            return Some((0, 0, 0));
        }
        first_cube_diff(&self.ring, &self.d, &other.d)
    }

    /// `{"n", "context", "k", "basis", "twist", "d"}` with `d` indexed by
    /// `1 ≤ i < n` and module indices `0 ≤ s, t < n`.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "context": self.ring.descriptor().to_string(),
            "k": self.k(),
            "basis": self.basis.name(),
            "twist": self.twist,
            "d": cube_json(&self.ring, &self.d[1..]),
        })
    }

    pub fn from_json(ring: R, v: &Value) -> Result<Self> {
        check_context(&ring, v)?;
        let n = json_usize(v, "n")?;
        if n < 2 {
            return Err(Error::Malformed(format!("n = {n}")));
        }
        let k = json_i32(v, "k")?;
        let twist = json_i32(v, "twist")?;
        let name = v.get("basis").and_then(Value::as_str).unwrap_or("standard");
        let basis = BasisKind::from_name(name, k)?;
        let d = cube_from_json(&ring, v.get("d").unwrap_or(&Value::Null), (n - 1, n, n))?;
        ActionTable::from_constants(ring, n, basis, twist, d)
    }

    pub fn render(&self) -> String {
        let labels: Vec<String> = match self.basis.words(self.n) {
            Ok(ws) => ws.iter().map(render_word).collect(),
            Err(_) => (0..self.n).map(|s| format!("b{s}")).collect(),
        };
        let mut lines = Vec::new();
        for i in 1..self.n {
            for (s, l) in labels.iter().enumerate() {
                let rhs = render_combo(&self.ring, &self.d[i][s], |t| labels[t].clone());
                lines.push(format!("ζ{i}·{l} = {rhs}"));
            }
        }
        lines.join("\n")
    }
}

fn render_word(w: &Word) -> String {
    let theta = match w.m {
        0 => String::new(),
        1 => "θ".into(),
        m => format!("θ^{m}"),
    };
    match (w.j, theta.is_empty()) {
        (0, true) => "1".into(),
        (0, false) => theta,
        (j, true) => format!("ζ{j}"),
        (j, false) => format!("{theta}ζ{j}"),
    }
}

/// The multiplication table of `R_f`.
pub fn build_ring<R: Ring>(f: &BinaryForm<R>) -> MultTable<R> {
    let ring = f.ring().clone();
    let n = f.degree();
    let w = Words::new(&ring, f.coeffs());
    let rest: Cube<R::Elem> = (1..n)
        .map(|i| {
            let mut m = vec![ring.unit_vec(n, i)];
            for j in 1..n {
                let mut v = ring.zero_vec(n);
                for (coef, l) in w.zeta_product(i, j) {
                    if l == n {
                        // ζ_n = -f_n
                        ring.add_mul_assign(&mut v[0], &ring.neg(&coef), &f.coeffs()[n]);
                    } else {
                        ring.add_assign(&mut v[l], &coef);
                    }
                }
                m.push(v);
            }
            m
        })
        .collect();
    let c = with_unit_rows(&ring, n, rest);
    MultTable { ring, n, c }
}

type UniversalCube = Arc<Cube<Poly>>;

fn universal_cache() -> &'static Mutex<HashMap<(usize, BasisKind), UniversalCube>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, BasisKind), UniversalCube>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The action constants of `basis` for the universal form of degree `n`.
pub fn universal_action(n: usize, basis: BasisKind) -> Result<UniversalCube> {
    if let Some(hit) = universal_cache().lock().expect("cache lock").get(&(n, basis)) {
        return Ok(hit.clone());
    }
    let ring = PolyRing::universal(n)?;
    let f = ring.gens();
    let d = Arc::new(Words::new(&ring, &f).action(basis)?);
    universal_cache()
        .lock()
        .expect("cache lock")
        .insert((n, basis), d.clone());
    Ok(d)
}

/// The action table of `R_f` on `I_{f,k}` in the basis of [`BasisKind::Standard`].
pub fn build_module<R: Ring>(f: &BinaryForm<R>, k: i32) -> Result<ActionTable<R>> {
    build_module_in(f, BasisKind::Standard(k))
}

/// As [`build_module`] with an explicit choice of basis.
pub fn build_module_in<R: Ring>(f: &BinaryForm<R>, basis: BasisKind) -> Result<ActionTable<R>> {
    let n = f.degree();
    let universal = universal_action(n, basis)?;
    let ring = f.ring().clone();
    let d = universal
        .iter()
        .map(|m| {
            m.iter()
                .map(|row| row.iter().map(|p| p.eval(&ring, f.coeffs())).collect())
                .collect()
        })
        .collect();
    Ok(ActionTable {
        ring,
        n,
        basis,
        twist: f.twist(),
        d,
    })
}

/// Builds the action table directly over the form's own context.
pub fn build_module_direct<R: Ring>(f: &BinaryForm<R>, basis: BasisKind) -> Result<ActionTable<R>> {
    let ring = f.ring().clone();
    let d = Words::new(&ring, f.coeffs()).action(basis)?;
    Ok(ActionTable {
        ring,
        n: f.degree(),
        basis,
        twist: f.twist(),
        d,
    })
}

/// `Tr(ζ_k)` for each basis element.
pub fn traces<R: Ring>(t: &MultTable<R>) -> Vec<R::Elem> {
    (0..t.n)
        .map(|k| t.ring.sum((0..t.n).map(|l| &t.c[k][l][l])))
        .collect()
}

/// The determinant of the trace form `(Tr(ζ_i ζ_j))`.
pub fn ring_disc<R: Ring>(t: &MultTable<R>) -> Result<R::Elem> {
    let r = &t.ring;
    let tr = traces(t);
    let gram: Vec<Vec<R::Elem>> = (0..t.n)
        .map(|i| (0..t.n).map(|j| r.dot(&t.c[i][j], &tr)).collect())
        .collect();
    matrix::det(r, &gram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::hom::{ReduceMod, Specialize};
    use crate::exactalg::integers::Integers;
    use crate::forms::universal_form;
    use num_bigint::BigInt;

    fn int_form(c: &[i64]) -> BinaryForm<Integers> {
        BinaryForm::from_ints(c).unwrap()
    }

    #[test]
    fn cubic_universal_products() {
        let f = universal_form(3).unwrap();
        let r = f.ring().clone();
        let g = r.gens();
        let t = build_ring(&f);
        // ζ1ζ2 = -f2 ζ1 - f0 f3
        assert!(r.vec_eq(&t.c[1][2], &[r.neg(&r.mul(&g[0], &g[3])), r.neg(&g[2]), r.zero()]));
        // ζ1² = -f1 ζ1 + f0 ζ2
        assert!(r.vec_eq(&t.c[1][1], &[r.zero(), r.neg(&g[1]), g[0].clone()]));
        t.check().unwrap();
    }

    #[test]
    fn zero_form_has_zero_products() {
        let t = build_ring(&int_form(&[0, 0, 0, 0]));
        assert!(t.is_zero_product());
        assert_eq!(ring_disc(&t).unwrap(), BigInt::from(0));
    }

    #[test]
    fn small_discriminants() {
        assert_eq!(ring_disc(&build_ring(&int_form(&[1, 1, 1]))).unwrap(), BigInt::from(-3));
        assert_eq!(ring_disc(&build_ring(&int_form(&[1, 0, 0, 1]))).unwrap(), BigInt::from(-27));
    }

    #[test]
    fn level_zero_is_regular_representation() {
        let f = int_form(&[3, -1, 4, 1, -5]);
        let t = build_ring(&f);
        let m = build_module(&f, 0).unwrap();
        for i in 0..4 {
            assert!(matrix::mat_eq(&Integers, m.action_matrix(i), &t.regular(i)));
        }
    }

    #[test]
    fn cubic_level_one_example() {
        let f = universal_form(3).unwrap();
        let r = f.ring().clone();
        let g = r.gens();
        let m = build_module(&f, 1).unwrap();
        // basis 1, θ, ζ2: ζ1·θ = ζ2 - f1 θ
        assert!(r.vec_eq(&m.d[1][1], &[r.zero(), r.neg(&g[1]), r.one()]));
    }

    #[test]
    fn universal_tables_satisfy_axioms() {
        for n in 2..=5 {
            let f = universal_form(n).unwrap();
            let t = build_ring(&f);
            t.check().unwrap();
            for k in -1..n as i32 {
                build_module(&f, k).unwrap().check(&t).unwrap();
            }
        }
    }

    #[test]
    fn cached_and_direct_routes_agree() {
        let f = int_form(&[0, 2, -3, 0, 7]);
        for k in -1..4 {
            let kind = BasisKind::Standard(k);
            assert!(build_module(&f, k).unwrap().equal(&build_module_direct(&f, kind).unwrap()));
        }
    }

    #[test]
    fn specialization_commutes_with_build() {
        let u = universal_form(3).unwrap();
        let h = Specialize::at_ints(u.ring(), &[1, 0, 0, 1]).unwrap();
        let f = int_form(&[1, 0, 0, 1]);
        assert!(build_ring(&u).map(&h).equal(&build_ring(&f)));
        let red = ReduceMod::new(2).unwrap();
        let f = int_form(&[2, 4, 6, 8]);
        let t = build_ring(&f).map(&red);
        assert!(t.equal(&build_ring(&f.map(&red))));
        assert!(t.is_zero_product());
    }

    #[test]
    fn json_round_trip() {
        let f = universal_form(3).unwrap();
        let t = build_ring(&f);
        let back = MultTable::from_json(f.ring().clone(), &t.to_json()).unwrap();
        assert!(back.equal(&t));
        let m = build_module(&int_form(&[1, 2, 3, 4]), -1).unwrap();
        let back = ActionTable::from_json(Integers, &m.to_json()).unwrap();
        assert!(back.equal(&m));
        assert_eq!(back.twist(), -1);
    }
}
