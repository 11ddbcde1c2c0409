//! Explicit isomorphisms `R_{γf} ≅ R_f` and `I_{γf} ≅ I_f`.
//!
//! With `f' = γ·f` for `γ = (a, b; c, d)`, the root of `f'` is
//! `θ' = (dθ - c) / (a - bθ)` inside `Q_f`. The ring map sends `ζ'_i` to its
//! expansion in `θ'`, and the module map is multiplication by `a - bθ`.
//! Both are computed once for the universal form and specialized, so they
//! apply to every form including those with `f_0 = 0`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{build_module, build_ring};
use crate::error::{Error, Result};
use crate::exactalg::matrix::{self, Mat};
use crate::exactalg::poly::Poly;
use crate::exactalg::ring::Ring;
use crate::forms::{universal_form, BinaryForm, Generator, Gl2};
use crate::thetaoracle::{ThetaAlgebra, ThetaElement};

/// A verified pair of change-of-basis matrices for one generator.
#[derive(Debug, Clone)]
pub struct Gl2Witness<R: Ring> {
    pub generator: Generator,
    pub gamma: Gl2<R::Elem>,
    /// The transformed form `γ·f`.
    pub image: BinaryForm<R>,
    /// Row `i` is `ζ'_i` in the `ζ` basis of `R_f`.
    pub ring_map: Mat<R::Elem>,
    /// Row `s` is the image of the `s`-th basis element of `I_{γf}` in `I_f`.
    pub module_map: Mat<R::Elem>,
}

type Universal = Arc<(Mat<Poly>, Mat<Poly>)>;

fn cache() -> &'static Mutex<HashMap<(usize, Generator), Universal>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, Generator), Universal>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn universal_maps(n: usize, g: Generator) -> Result<Universal> {
    if let Some(hit) = cache().lock().expect("cache lock").get(&(n, g)) {
        return Ok(hit.clone());
    }
    let f = universal_form(n)?;
    let r = f.ring().clone();
    let gamma = g.matrix(&r);
    let image = f.act(&gamma)?;
    let alg = ThetaAlgebra::new(&f)?;
    let theta = alg.theta_pow(1);
    let lambda = alg.sub(&alg.constant(&gamma.a), &alg.scale(&gamma.b, &theta));
    let top = alg.sub(&alg.scale(&gamma.d, &theta), &alg.constant(&gamma.c));
    let theta2 = alg.mul(&top, &alg.inverse(&lambda)?);
    let mut pows = vec![alg.one()];
    for _ in 1..n {
        let next = alg.mul(pows.last().expect("nonempty"), &theta2);
        pows.push(next);
    }
    let zeta2 = |i: usize| -> ThetaElement<Poly> {
        let mut e = if i == 0 { alg.one() } else { alg.zero() };
        for u in 0..i {
            e = alg.add(&e, &alg.scale(image.coeff(u), &pows[i - u]));
        }
        e
    };
    let coords = |e: &ThetaElement<Poly>, k: i32| -> Result<Vec<Poly>> { Ok(alg.to_mixed_basis(e, k)?.coords) };
    let ring_map: Mat<Poly> = (0..n).map(|i| coords(&zeta2(i), 0)).collect::<Result<_>>()?;
    // basis 1, θ', ζ'_2, … of I_{γf}, scaled by a - bθ
    let module_map: Mat<Poly> = (0..n)
        .map(|s| {
            let b = if s == 1 { pows[1].clone() } else { zeta2(s) };
            coords(&alg.mul(&lambda, &b), 1)
        })
        .collect::<Result<_>>()?;
    let out = Arc::new((ring_map, module_map));
    cache().lock().expect("cache lock").insert((n, g), out.clone());
    Ok(out)
}

fn specialize<R: Ring>(m: &Mat<Poly>, f: &BinaryForm<R>) -> Mat<R::Elem> {
    matrix::map_mat(m, |p| p.eval(f.ring(), f.coeffs()))
}

/// Builds and verifies the witness that `R_f` and `I_f` are unchanged, up to
/// isomorphism, by the generator `g`. The action is the twist `-1` one
/// whatever the tag on `f`.
pub fn gl2_invariance_witness<R: Ring>(f: &BinaryForm<R>, g: Generator) -> Result<Gl2Witness<R>> {
    let n = f.degree();
    let r = f.ring();
    let gamma = g.matrix(r);
    let image = f.clone().with_twist(-1).act(&gamma)?;
    let maps = universal_maps(n, g)?;
    let u = specialize(&maps.0, f);
    let v = specialize(&maps.1, f);
    for (name, m) in [("ring", &u), ("module", &v)] {
        let det = matrix::det(r, m)?;
        if !r.is_unit(&det) {
            return Err(Error::Inconsistent(format!(
                "{name} map has determinant {}",
                r.render(&det)
            )));
        }
    }
    let t = build_ring(f);
    let t2 = build_ring(&image);
    for i in 0..n {
        for j in 0..n {
            let lhs = matrix::vec_mat(r, &t2.constants()[i][j], &u);
            if !r.vec_eq(&lhs, &t.mul(&u[i], &u[j])) {
                return Err(Error::Inconsistent(format!("ring map fails on ζ'_{i} ζ'_{j}")));
            }
        }
    }
    let m = build_module(f, 1)?;
    let m2 = build_module(&image, 1)?;
    for i in 1..n {
        let lhs = matrix::mat_mul(r, m2.action_matrix(i), &v);
        let rhs: Mat<R::Elem> = v.iter().map(|row| m.act(&u[i], row)).collect();
        if !matrix::mat_eq(r, &lhs, &rhs) {
            return Err(Error::Inconsistent(format!("module map does not commute with ζ'_{i}")));
        }
    }
    Ok(Gl2Witness {
        generator: g,
        gamma,
        image,
        ring_map: u,
        module_map: v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::integers::Integers;

    #[test]
    fn identity_gives_identity_maps() {
        let f = BinaryForm::from_ints(&[2, 3, -1, 4]).unwrap();
        let w = gl2_invariance_witness(&f, Generator::Identity).unwrap();
        assert!(matrix::is_identity(&Integers, &w.ring_map));
        assert!(matrix::is_identity(&Integers, &w.module_map));
    }

    #[test]
    fn generators_on_small_forms() {
        for c in [&[1, 1, 1][..], &[0, 2, 0, 3], &[5, 0, -2, 1, 0], &[0, 0, 0, 0]] {
            let f = BinaryForm::from_ints(c).unwrap();
            for g in [Generator::Swap, Generator::Shear] {
                gl2_invariance_witness(&f, g).unwrap();
                gl2_invariance_witness(&f.clone().with_twist(0), g).unwrap();
            }
        }
    }
}
