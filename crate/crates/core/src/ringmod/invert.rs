//! Invertibility of `I_f` and the Gorenstein property of `R_f` over `Z`.

use num_bigint::BigInt;

use super::words::{BasisKind, Words};
use crate::error::{Error, Result};
use crate::exactalg::integers::Integers;
use crate::exactalg::intmat::IntMatrix;
use crate::forms::BinaryForm;
use crate::thetaoracle::{Lattice, ThetaAlgebra};

fn require_nonzero(f: &BinaryForm<Integers>) -> Result<()> {
    if f.is_zero() {
        return Err(Error::Precondition("the zero form".into()));
    }
    Ok(())
}

/// Whether `I_f I_f^# = R_f`, decided on the tables.
///
/// Every product of a basis element of `I_f` with one of `I_f^#` is written
/// in the `ζ` basis of `R_f`; the products span `R_f` iff their Hermite form
/// is the identity.
pub fn is_invertible_family(f: &BinaryForm<Integers>) -> Result<bool> {
    require_nonzero(f)?;
    let n = f.degree();
    let w = Words::new(&Integers, f.coeffs());
    let a = BasisKind::Standard(1).words(n)?;
    let b = BasisKind::Standard(-1).words(n)?;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(a.len() * b.len());
    for &x in &a {
        for &y in &b {
            rows.push(w.combo_coords(&w.word_product(x, y), 0)?);
        }
    }
    let span = IntMatrix::from_rows(rows, n)?.row_span_basis();
    Ok(span == IntMatrix::identity(n))
}

/// Whether `R_f` is Gorenstein, for `n ≥ 3`.
///
/// Tests invertibility of `J = I_{f,n-2}`, which is isomorphic to the
/// inverse different: `J · (R_f : J) = R_f`. The form is first moved so that
/// `f_0 ≠ 0`, which does not change `R_f` up to isomorphism.
pub fn is_gorenstein(f: &BinaryForm<Integers>) -> Result<bool> {
    require_nonzero(f)?;
    let n = f.degree();
    if n < 3 {
        return Err(Error::Precondition(format!("Gorenstein test needs n ≥ 3, got {n}")));
    }
    let (g, _) = f
        .move_leading_nonzero()
        .ok_or_else(|| Error::Precondition("no GL2 move gives f_0 ≠ 0".into()))?;
    let alg = ThetaAlgebra::new(&g)?;
    let r = Lattice::from_elements(&alg, &alg.module_basis(0)?);
    let j = Lattice::from_elements(&alg, &alg.module_basis(n as i32 - 2)?);
    let c = r.colon(&j, &alg)?;
    Ok(j.product(&c, &alg) == r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(c: &[i64]) -> BinaryForm<Integers> {
        BinaryForm::from_ints(c).unwrap()
    }

    #[test]
    fn invertibility_examples() {
        assert!(is_invertible_family(&form(&[1, 2, 3, 4])).unwrap());
        assert!(!is_invertible_family(&form(&[2, 4, 6])).unwrap());
        assert!(is_invertible_family(&form(&[3, 6, 4])).unwrap());
        assert!(is_invertible_family(&form(&[0, 0, 5, 0, 2])).unwrap());
        assert!(is_invertible_family(&form(&[0, 0, 0])).is_err());
    }

    #[test]
    fn gorenstein_examples() {
        assert!(is_gorenstein(&form(&[1, 0, 0, 1])).unwrap());
        assert!(!is_gorenstein(&form(&[2, 0, 0, 2])).unwrap());
        assert!(is_gorenstein(&form(&[1, 1, 1, 1, 1])).unwrap());
        assert!(!is_gorenstein(&form(&[0, 6, 0, 3, 9])).unwrap());
        assert!(is_gorenstein(&form(&[0, 0, 2, 3])).unwrap());
        assert!(is_gorenstein(&form(&[1, 1, 1])).is_err());
    }
}
