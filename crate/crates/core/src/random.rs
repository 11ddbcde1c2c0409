//! Seeded random forms for test suites and the command line. Forms carry
//! twist `-1`, like [`BinaryForm::from_ints`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::integers::Integers;
use crate::forms::BinaryForm;

pub type FormRng = ChaCha8Rng;

pub fn rng(seed: u64) -> FormRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Coefficients drawn uniformly from `[-height, height]`.
pub fn form(rng: &mut FormRng, n: usize, height: i64) -> BinaryForm<Integers> {
    let c: Vec<BigInt> = (0..=n).map(|_| BigInt::from(rng.gen_range(-height..=height))).collect();
    BinaryForm::new(Integers, c, -1).expect("degree is positive")
}

/// Like [`form`] but with every listed coefficient nonzero.
pub fn form_nonzero_at(rng: &mut FormRng, n: usize, height: i64, at: &[usize]) -> BinaryForm<Integers> {
    loop {
        let f = form(rng, n, height);
        if at.iter().all(|&i| !f.coeff(i).is_zero()) {
            return f;
        }
    }
}

fn content(f: &BinaryForm<Integers>) -> BigInt {
    f.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// A form whose coefficients have gcd 1.
pub fn primitive_form(rng: &mut FormRng, n: usize, height: i64) -> BinaryForm<Integers> {
    loop {
        let f = form(rng, n, height);
        if content(&f).is_one() {
            return f;
        }
    }
}

/// A primitive form times a random integer in `[2, 6]`.
pub fn imprimitive_form(rng: &mut FormRng, n: usize, height: i64) -> BinaryForm<Integers> {
    let f = form_nonzero_at(rng, n, height, &[0]);
    let c = content(&f);
    let m = BigInt::from(rng.gen_range(2..=6));
    let coeffs = f.coeffs().iter().map(|x| x / &c * &m).collect();
    BinaryForm::new(Integers, coeffs, -1).expect("degree is positive")
}

/// A form with every coefficient divisible by `m`.
pub fn form_divisible_by(rng: &mut FormRng, n: usize, height: i64, m: i64) -> BinaryForm<Integers> {
    let f = form(rng, n, height);
    let coeffs = f.coeffs().iter().map(|x| x * m).collect();
    BinaryForm::new(Integers, coeffs, -1).expect("degree is positive")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_shaped() {
        let a = form(&mut rng(7), 4, 10);
        let b = form(&mut rng(7), 4, 10);
        assert!(a.same_as(&b));
        let mut r = rng(1);
        for _ in 0..20 {
            assert!(primitive_form(&mut r, 3, 5).is_primitive().unwrap());
            assert!(!imprimitive_form(&mut r, 3, 5).is_primitive().unwrap());
            assert!(!form_nonzero_at(&mut r, 5, 2, &[0, 5]).coeff(5).is_zero());
        }
    }
}
