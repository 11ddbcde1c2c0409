//! Exhaustive enumeration of based pairs with small coefficients, for
//! exploring which rings occur. Nothing is asserted about the results.

use num_bigint::BigInt;

use super::{reconstruct_from_coefficients, validate_pair};
use crate::error::Result;
use crate::exactalg::integers::Integers;
use crate::ringmod::{ring_disc, MultTable};

#[derive(Debug, Clone)]
pub struct SearchHit {
    pub a: Vec<BigInt>,
    pub ring: MultTable<Integers>,
    pub disc: BigInt,
    pub valid: bool,
}

/// Every coefficient vector with `|a_i| ≤ height`, in lexicographic order,
/// rebuilt into a pair and validated.
pub fn search_pairs(n: usize, height: i64) -> impl Iterator<Item = Result<SearchHit>> {
    let base = 2 * height + 1;
    let total = (base as u64).pow(n as u32 + 1);
    (0..total).map(move |mut idx| {
        let mut a = vec![BigInt::from(0); n + 1];
        for slot in a.iter_mut().rev() {
            *slot = BigInt::from((idx % base as u64) as i64 - height);
            idx /= base as u64;
        }
        let based = reconstruct_from_coefficients(&Integers, &a)?;
        let valid = validate_pair(&based.pair)?.passes();
        let disc = ring_disc(&based.pair.ring_table)?;
        Ok(SearchHit {
            a,
            ring: based.pair.ring_table,
            disc,
            valid,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cubic_search() {
        let hits: Vec<SearchHit> = search_pairs(3, 1).collect::<Result<_>>().unwrap();
        assert_eq!(hits.len(), 81);
        assert!(hits.iter().all(|h| h.valid));
    }
}
