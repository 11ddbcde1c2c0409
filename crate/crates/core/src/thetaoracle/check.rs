//! Comparison of the word-engine tables with products computed in `Q_f`.

use super::{global_sections, Lattice, ThetaAlgebra};
use crate::error::{Error, Result};
use crate::exactalg::frac::FractionBase;
use crate::exactalg::integers::Integers;
use crate::forms::BinaryForm;
use crate::ringmod::{build_module, build_ring};

/// Checks every `ζ_i ζ_j` of `R_f` and every `ζ_i b_s` of `I_f^k`,
/// `-1 ≤ k ≤ n-1`, against the θ-model. Needs `f_0 ≠ 0`.
pub fn check_tables<B: FractionBase>(f: &BinaryForm<B>) -> Result<()> {
    let alg = ThetaAlgebra::new(f)?;
    let r = f.ring();
    let n = f.degree();
    let table = build_ring(f);
    let zetas = alg.module_basis(0)?;
    for i in 1..n {
        for j in i..n {
            let got = alg.to_mixed_basis(&alg.mul(&zetas[i], &zetas[j]), 0)?.coords;
            let want: Vec<_> = (0..n).map(|l| table.c(i, j, l).clone()).collect();
            if !r.vec_eq(&got, &want) {
                return Err(Error::Inconsistent(format!("ζ_{i} ζ_{j} differs from the θ-model")));
            }
        }
    }
    for k in -1..n as i32 {
        let module = build_module(f, k)?;
        let basis = alg.module_basis(k)?;
        for i in 1..n {
            for (s, b) in basis.iter().enumerate() {
                let got = alg.to_mixed_basis(&alg.mul(&zetas[i], b), k)?.coords;
                if !r.vec_eq(&got, &module.action_matrix(i)[s]) {
                    return Err(Error::Inconsistent(format!(
                        "ζ_{i} b_{s} in I^{k} differs from the θ-model"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Checks that the global sections of `O(k)` span the literal basis of
/// `I_f^k` for every `k`. Needs `f_0 f_n ≠ 0`.
pub fn check_global_sections(f: &BinaryForm<Integers>) -> Result<()> {
    let alg = ThetaAlgebra::new(f)?;
    let n = f.degree();
    for k in -1..n as i32 {
        let want = Lattice::from_elements(&alg, &alg.module_basis(k)?);
        if global_sections(f, k, n)? != want {
            return Err(Error::Inconsistent(format!("global sections of O({k}) differ")));
        }
    }
    Ok(())
}
