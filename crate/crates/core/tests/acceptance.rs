//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::Rng;

use formring::exactalg::hom::ReduceMod;
use formring::exactalg::matrix;
use formring::forms::universal_disc;
use formring::pairs::{criteria_agree, form_to_raw_pair, Perturbation};
use formring::random::{self, FormRng};
use formring::ringmod::{dual_pairing_matrix, inverse_different_map};
use formring::thetaoracle::check_global_sections;
use formring::{
    build_module, build_ring, check_tables, form_to_pair, gl2_invariance_witness, is_gorenstein,
    is_invertible_family, pair_to_form, reconstruct_from_coefficients, ring_disc, universal_form,
    BinaryForm, Generator, Integers, Ring,
};

type Outcome = Result<String, String>;

fn err<E: std::fmt::Display>(ctx: impl std::fmt::Display) -> impl FnOnce(E) -> String {
    move |e| format!("{ctx}: {e}")
}

fn universal_suite() -> Outcome {
    for n in 3..=6 {
        let f = universal_form(n).map_err(err("universal form"))?;
        let t = build_ring(&f);
        t.check().map_err(err(format!("R_f, n = {n}")))?;
        for k in -1..n as i32 {
            build_module(&f, k)
                .and_then(|m| m.check(&t))
                .map_err(err(format!("I_f^{k}, n = {n}")))?;
        }
    }
    Ok("n = 3..6, all k".into())
}

fn discriminants(rng: &mut FormRng) -> Outcome {
    for n in 2..=4 {
        let f = universal_form(n).map_err(err("universal form"))?;
        let lhs = ring_disc(&build_ring(&f)).map_err(err("ring disc"))?;
        let rhs = universal_disc(n).map_err(err("form disc"))?;
        if !f.ring().equal(&lhs, &rhs) {
            return Err(format!("universal identity fails for n = {n}"));
        }
    }
    for _ in 0..500 {
        let n = rng.gen_range(2..=6);
        let f = random::form(rng, n, 50);
        let lhs = ring_disc(&build_ring(&f)).map_err(err("ring disc"))?;
        let rhs = f.disc().map_err(err("form disc"))?;
        if lhs != rhs {
            return Err(format!("{}: {lhs} vs {rhs}", f.render()));
        }
    }
    Ok("universal n = 2..4, 500 random forms".into())
}

fn oracle(rng: &mut FormRng) -> Outcome {
    let mut sections = 0;
    for n in 2..=6 {
        for t in 0..200 {
            let f = random::form_nonzero_at(rng, n, 20, &[0]);
            check_tables(&f).map_err(err(f.render()))?;
            if t % 10 == 0 && !Integers.is_zero(f.coeff(n)) {
                check_global_sections(&f).map_err(err(format!("sections of {}", f.render())))?;
                sections += 1;
            }
        }
    }
    Ok(format!("1000 forms, {sections} global-section comparisons"))
}

fn duality(rng: &mut FormRng) -> Outcome {
    for t in 0..100 {
        let n = 2 + t % 5;
        let f = random::form(rng, n, 20);
        let r = f.ring();
        for k in -1..n as i32 {
            let m = dual_pairing_matrix(&f, k).map_err(err("pairing"))?;
            if !matrix::is_identity(r, &m) {
                return Err(format!("pairing for {} at k = {k} is not the identity", f.render()));
            }
        }
        let inv = inverse_different_map(&f).map_err(err(f.render()))?;
        if !inv.is_unimodular() {
            return Err(format!("inverse different of {} has det {}", f.render(), inv.det));
        }
    }
    Ok("100 forms, n = 2..6".into())
}

fn invertibility(rng: &mut FormRng) -> Outcome {
    for n in 3..=6 {
        for t in 0..100 {
            let f = if t < 50 {
                random::primitive_form(rng, n, 10)
            } else {
                random::imprimitive_form(rng, n, 10)
            };
            let p = f.is_primitive().map_err(err("content"))?;
            let inv = is_invertible_family(&f).map_err(err(f.render()))?;
            let gor = is_gorenstein(&f).map_err(err(f.render()))?;
            if inv != p || gor != p || p != (t < 50) {
                return Err(format!(
                    "{}: primitive {p}, invertible {inv}, gorenstein {gor}",
                    f.render()
                ));
            }
        }
    }
    Ok("400 forms, no exceptions".into())
}

fn round_trip<R: Ring>(f: &BinaryForm<R>) -> Result<(), String> {
    let based = form_to_pair(f).map_err(err(f.render()))?;
    let r = f.ring();
    if !r.vec_eq(&based.a, f.coeffs()) {
        return Err(format!("{}: based coefficients differ", f.render()));
    }
    let g = pair_to_form(&based.pair).map_err(err(f.render()))?;
    if !r.vec_eq(g.coeffs(), f.coeffs()) {
        return Err(format!("{}: pair gives back {}", f.render(), g.render()));
    }
    let rebuilt = reconstruct_from_coefficients(r, g.coeffs()).map_err(err(f.render()))?;
    if let Some(d) = based.pair.first_difference(&rebuilt.pair) {
        return Err(format!("{}: reconstruction differs at {d}", f.render()));
    }
    Ok(())
}

fn round_trips(rng: &mut FormRng) -> Outcome {
    for n in 3..=4 {
        round_trip(&universal_form(n).map_err(err("universal form"))?)?;
    }
    for n in 3..=8 {
        for _ in 0..200 {
            round_trip(&random::form(rng, n, 20))?;
        }
    }
    Ok("universal n = 3, 4 and 1200 random forms".into())
}

fn base_change(rng: &mut FormRng) -> Outcome {
    let moduli = [2i64, 3, 4, 5, 12];
    let mut zero_cases = 0;
    for t in 0..100 {
        let m = moduli[t % moduli.len()];
        let n = rng.gen_range(2..=6);
        let divisible = t % 4 == 0;
        let f = if divisible {
            random::form_divisible_by(rng, n, 10, m)
        } else {
            random::form(rng, n, 30)
        };
        let red = ReduceMod::new(m).map_err(err("modulus"))?;
        let fm = f.map(&red);
        let ring = build_ring(&f).map(&red);
        if !ring.equal(&build_ring(&fm)) {
            return Err(format!("R_f of {} mod {m}", f.render()));
        }
        for k in -1..n as i32 {
            let a = build_module(&f, k).map_err(err("module"))?.map(&red);
            let b = build_module(&fm, k).map_err(err("module"))?;
            if !a.equal(&b) {
                return Err(format!("I_f^{k} of {} mod {m}", f.render()));
            }
        }
        if divisible {
            if !ring.is_zero_product() {
                return Err(format!("{} mod {m} should have zero products", f.render()));
            }
            zero_cases += 1;
        }
    }
    Ok(format!("100 pairs, {zero_cases} reducing to the zero form"))
}

fn gl2(rng: &mut FormRng) -> Outcome {
    for t in 0..100 {
        let n = 2 + t % 4;
        let f = random::form(rng, n, 20);
        for g in [Generator::Swap, Generator::Shear] {
            let w = gl2_invariance_witness(&f, g).map_err(err(format!("{} {g:?}", f.render())))?;
            for m in [&w.ring_map, &w.module_map] {
                let d = matrix::det(&Integers, m).map_err(err("det"))?;
                if !Integers.is_unit(&d) {
                    return Err(format!("{} {g:?}: determinant {d}", f.render()));
                }
            }
        }
    }
    Ok("100 forms, swap and shear".into())
}

fn exactness(rng: &mut FormRng) -> Outcome {
    for n in 3..=8 {
        let r = formring::pairs::fixed_sequence_report(n).map_err(err("smith form"))?;
        if !r.is_exact() {
            return Err(format!("fixed sequence not exact for n = {n}: {r:?}"));
        }
    }
    let (mut accepted, mut rejected) = (0, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(3..=6);
        let p = form_to_raw_pair(&random::form(rng, n, 10)).map_err(err("pair"))?;
        let delta = BigInt::from(if rng.gen() { 1 } else { -1 } * rng.gen_range(1..=3));
        let kind = if rng.gen_range(0..4) == 0 {
            Perturbation::Phi {
                i: rng.gen_range(0..n - 1),
                j: rng.gen_range(0..n - 1),
            }
        } else {
            Perturbation::Action {
                i: rng.gen_range(1..n),
                s: rng.gen_range(0..n),
                t: rng.gen_range(0..n),
            }
        };
        let q = p.perturbed(kind, &delta).map_err(err("perturb"))?;
        let (a, b) = criteria_agree(&q).map_err(err("criteria"))?;
        if a != b {
            return Err(format!("criteria disagree on {kind:?} by {delta}: zeros/ones {a}, exact {b}"));
        }
        if a {
            accepted += 1;
        } else {
            rejected += 1;
        }
    }
    Ok(format!("n = 3..8 exact; fuzz accepted {accepted}, rejected {rejected}"))
}

fn main() -> ExitCode {
    let mut rng = random::rng(20_241_018);
    let criteria: Vec<(&str, Box<dyn FnMut(&mut FormRng) -> Outcome>)> = vec![
        ("universal structure identities", Box::new(|_| universal_suite())),
        ("ring discriminant equals form discriminant", Box::new(discriminants)),
        ("tables agree with the theta model", Box::new(oracle)),
        ("duality and inverse different", Box::new(duality)),
        ("invertibility and Gorenstein match primitivity", Box::new(invertibility)),
        ("pair round trips", Box::new(round_trips)),
        ("base change commutes with construction", Box::new(base_change)),
        ("GL2 invariance witnesses", Box::new(gl2)),
        ("exactness and criteria agreement", Box::new(exactness)),
    ];
    let mut failed = 0;
    for (i, (name, mut run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = run(&mut rng);
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(note) => println!("PASS {} {name} ({note}; {secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {} {name}: {e} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
