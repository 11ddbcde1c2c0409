use rand::Rng;
use serde_json::json;

use formring::forms::universal_disc;
use formring::random;
use formring::ringmod::{dual_pairing_matrix, inverse_different_map};
use formring::thetaoracle::check_global_sections;
use formring::{
    build_module, build_ring, check_tables, gl2_invariance_witness, ring_disc, universal_form,
    BinaryForm, Generator, Integers, Ring,
};

use crate::commands::{print_json, properties, roundtrip_one};
use crate::{CliError, CliResult, Format, Suite};

/// Outcome of one named check over a number of cases.
struct Check {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

struct Report {
    checks: Vec<Check>,
}

impl Report {
    fn new() -> Self {
        Report { checks: Vec::new() }
    }

    fn get(&mut self, name: &'static str) -> &mut Check {
        if let Some(i) = self.checks.iter().position(|c| c.name == name) {
            return &mut self.checks[i];
        }
        self.checks.push(Check {
            name,
            cases: 0,
            failure: None,
        });
        self.checks.last_mut().expect("just pushed")
    }

    /// Records one case; only the first failure per check is kept.
    fn record(&mut self, name: &'static str, outcome: Result<(), String>) {
        let c = self.get(name);
        c.cases += 1;
        if let (None, Err(e)) = (&c.failure, outcome) {
            c.failure = Some(e);
        }
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }
}

fn lib<T>(r: formring::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn structure<R: Ring>(f: &BinaryForm<R>, report: &mut Report) {
    let t = build_ring(f);
    report.record("ring axioms", lib(t.check()));
    let modules = (-1..f.degree() as i32).try_for_each(|k| {
        lib(build_module(f, k).and_then(|m| m.check(&t))).map_err(|e| format!("k = {k}: {e}"))
    });
    report.record("module axioms", modules);
}

fn universal(n: usize, report: &mut Report) -> Result<(), CliError> {
    let f = universal_form(n)?;
    structure(&f, report);
    if n <= 4 {
        let ok = f.ring().equal(&ring_disc(&build_ring(&f))?, &universal_disc(n)?);
        report.record("discriminant identity", ok.then_some(()).ok_or("polynomials differ".into()));
    }
    for k in -1..n as i32 {
        let m = dual_pairing_matrix(&f, k)?;
        let ok = formring::exactalg::matrix::is_identity(f.ring(), &m);
        report.record("duality", ok.then_some(()).ok_or(format!("k = {k}")));
    }
    report.record("inverse different", lib(inverse_different_map(&f).map(|_| ())));
    if n <= 4 {
        report.record("oracle agreement", lib(check_tables(&f)));
    }
    if (3..=4).contains(&n) {
        report.record("pair round trip", roundtrip_one(&f, &mut || 1));
    }
    Ok(())
}

fn random_form_checks(f: &BinaryForm<Integers>, report: &mut Report, lift: &mut impl FnMut() -> i64) {
    let n = f.degree();
    structure(f, report);
    let disc = lib(f.disc()).and_then(|d| {
        let t = lib(ring_disc(&build_ring(f)))?;
        (d == t).then_some(()).ok_or(format!("{}: {d} vs {t}", f.render()))
    });
    report.record("discriminant", disc);
    let props = properties(f).map_err(|e| format!("{e:?}")).and_then(|(p, inv, gor)| {
        let ok = f.is_zero() || (inv == p && gor.is_none_or(|g| g == p));
        ok.then_some(())
            .ok_or(format!("{}: primitive {p}, invertible {inv}, gorenstein {gor:?}", f.render()))
    });
    report.record("invertibility matches primitivity", props);
    for g in [Generator::Swap, Generator::Shear] {
        report.record("GL2 witness", lib(gl2_invariance_witness(f, g).map(|_| ())));
    }
    report.record("inverse different", lib(inverse_different_map(f).map(|_| ())));
    if n >= 3 {
        report.record("pair round trip", roundtrip_one(f, lift).map_err(|e| format!("{}: {e}", f.render())));
    }
}

pub fn run(suite: Suite, n: usize, trials: usize, seed: u64, height: i64, format: Format) -> CliResult {
    if n < 2 {
        return Err(CliError::Usage(format!("degree {n} is below 2")));
    }
    let mut report = Report::new();
    let mut rng = random::rng(seed);
    let mut lift_rng = random::rng(seed ^ 0x5eed);
    let mut lift = move || lift_rng.gen_range(-9..=9);
    match suite {
        Suite::Universal => universal(n, &mut report)?,
        Suite::Random => {
            for _ in 0..trials {
                let f = random::form(&mut rng, n, height);
                random_form_checks(&f, &mut report, &mut lift);
            }
        }
        Suite::Oracle => {
            for _ in 0..trials {
                let f = random::form_nonzero_at(&mut rng, n, height, &[0]);
                report.record("oracle agreement", lib(check_tables(&f)).map_err(|e| format!("{}: {e}", f.render())));
                if !Integers.is_zero(f.coeff(n)) {
                    report.record("global sections", lib(check_global_sections(&f)));
                }
            }
        }
    }
    match format {
        Format::Json => print_json(&json!({
            "n": n,
            "passed": report.passed(),
            "checks": report.checks.iter().map(|c| json!({
                "name": c.name,
                "cases": c.cases,
                "failure": c.failure,
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            for c in &report.checks {
                match &c.failure {
                    None => println!("ok   {} ({} cases)", c.name, c.cases),
                    Some(e) => println!("FAIL {} ({} cases): {e}", c.name, c.cases),
                }
            }
            if report.checks.is_empty() {
                println!("ok   no cases");
            }
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Failed("verification failed".into()))
    }
}
