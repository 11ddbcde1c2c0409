use num_bigint::BigInt;
use rand::Rng;
use serde_json::{json, Value};

use formring::pairs::{form_to_raw_pair, validate_pair};
use formring::{
    build_module, build_ring, form_to_pair, is_gorenstein, is_invertible_family, normalize,
    pair_to_form, reconstruct_from_coefficients, ring_disc, universal_form, BinaryForm,
    ContextDescriptor, Integers, IntegersMod, Ring,
};

use crate::{CliError, CliResult, FormArgs, Format};

pub enum Ctx {
    Z,
    Mod(IntegersMod),
    Universal,
}

pub fn context(a: &FormArgs) -> Result<Ctx, CliError> {
    if a.universal {
        return Ok(Ctx::Universal);
    }
    match a.context.as_deref().unwrap_or("Z").parse::<ContextDescriptor>()? {
        ContextDescriptor::Integers => Ok(Ctx::Z),
        ContextDescriptor::IntegersMod(m) => Ok(Ctx::Mod(IntegersMod::new(m)?)),
        other => Err(CliError::Usage(format!("context {other} is not supported here"))),
    }
}

pub fn parse_form<R: Ring>(ring: R, n: usize, s: &str) -> Result<BinaryForm<R>, CliError> {
    let f = BinaryForm::parse(ring, s, -1)?;
    if f.degree() != n {
        return Err(CliError::Usage(format!(
            "--n {n} needs {} coefficients, got {}",
            n + 1,
            f.degree() + 1
        )));
    }
    Ok(f)
}

/// Runs `$body` with `$f` bound to the form described by `$args` in its
/// context.
macro_rules! with_form {
    ($args:expr, $f:ident => $body:expr) => {{
        let args: &FormArgs = $args;
        let literal = args.form.as_deref().unwrap_or("");
        match context(args)? {
            Ctx::Z => {
                let $f = parse_form(Integers, args.n, literal)?;
                $body
            }
            Ctx::Mod(m) => {
                let $f = parse_form(m, args.n, literal)?;
                $body
            }
            Ctx::Universal => {
                let $f = universal_form(args.n)?;
                $body
            }
        }
    }};
}

pub fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

pub fn ring(a: &FormArgs) -> CliResult {
    with_form!(a, f => {
        let t = build_ring(&f);
        match a.format {
            Format::Json => print_json(&t.to_json()),
            Format::Text => println!("{}", t.render()),
        }
        Ok(())
    })
}

pub fn ideal(a: &FormArgs, k: i32) -> CliResult {
    with_form!(a, f => {
        let m = build_module(&f, k)?;
        match a.format {
            Format::Json => print_json(&m.to_json()),
            Format::Text => println!("{}", m.render()),
        }
        Ok(())
    })
}

fn disc_of<R: Ring>(f: &BinaryForm<R>, format: Format) -> CliResult {
    let r = f.ring();
    let form_disc = f.disc()?;
    let table_disc = ring_disc(&build_ring(f))?;
    let equal = r.equal(&form_disc, &table_disc);
    match format {
        Format::Json => print_json(&json!({
            "disc_form": r.render(&form_disc),
            "ring_disc": r.render(&table_disc),
            "equal": equal,
        })),
        Format::Text => {
            println!("disc_form: {}", r.render(&form_disc));
            println!("ring_disc: {}", r.render(&table_disc));
            println!("equal: {equal}");
        }
    }
    if equal {
        Ok(())
    } else {
        Err(CliError::Failed("discriminants differ".into()))
    }
}

pub fn disc(a: &FormArgs) -> CliResult {
    with_form!(a, f => disc_of(&f, a.format))
}

/// Primitivity and the two invertibility properties. The zero form has
/// neither property; the Gorenstein test needs `n ≥ 3`.
pub fn properties(f: &BinaryForm<Integers>) -> Result<(bool, bool, Option<bool>), CliError> {
    let primitive = f.is_primitive()?;
    if f.is_zero() {
        return Ok((false, false, (f.degree() >= 3).then_some(false)));
    }
    let invertible = is_invertible_family(f)?;
    let gorenstein = if f.degree() >= 3 {
        Some(is_gorenstein(f)?)
    } else {
        None
    };
    Ok((primitive, invertible, gorenstein))
}

pub fn props(n: usize, literal: &str, format: Format) -> CliResult {
    let f = parse_form(Integers, n, literal)?;
    let (primitive, invertible, gorenstein) = properties(&f)?;
    let content = f.content()?;
    match format {
        Format::Json => print_json(&json!({
            "form": f.render(),
            "content": content.to_string(),
            "primitive": primitive,
            "invertible": invertible,
            "gorenstein": gorenstein,
        })),
        Format::Text => {
            println!("content: {content}");
            println!("primitive: {primitive}");
            println!("invertible: {invertible}");
            match gorenstein {
                Some(g) => println!("gorenstein: {g}"),
                None => println!("gorenstein: n/a (n < 3)"),
            }
        }
    }
    Ok(())
}

/// Every round-trip check on one form. `lift` supplies the integers used for
/// a second choice of lifts.
pub fn roundtrip_one<R: Ring>(f: &BinaryForm<R>, lift: &mut impl FnMut() -> i64) -> Result<(), String> {
    let r = f.ring();
    let n = f.degree();
    let fail = |what: &str, e: formring::Error| format!("{what}: {e}");
    let raw = form_to_raw_pair(f).map_err(|e| fail("form to pair", e))?;
    let report = validate_pair(&raw).map_err(|e| fail("validation", e))?;
    if let Some(v) = report.violations.first() {
        return Err(format!("pair of the form is invalid: {v}"));
    }
    let based = normalize(&raw).map_err(|e| fail("normalize", e))?;
    if !r.vec_eq(&based.a, f.coeffs()) {
        let a: Vec<String> = based.a.iter().map(|x| r.render(x)).collect();
        return Err(format!("based coefficients are ({})", a.join(", ")));
    }
    let g = pair_to_form(&based.pair).map_err(|e| fail("pair to form", e))?;
    if !r.vec_eq(g.coeffs(), f.coeffs()) {
        return Err(format!("pair gives back {}", g.render()));
    }
    let mut draw = |len: usize| -> Vec<R::Elem> {
        (0..len).map(|_| r.from_int(&BigInt::from(lift()))).collect()
    };
    let (xs, ys, zs) = (draw(n - 2), draw(n - 2), draw(n - 1));
    let moved = raw.relift(&xs, &ys, &zs).map_err(|e| fail("relift", e))?;
    let g2 = pair_to_form(&moved).map_err(|e| fail("pair to form after relift", e))?;
    if !r.vec_eq(g2.coeffs(), f.coeffs()) {
        return Err(format!("second lift gives {}", g2.render()));
    }
    let again = normalize(&moved).map_err(|e| fail("normalize after relift", e))?;
    if let Some(d) = based.pair.first_difference(&again.pair) {
        return Err(format!("normalization depends on the lift at {d}"));
    }
    let rebuilt = reconstruct_from_coefficients(r, g.coeffs()).map_err(|e| fail("reconstruct", e))?;
    if let Some(d) = based.pair.first_difference(&rebuilt.pair) {
        return Err(format!("reconstruction differs at {d}"));
    }
    let direct = form_to_pair(f).map_err(|e| fail("form to pair", e))?;
    if !direct.equal(&based) {
        return Err("form_to_pair is not deterministic".into());
    }
    Ok(())
}

pub enum Source {
    Literal(String),
    Random { trials: usize, seed: u64, height: i64 },
}

pub fn roundtrip(n: usize, source: Source, seed: u64, format: Format) -> CliResult {
    if n < 3 {
        return Err(CliError::Usage(format!("pairs need n ≥ 3, got {n}")));
    }
    let forms: Vec<BinaryForm<Integers>> = match source {
        Source::Literal(s) => vec![parse_form(Integers, n, &s)?],
        Source::Random { trials, seed, height } => {
            let mut rng = formring::random::rng(seed);
            (0..trials).map(|_| formring::random::form(&mut rng, n, height)).collect()
        }
    };
    let mut lift_rng = formring::random::rng(seed ^ 0x5eed);
    let mut lift = move || lift_rng.gen_range(-9..=9);
    let failures: Vec<(String, String)> = forms
        .iter()
        .filter_map(|f| roundtrip_one(f, &mut lift).err().map(|e| (f.render(), e)))
        .collect();
    match format {
        Format::Json => print_json(&json!({
            "n": n,
            "trials": forms.len(),
            "passed": forms.len() - failures.len(),
            "failures": failures
                .iter()
                .map(|(f, e)| json!({"form": f, "diagnostic": e}))
                .collect::<Vec<_>>(),
        })),
        Format::Text => {
            for (f, e) in &failures {
                println!("FAIL {f}: {e}");
            }
            let verdict = if failures.is_empty() { "pass" } else { "fail" };
            println!(
                "{verdict}: {}/{} forms round trip",
                forms.len() - failures.len(),
                forms.len()
            );
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{} round trips failed", failures.len())))
    }
}
