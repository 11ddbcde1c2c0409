//! Exhaustive tables of forms as JSON lines.
//!
//! Forms are numbered in lexicographic order of `(f_0, …, f_n)` with each
//! coefficient running from `-height` to `height`. The sidecar
//! `<out>.cursor` holds the index of the next form to compute. On restart
//! a partial last line is dropped and work resumes after the last complete
//! record, so the file never holds duplicates.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use formring::{build_ring, ring_disc, BinaryForm, Integers};

use crate::commands::{properties, roundtrip_one};
use crate::{CliError, CliResult};

pub const RECORD_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct RunRecord {
    pub v: u32,
    pub index: u64,
    pub n: usize,
    pub form: Vec<i64>,
    pub context: String,
    pub disc: String,
    pub disc_agrees: bool,
    pub primitive: bool,
    pub invertible: bool,
    /// `None` for `n = 2`.
    pub gorenstein: Option<bool>,
    /// `None` for `n = 2`.
    pub roundtrip: Option<bool>,
    pub micros: u64,
}

fn coefficients(mut index: u64, n: usize, height: u32) -> Vec<i64> {
    let base = 2 * height as u64 + 1;
    let mut c = vec![0i64; n + 1];
    for slot in c.iter_mut().rev() {
        *slot = (index % base) as i64 - height as i64;
        index /= base;
    }
    c
}

fn record(index: u64, n: usize, height: u32) -> Result<RunRecord, CliError> {
    let start = Instant::now();
    let form = coefficients(index, n, height);
    let f = BinaryForm::new(Integers, form.iter().map(|&c| BigInt::from(c)).collect(), -1)?;
    let disc = f.disc()?;
    let disc_agrees = ring_disc(&build_ring(&f))? == disc;
    let (primitive, invertible, gorenstein) = properties(&f)?;
    let roundtrip = (n >= 3).then(|| roundtrip_one(&f, &mut || 1).is_ok());
    Ok(RunRecord {
        v: RECORD_VERSION,
        index,
        n,
        form,
        context: "Z".into(),
        disc: disc.to_string(),
        disc_agrees,
        primitive,
        invertible,
        gorenstein,
        roundtrip,
        micros: start.elapsed().as_micros() as u64,
    })
}

fn cursor_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".cursor");
    PathBuf::from(s)
}

/// Truncates a partial trailing line and returns the index after the last
/// complete record.
fn recover(out: &Path, n: usize, height: u32) -> Result<u64, CliError> {
    if !out.exists() {
        return Ok(0);
    }
    let mut next = 0;
    let mut good_len = 0u64;
    let mut reader = BufReader::new(File::open(out)?);
    let mut line = String::new();
    loop {
        line.clear();
        let read = reader.read_line(&mut line)?;
        if read == 0 || !line.ends_with('\n') {
            break;
        }
        let rec: RunRecord = serde_json::from_str(line.trim_end())
            .map_err(|e| CliError::Usage(format!("{} is not a record file: {e}", out.display())))?;
        if rec.n != n || rec.form.iter().any(|c| c.unsigned_abs() > height as u64) {
            return Err(CliError::Usage(format!(
                "{} was written with different parameters",
                out.display()
            )));
        }
        next = rec.index + 1;
        good_len += read as u64;
    }
    OpenOptions::new().write(true).open(out)?.set_len(good_len)?;
    Ok(next)
}

pub fn run(n: usize, height: u32, out: &Path, batch: usize) -> CliResult {
    if n < 2 {
        return Err(CliError::Usage(format!("degree {n} is below 2")));
    }
    let total = (2 * height as u64 + 1)
        .checked_pow(n as u32 + 1)
        .ok_or_else(|| CliError::Usage("too many forms".into()))?;
    let cursor = cursor_path(out);
    let mut next = recover(out, n, height)?;
    if let Ok(s) = fs::read_to_string(&cursor) {
        if s.trim().parse::<u64>().ok() != Some(next) {
            eprintln!("note: cursor disagrees with {}, resuming at record {next}", out.display());
        }
    }
    let mut file = OpenOptions::new().create(true).append(true).open(out)?;
    let batch = batch.max(1) as u64;
    let mut failures = 0u64;
    while next < total {
        let end = (next + batch).min(total);
        let records: Vec<RunRecord> = (next..end)
            .into_par_iter()
            .map(|i| record(i, n, height))
            .collect::<Result<_, _>>()?;
        let mut buf = String::new();
        for r in &records {
            if !r.disc_agrees || r.roundtrip == Some(false) {
                failures += 1;
            }
            buf.push_str(&serde_json::to_string(r).expect("records serialize"));
            buf.push('\n');
        }
        file.write_all(buf.as_bytes())?;
        file.sync_data()?;
        next = end;
        fs::write(&cursor, format!("{next}\n"))?;
    }
    println!("{total} records in {}", out.display());
    if failures > 0 {
        return Err(CliError::Failed(format!("{failures} records failed a check")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order() {
        assert_eq!(coefficients(0, 2, 1), vec![-1, -1, -1]);
        assert_eq!(coefficients(26, 2, 1), vec![1, 1, 1]);
        assert_eq!(coefficients(13, 2, 1), vec![0, 0, 0]);
    }
}
