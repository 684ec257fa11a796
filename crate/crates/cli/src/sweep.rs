//! Parameter sweeps: one row per λ tuple, written in tuple order and resumable
//! from a partially written output file.

use std::collections::HashSet;
use std::fs::OpenOptions;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use anyhow::{Context, Result};
use genfermat::closedform::char2_lower_bound;
use genfermat::{CartierMatrix, Curve, FieldElement};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::job::{Format, JobSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub lambda: String,
    pub a_number: Option<usize>,
    pub p_rank: Option<usize>,
    pub bound: Option<u64>,
    pub attained: Option<bool>,
    pub error: Option<String>,
}

pub const HEADER: [&str; 6] = ["lambda", "a_number", "p_rank", "bound", "attained", "error"];

/// Elements joined by `;`, each as its residue list.
pub fn tuple_key(t: &[FieldElement]) -> String {
    t.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

pub fn compute_row(job: &JobSpec, tuple: &[FieldElement]) -> SweepRow {
    let lambda = tuple_key(tuple);
    let result = Curve::new(&job.field, job.k, job.n, tuple.to_vec()).and_then(|c| CartierMatrix::new(&c));
    match result {
        Ok(cm) => {
            let a = cm.a_number();
            let bound = if job.field.characteristic() == 2 { char2_lower_bound(job.k, job.n).ok() } else { None };
            SweepRow {
                lambda,
                a_number: Some(a),
                p_rank: Some(cm.p_rank()),
                bound,
                attained: bound.map(|b| a as u64 == b),
                error: None,
            }
        }
        Err(e) => SweepRow { lambda, a_number: None, p_rank: None, bound: None, attained: None, error: Some(e.to_string()) },
    }
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn delimiter(format: Format) -> u8 {
    if format == Format::Csv {
        b','
    } else {
        b'\t'
    }
}

fn write_rows(w: &mut dyn Write, format: Format, rows: &[SweepRow], header: bool) -> Result<()> {
    match format {
        Format::Json => {
            for r in rows {
                serde_json::to_writer(&mut *w, r)?;
                writeln!(w)?;
            }
        }
        Format::Csv | Format::Text => {
            let mut out = csv::WriterBuilder::new().delimiter(delimiter(format)).from_writer(&mut *w);
            if header {
                out.write_record(HEADER)?;
            }
            for r in rows {
                out.write_record([
                    r.lambda.clone(),
                    cell(&r.a_number),
                    cell(&r.p_rank),
                    cell(&r.bound),
                    cell(&r.attained),
                    cell(&r.error),
                ])?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

/// Keys already present in `path`, after cutting any trailing partial line.
/// Returns whether the file already holds content.
fn existing_keys(path: &Path, format: Format) -> Result<(HashSet<String>, bool)> {
    let mut keys = HashSet::new();
    if !path.exists() {
        return Ok((keys, false));
    }
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let complete = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
    if complete < bytes.len() {
        OpenOptions::new().write(true).open(path)?.set_len(complete as u64)?;
    }
    let body = &bytes[..complete];
    match format {
        Format::Json => {
            for line in BufReader::new(body).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let row: SweepRow =
                    serde_json::from_str(&line).with_context(|| format!("{} is not a sweep file", path.display()))?;
                keys.insert(row.lambda);
            }
        }
        Format::Csv | Format::Text => {
            let mut rdr = csv::ReaderBuilder::new().delimiter(delimiter(format)).from_reader(body);
            for rec in rdr.records() {
                let rec = rec.with_context(|| format!("{} is not a sweep file", path.display()))?;
                keys.insert(rec.get(0).unwrap_or_default().to_string());
            }
        }
    }
    Ok((keys, complete > 0))
}

/// Runs the sweep and returns the number of rows computed in this run.
pub fn run(job: &JobSpec) -> Result<usize> {
    let tuples = job.tuples()?;
    if tuples.is_empty() {
        eprintln!(
            "warning: no valid λ tuples for n = {} over {}; the sweep table is empty",
            job.n, job.field
        );
    }
    let (done, has_content) = match &job.out {
        Some(path) => existing_keys(path, job.format)?,
        None => (HashSet::new(), false),
    };
    let todo: Vec<&Vec<FieldElement>> = tuples.iter().filter(|t| !done.contains(&tuple_key(t))).collect();
    let mut sink: Box<dyn Write> = match &job.out {
        Some(path) => Box::new(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .with_context(|| format!("opening {}", path.display()))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let workers = job.workers.unwrap_or_else(rayon::current_num_threads).max(1);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build()?;
    if !has_content && job.format != Format::Json {
        write_rows(&mut sink, job.format, &[], true)?;
    }
    for chunk in todo.chunks(workers * 4) {
        let rows: Vec<SweepRow> = pool.install(|| chunk.par_iter().map(|t| compute_row(job, t)).collect());
        write_rows(&mut sink, job.format, &rows, false)?;
        sink.flush()?;
    }
    Ok(todo.len())
}
