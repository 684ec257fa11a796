mod job;
mod report;
mod sweep;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use genfermat::basis::{character_of_theta, divisor_of_theta};
use genfermat::{CartierMatrix, StandardBasis};
use serde_json::json;

use job::{Format, JobArgs, JobSpec};

/// Holomorphic differentials, Cartier operators and their invariants for
/// generalized Fermat curves over finite fields.
#[derive(Debug, Parser)]
#[command(name = "genfermat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    job: JobArgs,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// Full report for one curve with closed-form cross-checks. Exits with
    /// status 2 when an applicable closed form disagrees.
    Report,
    /// One row of invariants per λ tuple.
    Sweep,
    /// The standard basis with divisors and characters.
    Basis,
    /// The Cartier matrix on the standard basis.
    Matrix,
}

const ORACLE_MISMATCH: u8 = 2;

fn sink(job: &JobSpec) -> Result<Box<dyn Write>> {
    Ok(match &job.out {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?))
        }
        None => Box::new(io::stdout().lock()),
    })
}

fn pool(job: &JobSpec) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(w) = job.workers {
        b = b.num_threads(w);
    }
    Ok(b.build()?)
}

fn run_report(job: &JobSpec) -> Result<ExitCode> {
    let curve = job.curve()?;
    let r = pool(job)?.install(|| report::build(job, &curve))?;
    let mut w = sink(job)?;
    match job.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &r)?;
            writeln!(w)?;
        }
        Format::Csv => {
            let mut out = csv::Writer::from_writer(&mut w);
            out.write_record(report::CSV_HEADER)?;
            out.write_record(report::csv_row(&r))?;
            out.flush()?;
        }
        Format::Text => report::write_text(&mut w, &r)?,
    }
    w.flush()?;
    if r.oracles_agree() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("error: a closed form disagrees with the general computation for {}", r.curve);
        Ok(ExitCode::from(ORACLE_MISMATCH))
    }
}

fn run_basis(job: &JobSpec) -> Result<ExitCode> {
    let curve = job.curve()?;
    let basis = StandardBasis::new(&curve).with_context(|| format!("basis of {curve}"))?;
    let rows: Vec<(String, Vec<i64>, Vec<u32>)> = basis
        .indices()
        .iter()
        .map(|b| (b.to_string(), divisor_of_theta(b, &curve), character_of_theta(b, &curve).exps))
        .collect();
    let mut w = sink(job)?;
    match job.format {
        Format::Json => {
            let items: Vec<_> =
                rows.iter().map(|(i, d, c)| json!({"index": i, "divisor": d, "character": c})).collect();
            let doc = json!({"curve": curve.to_string(), "genus": curve.genus(), "basis": items});
            serde_json::to_writer_pretty(&mut w, &doc)?;
            writeln!(w)?;
        }
        Format::Csv => {
            let mut out = csv::Writer::from_writer(&mut w);
            out.write_record(["index", "divisor", "character"])?;
            for (i, d, c) in &rows {
                let join = |v: Vec<String>| v.join(" ");
                out.write_record([
                    i.clone(),
                    join(d.iter().map(ToString::to_string).collect()),
                    join(c.iter().map(ToString::to_string).collect()),
                ])?;
            }
            out.flush()?;
        }
        Format::Text => {
            writeln!(w, "{curve}: genus {}", curve.genus())?;
            for (n, (i, d, c)) in rows.iter().enumerate() {
                writeln!(w, "  {n:>4}  ({i})  div {d:?}  char {c:?}")?;
            }
        }
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn run_matrix(job: &JobSpec) -> Result<ExitCode> {
    let curve = job.curve()?;
    let cm = pool(job)?.install(|| CartierMatrix::new(&curve)).with_context(|| format!("Cartier matrix of {curve}"))?;
    let labels: Vec<String> = cm.basis().indices().iter().map(ToString::to_string).collect();
    let rows = report::matrix_rows(&cm);
    let mut w = sink(job)?;
    match job.format {
        Format::Json => {
            let doc = json!({"curve": curve.to_string(), "basis": labels, "cartier_matrix": rows});
            serde_json::to_writer_pretty(&mut w, &doc)?;
            writeln!(w)?;
        }
        Format::Csv => {
            let mut out = csv::Writer::from_writer(&mut w);
            out.write_record(std::iter::once("index".to_string()).chain(labels.iter().cloned()))?;
            for (label, row) in labels.iter().zip(&rows) {
                out.write_record(std::iter::once(label.clone()).chain(row.iter().cloned()))?;
            }
            out.flush()?;
        }
        Format::Text => {
            writeln!(w, "{curve}: column i holds C(theta_i)")?;
            report::write_grid(&mut w, &rows)?;
        }
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let job = JobSpec::resolve(&cli.job)?;
    match cli.command {
        Command::Report => run_report(&job),
        Command::Sweep => {
            sweep::run(&job)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Basis => run_basis(&job),
        Command::Matrix => run_matrix(&job),
    }
}

fn is_broken_pipe(e: &(dyn std::error::Error + 'static)) -> bool {
    e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
        || e.downcast_ref::<csv::Error>().is_some_and(|e| matches!(e.kind(), csv::ErrorKind::Io(e) if e.kind() == io::ErrorKind::BrokenPipe))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) if e.chain().any(is_broken_pipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
