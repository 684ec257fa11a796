//! Job description assembled from flags, the environment and a key=value config file.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use genfermat::curve::parse_lambda_list;
use genfermat::{Curve, Field, FieldElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Output {
    Genus,
    Basis,
    Matrix,
    A,
    Gamma,
    Kernel,
    BoundCheck,
    Characters,
    Divisors,
}

impl Output {
    fn defaults() -> BTreeSet<Output> {
        use Output::*;
        [Genus, Basis, Matrix, A, Gamma, Kernel, BoundCheck].into_iter().collect()
    }
}

/// Flags shared by every subcommand. Flags and `GENFERMAT_WORKERS` take
/// precedence over entries of `--config`.
#[derive(Debug, Default, Clone, Args)]
pub struct JobArgs {
    /// Base field, `p^m` or `p^m:c0,c1,...,cm` (modulus coefficients, constant first).
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Exponent k of the curve.
    #[arg(long, global = true)]
    pub k: Option<u32>,
    /// Number n of quadric-like equations; the curve lives in P^n.
    #[arg(long, global = true)]
    pub n: Option<u32>,
    /// Branch parameter, repeated once per λ in order (`t`, `1,1`, `2t+1`).
    #[arg(long = "lambda", global = true, allow_hyphen_values = true)]
    pub lambda: Vec<String>,
    /// Whole curve as `p^m:modulus;k;n;λ1,λ2,...`, instead of the separate flags.
    #[arg(long, global = true)]
    pub curve: Option<String>,
    /// `all` for every valid λ tuple, or explicit tuples separated by `|`.
    #[arg(long, global = true)]
    pub sweep: Option<String>,
    /// Report sections: genus, basis, matrix, a, gamma, kernel, bound-check,
    /// characters, divisors, or `all`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub outputs: Vec<String>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file; stdout when absent. Sweeps resume from an existing file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// key=value file with the same keys as the long flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads for matrix columns and sweep rows.
    #[arg(long, global = true, env = "GENFERMAT_WORKERS")]
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sweep {
    All,
    List(Vec<Vec<FieldElement>>),
}

#[derive(Debug, Clone)]
pub struct JobSpec {
    pub field: Field,
    pub k: u32,
    pub n: u32,
    pub lambdas: Option<Vec<FieldElement>>,
    pub sweep: Option<Sweep>,
    pub outputs: BTreeSet<Output>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub workers: Option<usize>,
}

const CONFIG_KEYS: [&str; 11] =
    ["field", "k", "n", "lambda", "curve", "sweep", "outputs", "format", "out", "workers", "config"];

/// Reads `key = value` lines; `#` starts a comment and keys may repeat.
pub fn read_config(path: &Path) -> Result<BTreeMap<String, Vec<String>>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    let mut map: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("{}:{}: expected key = value", path.display(), no + 1))?;
        let key = key.trim().trim_start_matches("--").to_string();
        if !CONFIG_KEYS.contains(&key.as_str()) || key == "config" {
            bail!("{}:{}: unknown key {key:?}", path.display(), no + 1);
        }
        map.entry(key).or_default().push(value.trim().to_string());
    }
    Ok(map)
}

fn last(map: &BTreeMap<String, Vec<String>>, key: &str) -> Option<String> {
    map.get(key).and_then(|v| v.last().cloned())
}

fn parse_outputs(items: &[String]) -> Result<BTreeSet<Output>> {
    if items.is_empty() {
        return Ok(Output::defaults());
    }
    let mut set = BTreeSet::new();
    for item in items.iter().flat_map(|s| s.split(',')).map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            set.extend(Output::value_variants().iter().copied());
            continue;
        }
        set.insert(Output::from_str(item, true).map_err(|_| anyhow!("unknown output {item:?}"))?);
    }
    Ok(set)
}

fn parse_lambdas(field: &Field, n: u32, items: &[String]) -> Result<Vec<FieldElement>> {
    let lambdas = if items.len() == 1 && n > 3 {
        parse_lambda_list(field, n, &items[0])?
    } else {
        items.iter().map(|s| field.parse_element(s)).collect::<genfermat::Result<Vec<_>>>()?
    };
    Ok(lambdas)
}

fn parse_sweep(field: &Field, n: u32, s: &str) -> Result<Sweep> {
    if s.trim() == "all" {
        return Ok(Sweep::All);
    }
    let tuples = s
        .split('|')
        .map(|t| parse_lambda_list(field, n, t).with_context(|| format!("sweep tuple {t:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Sweep::List(tuples))
}

impl JobSpec {
    pub fn resolve(args: &JobArgs) -> Result<JobSpec> {
        let config = match &args.config {
            Some(path) => read_config(path)?,
            None => BTreeMap::new(),
        };
        let pick = |flag: &Option<String>, key: &str| flag.clone().or_else(|| last(&config, key));
        let curve = pick(&args.curve, "curve");
        let (field, k, n, lambdas) = if let Some(desc) = curve {
            if args.field.is_some() || args.k.is_some() || args.n.is_some() {
                bail!("give the curve either as --curve or as --field/--k/--n, not both");
            }
            let c = Curve::parse(&desc).with_context(|| format!("curve {desc:?}"))?;
            let lambdas = c.lambdas().to_vec();
            (c.field().clone(), c.k(), c.n(), Some(lambdas))
        } else {
            let field = pick(&args.field, "field").ok_or_else(|| anyhow!("missing --field"))?;
            let field = Field::parse(&field).with_context(|| format!("field {field:?}"))?;
            let k = match args.k {
                Some(k) => k,
                None => last(&config, "k").ok_or_else(|| anyhow!("missing --k"))?.parse().context("k")?,
            };
            let n = match args.n {
                Some(n) => n,
                None => last(&config, "n").ok_or_else(|| anyhow!("missing --n"))?.parse().context("n")?,
            };
            let items = if args.lambda.is_empty() {
                config.get("lambda").cloned().unwrap_or_default()
            } else {
                args.lambda.clone()
            };
            let lambdas = if items.is_empty() && n > 2 {
                None
            } else {
                Some(parse_lambdas(&field, n, &items).context("branch parameters")?)
            };
            (field, k, n, lambdas)
        };
        let sweep = pick(&args.sweep, "sweep").map(|s| parse_sweep(&field, n, &s)).transpose()?;
        let outputs = if args.outputs.is_empty() {
            parse_outputs(config.get("outputs").map(Vec::as_slice).unwrap_or(&[]))?
        } else {
            parse_outputs(&args.outputs)?
        };
        let format = match args.format {
            Some(f) => f,
            None => match last(&config, "format") {
                Some(s) => Format::from_str(&s, true).map_err(|_| anyhow!("unknown format {s:?}"))?,
                None => Format::Json,
            },
        };
        let out = args.out.clone().or_else(|| last(&config, "out").map(PathBuf::from));
        let workers = match args.workers {
            Some(w) => Some(w),
            None => last(&config, "workers").map(|s| s.parse()).transpose().context("workers")?,
        };
        if workers == Some(0) {
            bail!("worker count must be positive");
        }
        Ok(JobSpec { field, k, n, lambdas, sweep, outputs, format, out, workers })
    }

    /// The single curve named by the job.
    pub fn curve(&self) -> Result<Curve> {
        let lambdas = self
            .lambdas
            .clone()
            .ok_or_else(|| anyhow!("n = {} needs {} branch parameters (--lambda)", self.n, self.n - 2))?;
        Curve::new(&self.field, self.k, self.n, lambdas)
            .with_context(|| format!("curve over {} with k = {}, n = {}", self.field, self.k, self.n))
    }

    pub fn wants(&self, o: Output) -> bool {
        self.outputs.contains(&o)
    }

    /// λ tuples of the sweep, sorted lexicographically by element encoding.
    /// `all` yields every ordered tuple of distinct elements outside {0, 1}.
    pub fn tuples(&self) -> Result<Vec<Vec<FieldElement>>> {
        let sweep = self.sweep.as_ref().ok_or_else(|| anyhow!("missing --sweep (all or tuples separated by |)"))?;
        let mut tuples = match sweep {
            Sweep::All => {
                let len = self.n.checked_sub(2).ok_or_else(|| anyhow!("n must be at least 2"))? as usize;
                let pool: Vec<FieldElement> = self.field.elements().filter(|e| !e.is_zero() && !e.is_one()).collect();
                let mut out: Vec<Vec<FieldElement>> = vec![vec![]];
                for _ in 0..len {
                    out = out
                        .into_iter()
                        .flat_map(|t| {
                            pool.iter()
                                .filter(|e| !t.contains(e))
                                .map(|e| {
                                    let mut u = t.clone();
                                    u.push(e.clone());
                                    u
                                })
                                .collect::<Vec<_>>()
                        })
                        .collect();
                }
                out
            }
            Sweep::List(list) => list.clone(),
        };
        tuples.sort_by_key(|t| t.iter().map(FieldElement::value).collect::<Vec<_>>());
        tuples.dedup();
        Ok(tuples)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args() -> JobArgs {
        JobArgs { field: Some("2^2".into()), k: Some(3), n: Some(3), ..Default::default() }
    }

    #[test]
    fn flags_resolve_to_a_curve() {
        let mut a = args();
        a.lambda = vec!["t".into()];
        let job = JobSpec::resolve(&a).unwrap();
        assert_eq!(job.curve().unwrap().genus(), 10);
        assert_eq!(job.outputs, Output::defaults());
    }

    #[test]
    fn sweep_all_is_sorted_and_complete() {
        let mut a = args();
        a.field = Some("2^4".into());
        a.n = Some(4);
        a.sweep = Some("all".into());
        let tuples = JobSpec::resolve(&a).unwrap().tuples().unwrap();
        assert_eq!(tuples.len(), 14 * 13);
        let keys: Vec<Vec<u32>> = tuples.iter().map(|t| t.iter().map(|e| e.value()).collect()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn outputs_accept_all_and_lists() {
        assert_eq!(parse_outputs(&["all".into()]).unwrap().len(), 9);
        let s = parse_outputs(&["a,gamma".into(), "bound-check".into()]).unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![Output::A, Output::Gamma, Output::BoundCheck]);
        assert!(parse_outputs(&["nope".into()]).is_err());
    }
}
