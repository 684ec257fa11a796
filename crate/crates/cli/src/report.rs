//! Single-curve reports and their JSON, CSV and text renderings.

use std::io::Write;

use anyhow::{Context, Result};
use genfermat::basis::{character_of_theta, divisor_of_theta, genus_crosscheck, theta_to_ffe};
use genfermat::closedform::{char2_image, char2_lower_bound, char3_humbert, char3_k2_image, humbert_order};
use genfermat::{cartier_apply, CartierMatrix, Curve};
use serde::{Deserialize, Serialize};

use crate::job::{JobSpec, Output};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub value: Option<u64>,
    pub attained: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Oracles {
    pub char2: Option<bool>,
    pub char3_k2: Option<bool>,
    pub lower_bound: LowerBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusCheck {
    pub formula: u64,
    pub basis_size: u64,
    pub counted: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseWitt {
    pub semisimple: usize,
    pub nilpotent: usize,
    pub nilpotent_is_kernel: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub curve: String,
    pub genus: Option<u64>,
    pub basis: Option<Vec<String>>,
    pub cartier_matrix: Option<Vec<Vec<String>>>,
    pub a_number: Option<usize>,
    pub p_rank: Option<usize>,
    pub kernel: Option<Vec<Vec<String>>>,
    pub oracles: Oracles,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus_check: Option<GenusCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hasse_witt: Option<HasseWitt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characters: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisors: Option<Vec<Vec<i64>>>,
}

impl Report {
    /// True when no applicable oracle disagrees with the general algorithm.
    pub fn oracles_agree(&self) -> bool {
        let o = &self.oracles;
        let bound_ok = match (o.lower_bound.value, self.a_number) {
            (Some(b), Some(a)) => a as u64 >= b,
            _ => true,
        };
        o.char2 != Some(false) && o.char3_k2 != Some(false) && bound_ok
    }
}

fn text(v: &[u32], curve: &Curve) -> Vec<String> {
    v.iter().map(|&x| curve.field().wrap(x).to_string()).collect()
}

/// Closed-form images of every basis element against the matrix columns.
fn char2_oracle(cm: &CartierMatrix) -> bool {
    let basis = cm.basis();
    basis.indices().iter().enumerate().all(|(i, idx)| {
        char2_image(idx, cm.curve()).and_then(|img| img.coords_raw(basis)).is_ok_and(|c| c == cm.matrix().column(i))
    })
}

/// Closed-form images for `k = 2` in characteristic 3, plus the diagonal
/// shape when `n = 4`.
fn char3_oracle(cm: &CartierMatrix) -> bool {
    let curve = cm.curve();
    let images = cm.basis().indices().iter().all(|idx| {
        let general = theta_to_ffe(idx, curve).and_then(|t| cartier_apply(&t));
        matches!((char3_k2_image(idx, curve), general), (Ok(a), Ok(b)) if a == b)
    });
    if !images || curve.n() != 4 {
        return images;
    }
    let Ok(h) = char3_humbert(curve) else { return false };
    let pos: Vec<Option<usize>> = humbert_order().iter().map(|b| cm.basis().position(b)).collect();
    let m = cm.matrix();
    pos.iter().enumerate().all(|(a, pa)| {
        pos.iter().enumerate().all(|(b, pb)| match (pa, pb) {
            (Some(i), Some(j)) => {
                let want = if a == b { h.diag[a].value() } else { 0 };
                m.get(*i, *j) == want
            }
            _ => false,
        })
    })
}

pub fn build(job: &JobSpec, curve: &Curve) -> Result<Report> {
    let cm = CartierMatrix::new(curve).with_context(|| format!("Cartier matrix of {curve}"))?;
    let (p, k, n) = (curve.p(), curve.k(), curve.n());
    let idxs = cm.basis().indices();
    let a = cm.a_number();
    let gamma = cm.p_rank();
    let char2 = (p == 2).then(|| char2_oracle(&cm));
    let char3_k2 = (p == 3 && k == 2).then(|| char3_oracle(&cm));
    let lower_bound = if p == 2 && job.wants(Output::BoundCheck) {
        let value = char2_lower_bound(k, n).ok();
        LowerBound { value, attained: value.map(|b| a as u64 == b) }
    } else {
        LowerBound { value: None, attained: None }
    };
    let genus_check = if job.wants(Output::Genus) {
        Some(GenusCheck {
            formula: curve.genus(),
            basis_size: idxs.len() as u64,
            counted: genus_crosscheck(k, n).context("counting the basis")?,
        })
    } else {
        None
    };
    let hasse_witt = job.wants(Output::Gamma).then(|| {
        let s = cm.hw_split();
        HasseWitt { semisimple: s.semisimple, nilpotent: s.nilpotent, nilpotent_is_kernel: s.nilpotent_is_kernel }
    });
    Ok(Report {
        curve: curve.to_string(),
        genus: job.wants(Output::Genus).then(|| curve.genus()),
        basis: job.wants(Output::Basis).then(|| idxs.iter().map(ToString::to_string).collect()),
        cartier_matrix: job.wants(Output::Matrix).then(|| matrix_rows(&cm)),
        a_number: job.wants(Output::A).then_some(a),
        p_rank: job.wants(Output::Gamma).then_some(gamma),
        kernel: job.wants(Output::Kernel).then(|| cm.kernel_basis().iter().map(|v| text(v, curve)).collect()),
        oracles: Oracles { char2, char3_k2, lower_bound },
        genus_check,
        hasse_witt,
        characters: job
            .wants(Output::Characters)
            .then(|| idxs.iter().map(|b| character_of_theta(b, curve).exps).collect()),
        divisors: job.wants(Output::Divisors).then(|| idxs.iter().map(|b| divisor_of_theta(b, curve)).collect()),
    })
}

pub const CSV_HEADER: [&str; 12] = [
    "curve",
    "genus",
    "basis_size",
    "a_number",
    "p_rank",
    "semisimple",
    "nilpotent",
    "nilpotent_is_kernel",
    "char2",
    "char3_k2",
    "lower_bound",
    "attained",
];

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn csv_row(r: &Report) -> Vec<String> {
    let hw = r.hasse_witt.as_ref();
    vec![
        r.curve.clone(),
        cell(r.genus),
        cell(r.genus_check.as_ref().map(|g| g.basis_size)),
        cell(r.a_number),
        cell(r.p_rank),
        cell(hw.map(|h| h.semisimple)),
        cell(hw.map(|h| h.nilpotent)),
        cell(hw.map(|h| h.nilpotent_is_kernel)),
        cell(r.oracles.char2),
        cell(r.oracles.char3_k2),
        cell(r.oracles.lower_bound.value),
        cell(r.oracles.lower_bound.attained),
    ]
}

fn verdict(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "pass",
        Some(false) => "FAIL",
        None => "n/a",
    }
}

pub fn write_text(w: &mut dyn Write, r: &Report) -> Result<()> {
    writeln!(w, "curve        {}", r.curve)?;
    if let Some(g) = r.genus {
        writeln!(w, "genus        {g}")?;
    }
    if let Some(c) = &r.genus_check {
        writeln!(w, "basis size   {} (counted {})", c.basis_size, c.counted)?;
    }
    if let Some(a) = r.a_number {
        writeln!(w, "a-number     {a}")?;
    }
    if let Some(g) = r.p_rank {
        writeln!(w, "p-rank       {g}")?;
    }
    if let Some(h) = &r.hasse_witt {
        let rel = if h.nilpotent_is_kernel { "equals" } else { "differs from" };
        writeln!(w, "hasse-witt   semisimple {}, nilpotent {} ({rel} ker C)", h.semisimple, h.nilpotent)?;
    }
    writeln!(w, "char2        {}", verdict(r.oracles.char2))?;
    writeln!(w, "char3 k=2    {}", verdict(r.oracles.char3_k2))?;
    if let Some(b) = r.oracles.lower_bound.value {
        let how = if r.oracles.lower_bound.attained == Some(true) { "attained" } else { "not attained" };
        writeln!(w, "lower bound  {b} ({how})")?;
    }
    if let Some(basis) = &r.basis {
        writeln!(w, "basis")?;
        for (i, b) in basis.iter().enumerate() {
            let mut line = format!("  {i:>4}  ({b})");
            if let Some(d) = r.divisors.as_ref().map(|d| &d[i]) {
                line.push_str(&format!("  div {d:?}"));
            }
            if let Some(c) = r.characters.as_ref().map(|c| &c[i]) {
                line.push_str(&format!("  char {c:?}"));
            }
            writeln!(w, "{line}")?;
        }
    }
    if let Some(m) = &r.cartier_matrix {
        writeln!(w, "cartier matrix")?;
        write_grid(w, m)?;
    }
    if let Some(kern) = &r.kernel {
        writeln!(w, "kernel ({} vectors)", kern.len())?;
        for v in kern {
            writeln!(w, "  [{}]", v.iter().map(|x| format!("({x})")).collect::<Vec<_>>().join(" "))?;
        }
    }
    Ok(())
}

/// Rows of element strings, zeros shown as `.`.
pub fn write_grid(w: &mut dyn Write, rows: &[Vec<String>]) -> Result<()> {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .map(|x| {
                let shown = if x.split(',').all(|c| c == "0") { "." } else { x.as_str() };
                format!("{shown:>width$}")
            })
            .collect();
        writeln!(w, "  {}", cells.join(" "))?;
    }
    Ok(())
}

/// Raw element strings of the matrix, row by row.
pub fn matrix_rows(cm: &CartierMatrix) -> Vec<Vec<String>> {
    (0..cm.genus()).map(|i| text(cm.matrix().row(i), cm.curve())).collect()
}
