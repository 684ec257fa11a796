//! The standard basis `θ_{r;α} = z^r dz / (y_3^{α_3} ⋯ y_{n+1}^{α_{n+1}})` of
//! holomorphic differentials, indexed by
//! `I_{k,n} = {(r; α) : α_j ∈ [0, k), 0 ≤ r ≤ Σα - 2}`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::curve::{Curve, Exponents, FunctionFieldElement};
use crate::error::{Error, Result};
use crate::ff::{parse_num, FieldElement};
use crate::polyrat::{Polynomial, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    pub r: u32,
    pub alphas: Vec<u32>,
}

impl BasisIndex {
    pub fn new(r: u32, alphas: Vec<u32>) -> Self {
        BasisIndex { r, alphas }
    }

    pub fn alpha_sum(&self) -> u32 {
        self.alphas.iter().sum()
    }

    /// Membership in `I_{k,n}`.
    pub fn is_valid(&self, curve: &Curve) -> bool {
        self.alphas.len() == curve.rank()
            && self.alphas.iter().all(|&a| a < curve.k())
            && self.alpha_sum() >= 2
            && self.r <= self.alpha_sum() - 2
    }

    /// Parses `"r;a3,a4,..."`.
    pub fn parse(s: &str) -> Result<Self> {
        let (r, alphas) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("basis index {s:?} needs r;a3,...")))?;
        let alphas = alphas.split(',').map(parse_num::<u32>).collect::<Result<Vec<_>>>()?;
        Ok(BasisIndex { r: parse_num(r)?, alphas })
    }
}

/// Lexicographic in `α`, then ascending `r`.
impl Ord for BasisIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.alphas.cmp(&other.alphas).then(self.r.cmp(&other.r))
    }
}

impl PartialOrd for BasisIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alphas.iter().map(u32::to_string).collect();
        write!(f, "{};{}", self.r, a.join(","))
    }
}

/// A meromorphic differential `f dz`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialForm {
    pub coefficient: FunctionFieldElement,
}

impl DifferentialForm {
    pub fn new(coefficient: FunctionFieldElement) -> Self {
        DifferentialForm { coefficient }
    }

    pub fn curve(&self) -> &Curve {
        self.coefficient.curve()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }
}

/// Exponents `e` with `a_j^* θ = ω_k^{e_j} θ` for `j = 1..=n+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacterVector {
    pub exps: Vec<u32>,
}

impl CharacterVector {
    pub fn scaled(&self, factor: u32, k: u32) -> CharacterVector {
        CharacterVector { exps: self.exps.iter().map(|&e| e * factor % k).collect() }
    }
}

/// Every `α ∈ {0..k-1}^{len}` in lexicographic order.
fn exponent_vectors(k: u32, len: usize) -> impl Iterator<Item = Exponents> {
    let total = (k as u64).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut v = vec![0u32; len];
        for slot in v.iter_mut().rev() {
            *slot = (code % k as u64) as u32;
            code /= k as u64;
        }
        v
    })
}

/// `I_{k,n}` in the order of [`BasisIndex`]'s `Ord`.
pub fn enumerate_basis(curve: &Curve) -> Result<Vec<BasisIndex>> {
    curve.require_positive_genus()?;
    Ok(exponent_vectors(curve.k(), curve.rank())
        .flat_map(|alphas| {
            let s: u32 = alphas.iter().sum();
            (0..s.saturating_sub(1)).map(move |r| BasisIndex::new(r, alphas.clone()))
        })
        .collect())
}

/// `L(k, n, l)`: number of `(n-1)`-tuples in `{0..k-1}` summing to `l`.
pub fn count_l(k: u32, n: u32, l: u32) -> Result<u64> {
    let top = (k - 1) * (n - 1);
    if l > top {
        return Err(Error::OutOfRange(format!("l = {l} > (k-1)(n-1) = {top}")));
    }
    let mut ways = vec![0u64; top as usize + 1];
    ways[0] = 1;
    for _ in 0..n - 1 {
        let mut next = vec![0u64; ways.len()];
        for (s, &w) in ways.iter().enumerate().filter(|(_, &w)| w > 0) {
            for t in 0..k as usize {
                if s + t < next.len() {
                    next[s + t] += w;
                }
            }
        }
        ways = next;
    }
    Ok(ways[l as usize])
}

/// `Σ_{l=2}^{(k-1)(n-1)} (l-1) L(k, n, l)`.
pub fn genus_crosscheck(k: u32, n: u32) -> Result<u64> {
    let top = (k - 1) * (n - 1);
    if top < 2 {
        return Err(Error::GenusTooSmall { k, n, needed: 2 });
    }
    (2..=top).map(|l| Ok((l as u64 - 1) * count_l(k, n, l)?)).sum()
}

/// Coefficients of `(θ_{r;α})` on `Fix(a_1), ..., Fix(a_{n+1})`.
pub fn divisor_of_theta(idx: &BasisIndex, curve: &Curve) -> Vec<i64> {
    let k = curve.k() as i64;
    let s = idx.alpha_sum() as i64;
    let r = idx.r as i64;
    let mut out = vec![s - 2 - r, r];
    out.extend(idx.alphas.iter().map(|&a| k - 1 - a as i64));
    out
}

pub fn is_holomorphic(idx: &BasisIndex, curve: &Curve) -> bool {
    divisor_of_theta(idx, curve).iter().all(|&c| c >= 0)
}

pub fn character_of_theta(idx: &BasisIndex, curve: &Curve) -> CharacterVector {
    let k = curve.k() as i64;
    let s = idx.alpha_sum() as i64;
    let r = idx.r as i64;
    let mut exps = vec![(r + 1 - s).rem_euclid(k) as u32, (-r - 1).rem_euclid(k) as u32];
    exps.extend(idx.alphas.iter().map(|&a| a % curve.k()));
    CharacterVector { exps }
}

/// Product of `y_j^k` over the `j` with `α_j > 0`.
fn alpha_denominator(curve: &Curve, alphas: &[u32]) -> RationalFunction {
    alphas
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .fold(RationalFunction::one(curve.field()), |acc, (j, _)| &acc * curve.relation(j))
}

/// The function-field key of `1/y^α`: `β_j = k - α_j` when `α_j > 0`, else 0.
fn alpha_to_key(k: u32, alphas: &[u32]) -> Exponents {
    alphas.iter().map(|&a| if a == 0 { 0 } else { k - a }).collect()
}

fn key_to_alpha(k: u32, beta: &[u32]) -> Vec<u32> {
    beta.iter().map(|&b| if b == 0 { 0 } else { k - b }).collect()
}

/// `θ_{r;α}` as `f dz` with `f = z^r y^β / Π_{α_j>0} y_j^k`.
pub fn theta_to_ffe(idx: &BasisIndex, curve: &Curve) -> Result<DifferentialForm> {
    if idx.alphas.len() != curve.rank() || idx.alphas.iter().any(|&a| a >= curve.k()) {
        return Err(Error::OutOfRange(format!("basis index {idx}")));
    }
    let zr = RationalFunction::from_poly(Polynomial::monomial(curve.field(), 1, idx.r as usize));
    let coeff = zr.arith(&alpha_denominator(curve, &idx.alphas), crate::ff::ArithOp::Div)?;
    let f = FunctionFieldElement::monomial(curve, alpha_to_key(curve.k(), &idx.alphas), coeff)?;
    Ok(DifferentialForm::new(f))
}

/// The ordered standard basis of one curve, with index lookup.
#[derive(Debug, Clone)]
pub struct StandardBasis {
    curve: Curve,
    indices: Vec<BasisIndex>,
    positions: HashMap<BasisIndex, usize>,
}

impl StandardBasis {
    pub fn new(curve: &Curve) -> Result<Self> {
        let indices = enumerate_basis(curve)?;
        let positions = indices.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        Ok(StandardBasis { curve: curve.clone(), indices, positions })
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn indices(&self) -> &[BasisIndex] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn position(&self, idx: &BasisIndex) -> Option<usize> {
        self.positions.get(idx).copied()
    }

    pub fn form(&self, i: usize) -> DifferentialForm {
        theta_to_ffe(&self.indices[i], &self.curve).expect("basis indices are in range")
    }

    /// Raw coordinates (field encodings) of a holomorphic form.
    pub fn coords_raw(&self, form: &DifferentialForm) -> Result<Vec<u32>> {
        if form.curve() != &self.curve {
            return Err(Error::CurveMismatch);
        }
        let k = self.curve.k();
        let mut out = vec![0u32; self.len()];
        for (beta, s) in form.coefficient.terms() {
            let alphas = key_to_alpha(k, beta);
            let cleared = s * &alpha_denominator(&self.curve, &alphas);
            if !cleared.is_polynomial() {
                return Err(Error::NotInSpan(format!(
                    "coefficient of y^{beta:?} has a pole: {cleared}"
                )));
            }
            let poly = cleared.num();
            let bound = alphas.iter().sum::<u32>() as i64 - 2;
            let deg = poly.degree().map_or(-1, |d| d as i64);
            if deg > bound {
                return Err(Error::NotInSpan(format!(
                    "degree {deg} in z exceeds {bound} for α = {alphas:?}"
                )));
            }
            for (r, &c) in poly.raw().iter().enumerate() {
                if c != 0 {
                    let idx = BasisIndex::new(r as u32, alphas.clone());
                    out[self.positions[&idx]] = c;
                }
            }
        }
        Ok(out)
    }

    /// Coordinates in the standard basis; fails with `NotInSpan` for forms that
    /// are not holomorphic.
    pub fn coords(&self, form: &DifferentialForm) -> Result<Vec<FieldElement>> {
        let f = self.curve.field();
        Ok(self.coords_raw(form)?.into_iter().map(|v| f.wrap(v)).collect())
    }

    pub fn combination(&self, coords: &[FieldElement]) -> Result<DifferentialForm> {
        if coords.len() != self.len() {
            return Err(Error::OutOfRange(format!("{} coordinates for genus {}", coords.len(), self.len())));
        }
        let mut acc = FunctionFieldElement::zero(&self.curve);
        for (i, c) in coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let term = self.form(i).coefficient.scale(&RationalFunction::constant(c));
            acc = acc.arith(&term, crate::ff::ArithOp::Add)?;
        }
        Ok(DifferentialForm::new(acc))
    }
}

pub fn ffe_to_basis_coords(form: &DifferentialForm, basis: &StandardBasis) -> Result<Vec<FieldElement>> {
    basis.coords(form)
}

/// `n + 1` basis elements whose ratios recover `[x_1 : ... : x_{n+1}]`.
pub fn canonical_subset(curve: &Curve) -> Result<Vec<BasisIndex>> {
    if curve.genus() <= 1 {
        return Err(Error::GenusTooSmall { k: curve.k(), n: curve.n(), needed: 3 });
    }
    let rank = curve.rank();
    Ok(match curve.n() {
        2 => vec![BasisIndex::new(0, vec![3]), BasisIndex::new(1, vec![3]), BasisIndex::new(0, vec![2])],
        3 => vec![
            BasisIndex::new(0, vec![2, 2]),
            BasisIndex::new(1, vec![2, 2]),
            BasisIndex::new(0, vec![1, 2]),
            BasisIndex::new(0, vec![2, 1]),
        ],
        _ => {
            let ones = vec![1; rank];
            let mut out = vec![BasisIndex::new(0, ones.clone()), BasisIndex::new(1, ones.clone())];
            for j in 0..rank {
                let mut a = ones.clone();
                a[j] = 0;
                out.push(BasisIndex::new(0, a));
            }
            out
        }
    })
}
