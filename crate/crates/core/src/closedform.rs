//! Closed-form Cartier images and invariant formulas, used as oracles for the
//! general algorithm in [`crate::cartier`].

use crate::basis::{BasisIndex, DifferentialForm, StandardBasis};
use crate::curve::{Curve, FunctionFieldElement};
use crate::error::{Error, Result};
use crate::ff::{ArithOp, FieldElement};
use crate::polyrat::{Polynomial, RationalFunction};

/// `Σ c · θ_idx` with distinct indices and nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Char2Image {
    pub terms: Vec<(FieldElement, BasisIndex)>,
}

impl Char2Image {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coords_raw(&self, basis: &StandardBasis) -> Result<Vec<u32>> {
        let mut out = vec![0u32; basis.len()];
        for (c, idx) in &self.terms {
            let i = basis
                .position(idx)
                .ok_or_else(|| Error::NotInSpan(format!("index {idx} is not in the basis")))?;
            out[i] = c.value();
        }
        Ok(out)
    }
}

/// `e_0, ..., e_len` of the given values.
fn elementary_symmetric(values: &[FieldElement], one: &FieldElement) -> Vec<FieldElement> {
    let zero = one.field().zero();
    let mut e = vec![zero; values.len() + 1];
    e[0] = one.clone();
    for (i, v) in values.iter().enumerate() {
        for j in (1..=i + 1).rev() {
            e[j] = &e[j] + &(&e[j - 1] * v);
        }
    }
    e
}

fn require_char(curve: &Curve, p: u32) -> Result<()> {
    if curve.p() != p {
        return Err(Error::WrongCharacteristic { expected: p, got: curve.p() });
    }
    Ok(())
}

/// `𝒞(θ_{r;α})` in characteristic 2. With `A = {j : α_j odd}` and
/// `α̂_j = α_j + k·[j ∈ A]`, the image is
/// `Σ_s q_s^{1/2} θ_{sk+(r-1+k)/2; α̂/2}` for `r` even and
/// `Σ_s d_s^{1/2} θ_{sk+(r-1)/2; α̂/2}` for `r` odd, where
/// `q_s = e_{#A-1-2s}(δ_A)` and `d_s = e_{#A-2s}(δ_A)`.
pub fn char2_image(idx: &BasisIndex, curve: &Curve) -> Result<Char2Image> {
    require_char(curve, 2)?;
    if !idx.is_valid(curve) {
        return Err(Error::OutOfRange(format!("basis index {idx}")));
    }
    let k = curve.k();
    let in_a: Vec<usize> = (0..idx.alphas.len()).filter(|&j| idx.alphas[j] % 2 == 1).collect();
    let half: Vec<u32> = idx.alphas.iter().map(|&a| if a % 2 == 1 { (a + k) / 2 } else { a / 2 }).collect();
    let deltas: Vec<FieldElement> = in_a.iter().map(|&j| curve.deltas()[j].clone()).collect();
    let e = elementary_symmetric(&deltas, &curve.field().one());
    let size = in_a.len();
    let (offset, degrees): (u32, Vec<usize>) = if idx.r.is_multiple_of(2) {
        if size == 0 {
            return Ok(Char2Image { terms: vec![] });
        }
        ((idx.r + k - 1) / 2, (0..=(size - 1) / 2).map(|s| size - 1 - 2 * s).collect())
    } else {
        ((idx.r - 1) / 2, (0..=size / 2).map(|s| size - 2 * s).collect())
    };
    let terms = degrees
        .into_iter()
        .enumerate()
        .map(|(s, d)| (e[d].pth_root(), BasisIndex::new(s as u32 * k + offset, half.clone())))
        .filter(|(c, _)| !c.is_zero())
        .collect();
    Ok(Char2Image { terms })
}

/// `(n-1)(k-1)/4 · ((k+1)/2)^{n-1}`.
pub fn char2_lower_bound(k: u32, n: u32) -> Result<u64> {
    let num = (n as u64 - 1) * (k as u64 - 1) * (k as u64 + 1).pow(n - 1);
    let den = 4 * 2u64.pow(n - 1);
    if !num.is_multiple_of(den) {
        return Err(Error::NonInteger(format!("{num}/{den}")));
    }
    Ok(num / den)
}

/// Known a-numbers in characteristic 2 for `n ∈ {2, 3}`.
pub fn char2_closed_a(k: u32, n: u32) -> Option<u64> {
    let k = k as u64;
    match n {
        2 => Some((k * k - 1) / 8),
        3 => Some((k * k - 1) * (k + 1) / 8),
        _ => None,
    }
}

/// Basis order used by [`char3_humbert`].
pub fn humbert_order() -> [BasisIndex; 5] {
    [
        BasisIndex::new(0, vec![1, 1, 1]),
        BasisIndex::new(1, vec![1, 1, 1]),
        BasisIndex::new(0, vec![0, 1, 1]),
        BasisIndex::new(0, vec![1, 0, 1]),
        BasisIndex::new(0, vec![1, 1, 0]),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HumbertInvariants {
    pub diag: Vec<FieldElement>,
    pub a: usize,
    pub gamma: usize,
}

/// Diagonal of the Cartier matrix of `y_j^2 = -(δ_j + z^2)`, `j = 3..5`, over
/// characteristic 3, in [`humbert_order`].
pub fn char3_humbert(curve: &Curve) -> Result<HumbertInvariants> {
    require_char(curve, 3)?;
    if curve.k() != 2 || curve.n() != 4 {
        return Err(Error::OutOfRange(format!("(k, n) = ({}, {}), need (2, 4)", curve.k(), curve.n())));
    }
    let one = curve.field().one();
    let (l1, l2) = (&curve.lambdas()[0], &curve.lambdas()[1]);
    let diag: Vec<FieldElement> = [
        -(l1 + l2 + l1 * l2),
        -(&one + l1 + l2),
        l1 + l2,
        &one + l2,
        &one + l1,
    ]
    .iter()
    .map(FieldElement::pth_root)
    .collect();
    let a = diag.iter().filter(|d| d.is_zero()).count();
    Ok(HumbertInvariants { diag, a, gamma: 5 - a })
}

/// `𝒞(θ_{r;α})` for `p = 3`, `k = 2`. With `S = {j : α_j = 1}`, `u_j = y_j^2`
/// and `P_T = Π_{j ∈ S∖T} u_j`, the image is `(-Ñ)^{1/3} / Π_S y_j` where
/// `Ñ = 2 Σ_{i<j} P_{ij} z^{r+2} + (1+2r) Σ_j P_j z^r + (r-1)r P_∅ z^{r-2}`.
pub fn char3_k2_image(idx: &BasisIndex, curve: &Curve) -> Result<DifferentialForm> {
    require_char(curve, 3)?;
    if curve.k() != 2 || curve.n() < 3 {
        return Err(Error::OutOfRange(format!("(k, n) = ({}, {}), need k = 2, n ≥ 3", curve.k(), curve.n())));
    }
    if !idx.is_valid(curve) {
        return Err(Error::OutOfRange(format!("basis index {idx}")));
    }
    let f = curve.field();
    let support: Vec<usize> = (0..idx.alphas.len()).filter(|&j| idx.alphas[j] == 1).collect();
    let u: Vec<&Polynomial> = support.iter().map(|&j| curve.relation(j).num()).collect();
    let product_except = |skip: &[usize]| {
        (0..u.len())
            .filter(|i| !skip.contains(i))
            .fold(Polynomial::one(f), |acc, i| &acc * u[i])
    };
    let mut pairs = Polynomial::zero(f);
    let mut singles = Polynomial::zero(f);
    for i in 0..u.len() {
        singles = &singles + &product_except(&[i]);
        for j in i + 1..u.len() {
            pairs = &pairs + &product_except(&[i, j]);
        }
    }
    let r = idx.r as usize;
    let zpow = |d: usize| Polynomial::monomial(f, 1, d);
    let mut n = &pairs.scale(f.from_int(2)) * &zpow(r + 2);
    n = &n + &(&singles.scale(f.from_int(1 + 2 * r as i64)) * &zpow(r));
    let c = f.from_int((r as i64 - 1) * r as i64);
    if c != 0 {
        n = &n + &(&product_except(&[]).scale(c) * &zpow(r - 2));
    }
    let root = RationalFunction::from_poly(-&n).pth_root()?;
    let den = support
        .iter()
        .fold(RationalFunction::one(f), |acc, &j| &acc * curve.relation(j));
    let key: Vec<u32> = idx.alphas.clone();
    let coeff = root.arith(&den, ArithOp::Div)?;
    Ok(DifferentialForm::new(FunctionFieldElement::monomial(curve, key, coeff)?))
}
