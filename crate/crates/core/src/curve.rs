//! Generalized Fermat curves `C^k_{λ_1..λ_{n-2}} ⊂ P^n` and their function fields.
//!
//! With `z = x_2/x_1` and `y_j = x_j/x_1` (`j = 3..=n+1`) the function field is
//! the free `K(z)`-module on the monomials `y^β`, `β ∈ {0..k-1}^{n-1}`, subject
//! to `y_j^k = -(δ_j + z^k)` where `δ_3 = 1` and `δ_{3+i} = λ_i`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::{gcd, parse_num, ArithOp, Field, FieldElement};
use crate::polyrat::{Polynomial, RationalFunction};

/// Validated curve parameters.
pub struct CurveSpec {
    field: Field,
    k: u32,
    n: u32,
    lambdas: Vec<FieldElement>,
    deltas: Vec<FieldElement>,
    genus: u64,
    p_inv_mod_k: u32,
    relations: Vec<RationalFunction>,
}

#[derive(Clone)]
pub struct Curve(Arc<CurveSpec>);

impl Deref for Curve {
    type Target = CurveSpec;
    fn deref(&self) -> &CurveSpec {
        &self.0
    }
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.field == other.field
                && self.k == other.k
                && self.n == other.n
                && self.lambdas == other.lambdas)
    }
}

impl Eq for Curve {}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Curve({self})")
    }
}

impl fmt::Display for Curve {
    /// `p^m:modulus;k;n;λ1,λ2,...` with each λ written as its residue list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lambdas: Vec<String> = self.lambdas.iter().map(|l| l.to_string()).collect();
        write!(f, "{};{};{};{}", self.field, self.k, self.n, lambdas.join(","))
    }
}

/// `1 + (k^{n-1}/2)((k-1)(n-1) - 2)`.
pub fn genus(k: u32, n: u32) -> Option<u64> {
    let kp = (k as i128).checked_pow(n.checked_sub(1)?)?;
    let g = 1 + kp * ((k as i128 - 1) * (n as i128 - 1) - 2) / 2;
    u64::try_from(g).ok()
}

fn inverse_mod(a: u32, m: u32) -> Option<u32> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i64 % m as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i64) as u32)
}

impl Curve {
    pub fn new(field: &Field, k: u32, n: u32, lambdas: Vec<FieldElement>) -> Result<Curve> {
        let p = field.characteristic();
        if k < 2 || n < 2 {
            return Err(Error::OutOfRange(format!("(k, n) = ({k}, {n}); both must be at least 2")));
        }
        if gcd(k as u64, p as u64) != 1 {
            return Err(Error::KNotCoprimeToP { k, p });
        }
        if lambdas.len() != n as usize - 2 {
            return Err(Error::LambdaDegenerate(format!(
                "expected {} parameters, got {}",
                n - 2,
                lambdas.len()
            )));
        }
        if lambdas.iter().any(|l| l.field() != field) {
            return Err(Error::FieldMismatch);
        }
        for (i, l) in lambdas.iter().enumerate() {
            if l.is_zero() || l.is_one() {
                return Err(Error::LambdaDegenerate(format!("λ_{} = {l} lies in {{0, 1}}", i + 1)));
            }
            if lambdas[..i].contains(l) {
                return Err(Error::LambdaDegenerate(format!("λ_{} = {l} repeats an earlier value", i + 1)));
            }
        }
        let genus = genus(k, n).ok_or_else(|| Error::OutOfRange(format!("genus of ({k}, {n})")))?;
        let deltas: Vec<FieldElement> = std::iter::once(field.one()).chain(lambdas.iter().cloned()).collect();
        let zk = Polynomial::monomial(field, 1, k as usize);
        let relations = deltas
            .iter()
            .map(|d| RationalFunction::from_poly(-&(&zk + &Polynomial::constant(d))))
            .collect();
        let p_inv_mod_k = inverse_mod(p % k, k).expect("k coprime to p");
        Ok(Curve(Arc::new(CurveSpec {
            field: field.clone(),
            k,
            n,
            lambdas,
            deltas,
            genus,
            p_inv_mod_k,
            relations,
        })))
    }

    /// Parses `"p^m:modulus;k;n;λ..."`. Entries may also be written `k=3`,
    /// `n=3`, `λ=t` and the modulus may be omitted. The λ section is either
    /// `n-2` comma-separated elements or `(n-2)·m` residues grouped `m` at a time.
    pub fn parse(s: &str) -> Result<Curve> {
        let parts: Vec<&str> = s.split(';').map(str::trim).collect();
        if parts.len() < 3 || parts.len() > 4 {
            return Err(Error::Parse(format!("curve description {s:?} needs field;k;n[;lambdas]")));
        }
        let strip = |x: &str| -> String {
            match x.split_once('=') {
                Some((_, v)) => v.trim().to_string(),
                None => x.to_string(),
            }
        };
        let field = Field::parse(parts[0])?;
        let k = parse_num::<u32>(&strip(parts[1]))?;
        let n = parse_num::<u32>(&strip(parts[2]))?;
        let lam = parts.get(3).map(|x| strip(x)).unwrap_or_default();
        let lambdas = parse_lambda_list(&field, n, &lam)?;
        Curve::new(&field, k, n, lambdas)
    }
}

/// Splits a λ list per the rule documented on [`Curve::parse`].
pub fn parse_lambda_list(field: &Field, n: u32, s: &str) -> Result<Vec<FieldElement>> {
    let s = s.trim();
    let want = n.saturating_sub(2) as usize;
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let items: Vec<&str> = s.split(',').map(str::trim).collect();
    let m = field.degree() as usize;
    let numeric = items.iter().all(|x| x.parse::<i64>().is_ok());
    if numeric && m > 1 && items.len() == want * m {
        items
            .chunks(m)
            .map(|c| field.parse_element(&c.join(",")))
            .collect()
    } else {
        items.iter().map(|x| field.parse_element(x)).collect()
    }
}

impl CurveSpec {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn lambdas(&self) -> &[FieldElement] {
        &self.lambdas
    }

    /// `δ_3..δ_{n+1}`, index 0 is `δ_3 = 1`.
    pub fn deltas(&self) -> &[FieldElement] {
        &self.deltas
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Number of `y` variables, `n - 1`.
    pub fn rank(&self) -> usize {
        self.n as usize - 1
    }

    pub fn p_inv_mod_k(&self) -> u32 {
        self.p_inv_mod_k
    }

    /// `y_{j+3}^k = -(δ_{j+3} + z^k)` as a rational function of `z`.
    pub fn relation(&self, j: usize) -> &RationalFunction {
        &self.relations[j]
    }

    pub fn require_positive_genus(&self) -> Result<()> {
        if (self.k - 1) * (self.n - 1) < 2 {
            return Err(Error::GenusTooSmall { k: self.k, n: self.n, needed: 2 });
        }
        Ok(())
    }
}

pub type Exponents = Vec<u32>;

/// `Σ_β s_β(z) y^β` with every exponent in `[0, k)` and no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FunctionFieldElement {
    curve: Curve,
    terms: BTreeMap<Exponents, RationalFunction>,
}

impl FunctionFieldElement {
    pub fn zero(curve: &Curve) -> Self {
        FunctionFieldElement { curve: curve.clone(), terms: BTreeMap::new() }
    }

    pub fn from_rational(curve: &Curve, s: RationalFunction) -> Self {
        Self::monomial(curve, vec![0; curve.rank()], s).expect("zero exponent is valid")
    }

    pub fn one(curve: &Curve) -> Self {
        Self::from_rational(curve, RationalFunction::one(&curve.field))
    }

    pub fn z(curve: &Curve) -> Self {
        Self::from_rational(curve, RationalFunction::z(&curve.field))
    }

    /// The generator `y_j`, `j ∈ 3..=n+1`.
    pub fn y(curve: &Curve, j: u32) -> Result<Self> {
        if !(3..=curve.n + 1).contains(&j) {
            return Err(Error::OutOfRange(format!("y_{j}")));
        }
        let mut beta = vec![0; curve.rank()];
        beta[(j - 3) as usize] = 1;
        Self::monomial(curve, beta, RationalFunction::one(&curve.field))
    }

    /// `s · y^β`; exponents must lie in `[0, k)`.
    pub fn monomial(curve: &Curve, beta: Exponents, s: RationalFunction) -> Result<Self> {
        if beta.len() != curve.rank() || beta.iter().any(|&b| b >= curve.k) {
            return Err(Error::OutOfRange(format!("exponent vector {beta:?}")));
        }
        if s.field() != &curve.field {
            return Err(Error::FieldMismatch);
        }
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(beta, s);
        }
        Ok(FunctionFieldElement { curve: curve.clone(), terms })
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, RationalFunction> {
        &self.terms
    }

    pub fn term(&self, beta: &[u32]) -> Option<&RationalFunction> {
        self.terms.get(beta)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(terms: &mut BTreeMap<Exponents, RationalFunction>, beta: Exponents, s: RationalFunction) {
        if s.is_zero() {
            return;
        }
        match terms.get_mut(&beta) {
            Some(existing) => {
                let sum = &*existing + &s;
                if sum.is_zero() {
                    terms.remove(&beta);
                } else {
                    *existing = sum;
                }
            }
            None => {
                terms.insert(beta, s);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.curve != other.curve {
            return Err(Error::CurveMismatch);
        }
        Ok(())
    }

    /// Field operations; division is only supported by a single monomial.
    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        self.check(other)?;
        match op {
            ArithOp::Add | ArithOp::Sub => {
                let mut terms = self.terms.clone();
                for (beta, s) in &other.terms {
                    let s = if op == ArithOp::Sub { -s } else { s.clone() };
                    Self::accumulate(&mut terms, beta.clone(), s);
                }
                Ok(FunctionFieldElement { curve: self.curve.clone(), terms })
            }
            ArithOp::Mul => Ok(self.mul_impl(other)),
            ArithOp::Div => Ok(self.mul_impl(&other.inverse()?)),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let k = self.curve.k;
        let mut terms = BTreeMap::new();
        for (ba, sa) in &self.terms {
            for (bb, sb) in &other.terms {
                let mut coeff = sa * sb;
                let beta: Exponents = ba
                    .iter()
                    .zip(bb)
                    .enumerate()
                    .map(|(j, (&x, &y))| {
                        let e = x + y;
                        if e >= k {
                            coeff = &coeff * self.curve.relation(j);
                            e - k
                        } else {
                            e
                        }
                    })
                    .collect();
                Self::accumulate(&mut terms, beta, coeff);
            }
        }
        FunctionFieldElement { curve: self.curve.clone(), terms }
    }

    pub fn scale(&self, s: &RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        for (beta, c) in &self.terms {
            Self::accumulate(&mut terms, beta.clone(), c * s);
        }
        FunctionFieldElement { curve: self.curve.clone(), terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.curve);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `Π_j (y_j^k)^{e_j}` as a rational function of `z`.
    fn relation_power(&self, carries: impl Iterator<Item = (usize, u32)>) -> RationalFunction {
        carries.fold(RationalFunction::one(&self.curve.field), |acc, (j, e)| {
            if e == 0 {
                acc
            } else {
                &acc * &self.curve.relation(j).pow(e)
            }
        })
    }

    /// Inverse of a single term `s y^β`: `s^{-1} y^{k-β} / Π_{β_j>0} y_j^k`.
    pub fn inverse(&self) -> Result<Self> {
        if self.terms.is_empty() {
            return Err(Error::DivisionByZero);
        }
        if self.terms.len() > 1 {
            return Err(Error::NotMonomial);
        }
        let (beta, s) = self.terms.iter().next().expect("one term");
        let k = self.curve.k;
        let inv_beta: Exponents = beta.iter().map(|&b| if b == 0 { 0 } else { k - b }).collect();
        let carry = self.relation_power(beta.iter().enumerate().map(|(j, &b)| (j, (b > 0) as u32)));
        let coeff = s.arith(&carry, ArithOp::Mul)?.inv()?;
        Self::monomial(&self.curve, inv_beta, coeff)
    }

    /// `d/dz`, using `dy_j/dz = z^{k-1} y_j / (δ_j + z^k)`; each monomial
    /// `y^β` is an eigenvector of the logarithmic derivative, so keys are kept.
    pub fn derivative(&self) -> Self {
        let curve = &self.curve;
        let field = &curve.field;
        let k = curve.k;
        let zk1 = RationalFunction::from_poly(Polynomial::monomial(field, 1, k as usize - 1));
        let log_dy: Vec<RationalFunction> = (0..curve.rank())
            .map(|j| {
                let denom = -curve.relation(j);
                zk1.arith(&denom, ArithOp::Div).expect("δ_j + z^k is nonzero")
            })
            .collect();
        let mut terms = BTreeMap::new();
        for (beta, s) in &self.terms {
            let mut d = s.derivative(1);
            let mut log = RationalFunction::zero(field);
            for (j, &b) in beta.iter().enumerate() {
                let c = field.from_int(b as i64);
                if c != 0 {
                    log = &log + &log_dy[j].scale(&field.wrap(c));
                }
            }
            if !log.is_zero() {
                d = &d + &(s * &log);
            }
            Self::accumulate(&mut terms, beta.clone(), d);
        }
        FunctionFieldElement { curve: curve.clone(), terms }
    }

    /// Inverse Frobenius. The p-th power sends `s y^β` to
    /// `s^p y^{pβ mod k} Π_j (y_j^k)^{⌊pβ_j/k⌋}`; this undoes it key by key.
    pub fn pth_root(&self) -> Result<Self> {
        let curve = &self.curve;
        let (k, p, pinv) = (curve.k, curve.p(), curve.p_inv_mod_k);
        let mut terms = BTreeMap::new();
        for (gamma, s) in &self.terms {
            let beta: Exponents = gamma.iter().map(|&g| g * pinv % k).collect();
            let carry = self.relation_power(beta.iter().enumerate().map(|(j, &b)| (j, p * b / k)));
            let adjusted = s.arith(&carry, ArithOp::Div)?;
            Self::accumulate(&mut terms, beta, adjusted.pth_root()?);
        }
        Ok(FunctionFieldElement { curve: curve.clone(), terms })
    }
}

impl fmt::Debug for FunctionFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, s)| format!("({s})·y^{b:?}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

macro_rules! ffe_binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr for &FunctionFieldElement {
            type Output = FunctionFieldElement;
            fn $method(self, rhs: &FunctionFieldElement) -> FunctionFieldElement {
                self.arith(rhs, $op).expect("curve mismatch")
            }
        }
    };
}

ffe_binop!(Add, add, ArithOp::Add);
ffe_binop!(Sub, sub, ArithOp::Sub);
ffe_binop!(Mul, mul, ArithOp::Mul);

impl Neg for &FunctionFieldElement {
    type Output = FunctionFieldElement;
    fn neg(self) -> FunctionFieldElement {
        let terms = self.terms.iter().map(|(b, s)| (b.clone(), -s)).collect();
        FunctionFieldElement { curve: self.curve.clone(), terms }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuliMove {
    /// `λ ↦ (λ_{n-2}/(λ_{n-2}-1), λ_{n-2}/(λ_{n-2}-λ_1), ..., λ_{n-2}/(λ_{n-2}-λ_{n-3}))`
    U,
    /// `λ ↦ (1/λ_1, ..., 1/λ_{n-2})`
    V,
}

/// Generators of the group acting on the λ-parameter space; both moves send
/// a curve to an isomorphic one.
pub fn moduli_transform(lambdas: &[FieldElement], kind: ModuliMove) -> Result<Vec<FieldElement>> {
    let inv = |x: &FieldElement| x.inv().map_err(|_| Error::DegenerateTransform);
    match kind {
        ModuliMove::V => lambdas.iter().map(inv).collect(),
        ModuliMove::U => {
            let Some(last) = lambdas.last() else {
                return Ok(Vec::new());
            };
            let one = last.field().one();
            std::iter::once(&one)
                .chain(&lambdas[..lambdas.len() - 1])
                .map(|l| Ok(last * &inv(&(last - l))?))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> Field {
        Field::new(3, 2, None).unwrap()
    }

    #[test]
    fn construction_rules() {
        let f2 = Field::prime(2).unwrap();
        assert!(matches!(Curve::new(&f2, 3, 3, vec![f2.one()]), Err(Error::LambdaDegenerate(_))));
        assert!(matches!(Curve::new(&f2, 3, 3, vec![f2.zero()]), Err(Error::LambdaDegenerate(_))));
        let f4 = Field::new(2, 2, None).unwrap();
        assert!(Curve::new(&f4, 3, 3, vec![f4.t()]).is_ok());
        assert!(matches!(Curve::new(&f2, 2, 3, vec![f2.one()]), Err(Error::KNotCoprimeToP { .. })));
        let f = f9();
        let c = Curve::new(&f, 2, 4, vec![f.int(2), f.t()]).unwrap();
        assert_eq!(c.genus(), 5);
        assert!(matches!(
            Curve::new(&f, 2, 4, vec![f.t(), f.t()]),
            Err(Error::LambdaDegenerate(_))
        ));
    }

    #[test]
    fn genus_values() {
        assert_eq!(genus(3, 3), Some(10));
        assert_eq!(genus(2, 4), Some(5));
        assert_eq!(genus(5, 2), Some(6));
        assert_eq!(genus(2, 2), Some(0));
        assert_eq!(genus(2, 3), Some(1));
    }

    #[test]
    fn multiplication_examples() {
        let f4 = Field::new(2, 2, None).unwrap();
        let c = Curve::new(&f4, 3, 3, vec![f4.t()]).unwrap();
        let y3 = FunctionFieldElement::y(&c, 3).unwrap();
        let prod = &y3 * &y3.pow(2);
        assert_eq!(prod, FunctionFieldElement::from_rational(&c, c.relation(0).clone()));

        let f = f9();
        let h = Curve::new(&f, 2, 4, vec![f.int(2), f.t()]).unwrap();
        let y4 = FunctionFieldElement::y(&h, 4).unwrap();
        let y5 = FunctionFieldElement::y(&h, 5).unwrap();
        let p = &y4 * &y5;
        assert_eq!(p.terms().len(), 1);
        assert!(p.term(&[0, 1, 1]).unwrap() == &RationalFunction::one(&f));

        // (y3 y4)^2 = (1 + z^2)(2 + z^2); the two signs cancel.
        let y3 = FunctionFieldElement::y(&h, 3).unwrap();
        let y34 = &y3 * &y4;
        let sq = &y34 * &y34;
        let z2 = Polynomial::monomial(&f, 1, 2);
        let expect = &(&z2 + &Polynomial::constant(&f.one())) * &(&z2 + &Polynomial::constant(&f.int(2)));
        assert_eq!(sq, FunctionFieldElement::from_rational(&h, RationalFunction::from_poly(expect)));
    }

    #[test]
    fn derivative_of_y() {
        let f4 = Field::new(2, 2, None).unwrap();
        let c = Curve::new(&f4, 3, 3, vec![f4.t()]).unwrap();
        let y3 = FunctionFieldElement::y(&c, 3).unwrap();
        let d = y3.derivative();
        let expect = RationalFunction::new(
            Polynomial::monomial(&f4, 1, 2),
            Polynomial::from_raw(&f4, vec![1, 0, 0, 1]),
        )
        .unwrap();
        assert_eq!(d.term(&[1, 0]), Some(&expect));
        let z5 = FunctionFieldElement::z(&c).pow(5);
        let d = z5.derivative();
        assert_eq!(d, FunctionFieldElement::z(&c).pow(4));
    }

    #[test]
    fn pth_root_round_trip_on_generators() {
        let f4 = Field::new(2, 2, None).unwrap();
        let c = Curve::new(&f4, 3, 3, vec![f4.t()]).unwrap();
        for j in 3..=4 {
            let y = FunctionFieldElement::y(&c, j).unwrap();
            assert_eq!(y.pow(2).pth_root().unwrap(), y);
        }
        let konst = FunctionFieldElement::from_rational(&c, RationalFunction::constant(&f4.t()));
        assert_eq!(
            konst.pth_root().unwrap(),
            FunctionFieldElement::from_rational(&c, RationalFunction::constant(&f4.t().pth_root()))
        );
        assert_eq!(FunctionFieldElement::z(&c).pth_root(), Err(Error::NotAPthPower));
    }

    #[test]
    fn monomial_inverse() {
        let f = f9();
        let h = Curve::new(&f, 2, 4, vec![f.int(2), f.t()]).unwrap();
        let y3 = FunctionFieldElement::y(&h, 3).unwrap();
        let z = FunctionFieldElement::z(&h);
        let m = &z * &y3;
        assert_eq!(&m * &m.inverse().unwrap(), FunctionFieldElement::one(&h));
        assert_eq!((&z + &y3).inverse(), Err(Error::NotMonomial));
    }

    #[test]
    fn moduli_moves() {
        let f = f9();
        let lam = vec![f.int(2), f.t()];
        let v = moduli_transform(&lam, ModuliMove::V).unwrap();
        assert_eq!(v, vec![f.int(2), f.t().inv().unwrap()]);
        assert_eq!(moduli_transform(&v, ModuliMove::V).unwrap(), lam);
        let one = vec![f.t()];
        let u = moduli_transform(&one, ModuliMove::U).unwrap();
        assert_eq!(u, vec![f.t().div(&(f.t() - f.one())).unwrap()]);
        assert_eq!(moduli_transform(&[f.zero()], ModuliMove::V), Err(Error::DegenerateTransform));
    }

    #[test]
    fn parse_descriptions() {
        let c = Curve::parse("2^2:1,1,1; k=3; n=3; λ=t").unwrap();
        assert_eq!(c.genus(), 10);
        assert_eq!(c.lambdas()[0], c.field().t());
        let h = Curve::parse("3^2;2;4;2,0,0,1").unwrap();
        let h2 = Curve::parse("3^2:<canonical>;k=2;n=4;λ=2,t").unwrap();
        assert_eq!(h, h2);
        assert_eq!(Curve::parse(&h.to_string()).unwrap(), h);
        assert!(matches!(Curve::parse("2^1;2;3;1"), Err(Error::KNotCoprimeToP { .. })));
    }
}
