//! Univariate polynomials and reduced rational functions in `z` over `F_{p^m}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ff::{ArithOp, Field, FieldElement};

/// Dense polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn from_raw(field: &Field, mut coeffs: Vec<u32>) -> Polynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { field: field.clone(), coeffs }
    }

    pub fn from_elements(field: &Field, coeffs: &[FieldElement]) -> Result<Polynomial> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::from_raw(field, coeffs.iter().map(FieldElement::value).collect()))
    }

    pub fn zero(field: &Field) -> Polynomial {
        Self::from_raw(field, Vec::new())
    }

    pub fn one(field: &Field) -> Polynomial {
        Self::from_raw(field, vec![1])
    }

    pub fn constant(c: &FieldElement) -> Polynomial {
        Self::from_raw(c.field(), vec![c.value()])
    }

    /// `c * z^d` for a raw field value `c`.
    pub fn monomial(field: &Field, c: u32, d: usize) -> Polynomial {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Self::from_raw(field, coeffs)
    }

    pub fn z(field: &Field) -> Polynomial {
        Self::monomial(field, 1, 1)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn raw(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Raw coefficient of `z^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeff_element(&self, i: usize) -> FieldElement {
        self.field.wrap(self.coeff(i))
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = &self.field;
        Self::from_raw(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// `(lc, self / lc)`; the zero polynomial maps to `(0, 0)`.
    pub fn monic(&self) -> (u32, Polynomial) {
        match self.field.inv(self.leading()) {
            Some(inv) => (self.leading(), self.scale(inv)),
            None => (0, self.clone()),
        }
    }

    fn add_raw(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n)
            .map(|i| {
                let b = other.coeff(i);
                f.add(self.coeff(i), if negate { f.neg(b) } else { b })
            })
            .collect();
        Self::from_raw(f, out)
    }

    fn mul_raw(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::from_raw(f, out)
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let f = &self.field;
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = f.inv(divisor.leading()).ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + db], lc_inv);
            if c == 0 {
                continue;
            }
            quot[i] = c;
            let nc = f.neg(c);
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.add(rem[i + j], f.mul(nc, d));
            }
        }
        Ok((Self::from_raw(f, quot), Self::from_raw(f, rem)))
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic().1
    }

    pub fn derivative(&self) -> Polynomial {
        let f = &self.field;
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
            .collect();
        Self::from_raw(f, out)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
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

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let f = &self.field;
        let v = self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x.value()), c));
        f.wrap(v)
    }

    /// Coefficient-wise p-th root when every exponent is divisible by `p`.
    pub fn pth_root(&self) -> Result<Polynomial> {
        let f = &self.field;
        let p = f.characteristic() as usize;
        if self.coeffs.iter().enumerate().any(|(i, &c)| c != 0 && i % p != 0) {
            return Err(Error::NotAPthPower);
        }
        let out = self.coeffs.iter().step_by(p).map(|&c| f.pth_root(c)).collect();
        Ok(Self::from_raw(f, out))
    }

    /// Parses `"c0,c1,...,cd"`. For extension fields each coefficient is a
    /// parenthesised element, e.g. `"(1,1),(0,1)"`.
    pub fn parse(field: &Field, s: &str) -> Result<Polynomial> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::zero(field));
        }
        let items = split_top_level(s)?;
        let coeffs = items
            .iter()
            .map(|it| {
                let inner = it.trim().trim_start_matches('(').trim_end_matches(')');
                field.parse_element(inner).map(|e| e.value())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(field, coeffs))
    }
}

fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    out.push(&s[start..]);
    Ok(out)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let wide = self.field.degree() > 1;
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|&c| {
                let e = self.field.wrap(c);
                if wide {
                    format!("({e})")
                } else {
                    e.to_string()
                }
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.field == rhs.field, "field mismatch");
        self.add_raw(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.field == rhs.field, "field mismatch");
        self.add_raw(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.field == rhs.field, "field mismatch");
        self.mul_raw(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = &self.field;
        Polynomial::from_raw(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

/// A fraction `num / den` kept in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.field != den.field {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> RationalFunction {
        let field = num.field.clone();
        if num.is_zero() {
            return RationalFunction { num, den: Polynomial::one(&field) };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).expect("gcd is nonzero").0, den.div_rem(&g).expect("gcd is nonzero").0)
        };
        let (lc, den) = den.monic();
        let num = if lc == 1 { num } else { num.scale(field.inv(lc).expect("nonzero")) };
        RationalFunction { num, den }
    }

    pub fn from_poly(num: Polynomial) -> RationalFunction {
        let den = Polynomial::one(&num.field);
        RationalFunction { num, den }
    }

    pub fn zero(field: &Field) -> RationalFunction {
        Self::from_poly(Polynomial::zero(field))
    }

    pub fn one(field: &Field) -> RationalFunction {
        Self::from_poly(Polynomial::one(field))
    }

    pub fn constant(c: &FieldElement) -> RationalFunction {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn z(field: &Field) -> RationalFunction {
        Self::from_poly(Polynomial::z(field))
    }

    pub fn field(&self) -> &Field {
        &self.num.field
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Re-runs canonicalisation; a no-op on values built through this API.
    pub fn renormalize(&self) -> RationalFunction {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    pub fn arith(&self, other: &RationalFunction, op: ArithOp) -> Result<RationalFunction> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add_sub(other, false),
            ArithOp::Sub => self.add_sub(other, true),
            ArithOp::Mul => self.mul_impl(other),
            ArithOp::Div => self.mul_impl(&other.inv()?),
        })
    }

    fn add_sub(&self, other: &RationalFunction, negate: bool) -> RationalFunction {
        let combine = |a: &Polynomial, b: &Polynomial| if negate { a - b } else { a + b };
        if self.den == other.den {
            return Self::normalized(combine(&self.num, &other.num), self.den.clone());
        }
        let num = combine(&(&self.num * &other.den), &(&other.num * &self.den));
        Self::normalized(num, &self.den * &other.den)
    }

    fn mul_impl(&self, other: &RationalFunction) -> RationalFunction {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field());
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let q = |a: &Polynomial, g: &Polynomial| {
            if g.is_one() {
                a.clone()
            } else {
                a.div_rem(g).expect("nonzero").0
            }
        };
        let num = &q(&self.num, &g1) * &q(&other.num, &g2);
        let den = &q(&self.den, &g2) * &q(&other.den, &g1);
        let (lc, den) = den.monic();
        let num = if lc == 1 { num } else { num.scale(self.field().inv(lc).expect("nonzero")) };
        RationalFunction { num, den }
    }

    pub fn inv(&self) -> Result<RationalFunction> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (lc, num) = self.num.monic();
        let inv = self.field().inv(lc).expect("nonzero");
        Ok(RationalFunction { num: self.den.scale(inv), den: num })
    }

    pub fn scale(&self, c: &FieldElement) -> RationalFunction {
        if c.is_zero() {
            return Self::zero(self.field());
        }
        RationalFunction { num: self.num.scale(c.value()), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> RationalFunction {
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    fn derivative_once(&self) -> RationalFunction {
        if self.den.is_one() {
            return Self::from_poly(self.num.derivative());
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::normalized(num, &self.den * &self.den)
    }

    /// `d^times / dz^times`.
    pub fn derivative(&self, times: u32) -> RationalFunction {
        (0..times).fold(self.clone(), |acc, _| acc.derivative_once())
    }

    /// The unique `r` with `r^p = self`. In lowest terms with monic
    /// denominator, `self` is a p-th power exactly when every exponent that
    /// occurs in numerator and denominator is divisible by `p`.
    pub fn pth_root(&self) -> Result<RationalFunction> {
        Ok(RationalFunction { num: self.num.pth_root()?, den: self.den.pth_root()? })
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        self.num.eval(x).div(&self.den.eval(x))
    }

    /// Parses `"num|den"` or a bare numerator.
    pub fn parse(field: &Field, s: &str) -> Result<RationalFunction> {
        match s.split_once('|') {
            Some((n, d)) => Self::new(Polynomial::parse(field, n)?, Polynomial::parse(field, d)?),
            None => Ok(Self::from_poly(Polynomial::parse(field, s)?)),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat[{self}]")
    }
}

macro_rules! rf_binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.arith(rhs, $op).expect("field mismatch")
            }
        }
    };
}

rf_binop!(Add, add, ArithOp::Add);
rf_binop!(Sub, sub, ArithOp::Sub);
rf_binop!(Mul, mul, ArithOp::Mul);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: &Field, c: &[i64]) -> Polynomial {
        Polynomial::from_raw(f, c.iter().map(|&x| f.from_int(x)).collect())
    }

    fn rat(f: &Field, n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(poly(f, n), poly(f, d)).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let f2 = Field::prime(2).unwrap();
        let sum = &rat(&f2, &[1], &[1, 1]) + &rat(&f2, &[0, 1], &[1, 1]);
        assert_eq!(sum, RationalFunction::one(&f2));
        let z = RationalFunction::z(&f2);
        assert_eq!(&z * &z, rat(&f2, &[0, 0, 1], &[1]));
        let q = rat(&f2, &[1, 0, 1], &[0, 1]).arith(&rat(&f2, &[1, 1], &[1]), ArithOp::Div).unwrap();
        assert_eq!(q, rat(&f2, &[1, 1], &[0, 1]));
        assert_eq!(
            RationalFunction::one(&f2).arith(&RationalFunction::zero(&f2), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn derivative_examples() {
        let f3 = Field::prime(3).unwrap();
        assert!(rat(&f3, &[0, 0, 0, 1], &[1]).derivative(1).is_zero());
        let f2 = Field::prime(2).unwrap();
        assert_eq!(rat(&f2, &[1], &[1, 1]).derivative(1), rat(&f2, &[1], &[1, 0, 1]));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(rat(&f5, &[0, 0, 1], &[1]).derivative(2), rat(&f5, &[2], &[1]));
    }

    #[test]
    fn pth_root_examples() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(rat(&f2, &[1, 0, 1], &[1]).pth_root().unwrap(), rat(&f2, &[1, 1], &[1]));
        assert_eq!(RationalFunction::z(&f2).pth_root(), Err(Error::NotAPthPower));
        let f3 = Field::prime(3).unwrap();
        let a = rat(&f3, &[0, 0, 0, 1], &[2, 0, 0, 1]);
        assert_eq!(a.pth_root().unwrap(), rat(&f3, &[0, 1], &[2, 1]));
    }

    #[test]
    fn normal_form() {
        let f5 = Field::prime(5).unwrap();
        // (2z+2)/(3z+3) = 4
        let r = rat(&f5, &[2, 2], &[3, 3]);
        assert!(r.is_polynomial());
        assert_eq!(r, rat(&f5, &[4], &[1]));
        assert!(r.den().is_monic());
        assert_eq!(RationalFunction::new(poly(&f5, &[1]), poly(&f5, &[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn text_forms() {
        let f4 = Field::parse("2^2").unwrap();
        let p = Polynomial::parse(&f4, "(1,1),(0,1)").unwrap();
        assert_eq!(p.to_string(), "(1,1),(0,1)");
        let r = RationalFunction::parse(&f4, "(0,1)|(1,0),(1,0)").unwrap();
        assert_eq!(RationalFunction::parse(&f4, &r.to_string()).unwrap(), r);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(Polynomial::parse(&f3, "1,0,2").unwrap(), poly(&f3, &[1, 0, 2]));
    }
}
