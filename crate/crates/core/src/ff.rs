//! Finite fields `F_{p^m} = F_p[t]/(f)`.
//!
//! Elements are stored as the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` of
//! their residue vector. Multiplication goes through discrete log/exp tables
//! built once per field, so every field here is small (order at most 2^16).

use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

const MAX_ORDER: u64 = 1 << 16;

/// A presentation of `F_{p^m}` together with its arithmetic tables.
pub struct FieldSpec {
    p: u32,
    m: u32,
    modulus: Vec<u32>,
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    frob_inv: Vec<u32>,
}

/// Shared handle to a [`FieldSpec`]. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

impl Deref for Field {
    type Target = FieldSpec;

    fn deref(&self) -> &FieldSpec {
        &self.0
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.p == other.p && self.modulus == other.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}:{}", self.p, self.m, join(&self.modulus))
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense polynomials over `F_p`, constant term first, used only to validate
/// and search for moduli.
mod fp_poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r as u32
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let db = b.len() - 1;
        let lc_inv = inv_mod(b[db], p) as u64;
        while a.len() > db {
            let da = a.len() - 1;
            let c = a[da] as u64 * lc_inv % p as u64;
            for (i, &bi) in b.iter().enumerate() {
                let idx = da - db + i;
                a[idx] = ((a[idx] as u64 + (p as u64 - c) * bi as u64) % p as u64) as u32;
            }
            a = trim(a);
        }
        a
    }

    pub fn mul_mod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        rem(&out.into_iter().map(|c| c as u32).collect::<Vec<_>>(), f, p)
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Irreducibility of a monic `f` of degree `m`: no factor of degree
    /// `d <= m/2`, tested by `gcd(f, t^{p^d} - t) = 1`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let m = f.len() - 1;
        if m <= 1 {
            return true;
        }
        let t = rem(&[0, 1], f, p);
        let mut power = t.clone();
        for _ in 1..=m / 2 {
            let mut next = vec![1];
            for _ in 0..p {
                next = mul_mod(&next, &power, f, p);
            }
            power = next;
            let mut diff = power.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            let diff = trim(diff);
            if diff.is_empty() {
                return false;
            }
            if gcd(f, &diff, p).len() > 1 {
                return false;
            }
        }
        true
    }
}

impl FieldSpec {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Monic modulus, constant term first, length `m + 1`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn decode(&self, mut value: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            out.push(value % self.p);
            value /= self.p;
        }
        out
    }

    pub fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let p = self.p;
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return (self.p - a) % self.p;
        }
        let p = self.p;
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((p - a % p) % p) * place;
            place *= p;
            a /= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.order - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.order - 1) as u64;
        self.exp[(self.log[a as usize] as u64 * (e % n) % n) as usize]
    }

    /// Inverse Frobenius: the unique `r` with `r^p = a`.
    #[inline]
    pub fn pth_root(&self, a: u32) -> u32 {
        self.frob_inv[a as usize]
    }

    /// Image of an integer under `Z -> F_p -> F_{p^m}`.
    pub fn from_int(&self, c: i64) -> u32 {
        c.rem_euclid(self.p as i64) as u32
    }

    /// Image of the generator `t` of `F_p[t]/(f)`.
    pub fn generator_value(&self) -> u32 {
        if self.m == 1 {
            self.neg(self.modulus[0])
        } else {
            self.p
        }
    }

    fn mul_naive(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.decode(a), self.decode(b));
        let prod = fp_poly::mul_mod(&fp_poly::trim(x), &fp_poly::trim(y), &self.modulus, self.p);
        self.encode(&prod)
    }
}

impl Field {
    /// Builds `F_{p^m}`. Without an explicit modulus the first monic irreducible
    /// polynomial in ascending order of `sum c_i p^i` is used.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::DegreeMismatch { expected: 1, got: 0 });
        }
        let order = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
        if order > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge(order.min(u64::MAX as u128) as u64));
        }
        let p = p as u32;
        let order = order as u32;
        let modulus = match modulus {
            Some(f) => {
                let trimmed = fp_poly::trim(f.to_vec());
                if trimmed.len() != m as usize + 1 || f.len() != m as usize + 1 {
                    return Err(Error::DegreeMismatch {
                        expected: m as usize,
                        got: trimmed.len().saturating_sub(1),
                    });
                }
                if trimmed.iter().any(|&c| c >= p) {
                    return Err(Error::Parse(format!("modulus coefficient not reduced mod {p}")));
                }
                if trimmed[m as usize] != 1 {
                    return Err(Error::DegreeMismatch { expected: m as usize, got: m as usize });
                }
                if !fp_poly::is_irreducible(&trimmed, p) {
                    return Err(Error::ReducibleModulus(join(&trimmed)));
                }
                trimmed
            }
            None => canonical_modulus(p, m),
        };
        let mut spec = FieldSpec {
            p,
            m,
            modulus,
            order,
            exp: Vec::new(),
            log: Vec::new(),
            frob_inv: Vec::new(),
        };
        spec.build_tables();
        Ok(Field(Arc::new(spec)))
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// Parses `"p^m"`, `"p^m:c0,c1,...,cm"` or a bare prime `"p"`.
    pub fn parse(s: &str) -> Result<Field> {
        let s = s.trim();
        let (head, modulus) = match s.split_once(':') {
            Some((h, rest)) => {
                let rest = rest.trim();
                if rest.is_empty() || rest.starts_with('<') {
                    (h, None)
                } else {
                    (h, Some(parse_u32_list(rest)?))
                }
            }
            None => (s, None),
        };
        let (p, m) = match head.split_once('^') {
            Some((p, m)) => (parse_num::<u64>(p)?, parse_num::<u32>(m)?),
            None => (parse_num::<u64>(head)?, 1),
        };
        Field::new(p, m, modulus.as_deref())
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), value: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: self.clone(), value: 1 }
    }

    /// The class of `t`.
    pub fn t(&self) -> FieldElement {
        self.wrap(self.generator_value())
    }

    pub fn int(&self, c: i64) -> FieldElement {
        self.wrap(self.from_int(c))
    }

    pub fn wrap(&self, value: u32) -> FieldElement {
        debug_assert!(value < self.order);
        FieldElement { field: self.clone(), value }
    }

    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse(format!("residues {:?} do not describe an element of {self}", coeffs)));
        }
        Ok(self.wrap(self.encode(coeffs)))
    }

    /// All elements in ascending order of their integer encoding.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(move |v| self.wrap(v))
    }

    /// Parses either a residue list (`"1,1"`, constant term first, padded with
    /// zeros) or an integer polynomial expression in `t` (`"t+1"`, `"2t^2-1"`).
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        if s.contains('t') {
            return self.parse_expression(s);
        }
        let parts = s
            .split(',')
            .map(parse_num::<i64>)
            .collect::<Result<Vec<_>>>()?;
        if parts.len() > self.m as usize {
            return Err(Error::Parse(format!("too many residues in {s:?} for {self}")));
        }
        let residues: Vec<u32> = parts.iter().map(|&c| self.from_int(c)).collect();
        self.element(&residues)
    }

    fn parse_expression(&self, s: &str) -> Result<FieldElement> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut current = String::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !current.ends_with('^') {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);
        let t = self.t();
        let mut acc = self.zero();
        for term in terms.iter().filter(|t| !t.is_empty() && *t != "+") {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1i64, b),
                None => (1, term.trim_start_matches('+')),
            };
            let value = match body.split_once('t') {
                None => self.int(sign * parse_num::<i64>(body)?),
                Some((coef, power)) => {
                    let coef = coef.trim_end_matches('*');
                    let c = if coef.is_empty() { 1 } else { parse_num::<i64>(coef)? };
                    let e = match power.strip_prefix('^') {
                        Some(e) => parse_num::<u64>(e)?,
                        None if power.is_empty() => 1,
                        None => return Err(Error::Parse(format!("bad term {term:?}"))),
                    };
                    self.int(sign * c) * t.pow(e)
                }
            };
            acc = acc + value;
        }
        Ok(acc)
    }

    /// Embeds `self` into `target`, returning the image of every element
    /// indexed by encoding. `t` goes to the smallest-encoded root of the modulus.
    pub fn embedding_into(&self, target: &Field) -> Result<Vec<u32>> {
        let err = Error::NoEmbedding { from: self.order as u64, into: target.order as u64 };
        if self.p != target.p || !target.m.is_multiple_of(self.m) {
            return Err(err);
        }
        let eval = |x: u32| {
            self.modulus
                .iter()
                .rev()
                .fold(0u32, |acc, &c| target.add(target.mul(acc, x), c))
        };
        let root = (0..target.order).find(|&x| eval(x) == 0).ok_or(err)?;
        let powers: Vec<u32> = (0..self.m).map(|i| target.pow(root, i as u64)).collect();
        Ok((0..self.order)
            .map(|v| {
                self.decode(v)
                    .iter()
                    .zip(&powers)
                    .fold(0, |acc, (&c, &pw)| target.add(acc, target.mul(c, pw)))
            })
            .collect())
    }

    /// Primitive `k`-th root of unity of smallest encoding.
    pub fn primitive_kth_root(&self, k: u64) -> Result<FieldElement> {
        let n = (self.order - 1) as u64;
        if k == 0 || !n.is_multiple_of(k) {
            return Err(Error::NoSuchRoot { k, order: self.order as u64 });
        }
        let step = n / k;
        (1..=k)
            .filter(|j| gcd(*j, k) == 1)
            .map(|j| self.exp[(j * step % n) as usize])
            .min()
            .map(|v| self.wrap(v))
            .ok_or(Error::NoSuchRoot { k, order: self.order as u64 })
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn canonical_modulus(p: u32, m: u32) -> Vec<u32> {
    let span = p.pow(m);
    (0..span)
        .map(|low| {
            let mut f = Vec::with_capacity(m as usize + 1);
            let mut v = low;
            for _ in 0..m {
                f.push(v % p);
                v /= p;
            }
            f.push(1);
            f
        })
        .find(|f| fp_poly::is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

impl FieldSpec {
    fn build_tables(&mut self) {
        let q = self.order;
        let n = q - 1;
        let generator = (1..q)
            .find(|&g| {
                let mut x = g;
                let mut steps = 1;
                while x != 1 {
                    x = self.mul_naive(x, g);
                    steps += 1;
                    if steps > n {
                        return false;
                    }
                }
                steps == n
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; 2 * n as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1;
        for i in 0..n {
            exp[i as usize] = x;
            exp[(i + n) as usize] = x;
            log[x as usize] = i;
            x = self.mul_naive(x, generator);
        }
        self.exp = exp;
        self.log = log;
        let e = (self.p as u64).pow(self.m - 1);
        self.frob_inv = (0..q).map(|a| self.pow(a, e)).collect();
    }
}

/// An element of a finite field, tagged with its field.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Integer encoding `sum c_i p^i`.
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.decode(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    pub fn arith(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let value = match op {
            ArithOp::Add => f.add(self.value, other.value),
            ArithOp::Sub => f.sub(self.value, other.value),
            ArithOp::Mul => f.mul(self.value, other.value),
            ArithOp::Div => f.mul(self.value, f.inv(other.value).ok_or(Error::DivisionByZero)?),
        };
        Ok(f.wrap(value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.field
            .inv(self.value)
            .map(|v| self.field.wrap(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.arith(other, ArithOp::Div)
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.field.wrap(self.field.pow(self.value, e))
    }

    pub fn pth_root(&self) -> FieldElement {
        self.field.wrap(self.field.pth_root(self.value))
    }

    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.field.p as u64)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.coeffs()))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.arith(rhs, $op).expect("field mismatch")
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, ArithOp::Add);
forward_binop!(Sub, sub, ArithOp::Sub);
forward_binop!(Mul, mul, ArithOp::Mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.wrap(self.field.neg(self.value))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

pub(crate) fn parse_num<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.trim()
        .parse::<T>()
        .map_err(|_| Error::Parse(format!("expected a number, got {s:?}")))
}

pub(crate) fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    s.split(',').map(parse_num::<u32>).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        assert_eq!(Field::new(2, 1, None).unwrap().modulus(), &[0, 1]);
        assert_eq!(Field::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(2, 4, None).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn only_quadratic_over_f2_found_by_scan() {
        let irreducible: Vec<Vec<u32>> = (0..4u32)
            .map(|v| vec![v & 1, v >> 1, 1])
            .filter(|f| (0..2).all(|x| (f[0] + f[1] * x + x * x) % 2 != 0))
            .collect();
        assert_eq!(irreducible, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn explicit_modulus_checks() {
        assert!(matches!(Field::new(2, 2, Some(&[1, 0, 1])), Err(Error::ReducibleModulus(_))));
        assert!(matches!(Field::new(2, 2, Some(&[1, 1])), Err(Error::DegreeMismatch { .. })));
        assert!(Field::new(3, 2, Some(&[2, 2, 1])).is_ok());
        assert!(matches!(Field::new(2, 20, None), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn small_arith() {
        let f2 = Field::prime(2).unwrap();
        assert!((f2.one() + f2.one()).is_zero());
        let f4 = Field::new(2, 2, None).unwrap();
        assert_eq!(f4.t() * f4.t(), f4.parse_element("1,1").unwrap());
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.int(2).div(&f3.int(2)).unwrap(), f3.one());
        assert_eq!(f3.one().div(&f3.zero()), Err(Error::DivisionByZero));
        let f9 = Field::new(3, 2, None).unwrap();
        assert_eq!(f3.one().arith(&f9.one(), ArithOp::Add), Err(Error::FieldMismatch));
    }

    #[test]
    fn pth_roots() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.one().pth_root(), f2.one());
        let f4 = Field::new(2, 2, None).unwrap();
        assert_eq!(f4.t().pth_root(), f4.parse_element("t+1").unwrap());
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.int(2).pth_root(), f3.int(2));
    }

    #[test]
    fn roots_of_unity() {
        let f4 = Field::new(2, 2, None).unwrap();
        assert_eq!(f4.primitive_kth_root(3).unwrap(), f4.t());
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.primitive_kth_root(2).unwrap(), f3.int(2));
        let f2 = Field::prime(2).unwrap();
        assert!(matches!(f2.primitive_kth_root(3), Err(Error::NoSuchRoot { .. })));
    }

    #[test]
    fn parsing() {
        let f = Field::parse("2^2:1,1,1").unwrap();
        assert_eq!(f.to_string(), "2^2:1,1,1");
        let f9 = Field::parse("3^2").unwrap();
        assert_eq!(f9.parse_element("2t+1").unwrap().coeffs(), vec![1, 2]);
        assert_eq!(f9.parse_element("-1").unwrap(), f9.int(2));
        assert_eq!(f9.parse_element("t^2").unwrap(), f9.int(-1));
        assert_eq!(Field::parse("3^2:<canonical>").unwrap(), f9);
        assert!(Field::parse("x^2").is_err());
        let f5 = Field::parse("5").unwrap();
        assert_eq!(f5.t(), f5.zero());
    }

    #[test]
    fn embedding_preserves_arithmetic() {
        let f4 = Field::new(2, 2, None).unwrap();
        let f16 = Field::new(2, 4, None).unwrap();
        let map = f4.embedding_into(&f16).unwrap();
        for a in f4.elements() {
            for b in f4.elements() {
                let ab = (&a * &b).value();
                assert_eq!(map[ab as usize], f16.mul(map[a.value() as usize], map[b.value() as usize]));
                let s = (&a + &b).value();
                assert_eq!(map[s as usize], f16.add(map[a.value() as usize], map[b.value() as usize]));
            }
        }
        assert!(Field::new(2, 3, None).unwrap().embedding_into(&f16).is_err());
    }
}
