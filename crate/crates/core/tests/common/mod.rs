#![allow(dead_code)]

use genfermat::{Curve, Field, FieldElement, FunctionFieldElement, Polynomial, RationalFunction};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn field(p: u64, m: u32) -> Field {
    Field::new(p, m, None).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Elements outside `{0, 1}`, in encoding order.
pub fn admissible(f: &Field) -> Vec<FieldElement> {
    f.elements().filter(|e| !e.is_zero() && !e.is_one()).collect()
}

/// Every ordered tuple of `len` distinct admissible elements.
pub fn lambda_tuples(f: &Field, len: usize) -> Vec<Vec<FieldElement>> {
    let pool = admissible(f);
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t: Vec<FieldElement>| {
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

pub fn first_curve(f: &Field, k: u32, n: u32) -> Curve {
    let pool = admissible(f);
    Curve::new(f, k, n, pool[..n as usize - 2].to_vec()).unwrap()
}

pub fn random_lambdas(rng: &mut StdRng, f: &Field, len: usize) -> Vec<FieldElement> {
    let mut pool = admissible(f);
    let mut out = Vec::new();
    for _ in 0..len {
        let i = rng.gen_range(0..pool.len());
        out.push(pool.remove(i));
    }
    out
}

pub fn random_element(rng: &mut StdRng, f: &Field) -> FieldElement {
    f.wrap(rng.gen_range(0..f.order()))
}

pub fn random_poly(rng: &mut StdRng, f: &Field, max_deg: usize) -> Polynomial {
    let d = rng.gen_range(0..=max_deg);
    Polynomial::from_raw(f, (0..=d).map(|_| rng.gen_range(0..f.order())).collect())
}

pub fn random_nonzero_poly(rng: &mut StdRng, f: &Field, max_deg: usize) -> Polynomial {
    loop {
        let p = random_poly(rng, f, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_rf(rng: &mut StdRng, f: &Field, max_deg: usize) -> RationalFunction {
    let num = random_poly(rng, f, max_deg);
    let den = random_nonzero_poly(rng, f, max_deg);
    RationalFunction::new(num, den).unwrap()
}

pub fn random_nonzero_rf(rng: &mut StdRng, f: &Field, max_deg: usize) -> RationalFunction {
    let num = random_nonzero_poly(rng, f, max_deg);
    let den = random_nonzero_poly(rng, f, max_deg);
    RationalFunction::new(num, den).unwrap()
}

pub fn random_key(rng: &mut StdRng, curve: &Curve) -> Vec<u32> {
    (0..curve.rank()).map(|_| rng.gen_range(0..curve.k())).collect()
}

pub fn random_ffe(rng: &mut StdRng, curve: &Curve, terms: usize, max_deg: usize) -> FunctionFieldElement {
    let f = curve.field();
    let mut acc = FunctionFieldElement::zero(curve);
    for _ in 0..terms {
        let key = random_key(rng, curve);
        let t = FunctionFieldElement::monomial(curve, key, random_rf(rng, f, max_deg)).unwrap();
        acc = &acc + &t;
    }
    acc
}

/// A nonzero invertible element `s(z) y^β`.
pub fn random_unit(rng: &mut StdRng, curve: &Curve, max_deg: usize) -> FunctionFieldElement {
    let key = random_key(rng, curve);
    FunctionFieldElement::monomial(curve, key, random_nonzero_rf(rng, curve.field(), max_deg)).unwrap()
}
