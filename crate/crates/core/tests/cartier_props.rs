mod common;

use common::*;
use genfermat::basis::{character_of_theta, divisor_of_theta, enumerate_basis, theta_to_ffe, DifferentialForm, StandardBasis};
use genfermat::cartier::{cartier_apply, CartierMatrix};
use genfermat::closedform::{char2_image, char3_k2_image};
use genfermat::curve::{moduli_transform, FunctionFieldElement, ModuliMove};
use genfermat::{ArithOp, Curve, Error};
use proptest::prelude::*;

/// `(p, m, k, n)` with `gcd(k, p) = 1`, a field large enough for `n - 2`
/// parameters, and a small genus.
fn shapes() -> Vec<(u64, u32, u32, u32)> {
    vec![
        (2, 2, 3, 2),
        (2, 2, 3, 3),
        (2, 2, 3, 4),
        (2, 4, 5, 2),
        (2, 4, 5, 3),
        (2, 4, 3, 5),
        (3, 2, 2, 3),
        (3, 2, 2, 4),
        (3, 2, 2, 5),
        (3, 2, 4, 3),
        (3, 1, 5, 2),
        (5, 1, 2, 4),
        (5, 1, 3, 3),
        (5, 2, 3, 3),
        (7, 1, 2, 5),
        (7, 1, 4, 2),
    ]
}

fn curve_strategy() -> impl Strategy<Value = Curve> {
    (0..shapes().len(), any::<u64>()).prop_map(|(i, seed)| {
        let (p, m, k, n) = shapes()[i];
        let f = field(p, m);
        let mut r = rng(seed);
        Curve::new(&f, k, n, random_lambdas(&mut r, &f, n as usize - 2)).unwrap()
    })
}

fn curve_and_seed() -> impl Strategy<Value = (Curve, u64)> {
    (curve_strategy(), any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relation_consistency(c in curve_strategy()) {
        for j in 0..c.rank() {
            let y = FunctionFieldElement::y(&c, j as u32 + 3).unwrap();
            let yk = &y.pow(c.k() - 1) * &y;
            let expect = FunctionFieldElement::from_rational(&c, c.relation(j).clone());
            prop_assert_eq!(yk, expect);
        }
    }

    #[test]
    fn derivation_and_roots((c, seed) in curve_and_seed()) {
        let mut r = rng(seed);
        let a = random_ffe(&mut r, &c, 3, 3);
        let b = random_ffe(&mut r, &c, 3, 3);
        prop_assert_eq!((&a * &b).derivative(), &(&a * &b.derivative()) + &(&a.derivative() * &b));
        prop_assert_eq!(a.pow(c.p()).pth_root().unwrap(), a.clone());
        prop_assert!(a.pow(c.p()).derivative().is_zero());
    }

    #[test]
    fn logarithmic_and_exact_forms((c, seed) in curve_and_seed()) {
        let mut r = rng(seed);
        let w = random_unit(&mut r, &c, 4);
        let dw = w.derivative();
        let dlog = dw.arith(&w, ArithOp::Div).unwrap();
        prop_assert_eq!(cartier_apply(&DifferentialForm::new(dlog.clone())).unwrap().coefficient, dlog);
        let wdw = &w.pow(c.p() - 1) * &dw;
        prop_assert_eq!(cartier_apply(&DifferentialForm::new(wdw)).unwrap().coefficient, dw.clone());
        prop_assert!(cartier_apply(&DifferentialForm::new(dw)).unwrap().is_zero());
    }

    #[test]
    fn rational_logarithmic_forms((c, seed) in curve_and_seed()) {
        let mut r = rng(seed);
        let w = random_nonzero_rf(&mut r, c.field(), 5);
        let dlog = w.derivative(1).arith(&w, ArithOp::Div).unwrap();
        let form = FunctionFieldElement::from_rational(&c, dlog);
        prop_assert_eq!(cartier_apply(&DifferentialForm::new(form.clone())).unwrap().coefficient, form);
    }

    #[test]
    fn cartier_is_semilinear((c, seed) in curve_and_seed()) {
        let mut r = rng(seed);
        let basis = StandardBasis::new(&c).unwrap();
        let coords: Vec<_> = (0..basis.len()).map(|_| random_element(&mut r, c.field())).collect();
        let form = basis.combination(&coords).unwrap();
        let image = basis.coords_raw(&cartier_apply(&form).unwrap()).unwrap();
        let cm = CartierMatrix::new(&c).unwrap();
        let raw: Vec<u32> = coords.iter().map(|x| x.value()).collect();
        prop_assert_eq!(image, cm.apply(&raw));
    }

    #[test]
    fn basis_invariants(c in curve_strategy()) {
        let basis = StandardBasis::new(&c).unwrap();
        let points = (c.k() as i64).pow(c.n() - 1);
        for (i, b) in basis.indices().iter().enumerate() {
            let d = divisor_of_theta(b, &c);
            prop_assert!(d.iter().all(|&x| x >= 0));
            prop_assert_eq!(d.iter().sum::<i64>() * points, 2 * c.genus() as i64 - 2);
            let ch = character_of_theta(b, &c);
            prop_assert_eq!(ch.exps.iter().sum::<u32>() % c.k(), 0);
            let unit: Vec<u32> = (0..basis.len()).map(|j| (i == j) as u32).collect();
            prop_assert_eq!(basis.coords_raw(&theta_to_ffe(b, &c).unwrap()).unwrap(), unit);
        }
    }

    #[test]
    fn matrix_invariants(c in curve_strategy()) {
        let cm = CartierMatrix::new(&c).unwrap();
        let g = cm.genus();
        let (a, gamma) = (cm.a_number(), cm.p_rank());
        prop_assert!(a + gamma <= g);
        prop_assert!(gamma <= cm.rank());
        prop_assert_eq!(cm.kernel_basis().len(), a);
        for v in cm.kernel_basis() {
            prop_assert!(cm.apply(&v).iter().all(|&x| x == 0));
        }
        let mut prev = g;
        for t in 1..=g.min(12) {
            let rank = cm.semilinear_power(t).rank();
            prop_assert!(rank <= prev);
            prev = rank;
        }
        prop_assert_eq!(cm.semilinear_power(g).rank(), gamma);
        let split = cm.hw_split();
        prop_assert_eq!(split.semisimple + split.nilpotent, g);
        let pinv = c.p_inv_mod_k();
        let idxs = cm.basis().indices();
        for i in 0..g {
            let want = character_of_theta(&idxs[i], &c).scaled(pinv, c.k());
            for j in (0..g).filter(|&j| cm.matrix().get(j, i) != 0) {
                prop_assert_eq!(character_of_theta(&idxs[j], &c), want.clone());
            }
        }
    }

    #[test]
    fn moduli_moves_preserve_invariants(c in curve_strategy()) {
        let cm = CartierMatrix::new(&c).unwrap();
        for kind in [ModuliMove::V, ModuliMove::U] {
            match moduli_transform(c.lambdas(), kind) {
                Ok(ls) => {
                    let Ok(d) = Curve::new(c.field(), c.k(), c.n(), ls) else { continue };
                    let dm = CartierMatrix::new(&d).unwrap();
                    prop_assert_eq!((cm.a_number(), cm.p_rank()), (dm.a_number(), dm.p_rank()));
                }
                Err(Error::DegenerateTransform) => {}
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }

    #[test]
    fn closed_forms_agree_with_general_algorithm(c in curve_strategy()) {
        let applicable = c.p() == 2 || (c.p() == 3 && c.k() == 2 && c.n() >= 3);
        prop_assume!(applicable);
        let basis = StandardBasis::new(&c).unwrap();
        for b in basis.indices() {
            let general = cartier_apply(&theta_to_ffe(b, &c).unwrap()).unwrap();
            if c.p() == 2 {
                let closed = char2_image(b, &c).unwrap().coords_raw(&basis).unwrap();
                prop_assert_eq!(closed, basis.coords_raw(&general).unwrap());
            } else {
                prop_assert_eq!(char3_k2_image(b, &c).unwrap(), general);
            }
        }
    }
}

#[test]
fn pullback_blocks() {
    let mut r = rng(5);
    for (p, m, k, n) in [(2, 4, 3, 4), (3, 2, 2, 5), (2, 4, 5, 3), (5, 1, 2, 4), (2, 4, 3, 5)] {
        let f = field(p, m);
        let big = Curve::new(&f, k, n, random_lambdas(&mut r, &f, n as usize - 2)).unwrap();
        let small = Curve::new(&f, k, n - 1, big.lambdas()[..n as usize - 3].to_vec()).unwrap();
        let (bm, sm) = (CartierMatrix::new(&big).unwrap(), CartierMatrix::new(&small).unwrap());
        let last = big.rank() - 1;
        let idxs = bm.basis().indices();
        for i in (0..bm.genus()).filter(|&i| idxs[i].alphas[last] == 0) {
            for j in 0..bm.genus() {
                let v = bm.matrix().get(j, i);
                if idxs[j].alphas[last] != 0 {
                    assert_eq!(v, 0);
                    continue;
                }
                let shrink = |b: &genfermat::BasisIndex| genfermat::BasisIndex::new(b.r, b.alphas[..last].to_vec());
                let si = sm.basis().position(&shrink(&idxs[i])).unwrap();
                let sj = sm.basis().position(&shrink(&idxs[j])).unwrap();
                assert_eq!(sm.matrix().get(sj, si), v, "{big}");
            }
        }
    }
}

#[test]
fn base_field_stability() {
    for (small, big, k, n) in [((2, 2), (2, 4), 3, 3), ((2, 2), (2, 4), 5, 3), ((3, 2), (3, 4), 2, 4), ((3, 1), (3, 2), 4, 3)] {
        let (fs, fb) = (field(small.0, small.1), field(big.0, big.1));
        let embed = fs.embedding_into(&fb).unwrap();
        for ls in lambda_tuples(&fs, n as usize - 2).into_iter().take(3) {
            let c = Curve::new(&fs, k, n, ls.clone()).unwrap();
            let lifted = ls.iter().map(|l| fb.wrap(embed[l.value() as usize])).collect();
            let d = Curve::new(&fb, k, n, lifted).unwrap();
            let (x, y) = (CartierMatrix::new(&c).unwrap(), CartierMatrix::new(&d).unwrap());
            assert_eq!((x.a_number(), x.p_rank()), (y.a_number(), y.p_rank()), "{c} vs {d}");
            let m = x.matrix();
            let rows: Vec<Vec<u32>> =
                (0..m.rows()).map(|i| m.row(i).iter().map(|&v| embed[v as usize]).collect()).collect();
            assert_eq!(&genfermat::Matrix::from_rows(&fb, &rows), y.matrix(), "{c} vs {d}");
        }
    }
}

#[test]
fn every_index_is_enumerated_once() {
    for (p, m, k, n) in shapes() {
        let f = field(p, m);
        let c = first_curve(&f, k, n);
        let b = enumerate_basis(&c).unwrap();
        let mut sorted = b.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, b);
        assert!(b.iter().all(|i| i.is_valid(&c)));
    }
}
