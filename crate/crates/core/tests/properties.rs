use genus2::covariants::{discriminant6, transvectant, BForm};
use genus2::equivariant::{adams_product, decompose, decompose_with, WeylLaurent};
use genus2::exact::{rat, series_expand, MPoly, RatFun};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn form(max_deg: usize) -> impl Strategy<Value = BForm> {
    (0..=max_deg).prop_flat_map(|d| {
        prop::collection::vec(-6i64..=6, d + 1).prop_map(move |cs| {
            let terms: Vec<(usize, i64)> = cs.into_iter().enumerate().collect();
            BForm::from_ints(d, &terms)
        })
    })
}

fn same_degree_pair(max_deg: usize) -> impl Strategy<Value = (BForm, BForm)> {
    (0..=max_deg).prop_flat_map(|d| {
        (
            prop::collection::vec(-6i64..=6, d + 1),
            prop::collection::vec(-6i64..=6, d + 1),
        )
            .prop_map(move |(a, b)| {
                let f = |cs: Vec<i64>| {
                    BForm::from_ints(d, &cs.into_iter().enumerate().collect::<Vec<_>>())
                };
                (f(a), f(b))
            })
    })
}

fn sextic() -> impl Strategy<Value = BForm> {
    prop::collection::vec(-4i64..=4, 7)
        .prop_map(|cs| BForm::from_ints(6, &cs.into_iter().enumerate().collect::<Vec<_>>()))
}

fn small_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u32..4, 0u32..4), -5i64..=5), 0..5).prop_map(|ts| {
        let mut p = MPoly::zero();
        for ((a, b), c) in ts {
            let m = &MPoly::var(0).pow(a) * &MPoly::var(1).pow(b);
            p = &p + &m.scale(&rat::int(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn transvectant_antisymmetry(f in form(6), g in form(6), p in 0usize..=6) {
        let p = p.min(f.degree()).min(g.degree());
        let fg = transvectant(&f, &g, p).unwrap();
        let gf = transvectant(&g, &f, p).unwrap();
        let sign = rat::int(if p % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(&fg, &gf.scale(&sign));
        prop_assert_eq!(fg.degree(), f.degree() + g.degree() - 2 * p);
    }

    #[test]
    fn transvectant_bilinear((f, h) in same_degree_pair(5), g in form(5), p in 0usize..=5, c in -4i64..=4) {
        let p = p.min(f.degree()).min(g.degree());
        let lhs = transvectant(&(&f.scale(&rat::int(c)) + &h), &g, p).unwrap();
        let rhs = &transvectant(&f, &g, p).unwrap().scale(&rat::int(c)) + &transvectant(&h, &g, p).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transvectant_equivariant(f in form(4), g in form(4), p in 0usize..=4, a in prop::sample::select(vec![[[1i64, 1], [0, 1]], [[1, 0], [2, 1]], [[0, 1], [-1, 0]], [[2, 1], [1, 1]]])) {
        // transvectants are covariants: (f∘A, g∘A)_p = det(A)^p (f,g)_p ∘ A, det(A) = 1 here
        let p = p.min(f.degree()).min(g.degree());
        let lhs = transvectant(&f.transform(a), &g.transform(a), p).unwrap();
        let rhs = transvectant(&f, &g, p).unwrap().transform(a);
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn discriminant_homogeneity(f in sextic(), m in prop::array::uniform4(-2i64..=2)) {
        let a = [[m[0], m[1]], [m[2], m[3]]];
        let det = m[0] * m[3] - m[1] * m[2];
        let lhs = discriminant6(&f.transform(a)).unwrap().constant_term();
        let rhs = discriminant6(&f).unwrap().constant_term() * rat::pow(&rat::int(det), 30);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ratfun_field_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let x = RatFun::new(a.clone(), b.clone()).unwrap();
        let y = RatFun::new(c.clone(), b.clone()).unwrap();
        let z = RatFun::from_poly(c.clone());
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        let q = (&x * &z).div(&z).unwrap();
        prop_assert_eq!(q, x);
    }

    #[test]
    fn series_of_product(a in small_poly(), b in small_poly()) {
        let one = MPoly::one();
        let den = &one - &MPoly::var(0);
        let x = RatFun::new(a.clone(), den.clone()).unwrap();
        let y = RatFun::new(b.clone(), &one - &MPoly::var(1)).unwrap();
        let lhs = series_expand(&(&x * &y), 8, 8).unwrap();
        let rhs = &series_expand(&x, 8, 8).unwrap() * &series_expand(&y, 8, 8).unwrap();
        prop_assert_eq!(lhs.first_difference(&rhs), None);
    }

    #[test]
    fn sp4_reconstruction(degrees in prop::collection::vec(1usize..=4, 1..=4)) {
        let w = adams_product(&degrees);
        let parts = decompose(&w).unwrap();
        let mut back = WeylLaurent::default();
        for (&(k, l), &c) in &parts {
            back.add_scaled(&genus2::equivariant::basis_character(k, l), c);
        }
        prop_assert_eq!(back, w);
    }
}

#[test]
fn decomposition_independent_of_tie_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for degrees in [
        vec![1, 1, 1],
        vec![2, 1, 1, 1],
        vec![3, 2, 1],
        vec![1, 1, 1, 1, 1],
        vec![2, 2, 2],
    ] {
        let w = adams_product(&degrees);
        let reference = decompose(&w).unwrap();
        for _ in 0..20 {
            let got =
                decompose_with(&w, &mut |c: &[(i32, i32)]| rng.gen_range(0..c.len())).unwrap();
            assert_eq!(got, reference, "{degrees:?}");
        }
    }
}
