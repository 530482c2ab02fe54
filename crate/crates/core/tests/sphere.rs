use proptest::prelude::*;
use qhodge_core::algebra::Elem;
use qhodge_core::calculi::{self, MINUS, PLUS, Z};
use qhodge_core::exterior::{lambda, Exterior};
use qhodge_core::fodc::{Calculus, OneForm};
use qhodge_core::hodge::realify;
use qhodge_core::mpoly::{MPoly, ALPHA, M};
use qhodge_core::scalars::*;
use qhodge_core::sphere::*;

type R = RatFunc;
type E = Elem<R>;

fn rf(s: &str) -> R {
    parse_ratfunc(s).unwrap()
}

#[test]
fn generators_are_coinvariant_and_star_closed() {
    let [bm, bp, b0] = generators::<R>();
    for b in [&bm, &bp, &b0] {
        assert!(b.is_degree(0));
    }
    assert_eq!(b0.star(), b0);
    assert_eq!(bp.star(), bm.scale(&R::q()).neg());
}

#[test]
fn sphere_relations_hold() {
    for (name, r) in relations::<R>() {
        assert!(r.is_zero(), "{name}: {}", r.render());
    }
    let [bm, bp, b0] = generators::<R>();
    let lhs = bm.mul(&bp).sub(&bp.mul(&bm)).scale(&R::q()).add(&b0.mul(&b0).scale(&rf("q^-2-q^2")));
    assert_eq!(lhs, b0.scale(&rf("1-q^2")));
}

#[test]
fn projectability_table() {
    for id in calculi::ALL {
        let d = projectability::<R>(id).unwrap();
        assert_eq!(d, if id == 6 { 0 } else { 1 }, "calc {id}");
        assert_eq!(is_projectable(id).unwrap(), id != 6);
    }
}

#[test]
fn omega0_vanishes_in_the_ambient_calculus() {
    for id in calculi::ALL {
        let cal = Calculus::<R>::new(id).unwrap();
        if id == 6 {
            assert!(omega0(&cal).is_err());
            continue;
        }
        let w = omega0(&cal).unwrap();
        assert!(w.iter().all(|x| x.is_zero()), "calc {id}");
    }
}

#[test]
fn differentials_of_sphere_functions_are_horizontal() {
    for id in calculi::ALL.into_iter().filter(|&id| id != 6) {
        let cal = Calculus::<R>::new(id).unwrap();
        for (_, f) in monomials::<R>(2) {
            let df = cal.d(&f);
            let SphereForm::One(xm, xp) = decompose_one(&df).unwrap() else { panic!() };
            assert!(xm.is_degree(-2) && xp.is_degree(2), "calc {id}");
        }
    }
}

#[test]
fn decomposition_rejects_bad_input() {
    let mut wz: OneForm<R> = Default::default();
    wz[Z] = E::one();
    assert!(decompose_one(&wz).is_err());
    let mut wrong: OneForm<R> = Default::default();
    wrong[MINUS] = E::one();
    assert!(decompose_one(&wrong).is_err());
    assert!(decompose_zero(&E::a()).is_err());
    let [_, _, b0] = generators::<R>();
    assert_eq!(decompose_zero(&b0).unwrap(), SphereForm::Zero(b0.clone()));
    assert_eq!(decompose_two(&[b0.clone(), E::zero(), E::zero()]).unwrap(), SphereForm::Two(b0.clone()));
    assert!(decompose_two(&[b0, E::one(), E::zero()]).is_err());
    let mut odd: OneForm<R> = Default::default();
    odd[PLUS] = E::a();
    assert!(decompose_one(&odd).is_err());
}

fn sphere_hodge(id: u8, sign: i8) -> SphereHodge<R> {
    SphereHodge::new(id, sign, gs_branch::<R>(id, sign).unwrap().parametrize(1).unwrap()).unwrap()
}

#[test]
fn first_calculus_sphere_hodge() {
    let sh = sphere_hodge(1, 1);
    let reference = Exterior::<R>::new(1, 1).unwrap();
    let m = MPoly::var(M);
    let a = MPoly::var(ALPHA);
    let i = R::i();
    assert_eq!(realify(&sh.on_unit(&reference).unwrap()), m.scale(&i));
    let [fm, fp] = sh.one_form_factors().unwrap();
    let plus = m.mul(&a).scale(&i.mul_ref(&R::q_pow(2)));
    assert_eq!(realify(&fp), plus);
    assert_eq!(realify(&fm), plus.neg());
    let x = rf("2*q^4").div_ref(&lambda::<R>(-1, 2)).unwrap();
    assert_eq!(realify(&sh.square_unit()), m.mul(&m).mul(&a).mul(&a).scale(&x));
}

#[test]
fn fourth_calculus_sphere_hodge() {
    let sh = sphere_hodge(4, 1);
    let [fm, fp] = sh.one_form_factors().unwrap();
    let plus = MPoly::var(M).mul(&MPoly::var(ALPHA)).scale(&R::i());
    assert_eq!(realify(&fp), plus);
    assert_eq!(realify(&fm), plus.neg());
}

#[test]
fn probe_selects_four_calculi() {
    for id in calculi::ALL {
        for sign in [1, -1] {
            if id == 6 {
                assert!(probe::<R>(id, sign).is_err());
            } else {
                assert_eq!(probe::<R>(id, sign).unwrap(), matches!(id, 1 | 2 | 4 | 5), "calc {id} sign {sign}");
            }
        }
    }
}

/// □ with α = 1 and m² fixed by the normalization Š²(1) = 1.
fn normalized_laplacian(id: u8, sign: i8) -> (SphereLaplacian<R>, [R; 2]) {
    let sh = sphere_hodge(id, sign);
    let x = realify(&sh.square_unit()).terms().next().map(|(_, c)| c.clone()).unwrap();
    let lap = SphereLaplacian::new(id, sign, gs_branch::<R>(id, sign).unwrap().parametrize(1).unwrap()).unwrap();
    let w = lap.weights.clone().map(|p| realify(&p).single_term().map(|(_, c)| c.div_ref(&x).unwrap()).unwrap());
    (lap, w)
}

fn apply(lap: &SphereLaplacian<R>, w: &[R; 2], f: &E) -> E {
    let [pm, pp] = lap.parts(f).unwrap();
    pm.scale(&w[0]).add(&pp.scale(&w[1]))
}

#[test]
fn laplacian_annihilates_constants() {
    for id in [1, 2, 4, 5] {
        let (lap, w) = normalized_laplacian(id, 1);
        assert!(apply(&lap, &w, &E::one()).is_zero());
    }
}

#[test]
fn laplacian_matches_casimir_at_unit_alpha() {
    let (lap, w) = normalized_laplacian(1, 1);
    let act = &lap.complex.cal.action;
    for (_, f) in monomials::<R>(4) {
        assert_eq!(apply(&lap, &w, &f), casimir_action(act, &f), "on {}", f.render());
    }
}

#[test]
fn laplacian_is_calculus_independent() {
    let (l1, w1) = normalized_laplacian(1, 1);
    let (l4, w4) = normalized_laplacian(4, 1);
    for (_, f) in monomials::<R>(4) {
        assert_eq!(apply(&l1, &w1, &f), apply(&l4, &w4, &f));
    }
}

#[test]
fn sigma_minus_laplacian_is_rescaled() {
    for id in [1, 2, 4, 5] {
        let (lp, wp) = normalized_laplacian(id, 1);
        let (lm, wm) = normalized_laplacian(id, -1);
        for (_, f) in monomials::<R>(3) {
            assert_eq!(apply(&lm, &wm, &f), apply(&lp, &wp, &f).scale(&R::q_pow(-2)), "calc {id}");
        }
    }
}

fn sphere_elem() -> impl Strategy<Value = E> {
    prop::collection::vec(((0u32..=2, 0u32..=2, 0u32..=2), -3i64..=3), 1..4).prop_map(|terms| {
        let [bm, bp, b0] = generators::<R>();
        terms.into_iter().fold(E::zero(), |acc, ((i, j, k), c)| {
            acc.add(&bm.pow(i).mul(&bp.pow(j)).mul(&b0.pow(k)).scale(&R::from_i64(c)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sphere_is_a_star_subalgebra(x in sphere_elem(), y in sphere_elem()) {
        prop_assert!(x.mul(&y).is_degree(0));
        prop_assert!(x.star().is_degree(0));
    }

    #[test]
    fn differential_stays_horizontal(id in prop::sample::select(vec![1u8, 2, 3, 4, 5, 7]), x in sphere_elem()) {
        let cal = Calculus::<R>::new(id).unwrap();
        prop_assert!(decompose_one(&cal.d(&x)).is_ok());
    }
}
