use proptest::prelude::*;
use qhodge_core::algebra::*;
use qhodge_core::calculi::{self, pair_index, MINUS as M, PLUS as P, Z};
use qhodge_core::exterior::*;
use qhodge_core::fodc::Calculus;
use qhodge_core::linalg::{same_span, Matrix};
use qhodge_core::scalars::*;

type R = RatFunc;

fn rf(s: &str) -> R {
    parse_ratfunc(s).unwrap()
}

fn ext(id: u8, sign: i8) -> Exterior<R> {
    Exterior::new(id, sign).unwrap()
}

fn tensor(k: usize, terms: &[(&str, &[usize])]) -> Vec<R> {
    let mut v = vec![R::zero(); pow3(k)];
    for (c, w) in terms {
        v[word_index(w)] += &rf(c);
    }
    v
}

fn scale(v: &[R], k: &R) -> Vec<R> {
    v.iter().map(|x| x.mul_ref(k)).collect()
}

fn add(x: &[R], y: &[R]) -> Vec<R> {
    x.iter().zip(y).map(|(a, b)| a.add_ref(b)).collect()
}

#[test]
fn printed_braiding_entries() {
    let s7 = calculi::braiding_symbolic(7).unwrap();
    assert_eq!(*s7.get(pair_index(M, P), pair_index(P, M)), rf("q^4"));
    let s6 = calculi::braiding_symbolic(6).unwrap();
    assert_eq!(*s6.get(pair_index(M, P), pair_index(P, M)), rf("q^6"));
    assert_eq!(*s6.get(pair_index(Z, Z), pair_index(P, M)), rf("-q^6*(q^2-1)"));
    let s1 = calculi::braiding_symbolic(1).unwrap();
    let s2 = calculi::braiding_symbolic(2).unwrap();
    for r in 0..9 {
        for c in 0..9 {
            assert_eq!(*s2.get(r, c), s1.get(r, c).negate_q());
        }
    }
}

#[test]
fn braid_and_spectral_identities() {
    for id in calculi::ALL {
        let s = calculi::braiding::<R>(id).unwrap();
        let si = s.inverse().unwrap();
        assert!(braid_defect(&s).is_zero(), "calc {id}");
        assert!(braid_defect(&si).is_zero(), "calc {id} inverse");
        let id9 = Matrix::identity(9);
        assert!(id9.sub(&s).mul(&id9.scale(&R::q_pow(2)).add(&s)).is_zero());
        assert!(id9.sub(&si).mul(&id9.scale(&R::q_pow(-2)).add(&si)).is_zero());
        assert_eq!(9 - id9.sub(&s).rank(), 6, "calc {id}");
        assert_eq!(9 - id9.scale(&R::q_pow(2)).add(&s).rank(), 3, "calc {id}");
        assert_eq!(9 - id9.sub(&si).rank(), 6);
        assert_eq!(9 - id9.scale(&R::q_pow(-2)).add(&si).rank(), 3);
    }
}

#[test]
fn antisymmetrizer_eigenvalues_and_ranks() {
    assert_eq!(lambda::<R>(1, 2), rf("1+q^2"));
    assert_eq!(lambda::<R>(1, 3), rf("(1+q^2)*(1+q^2+q^4)"));
    assert_eq!(lambda::<R>(-1, 3), rf("(1+q^-2)*(1+q^-2+q^-4)"));
    for id in calculi::ALL {
        for sign in [1i8, -1] {
            let e = ext(id, sign);
            assert_eq!(e.a2.mul(&e.a2), e.a2.scale(&e.lambda(2)), "calc {id} {sign}");
            assert_eq!(e.a3.mul(&e.a3), e.a3.scale(&e.lambda(3)), "calc {id} {sign}");
            assert_eq!(e.a2.rank(), 3);
            assert_eq!(e.a3.rank(), 1);
            // A⁽³⁾ factors through A⁽²⁾ on either side
            let l = e.lambda(2);
            assert_eq!(e.a3.mul(&e.a2.kron(&Matrix::identity(3))), e.a3.scale(&l));
            assert_eq!(e.a3.mul(&Matrix::identity(3).kron(&e.a2)), e.a3.scale(&l));
        }
    }
}

#[test]
fn fourth_antisymmetrizer_vanishes() {
    for id in calculi::ALL {
        let s = calculi::braiding::<R>(id).unwrap();
        assert!(antisym4(&s).is_zero(), "calc {id}");
        assert!(antisym4(&s.inverse().unwrap()).is_zero(), "calc {id} inverse");
    }
}

#[test]
fn volume_forms() {
    let e7 = ext(7, 1);
    let want7 = tensor(
        3,
        &[
            ("q^4", &[M, P, Z]),
            ("-q^10", &[M, Z, P]),
            ("q^-6", &[P, Z, M]),
            ("-1", &[P, M, Z]),
            ("q^4", &[Z, M, P]),
            ("-1", &[Z, P, M]),
        ],
    );
    assert_eq!(e7.volume(), want7);
    let e1 = ext(1, 1);
    let want1 = tensor(
        3,
        &[("q^4", &[M, P, Z]), ("-q^4", &[M, Z, P]), ("q^4", &[P, Z, M]), ("-q^4", &[P, M, Z]), ("q^4", &[Z, M, P]), ("-q^4", &[Z, P, M])],
    );
    assert_eq!(e1.volume(), want1);
    let e3 = ext(3, 1);
    let want3 = tensor(
        3,
        &[("q^4", &[M, P, Z]), ("-q^2", &[M, Z, P]), ("-q^8", &[P, M, Z]), ("q^10", &[P, Z, M]), ("q^4", &[Z, M, P]), ("-q^8", &[Z, P, M])],
    );
    assert_eq!(e3.volume(), want3);
    for id in calculi::ALL {
        let (p, m) = (ext(id, 1), ext(id, -1));
        assert_eq!(m.volume(), scale(&p.volume(), &R::q_pow(-6)), "calc {id}");
        let lp = p.lambda(3).inv().unwrap();
        let lm = m.lambda(3).inv().unwrap();
        assert_eq!(scale(&m.volume(), &lm), scale(&p.volume(), &lp));
    }
}

#[test]
fn two_form_relations() {
    let e7 = ext(7, 1);
    assert_eq!(e7.wedge_word(&[P, M]), scale(&e7.wedge_word(&[M, P]), &rf("-q^2")));
    assert_eq!(e7.wedge_word(&[Z, M]), scale(&e7.wedge_word(&[M, Z]), &rf("-q^4")));
    assert_eq!(e7.wedge_word(&[Z, P]), scale(&e7.wedge_word(&[P, Z]), &rf("-q^-4")));
    let e3 = ext(3, 1);
    assert_eq!(e3.wedge_word(&[M, P]), scale(&e3.wedge_word(&[P, M]), &rf("-q^6")));
    let e1 = ext(1, 1);
    assert_eq!(e1.wedge_word(&[Z, Z]), scale(&e1.wedge_word(&[M, P]), &rf("(1-q)/(1+q)")));
    for id in calculi::ALL {
        for sign in [1i8, -1] {
            let e = ext(id, sign);
            for a in [M, P] {
                assert!(e.wedge_word(&[a, a]).iter().all(|x| x.is_zero()), "calc {id}");
            }
            // ω_z ∧ ω_z vanishes only where σ fixes ω_z ⊗ ω_z; otherwise it
            // is a nonzero multiple of ω₋ ∧ ω₊
            let zz = e.coords(2, &e.wedge_word(&[Z, Z])).unwrap();
            assert!(zz[1].is_zero() && zz[2].is_zero());
            assert_eq!(zz[0].is_zero(), id >= 6, "calc {id}");
        }
        let (p, m) = (ext(id, 1), ext(id, -1));
        for a in 0..3 {
            for b in 0..3 {
                if a != b {
                    assert_eq!(p.wedge_word(&[a, b]), scale(&m.wedge_word(&[a, b]), &R::q_pow(2)));
                }
            }
        }
    }
}

#[test]
fn printed_hermitian_structure() {
    // calc 1: (ω₋∧ω₊)* = -ω₋∧ω₊, (ω₋∧ω_z)* = -ω_z∧ω₊ = q²ω₊∧ω_z, (ω₊∧ω_z)* = q⁻²ω₋∧ω_z
    let cases: [(u8, &str, &str, &str); 2] = [(1, "q^2", "q^2", "q^-2"), (3, "q^6", "q^4", "q^-4")];
    for (id, kpm, kmz, kpz) in cases {
        let e = ext(id, 1);
        let w = |x: &[usize]| e.wedge_word(x);
        let mp = w(&[M, P]);
        assert_eq!(e.star_tensor(2, &mp).unwrap(), scale(&mp, &rf("-1")));
        assert_eq!(scale(&mp, &rf("-1")), scale(&w(&[P, M]), &rf(kpm)));
        assert_eq!(e.star_tensor(2, &w(&[M, Z])).unwrap(), scale(&w(&[Z, P]), &rf("-1")));
        assert_eq!(scale(&w(&[Z, P]), &rf("-1")), scale(&w(&[P, Z]), &rf(kmz)));
        assert_eq!(e.star_tensor(2, &w(&[P, Z])).unwrap(), scale(&w(&[Z, M]), &rf("-1")));
        assert_eq!(scale(&w(&[Z, M]), &rf("-1")), scale(&w(&[M, Z]), &rf(kpz)));
    }
}

#[test]
fn ideal_symbols_span_kernel() {
    for id in calculi::ALL {
        let cal = Calculus::<R>::new(id).unwrap();
        let span = sq_ideal_span(&cal);
        assert_eq!(span.cols(), 6, "calc {id}");
        let s = calculi::braiding::<R>(id).unwrap();
        let a2 = antisym2(&s);
        assert!(a2.mul(&span).is_zero(), "calc {id}");
        let ker = Matrix::from_cols(&a2.nullspace(), 9);
        assert!(same_span(&span, &ker), "calc {id}");
    }
    let cal = Calculus::<R>::new(7).unwrap();
    let sym = cal.quadratic_symbol(&Elem::c().pow(2));
    let a2 = antisym2(&calculi::braiding::<R>(7).unwrap());
    assert!(a2.mul_vec(&sym).iter().all(|x| x.is_zero()));
}

#[test]
fn braiding_is_bimodule_map() {
    for id in calculi::ALL {
        let cal = Calculus::<R>::new(id).unwrap();
        let s = calculi::braiding::<R>(id).unwrap();
        for col in 0..9 {
            let t: Vec<Elem<R>> = (0..9).map(|r| if r == col { Elem::one() } else { Elem::zero() }).collect();
            for h in Elem::generators() {
                let lhs = apply_left_linear(&s, &tensor2_right_mul(&cal, &t, &h));
                let rhs = tensor2_right_mul(&cal, &apply_left_linear(&s, &t), &h);
                assert_eq!(lhs, rhs, "calc {id} column {col} generator {}", h.render());
            }
        }
    }
}

#[test]
fn wedge_is_associative_and_graded() {
    for id in calculi::ALL {
        for sign in [1i8, -1] {
            let e = ext(id, sign);
            for a in 0..3 {
                for b in 0..3 {
                    for c in 0..3 {
                        let ua = unit::<R>(1, &[a]);
                        let ub = unit::<R>(1, &[b]);
                        let uc = unit::<R>(1, &[c]);
                        let ab = e.wedge_tensor(1, &ua, 1, &ub).unwrap();
                        let bc = e.wedge_tensor(1, &ub, 1, &uc).unwrap();
                        let left = e.wedge_tensor(2, &ab, 1, &uc).unwrap();
                        let right = e.wedge_tensor(1, &ua, 2, &bc).unwrap();
                        assert_eq!(left, right, "calc {id}");
                        assert_eq!(left, e.wedge_word(&[a, b, c]));
                    }
                }
            }
            assert!(e.wedge(2, &[R::one(), R::zero(), R::zero()], 2, &[R::one(), R::zero(), R::zero()]).unwrap().is_empty());
        }
    }
}

fn coeffs(n: usize) -> impl Strategy<Value = Vec<R>> {
    prop::collection::vec((-3i64..=3, -2i64..=2), n).prop_map(|v| {
        v.into_iter().map(|(re, im)| R::from_gauss(&GaussRat::from_i64(re) + &(&GaussRat::from_i64(im) * &GaussRat::i()))).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn star_is_graded_antihomomorphism(id in 1u8..=7, sign in prop::sample::select(vec![1i8, -1]), x in coeffs(3), y in coeffs(3)) {
        // (x ∧ y)* = (-1)^{kl} y* ∧ x* for one-forms k = l = 1
        let e = ext(id, sign);
        let tx = e.to_tensor(1, &x);
        let ty = e.to_tensor(1, &y);
        let lhs = e.star_tensor(2, &e.wedge_tensor(1, &tx, 1, &ty).unwrap()).unwrap();
        let sx = e.star_tensor(1, &tx).unwrap();
        let sy = e.star_tensor(1, &ty).unwrap();
        let rhs = scale(&e.wedge_tensor(1, &sy, 1, &sx).unwrap(), &rf("-1"));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_is_involutive_on_two_forms(id in 1u8..=7, sign in prop::sample::select(vec![1i8, -1]), x in coeffs(3)) {
        let e = ext(id, sign);
        let t = e.to_tensor(2, &x);
        prop_assert_eq!(e.star_tensor(2, &e.star_tensor(2, &t).unwrap()).unwrap(), t);
    }

    #[test]
    fn wedge_is_bilinear(id in 1u8..=7, x in coeffs(3), y in coeffs(3), z in coeffs(3)) {
        let e = ext(id, 1);
        let yz = add(&y, &z);
        let lhs = e.wedge(1, &x, 1, &yz).unwrap();
        let rhs = add(&e.wedge(1, &x, 1, &y).unwrap(), &e.wedge(1, &x, 1, &z).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
