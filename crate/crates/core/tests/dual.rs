use proptest::prelude::*;
use qhodge_core::algebra::*;
use qhodge_core::dual::*;
use qhodge_core::linalg::Matrix;
use qhodge_core::scalars::*;

type R = RatFunc;
type E = Elem<R>;
type Fun = Functional<R>;

fn m2(rows: [[i32; 2]; 2], scale: [[R; 2]; 2]) -> Matrix<R> {
    Matrix::from_fn(2, 2, |i, j| scale[i][j].mul_ref(&R::from_i64(rows[i][j] as i64)))
}

fn rho(g: DGen) -> Matrix<R> {
    let z = R::zero;
    let o = R::one;
    match g {
        DGen::K => m2([[1, 0], [0, 1]], [[R::s_pow(-1), z()], [z(), R::s_pow(1)]]),
        DGen::KInv => m2([[1, 0], [0, 1]], [[R::s_pow(1), z()], [z(), R::s_pow(-1)]]),
        DGen::E => m2([[0, 0], [1, 0]], [[o(), o()], [o(), o()]]),
        DGen::F => m2([[0, 1], [0, 0]], [[o(), o()], [o(), o()]]),
        DGen::Eps => m2([[-1, 0], [0, -1]], [[o(), o()], [o(), o()]]),
    }
}

fn kron_all(ms: &[Matrix<R>]) -> Matrix<R> {
    ms.iter().skip(1).fold(ms[0].clone(), |acc, m| acc.kron(m))
}

/// Image of a generator under the n-fold coproduct in the n-fold tensor
/// power of the fundamental representation.
fn rho_n(g: DGen, n: usize) -> Matrix<R> {
    match g {
        DGen::E | DGen::F => {
            let mut out = Matrix::zeros(1 << n, 1 << n);
            for k in 0..n {
                let slots: Vec<Matrix<R>> = (0..n)
                    .map(|t| if t < k { rho(DGen::KInv) } else if t == k { rho(g) } else { rho(DGen::K) })
                    .collect();
                out = out.add(&kron_all(&slots));
            }
            out
        }
        _ => kron_all(&vec![rho(g); n]),
    }
}

fn oracle(w: &Word, m: &Mono) -> R {
    let gens = E::mono_factors(m);
    let n = gens.len();
    if n == 0 {
        return if w.i == 0 && w.j == 0 { R::one() } else { R::zero() };
    }
    let mut acc = Matrix::identity(1 << n);
    for g in Fun::word_gens(w) {
        acc = acc.mul(&rho_n(g, n));
    }
    let (mut row, mut col) = (0, 0);
    let mut factor = R::one();
    for g in gens {
        let (i, j) = match g {
            Gen::A => (0, 0),
            Gen::CStar => {
                factor = factor.mul_ref(&R::q_pow(-1).neg_ref());
                (0, 1)
            }
            Gen::C => (1, 0),
            Gen::AStar => (1, 1),
        };
        row = 2 * row + i;
        col = 2 * col + j;
    }
    acc.get(row, col).mul_ref(&factor)
}

#[test]
fn generator_values() {
    let act = Action::<R>::new();
    assert_eq!(act.eval(&Fun::e(), &E::c()), R::one());
    assert!(act.eval(&Fun::e(), &E::c_star()).is_zero());
    assert_eq!(act.eval(&Fun::f(), &E::c_star()), R::q_pow(-1).neg_ref());
    assert_eq!(act.eval(&Fun::k_pow(1), &E::a()), R::s_pow(-1));
    assert_eq!(act.eval(&Fun::k_pow(1), &E::a_star()), R::s_pow(1));
    assert_eq!(act.act(&Fun::k_pow(1), &E::a()), E::a().scale(&R::s_pow(-1)));
    assert_eq!(act.act(&Fun::e(), &E::a()), E::c_star().scale(&R::q()).neg());
    assert_eq!(act.act(&Fun::e(), &E::c()), E::a_star());
    assert_eq!(act.act(&Fun::f(), &E::a_star()), E::c());
    assert_eq!(act.act(&Fun::eps_minus(), &E::c()), E::c().neg());
}

#[test]
fn defining_relations() {
    let k = Fun::k_pow(1);
    let ki = Fun::k_pow(-1);
    let (e, f) = (Fun::e(), Fun::f());
    assert_eq!(k.mul(&ki), Fun::one());
    assert_eq!(k.mul(&e), e.mul(&k).scale(&R::q()));
    assert_eq!(k.mul(&f), f.mul(&k).scale(&R::q_pow(-1)));
    let comm = e.mul(&f).sub(&f.mul(&e));
    let rhs = Fun::k_pow(2).sub(&Fun::k_pow(-2)).scale(&(R::q() - R::q_pow(-1)).inv().unwrap());
    assert_eq!(comm, rhs);
    let eps = Fun::eps_minus();
    assert_eq!(eps.mul(&eps), Fun::one());
    assert_eq!(eps.mul(&e), e.mul(&eps));
    assert_eq!(eps.mul(&f), f.mul(&eps));
}

#[test]
fn evaluation_matches_representation_oracle() {
    let act = Action::<R>::new();
    let words = [
        Word::new(0, 0, 1, 0),
        Word::new(0, 1, 0, 1),
        Word::new(0, 1, 1, -1),
        Word::new(1, 1, 1, 2),
        Word::new(0, 2, 1, 0),
        Word::new(0, 0, 2, 3),
        Word::new(1, 2, 2, -2),
    ];
    for w in words {
        for m in monomials_up_to(3) {
            let got = act.eval(&Fun::word(w, R::one()), &E::mono(m, R::one()));
            assert_eq!(got, oracle(&w, &m), "{} on {}", w.render(), m.render());
        }
    }
}

fn word_strategy() -> impl Strategy<Value = Word> {
    (0u8..2, 0u32..3, 0u32..3, -2i32..3).prop_map(|(s, i, j, l)| Word::new(s, i, j, l))
}

fn mono_strategy() -> impl Strategy<Value = Mono> {
    (-2i32..=2, 0u32..=2, 0u32..=1).prop_map(|(k, m, n)| Mono::new(k, m, n))
}

fn small_fun() -> impl Strategy<Value = Fun> {
    prop::collection::vec((word_strategy(), -2i64..=2), 1..3).prop_map(|ts| {
        let mut f = Fun::zero();
        for (w, c) in ts {
            f.add_term(w, R::from_i64(c));
        }
        f
    })
}

fn eval_tensor(act: &Action<R>, t: &FTensor<R>, x: &Mono, y: &Mono) -> R {
    let mut acc = R::zero();
    for ((w1, w2), c) in t.terms() {
        let a = act.eval(&Fun::word(*w1, R::one()), &E::mono(*x, R::one()));
        let b = act.eval(&Fun::word(*w2, R::one()), &E::mono(*y, R::one()));
        acc += &c.mul_ref(&a.mul_ref(&b));
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn pairing_is_multiplicative(f in small_fun(), x in mono_strategy(), y in mono_strategy()) {
        let act = Action::<R>::new();
        let lhs = act.eval(&f, &E::mono_mul(&x, &y));
        prop_assert_eq!(lhs, eval_tensor(&act, &f.coproduct(), &x, &y));
    }

    #[test]
    fn product_pairs_with_coproduct(f in small_fun(), g in small_fun(), x in mono_strategy()) {
        let act = Action::<R>::new();
        let h = E::mono(x, R::one());
        let lhs = act.eval(&f.mul(&g), &h);
        let mut rhs = R::zero();
        for ((u, v), c) in coproduct(&h).terms() {
            rhs += &c.mul_ref(&act.eval(&f, &E::mono(*u, R::one())).mul_ref(&act.eval(&g, &E::mono(*v, R::one()))));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn module_algebra_law(f in small_fun(), x in mono_strategy(), y in mono_strategy()) {
        let act = Action::<R>::new();
        let lhs = act.act(&f, &E::mono_mul(&x, &y));
        let mut rhs = E::zero();
        for ((w1, w2), c) in f.coproduct().terms() {
            let a = act.act(&Fun::word(*w1, R::one()), &E::mono(x, R::one()));
            let b = act.act(&Fun::word(*w2, R::one()), &E::mono(y, R::one()));
            rhs.add_scaled(&a.mul(&b), c);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_h1_times_pairing(f in small_fun(), x in mono_strategy()) {
        let act = Action::<R>::new();
        let h = E::mono(x, R::one());
        let rhs = coproduct(&h).contract(|u| E::mono(*u, R::one()), |v| E::scalar(act.eval(&f, &E::mono(*v, R::one()))));
        prop_assert_eq!(act.act(&f, &h), rhs);
    }

    #[test]
    fn star_compatibility(f in small_fun(), x in mono_strategy()) {
        // f*(h) = conj(f(S(h)*))
        let act = Action::<R>::new();
        let h = E::mono(x, R::one());
        let lhs = act.eval(&f.star(), &h);
        let rhs = act.eval(&f, &h.antipode().star()).conj();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_compatibility(f in small_fun(), x in mono_strategy()) {
        let act = Action::<R>::new();
        let h = E::mono(x, R::one());
        prop_assert_eq!(act.eval(&f.antipode(), &h), act.eval(&f, &h.antipode()));
    }

    #[test]
    fn dual_product_associative(f in small_fun(), g in small_fun(), h in small_fun()) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }
}
