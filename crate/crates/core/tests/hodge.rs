use proptest::prelude::*;
use qhodge_core::algebra::{monomials_up_to, Elem};
use qhodge_core::calculi::{self, MINUS as M, PLUS as P, Z};
use qhodge_core::dual::Action;
use qhodge_core::exterior::lambda;
use qhodge_core::hodge::*;
use qhodge_core::mpoly::{MPoly, ALPHA, BETA, GAMMA};
use qhodge_core::scalars::*;
use qhodge_core::upoly::has_nonreal_root;

type R = RatFunc;
type Poly = MPoly<R>;

fn rf(s: &str) -> R {
    parse_ratfunc(s).unwrap()
}

fn hodge(id: u8, sign: i8) -> Hodge<R> {
    Hodge::new(id, sign, Contraction::symbolic()).unwrap()
}

fn var(v: usize) -> Poly {
    MPoly::var(v)
}

fn c(s: &str) -> Poly {
    MPoly::constant(rf(s))
}

fn self_t(h: &Hodge<R>, w: &[usize]) -> Poly {
    let x = h.word(w);
    h.scal_t(w.len(), &x, &x).unwrap()
}

fn self_s(h: &Hodge<R>, w: &[usize]) -> Poly {
    let x = h.word(w);
    h.scal_s(w.len(), &x, &x).unwrap()
}

#[test]
fn contraction_pattern() {
    let g = Contraction::<R>::symbolic();
    assert_eq!(g.pair(M, P), var(ALPHA));
    assert_eq!(g.pair(P, M), var(BETA));
    assert_eq!(g.pair(Z, Z), var(GAMMA));
    assert!(g.pair(M, M).is_zero());
    assert!(g.pair(M, Z).is_zero());
    assert!(g.pair(P, Z).is_zero());
}

#[test]
fn volume_contractions() {
    let abg = var(ALPHA).mul(&var(BETA)).mul(&var(GAMMA));
    assert_eq!(hodge(7, 1).g_theta_theta(), abg.scale(&rf("-6*q^4")));
    assert_eq!(hodge(1, 1).g_theta_theta(), abg.scale(&rf("-6*q^8")));
    assert_eq!(hodge(3, 1).g_theta_theta(), abg.scale(&rf("-6*q^12")));
    assert_eq!(hodge(4, 1).g_theta_theta(), abg.scale(&rf("-6*q^4")));
}

#[test]
fn determinant_ratio_between_signs() {
    for id in calculi::ALL {
        let (p, m) = (hodge(id, 1), hodge(id, -1));
        assert_eq!(p.det(), m.det().scale(&R::q_pow(6)), "calc {id}");
    }
}

#[test]
fn one_form_products() {
    for id in calculi::ALL {
        for sign in [1, -1] {
            let h = hodge(id, sign);
            assert_eq!(self_t(&h, &[M]), var(BETA).neg(), "calc {id}");
            assert_eq!(self_t(&h, &[P]), var(ALPHA).neg());
            assert_eq!(self_t(&h, &[Z]), var(GAMMA).neg());
        }
    }
    let (p, m) = (hodge(7, 1), hodge(7, -1));
    assert_eq!(self_s(&p, &[M]), var(ALPHA).neg());
    assert_eq!(self_s(&p, &[P]), var(BETA).scale(&rf("-q^4")));
    assert_eq!(self_s(&p, &[Z]), var(GAMMA).scale(&rf("-q^2")));
    assert_eq!(self_s(&m, &[M]), var(ALPHA).scale(&rf("-q^-4")));
    assert_eq!(self_s(&m, &[P]), var(BETA).neg());
    assert_eq!(self_s(&m, &[Z]), var(GAMMA).scale(&rf("-q^-2")));
}

#[test]
fn woronowicz_higher_products() {
    let h = hodge(7, 1);
    let l2 = lambda::<R>(1, 2);
    let cases: [(&[usize], &[usize], &[usize], &str); 3] = [
        (&[M, P], &[M], &[P], "2"),
        (&[M, Z], &[M], &[Z], "2*q^-2"),
        (&[P, Z], &[P], &[Z], "2*q^6"),
    ];
    for (w, a, b, k) in cases {
        let k = rf(k).div_ref(&l2).unwrap();
        assert_eq!(self_t(&h, w), self_t(&h, a).mul(&self_t(&h, b)).scale(&k), "{w:?}");
        assert_eq!(self_s(&h, w), self_s(&h, a).mul(&self_s(&h, b)).scale(&k), "{w:?}");
    }
    let k3 = rf("6*q^4").div_ref(&lambda::<R>(1, 3)).unwrap();
    let prod = |f: &dyn Fn(&[usize]) -> Poly| f(&[M]).mul(&f(&[P])).mul(&f(&[Z]));
    let th = h.theta();
    assert_eq!(h.scal_t(3, &th, &th).unwrap(), prod(&|w| self_t(&h, w)).scale(&k3));
    assert_eq!(h.scal_s(3, &th, &th).unwrap(), prod(&|w| self_s(&h, w)).scale(&k3));
}

#[test]
fn unit_and_volume_images() {
    for id in calculi::ALL {
        for sign in [1, -1] {
            let h = hodge(id, sign);
            let one = vec![Poly::one()];
            assert_eq!(h.apply_op(Family::T, 0, &one).unwrap(), h.mu());
            assert_eq!(h.apply_op(Family::S, 0, &one).unwrap(), h.mu());
            let m2 = h.scale().mul(&h.scale());
            let t_mu = h.apply_op(Family::T, 3, &h.mu()).unwrap();
            assert_eq!(t_mu, vec![m2.mul(&h.det())], "calc {id} sign {sign}");
        }
    }
}

/// Expresses op(x) as m·k·p(x,x)·y for a basis form x and reads off k.
fn table_coefficient(h: &Hodge<R>, fam: Family, k: usize, i: usize) -> Option<(usize, R)> {
    let x = h.basis(k, i);
    let img = h.coords(3 - k, &h.apply_op(fam, k, &x).unwrap()).unwrap();
    let norm = h.scal(fam, k, &x, &x).unwrap().mul(&h.scale());
    let mut hits = img.iter().enumerate().filter(|(_, c)| !c.is_zero());
    let (j, v) = hits.next()?;
    if hits.next().is_some() {
        return None;
    }
    Some((j, v.ratio_to(&norm)?))
}

#[test]
fn t_tables_map_to_s_tables() {
    for id in calculi::ALL {
        for sign in [1, -1] {
            let h = hodge(id, sign);
            for k in 1..=2 {
                for i in 0..3 {
                    let t = table_coefficient(&h, Family::T, k, i);
                    let s = table_coefficient(&h, Family::S, k, i);
                    assert!(t.is_some(), "calc {id} sign {sign} degree {k} basis {i}");
                    assert_eq!(t, s, "calc {id} sign {sign} degree {k} basis {i}");
                }
            }
        }
    }
}

#[test]
fn woronowicz_t_table() {
    let h = hodge(7, 1);
    let expect: [(&[usize], &[usize], &str); 6] = [
        (&[M], &[M, Z], "q^-2"),
        (&[P], &[P, Z], "-1"),
        (&[Z], &[M, P], "-1"),
        (&[M, Z], &[M], "q^-2"),
        (&[P, Z], &[P], "-1"),
        (&[M, P], &[Z], "-1"),
    ];
    for (x, y, k) in expect {
        let got = h.apply_op(Family::T, x.len(), &h.word(x)).unwrap();
        let want = tensor_scale(&h.word(y), &self_t(&h, x).mul(&h.scale()).mul(&c(k)));
        assert_eq!(got, want, "{x:?}");
    }
}

#[test]
fn first_calculus_s_table() {
    let h = hodge(1, 1);
    let m = h.scale();
    let one = |a| self_s(&h, &[a]);
    let expect: [(&[usize], &[usize], Poly); 6] = [
        (&[M], &[M, Z], one(M).mul(&c("q^2"))),
        (&[P], &[P, Z], one(P).neg()),
        (&[Z], &[M, P], one(Z).neg()),
        (&[M, Z], &[M], one(M).mul(&one(Z)).mul(&c("2*q^6/(1+q^2)"))),
        (&[P, Z], &[P], one(P).mul(&one(Z)).mul(&c("-2/(1+q^2)"))),
        (&[M, P], &[Z], one(M).mul(&one(P)).mul(&c("-2*q^4/(1+q^2)"))),
    ];
    for (x, y, k) in expect {
        let got = h.apply_op(Family::S, x.len(), &h.word(x)).unwrap();
        assert_eq!(got, tensor_scale(&h.word(y), &k.mul(&m)), "{x:?}");
    }
}

#[test]
fn sign_flip_between_paired_calculi() {
    for (a, b) in [(1u8, 2u8), (4, 5)] {
        for sign in [1, -1] {
            let (ha, hb) = (hodge(a, sign), hodge(b, sign));
            for k in 0..=3 {
                for i in 0..ha.ext.dim(k) {
                    let x = ha.basis(k, i);
                    let sa = ha.coords(3 - k, &ha.apply_op(Family::S, k, &x).unwrap()).unwrap();
                    let sb = hb.coords(3 - k, &hb.apply_op(Family::S, k, &hb.basis(k, i)).unwrap()).unwrap();
                    let flipped: Vec<Poly> = sa.iter().map(|p| p.map_coeffs(|r| r.negate_q())).collect();
                    assert_eq!(flipped, sb, "calc {a}->{b} degree {k} basis {i}");
                }
            }
        }
    }
}

fn only_branch(id: u8, fam: Family) -> Branch<R> {
    let bs = solve_class(&hodge(id, 1), fam).unwrap();
    assert_eq!(bs.len(), 1, "calc {id} {fam:?}");
    bs.into_iter().next().unwrap()
}

#[test]
fn symmetry_classes() {
    assert_eq!(only_branch(1, Family::S), Branch::linear(R::one(), R::one()));
    assert_eq!(only_branch(7, Family::T), Branch::linear(R::one(), rf("q^6")));
    assert_eq!(only_branch(3, Family::S), Branch::linear(R::one(), rf("q^6")));
    assert_eq!(only_branch(4, Family::T), Branch::linear(R::one(), rf("q^4")));
    let b6 = only_branch(6, Family::S);
    assert_eq!(b6.u, rf("-1"));
    assert_eq!(b6.gamma_sq, Some(rf("4*q^-16/(q^2-1)^2")));
    for id in calculi::ALL {
        for sign in [1, -1] {
            let h = hodge(id, sign);
            let gs = solve_class(&h, Family::S).unwrap();
            let gt = solve_class(&h, Family::T).unwrap();
            assert_ne!(gs, gt, "calc {id}");
            let g = gs[0].parametrize(1).unwrap();
            let cls = classify(&h, &g).unwrap();
            assert!(cls.in_gs);
            assert_eq!(cls.in_frak_g, matches!(id, 1 | 2 | 4 | 5), "calc {id}");
            assert!(classify(&h, &gt[0].parametrize(1).unwrap()).unwrap().in_gt);
        }
    }
}

#[test]
fn frak_g_agrees_with_gs_on_four_calculi() {
    for id in calculi::ALL {
        let s = calculi::braiding::<R>(id).unwrap();
        let fg = qhodge_core::linalg::Matrix::from_cols(&frak_g(&s), 3);
        let gs = solve_class(&hodge(id, 1), Family::S).unwrap();
        let same = linear_closure(&gs)
            .map(|span| qhodge_core::linalg::same_span(&qhodge_core::linalg::Matrix::from_cols(&span, 3), &fg))
            .unwrap_or(false);
        assert_eq!(same, matches!(id, 1 | 2 | 4 | 5), "calc {id}");
    }
}

#[test]
fn s_squares_to_scalar_on_gs() {
    for id in calculi::ALL {
        let b = only_branch(id, Family::S);
        let h = Hodge::<R>::new(id, 1, b.parametrize(1).unwrap()).unwrap();
        let sq = |a: usize| {
            let x = one_form::<R>(a);
            let y = h.apply_op(Family::S, 2, &h.apply_op(Family::S, 1, &x).unwrap()).unwrap();
            realify(&y[a])
        };
        let k = sq(M);
        assert!(!k.is_zero());
        assert_eq!(sq(P), k, "calc {id}");
        assert_eq!(sq(Z), k, "calc {id}");
    }
}

fn laplacian_on_gs(id: u8) -> Laplacian<R> {
    let b = only_branch(id, Family::S);
    let h = Hodge::<R>::new(id, 1, b.parametrize(1).unwrap()).unwrap();
    let x = calculi::tangent::<R>(id).unwrap();
    h.laplacian(Family::S, &x).unwrap().subst(&[(ALPHA, Poly::one()), (GAMMA, Poly::one())])
}

#[test]
fn laplacian_kills_unit_and_keeps_degree() {
    let act = Action::<R>::new();
    for id in calculi::ALL {
        let lap = laplacian_on_gs(id);
        assert!(lap.apply(&act, &Elem::one()).unwrap().is_zero(), "calc {id}");
        for m in monomials_up_to(3).into_iter().take(50) {
            let x = Elem::mono(m, R::one());
            let y = lap.apply(&act, &x).unwrap();
            assert!(y.is_zero() || y.degree() == x.degree(), "calc {id} on {}", x.render());
        }
    }
}

#[test]
fn sixth_calculus_laplacian_has_nonreal_spectrum() {
    let act = Action::<R>::new();
    let basis = [Elem::a(), Elem::c(), Elem::a_star(), Elem::c_star()];
    let m = laplacian_on_gs(6).matrix(&act, &basis).unwrap();
    let at = |p: &[R]| p.iter().map(|c| c.specialize_q(&GaussRat::ratio(1, 2)).unwrap()).collect::<Vec<_>>();
    assert!(has_nonreal_root(&at(&m.charpoly())));
    let m1 = laplacian_on_gs(1).matrix(&act, &basis).unwrap();
    assert!(!has_nonreal_root(&at(&m1.charpoly())));
}

fn gauss(n: i64) -> GaussRat {
    GaussRat::from_i64(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn t_is_adjoint_to_the_integral(id in 1u8..=7, sign in prop::sample::select(vec![1i8, -1]), k in 0usize..=3,
                                   xs in prop::collection::vec(-3i64..=3, 3), ys in prop::collection::vec(-3i64..=3, 3)) {
        let h = hodge(id, sign);
        let n = h.ext.dim(k);
        let combo = |cs: &[i64]| (0..n).fold(vec![Poly::zero(); h.basis(k, 0).len()], |acc, i| {
            tensor_add(&acc, &tensor_scale(&h.basis(k, i), &MPoly::constant(R::from_gauss(gauss(cs[i])))))
        });
        let (x, y) = (combo(&xs), combo(&ys));
        let lhs = h.scal_t(k, &x, &y).unwrap();
        let rhs = h.integral_pairing(k, &x, &h.apply_op(Family::T, k, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn s_is_left_linear(id in 1u8..=7, sign in prop::sample::select(vec![1i8, -1]), k in 0usize..=3,
                        a in -4i64..=4, b in -4i64..=4, i in 0usize..3, j in 0usize..3) {
        let h = hodge(id, sign);
        let n = h.ext.dim(k);
        let (x, y) = (h.basis(k, i % n), h.basis(k, j % n));
        let (ka, kb) = (MPoly::constant(R::from_i64(a)), MPoly::constant(R::from_i64(b)));
        let lhs = h.apply_op(Family::S, k, &tensor_add(&tensor_scale(&x, &ka), &tensor_scale(&y, &kb))).unwrap();
        let rhs = tensor_add(
            &tensor_scale(&h.apply_op(Family::S, k, &x).unwrap(), &ka),
            &tensor_scale(&h.apply_op(Family::S, k, &y).unwrap(), &kb),
        );
        prop_assert!(tensor_is_zero(&tensor_sub(&lhs, &rhs)));
    }

    #[test]
    fn s_square_is_constant_at_points(id in 1u8..=7, num in 1i64..=6) {
        let p = GaussRat::ratio(num, 7);
        let ok = with_point(&p, || {
            let h = Hodge::<AtPoint>::new(id, 1, Contraction::symbolic()).unwrap();
            let b = &solve_class(&h, Family::S).unwrap()[0];
            let hg = Hodge::<AtPoint>::new(id, 1, b.parametrize(1).unwrap()).unwrap();
            let sq: Vec<_> = (0..3).map(|a| {
                let x = one_form::<AtPoint>(a);
                realify(&hg.apply_op(Family::S, 2, &hg.apply_op(Family::S, 1, &x).unwrap()).unwrap()[a])
            }).collect();
            sq[0] == sq[1] && sq[1] == sq[2]
        }).unwrap();
        prop_assert!(ok);
    }
}
