use proptest::prelude::*;
use qhodge_core::scalars::*;

fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

fn g(n: i64, d: i64) -> GaussRat {
    GaussRat::ratio(n, d)
}

#[test]
fn normalizes_common_factor() {
    assert_eq!(rf("(q^2-1)/(q-1)"), rf("q+1"));
    assert!(rf("(q^2-1)/(q-1)").is_laurent());
}

#[test]
fn half_powers_multiply() {
    assert_eq!(&RatFunc::s_pow(1) * &RatFunc::s_pow(1), RatFunc::q());
}

#[test]
fn lambda_product_at_two() {
    let x = rf("(1+q^2)*(1+q^2+q^4)");
    assert_eq!(x.specialize_q(&g(2, 1)).unwrap(), GaussRat::from_i64(105));
}

#[test]
fn specialize_examples() {
    assert!(matches!(rf("1/(q-1)").specialize(&g(1, 1)), Err(ScalarError::Domain(_))));
    assert!(matches!(rf("1/(q-4)").specialize(&g(2, 1)), Err(ScalarError::Pole(_))));
    assert_eq!(rf("q^-6").specialize(&g(2, 1)).unwrap(), g(1, 4096));
    assert_eq!(rf("(1-q^2)/(1-q^4)").specialize_q(&g(3, 1)).unwrap(), g(1, 10));
    assert!(rf("q").specialize(&GaussRat::zero()).is_err());
    assert!(rf("q").specialize(&g(-1, 1)).is_err());
}

#[test]
fn conjugation() {
    assert_eq!(rf("i*q").conj(), rf("-i*q"));
    assert_eq!(rf("q+1").conj(), rf("q+1"));
}

#[test]
fn division_by_zero_is_an_error() {
    assert_eq!(RatFunc::zero().inv(), Err(ScalarError::DivisionByZero));
    assert!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
}

#[test]
fn canonical_denominator_shape() {
    let x = rf("(2*s^3 + 4*s^5) / (6*s^-2 - 2*s)");
    assert_eq!(x.den().lo(), 0);
    assert!(x.den().lead().is_one());
}

#[test]
fn negate_q_is_substitution() {
    let x = rf("q*(1-q)/(1+q^-1)");
    assert_eq!(x.negate_q(), rf("-q*(1+q)/(1-q^-1)"));
    assert_eq!(rf("s").negate_q(), rf("i*s"));
}

#[test]
fn square_roots() {
    let x = rf("(1+q)^2 / (4*q^2 - 4*q + 1)");
    let r = x.sqrt().unwrap();
    assert_eq!(&r * &r, x);
    assert!(rf("2").sqrt().is_none());
    assert_eq!(rf("-4").sqrt().map(|r| &r * &r), Some(rf("-4")));
    assert!(rf("1+q").sqrt().is_none());
}

#[test]
fn sign_at_reference() {
    assert_eq!(rf("q - 2").sign().unwrap(), -1);
    assert_eq!(rf("(1-q)/(1+q)").sign().unwrap(), 1);
    assert!(matches!(rf("q - 1/2").sign(), Err(ScalarError::SignNotConstant(_))));
    assert!(matches!(rf("i*q").sign(), Err(ScalarError::NotReal(_))));
}

#[test]
fn q_notation() {
    assert_eq!(rf("q^4").to_q_string(), "q^4");
    assert_eq!(rf("1-q^2").to_q_string(), "-q^2 + 1");
    assert_eq!(rf("q^(1/2)"), RatFunc::s_pow(1));
    assert_eq!(rf("q^(-3/2)"), RatFunc::s_pow(-3));
    assert_eq!(parse_ratfunc(&rf("q^(3/2) - 2").to_q_string()).unwrap(), rf("q^(3/2) - 2"));
}

#[test]
fn gauss_format() {
    assert_eq!(GaussRat::new(g(1, 2).re, g(-3, 4).re).to_string(), "1/2-3/4*i");
    assert_eq!(parse_gauss("1/2+3/4*i").unwrap().to_string(), "1/2+3/4*i");
}

fn small_gauss() -> impl Strategy<Value = GaussRat> {
    (-5i64..=5, 1i64..=3, -2i64..=2).prop_map(|(n, d, im)| {
        let mut x = GaussRat::ratio(n, d);
        x.im = GaussRat::ratio(im, 1).re;
        x
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, small_gauss()), 0..4).prop_map(LaurentPoly::from_terms)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_map(|(n, d)| {
        let d = if d.is_zero() { LaurentPoly::one() } else { d };
        RatFunc::new(n, d).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), RatFunc::one());
            prop_assert_eq!((&(&y * &x)).div(&x).unwrap(), y.clone());
        }
    }

    #[test]
    fn cross_multiplication_oracle(x in ratfunc(), y in ratfunc()) {
        let eq = x == y;
        let cross = &(x.num() * y.den()) == &(y.num() * x.den());
        prop_assert_eq!(eq, cross);
    }

    #[test]
    fn conj_involution(x in ratfunc()) {
        prop_assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn print_parse_roundtrip(x in ratfunc()) {
        prop_assert_eq!(parse_ratfunc(&x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(parse_ratfunc(&x.to_q_string()).unwrap(), x);
    }

    #[test]
    fn negate_q_is_an_automorphism(x in ratfunc(), y in ratfunc()) {
        prop_assert_eq!((&x * &y).negate_q(), &x.negate_q() * &y.negate_q());
        prop_assert_eq!((&x + &y).negate_q(), &x.negate_q() + &y.negate_q());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn specialize_is_a_homomorphism(x in ratfunc(), y in ratfunc(), pick in 0usize..3) {
        let s0 = [g(1, 2), g(2, 3), g(3, 5)][pick].clone();
        if let (Ok(a), Ok(b)) = (x.specialize(&s0), y.specialize(&s0)) {
            prop_assert_eq!((&x + &y).specialize(&s0).unwrap(), &a + &b);
            prop_assert_eq!((&x * &y).specialize(&s0).unwrap(), &a * &b);
        }
    }
}
