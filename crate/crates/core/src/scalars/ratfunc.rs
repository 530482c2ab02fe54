//! Canonical rational functions num/den in s = q^{1/2}.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::{GaussRat, LaurentPoly, ScalarError};

/// Invariant: den has lowest exponent 0 and leading coefficient 1, and shares
/// no nontrivial factor with num. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn from_gauss(g: GaussRat) -> Self {
        Self::from_laurent(LaurentPoly::constant(g))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_gauss(GaussRat::from_i64(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_gauss(GaussRat::ratio(n, d))
    }

    pub fn i() -> Self {
        Self::from_gauss(GaussRat::i())
    }

    /// s^k = q^{k/2}
    pub fn s_pow(k: i32) -> Self {
        Self::from_laurent(LaurentPoly::monomial(GaussRat::one(), k))
    }

    pub fn q_pow(k: i32) -> Self {
        Self::s_pow(2 * k)
    }

    pub fn q() -> Self {
        Self::s_pow(2)
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // move s-powers of den into num, make den monic
        let shift = den.lo();
        let lead = den.lead().inv().unwrap();
        let den = den.shift(-shift).scale(&lead);
        let num = num.shift(-shift).scale(&lead);
        if den.is_one() {
            return RatFunc { num, den };
        }
        let g = num.gcd(&den);
        if g.is_one() {
            return RatFunc { num, den };
        }
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lead = den.lead().inv().unwrap();
        RatFunc { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// Laurent polynomial (denominator 1).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_gauss(&self) -> Option<GaussRat> {
        if self.den.is_one() && (self.num.is_zero() || (self.num.is_monomial() && self.num.lo() == 0)) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &RatFunc) -> Result<Self, ScalarError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Complex conjugation of coefficients; s is real.
    pub fn conj(&self) -> Self {
        // conjugation preserves monic and coprimality
        RatFunc { num: self.num.conj(), den: self.den.conj() }
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Real and imaginary parts over Q(s).
    pub fn re_im(&self) -> (RatFunc, RatFunc) {
        let c = self.conj();
        let half = RatFunc::ratio(1, 2);
        let re = &(self + &c) * &half;
        let im = &(&(self - &c) * &half) * &RatFunc::from_gauss(-GaussRat::i());
        (re, im)
    }

    /// The automorphism q -> -q, realized as s -> i s.
    pub fn negate_q(&self) -> Self {
        Self::normalize(self.num.twist_i(), self.den.twist_i())
    }

    pub fn specialize(&self, s0: &GaussRat) -> Result<GaussRat, ScalarError> {
        check_point(s0)?;
        let d = self.den.eval(s0)?;
        if d.is_zero() {
            return Err(ScalarError::Pole(s0.to_string()));
        }
        Ok(&self.num.eval(s0)? * &d.inv()?)
    }

    /// Evaluation at q = q0 for functions of q alone (even s-exponents).
    pub fn specialize_q(&self, q0: &GaussRat) -> Result<GaussRat, ScalarError> {
        if !q0.is_real() || q0.is_zero() || q0.is_one() || (-q0).is_one() {
            return Err(ScalarError::Domain(format!("q = {} excluded", q0)));
        }
        let half = |p: &LaurentPoly| -> Result<LaurentPoly, ScalarError> {
            if p.terms().any(|(k, _)| k % 2 != 0) {
                return Err(ScalarError::Domain("odd power of s at a q-point".into()));
            }
            Ok(LaurentPoly::from_terms(p.terms().map(|(k, g)| (k / 2, g.clone()))))
        };
        let d = half(&self.den)?.eval(q0)?;
        if d.is_zero() {
            return Err(ScalarError::Pole(format!("q = {}", q0)));
        }
        Ok(&half(&self.num)?.eval(q0)? * &d.inv()?)
    }

    /// Exact square root in Q(i)(s), when the input is a perfect square.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = laurent_sqrt(&self.num)?;
        let d = laurent_sqrt(&self.den)?;
        Some(Self::normalize(n, d))
    }

    pub fn size(&self) -> u64 {
        self.num.size() + self.den.size()
    }

    /// Sign at the reference point s = 3/4 (q = 9/16), guarded by constancy
    /// across five further points in (0,1).
    pub fn sign(&self) -> Result<i8, ScalarError> {
        if !self.is_real() {
            return Err(ScalarError::NotReal(self.to_string()));
        }
        let sg = |s: &GaussRat| -> Result<i8, ScalarError> {
            let v = self.specialize(s)?;
            Ok(match v.re.cmp(&num_rational::BigRational::from_integer(0.into())) {
                std::cmp::Ordering::Less => -1,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => 1,
            })
        };
        let reference = sg(&GaussRat::ratio(3, 4))?;
        for (n, d) in [(1, 3), (1, 2), (2, 3), (4, 5), (9, 10)] {
            if sg(&GaussRat::ratio(n, d))? != reference {
                return Err(ScalarError::SignNotConstant(self.to_string()));
            }
        }
        Ok(reference)
    }

    /// Human form in q, e.g. "q^4", "(1 - q^2) / (1 + q)".
    pub fn to_q_string(&self) -> String {
        let n = q_poly_string(&self.num);
        if self.den.is_one() {
            n
        } else {
            let d = q_poly_string(&self.den);
            let wrap = |x: String, p: &LaurentPoly| if p.nterms() > 1 { format!("({})", x) } else { x };
            format!("{} / {}", wrap(n, &self.num), wrap(d, &self.den))
        }
    }
}

fn check_point(s0: &GaussRat) -> Result<(), ScalarError> {
    if !s0.is_real() {
        return Err(ScalarError::Domain(format!("specialization point {} is not real", s0)));
    }
    if s0.is_zero() || s0.is_one() || (-s0).is_one() {
        return Err(ScalarError::Domain(format!("specialization point {} excluded", s0)));
    }
    Ok(())
}

fn laurent_sqrt(p: &LaurentPoly) -> Option<LaurentPoly> {
    if p.lo() % 2 != 0 {
        return None;
    }
    // coefficient-by-coefficient square root from the lowest term
    let base = p.shift(-p.lo());
    let n = base.span();
    if n % 2 != 0 {
        return None;
    }
    let m = (n / 2) as usize;
    let r0 = base.coeff(0).sqrt()?;
    let two_r0_inv = (&r0 + &r0).inv().ok()?;
    let mut r = vec![r0];
    for k in 1..=m {
        let mut acc = base.coeff(k as i32);
        for j in 1..k {
            acc -= &(&r[j] * &r[k - j]);
        }
        r.push(&acc * &two_r0_inv);
    }
    let cand = LaurentPoly::from_terms(r.into_iter().enumerate().map(|(i, g)| (i as i32, g)));
    if &cand * &cand == base {
        Some(cand.shift(p.lo() / 2))
    } else {
        None
    }
}

fn q_exp(k: i32) -> String {
    if k % 2 == 0 {
        let e = k / 2;
        match e {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{}", e),
        }
    } else {
        format!("q^({}/2)", k)
    }
}

fn q_poly_string(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let terms: Vec<(i32, &GaussRat)> = p.terms().collect();
    for (idx, (k, g)) in terms.iter().rev().enumerate() {
        let (neg, mag) = if g.im.is_zero_val() && g.re < num_rational::BigRational::from_integer(0.into()) {
            (true, -*g)
        } else {
            (false, (*g).clone())
        };
        let var = q_exp(*k);
        let coef = if mag.is_one() && !var.is_empty() {
            String::new()
        } else if !mag.re.is_zero_val() && !mag.im.is_zero_val() {
            format!("({})", mag)
        } else {
            mag.to_string()
        };
        let body = match (coef.is_empty(), var.is_empty()) {
            (true, _) => var,
            (false, true) => coef,
            (false, false) => format!("{}*{}", coef, var),
        };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

trait ZeroVal {
    fn is_zero_val(&self) -> bool;
}

impl ZeroVal for num_rational::BigRational {
    fn is_zero_val(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl fmt::Display for RatFunc {
    /// Canonical serialization "num" or "(num) / (den)" in the variable s.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_q_string())
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc { num: &self.num + &o.num, den: LaurentPoly::one() };
            }
            return RatFunc::normalize(&self.num + &o.num, self.den.clone());
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        RatFunc::normalize(num, &self.den * &o.den)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: &self.num * &o.num, den: LaurentPoly::one() };
        }
        if self.num.is_monomial() && self.den.is_one() {
            return RatFunc { num: &self.num * &o.num, den: o.den.clone() };
        }
        if o.num.is_monomial() && o.den.is_one() {
            return RatFunc { num: &self.num * &o.num, den: self.den.clone() };
        }
        RatFunc::normalize(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        &self + &o
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        &self - &o
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        &self * &o
    }
}

impl<'a> Add<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        &self + o
    }
}

impl<'a> Sub<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        &self - o
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        &self * o
    }
}

impl<'a> AddAssign<&'a RatFunc> for RatFunc {
    fn add_assign(&mut self, o: &RatFunc) {
        *self = &*self + o;
    }
}

impl<'a> SubAssign<&'a RatFunc> for RatFunc {
    fn sub_assign(&mut self, o: &RatFunc) {
        *self = &*self - o;
    }
}

impl<'a> MulAssign<&'a RatFunc> for RatFunc {
    fn mul_assign(&mut self, o: &RatFunc) {
        *self = &*self * o;
    }
}
