//! Exact scalars: Q(i) and the rational function field Q(i)(s), s^2 = q.

mod gauss;
mod laurent;
mod parse;
mod point;
mod ratfunc;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

pub use gauss::GaussRat;
pub use laurent::LaurentPoly;
pub use parse::{parse_gauss, parse_laurent, parse_ratfunc};
pub use point::{current_point, with_point, AtPoint};
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at s = {0}")]
    Pole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("value is not real: {0}")]
    NotReal(String),
    #[error("sign not constant on (0,1): {0}")]
    SignNotConstant(String),
}

/// Coefficient field interface shared by the symbolic field and its
/// specializations at a rational point.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_gauss(g: GaussRat) -> Self;
    /// s^k, with s = q^{1/2}
    fn s_pow(k: i32) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv(&self) -> Result<Self, ScalarError>;
    fn conj(&self) -> Self;
    /// Sign of a real value; for the symbolic field this is the sign near the
    /// reference point q = 9/16.
    fn sign(&self) -> Result<i8, ScalarError>;
    fn sqrt(&self) -> Option<Self>;
    /// Size heuristic for pivot choice.
    fn weight(&self) -> u64;
    /// Image of a symbolic value in this field.
    fn from_ratfunc(r: &RatFunc) -> Result<Self, ScalarError>;
    /// Real and imaginary parts (s is real).
    fn re_im(&self) -> (Self, Self);
    /// Stable text rendering used in reports.
    fn render(&self) -> String {
        self.to_string()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn from_i64(n: i64) -> Self {
        Self::from_gauss(GaussRat::from_i64(n))
    }
    fn ratio(n: i64, d: i64) -> Self {
        Self::from_gauss(GaussRat::ratio(n, d))
    }
    fn i() -> Self {
        Self::from_gauss(GaussRat::i())
    }
    fn q_pow(k: i32) -> Self {
        Self::s_pow(2 * k)
    }
    fn q() -> Self {
        Self::s_pow(2)
    }
    fn div_ref(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul_ref(&o.inv()?))
    }
    fn is_real(&self) -> bool {
        self.conj() == *self
    }
    fn powi(&self, k: i32) -> Result<Self, ScalarError> {
        let b = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_ref(&b);
        }
        Ok(acc)
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn from_gauss(g: GaussRat) -> Self {
        RatFunc::from_gauss(g)
    }
    fn s_pow(k: i32) -> Self {
        RatFunc::s_pow(k)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        RatFunc::inv(self)
    }
    fn conj(&self) -> Self {
        RatFunc::conj(self)
    }
    fn sign(&self) -> Result<i8, ScalarError> {
        RatFunc::sign(self)
    }
    fn sqrt(&self) -> Option<Self> {
        RatFunc::sqrt(self)
    }
    fn weight(&self) -> u64 {
        self.size()
    }
    fn from_ratfunc(r: &RatFunc) -> Result<Self, ScalarError> {
        Ok(r.clone())
    }
    fn re_im(&self) -> (Self, Self) {
        RatFunc::re_im(self)
    }
    fn render(&self) -> String {
        self.to_q_string()
    }
}
