//! Values of the coefficient field specialized at s = s0 (a fixed rational).
//! The point lives in a thread-local set by [`with_point`].

use std::cell::RefCell;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::{GaussRat, RatFunc, Scalar, ScalarError};

thread_local! {
    static POINT: RefCell<Option<GaussRat>> = const { RefCell::new(None) };
}

/// Runs `f` with s specialized to `s0`. Points must be real and avoid 0, ±1.
pub fn with_point<R>(s0: &GaussRat, f: impl FnOnce() -> R) -> Result<R, ScalarError> {
    RatFunc::s_pow(1).specialize(s0)?;
    let prev = POINT.with(|p| p.replace(Some(s0.clone())));
    let out = f();
    POINT.with(|p| *p.borrow_mut() = prev);
    Ok(out)
}

pub fn current_point() -> Option<GaussRat> {
    POINT.with(|p| p.borrow().clone())
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AtPoint(pub GaussRat);

impl AtPoint {
    pub fn from_ratfunc(r: &RatFunc) -> Result<Self, ScalarError> {
        let s0 = current_point().ok_or_else(|| ScalarError::Domain("no specialization point set".into()))?;
        Ok(AtPoint(r.specialize(&s0)?))
    }
}

impl fmt::Display for AtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for AtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Scalar for AtPoint {
    fn zero() -> Self {
        AtPoint(GaussRat::zero())
    }
    fn one() -> Self {
        AtPoint(GaussRat::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn from_gauss(g: GaussRat) -> Self {
        AtPoint(g)
    }
    fn s_pow(k: i32) -> Self {
        let s0 = current_point().expect("AtPoint arithmetic outside with_point");
        AtPoint(s0.pow(k).expect("point is nonzero"))
    }
    fn mul_ref(&self, o: &Self) -> Self {
        AtPoint(&self.0 * &o.0)
    }
    fn add_ref(&self, o: &Self) -> Self {
        AtPoint(&self.0 + &o.0)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        AtPoint(&self.0 - &o.0)
    }
    fn neg_ref(&self) -> Self {
        AtPoint(-&self.0)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        Ok(AtPoint(self.0.inv()?))
    }
    fn conj(&self) -> Self {
        AtPoint(self.0.conj())
    }
    fn sign(&self) -> Result<i8, ScalarError> {
        if !self.0.is_real() {
            return Err(ScalarError::NotReal(self.0.to_string()));
        }
        let z = num_rational::BigRational::from_integer(0.into());
        Ok(match self.0.re.cmp(&z) {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        })
    }
    fn sqrt(&self) -> Option<Self> {
        self.0.sqrt().map(AtPoint)
    }
    fn weight(&self) -> u64 {
        self.0.size()
    }
    fn from_ratfunc(r: &RatFunc) -> Result<Self, ScalarError> {
        AtPoint::from_ratfunc(r)
    }
    fn re_im(&self) -> (Self, Self) {
        (AtPoint(GaussRat::real(self.0.re.clone())), AtPoint(GaussRat::real(self.0.im.clone())))
    }
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                self.add_ref(&o)
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                self.sub_ref(&o)
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                self.mul_ref(&o)
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl<'a> Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                self.add_ref(o)
            }
        }
        impl<'a> Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                self.sub_ref(o)
            }
        }
        impl<'a> Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                self.mul_ref(o)
            }
        }
        impl<'a> AddAssign<&'a $t> for $t {
            fn add_assign(&mut self, o: &$t) {
                *self = self.add_ref(o);
            }
        }
        impl<'a> SubAssign<&'a $t> for $t {
            fn sub_assign(&mut self, o: &$t) {
                *self = self.sub_ref(o);
            }
        }
        impl<'a> MulAssign<&'a $t> for $t {
            fn mul_assign(&mut self, o: &$t) {
                *self = self.mul_ref(o);
            }
        }
    };
}

forward_ops!(AtPoint);
