//! Laurent polynomials in `s` over the Gaussian rationals, stored densely
//! from the lowest occurring exponent.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{GaussRat, ScalarError};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    lo: i32,
    // c[0] and c[len-1] are nonzero; empty means zero
    c: Vec<GaussRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRat::one())
    }

    pub fn constant(g: GaussRat) -> Self {
        Self::monomial(g, 0)
    }

    pub fn monomial(g: GaussRat, k: i32) -> Self {
        if g.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { lo: k, c: vec![g] }
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, GaussRat)>>(terms: I) -> Self {
        let mut v: Vec<(i32, GaussRat)> = terms.into_iter().collect();
        if v.is_empty() {
            return Self::zero();
        }
        let lo = v.iter().map(|t| t.0).min().unwrap();
        let hi = v.iter().map(|t| t.0).max().unwrap();
        let mut c = vec![GaussRat::zero(); (hi - lo + 1) as usize];
        for (k, g) in v.drain(..) {
            c[(k - lo) as usize] += &g;
        }
        let mut p = LaurentPoly { lo, c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.c.last(), Some(x) if x.is_zero()) {
            self.c.pop();
        }
        let lead_zeros = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead_zeros == self.c.len() {
            self.c.clear();
            self.lo = 0;
            return;
        }
        if lead_zeros > 0 {
            self.c.drain(..lead_zeros);
            self.lo += lead_zeros as i32;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.c.len() == 1 && self.c[0].is_one()
    }

    /// True for a single term `g s^k`.
    pub fn is_monomial(&self) -> bool {
        self.c.len() == 1
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.c.len() as i32 - 1
    }

    /// Width of the exponent support, the polynomial degree after shifting.
    pub fn span(&self) -> i32 {
        self.c.len() as i32 - 1
    }

    pub fn coeff(&self, k: i32) -> GaussRat {
        if self.is_zero() || k < self.lo || k > self.hi() {
            GaussRat::zero()
        } else {
            self.c[(k - self.lo) as usize].clone()
        }
    }

    pub fn lead(&self) -> &GaussRat {
        self.c.last().expect("lead of zero polynomial")
    }

    pub fn low_coeff(&self) -> &GaussRat {
        &self.c[0]
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussRat)> + '_ {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(move |(i, g)| (self.lo + i as i32, g))
    }

    pub fn nterms(&self) -> usize {
        self.c.iter().filter(|g| !g.is_zero()).count()
    }

    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { lo: self.lo + k, c: self.c.clone() }
    }

    pub fn scale(&self, g: &GaussRat) -> Self {
        if g.is_zero() {
            return Self::zero();
        }
        LaurentPoly { lo: self.lo, c: self.c.iter().map(|x| x * g).collect() }
    }

    pub fn conj(&self) -> Self {
        LaurentPoly { lo: self.lo, c: self.c.iter().map(|x| x.conj()).collect() }
    }

    /// Substitution s -> i s, i.e. q -> -q.
    pub fn twist_i(&self) -> Self {
        let i = GaussRat::i();
        let mut out = self.clone();
        for (j, x) in out.c.iter_mut().enumerate() {
            let k = (self.lo + j as i32).rem_euclid(4);
            let f = i.pow(k).unwrap();
            *x = &*x * &f;
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, s0: &GaussRat) -> Result<GaussRat, ScalarError> {
        if self.is_zero() {
            return Ok(GaussRat::zero());
        }
        // Horner on the shifted polynomial, then multiply by s0^lo
        let mut acc = GaussRat::zero();
        for x in self.c.iter().rev() {
            acc = &(&acc * s0) + x;
        }
        Ok(&acc * &s0.pow(self.lo)?)
    }

    /// Integer multiple clearing all coefficient denominators.
    pub fn denom_lcm(&self) -> BigInt {
        self.c.iter().fold(BigInt::one(), |acc, g| acc.lcm(&g.denom_lcm()))
    }

    pub fn size(&self) -> u64 {
        self.c.iter().map(|g| g.size()).sum::<u64>() + self.c.len() as u64
    }

    fn poly_part(&self) -> Vec<GaussRat> {
        self.c.clone()
    }

    fn from_poly(lo: i32, c: Vec<GaussRat>) -> Self {
        let mut p = LaurentPoly { lo, c };
        p.trim();
        p
    }

    /// Exact quotient when `d` divides `self` in the Laurent ring.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let inv = d.c[0].inv().ok()?;
            return Some(LaurentPoly { lo: self.lo - d.lo, c: self.c.iter().map(|x| x * &inv).collect() });
        }
        let (q, r) = poly_divrem(&self.poly_part(), &d.poly_part());
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::from_poly(self.lo - d.lo, q))
    }

    /// Monic gcd of the polynomial parts (powers of s are units here).
    pub fn gcd(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return o.monic_poly();
        }
        if o.is_zero() {
            return self.monic_poly();
        }
        let g = field_gcd(self.poly_part(), o.poly_part());
        Self::from_poly(0, g).monic_poly()
    }

    /// Polynomial part shifted to lowest exponent 0 and made monic.
    pub fn monic_poly(&self) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lead().inv().unwrap();
        LaurentPoly { lo: 0, c: self.c.iter().map(|x| x * &inv).collect() }
    }
}

fn poly_divrem(a: &[GaussRat], b: &[GaussRat]) -> (Vec<GaussRat>, Vec<GaussRat>) {
    let mut r: Vec<GaussRat> = a.to_vec();
    if a.len() < b.len() {
        return (vec![], r);
    }
    let db = b.len() - 1;
    let lead_inv = b[db].inv().unwrap();
    let mut q = vec![GaussRat::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let coef = &r[i + db] * &lead_inv;
        if coef.is_zero() {
            continue;
        }
        for j in 0..=db {
            let t = &coef * &b[j];
            r[i + j] -= &t;
        }
        q[i] = coef;
    }
    r.truncate(db);
    (q, r)
}

fn trimmed(mut p: Vec<GaussRat>) -> Vec<GaussRat> {
    while matches!(p.last(), Some(x) if x.is_zero()) {
        p.pop();
    }
    p
}

/// Euclid over the coefficient field, keeping the remainders monic.
fn field_gcd(a: Vec<GaussRat>, b: Vec<GaussRat>) -> Vec<GaussRat> {
    let monic = |p: Vec<GaussRat>| -> Vec<GaussRat> {
        let inv = p.last().unwrap().inv().unwrap();
        p.iter().map(|x| x * &inv).collect()
    };
    let (mut a, mut b) = (trimmed(a), trimmed(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return monic(a);
    }
    b = monic(b);
    loop {
        let (_, r) = poly_divrem(&a, &b);
        let r = trimmed(r);
        if r.is_empty() {
            return b;
        }
        a = b;
        b = monic(r);
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = self.hi().max(o.hi());
        let mut c = vec![GaussRat::zero(); (hi - lo + 1) as usize];
        for (i, x) in self.c.iter().enumerate() {
            c[(self.lo - lo) as usize + i] += x;
        }
        for (i, x) in o.c.iter().enumerate() {
            c[(o.lo - lo) as usize + i] += x;
        }
        LaurentPoly::from_poly(lo, c)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { lo: self.lo, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let mut c = vec![GaussRat::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = x * y;
                c[i + j] += &t;
            }
        }
        LaurentPoly::from_poly(self.lo + o.lo, c)
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical serialization "c0*s^k0 + c1*s^k1 + ..." by ascending exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, g) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = g.to_string();
            let cs = if !g.re.is_zero_ref() && !g.im.is_zero_ref() { format!("({})", cs) } else { cs };
            if k == 0 {
                write!(f, "{}", cs)?;
            } else {
                write!(f, "{}*s^{}", cs, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

trait IsZeroRef {
    fn is_zero_ref(&self) -> bool;
}

impl IsZeroRef for num_rational::BigRational {
    fn is_zero_ref(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}
