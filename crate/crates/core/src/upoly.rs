//! Univariate polynomials over Q, enough for Sturm real-root counting.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalars::GaussRat;

/// Coefficients from x^0 upwards, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly(pub Vec<BigRational>);

impl RatPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        RatPoly(c)
    }

    /// Real part of a polynomial with Gaussian coefficients, or `None` if
    /// some coefficient is not real.
    pub fn from_gauss(c: &[GaussRat]) -> Option<Self> {
        if c.iter().any(|g| !g.is_real()) {
            return None;
        }
        Some(Self::new(c.iter().map(|g| g.re.clone()).collect()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer((k as i64).into())).collect(),
        )
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        let lead = d.0[dd].clone();
        let mut qt = vec![BigRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().unwrap() / &lead;
            for (i, c) in d.0.iter().enumerate() {
                r[k + i] -= &f * c;
            }
            qt[k] = f;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (Self::new(qt), Self::new(r))
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Squarefree part p / gcd(p, p').
    pub fn squarefree(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.divrem(&g).0
    }

    fn sign_at_inf(&self, positive: bool) -> i32 {
        let Some(d) = self.degree() else { return 0 };
        let s = if self.0[d].is_positive() { 1 } else { -1 };
        if positive || d % 2 == 0 {
            s
        } else {
            -s
        }
    }

    /// Number of distinct real roots, by a Sturm sequence.
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(Self::new(r.0.into_iter().map(|c| -c).collect()));
        }
        let changes = |pos: bool| {
            let signs: Vec<i32> = seq.iter().map(|p| p.sign_at_inf(pos)).filter(|&s| s != 0).collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        changes(false) - changes(true)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn one() -> Self {
        RatPoly(vec![BigRational::one()])
    }
}

/// Whether a polynomial with Gaussian coefficients has a root off the real
/// line. Non-real coefficients force one; otherwise compare the Sturm count
/// with the number of distinct roots.
pub fn has_nonreal_root(c: &[GaussRat]) -> bool {
    let mut c = c.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    let Some(lead) = c.last().cloned() else { return false };
    let inv = lead.inv().expect("nonzero leading coefficient");
    let monic: Vec<GaussRat> = c.iter().map(|x| x * &inv).collect();
    match RatPoly::from_gauss(&monic) {
        None => true,
        Some(p) => {
            let sf = p.squarefree();
            sf.count_real_roots() < sf.degree().unwrap_or(0)
        }
    }
}
