//! Polynomials in the contraction symbols over a [`Scalar`] field.
//!
//! Variables: α, β, γ, their formal conjugates ᾱ, β̄, γ̄, and two real
//! scale symbols m, n.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::Scalar;

pub const NVARS: usize = 8;
pub const ALPHA: usize = 0;
pub const BETA: usize = 1;
pub const GAMMA: usize = 2;
pub const ALPHA_C: usize = 3;
pub const BETA_C: usize = 4;
pub const GAMMA_C: usize = 5;
pub const M: usize = 6;
pub const N: usize = 7;

const NAMES: [&str; NVARS] = ["alpha", "beta", "gamma", "alpha~", "beta~", "gamma~", "m", "n"];

pub type Exps = [u8; NVARS];

fn conj_var(v: usize) -> usize {
    match v {
        0..=2 => v + 3,
        3..=5 => v - 3,
        _ => v,
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<F> {
    terms: BTreeMap<Exps, F>,
}

impl<F: Scalar> MPoly<F> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; NVARS], c);
        }
        MPoly { terms }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn var(v: usize) -> Self {
        let mut e = [0; NVARS];
        e[v] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(e: Exps, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &F)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// The only term, if there is exactly one.
    pub fn single_term(&self) -> Option<(&Exps, &F)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self.terms.get(&[0; NVARS]).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, e: Exps, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.neg_ref());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.neg_ref())).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let mut e = *e1;
                for i in 0..NVARS {
                    e[i] += e2[i];
                }
                out.add_term(e, c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.mul_ref(k))).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Formal conjugation: coefficients conjugated, each symbol swapped with
    /// its conjugate partner, m and n fixed.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut ne = [0; NVARS];
            for (v, &k) in e.iter().enumerate() {
                ne[conj_var(v)] = k;
            }
            out.add_term(ne, c.conj());
        }
        out
    }

    /// Replace variable `v` by `p`.
    pub fn subst(&self, v: usize, p: &Self) -> Self {
        let mut out = Self::zero();
        let mut pows: Vec<Self> = vec![Self::one()];
        for (e, c) in &self.terms {
            let k = e[v] as usize;
            while pows.len() <= k {
                let next = pows.last().unwrap().mul(p);
                pows.push(next);
            }
            let mut rest = *e;
            rest[v] = 0;
            out = out.add(&Self::monomial(rest, c.clone()).mul(&pows[k]));
        }
        out
    }

    pub fn subst_all(&self, subs: &[(usize, Self)]) -> Self {
        subs.iter().fold(self.clone(), |acc, (v, p)| acc.subst(*v, p))
    }

    /// Exact quotient by a nonzero constant-coefficient monomial.
    pub fn div_monomial(&self, e: &Exps, c: &F) -> Option<Self> {
        let inv = c.inv().ok()?;
        let mut out = Self::zero();
        for (te, tc) in &self.terms {
            let mut ne = [0; NVARS];
            for i in 0..NVARS {
                ne[i] = te[i].checked_sub(e[i])?;
            }
            out.add_term(ne, tc.mul_ref(&inv));
        }
        Some(out)
    }

    /// `self = k * o` for some field constant k; returns k.
    pub fn ratio_to(&self, o: &Self) -> Option<F> {
        if o.is_zero() {
            return None;
        }
        let (e, c) = o.terms.iter().next().unwrap();
        let k = self.terms.get(e)?.mul_ref(&c.inv().ok()?);
        if self.sub(&o.scale(&k)).is_zero() {
            Some(k)
        } else {
            None
        }
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> MPoly<G> {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| if k == 1 { NAMES[v].to_string() } else { format!("{}^{}", NAMES[v], k) })
                    .collect();
                if mono.is_empty() {
                    format!("({})", c.render())
                } else {
                    format!("({})*{}", c.render(), mono.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl<F: Scalar> fmt::Debug for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<F: Scalar> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
