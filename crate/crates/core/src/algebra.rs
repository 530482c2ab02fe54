//! The coordinate *-Hopf algebra of quantum SU(2).
//!
//! Generators a, c with u = [[a, -q c*], [c, a*]].
//!
//! # Commutation relations from unitarity
//!
//! With u* = [[a*, c*], [-q c, a]], the entries of u u* = 1 read
//!
//! * (1,1): a a* + q² c* c = 1
//! * (1,2): a c* - q c* a = 0, so a c* = q c* a
//! * (2,1): c a* - q a* c = 0, so a* c = q⁻¹ c a*
//! * (2,2): c c* + a* a = 1
//!
//! and the entries of u* u = 1 read
//!
//! * (1,1): a* a + c* c = 1, which with (2,2) above gives c c* = c* c
//! * (1,2): -q a* c* + c* a* = 0, so a* c* = q⁻¹ c* a*
//! * (2,1): -q c a + a c = 0, so a c = q c a
//! * (2,2): q² c c* + a a* = 1
//!
//! Hence a a* = 1 - q² c c* and a* a = 1 - c c*, and every element is a
//! combination of normal monomials a^k c^m c*^n (k ≥ 0) or a*^|k| c^m c*^n.
//! Moving c^m c*^n right past a^k costs q^{-k(m+n)} for k of either sign.
//! Writing x = c c*, one has x a = q⁻² a x and x a* = q² a* x, and by
//! induction on t = min(p, r)
//!
//! * a^p a*^r = a^{p-t} a*^{r-t} Π_{j<t} (1 - q^{2(r-j)} x)
//! * a*^p a^r = a*^{p-t} a^{r-t} Π_{j<t} (1 - q^{-2(r-1-j)} x)

use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::Scalar;

/// a^k c^m c*^n, with k < 0 meaning a*^{-k}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub k: i32,
    pub m: u32,
    pub n: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { k: 0, m: 0, n: 0 };

    pub fn new(k: i32, m: u32, n: u32) -> Self {
        Mono { k, m, n }
    }

    /// U(1) degree: x ∈ L_n with δ_R(x) = x ⊗ z^{-n}.
    pub fn degree(&self) -> i32 {
        -self.k - self.m as i32 + self.n as i32
    }

    pub fn total(&self) -> u32 {
        self.k.unsigned_abs() + self.m + self.n
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if self.k > 0 {
            parts.push(if self.k == 1 { "a".to_string() } else { format!("a^{}", self.k) });
        } else if self.k < 0 {
            parts.push(if self.k == -1 { "as".to_string() } else { format!("as^{}", -self.k) });
        }
        if self.m > 0 {
            parts.push(if self.m == 1 { "c".to_string() } else { format!("c^{}", self.m) });
        }
        if self.n > 0 {
            parts.push(if self.n == 1 { "cs".to_string() } else { format!("cs^{}", self.n) });
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// Coefficients of Π_{j<t} (1 - q^{e_j} x) as a polynomial in x.
fn product_in_x<F: Scalar>(exps: impl Iterator<Item = i32>) -> Vec<F> {
    let mut poly = vec![F::one()];
    for e in exps {
        let f = F::q_pow(e);
        let mut next = poly.clone();
        next.push(F::zero());
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] -= &c.mul_ref(&f);
        }
        poly = next;
    }
    poly
}

/// a^{k1} a^{k2} as Σ coeff a^k (c c*)^j.
fn a_product<F: Scalar>(k1: i32, k2: i32) -> Vec<(i32, u32, F)> {
    if k1 == 0 || k2 == 0 || (k1 > 0) == (k2 > 0) {
        return vec![(k1 + k2, 0, F::one())];
    }
    let (p, r) = (k1.unsigned_abs() as i32, k2.unsigned_abs() as i32);
    let t = p.min(r);
    let poly: Vec<F> = if k1 > 0 {
        product_in_x((0..t).map(|j| 2 * (r - j)))
    } else {
        product_in_x((0..t).map(|j| -2 * (r - 1 - j)))
    };
    let k = k1 + k2;
    poly.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (k, j as u32, c)).collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Elem<F> {
    terms: BTreeMap<Mono, F>,
}

impl<F: Scalar> Default for Elem<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Scalar> Elem<F> {
    pub fn zero() -> Self {
        Elem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::mono(Mono::ONE, F::one())
    }

    pub fn scalar(c: F) -> Self {
        Self::mono(Mono::ONE, c)
    }

    pub fn mono(m: Mono, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Elem { terms }
    }

    pub fn a() -> Self {
        Self::mono(Mono::new(1, 0, 0), F::one())
    }

    pub fn a_star() -> Self {
        Self::mono(Mono::new(-1, 0, 0), F::one())
    }

    pub fn c() -> Self {
        Self::mono(Mono::new(0, 1, 0), F::one())
    }

    pub fn c_star() -> Self {
        Self::mono(Mono::new(0, 0, 1), F::one())
    }

    /// The four generators a, c, a*, c*.
    pub fn generators() -> [Self; 4] {
        [Self::a(), Self::c(), Self::a_star(), Self::c_star()]
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &F)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Mono) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Self, k: &F) {
        if k.is_zero() {
            return;
        }
        for (m, c) in &o.terms {
            self.add_term(*m, c.mul_ref(k));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &F::one());
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &F::one().neg_ref());
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg_ref())
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Elem { terms: self.terms.iter().map(|(m, c)| (*m, c.mul_ref(k))).collect() }
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Elem<G> {
        let mut out = Elem::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Normal-ordered product of two monomials.
    pub fn mono_mul(x: &Mono, y: &Mono) -> Self {
        let swap = F::q_pow(-y.k * (x.m + x.n) as i32);
        let mut out = Self::zero();
        for (k, j, c) in a_product::<F>(x.k, y.k) {
            out.add_term(Mono::new(k, x.m + y.m + j, x.n + y.n + j), c.mul_ref(&swap));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let c = c1.mul_ref(c2);
                for (m, v) in Self::mono_mul(m1, m2).terms {
                    out.add_term(m, v.mul_ref(&c));
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Monomial as a product of generators, left to right.
    pub fn mono_factors(m: &Mono) -> Vec<Gen> {
        let mut out = Vec::new();
        let ag = if m.k >= 0 { Gen::A } else { Gen::AStar };
        out.extend(std::iter::repeat(ag).take(m.k.unsigned_abs() as usize));
        out.extend(std::iter::repeat(Gen::C).take(m.m as usize));
        out.extend(std::iter::repeat(Gen::CStar).take(m.n as usize));
        out
    }

    pub fn counit(&self) -> F {
        self.terms.iter().filter(|(m, _)| m.m == 0 && m.n == 0).fold(F::zero(), |acc, (_, c)| acc.add_ref(c))
    }

    /// Antilinear anti-automorphism with a ↔ a*, c ↔ c*.
    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let left = Mono::new(0, m.n, m.m);
            let right = Mono::new(-m.k, 0, 0);
            out.add_scaled(&Self::mono_mul(&left, &right), &c.conj());
        }
        out
    }

    /// Antipode: anti-automorphism with S(u) = u*, i.e. S(a) = a*,
    /// S(c) = -q c, S(c*) = -q⁻¹ c*, S(a*) = a.
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let sign = if (m.m + m.n) % 2 == 1 { F::one().neg_ref() } else { F::one() };
            let f = sign.mul_ref(&F::q_pow(m.m as i32 - m.n as i32));
            let left = Mono::new(0, m.m, m.n);
            let right = Mono::new(-m.k, 0, 0);
            out.add_scaled(&Self::mono_mul(&left, &right), &c.mul_ref(&f));
        }
        out
    }

    /// Haar state: h((c c*)^n) = (1 - q²)/(1 - q^{2(n+1)}), zero on the rest.
    pub fn haar(&self) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            if m.k == 0 && m.m == m.n {
                let num = F::one().sub_ref(&F::q_pow(2));
                let den = F::one().sub_ref(&F::q_pow(2 * (m.m as i32 + 1)));
                acc += &c.mul_ref(&num.div_ref(&den).expect("q is not a root of unity"));
            }
        }
        acc
    }

    /// π onto A(U(1)) = C[z, z⁻¹]: a ↦ z, a* ↦ z⁻¹, c, c* ↦ 0.
    pub fn u1_project(&self) -> BTreeMap<i32, F> {
        let mut out: BTreeMap<i32, F> = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.m == 0 && m.n == 0 {
                let e = out.entry(m.k).or_insert_with(F::zero);
                *e += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Degree n if homogeneous (x ∈ L_n), `None` if mixed. Zero is in every
    /// L_n and reports `Some(0)`.
    pub fn degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let Some(d) = it.next() else { return Some(0) };
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_degree(&self, n: i32) -> bool {
        self.terms.keys().all(|m| m.degree() == n)
    }

    pub fn max_total(&self) -> u32 {
        self.terms.keys().map(|m| m.total()).max().unwrap_or(0)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms.iter().map(|(m, c)| format!("({}) * {}", c.render(), m.render())).collect::<Vec<_>>().join(" + ")
    }
}

impl<F: Scalar> fmt::Debug for Elem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    A,
    AStar,
    C,
    CStar,
}

impl Gen {
    pub fn elem<F: Scalar>(self) -> Elem<F> {
        match self {
            Gen::A => Elem::a(),
            Gen::AStar => Elem::a_star(),
            Gen::C => Elem::c(),
            Gen::CStar => Elem::c_star(),
        }
    }

    pub fn mono(self) -> Mono {
        match self {
            Gen::A => Mono::new(1, 0, 0),
            Gen::AStar => Mono::new(-1, 0, 0),
            Gen::C => Mono::new(0, 1, 0),
            Gen::CStar => Mono::new(0, 0, 1),
        }
    }
}

/// Element of A ⊗ A.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor2<F> {
    terms: BTreeMap<(Mono, Mono), F>,
}

impl<F: Scalar> Tensor2<F> {
    pub fn zero() -> Self {
        Tensor2 { terms: BTreeMap::new() }
    }

    pub fn pure(x: &Elem<F>, y: &Elem<F>) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                out.add_term((*m1, *m2), c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn one() -> Self {
        Self::pure(&Elem::one(), &Elem::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Mono, Mono), &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: (Mono, Mono), c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c.neg_ref());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for ((x1, y1), c1) in &self.terms {
            for ((x2, y2), c2) in &o.terms {
                let l = Elem::<F>::mono_mul(x1, x2);
                let r = Elem::<F>::mono_mul(y1, y2);
                let c = c1.mul_ref(c2);
                for (ml, cl) in l.terms() {
                    let cc = cl.mul_ref(&c);
                    for (mr, cr) in r.terms() {
                        out.add_term((*ml, *mr), cc.mul_ref(cr));
                    }
                }
            }
        }
        out
    }

    /// Σ f(x) g(y) over the terms x ⊗ y.
    pub fn contract(&self, f: impl Fn(&Mono) -> Elem<F>, g: impl Fn(&Mono) -> Elem<F>) -> Elem<F> {
        let mut out = Elem::zero();
        for ((x, y), c) in &self.terms {
            out.add_scaled(&f(x).mul(&g(y)), c);
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((x, y), c)| format!("({}) * {} (x) {}", c.render(), x.render(), y.render()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<F: Scalar> fmt::Debug for Tensor2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Δ on generators, from Δu = u ⊗ u.
pub fn gen_coproduct<F: Scalar>(g: Gen) -> Tensor2<F> {
    let (a, c, as_, cs) = (Elem::<F>::a(), Elem::<F>::c(), Elem::<F>::a_star(), Elem::<F>::c_star());
    let mq = F::q().neg_ref();
    match g {
        Gen::A => Tensor2::pure(&a, &a).add(&Tensor2::pure(&cs.scale(&mq), &c)),
        Gen::C => Tensor2::pure(&c, &a).add(&Tensor2::pure(&as_, &c)),
        Gen::AStar => Tensor2::pure(&as_, &as_).add(&Tensor2::pure(&c.scale(&mq), &cs)),
        Gen::CStar => Tensor2::pure(&a, &cs).add(&Tensor2::pure(&cs, &as_)),
    }
}

/// Δ of a monomial, multiplicatively.
pub fn mono_coproduct<F: Scalar>(m: &Mono) -> Tensor2<F> {
    Elem::<F>::mono_factors(m).into_iter().fold(Tensor2::one(), |acc, g| acc.mul(&gen_coproduct(g)))
}

pub fn coproduct<F: Scalar>(x: &Elem<F>) -> Tensor2<F> {
    let mut out = Tensor2::zero();
    for (m, c) in x.terms() {
        for (k, v) in mono_coproduct::<F>(m).terms {
            out.add_term(k, v.mul_ref(c));
        }
    }
    out
}

/// All normal monomials with total degree ≤ d.
pub fn monomials_up_to(d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    for k in -(d as i32)..=(d as i32) {
        for m in 0..=d {
            for n in 0..=d {
                let mo = Mono::new(k, m, n);
                if mo.total() <= d {
                    out.push(mo);
                }
            }
        }
    }
    out.sort();
    out
}
