//! The dual Hopf *-algebra generated by K^{±1}, E, F, ε₋, acting on the
//! coordinate algebra.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::{coproduct, Elem, Gen, Mono};
use crate::linalg::Matrix;
use crate::scalars::Scalar;

/// ε₋^s F^i E^j K^l
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub s: u8,
    pub i: u32,
    pub j: u32,
    pub l: i32,
}

impl Word {
    pub const ONE: Word = Word { s: 0, i: 0, j: 0, l: 0 };

    pub fn new(s: u8, i: u32, j: u32, l: i32) -> Self {
        Word { s: s % 2, i, j, l }
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if self.s == 1 {
            parts.push("epsm".to_string());
        }
        for (name, p) in [("F", self.i), ("E", self.j)] {
            match p {
                0 => {}
                1 => parts.push(name.into()),
                _ => parts.push(format!("{name}^{p}")),
            }
        }
        match self.l {
            0 => {}
            1 => parts.push("K".into()),
            _ => parts.push(format!("K^{}", self.l)),
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DGen {
    K,
    KInv,
    E,
    F,
    Eps,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Functional<F> {
    terms: BTreeMap<Word, F>,
}

impl<F: Scalar> Default for Functional<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Scalar> Functional<F> {
    pub fn zero() -> Self {
        Functional { terms: BTreeMap::new() }
    }

    pub fn word(w: Word, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Functional { terms }
    }

    pub fn one() -> Self {
        Self::word(Word::ONE, F::one())
    }

    pub fn k_pow(l: i32) -> Self {
        Self::word(Word::new(0, 0, 0, l), F::one())
    }

    pub fn e() -> Self {
        Self::word(Word::new(0, 0, 1, 0), F::one())
    }

    pub fn f() -> Self {
        Self::word(Word::new(0, 1, 0, 0), F::one())
    }

    pub fn eps_minus() -> Self {
        Self::word(Word::new(1, 0, 0, 0), F::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Self, k: &F) {
        for (w, c) in &o.terms {
            self.add_term(*w, c.mul_ref(k));
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

    pub fn scale(&self, k: &F) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, k);
        out
    }

    /// Right multiplication of a normal word by one generator.
    fn word_times_gen(w: &Word, g: DGen) -> Self {
        match g {
            DGen::K => Self::word(Word::new(w.s, w.i, w.j, w.l + 1), F::one()),
            DGen::KInv => Self::word(Word::new(w.s, w.i, w.j, w.l - 1), F::one()),
            DGen::Eps => Self::word(Word::new(w.s + 1, w.i, w.j, w.l), F::one()),
            // K^l E = q^l E K^l
            DGen::E => Self::word(Word::new(w.s, w.i, w.j + 1, w.l), F::q_pow(w.l)),
            // K^l F = q^{-l} F K^l and
            // E^j F = F E^j + E^{j-1} (Σ_t q^{2t} K² - Σ_t q^{-2t} K⁻²)/(q - q⁻¹)
            DGen::F => {
                let ql = F::q_pow(-w.l);
                let mut out = Self::word(Word::new(w.s, w.i + 1, w.j, w.l), ql.clone());
                if w.j > 0 {
                    let inv = F::q().sub_ref(&F::q_pow(-1)).inv().expect("q² ≠ 1");
                    let (mut up, mut down) = (F::zero(), F::zero());
                    for t in 0..w.j as i32 {
                        up += &F::q_pow(2 * t);
                        down += &F::q_pow(-2 * t);
                    }
                    let k = ql.mul_ref(&inv);
                    out.add_term(Word::new(w.s, w.i, w.j - 1, w.l + 2), up.mul_ref(&k));
                    out.add_term(Word::new(w.s, w.i, w.j - 1, w.l - 2), down.mul_ref(&k).neg_ref());
                }
                out
            }
        }
    }

    pub fn mul_gen(&self, g: DGen) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&Self::word_times_gen(w, g), c);
        }
        out
    }

    /// Word as the generator sequence ε₋^s F^i E^j K^l.
    pub fn word_gens(w: &Word) -> Vec<DGen> {
        let mut out = Vec::new();
        if w.s == 1 {
            out.push(DGen::Eps);
        }
        out.extend(std::iter::repeat(DGen::F).take(w.i as usize));
        out.extend(std::iter::repeat(DGen::E).take(w.j as usize));
        let kg = if w.l >= 0 { DGen::K } else { DGen::KInv };
        out.extend(std::iter::repeat(kg).take(w.l.unsigned_abs() as usize));
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &o.terms {
            let mut acc = self.clone();
            for g in Self::word_gens(w) {
                acc = acc.mul_gen(g);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn counit(&self) -> F {
        self.terms.iter().filter(|(w, _)| w.i == 0 && w.j == 0).fold(F::zero(), |acc, (_, c)| acc.add_ref(c))
    }

    fn gen_fun(g: DGen) -> Self {
        match g {
            DGen::K => Self::k_pow(1),
            DGen::KInv => Self::k_pow(-1),
            DGen::E => Self::e(),
            DGen::F => Self::f(),
            DGen::Eps => Self::eps_minus(),
        }
    }

    /// Antilinear anti-automorphism: K* = K, E* = F, ε₋* = ε₋.
    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::one();
            for g in Self::word_gens(w).into_iter().rev() {
                let gs = match g {
                    DGen::E => DGen::F,
                    DGen::F => DGen::E,
                    other => other,
                };
                acc = acc.mul(&Self::gen_fun(gs));
            }
            out.add_scaled(&acc, &c.conj());
        }
        out
    }

    /// Antipode: S(K) = K⁻¹, S(E) = -qE, S(F) = -q⁻¹F, S(ε₋) = ε₋.
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::one();
            for g in Self::word_gens(w).into_iter().rev() {
                let sg = match g {
                    DGen::K => Self::k_pow(-1),
                    DGen::KInv => Self::k_pow(1),
                    DGen::E => Self::e().scale(&F::q().neg_ref()),
                    DGen::F => Self::f().scale(&F::q_pow(-1).neg_ref()),
                    DGen::Eps => Self::eps_minus(),
                };
                acc = acc.mul(&sg);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    pub fn coproduct(&self) -> FTensor<F> {
        let mut out = FTensor::zero();
        for (w, c) in &self.terms {
            let mut acc = FTensor::one();
            for g in Self::word_gens(w) {
                acc = acc.mul(&FTensor::gen_coproduct(g));
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms.iter().map(|(w, c)| format!("({}) * {}", c.render(), w.render())).collect::<Vec<_>>().join(" + ")
    }
}

impl<F: Scalar> fmt::Debug for Functional<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Element of the tensor square of the dual algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct FTensor<F> {
    terms: BTreeMap<(Word, Word), F>,
}

impl<F: Scalar> FTensor<F> {
    pub fn zero() -> Self {
        FTensor { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::pure(&Functional::one(), &Functional::one())
    }

    pub fn pure(x: &Functional<F>, y: &Functional<F>) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in x.terms() {
            for (w2, c2) in y.terms() {
                out.add_term((*w1, *w2), c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: (Word, Word), c: F) {
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

    pub fn add_scaled(&mut self, o: &Self, k: &F) {
        for (w, c) in &o.terms {
            self.add_term(*w, c.mul_ref(k));
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

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for ((x1, y1), c1) in &self.terms {
            for ((x2, y2), c2) in &o.terms {
                let l = Functional::word(*x1, F::one()).mul(&Functional::word(*x2, F::one()));
                let r = Functional::word(*y1, F::one()).mul(&Functional::word(*y2, F::one()));
                let c = c1.mul_ref(c2);
                for (wl, cl) in l.terms() {
                    let cc = cl.mul_ref(&c);
                    for (wr, cr) in r.terms() {
                        out.add_term((*wl, *wr), cc.mul_ref(cr));
                    }
                }
            }
        }
        out
    }

    fn gen_coproduct(g: DGen) -> Self {
        let (k, ki) = (Functional::<F>::k_pow(1), Functional::<F>::k_pow(-1));
        match g {
            DGen::K => Self::pure(&k, &k),
            DGen::KInv => Self::pure(&ki, &ki),
            DGen::Eps => Self::pure(&Functional::eps_minus(), &Functional::eps_minus()),
            DGen::E => Self::pure(&Functional::e(), &k).add(&Self::pure(&ki, &Functional::e())),
            DGen::F => Self::pure(&Functional::f(), &k).add(&Self::pure(&ki, &Functional::f())),
        }
    }

    /// Group as Σ_w L_w ⊗ w by the right factor.
    pub fn by_right(&self) -> BTreeMap<Word, Functional<F>> {
        let mut out: BTreeMap<Word, Functional<F>> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            out.entry(*r).or_default().add_term(*l, c.clone());
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

impl<F: Scalar> fmt::Debug for FTensor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Memoized left action X ⊳ h = h₁ X(h₂) of words on monomials.
pub struct Action<F> {
    e_cache: RefCell<HashMap<Mono, Elem<F>>>,
    f_cache: RefCell<HashMap<Mono, Elem<F>>>,
    word_cache: RefCell<HashMap<(Word, Mono), Elem<F>>>,
}

impl<F: Scalar> Default for Action<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Scalar> Action<F> {
    pub fn new() -> Self {
        Action {
            e_cache: RefCell::new(HashMap::new()),
            f_cache: RefCell::new(HashMap::new()),
            word_cache: RefCell::new(HashMap::new()),
        }
    }

    /// K^l ⊳ x = q^{l·deg(x)/2} x on homogeneous x.
    fn k_factor(l: i32, m: &Mono) -> F {
        F::s_pow(l * m.degree())
    }

    fn gen_e(g: Gen) -> Elem<F> {
        match g {
            Gen::A => Elem::c_star().scale(&F::q().neg_ref()),
            Gen::C => Elem::a_star(),
            _ => Elem::zero(),
        }
    }

    fn gen_f(g: Gen) -> Elem<F> {
        match g {
            Gen::AStar => Elem::c(),
            Gen::CStar => Elem::a().scale(&F::q_pow(-1).neg_ref()),
            _ => Elem::zero(),
        }
    }

    /// Twisted derivation: Y ⊳ (g·rest) = (Y⊳g)(K⊳rest) + (K⁻¹⊳g)(Y⊳rest)
    /// for Y ∈ {E, F}, both with coproduct Y ⊗ K + K⁻¹ ⊗ Y.
    fn derivation(&self, m: &Mono, is_e: bool) -> Elem<F> {
        let cache = if is_e { &self.e_cache } else { &self.f_cache };
        if let Some(v) = cache.borrow().get(m) {
            return v.clone();
        }
        let gens = Elem::<F>::mono_factors(m);
        let out = if gens.is_empty() {
            Elem::zero()
        } else {
            let g = gens[0];
            let gm = g.mono();
            let rest = match g {
                Gen::A => Mono::new(m.k - 1, m.m, m.n),
                Gen::AStar => Mono::new(m.k + 1, m.m, m.n),
                Gen::C => Mono::new(m.k, m.m - 1, m.n),
                Gen::CStar => Mono::new(m.k, m.m, m.n - 1),
            };
            let yg = if is_e { Self::gen_e(g) } else { Self::gen_f(g) };
            let mut out = yg.mul(&Elem::mono(rest, Self::k_factor(1, &rest)));
            let yrest = self.derivation(&rest, is_e);
            out.add_scaled(&Elem::mono(gm, Self::k_factor(-1, &gm)).mul(&yrest), &F::one());
            out
        };
        cache.borrow_mut().insert(*m, out.clone());
        out
    }

    fn apply_e(&self, x: &Elem<F>, is_e: bool) -> Elem<F> {
        let mut out = Elem::zero();
        for (m, c) in x.terms() {
            out.add_scaled(&self.derivation(m, is_e), c);
        }
        out
    }

    fn word_on_mono(&self, w: &Word, m: &Mono) -> Elem<F> {
        let key = (*w, *m);
        if let Some(v) = self.word_cache.borrow().get(&key) {
            return v.clone();
        }
        // ε₋^s ⊳ (F^i ⊳ (E^j ⊳ (K^l ⊳ m)))
        let mut x = Elem::mono(*m, Self::k_factor(w.l, m));
        for _ in 0..w.j {
            x = self.apply_e(&x, true);
        }
        for _ in 0..w.i {
            x = self.apply_e(&x, false);
        }
        if w.s == 1 {
            let mut y = Elem::zero();
            for (mm, c) in x.terms() {
                let c = if mm.degree().rem_euclid(2) == 1 { c.neg_ref() } else { c.clone() };
                y.add_term(*mm, c);
            }
            x = y;
        }
        self.word_cache.borrow_mut().insert(key, x.clone());
        x
    }

    pub fn act(&self, f: &Functional<F>, h: &Elem<F>) -> Elem<F> {
        let mut out = Elem::zero();
        for (w, cw) in f.terms() {
            for (m, cm) in h.terms() {
                out.add_scaled(&self.word_on_mono(w, m), &cw.mul_ref(cm));
            }
        }
        out
    }

    /// f(h) = ε(f ⊳ h)
    pub fn eval(&self, f: &Functional<F>, h: &Elem<F>) -> F {
        self.act(f, h).counit()
    }

    /// h ⊲ f = f(h₁) h₂
    pub fn act_right(&self, h: &Elem<F>, f: &Functional<F>) -> Elem<F> {
        let mut out = Elem::zero();
        for ((x, y), c) in coproduct(h).terms() {
            let v = self.eval(f, &Elem::mono(*x, F::one()));
            if !v.is_zero() {
                out.add_term(*y, v.mul_ref(c));
            }
        }
        out
    }
}

/// Coordinates of functionals over the union of their words, as columns.
pub fn functional_matrix<F: Scalar>(fs: &[Functional<F>]) -> (Matrix<F>, Vec<Word>) {
    let mut words: Vec<Word> = fs.iter().flat_map(|f| f.terms().map(|(w, _)| *w)).collect();
    words.sort();
    words.dedup();
    let m = Matrix::from_fn(words.len(), fs.len(), |i, j| fs[j].coeff(&words[i]));
    (m, words)
}
