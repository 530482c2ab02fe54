//! Contractions, Hodge operators S and T, the two scalar products, and the
//! Laplacians on left-invariant forms.
//!
//! Forms are tensors (length 3^k) with coefficients in [`MPoly`], so that the
//! contraction parameters α, β, γ and the volume scales m₊ (symbol `M`), m₋
//! (symbol `N`) stay symbolic.

use crate::algebra::{Elem, Mono};
use crate::calculi::{MINUS, PLUS, Z};
use crate::dual::{Action, Functional};
use crate::error::{Error, Result};
use crate::exterior::{index_word, lambda, pow3, unit, Exterior, BASIS_WORDS};
use crate::linalg::Matrix;
use crate::mpoly::{MPoly, ALPHA, ALPHA_C, BETA, BETA_C, GAMMA, GAMMA_C, M, N, NVARS};
use crate::scalars::Scalar;

pub type PTensor<F> = Vec<MPoly<F>>;

pub fn lift<F: Scalar>(v: &[F]) -> PTensor<F> {
    v.iter().map(|x| MPoly::constant(x.clone())).collect()
}

pub fn apply<F: Scalar>(m: &Matrix<F>, t: &[MPoly<F>]) -> PTensor<F> {
    (0..m.rows())
        .map(|r| {
            let mut acc = MPoly::zero();
            for (c, x) in t.iter().enumerate() {
                let k = m.get(r, c);
                if !k.is_zero() && !x.is_zero() {
                    acc = acc.add(&x.scale(k));
                }
            }
            acc
        })
        .collect()
}

pub fn tensor_scale<F: Scalar>(t: &[MPoly<F>], k: &MPoly<F>) -> PTensor<F> {
    t.iter().map(|x| x.mul(k)).collect()
}

pub fn tensor_add<F: Scalar>(t: &[MPoly<F>], u: &[MPoly<F>]) -> PTensor<F> {
    t.iter().zip(u).map(|(x, y)| x.add(y)).collect()
}

pub fn tensor_sub<F: Scalar>(t: &[MPoly<F>], u: &[MPoly<F>]) -> PTensor<F> {
    t.iter().zip(u).map(|(x, y)| x.sub(y)).collect()
}

pub fn tensor_is_zero<F: Scalar>(t: &[MPoly<F>]) -> bool {
    t.iter().all(|x| x.is_zero())
}

/// The partner index b with g(ω_a, ω_b) possibly nonzero.
fn partner(a: usize) -> usize {
    match a {
        MINUS => PLUS,
        PLUS => MINUS,
        _ => Z,
    }
}

/// A U(1)-invariant contraction: g(ω₋,ω₊) = α, g(ω₊,ω₋) = β, g(ω_z,ω_z) = γ.
#[derive(Clone, Debug, PartialEq)]
pub struct Contraction<F: Scalar> {
    pub alpha: MPoly<F>,
    pub beta: MPoly<F>,
    pub gamma: MPoly<F>,
}

impl<F: Scalar> Contraction<F> {
    pub fn symbolic() -> Self {
        Contraction { alpha: MPoly::var(ALPHA), beta: MPoly::var(BETA), gamma: MPoly::var(GAMMA) }
    }

    pub fn new(alpha: MPoly<F>, beta: MPoly<F>, gamma: MPoly<F>) -> Self {
        Contraction { alpha, beta, gamma }
    }

    /// g(ω_a, ω_b)
    pub fn pair(&self, a: usize, b: usize) -> MPoly<F> {
        match (a, b) {
            (MINUS, PLUS) => self.alpha.clone(),
            (PLUS, MINUS) => self.beta.clone(),
            (Z, Z) => self.gamma.clone(),
            _ => MPoly::zero(),
        }
    }

    pub fn subst(&self, subs: &[(usize, MPoly<F>)]) -> Self {
        Contraction { alpha: self.alpha.subst_all(subs), beta: self.beta.subst_all(subs), gamma: self.gamma.subst_all(subs) }
    }

    /// g ∘ σ as a 9-vector: entry 3a+b is g(σ(ω_a⊗ω_b)).
    pub fn composed(&self, sigma: &Matrix<F>) -> PTensor<F> {
        (0..9)
            .map(|col| {
                let mut acc = MPoly::zero();
                for row in 0..9 {
                    let k = sigma.get(row, col);
                    if !k.is_zero() {
                        acc = acc.add(&self.pair(row / 3, row % 3).scale(k));
                    }
                }
                acc
            })
            .collect()
    }
}

/// Parallel contraction of the k-tensor t against the first k slots of the
/// n-tensor u; returns an (n-k)-tensor.
pub fn contract<F: Scalar>(g: &Contraction<F>, k: usize, t: &[MPoly<F>], n: usize, u: &[MPoly<F>]) -> PTensor<F> {
    let rest = n - k;
    let mut out = vec![MPoly::zero(); pow3(rest)];
    for (wi, tw) in t.iter().enumerate() {
        if tw.is_zero() {
            continue;
        }
        let w = index_word(wi, k);
        let mut factor = tw.clone();
        let mut head = 0;
        for &a in &w {
            factor = factor.mul(&g.pair(a, partner(a)));
            head = 3 * head + partner(a);
        }
        if factor.is_zero() {
            continue;
        }
        for (r, o) in out.iter_mut().enumerate() {
            let x = &u[head * pow3(rest) + r];
            if !x.is_zero() {
                *o = o.add(&factor.mul(x));
            }
        }
    }
    out
}

/// Which operator fixes the scale of the volume.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    S,
    T,
}

/// Hodge data over one exterior algebra Γ_{σ^±} with a symbolic volume scale.
pub struct Hodge<F: Scalar> {
    pub ext: Exterior<F>,
    pub g: Contraction<F>,
    /// W[k]_{ij}: θ-coefficient of (basis_i of degree k)* ∧ (basis_j of degree 3-k)
    pairing: [Matrix<F>; 4],
}

impl<F: Scalar> Hodge<F> {
    pub fn new(id: u8, sign: i8, g: Contraction<F>) -> Result<Self> {
        Self::from_exterior(Exterior::new(id, sign)?, g)
    }

    pub fn from_exterior(ext: Exterior<F>, g: Contraction<F>) -> Result<Self> {
        let mut pairing: [Matrix<F>; 4] = Default::default();
        for (k, w) in pairing.iter_mut().enumerate() {
            let n = ext.dim(k);
            let mut m = Matrix::zeros(n, n);
            for i in 0..n {
                let si = ext.star_tensor(k, &ext.basis_tensor(k, i))?;
                for j in 0..n {
                    let top = ext
                        .wedge_tensor(k, &si, 3 - k, &ext.basis_tensor(3 - k, j))
                        .ok_or_else(|| Error::Invalid("wedge degree".into()))?;
                    m.set(i, j, ext.coords(3, &top)?[0].clone());
                }
            }
            *w = m;
        }
        Ok(Hodge { ext, g, pairing })
    }

    pub fn sign(&self) -> i8 {
        self.ext.sign
    }

    /// The symbol carrying the volume scale m_±.
    pub fn scale_var(&self) -> usize {
        if self.ext.sign > 0 {
            M
        } else {
            N
        }
    }

    pub fn scale(&self) -> MPoly<F> {
        MPoly::var(self.scale_var())
    }

    pub fn lambda(&self, k: usize) -> F {
        self.ext.lambda(k)
    }

    pub fn lambda_opp(&self, k: usize) -> F {
        lambda(-self.ext.sign, k)
    }

    pub fn theta(&self) -> PTensor<F> {
        lift(&self.ext.volume())
    }

    /// μ = m θ
    pub fn mu(&self) -> PTensor<F> {
        tensor_scale(&self.theta(), &self.scale())
    }

    /// ω_{a1}∧…∧ω_{ak} as a tensor.
    pub fn word(&self, w: &[usize]) -> PTensor<F> {
        lift(&self.ext.wedge_word(w))
    }

    pub fn basis(&self, k: usize, i: usize) -> PTensor<F> {
        lift(&self.ext.basis_tensor(k, i))
    }

    /// Contraction of forms of degrees k ≤ n.
    pub fn contract(&self, k: usize, t: &[MPoly<F>], n: usize, u: &[MPoly<F>]) -> PTensor<F> {
        contract(&self.g, k, t, n, u)
    }

    /// g(t, u) for two forms of the same degree.
    pub fn g_scalar(&self, k: usize, t: &[MPoly<F>], u: &[MPoly<F>]) -> MPoly<F> {
        self.contract(k, t, k, u).swap_remove(0)
    }

    pub fn g_theta_theta(&self) -> MPoly<F> {
        let th = self.theta();
        self.g_scalar(3, &th, &th)
    }

    /// det_σ g = g(θ,θ)/λ₍₃₎
    pub fn det(&self) -> MPoly<F> {
        self.g_theta_theta().scale(&self.lambda(3).inv().expect("λ ≠ 0"))
    }

    /// Canonical coordinates of a degree-k form.
    pub fn coords(&self, k: usize, t: &[MPoly<F>]) -> Result<PTensor<F>> {
        let c = apply(self.ext.projector(k), t);
        let back = apply(self.ext.basis_matrix(k), &c);
        if back != t {
            return Err(Error::NotInSpan(format!("degree {k} form outside the range of the antisymmetrizer")));
        }
        Ok(c)
    }

    pub fn from_coords(&self, k: usize, c: &[MPoly<F>]) -> PTensor<F> {
        apply(self.ext.basis_matrix(k), c)
    }

    /// Graded star with formal conjugation of the coefficients.
    pub fn star(&self, k: usize, t: &[MPoly<F>]) -> Result<PTensor<F>> {
        let c = self.coords(k, t)?;
        let mut out = vec![MPoly::zero(); pow3(k)];
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let img = lift(&self.ext.star_tensor(k, &self.ext.basis_tensor(k, i))?);
            out = tensor_add(&out, &tensor_scale(&img, &ci.conj()));
        }
        Ok(out)
    }

    pub fn wedge(&self, k: usize, t: &[MPoly<F>], l: usize, u: &[MPoly<F>]) -> Result<PTensor<F>> {
        if k + l > 3 {
            return Err(Error::Invalid(format!("wedge of degrees {k} and {l}")));
        }
        let tu: Vec<MPoly<F>> = t.iter().flat_map(|x| u.iter().map(move |y| x.mul(y))).collect();
        let norm = self.lambda(k).mul_ref(&self.lambda(l)).inv()?;
        Ok(apply(&self.ext.antisym(k + l), &tu).iter().map(|x| x.scale(&norm)).collect())
    }

    /// θ-coefficient of a 3-form.
    pub fn top(&self, t: &[MPoly<F>]) -> Result<MPoly<F>> {
        Ok(self.coords(3, t)?.swap_remove(0))
    }

    /// S(ω) = g(ω, μ)/λ^∓₍ₖ₎
    pub fn hodge_s(&self, k: usize, t: &[MPoly<F>]) -> PTensor<F> {
        let inv = self.lambda_opp(k).inv().expect("λ ≠ 0");
        self.contract(k, t, 3, &self.mu()).iter().map(|x| x.scale(&inv)).collect()
    }

    fn integrate(&self, top: MPoly<F>) -> Result<MPoly<F>> {
        let mut e = [0u8; NVARS];
        e[self.scale_var()] = 1;
        top.div_monomial(&e, &F::one())
            .ok_or_else(|| Error::Invalid("top form not proportional to the volume scale".into()))
    }

    /// {x, y} = ∫_μ x* ∧ S(y) on left-invariant forms.
    pub fn scal_s(&self, k: usize, x: &[MPoly<F>], y: &[MPoly<F>]) -> Result<MPoly<F>> {
        let w = self.wedge(k, &self.star(k, x)?, 3 - k, &self.hodge_s(k, y))?;
        self.integrate(self.top(&w)?)
    }

    /// ⟨x, y⟩ = g(x*, y)/λ₍ₖ₎ on left-invariant forms.
    pub fn scal_t(&self, k: usize, x: &[MPoly<F>], y: &[MPoly<F>]) -> Result<MPoly<F>> {
        let inv = self.lambda(k).inv()?;
        Ok(self.g_scalar(k, &self.star(k, x)?, y).scale(&inv))
    }

    /// The operator T defined by ⟨ω_i, y⟩ = ∫_μ ω_i* ∧ T(y) over the basis ω_i.
    pub fn hodge_t(&self, k: usize, y: &[MPoly<F>]) -> Result<PTensor<F>> {
        let n = self.ext.dim(k);
        let rhs: Vec<MPoly<F>> = (0..n).map(|i| self.scal_t(k, &self.basis(k, i), y)).collect::<Result<_>>()?;
        let winv = self.pairing[k].inverse()?;
        let coords = tensor_scale(&apply(&winv, &rhs), &self.scale());
        Ok(self.from_coords(3 - k, &coords))
    }

    /// ∫_μ x* ∧ y for forms of complementary degree.
    pub fn integral_pairing(&self, k: usize, x: &[MPoly<F>], y: &[MPoly<F>]) -> Result<MPoly<F>> {
        let w = self.wedge(k, &self.star(k, x)?, 3 - k, y)?;
        self.integrate(self.top(&w)?)
    }

    pub fn apply_op(&self, fam: Family, k: usize, t: &[MPoly<F>]) -> Result<PTensor<F>> {
        match fam {
            Family::S => Ok(self.hodge_s(k, t)),
            Family::T => self.hodge_t(k, t),
        }
    }

    pub fn scal(&self, fam: Family, k: usize, x: &[MPoly<F>], y: &[MPoly<F>]) -> Result<MPoly<F>> {
        match fam {
            Family::S => self.scal_s(k, x, y),
            Family::T => self.scal_t(k, x, y),
        }
    }

    /// The value that m² times `p` must equal: the normalization fixes
    /// op²(1) = sgn(det). Returns (c, d) with the normalization reading
    /// m²·d = sgn(det)·c.
    pub fn normalization(&self, fam: Family) -> (F, MPoly<F>) {
        match fam {
            // S(μ) = m² g(θ,θ)/λ^∓₍₃₎
            Family::S => (self.lambda_opp(3), self.g_theta_theta()),
            // T(μ) = m² det
            Family::T => (self.lambda(3), self.g_theta_theta()),
        }
    }

    /// Coefficient matrix of the operator on degree k in canonical bases:
    /// column j holds the coordinates of op(basis_j).
    pub fn op_matrix(&self, fam: Family, k: usize) -> Result<Vec<PTensor<F>>> {
        (0..self.ext.dim(k)).map(|j| self.coords(3 - k, &self.apply_op(fam, k, &self.basis(k, j))?)).collect()
    }
}

/// ω_a as a 1-tensor.
pub fn one_form<F: Scalar>(a: usize) -> PTensor<F> {
    lift(&unit::<F>(1, &[a]))
}

/// The unit 0-form.
pub fn unit_form<F: Scalar>() -> PTensor<F> {
    vec![MPoly::one()]
}

/// Label of a canonical basis form.
pub fn basis_label(k: usize, i: usize) -> String {
    const L: [&str; 3] = ["w-", "w+", "wz"];
    match k {
        0 => "1".into(),
        _ => BASIS_WORDS[k][i].iter().map(|&a| L[a]).collect::<Vec<_>>().join("^"),
    }
}

/// Replace the formal conjugates by the symbols themselves (all symbols real).
pub fn realify<F: Scalar>(p: &MPoly<F>) -> MPoly<F> {
    p.subst_all(&[(ALPHA_C, MPoly::var(ALPHA)), (BETA_C, MPoly::var(BETA)), (GAMMA_C, MPoly::var(GAMMA))])
}

/// Polynomial conditions for op-symmetry (op² scalar on one-forms) and
/// op-reality (op commutes with * on one- and two-forms).
pub struct Constraints<F: Scalar> {
    /// diagonal of op² on ω₋, ω₊, ω_z
    pub diag: [MPoly<F>; 3],
    pub symmetry: Vec<MPoly<F>>,
    pub reality: Vec<MPoly<F>>,
}

impl<F: Scalar> Hodge<F> {
    pub fn square_on_one_forms(&self, fam: Family) -> Result<Vec<PTensor<F>>> {
        (0..3)
            .map(|a| {
                let once = self.apply_op(fam, 1, &one_form(a))?;
                self.apply_op(fam, 2, &once)
            })
            .collect()
    }

    pub fn constraints(&self, fam: Family) -> Result<Constraints<F>> {
        let sq = self.square_on_one_forms(fam)?;
        let mut symmetry = Vec::new();
        for (a, col) in sq.iter().enumerate() {
            for (b, x) in col.iter().enumerate() {
                if a != b && !x.is_zero() {
                    symmetry.push(x.clone());
                }
            }
        }
        let diag = [sq[0][0].clone(), sq[1][1].clone(), sq[2][2].clone()];
        symmetry.push(diag[0].sub(&diag[1]));
        symmetry.push(diag[0].sub(&diag[2]));
        let mut reality = Vec::new();
        for k in 1..3 {
            for i in 0..self.ext.dim(k) {
                let x = self.basis(k, i);
                let lhs = self.apply_op(fam, k, &self.star(k, &x)?)?;
                let rhs = self.star(3 - k, &self.apply_op(fam, k, &x)?)?;
                reality.extend(self.coords(3 - k, &tensor_sub(&lhs, &rhs))?.into_iter().filter(|p| !p.is_zero()));
            }
        }
        Ok(Constraints { diag, symmetry, reality })
    }

    /// Whether a contraction, given with real parameters in the symbol
    /// slots, satisfies all the conditions.
    pub fn satisfies(&self, fam: Family, g: &Contraction<F>) -> Result<bool> {
        let h = Hodge { ext: self.ext.clone(), g: g.clone(), pairing: self.pairing.clone() };
        let c = h.constraints(fam)?;
        Ok(c.symmetry.iter().chain(&c.reality).all(|p| realify(p).is_zero()))
    }
}

/// One component of a constraint set: α = u·ᾱ (so α ∈ √u·ℝ), β = r·ᾱ,
/// γ ∈ ℝ, and either γ free or γ² = k·|α|².
#[derive(Clone, Debug, PartialEq)]
pub struct Branch<F: Scalar> {
    pub u: F,
    /// `None` when a description leaves β partly free, see `beta_phase`
    pub r: Option<F>,
    /// β = v·β̄ when `r` is absent
    pub beta_phase: Option<F>,
    pub gamma_sq: Option<F>,
}

impl<F: Scalar> Branch<F> {
    pub fn linear(u: F, r: F) -> Self {
        Branch { u, r: Some(r), beta_phase: None, gamma_sq: None }
    }

    /// Representative contraction with real parameters: α = p·A, γ = G or ±√k·A.
    pub fn parametrize(&self, gamma_sign: i8) -> Result<Contraction<F>> {
        let p = self.u.sqrt().ok_or_else(|| Error::Invalid("phase without square root".into()))?;
        let a = MPoly::var(ALPHA);
        let alpha = a.scale(&p);
        let r = self.r.clone().ok_or_else(|| Error::Invalid("β not determined".into()))?;
        let beta = a.scale(&r.mul_ref(&p.conj()));
        let gamma = match &self.gamma_sq {
            None => MPoly::var(GAMMA),
            Some(k) => {
                let rk = k.sqrt().ok_or_else(|| Error::Invalid("γ² ratio without square root".into()))?;
                let rk = if gamma_sign < 0 { rk.neg_ref() } else { rk };
                a.scale(&rk)
            }
        };
        Ok(Contraction::new(alpha, beta, gamma))
    }

    /// Whether `other`'s (possibly partial) description contains this branch.
    pub fn within(&self, other: &Branch<F>) -> bool {
        if self.u != other.u || self.gamma_sq != other.gamma_sq {
            return false;
        }
        match (&self.r, &other.r) {
            (Some(a), Some(b)) => a == b,
            (Some(r), None) => match &other.beta_phase {
                // β = rᾱ, ᾱ = ū α … β/β̄ = r ᾱ/(r̄ α) = (r/r̄)·ū
                Some(v) => r.mul_ref(&r.conj().inv().expect("r ≠ 0")).mul_ref(&self.u.conj()) == *v,
                None => true,
            },
            _ => false,
        }
    }
}

fn exps(pairs: &[(usize, u8)]) -> [u8; NVARS] {
    let mut e = [0u8; NVARS];
    for &(v, k) in pairs {
        e[v] = k;
    }
    e
}

fn coeff<F: Scalar>(p: &MPoly<F>, pairs: &[(usize, u8)]) -> F {
    let e = exps(pairs);
    p.terms().find(|(x, _)| **x == e).map(|(_, c)| c.clone()).unwrap_or_else(F::zero)
}

fn quadratic_roots<F: Scalar>(c: &[F; 3]) -> Result<Vec<F>> {
    let [c0, c1, c2] = c;
    if c2.is_zero() {
        if c1.is_zero() {
            return Err(Error::Invalid("phase equation degenerate".into()));
        }
        return Ok(vec![c0.neg_ref().div_ref(c1)?]);
    }
    let disc = c1.mul_ref(c1).sub_ref(&F::from_i64(4).mul_ref(c2).mul_ref(c0));
    let sq = disc.sqrt().ok_or_else(|| Error::Invalid("phase equation not split".into()))?;
    let two_a = F::from_i64(2).mul_ref(c2);
    let mut out = vec![c1.neg_ref().add_ref(&sq).div_ref(&two_a)?];
    if !sq.is_zero() {
        out.push(c1.neg_ref().sub_ref(&sq).div_ref(&two_a)?);
    }
    Ok(out)
}

/// Solve the symmetry and reality conditions of one family exactly.
///
/// Reality on ω₋ is linear in (ᾱ, β) and fixes β = rᾱ; reality on ω_z makes
/// γ real. Substituting α = uᾱ turns the symmetry conditions into a
/// quadratic in u and one relation between γ² and |α|².
pub fn solve_class<F: Scalar>(h: &Hodge<F>, fam: Family) -> Result<Vec<Branch<F>>> {
    let cons = h.constraints(fam)?;
    let sv = h.scale_var();
    let d = coords_of_star_defect(h, fam)?;
    // either c₁ᾱ + c₂β or its conjugate c₁α + c₂β̄
    let mut r = None;
    for (x, y, flip) in [(ALPHA_C, BETA, false), (ALPHA, BETA_C, true)] {
        let c1 = coeff(&d, &[(x, 1), (sv, 1)]);
        let c2 = coeff(&d, &[(y, 1), (sv, 1)]);
        let lin = MPoly::var(x).scale(&c1).add(&MPoly::var(y).scale(&c2)).mul(&MPoly::var(sv));
        if !c2.is_zero() && d == lin {
            let v = c1.neg_ref().div_ref(&c2)?;
            r = Some(if flip { v.conj() } else { v });
        }
    }
    let r = r.ok_or_else(|| Error::Invalid("reality condition on ω₋ is not of the form β = rᾱ".into()))?;
    // u lives in the β slot once β is eliminated
    let u = MPoly::var(BETA);
    let subs = [
        (BETA, MPoly::var(ALPHA_C).scale(&r)),
        (BETA_C, MPoly::var(ALPHA).scale(&r.conj())),
        (GAMMA_C, MPoly::var(GAMMA)),
    ];
    let reduce = |p: &MPoly<F>| p.subst_all(&subs).subst(ALPHA, &u.mul(&MPoly::var(ALPHA_C)));
    let dm = reduce(&cons.diag[0]);
    let dp = reduce(&cons.diag[1]);
    let dz = reduce(&cons.diag[2]);
    // shape: Σ_j c_j u^j ᾱ² γ m² + e γ³ m²
    let split = |p: &MPoly<F>| -> Result<([F; 3], F)> {
        let mut cs = [F::zero(), F::zero(), F::zero()];
        let mut e = F::zero();
        for (x, c) in p.terms() {
            if *x == exps(&[(GAMMA, 3), (sv, 2)]) {
                e = c.clone();
                continue;
            }
            let j = x[BETA] as usize;
            if j > 2 || *x != exps(&[(BETA, x[BETA]), (ALPHA_C, 2), (GAMMA, 1), (sv, 2)]) {
                return Err(Error::Invalid(format!("unexpected symmetry condition {}", p.render())));
            }
            cs[j] = c.clone();
        }
        Ok((cs, e))
    };
    let (c1, e1) = split(&dm.sub(&dp))?;
    let (c2, e2) = split(&dm.sub(&dz))?;
    let roots = if c1.iter().all(|x| x.is_zero()) && e1.is_zero() {
        if !e2.is_zero() {
            return Err(Error::Invalid("phase undetermined".into()));
        }
        quadratic_roots(&c2)?
    } else {
        if !e1.is_zero() {
            return Err(Error::Invalid("unexpected γ³ term".into()));
        }
        quadratic_roots(&c1)?
    };
    let mut out = Vec::new();
    for u0 in roots {
        if !u0.mul_ref(&u0.conj()).is_one() {
            continue;
        }
        let a = c2[0].add_ref(&c2[1].mul_ref(&u0)).add_ref(&c2[2].mul_ref(&u0).mul_ref(&u0));
        let branch = if e2.is_zero() {
            if !a.is_zero() {
                continue;
            }
            Branch::linear(u0.clone(), r.clone())
        } else {
            // a ᾱ² + e γ² = 0 with ᾱ² = ū|α|²
            let k = a.neg_ref().mul_ref(&u0.conj()).div_ref(&e2)?;
            if k.is_zero() || !k.is_real() || k.sign()? < 0 {
                continue;
            }
            Branch { u: u0.clone(), r: Some(r.clone()), beta_phase: None, gamma_sq: Some(k) }
        };
        // every condition, including two-form reality, must hold on the branch
        let mut ok = true;
        for gs in [1i8, -1] {
            ok &= h.satisfies(fam, &branch.parametrize(gs)?)?;
            if branch.gamma_sq.is_none() {
                break;
            }
        }
        if ok {
            out.push(branch);
        }
    }
    Ok(out)
}

/// The ω₋ component of op(ω₋*) - op(ω₋)* in canonical coordinates, with
/// the γ-reality already visible in the ω_z component.
fn coords_of_star_defect<F: Scalar>(h: &Hodge<F>, fam: Family) -> Result<MPoly<F>> {
    let x = one_form::<F>(MINUS);
    let lhs = h.apply_op(fam, 1, &h.star(1, &x)?)?;
    let rhs = h.star(2, &h.apply_op(fam, 1, &x)?)?;
    let c = h.coords(2, &tensor_sub(&lhs, &rhs))?;
    let nz: Vec<&MPoly<F>> = c.iter().filter(|p| !p.is_zero()).collect();
    match nz.as_slice() {
        [p] => Ok((*p).clone()),
        _ => Err(Error::Invalid("reality defect on ω₋ spreads over several forms".into())),
    }
}

/// Basis of {(α, β, γ) : g∘σ = g}.
pub fn frak_g<F: Scalar>(sigma: &Matrix<F>) -> Vec<Vec<F>> {
    let g = Contraction::<F>::symbolic();
    let diff: Vec<MPoly<F>> = g.composed(sigma).iter().enumerate().map(|(i, x)| x.sub(&g.pair(i / 3, i % 3))).collect();
    let m = Matrix::from_fn(9, 3, |i, j| coeff(&diff[i], &[([ALPHA, BETA, GAMMA][j], 1)]));
    m.nullspace()
}

/// Complex-linear closure of a constraint set when it is a single linear
/// branch: span{(1, r/u, 0), (0, 0, 1)}.
pub fn linear_closure<F: Scalar>(branches: &[Branch<F>]) -> Option<Vec<Vec<F>>> {
    match branches {
        [b] if b.gamma_sq.is_none() => {
            let r = b.r.clone()?;
            Some(vec![vec![F::one(), r.div_ref(&b.u).ok()?, F::zero()], vec![F::zero(), F::zero(), F::one()]])
        }
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryClass {
    pub in_gs: bool,
    pub in_gt: bool,
    pub in_frak_g: bool,
}

/// Classify a contraction whose symbols are real parameters.
pub fn classify<F: Scalar>(h: &Hodge<F>, g: &Contraction<F>) -> Result<SymmetryClass> {
    let diff = g.composed(&h.ext.sigma);
    let in_frak_g = diff.iter().enumerate().all(|(i, x)| realify(&x.sub(&g.pair(i / 3, i % 3))).is_zero());
    Ok(SymmetryClass { in_gs: h.satisfies(Family::S, g)?, in_gt: h.satisfies(Family::T, g)?, in_frak_g })
}

/// □ = Σ w_ab X_a X_b with w_ab = {ω_a*, ω_b} (S) or ⟨ω_a*, ω_b⟩ (T); the
/// overall sgn(det) is applied by [`Laplacian::signed`].
pub struct Laplacian<F: Scalar> {
    pub terms: Vec<(MPoly<F>, Functional<F>)>,
}

impl<F: Scalar> Hodge<F> {
    pub fn laplacian(&self, fam: Family, x: &[Functional<F>; 3]) -> Result<Laplacian<F>> {
        let mut terms = Vec::new();
        for a in 0..3 {
            let wa = self.star(1, &one_form(a))?;
            for (b, xb) in x.iter().enumerate() {
                let w = self.scal(fam, 1, &wa, &one_form(b))?;
                if !w.is_zero() {
                    terms.push((w, x[a].mul(xb)));
                }
            }
        }
        Ok(Laplacian { terms })
    }
}

impl<F: Scalar> Laplacian<F> {
    pub fn signed(self, sgn: i8) -> Self {
        if sgn >= 0 {
            return self;
        }
        Laplacian { terms: self.terms.into_iter().map(|(w, f)| (w.neg(), f)).collect() }
    }

    pub fn subst(&self, subs: &[(usize, MPoly<F>)]) -> Self {
        Laplacian { terms: self.terms.iter().map(|(w, f)| (realify(&w.subst_all(subs)), f.clone())).collect() }
    }

    /// □h, requiring constant weights.
    pub fn apply(&self, act: &Action<F>, h: &Elem<F>) -> Result<Elem<F>> {
        let mut out = Elem::zero();
        for (w, f) in &self.terms {
            let c = w.as_constant().ok_or_else(|| Error::Invalid("Laplacian weight is not constant".into()))?;
            out = out.add(&act.act(f, h).scale(&c));
        }
        Ok(out)
    }

    /// Matrix on span{basis}, columns holding □(basis_j); fails if the span
    /// is not invariant.
    pub fn matrix(&self, act: &Action<F>, basis: &[Elem<F>]) -> Result<Matrix<F>> {
        let n = basis.len();
        let mut m = Matrix::zeros(n, n);
        let monos: Vec<Mono> = basis
            .iter()
            .map(|b| match b.terms().collect::<Vec<_>>().as_slice() {
                [(m, _)] => Ok(**m),
                _ => Err(Error::Invalid("basis elements must be monomials".into())),
            })
            .collect::<Result<_>>()?;
        for (j, b) in basis.iter().enumerate() {
            let img = self.apply(act, b)?;
            let mut rest = img.clone();
            for (i, (mono, bi)) in monos.iter().zip(basis).enumerate() {
                let c = img.coeff(mono).div_ref(&bi.coeff(mono))?;
                m.set(i, j, c.clone());
                rest = rest.sub(&bi.scale(&c));
            }
            if !rest.is_zero() {
                return Err(Error::NotInSpan("Laplacian leaves the span".into()));
            }
        }
        Ok(m)
    }
}
