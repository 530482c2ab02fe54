//! The standard Podleś sphere as the degree-zero part L₀ of A(SU_q(2)),
//! its 2d calculus in frame-bundle form, the sphere Hodge operators Š and
//! the Laplacian they produce.
//!
//! Sphere forms live inside the ambient calculus: f, x₋ω₋ + x₊ω₊ and
//! t ω₋∧ω₊ with x₋ ∈ L₋₂, x₊ ∈ L₊₂ and f, t ∈ L₀.

use crate::algebra::{Elem, Mono};
use crate::calculi::{MINUS, PLUS, Z};
use crate::dual::Functional;
use crate::error::{Error, Result};
use crate::exterior::Exterior;
use crate::fodc::{Calculus, OneForm};
use crate::hodge::{contract, lift, realify, solve_class, Branch, Contraction, Family, Hodge, PTensor};
use crate::linalg::Matrix;
use crate::mpoly::{MPoly, M, N};
use crate::scalars::Scalar;

/// (B₋, B₊, B₀)
pub fn generators<F: Scalar>() -> [Elem<F>; 3] {
    let q2 = F::q_pow(2);
    let bm = Elem::a().mul(&Elem::c_star()).neg();
    let bp = Elem::c().mul(&Elem::a_star()).scale(&F::q());
    let b0 = Elem::scalar(q2.div_ref(&F::one().add_ref(&q2)).expect("1 + q² ≠ 0")).sub(&Elem::c().mul(&Elem::c_star()).scale(&q2));
    [bm, bp, b0]
}

/// lhs - rhs of the four defining relations, each expected to vanish.
pub fn relations<F: Scalar>() -> Vec<(&'static str, Elem<F>)> {
    let [bm, bp, b0] = generators::<F>();
    let q = F::q();
    let q2 = F::q_pow(2);
    let k = F::one().add_ref(&F::q_pow(-2));
    let one = Elem::one();
    let b00 = b0.mul(&b0);
    vec![
        (
            "B-B+ + q^2 B+B-",
            bm.mul(&bp).add(&bp.mul(&bm).scale(&q2)).scale(&k).sub(&b00.scale(&k.mul_ref(&k)).sub(&one).scale(&q)),
        ),
        (
            "B-B+ - B+B-",
            bm.mul(&bp).sub(&bp.mul(&bm)).scale(&q).add(&b00.scale(&F::q_pow(-2).sub_ref(&q2))).sub(&b0.scale(&F::one().sub_ref(&q2))),
        ),
        ("B-B0 - q^2 B0B-", bm.mul(&b0).sub(&b0.mul(&bm).scale(&q2)).scale(&k).sub(&bm.scale(&F::one().sub_ref(&q2)))),
        ("B0B+ - q^2 B+B0", b0.mul(&bp).sub(&bp.mul(&b0).scale(&q2)).scale(&k).sub(&bp.scale(&F::one().sub_ref(&q2)))),
    ]
}

/// Normal monomials B₋^i B₊^j B₀^k with i + j + k ≤ d.
pub fn monomials<F: Scalar>(d: u32) -> Vec<((u32, u32, u32), Elem<F>)> {
    let [bm, bp, b0] = generators::<F>();
    let mut out = Vec::new();
    for t in 0..=d {
        for i in 0..=t {
            for j in 0..=t - i {
                let k = t - i - j;
                out.push(((i, j, k), bm.pow(i).mul(&bp.pow(j)).mul(&b0.pow(k))));
            }
        }
    }
    out
}

fn poly_rem<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].inv().expect("nonzero leading coefficient");
    while r.len() > db && !r.is_empty() {
        let k = r.last().expect("nonempty").mul_ref(&lead);
        let shift = r.len() - 1 - db;
        for (i, bi) in b.iter().enumerate() {
            let v = r[shift + i].sub_ref(&k.mul_ref(bi));
            r[shift + i] = v;
        }
        r.pop();
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    r
}

fn poly_gcd<F: Scalar>(mut a: Vec<F>, mut b: Vec<F>) -> Vec<F> {
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Dimension of the calculus induced on U(1): ker ε / π(Q) in C[z, z⁻¹].
///
/// π(Q) is an ideal of a principal ideal domain; its generator p divides
/// z - 1 times a unit, and the quotient has dimension deg p - 1.
pub fn projectability<F: Scalar>(id: u8) -> Result<usize> {
    let mut g: Vec<F> = Vec::new();
    for x in crate::calculi::ideal::<F>(id)? {
        let img = x.u1_project();
        let Some(lo) = img.keys().next().copied() else { continue };
        let hi = *img.keys().last().expect("nonempty");
        let mut p = vec![F::zero(); (hi - lo + 1) as usize];
        for (k, c) in img {
            p[(k - lo) as usize] = c;
        }
        while p.first().is_some_and(|x| x.is_zero()) {
            p.remove(0);
        }
        g = if g.is_empty() { p } else { poly_gcd(g, p) };
    }
    if g.is_empty() {
        return Err(Error::Invalid("ideal projects to zero".into()));
    }
    // π(Q) ⊂ ker ε = (z - 1)
    let at_one = g.iter().fold(F::zero(), |acc, c| acc.add_ref(c));
    if !at_one.is_zero() {
        return Err(Error::Invalid("projected ideal leaves ker ε".into()));
    }
    Ok(g.len() - 2)
}

pub fn is_projectable(id: u8) -> Result<bool> {
    Ok(projectability::<crate::scalars::RatFunc>(id)? == 1)
}

/// Two-forms with left coefficients in canonical coordinates
/// (ω₋∧ω₊, ω₊∧ω_z, ω_z∧ω₋).
pub type TwoForm<F> = [Elem<F>; 3];

/// The exterior derivative up to degree two over one exterior algebra.
pub struct Complex<F: Scalar> {
    pub cal: Calculus<F>,
    pub ext: Exterior<F>,
    /// coordinates of ω_c∧ω_b at [c][b]
    wedge11: [[Vec<F>; 3]; 3],
    dbasis: [TwoForm<F>; 3],
}

impl<F: Scalar> Complex<F> {
    pub fn new(id: u8, sign: i8) -> Result<Self> {
        let cal = Calculus::new(id)?;
        let ext = Exterior::new(id, sign)?;
        let mut wedge11: [[Vec<F>; 3]; 3] = Default::default();
        for (c, row) in wedge11.iter_mut().enumerate() {
            for (b, x) in row.iter_mut().enumerate() {
                *x = ext.coords(2, &ext.wedge_word(&[c, b]))?;
            }
        }
        let mut cx = Complex { cal, ext, wedge11, dbasis: Default::default() };
        for a in 0..3 {
            let mut acc: TwoForm<F> = Default::default();
            for (x, y) in cx.cal.witnesses(a).to_vec() {
                acc = add2(&acc, &cx.wedge(&cx.cal.d(&x), &cx.cal.d(&y)));
            }
            cx.dbasis[a] = acc;
        }
        Ok(cx)
    }

    pub fn wedge(&self, x: &OneForm<F>, y: &OneForm<F>) -> TwoForm<F> {
        let mut out: TwoForm<F> = Default::default();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                for (c, r) in self.cal.commute_right(a, yb).iter().enumerate() {
                    if r.is_zero() {
                        continue;
                    }
                    let coef = xa.mul(r);
                    for (i, k) in self.wedge11[c][b].iter().enumerate() {
                        if !k.is_zero() {
                            out[i] = out[i].add(&coef.scale(k));
                        }
                    }
                }
            }
        }
        out
    }

    /// dω_a
    pub fn d_basis(&self, a: usize) -> &TwoForm<F> {
        &self.dbasis[a]
    }

    /// d(Σ x_a ω_a) = Σ dx_a ∧ ω_a + x_a dω_a
    pub fn d1(&self, x: &OneForm<F>) -> TwoForm<F> {
        let mut out: TwoForm<F> = Default::default();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            let mut wa: OneForm<F> = Default::default();
            wa[a] = Elem::one();
            out = add2(&out, &self.wedge(&self.cal.d(xa), &wa));
            let dw = &self.dbasis[a];
            out = add2(&out, &[xa.mul(&dw[0]), xa.mul(&dw[1]), xa.mul(&dw[2])]);
        }
        out
    }
}

fn add2<F: Scalar>(x: &TwoForm<F>, y: &TwoForm<F>) -> TwoForm<F> {
    [x[0].add(&y[0]), x[1].add(&y[1]), x[2].add(&y[2])]
}

/// ω₀ = q⁻¹B₋dB₊ + qB₊dB₋ - (1 + q⁻²)B₀dB₀
pub fn omega0<F: Scalar>(cal: &Calculus<F>) -> Result<OneForm<F>> {
    if !is_projectable(cal.id)? {
        return Err(Error::Invalid(format!("calculus {} is not projectable", cal.id)));
    }
    let [bm, bp, b0] = generators::<F>();
    let terms = [
        (F::q_pow(-1), &bm, &bp),
        (F::q(), &bp, &bm),
        (F::one().add_ref(&F::q_pow(-2)).neg_ref(), &b0, &b0),
    ];
    let mut out: OneForm<F> = Default::default();
    for (k, x, y) in terms {
        let dy = cal.d(y);
        for a in 0..3 {
            out[a] = out[a].add(&x.mul(&dy[a]).scale(&k));
        }
    }
    Ok(out)
}

/// A form in the frame-bundle decomposition.
#[derive(Clone, Debug, PartialEq)]
pub enum SphereForm<F: Scalar> {
    Zero(Elem<F>),
    /// x₋ω₋ + x₊ω₊
    One(Elem<F>, Elem<F>),
    /// t ω₋∧ω₊
    Two(Elem<F>),
}

pub fn decompose_one<F: Scalar>(x: &OneForm<F>) -> Result<SphereForm<F>> {
    if !x[Z].is_zero() {
        return Err(Error::Invalid("one-form has an ω_z component".into()));
    }
    if !x[MINUS].is_degree(-2) || !x[PLUS].is_degree(2) {
        return Err(Error::Invalid("coefficients outside L₋₂ ⊕ L₊₂".into()));
    }
    Ok(SphereForm::One(x[MINUS].clone(), x[PLUS].clone()))
}

pub fn decompose_two<F: Scalar>(t: &TwoForm<F>) -> Result<SphereForm<F>> {
    if !t[1].is_zero() || !t[2].is_zero() {
        return Err(Error::Invalid("two-form has an ω_z component".into()));
    }
    if !t[0].is_degree(0) {
        return Err(Error::Invalid("top coefficient outside L₀".into()));
    }
    Ok(SphereForm::Two(t[0].clone()))
}

pub fn decompose_zero<F: Scalar>(f: &Elem<F>) -> Result<SphereForm<F>> {
    if !f.is_degree(0) {
        return Err(Error::Invalid("function outside L₀".into()));
    }
    Ok(SphereForm::Zero(f.clone()))
}

/// Š on left-invariant sphere forms for one exterior algebra.
pub struct SphereHodge<F: Scalar> {
    pub ext: Exterior<F>,
    pub g: Contraction<F>,
}

impl<F: Scalar> SphereHodge<F> {
    pub fn new(id: u8, sign: i8, g: Contraction<F>) -> Result<Self> {
        Ok(SphereHodge { ext: Exterior::new(id, sign)?, g })
    }

    pub fn scale_var(&self) -> usize {
        if self.ext.sign > 0 {
            M
        } else {
            N
        }
    }

    /// ω₋∧ω₊ of this exterior algebra as a tensor.
    pub fn area(&self) -> PTensor<F> {
        lift(&self.ext.wedge_word(&[MINUS, PLUS]))
    }

    /// μ̌ = i m̌ ω₋∧ω₊
    pub fn mu(&self) -> PTensor<F> {
        let k = MPoly::var(self.scale_var()).scale(&F::i());
        self.area().iter().map(|x| x.mul(&k)).collect()
    }

    /// Š(t) = g(t, μ̌)/λ^∓₍ₖ₎ on a degree-k tensor, k ≤ 2.
    pub fn apply(&self, k: usize, t: &[MPoly<F>]) -> PTensor<F> {
        let inv = crate::exterior::lambda::<F>(-self.ext.sign, k).inv().expect("λ ≠ 0");
        contract(&self.g, k, t, 2, &self.mu()).iter().map(|x| x.scale(&inv)).collect()
    }

    /// Š(ω₋), Š(ω₊) as multiples of ω₋, ω₊.
    pub fn one_form_factors(&self) -> Result<[MPoly<F>; 2]> {
        let mut out = [MPoly::zero(), MPoly::zero()];
        for (i, a) in [MINUS, PLUS].into_iter().enumerate() {
            let img = self.apply(1, &crate::hodge::one_form(a));
            for (b, x) in img.iter().enumerate() {
                if b != a && !x.is_zero() {
                    return Err(Error::Invalid("Š mixes the line bundle sectors".into()));
                }
            }
            out[i] = img[a].clone();
        }
        Ok(out)
    }

    /// Š(1) as a multiple of the tensor ω₋∧ω₊ of the exterior `reference`.
    pub fn on_unit(&self, reference: &Exterior<F>) -> Result<MPoly<F>> {
        multiple_of(&self.apply(0, &[MPoly::one()]), &lift(&reference.wedge_word(&[MINUS, PLUS])))
    }

    /// Š(ω₋∧ω₊) for the tensor ω₋∧ω₊ of `reference`.
    pub fn on_area(&self, reference: &Exterior<F>) -> MPoly<F> {
        self.apply(2, &lift(&reference.wedge_word(&[MINUS, PLUS]))).swap_remove(0)
    }

    /// g(iω₋∧ω₊, iω₋∧ω₊) with the area form of this exterior algebra.
    pub fn area_norm(&self) -> MPoly<F> {
        let a = self.area();
        contract(&self.g, 2, &a, 2, &a).swap_remove(0).neg()
    }

    /// Š²(1) as a scalar.
    pub fn square_unit(&self) -> MPoly<F> {
        self.apply(2, &self.apply(0, &[MPoly::one()])).swap_remove(0)
    }
}

fn multiple_of<F: Scalar>(t: &[MPoly<F>], base: &[MPoly<F>]) -> Result<MPoly<F>> {
    let (i, b) = base.iter().enumerate().find(|(_, x)| !x.is_zero()).ok_or_else(|| Error::Invalid("zero base".into()))?;
    let c = b.as_constant().ok_or_else(|| Error::Invalid("base not constant".into()))?;
    let k = t[i].scale(&c.inv()?);
    let ok = t.iter().zip(base).all(|(x, y)| *x == y.mul(&k));
    if ok {
        Ok(k)
    } else {
        Err(Error::NotInSpan("not a multiple of ω₋∧ω₊".into()))
    }
}

/// The G_S branch a sphere Hodge operator is built from.
pub fn gs_branch<F: Scalar>(id: u8, sign: i8) -> Result<Branch<F>> {
    let h: Hodge<F> = Hodge::new(id, sign, Contraction::symbolic())?;
    let bs = solve_class(&h, Family::S)?;
    match bs.as_slice() {
        [b] => Ok(b.clone()),
        _ => Err(Error::Invalid(format!("calculus {id}: G_S has {} branches", bs.len()))),
    }
}

/// Whether Š² acts as one scalar on L₋₂ω₋ ⊕ L₊₂ω₊ for g ∈ G_S.
pub fn probe<F: Scalar>(id: u8, sign: i8) -> Result<bool> {
    if !is_projectable(id)? {
        return Err(Error::Invalid(format!("calculus {id} is not projectable")));
    }
    let g = gs_branch::<F>(id, sign)?.parametrize(1)?;
    let sh = SphereHodge::new(id, sign, g)?;
    let [cm, cp] = sh.one_form_factors()?;
    Ok(realify(&cm.mul(&cm).sub(&cp.mul(&cp))).is_zero())
}

/// The Hodge-built Laplacian □f = Š d Š d f on L₀, as weighted parts:
/// □f = w₋·P₋(f) + w₊·P₊(f) with P± the top coefficient of d(x±ω±).
pub struct SphereLaplacian<F: Scalar> {
    pub complex: Complex<F>,
    pub weights: [MPoly<F>; 2],
}

impl<F: Scalar> SphereLaplacian<F> {
    pub fn new(id: u8, sign: i8, g: Contraction<F>) -> Result<Self> {
        let complex = Complex::new(id, sign)?;
        let sh = SphereHodge { ext: complex.ext.clone(), g };
        let [cm, cp] = sh.one_form_factors()?;
        let top = sh.on_area(&complex.ext);
        Ok(SphereLaplacian { complex, weights: [top.mul(&cm), top.mul(&cp)] })
    }

    /// (P₋(f), P₊(f))
    pub fn parts(&self, f: &Elem<F>) -> Result<[Elem<F>; 2]> {
        let df = self.complex.cal.d(f);
        let SphereForm::One(xm, xp) = decompose_one(&df)? else { unreachable!() };
        let mut out: [Elem<F>; 2] = Default::default();
        for (i, (a, x)) in [(MINUS, xm), (PLUS, xp)].into_iter().enumerate() {
            let mut w: OneForm<F> = Default::default();
            w[a] = x;
            let SphereForm::Two(t) = decompose_two(&self.complex.d1(&w))? else { unreachable!() };
            out[i] = t;
        }
        Ok(out)
    }

    /// □f with the weights evaluated to constants.
    pub fn apply(&self, f: &Elem<F>) -> Result<Elem<F>> {
        let [pm, pp] = self.parts(f)?;
        let w: Vec<F> = self
            .weights
            .iter()
            .map(|x| x.as_constant().ok_or_else(|| Error::Invalid("Laplacian weights are not constant".into())))
            .collect::<Result<_>>()?;
        Ok(pm.scale(&w[0]).add(&pp.scale(&w[1])))
    }
}

/// q(EF + FE) ⊳ f
pub fn casimir_action<F: Scalar>(act: &crate::dual::Action<F>, f: &Elem<F>) -> Elem<F> {
    let e = Functional::<F>::e();
    let ff = Functional::<F>::f();
    let op = e.mul(&ff).add(&ff.mul(&e)).scale(&F::q());
    act.act(&op, f)
}

/// The normalized Laplacian: α = 1 and m fixed by Š²(1) = 1. Returns the
/// operator with its two constant weights.
pub fn normalized_laplacian<F: Scalar>(id: u8, sign: i8) -> Result<(SphereLaplacian<F>, [F; 2])> {
    let g = gs_branch::<F>(id, sign)?.parametrize(1)?;
    let sh = SphereHodge::new(id, sign, g.clone())?;
    let x = realify(&sh.square_unit())
        .single_term()
        .map(|(_, c)| c.clone())
        .ok_or_else(|| Error::Invalid("Š²(1) is not a monomial".into()))?;
    let lap = SphereLaplacian::new(id, sign, g)?;
    let mut w = [F::zero(), F::zero()];
    for (wi, p) in w.iter_mut().zip(&lap.weights) {
        let p = realify(p);
        let (_, c) = p.single_term().ok_or_else(|| Error::Invalid("Laplacian weight is not a monomial".into()))?;
        *wi = c.div_ref(&x)?;
    }
    Ok((lap, w))
}

impl<F: Scalar> SphereLaplacian<F> {
    /// w₋P₋(f) + w₊P₊(f) for given constant weights.
    pub fn apply_weighted(&self, w: &[F; 2], f: &Elem<F>) -> Result<Elem<F>> {
        let [pm, pp] = self.parts(f)?;
        Ok(pm.scale(&w[0]).add(&pp.scale(&w[1])))
    }
}

/// Normal monomials of degree ≤ d that are linearly independent in
/// A(SU_q(2)), kept greedily in the order of [`monomials`].
pub fn independent_monomials<F: Scalar>(d: u32) -> Vec<((u32, u32, u32), Elem<F>)> {
    let all = monomials::<F>(d);
    let keys: Vec<Mono> = {
        let mut k: Vec<Mono> = all.iter().flat_map(|(_, e)| e.terms().map(|(m, _)| *m)).collect();
        k.sort();
        k.dedup();
        k
    };
    let mut kept: Vec<((u32, u32, u32), Elem<F>)> = Vec::new();
    let mut cols: Vec<Vec<F>> = Vec::new();
    for (e, f) in all {
        cols.push(keys.iter().map(|m| f.coeff(m)).collect());
        if Matrix::from_cols(&cols, keys.len()).rank() == cols.len() {
            kept.push((e, f));
        } else {
            cols.pop();
        }
    }
    kept
}

/// Coordinates of f in the span of `basis`.
pub fn coordinates<F: Scalar>(basis: &[Elem<F>], f: &Elem<F>) -> Result<Vec<F>> {
    let mut keys: Vec<Mono> = basis.iter().chain([f]).flat_map(|e| e.terms().map(|(m, _)| *m)).collect();
    keys.sort();
    keys.dedup();
    let cols: Vec<Vec<F>> = basis.iter().map(|b| keys.iter().map(|m| b.coeff(m)).collect()).collect();
    let rhs: Vec<F> = keys.iter().map(|m| f.coeff(m)).collect();
    Matrix::from_cols(&cols, keys.len()).solve(&rhs).ok_or_else(|| Error::NotInSpan("not in the monomial span".into()))
}

/// Label B₋^i B₊^j B₀^k.
pub fn monomial_label((i, j, k): (u32, u32, u32)) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("B-", i), ("B+", j), ("B0", k)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}
