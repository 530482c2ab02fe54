//! Braidings, antisymmetrizers and the exterior algebras Γ_σ, Γ_{σ⁻}.
//!
//! Tensors of degree k over left-invariant forms are coefficient vectors of
//! length 3^k, indexed base 3 with the first slot most significant.

use crate::algebra::Elem;
use crate::calculi::{self, star_index, MINUS, PLUS, Z};
use crate::error::{Error, Result};
use crate::fodc::Calculus;
use crate::linalg::Matrix;
use crate::scalars::Scalar;

/// λ^±_(k) = [k]!_{q^{±2}}
pub fn lambda<F: Scalar>(sign: i8, k: usize) -> F {
    let e = if sign > 0 { 1 } else { -1 };
    let mut acc = F::one();
    for n in 1..=k as i32 {
        let mut sum = F::zero();
        for t in 0..n {
            sum += &F::q_pow(2 * e * t);
        }
        acc = acc.mul_ref(&sum);
    }
    acc
}

pub fn pow3(k: usize) -> usize {
    3usize.pow(k as u32)
}

/// Tensor index of a word of slot labels.
pub fn word_index(word: &[usize]) -> usize {
    word.iter().fold(0, |acc, &a| 3 * acc + a)
}

pub fn index_word(mut idx: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in (0..k).rev() {
        out[slot] = idx % 3;
        idx /= 3;
    }
    out
}

pub fn unit<F: Scalar>(k: usize, word: &[usize]) -> Vec<F> {
    let mut v = vec![F::zero(); pow3(k)];
    v[word_index(word)] = F::one();
    v
}

/// Braid generator σ acting on slots (i, i+1) of an n-fold tensor power.
pub fn sigma_at<F: Scalar>(s: &Matrix<F>, i: usize, n: usize) -> Matrix<F> {
    let left = Matrix::identity(pow3(i));
    let right = Matrix::identity(pow3(n - i - 2));
    left.kron(s).kron(&right)
}

pub fn braid_defect<F: Scalar>(s: &Matrix<F>) -> Matrix<F> {
    let s1 = sigma_at(s, 0, 3);
    let s2 = sigma_at(s, 1, 3);
    s1.mul(&s2).mul(&s1).sub(&s2.mul(&s1).mul(&s2))
}

pub fn antisym2<F: Scalar>(s: &Matrix<F>) -> Matrix<F> {
    Matrix::identity(9).sub(s)
}

/// A⁽³⁾ = (1 - σ₂)(1 - σ₁ + σ₁σ₂)
pub fn antisym3<F: Scalar>(s: &Matrix<F>) -> Matrix<F> {
    let s1 = sigma_at(s, 0, 3);
    let s2 = sigma_at(s, 1, 3);
    let id = Matrix::identity(27);
    id.sub(&s2).mul(&id.sub(&s1).add(&s1.mul(&s2)))
}

/// A⁽⁴⁾ = (1 ⊗ A⁽³⁾)(1 - σ₁ + σ₁σ₂ - σ₁σ₂σ₃)
pub fn antisym4<F: Scalar>(s: &Matrix<F>) -> Matrix<F> {
    let s1 = sigma_at(s, 0, 4);
    let s2 = sigma_at(s, 1, 4);
    let s3 = sigma_at(s, 2, 4);
    let id = Matrix::identity(81);
    let s12 = s1.mul(&s2);
    let tail = id.sub(&s1).add(&s12).sub(&s12.mul(&s3));
    Matrix::identity(3).kron(&antisym3(s)).mul(&tail)
}

/// Index sets of the canonical wedge bases per degree.
pub const BASIS_WORDS: [&[&[usize]]; 4] = [
    &[&[]],
    &[&[MINUS], &[PLUS], &[Z]],
    &[&[MINUS, PLUS], &[PLUS, Z], &[Z, MINUS]],
    &[&[MINUS, PLUS, Z]],
];

#[derive(Clone)]
pub struct Exterior<F: Scalar> {
    pub id: u8,
    pub sign: i8,
    /// σ for sign +1, σ⁻¹ for sign -1
    pub sigma: Matrix<F>,
    pub a2: Matrix<F>,
    pub a3: Matrix<F>,
    basis: [Matrix<F>; 4],
    proj: [Matrix<F>; 4],
}

fn left_inverse<F: Scalar>(b: &Matrix<F>) -> Result<Matrix<F>> {
    let (_, pivots) = b.transpose().rref();
    if pivots.len() != b.cols() {
        return Err(Error::Singular("wedge basis".into()));
    }
    let sub = Matrix::from_fn(pivots.len(), b.cols(), |i, j| b.get(pivots[i], j).clone());
    let inv = sub.inverse()?;
    let sel = Matrix::from_fn(pivots.len(), b.rows(), |i, j| if pivots[i] == j { F::one() } else { F::zero() });
    Ok(inv.mul(&sel))
}

impl<F: Scalar> Exterior<F> {
    /// Builds the exterior algebra after gating the braiding: invertible,
    /// braid equation, and (1 - σ)(q² + σ) = 0.
    pub fn new(id: u8, sign: i8) -> Result<Self> {
        let s = calculi::braiding::<F>(id)?;
        if !braid_defect(&s).is_zero() {
            return Err(Error::Invalid(format!("calculus {id}: braid equation fails")));
        }
        let spec = Matrix::identity(9).sub(&s).mul(&Matrix::identity(9).scale(&F::q_pow(2)).add(&s));
        if !spec.is_zero() {
            return Err(Error::Invalid(format!("calculus {id}: spectral identity fails")));
        }
        let sigma = if sign > 0 { s } else { s.inverse()? };
        let a2 = antisym2(&sigma);
        let a3 = antisym3(&sigma);
        let mut basis: [Matrix<F>; 4] = Default::default();
        for (k, words) in BASIS_WORDS.iter().enumerate() {
            let cols: Vec<Vec<F>> = words
                .iter()
                .map(|w| {
                    let u = unit::<F>(k, w);
                    match k {
                        2 => a2.mul_vec(&u),
                        3 => a3.mul_vec(&u),
                        _ => u,
                    }
                })
                .collect();
            basis[k] = Matrix::from_cols(&cols, pow3(k));
        }
        let mut proj: [Matrix<F>; 4] = Default::default();
        for k in 0..4 {
            proj[k] = left_inverse(&basis[k])?;
        }
        Ok(Exterior { id, sign, sigma, a2, a3, basis, proj })
    }

    pub fn lambda(&self, k: usize) -> F {
        lambda(self.sign, k)
    }

    pub fn antisym(&self, k: usize) -> Matrix<F> {
        match k {
            2 => self.a2.clone(),
            3 => self.a3.clone(),
            _ => Matrix::identity(pow3(k)),
        }
    }

    pub fn dim(&self, k: usize) -> usize {
        BASIS_WORDS[k].len()
    }

    /// Basis tensor i of degree k.
    pub fn basis_tensor(&self, k: usize, i: usize) -> Vec<F> {
        self.basis[k].col(i)
    }

    pub fn basis_matrix(&self, k: usize) -> &Matrix<F> {
        &self.basis[k]
    }

    /// Left inverse of the basis matrix (coordinates of range elements).
    pub fn projector(&self, k: usize) -> &Matrix<F> {
        &self.proj[k]
    }

    pub fn volume(&self) -> Vec<F> {
        self.basis_tensor(3, 0)
    }

    pub fn to_tensor(&self, k: usize, coords: &[F]) -> Vec<F> {
        self.basis[k].mul_vec(coords)
    }

    /// Wedge coordinates of a tensor in the range of A⁽ᵏ⁾.
    pub fn coords(&self, k: usize, t: &[F]) -> Result<Vec<F>> {
        let c = self.proj[k].mul_vec(t);
        if self.basis[k].mul_vec(&c) != t {
            return Err(Error::NotInSpan(format!("degree {k} tensor outside the range of the antisymmetrizer")));
        }
        Ok(c)
    }

    /// Wedge product of tensors t (degree k) and u (degree l) in the ranges
    /// of the antisymmetrizers: A⁽ᵏ⁺ˡ⁾(t ⊗ u)/(λ_k λ_l).
    pub fn wedge_tensor(&self, k: usize, t: &[F], l: usize, u: &[F]) -> Option<Vec<F>> {
        if k + l > 3 {
            return None;
        }
        let tu: Vec<F> = t.iter().flat_map(|x| u.iter().map(move |y| x.mul_ref(y))).collect();
        let norm = self.lambda(k).mul_ref(&self.lambda(l)).inv().expect("λ ≠ 0");
        let out = self.antisym(k + l).mul_vec(&tu);
        Some(out.iter().map(|x| x.mul_ref(&norm)).collect())
    }

    /// Wedge product in canonical coordinates; zero vector of length 0 above
    /// degree 3.
    pub fn wedge(&self, k: usize, x: &[F], l: usize, y: &[F]) -> Result<Vec<F>> {
        match self.wedge_tensor(k, &self.to_tensor(k, x), l, &self.to_tensor(l, y)) {
            None => Ok(Vec::new()),
            Some(t) => self.coords(k + l, &t),
        }
    }

    /// ω_{a1} ∧ … ∧ ω_{ak} as a tensor: A⁽ᵏ⁾ of the word.
    pub fn wedge_word(&self, word: &[usize]) -> Vec<F> {
        let k = word.len();
        self.antisym(k).mul_vec(&unit(k, word))
    }

    /// Graded star on a tensor in the range of A⁽ᵏ⁾:
    /// (ω_{a1}∧…∧ω_{ak})* = (-1)^{k(k-1)/2} ω_{ak}*∧…∧ω_{a1}*.
    pub fn star_tensor(&self, k: usize, t: &[F]) -> Result<Vec<F>> {
        let c = self.coords(k, t)?;
        let mut out = vec![F::zero(); pow3(k)];
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let word = BASIS_WORDS[k][i];
            let rev: Vec<usize> = word.iter().rev().map(|&a| star_index(a)).collect();
            // each ω* carries a sign -1
            let sgn_count = k + k * k.saturating_sub(1) / 2;
            let mut img = self.wedge_word(&rev);
            if sgn_count % 2 == 1 {
                img = img.iter().map(|x| x.neg_ref()).collect();
            }
            let cc = ci.conj();
            for (o, v) in out.iter_mut().zip(img) {
                *o += &cc.mul_ref(&v);
            }
        }
        Ok(out)
    }
}

/// Right multiplication on Γ^{⊗2}: (ω_a ⊗ ω_b) h in left coordinates.
pub fn tensor2_right_mul<F: Scalar>(cal: &Calculus<F>, t: &[Elem<F>], h: &Elem<F>) -> Vec<Elem<F>> {
    let mut out = vec![Elem::zero(); 9];
    for a in 0..3 {
        for b in 0..3 {
            let coef = &t[3 * a + b];
            if coef.is_zero() {
                continue;
            }
            // ω_b h = Σ_c (f_bc ⊳ h) ω_c, then ω_a (f_bc ⊳ h) = Σ_d (f_ad ⊳ ·) ω_d
            for c in 0..3 {
                let inner = cal.action.act(&cal.f[b][c], h);
                if inner.is_zero() {
                    continue;
                }
                for d in 0..3 {
                    let outer = cal.action.act(&cal.f[a][d], &inner);
                    if !outer.is_zero() {
                        out[3 * d + c] = out[3 * d + c].add(&coef.mul(&outer));
                    }
                }
            }
        }
    }
    out
}

/// σ applied to a Γ^{⊗2} element with algebra coefficients (left linear).
pub fn apply_left_linear<F: Scalar>(m: &Matrix<F>, t: &[Elem<F>]) -> Vec<Elem<F>> {
    (0..m.rows())
        .map(|r| {
            let mut acc = Elem::zero();
            for (c, x) in t.iter().enumerate() {
                let k = m.get(r, c);
                if !k.is_zero() && !x.is_zero() {
                    acc.add_scaled(x, k);
                }
            }
            acc
        })
        .collect()
}

/// Basis of span{𝒮(x)} over the generators of the ideal, as columns.
pub fn sq_ideal_span<F: Scalar>(cal: &Calculus<F>) -> Matrix<F> {
    let cols: Vec<Vec<F>> = cal.ideal.iter().map(|x| cal.quadratic_symbol(x)).collect();
    let m = Matrix::from_cols(&cols, 9);
    Matrix::from_cols(&m.column_basis(), 9)
}
