//! First-order differential calculi built from a quantum tangent space.
//!
//! A one-form is stored by its left coordinates: `[h₋, h₊, h_z]` stands for
//! h₋ω₋ + h₊ω₊ + h_zω_z. With Δ(X_b) = 1 ⊗ X_b + Σ_a X_a ⊗ f_ab one has
//! dh = Σ_a (X_a ⊳ h) ω_a and ω_a h = Σ_b (f_ab ⊳ h) ω_b.

use crate::algebra::{coproduct, Elem};
use crate::calculi::{self, star_index};
use crate::dual::{functional_matrix, Action, FTensor, Functional};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::Scalar;

pub type OneForm<F> = [Elem<F>; 3];

pub fn zero_form<F: Scalar>() -> OneForm<F> {
    [Elem::zero(), Elem::zero(), Elem::zero()]
}

pub fn basis_form<F: Scalar>(a: usize) -> OneForm<F> {
    let mut out = zero_form();
    out[a] = Elem::one();
    out
}

pub fn form_add<F: Scalar>(x: &OneForm<F>, y: &OneForm<F>) -> OneForm<F> {
    [x[0].add(&y[0]), x[1].add(&y[1]), x[2].add(&y[2])]
}

pub fn form_sub<F: Scalar>(x: &OneForm<F>, y: &OneForm<F>) -> OneForm<F> {
    [x[0].sub(&y[0]), x[1].sub(&y[1]), x[2].sub(&y[2])]
}

pub fn left_mul<F: Scalar>(h: &Elem<F>, x: &OneForm<F>) -> OneForm<F> {
    [h.mul(&x[0]), h.mul(&x[1]), h.mul(&x[2])]
}

pub fn form_is_zero<F: Scalar>(x: &OneForm<F>) -> bool {
    x.iter().all(|e| e.is_zero())
}

/// Express `g` in span{fs}, returning coordinates.
pub fn solve_in_span<F: Scalar>(fs: &[Functional<F>], g: &Functional<F>) -> Option<Vec<F>> {
    let mut all = fs.to_vec();
    all.push(g.clone());
    let (m, _) = functional_matrix(&all);
    let n = fs.len();
    let a = Matrix::from_fn(m.rows(), n, |i, j| m.get(i, j).clone());
    a.solve(&m.col(n))
}

pub struct Calculus<F: Scalar> {
    pub id: u8,
    pub x: [Functional<F>; 3],
    /// f[a][b]
    pub f: [[Functional<F>; 3]; 3],
    pub ideal: Vec<Elem<F>>,
    pub action: Action<F>,
    /// ω_a = Σ x_i dy_i
    witnesses: [Vec<(Elem<F>, Elem<F>)>; 3],
    /// ⟨X_b, ω_a⟩ at [b][a]
    duality: Matrix<F>,
}

/// The f-matrix of a tangent space: Δ(X_b) - 1 ⊗ X_b = Σ_a X_a ⊗ f_ab.
pub fn f_matrix<F: Scalar>(x: &[Functional<F>; 3]) -> Result<[[Functional<F>; 3]; 3]> {
    let mut f: [[Functional<F>; 3]; 3] = Default::default();
    for b in 0..3 {
        let rest = x[b].coproduct().sub(&FTensor::pure(&Functional::one(), &x[b]));
        for (word, left) in rest.by_right() {
            let coords = solve_in_span(x, &left)
                .ok_or_else(|| Error::NotInSpan(format!("left factor {} of Δ(X{})", left.render(), b)))?;
            for (a, c) in coords.iter().enumerate() {
                f[a][b].add_term(word, c.clone());
            }
        }
    }
    Ok(f)
}

impl<F: Scalar> Calculus<F> {
    pub fn new(id: u8) -> Result<Self> {
        Self::from_tangent(id, calculi::tangent(id)?)
    }

    pub fn from_tangent(id: u8, x: [Functional<F>; 3]) -> Result<Self> {
        let f = f_matrix(&x)?;
        let action = Action::new();
        let hs = [Elem::c(), Elem::c_star(), Elem::a().sub(&Elem::a_star())];
        let m = Matrix::from_fn(3, 3, |j, a| action.eval(&x[a], &hs[j]));
        let minv = m.inverse().map_err(|_| Error::Singular("witness matrix".into()))?;
        let mut witnesses: [Vec<(Elem<F>, Elem<F>)>; 3] = Default::default();
        for (a, wa) in witnesses.iter_mut().enumerate() {
            for (j, h) in hs.iter().enumerate() {
                let k = minv.get(a, j);
                if k.is_zero() {
                    continue;
                }
                for ((u, v), c) in coproduct(h).terms() {
                    let left = Elem::mono(*u, c.mul_ref(k)).antipode();
                    wa.push((left, Elem::mono(*v, F::one())));
                }
            }
        }
        let mut cal = Calculus { id, x, f, ideal: calculi::ideal(id)?, action, witnesses, duality: Matrix::zeros(3, 3) };
        cal.duality = Matrix::from_fn(3, 3, |b, a| {
            cal.witnesses[a]
                .iter()
                .fold(F::zero(), |acc, (u, v)| acc.add_ref(&u.counit().mul_ref(&cal.action.eval(&cal.x[b], v))))
        });
        Ok(cal)
    }

    pub fn d(&self, h: &Elem<F>) -> OneForm<F> {
        [self.action.act(&self.x[0], h), self.action.act(&self.x[1], h), self.action.act(&self.x[2], h)]
    }

    /// ω_a h
    pub fn commute_right(&self, a: usize, h: &Elem<F>) -> OneForm<F> {
        [self.action.act(&self.f[a][0], h), self.action.act(&self.f[a][1], h), self.action.act(&self.f[a][2], h)]
    }

    pub fn right_mul(&self, x: &OneForm<F>, h: &Elem<F>) -> OneForm<F> {
        let mut out = zero_form();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            out = form_add(&out, &left_mul(xa, &self.commute_right(a, h)));
        }
        out
    }

    /// 𝔯(h) = S(h₁) dh₂
    pub fn r_map(&self, h: &Elem<F>) -> OneForm<F> {
        let mut out = zero_form();
        for ((u, v), c) in coproduct(h).terms() {
            let s = Elem::mono(*u, c.clone()).antipode();
            out = form_add(&out, &left_mul(&s, &self.d(&Elem::mono(*v, F::one()))));
        }
        out
    }

    /// Pairs (x_i, y_i) with ω_a = Σ x_i dy_i.
    pub fn witnesses(&self, a: usize) -> &[(Elem<F>, Elem<F>)] {
        &self.witnesses[a]
    }

    /// Re-expand ω_a from its witnesses.
    pub fn witness_form(&self, a: usize) -> OneForm<F> {
        self.witnesses[a].iter().fold(zero_form(), |acc, (u, v)| form_add(&acc, &left_mul(u, &self.d(v))))
    }

    /// ω_a h obtained from the witnesses and the Leibniz rule alone:
    /// Σ x_i (d(y_i h) - y_i dh).
    pub fn commute_right_leibniz(&self, a: usize, h: &Elem<F>) -> OneForm<F> {
        let dh = self.d(h);
        let mut out = zero_form();
        for (u, v) in &self.witnesses[a] {
            let t = form_sub(&self.d(&v.mul(h)), &left_mul(v, &dh));
            out = form_add(&out, &left_mul(u, &t));
        }
        out
    }

    /// ⟨X_b, Σ h_a ω_a⟩ = Σ_a ε(h_a)⟨X_b, ω_a⟩ with ⟨X, x dy⟩ = ε(x)X(y).
    pub fn pairing(&self, b: usize, x: &OneForm<F>) -> F {
        x.iter().enumerate().fold(F::zero(), |acc, (a, h)| acc.add_ref(&h.counit().mul_ref(self.duality.get(b, a))))
    }

    pub fn duality_matrix(&self) -> &Matrix<F> {
        &self.duality
    }

    /// (Σ h_a ω_a)* = Σ ω_a* h_a* = -Σ ω_{a*} h_a*.
    pub fn star_form(&self, x: &OneForm<F>) -> OneForm<F> {
        let mut out = zero_form();
        for (a, h) in x.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            out = form_sub(&out, &self.commute_right(star_index(a), &h.star()));
        }
        out
    }

    /// 𝒮(x)_{ab} = (X_a X_b)(x), flattened with index 3a + b.
    pub fn quadratic_symbol(&self, x: &Elem<F>) -> Vec<F> {
        let mut out = Vec::with_capacity(9);
        for a in 0..3 {
            for b in 0..3 {
                out.push(self.action.eval(&self.x[a].mul(&self.x[b]), x));
            }
        }
        out
    }

    pub fn render_form(x: &OneForm<F>) -> String {
        let parts: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, h)| !h.is_zero())
            .map(|(a, h)| format!("({}) w{}", h.render(), calculi::LABELS[a]))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}
