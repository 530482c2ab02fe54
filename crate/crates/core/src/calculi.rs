//! Data of the seven bicovariant 3D calculi: tangent spaces, generators of
//! the right ideals, and braidings.
//!
//! Index order for one-forms and tangent vectors is (-, +, z).

use crate::algebra::Elem;
use crate::dual::{Functional, Word};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{parse_ratfunc, RatFunc, Scalar};

pub const MINUS: usize = 0;
pub const PLUS: usize = 1;
pub const Z: usize = 2;

pub const ALL: [u8; 7] = [1, 2, 3, 4, 5, 6, 7];

pub const LABELS: [&str; 3] = ["-", "+", "z"];

pub fn check(id: u8) -> Result<()> {
    if (1..=7).contains(&id) {
        Ok(())
    } else {
        Err(Error::UnknownCalculus(id))
    }
}

fn w<F: Scalar>(s: u8, i: u32, j: u32, l: i32, c: F) -> Functional<F> {
    Functional::word(Word::new(s, i, j, l), c)
}

fn over<F: Scalar>(x: Functional<F>, d: F) -> Functional<F> {
    x.scale(&d.inv().expect("nonzero denominator"))
}

/// (c·K^l - 1)/d with an optional ε₋ in front of K^l.
fn zpart<F: Scalar>(eps: u8, l: i32, d: F) -> Functional<F> {
    over(w(eps, 0, 0, l, F::one()).sub(&Functional::one()), d)
}

/// Tangent vectors [X₋, X₊, X_z].
pub fn tangent<F: Scalar>(id: u8) -> Result<[Functional<F>; 3]> {
    check(id)?;
    let q = F::q();
    let one = F::one();
    let sp = F::s_pow;
    Ok(match id {
        1 => [
            w(0, 1, 0, -1, sp(1)),
            w(0, 0, 1, -1, sp(-1)),
            zpart(0, -2, q.sub_ref(&one)),
        ],
        2 => [
            w(1, 1, 0, -1, sp(1).neg_ref()),
            w(1, 0, 1, -1, sp(-1).neg_ref()),
            zpart(1, -2, q.add_ref(&one)),
        ],
        3 => [
            w(0, 1, 0, -3, sp(3)),
            w(0, 0, 1, -3, sp(-3)),
            zpart(0, -4, F::q_pow(2).sub_ref(&one)),
        ],
        4 => [w(0, 1, 0, 1, sp(-1)), w(0, 0, 1, 1, sp(1)), zpart(0, 2, F::q_pow(-1).sub_ref(&one))],
        5 => [w(0, 1, 0, 1, sp(-1)), w(0, 0, 1, 1, sp(1)), zpart(1, 2, F::q_pow(-1).add_ref(&one))],
        6 => {
            let q2m1 = F::q_pow(2).sub_ref(&one);
            let inner = over(w(0, 0, 0, 4, F::q_pow(3)).sub(&Functional::k_pow(0).scale(&F::q_pow(3))), q2m1.mul_ref(&q2m1));
            let xz = w(0, 1, 1, 2, F::one()).add(&inner).scale(&q.mul_ref(&q2m1));
            [w(0, 1, 0, 1, sp(-1)), w(0, 0, 1, 1, sp(1)), xz]
        }
        _ => {
            let xz = over(Functional::one().sub(&Functional::k_pow(4)), one.sub_ref(&F::q_pow(-2)));
            [w(0, 1, 0, 1, sp(-1)), w(0, 0, 1, 1, sp(1)), xz]
        }
    })
}

/// Generators of the right ideal Q ⊂ ker ε of each calculus.
pub fn ideal<F: Scalar>(id: u8) -> Result<Vec<Elem<F>>> {
    check(id)?;
    let one = F::one();
    // a + k a* - (1 + k), and the root r in (a - r)c, (a - r)c*
    let (k, r) = match id {
        1 => (F::q(), F::q()),
        2 => (F::q().neg_ref(), F::q().neg_ref()),
        3 => (F::q_pow(2), F::q_pow(2)),
        4 => (F::q_pow(-1), one.clone()),
        5 => (F::q_pow(-1).neg_ref(), one.clone()),
        6 => (F::q_pow(-4), one.clone()),
        _ => (F::q_pow(-2), one.clone()),
    };
    let (a, c, as_, cs) = (Elem::a(), Elem::c(), Elem::a_star(), Elem::c_star());
    let lin = a.add(&as_.scale(&k)).sub(&Elem::scalar(one.add_ref(&k)));
    let am = a.sub(&Elem::scalar(r));
    let ccs = if id == 6 {
        let k6 = F::one().sub_ref(&F::q_pow(2));
        c.mul(&cs).add(&a.sub(&Elem::one()).scale(&k6))
    } else {
        c.mul(&cs)
    };
    Ok(vec![lin, c.pow(2), cs.pow(2), ccs, am.mul(&c), am.mul(&cs)])
}

type Image = &'static [((usize, usize), &'static str)];

const M_: usize = MINUS;
const P_: usize = PLUS;
const Z_: usize = Z;

const B7: &[((usize, usize), Image)] = &[
    ((M_, P_), &[((M_, P_), "1-q^2"), ((P_, M_), "q^-2")]),
    ((P_, M_), &[((M_, P_), "q^4")]),
    ((M_, Z_), &[((M_, Z_), "1-q^2"), ((Z_, M_), "q^-4")]),
    ((Z_, M_), &[((M_, Z_), "q^6")]),
    ((Z_, P_), &[((Z_, P_), "1-q^2"), ((P_, Z_), "q^-4")]),
    ((P_, Z_), &[((Z_, P_), "q^6")]),
];

const B1: &[((usize, usize), Image)] = &[
    ((Z_, Z_), &[((Z_, Z_), "1"), ((P_, M_), "q^2*(1-q)/(1+q)"), ((M_, P_), "-q^2*(1-q)/(1+q)")]),
    ((M_, P_), &[((P_, M_), "q^2"), ((M_, P_), "1-q^2")]),
    ((P_, M_), &[((M_, P_), "1")]),
    ((M_, Z_), &[((Z_, M_), "q^2"), ((M_, Z_), "1-q^2")]),
    ((Z_, M_), &[((M_, Z_), "1")]),
    ((Z_, P_), &[((P_, Z_), "q^2"), ((Z_, P_), "1-q^2")]),
    ((P_, Z_), &[((Z_, P_), "1")]),
];

const B3: &[((usize, usize), Image)] = &[
    ((Z_, Z_), &[((Z_, Z_), "1"), ((M_, P_), "q^2-1"), ((P_, M_), "-(q^2-1)*q^4")]),
    ((M_, P_), &[((P_, M_), "q^6"), ((M_, P_), "1-q^2")]),
    ((P_, M_), &[((M_, P_), "q^-4")]),
    ((M_, Z_), &[((Z_, M_), "q^4"), ((M_, Z_), "1-q^2")]),
    ((Z_, M_), &[((M_, Z_), "q^-2")]),
    ((Z_, P_), &[((P_, Z_), "q^4"), ((Z_, P_), "1-q^2")]),
    ((P_, Z_), &[((Z_, P_), "q^-2")]),
];

const B4: &[((usize, usize), Image)] = &[
    ((Z_, Z_), &[((Z_, Z_), "1"), ((M_, P_), "(1-q)/(1+q)"), ((P_, M_), "-(1-q)/(1+q)")]),
    ((P_, M_), &[((M_, P_), "q^2"), ((P_, M_), "1-q^2")]),
    ((M_, P_), &[((P_, M_), "1")]),
    ((Z_, M_), &[((M_, Z_), "q^2"), ((Z_, M_), "1-q^2")]),
    ((M_, Z_), &[((Z_, M_), "1")]),
    ((P_, Z_), &[((Z_, P_), "q^2"), ((P_, Z_), "1-q^2")]),
    ((Z_, P_), &[((P_, Z_), "1")]),
];

const B6: &[((usize, usize), Image)] = &[
    ((M_, P_), &[((P_, M_), "q^-4"), ((M_, P_), "1-q^2"), ((Z_, Z_), "q^2*(q^2-1)")]),
    ((P_, M_), &[((M_, P_), "q^6"), ((Z_, Z_), "-q^6*(q^2-1)")]),
    ((M_, Z_), &[((Z_, M_), "q^-2"), ((M_, Z_), "1-q^2")]),
    ((Z_, M_), &[((M_, Z_), "q^4")]),
    ((Z_, P_), &[((P_, Z_), "q^-2"), ((Z_, P_), "1-q^2")]),
    ((P_, Z_), &[((Z_, P_), "q^4")]),
];

pub fn pair_index(a: usize, b: usize) -> usize {
    3 * a + b
}

/// Braiding σ on Γ_inv ⊗ Γ_inv as a 9×9 matrix over Q(i)(s); column
/// 3a+b holds the image of ω_a ⊗ ω_b. Pairs not listed are fixed.
pub fn braiding_symbolic(id: u8) -> Result<Matrix<RatFunc>> {
    check(id)?;
    let (table, twist) = match id {
        1 => (B1, false),
        2 => (B1, true),
        3 => (B3, false),
        4 => (B4, false),
        5 => (B4, true),
        6 => (B6, false),
        _ => (B7, false),
    };
    let mut s = Matrix::identity(9);
    for &((a, b), img) in table {
        let col = pair_index(a, b);
        s.set(col, col, RatFunc::zero());
        for &((c, d), txt) in img {
            let mut v = parse_ratfunc(txt)?;
            if twist {
                v = v.negate_q();
            }
            s.set(pair_index(c, d), col, v);
        }
    }
    Ok(s)
}

pub fn braiding<F: Scalar>(id: u8) -> Result<Matrix<F>> {
    Ok(braiding_symbolic(id)?.try_map(F::from_ratfunc)?)
}

/// Star on left-invariant one-forms: ω₋* = -ω₊, ω₊* = -ω₋, ω_z* = -ω_z.
pub fn star_index(a: usize) -> usize {
    match a {
        MINUS => PLUS,
        PLUS => MINUS,
        _ => Z,
    }
}
