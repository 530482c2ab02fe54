//! Dense exact matrices over a [`Scalar`] field.

use std::fmt;

use crate::scalars::{Scalar, ScalarError};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F> Default for Matrix<F> {
    fn default() -> Self {
        Matrix { rows: 0, cols: 0, data: Vec::new() }
    }
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<F>], nrows: usize) -> Self {
        Self::from_fn(nrows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &F) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Result<G, ScalarError>) -> Result<Matrix<G>, ScalarError> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, k: &F) -> Self {
        self.map(|x| x.mul_ref(k))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add_ref(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub_ref(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += &a.mul_ref(b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &a.mul_ref(x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn kron(&self, o: &Self) -> Self {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a.mul_ref(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        Self::from_fn(self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                o.get(i, j - self.cols).clone()
            }
        })
    }

    fn pick_pivot(&self, col: usize, from: usize) -> Option<usize> {
        (from..self.rows).filter(|&r| !self.get(r, col).is_zero()).min_by_key(|&r| self.get(r, col).weight())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Fraction-free (Bareiss) forward elimination. Returns the rank and the
    /// last pivot, which is ± the determinant for square full-rank input.
    pub fn bareiss(&self) -> (usize, F) {
        let mut m = self.clone();
        let mut prev = F::one();
        let mut rank = 0;
        let mut sign = false;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = m.pick_pivot(col, rank) else { continue };
            if p != rank {
                m.swap_rows(p, rank);
                sign = !sign;
            }
            let piv = m.get(rank, col).clone();
            let prev_inv = prev.inv().expect("nonzero Bareiss pivot");
            for r in rank + 1..m.rows {
                let lead = m.get(r, col).clone();
                for j in col + 1..m.cols {
                    let v = piv.mul_ref(m.get(r, j)).sub_ref(&lead.mul_ref(m.get(rank, j))).mul_ref(&prev_inv);
                    m.set(r, j, v);
                }
                m.set(r, col, F::zero());
            }
            prev = piv;
            rank += 1;
        }
        (rank, if sign { prev.neg_ref() } else { prev })
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols);
        if self.rows == 0 {
            return F::one();
        }
        let (r, d) = self.bareiss();
        if r < self.rows {
            F::zero()
        } else {
            d
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = m.pick_pivot(col, r) else { continue };
            m.swap_rows(p, r);
            let inv = m.get(r, col).inv().expect("nonzero pivot");
            for j in col..m.cols {
                let v = m.get(r, j).mul_ref(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, col).is_zero() {
                    continue;
                }
                let f = m.get(i, col).clone();
                for j in col..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).sub_ref(&f.mul_ref(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (m, pivots) = self.rref();
        let mut out = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m.get(r, free).neg_ref();
            }
            out.push(v);
        }
        out
    }

    /// Independent columns spanning the column space.
    pub fn column_basis(&self) -> Vec<Vec<F>> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|j| self.col(j)).collect()
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::from_cols(&[b.to_vec()], self.rows));
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = m.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let (m, pivots) = self.hstack(&Self::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_fn(n, n, |i, j| m.get(i, n + j).clone()))
    }

    /// Coefficients c_0..c_n of det(x I - M), by Berkowitz (division free).
    pub fn charpoly(&self) -> Vec<F> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut c: Vec<F> = vec![F::one()];
        for k in 0..n {
            // leading k x k block A, column R, row S, corner a
            let a = self.get(k, k).clone();
            let r: Vec<F> = (0..k).map(|i| self.get(i, k).clone()).collect();
            let s: Vec<F> = (0..k).map(|j| self.get(k, j).clone()).collect();
            let blk = Self::from_fn(k, k, |i, j| self.get(i, j).clone());
            // Toeplitz column: 1, -a, -S R, -S A R, ...
            let mut t = vec![F::one(), a.neg_ref()];
            let mut v = r.clone();
            for _ in 0..k {
                let sv = s.iter().zip(&v).fold(F::zero(), |acc, (x, y)| acc.add_ref(&x.mul_ref(y)));
                t.push(sv.neg_ref());
                v = blk.mul_vec(&v);
            }
            // new = T * c, T lower triangular Toeplitz of size (k+2)x(k+1)
            let mut nc = vec![F::zero(); k + 2];
            for (i, slot) in nc.iter_mut().enumerate() {
                for (j, cj) in c.iter().enumerate() {
                    if i >= j && i - j < t.len() {
                        *slot += &t[i - j].mul_ref(cj);
                    }
                }
            }
            c = nc;
        }
        // c holds coefficients from x^n down to x^0
        c.reverse();
        c
    }
}

/// Whether the column spans of `a` and `b` coincide.
pub fn same_span<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> bool {
    let ra = a.rank();
    ra == b.rank() && ra == a.hstack(b).rank()
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).render()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
