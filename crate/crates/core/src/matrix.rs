//! Dense matrices over a [`Ring`], with elimination routines over a [`Field`].

use crate::field::{Field, Ring};
use crate::poly::Poly;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Matrix unit `E_{ij}`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = R::one();
        m
    }

    pub fn diag(d: &[R]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn trace(&self) -> R {
        (0..self.rows.min(self.cols)).fold(R::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    let t = core::mem::replace(&mut out.data[idx], R::zero());
                    out.data[idx] = t + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    /// `[self, o] = self·o − o·self`.
    pub fn bracket(&self, o: &Self) -> Self {
        self.mul_ref(o).sub_ref(&o.mul_ref(self))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// `[[a, b], [c, d]]` from four blocks.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let (r0, c0) = (a.rows, a.cols);
        Self::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| match (i < r0, j < c0) {
            (true, true) => a[(i, j)].clone(),
            (true, false) => b[(i, j - c0)].clone(),
            (false, true) => c[(i - r0, j)].clone(),
            (false, false) => d[(i - r0, j - c0)].clone(),
        })
    }

    pub fn block_diag(blocks: &[Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r + i, c + j)] = b[(i, j)].clone();
                }
            }
            r += b.rows;
            c += b.cols;
        }
        out
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Characteristic polynomial `det(t·I − self)` by the Faddeev–LeVerrier
    /// recursion. Works over any ring admitting division by small integers.
    pub fn charpoly_faddeev(&self) -> Vec<R> {
        assert!(self.is_square());
        let n = self.rows;
        // coefficients c_n = 1, c_{n-k} computed from M_k
        let mut coeffs = vec![R::zero(); n + 1];
        coeffs[n] = R::one();
        let mut m = Self::zeros(n, n);
        let id = Self::identity(n);
        for k in 1..=n {
            let shifted = m.add_ref(&id.scale(&coeffs[n - k + 1]));
            m = self.mul_ref(&shifted);
            coeffs[n - k] = -(m.trace().div_int(k as i64));
        }
        coeffs
    }

    /// Determinant via the constant term of the Faddeev–LeVerrier polynomial.
    pub fn det_ring(&self) -> R {
        let n = self.rows;
        let c = self.charpoly_faddeev();
        if n % 2 == 0 {
            c[0].clone()
        } else {
            -c[0].clone()
        }
    }
}

impl<R> core::ops::Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R> core::ops::IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Ring> Add for Matrix<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl<R: Ring> Sub for Matrix<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}

impl<R: Ring> Mul for Matrix<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<R: Ring> Neg for Matrix<R> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|x| -x.clone())
    }
}

/// Result of row reduction.
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m[(r, j)].clone();
                m[(r, j)] = v * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{v : self·v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let Rref { matrix, pivots } = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -matrix[(r, free)].clone();
            }
            out.push(v);
        }
        out
    }

    /// Some solution of `self·x = b`, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = matrix[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Self::block2(self, &Self::identity(n), &Self::zeros(0, n), &Self::zeros(0, n));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(matrix.submatrix(0, n, n, n))
    }

    pub fn det(&self) -> F {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = det * piv.clone();
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * inv.clone();
                for j in c..n {
                    let v = m[(i, j)].clone() - f.clone() * m[(c, j)].clone();
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(t·I − self)` via reduction to upper
    /// Hessenberg form by similarity and the Hessenberg recurrence.
    pub fn charpoly(&self) -> Poly<F> {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        for c in 0..n.saturating_sub(2) {
            let Some(p) = (c + 1..n).find(|&i| !h[(i, c)].is_zero()) else {
                continue;
            };
            if p != c + 1 {
                let q = c + 1;
                for j in 0..n {
                    h.data.swap(p * n + j, q * n + j);
                }
                for i in 0..n {
                    h.data.swap(i * n + p, i * n + q);
                }
            }
            let inv = h[(c + 1, c)].inv().expect("pivot");
            for i in c + 2..n {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let f = h[(i, c)].clone() * inv.clone();
                // row_i -= f row_{c+1}; col_{c+1} += f col_i
                for j in 0..n {
                    let v = h[(i, j)].clone() - f.clone() * h[(c + 1, j)].clone();
                    h[(i, j)] = v;
                }
                for r in 0..n {
                    let v = h[(r, c + 1)].clone() + f.clone() * h[(r, i)].clone();
                    h[(r, c + 1)] = v;
                }
            }
        }
        // p_0 = 1, p_k = (t - h_kk) p_{k-1} - sum_{i<k} h_{ik} prod_{j=i+1}^{k} h_{j,j-1} p_{i-1}
        let mut ps: Vec<Poly<F>> = vec![Poly::one()];
        for k in 0..n {
            let mut pk = Poly::from_coeffs(vec![-h[(k, k)].clone(), F::one()]).mul(&ps[k]);
            let mut prod = F::one();
            for i in (0..k).rev() {
                prod = prod * h[(i + 1, i)].clone();
                if prod.is_zero() {
                    break;
                }
                let c = prod.clone() * h[(i, k)].clone();
                pk = pk.sub(&ps[i].scale(&c));
            }
            ps.push(pk);
        }
        ps.pop().unwrap()
    }
}

/// Rank of a list of vectors of equal length.
pub fn rank_of<F: Field>(vectors: &[Vec<F>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec()).rank()
}

/// Reduced row-echelon basis of the span of `vectors`.
pub fn span_basis<F: Field>(vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let Rref { matrix, pivots } = Matrix::from_rows(vectors.to_vec()).rref();
    (0..pivots.len()).map(|r| matrix.row(r).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, Q};

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn charpoly_paths_agree() {
        let a = m(&[&[2, 1, 0, 3], &[1, -1, 4, 0], &[0, 5, 1, 1], &[2, 0, 0, 7]]);
        let hess = a.charpoly();
        let fad = a.charpoly_faddeev();
        assert_eq!(hess.coeffs(), &fad[..]);
        assert_eq!(a.det(), a.det_ring());
    }

    #[test]
    fn charpoly_with_zero_subdiagonal() {
        let a = m(&[&[1, 2, 3], &[0, 4, 5], &[0, 0, 6]]);
        assert_eq!(a.charpoly().coeffs(), &a.charpoly_faddeev()[..]);
    }

    #[test]
    fn inverse_and_nullspace() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.mul_ref(&a.inverse().unwrap()), Matrix::identity(2));
        let s = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = s.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col = Matrix::from_rows(v.into_iter().map(|x| alloc::vec![x]).collect());
            assert!(s.mul_ref(&col).is_zero());
        }
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&[q(1), q(2)]).is_none());
        assert_eq!(a.solve(&[q(2), q(2)]).unwrap(), alloc::vec![q(2), q(0)]);
    }
}

/// Echelon form of a span, for repeated membership tests.
#[derive(Clone, Debug)]
pub struct SpanReducer<F> {
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> SpanReducer<F> {
    pub fn new(vectors: &[Vec<F>]) -> Self {
        if vectors.is_empty() {
            return SpanReducer { rows: Vec::new(), pivots: Vec::new() };
        }
        let Rref { matrix, pivots } = Matrix::from_rows(vectors.to_vec()).rref();
        let rows = (0..pivots.len()).map(|r| matrix.row(r).to_vec()).collect();
        SpanReducer { rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}
