//! Dense exact rational matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::rational::{q, rand_q, Rng, Q};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn scalar(n: usize, s: &Q) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    /// Row-major data; panics if the length does not match.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Q>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length mismatch");
        QMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        Self::from_vec(rows, cols, data.iter().map(|&x| q(x)).collect())
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        QMatrix { rows: r, cols: c, data }
    }

    pub fn random(rows: usize, cols: usize, rng: &mut Rng, r: i64) -> Self {
        let data = (0..rows * cols).map(|_| rand_q(rng, r)).collect();
        QMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Q] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| if r == c { self[(r, c)].is_one() } else { self[(r, c)].is_zero() })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.shape(), o.shape(), "add shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.shape(), o.shape(), "sub shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, s: &Q) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "mul shape mismatch {:?} * {:?}", self.shape(), o.shape());
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = &o.data[k * o.cols + c];
                    if !b.is_zero() {
                        out.data[r * o.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Product of a chain, rightmost applied first; `n` is the source dimension used when the chain is empty.
    pub fn chain(ms: &[&QMatrix], n: usize) -> Self {
        let mut acc = Self::identity(n);
        for m in ms.iter().rev() {
            acc = m.mul(&acc);
        }
        acc
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> Q {
        assert!(self.is_square());
        (0..self.rows).fold(Q::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of range");
        let mut b = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                b[(r, c)] = self[(r0 + r, c0 + c)].clone();
            }
        }
        b
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &QMatrix) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "set_block out of range");
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
    }

    pub fn hstack(parts: &[&QMatrix], rows: usize) -> Self {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut c0 = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            m.set_block(0, c0, p);
            c0 += p.cols;
        }
        m
    }

    pub fn vstack(parts: &[&QMatrix], cols: usize) -> Self {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut m = Self::zeros(rows, cols);
        let mut r0 = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack col mismatch");
            m.set_block(r0, 0, p);
            r0 += p.rows;
        }
        m
    }

    pub fn block_diag(parts: &[&QMatrix]) -> Self {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            m.set_block(r0, c0, p);
            r0 += p.rows;
            c0 += p.cols;
        }
        m
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m[(row, col)].recip();
            for c in col..m.cols {
                let v = &m[(row, c)] * &inv;
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in col..m.cols {
                    let v = &m[(row, c)] * &f;
                    m[(r, c)] -= v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space as the columns of the returned matrix.
    pub fn kernel(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k[(f, j)] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                k[(p, j)] = -r[(i, f)].clone();
            }
        }
        k
    }

    /// Basis of the column space (the pivot columns of `self`).
    pub fn column_space(&self) -> Self {
        let (_, pivots) = self.rref();
        let mut b = Self::zeros(self.rows, pivots.len());
        for (j, &p) in pivots.iter().enumerate() {
            for r in 0..self.rows {
                b[(r, j)] = self[(r, p)].clone();
            }
        }
        b
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let aug = Self::hstack(&[self, &Self::identity(n)], n);
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// One solution of `self * X = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &QMatrix) -> Option<Self> {
        assert_eq!(self.rows, b.rows, "solve row mismatch");
        let aug = Self::hstack(&[self, b], self.rows);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x[(p, c)] = r[(i, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    /// Flatten column-major into a single column vector.
    pub fn vec_col_major(&self) -> Vec<Q> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                v.push(self[(r, c)].clone());
            }
        }
        v
    }

    pub fn column_vector(v: Vec<Q>) -> Self {
        let n = v.len();
        Self::from_vec(n, 1, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = QMatrix::from_i64(2, 2, &[1, 2, 3, 4]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(QMatrix::from_i64(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = QMatrix::from_i64(2, 4, &[1, 2, 3, 4, 2, 4, 6, 9]);
        let k = m.kernel();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_inconsistent() {
        let a = QMatrix::from_i64(2, 1, &[1, 1]);
        assert!(a.solve(&QMatrix::from_i64(2, 1, &[1, 2])).is_none());
        assert_eq!(a.solve(&QMatrix::from_i64(2, 1, &[3, 3])).unwrap(), QMatrix::from_i64(1, 1, &[3]));
    }
}
