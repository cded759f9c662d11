//! Linear systems in matrix-valued unknowns: `Σ L·X·R = C`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::matrix::QMatrix;
use crate::rational::Q;

#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    nvars: usize,
    rows: Vec<Vec<Q>>,
    rhs: Vec<Q>,
}

/// Affine solution set `particular + span(kernel columns)`.
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Vec<Q>,
    pub kernel: QMatrix,
}

impl LinearSystem {
    pub fn new() -> Self {
        Self::default()
    }

    /// Register an unknown block; returns its id.
    pub fn add_block(&mut self, rows: usize, cols: usize) -> usize {
        self.shapes.push((rows, cols));
        self.offsets.push(self.nvars);
        self.nvars += rows * cols;
        for r in &mut self.rows {
            r.resize(self.nvars, Q::zero());
        }
        self.shapes.len() - 1
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn nequations(&self) -> usize {
        self.rows.len()
    }

    /// Add the entrywise equations `Σ_k L_k X_{id_k} R_k = rhs`.
    pub fn add_equation(&mut self, terms: &[(usize, &QMatrix, &QMatrix)], rhs: &QMatrix) {
        let (m, n) = rhs.shape();
        let base = self.rows.len();
        for _ in 0..m * n {
            self.rows.push(vec![Q::zero(); self.nvars]);
        }
        for (r, c) in (0..m).flat_map(|r| (0..n).map(move |c| (r, c))) {
            self.rhs.push(rhs[(r, c)].clone());
            let row = &mut self.rows[base + r * n + c];
            for &(id, l, rr) in terms {
                let (br, bc) = self.shapes[id];
                assert_eq!(l.shape(), (m, br), "left factor shape");
                assert_eq!(rr.shape(), (bc, n), "right factor shape");
                for a in 0..br {
                    if l[(r, a)].is_zero() {
                        continue;
                    }
                    for b in 0..bc {
                        if rr[(b, c)].is_zero() {
                            continue;
                        }
                        row[self.offsets[id] + a * bc + b] += &l[(r, a)] * &rr[(b, c)];
                    }
                }
            }
        }
    }

    pub fn matrix(&self) -> (QMatrix, QMatrix) {
        let a = QMatrix::from_vec(self.rows.len(), self.nvars, self.rows.iter().flatten().cloned().collect());
        let b = QMatrix::from_vec(self.rhs.len(), 1, self.rhs.clone());
        (a, b)
    }

    pub fn solve(&self) -> Option<Solution> {
        let (a, b) = self.matrix();
        let x = a.solve(&b)?;
        Some(Solution { particular: x.col(0), kernel: a.kernel() })
    }

    /// Read block `id` out of a solution vector.
    pub fn block(&self, u: &[Q], id: usize) -> QMatrix {
        let (r, c) = self.shapes[id];
        let o = self.offsets[id];
        QMatrix::from_vec(r, c, u[o..o + r * c].to_vec())
    }
}

impl Solution {
    /// `particular + Σ c_k·kernel_k`.
    pub fn point(&self, coeffs: &[Q]) -> Vec<Q> {
        let mut u = self.particular.clone();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, x) in u.iter_mut().enumerate() {
                *x += c * &self.kernel[(r, k)];
            }
        }
        u
    }

    pub fn dim(&self) -> usize {
        self.kernel.cols()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylvester_like() {
        // X·A = B with A invertible.
        let a = QMatrix::from_i64(2, 2, &[1, 2, 0, 1]);
        let b = QMatrix::from_i64(1, 2, &[3, 4]);
        let mut s = LinearSystem::new();
        let x = s.add_block(1, 2);
        s.add_equation(&[(x, &QMatrix::identity(1), &a)], &b);
        let sol = s.solve().unwrap();
        assert_eq!(sol.dim(), 0);
        assert_eq!(s.block(&sol.particular, x).mul(&a), b);
    }
}
