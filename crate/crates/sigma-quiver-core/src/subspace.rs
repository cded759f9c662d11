//! Subspaces of `Q^n` held as canonical column-echelon bases.

use crate::matrix::QMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: QMatrix,
}

impl Subspace {
    /// Span of the columns of `m`.
    pub fn span(m: &QMatrix) -> Self {
        let ambient = m.rows();
        let (r, pivots) = m.transpose().rref();
        let basis = r.block(0, 0, pivots.len(), ambient).transpose();
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: QMatrix::zeros(ambient, 0) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: QMatrix::identity(ambient) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis, one vector per column.
    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    /// Kernel of `m` as a subspace of its source.
    pub fn kernel_of(m: &QMatrix) -> Self {
        Self::span(&m.kernel())
    }

    pub fn image_of(m: &QMatrix) -> Self {
        Self::span(m)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        let both = QMatrix::hstack(&[&self.basis, &other.basis], self.ambient);
        both.rank() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Self {
        assert_eq!(self.ambient, other.ambient);
        Self::span(&QMatrix::hstack(&[&self.basis, &other.basis], self.ambient))
    }

    pub fn intersect(&self, other: &Subspace) -> Self {
        assert_eq!(self.ambient, other.ambient);
        // Solve B1 a = B2 b; the intersection is spanned by B1 a.
        let m = QMatrix::hstack(&[&self.basis, &other.basis.neg()], self.ambient);
        let k = m.kernel();
        let a = k.block(0, 0, self.dim(), k.cols());
        Self::span(&self.basis.mul(&a))
    }

    /// Image under the linear map `m` (source must be this ambient space).
    pub fn image_under(&self, m: &QMatrix) -> Self {
        assert_eq!(m.cols(), self.ambient);
        Self::span(&m.mul(&self.basis))
    }

    /// Preimage under `m`: `{x : m x ∈ self}`.
    pub fn preimage_under(&self, m: &QMatrix) -> Self {
        assert_eq!(m.rows(), self.ambient);
        // Project onto a complement: x ↦ annihilator(self) · m x must vanish.
        let ann = self.annihilator();
        Self::kernel_of(&ann.mul(m))
    }

    /// Rows span the annihilator of this subspace (as linear functionals).
    pub fn annihilator(&self) -> QMatrix {
        self.basis.transpose().kernel().transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(&QMatrix::from_i64(3, 2, &[1, 0, 1, 1, 0, 1]));
        let b = Subspace::span(&QMatrix::from_i64(3, 2, &[2, 1, 3, 1, 1, 0]));
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_dimension() {
        let a = Subspace::span(&QMatrix::from_i64(3, 2, &[1, 0, 0, 1, 0, 0]));
        let b = Subspace::span(&QMatrix::from_i64(3, 2, &[0, 0, 1, 0, 0, 1]));
        assert_eq!(a.intersect(&b).dim(), 1);
        assert_eq!(a.sum(&b).dim(), 3);
    }
}
