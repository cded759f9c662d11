//! Graded bilinear forms, adjoints, isometries, Jordan types and orthogonal complements.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::QMatrix;
use crate::partitions::Partition;
use crate::rational::{q, Rng};
use crate::subspace::Subspace;

/// Per-vertex Gram matrices with optional sign metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormedGrading {
    grams: Vec<QMatrix>,
    delta: Option<Vec<i8>>,
}

impl FormedGrading {
    pub fn new(grams: Vec<QMatrix>, delta: Option<Vec<i8>>) -> Result<Self> {
        for (i, g) in grams.iter().enumerate() {
            if !g.is_invertible() {
                return Err(Error::InvalidForm(format!("Gram matrix at vertex {i} is singular")));
            }
        }
        if let Some(d) = &delta {
            if d.len() != grams.len() {
                return Err(Error::InvalidForm("sign vector length".into()));
            }
            for (i, (g, &s)) in grams.iter().zip(d).enumerate() {
                let expect = if s == 1 { g.clone() } else { g.neg() };
                if g.transpose() != expect {
                    return Err(Error::InvalidForm(format!("vertex {i} is not a {s}-form")));
                }
            }
        }
        Ok(FormedGrading { grams, delta })
    }

    /// Identity Gram for `δ = +1`, `[[0, I], [−I, 0]]` for `δ = −1` (even dimension required).
    pub fn canonical(dims: &[i64], delta: &[i8]) -> Result<Self> {
        let grams = dims
            .iter()
            .zip(delta)
            .map(|(&d, &s)| canonical_gram(d as usize, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(grams, Some(delta.to_vec()))
    }

    /// Symmetric identity forms.
    pub fn identity(dims: &[i64]) -> Self {
        let n = dims.len();
        FormedGrading {
            grams: dims.iter().map(|&d| QMatrix::identity(d as usize)).collect(),
            delta: Some(alloc::vec![1; n]),
        }
    }

    pub fn gram(&self, i: usize) -> &QMatrix {
        &self.grams[i]
    }

    pub fn grams(&self) -> &[QMatrix] {
        &self.grams
    }

    pub fn delta(&self) -> Option<&[i8]> {
        self.delta.as_deref()
    }

    pub fn dims(&self) -> Vec<i64> {
        self.grams.iter().map(|g| g.rows() as i64).collect()
    }
}

pub fn canonical_gram(dim: usize, delta: i8) -> Result<QMatrix> {
    if delta == 1 {
        return Ok(QMatrix::identity(dim));
    }
    if !dim.is_multiple_of(2) {
        return Err(Error::InvalidForm(format!("symplectic form on odd dimension {dim}")));
    }
    let h = dim / 2;
    let mut g = QMatrix::zeros(dim, dim);
    for i in 0..h {
        g[(i, h + i)] = q(1);
        g[(h + i, i)] = q(-1);
    }
    Ok(g)
}

/// `T* = G_src⁻¹ ᵗT G_dst`, so that `(Te, e′)_dst = (e, T*e′)_src`.
pub fn right_adjoint(t: &QMatrix, src: &QMatrix, dst: &QMatrix) -> Result<QMatrix> {
    if t.cols() != src.rows() || t.rows() != dst.rows() {
        return Err(Error::Shape(format!("adjoint of {:?} with forms {}/{}", t.shape(), src.rows(), dst.rows())));
    }
    let inv = src.inverse().ok_or(Error::Singular)?;
    Ok(inv.mul(&t.transpose()).mul(dst))
}

/// `T^!` with `(e′, Te)_dst = (T^! e′, e)_src`.
pub fn left_adjoint(t: &QMatrix, src: &QMatrix, dst: &QMatrix) -> Result<QMatrix> {
    if t.cols() != src.rows() || t.rows() != dst.rows() {
        return Err(Error::Shape(format!("adjoint of {:?} with forms {}/{}", t.shape(), src.rows(), dst.rows())));
    }
    let inv_t = src.transpose().inverse().ok_or(Error::Singular)?;
    Ok(inv_t.mul(&t.transpose()).mul(&dst.transpose()))
}

/// Jordan type of a nilpotent matrix, read from the rank sequence.
pub fn jordan_type(n: &QMatrix) -> Result<Partition> {
    if !n.is_square() {
        return Err(Error::Shape("jordan_type needs a square matrix".into()));
    }
    let d = n.rows();
    let mut ranks = alloc::vec![d];
    let mut p = QMatrix::identity(d);
    for _ in 0..d {
        p = p.mul(n);
        ranks.push(p.rank());
    }
    if ranks[d] != 0 {
        return Err(Error::NotNilpotent);
    }
    // Number of blocks of size ≥ k is rank N^{k−1} − rank N^k.
    let conj: Vec<usize> = (1..=d).map(|k| ranks[k - 1] - ranks[k]).filter(|&x| x > 0).collect();
    Ok(Partition::new(conj).transpose())
}

/// `{x : (s, x) = 0 for all s ∈ S}`, i.e. the kernel of `ᵗS·G`.
pub fn orthogonal_complement(s: &Subspace, gram: &QMatrix) -> Subspace {
    let m = s.basis().transpose().mul(gram);
    if s.dim() == 0 {
        return Subspace::full(gram.rows());
    }
    Subspace::kernel_of(&m)
}

/// Cayley transform `(I + x)(I − x)⁻¹` of a random `x = y − y*`; retries on singularity.
pub fn sample_isometry(gram: &QMatrix, rng: &mut Rng) -> Result<QMatrix> {
    let d = gram.rows();
    for _ in 0..64 {
        let y = QMatrix::random(d, d, rng, 3);
        let x = y.sub(&right_adjoint(&y, gram, gram)?);
        let id = QMatrix::identity(d);
        if let Some(inv) = id.sub(&x).inverse() {
            let g = id.add(&x).mul(&inv);
            debug_assert!(g.mul(&right_adjoint(&g, gram, gram)?).is_identity());
            return Ok(g);
        }
    }
    Err(Error::SamplingExhausted(64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    /// `x = −x*`
    pub lie_isometry: bool,
    /// `x = x*`
    pub symmetric_space: bool,
}

pub fn classify_membership(x: &QMatrix, gram: &QMatrix) -> Result<Membership> {
    let xs = right_adjoint(x, gram, gram)?;
    Ok(Membership { lie_isometry: *x == xs.neg(), symmetric_space: *x == xs })
}

/// Adjacent vertices carry opposite signs.
pub fn is_gamma_alternating(g: &Graph, delta: &[i8]) -> bool {
    g.arrows().iter().all(|a| delta[a.src] * delta[a.dst] == -1)
}

/// Invertible random matrix (rejection sampling).
pub fn random_invertible(d: usize, rng: &mut Rng) -> QMatrix {
    loop {
        let m = QMatrix::random(d, d, rng, 3);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Random invertible symmetric (`δ = 1`) or skew (`δ = −1`) Gram matrix.
/// Panics for a skew form on an odd dimension.
pub fn random_gram(d: usize, delta: i8, rng: &mut Rng) -> QMatrix {
    assert!(delta == 1 || d.is_multiple_of(2), "no symplectic form on odd dimension {d}");
    loop {
        let y = QMatrix::random(d, d, rng, 3);
        let g = if delta == 1 { y.add(&y.transpose()) } else { y.sub(&y.transpose()) };
        if g.is_invertible() {
            return g;
        }
    }
}
