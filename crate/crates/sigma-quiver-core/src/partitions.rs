//! Partitions, Kostka numbers and the slice-label symmetries of type A.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::DimVector;
use crate::maffei::{slice_labels, SliceLabel};

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Partition {
    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `1^{m_1} 2^{m_2} ⋯` from multiplicities (`mult[k]` is the exponent of `k + 1`).
    pub fn from_exponents(mult: &[usize]) -> Self {
        let mut parts = Vec::new();
        for (k, &m) in mult.iter().enumerate() {
            parts.extend(core::iter::repeat_n(k + 1, m));
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Exponent of the part `k` (`k ≥ 1`).
    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    pub fn transpose(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((0..first).map(|k| self.0.iter().filter(|&&p| p > k).count()).collect())
    }

    /// `self ⊵ other` in dominance order (sizes must agree).
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for k in 0..self.len().max(other.len()) {
            a += self.0.get(k).copied().unwrap_or(0);
            b += other.0.get(k).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Remove the first (longest) column, i.e. subtract one from every part.
    pub fn remove_first_column(&self) -> Self {
        Self::new(self.0.iter().map(|&p| p - 1).collect())
    }

    /// Remove one column of the given height, if the diagram has one. Height 0 removes nothing.
    pub fn remove_column_of_height(&self, h: usize) -> Option<Self> {
        if h == 0 {
            return Some(self.clone());
        }
        let mut t = self.transpose().0;
        let pos = t.iter().position(|&c| c == h)?;
        t.remove(pos);
        Some(Partition::new(t).transpose())
    }

    /// Remove the first `a` rows.
    pub fn remove_rows(&self, a: usize) -> Self {
        Partition(self.0.iter().skip(a).copied().collect())
    }
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`,
/// peeling the cells of the largest letter as a horizontal strip.
pub fn kostka(lambda: &Partition, mu: &[usize], cap: usize) -> Result<u64> {
    if lambda.size() > cap {
        return Err(Error::Cap(format!("|λ| = {} exceeds {cap}", lambda.size())));
    }
    if lambda.size() != mu.iter().sum::<usize>() {
        return Ok(0);
    }
    let mut memo = BTreeMap::new();
    Ok(kostka_rec(lambda.parts(), mu, &mut memo))
}

fn kostka_rec(lam: &[usize], mu: &[usize], memo: &mut BTreeMap<(Vec<usize>, usize), u64>) -> u64 {
    let Some((&last, rest)) = mu.split_last() else {
        return lam.is_empty() as u64;
    };
    if let Some(&v) = memo.get(&(lam.to_vec(), mu.len())) {
        return v;
    }
    let mut total = 0;
    let mut nu = vec![0; lam.len()];
    strips(lam, 0, last, &mut nu, &mut |nu| {
        let inner: Vec<usize> = nu.iter().copied().filter(|&x| x > 0).collect();
        total += kostka_rec(&inner, rest, memo);
    });
    memo.insert((lam.to_vec(), mu.len()), total);
    total
}

/// Enumerate `ν ⊆ λ` with `λ/ν` a horizontal strip of size `left`.
fn strips(lam: &[usize], i: usize, left: usize, nu: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if i == lam.len() {
        if left == 0 {
            f(nu);
        }
        return;
    }
    let below = lam.get(i + 1).copied().unwrap_or(0);
    let max_r = left.min(lam[i] - below);
    for r in 0..=max_r {
        nu[i] = lam[i] - r;
        strips(lam, i + 1, left - r, nu, f);
    }
}

/// Result of the rectangular symmetry comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectSymmetry {
    pub labels: SliceLabel,
    pub hat_labels: SliceLabel,
    /// `μ_i + μ̂_{n−i+2} = Σ w` for all `i`.
    pub mu_hat_ok: bool,
    /// `μ̂′` agrees with the exponent formula read off `μ′`.
    pub mu_prime_hat_ok: bool,
    /// `K_{λ,μ′}` and `K_{λ̂,μ̂′}`.
    pub kostka: (u64, u64),
    /// The same numbers with shape and content exchanged.
    pub kostka_transposed: (u64, u64),
    pub identity_ok: bool,
}

/// `θ(i) = n+1−i` applied to a dimension vector.
pub fn theta_flip(v: &[i64]) -> DimVector {
    v.iter().rev().copied().collect()
}

pub fn rect_symmetry(v: &[i64], w: &[i64], kostka_cap: usize) -> Result<RectSymmetry> {
    let n = v.len();
    let labels = slice_labels(v, w)?;
    let hat_labels = slice_labels(&theta_flip(v), &theta_flip(w))?;
    let sum_w: i64 = w.iter().sum();
    let mu_hat_ok = (0..=n).all(|i| labels.mu[i] + hat_labels.mu[n - i] == sum_w);
    // μ̂′ = 1^{μ′_n} 2^{μ′_{n−1}} ⋯ n^{μ′_1} (n+1)^{μ′_0}, with μ′_0 = Σw − Σ_{k≤n+1} μ′_k.
    let mp = &labels.mu_prime;
    let slack = sum_w - (1..=n + 1).map(|k| mp.multiplicity(k) as i64).sum::<i64>();
    let mu_prime_hat_ok = if slack < 0 {
        false
    } else {
        let mut mult: Vec<usize> = (1..=n).map(|k| mp.multiplicity(n + 1 - k)).collect();
        mult.push(slack as usize);
        Partition::from_exponents(&mult) == hat_labels.mu_prime
    };
    let k1 = kostka(&labels.lambda, labels.mu_prime.parts(), kostka_cap)?;
    let k2 = kostka(&hat_labels.lambda, hat_labels.mu_prime.parts(), kostka_cap)?;
    let k3 = kostka(&labels.mu_prime, labels.lambda.parts(), kostka_cap)?;
    let k4 = kostka(&hat_labels.mu_prime, hat_labels.lambda.parts(), kostka_cap)?;
    let identity_ok = mu_hat_ok && mu_prime_hat_ok && k1 == k2 && k3 == k4;
    Ok(RectSymmetry { labels, hat_labels, mu_hat_ok, mu_prime_hat_ok, kostka: (k1, k2), kostka_transposed: (k3, k4), identity_ok })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnRemoval {
    pub labels: SliceLabel,
    pub mu_prime_breve: Partition,
    pub lambda_breve: Partition,
    /// The shifted data on `A_{n+1}` reproduces the closed formulas.
    pub formula_ok: bool,
    /// Removing a column of height `Σw` from `μ̆′` and the first column of `λ̆` recovers `(μ′, λ)`.
    pub inverse_ok: bool,
}

pub fn column_removal(v: &[i64], w: &[i64]) -> Result<ColumnRemoval> {
    let labels = slice_labels(v, w)?;
    let sum_w: i64 = w.iter().sum();
    // Closed formulas: μ̆ = μ ∪ {Σw}, λ̆ = ((i+1)^{w_i}).
    let mut mu_b: Vec<usize> = labels.mu.iter().map(|&m| m as usize).collect();
    mu_b.push(sum_w as usize);
    let mu_prime_breve = Partition::new(mu_b).transpose();
    let lambda_breve = Partition::new(
        w.iter().enumerate().flat_map(|(i, &m)| core::iter::repeat_n(i + 2, m as usize)).collect(),
    );
    // Second route: shift to A_{n+1} with a zero first vertex.
    let mut v2 = vec![0];
    v2.extend_from_slice(v);
    let mut w2 = vec![0];
    w2.extend_from_slice(w);
    let shifted = slice_labels(&v2, &w2)?;
    let formula_ok = shifted.mu_prime == mu_prime_breve && shifted.lambda == lambda_breve;
    let inverse_ok = lambda_breve.remove_first_column() == labels.lambda
        && mu_prime_breve.remove_column_of_height(sum_w as usize).as_ref() == Some(&labels.mu_prime);
    Ok(ColumnRemoval { labels, mu_prime_breve, lambda_breve, formula_ok, inverse_ok })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowAddition {
    pub labels: SliceLabel,
    pub mu_prime_ddot: Partition,
    pub lambda_ddot: Partition,
    pub formula_ok: bool,
    pub inverse_ok: bool,
}

pub fn row_addition(v: &[i64], w: &[i64], a: usize) -> Result<RowAddition> {
    let n = v.len();
    let labels = slice_labels(v, w)?;
    let mut mult: Vec<usize> = (1..=n + 1).map(|k| labels.mu_prime.multiplicity(k)).collect();
    mult[n] += a;
    let mu_prime_ddot = Partition::from_exponents(&mult);
    let mut lam = labels.lambda.parts().to_vec();
    lam.extend(core::iter::repeat_n(n + 1, a));
    let lambda_ddot = Partition::new(lam);
    let mut v2 = v.to_vec();
    v2.push(0);
    let mut w2 = w.to_vec();
    w2.push(a as i64);
    let extended = slice_labels(&v2, &w2)?;
    let formula_ok = extended.mu_prime == mu_prime_ddot && extended.lambda == lambda_ddot;
    let inverse_ok = mu_prime_ddot.remove_rows(a) == labels.mu_prime && lambda_ddot.remove_rows(a) == labels.lambda;
    Ok(RowAddition { labels, mu_prime_ddot, lambda_ddot, formula_ok, inverse_ok })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalType {
    Orthogonal,
    Symplectic,
}

impl ClassicalType {
    pub fn name(self) -> &'static str {
        match self {
            ClassicalType::Orthogonal => "orthogonal",
            ClassicalType::Symplectic => "symplectic",
        }
    }
}

/// Type of the form on `W̃₁` for an alternating sign pattern on `A_n`: its sign is `δ_{w,1}`.
pub fn classical_type(delta: &[i8]) -> Result<ClassicalType> {
    if delta.is_empty() {
        return Err(Error::Partition("empty sign pattern".into()));
    }
    if delta.windows(2).any(|p| p[0] * p[1] != -1) || delta.iter().any(|&d| d != 1 && d != -1) {
        return Err(Error::Partition(format!("sign pattern {delta:?} does not alternate")));
    }
    Ok(if delta[0] == 1 { ClassicalType::Orthogonal } else { ClassicalType::Symplectic })
}

pub fn describe(p: &Partition) -> String {
    format!("{p}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_kostka() {
        assert_eq!(kostka(&Partition::new(vec![2, 1]), &[2, 1], 20).unwrap(), 1);
        assert_eq!(kostka(&Partition::new(vec![2, 1]), &[1, 1, 1], 20).unwrap(), 2);
        assert_eq!(kostka(&Partition::new(vec![4, 2]), &[6], 20).unwrap(), 0);
    }

    #[test]
    fn transpose_example() {
        assert_eq!(Partition::new(vec![3, 2]).transpose(), Partition::new(vec![2, 2, 1]));
    }
}
