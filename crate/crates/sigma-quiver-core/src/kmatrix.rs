//! Rational-function matrices on tensor legs: the A₁ boundary matrix `𝒦₁(a)`, Yang's `ℛ(u)`,
//! and exact checks of unitarity, Yang–Baxter, the reflection equation, fusion and the
//! dressed operator `𝒮`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{random_point, Poly, RatFunc, HBAR};
use crate::rational::rng_from_seed;
use crate::Q;

#[derive(Clone, Debug)]
pub struct RFMatrix {
    legs: Vec<usize>,
    data: Vec<RatFunc>,
}

impl RFMatrix {
    pub fn size(&self) -> usize {
        self.legs.iter().product()
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn zeros(legs: &[usize]) -> Self {
        let n: usize = legs.iter().product();
        RFMatrix { legs: legs.to_vec(), data: vec![RatFunc::zero(); n * n] }
    }

    pub fn identity(legs: &[usize]) -> Self {
        let mut m = RFMatrix::zeros(legs);
        let n = m.size();
        for i in 0..n {
            m.data[i * n + i] = RatFunc::one();
        }
        m
    }

    pub fn from_entries(legs: &[usize], data: Vec<RatFunc>) -> Result<Self> {
        let n: usize = legs.iter().product();
        if data.len() != n * n {
            return Err(Error::Shape(format!("{} entries for size {n}", data.len())));
        }
        Ok(RFMatrix { legs: legs.to_vec(), data })
    }

    /// Constant matrix over `Q`.
    pub fn constant(legs: &[usize], rows: &[Vec<Q>]) -> Result<Self> {
        let data = rows.iter().flatten().map(|x| RatFunc::poly(Poly::constant(x.clone()))).collect();
        RFMatrix::from_entries(legs, data)
    }

    pub fn get(&self, r: usize, c: usize) -> &RatFunc {
        &self.data[r * self.size() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: RatFunc) {
        let n = self.size();
        self.data[r * n + c] = x;
    }

    pub fn mul(&self, o: &RFMatrix) -> Result<RFMatrix> {
        if self.size() != o.size() {
            return Err(Error::Shape(format!("{} vs {}", self.size(), o.size())));
        }
        let n = self.size();
        let mut out = RFMatrix::zeros(&self.legs);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn chain(ms: &[&RFMatrix]) -> Result<RFMatrix> {
        let mut it = ms.iter();
        let mut acc = (*it.next().ok_or_else(|| Error::Shape("empty product".into()))?).clone();
        for m in it {
            acc = acc.mul(m)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, s: &RatFunc) -> RFMatrix {
        RFMatrix { legs: self.legs.clone(), data: self.data.iter().map(|x| x.mul(s)).collect() }
    }

    /// First `(row, col)` where the two matrices differ, exactly.
    pub fn first_difference(&self, o: &RFMatrix) -> Option<(usize, usize)> {
        if self.size() != o.size() {
            return Some((usize::MAX, usize::MAX));
        }
        let n = self.size();
        (0..n * n).find(|&k| !self.data[k].equals(&o.data[k])).map(|k| (k / n, k % n))
    }

    pub fn equals(&self, o: &RFMatrix) -> bool {
        self.first_difference(o).is_none()
    }

    /// Fast randomized pre-check; `false` is conclusive, `true` is not.
    pub fn probably_equals(&self, o: &RFMatrix, seed: u64, trials: usize) -> bool {
        if self.size() != o.size() {
            return false;
        }
        let nv = self.data.iter().chain(&o.data).map(|x| x.num_vars()).max().unwrap_or(0);
        let mut rng = rng_from_seed(seed);
        let mut done = 0;
        let mut attempts = 0;
        while done < trials && attempts < 10 * trials {
            attempts += 1;
            let pt = random_point(nv, &mut rng, 50);
            let vals: Option<Vec<(Q, Q)>> = self.data.iter().zip(&o.data).map(|(x, y)| Some((x.eval(&pt)?, y.eval(&pt)?))).collect();
            let Some(vals) = vals else { continue };
            if vals.iter().any(|(a, b)| a != b) {
                return false;
            }
            done += 1;
        }
        true
    }

    /// Substitute `ħ = 0` entrywise.
    pub fn at_hbar_zero(&self) -> Option<RFMatrix> {
        let data = self.data.iter().map(|x| x.substitute(HBAR, &Poly::zero())).collect::<Option<Vec<_>>>()?;
        Some(RFMatrix { legs: self.legs.clone(), data })
    }

    /// `m` acting on the legs `positions` (in that order) of a space with legs `legs`.
    pub fn embed(m: &RFMatrix, positions: &[usize], legs: &[usize]) -> Result<RFMatrix> {
        if positions.len() != m.legs.len() || positions.iter().zip(&m.legs).any(|(&p, &d)| p >= legs.len() || legs[p] != d) {
            return Err(Error::Shape(format!("cannot place legs {:?} at {positions:?} in {legs:?}", m.legs)));
        }
        let n: usize = legs.iter().product();
        let digits = |mut k: usize| {
            let mut d = vec![0; legs.len()];
            for (slot, &l) in d.iter_mut().zip(legs).rev() {
                *slot = k % l;
                k /= l;
            }
            d
        };
        let sub = |d: &[usize]| positions.iter().fold(0, |acc, &p| acc * legs[p] + d[p]);
        let mut out = RFMatrix::zeros(legs);
        for r in 0..n {
            let dr = digits(r);
            for c in 0..n {
                let dc = digits(c);
                let spectators_agree = (0..legs.len()).filter(|k| !positions.contains(k)).all(|k| dr[k] == dc[k]);
                if spectators_agree {
                    out.set(r, c, m.get(sub(&dr), sub(&dc)).clone());
                }
            }
        }
        Ok(out)
    }
}

fn scalar_rf(p: Poly) -> RatFunc {
    RatFunc::poly(p)
}

/// Leg swap on `ℂ^d ⊗ ℂ^d`.
pub fn swap(d: usize) -> RFMatrix {
    let mut m = RFMatrix::zeros(&[d, d]);
    for i in 0..d {
        for j in 0..d {
            m.set(i * d + j, j * d + i, RatFunc::one());
        }
    }
    m
}

/// `(I − (ħ/a)X)/(1 − ħ/a)` with `X = [[0,1],[1,0]]`, written as `(aI − ħX)/(a − ħ)`.
pub fn k_example(a: &Poly) -> RFMatrix {
    let h = Poly::var(HBAR);
    let den = a.sub(&h);
    let diag = RatFunc::new(a.clone(), den.clone()).expect("a − ħ ≠ 0");
    let off = RatFunc::new(h.neg(), den).expect("a − ħ ≠ 0");
    RFMatrix::from_entries(&[2], vec![diag.clone(), off.clone(), off, diag]).expect("2×2")
}

/// `(I − (ħ/u)P)/(1 − ħ/u)` on `ℂ^d ⊗ ℂ^d`.
pub fn yang_r(u: &Poly, d: usize) -> RFMatrix {
    let h = Poly::var(HBAR);
    let den = u.sub(&h);
    let id = RFMatrix::identity(&[d, d]).scale(&scalar_rf(u.clone()));
    let p = swap(d).scale(&scalar_rf(h.neg()));
    let inv = RatFunc::new(Poly::one(), den).expect("u − ħ ≠ 0");
    let data = id.data.iter().zip(&p.data).map(|(x, y)| x.add(y).mul(&inv)).collect();
    RFMatrix { legs: vec![d, d], data }
}

/// Both sides of `𝒦₂(a₂)ℛ(a₁+a₂)𝒦₁(a₁)ℛ(a₁−a₂) = ℛ(a₁−a₂)𝒦₁(a₁)ℛ(a₁+a₂)𝒦₂(a₂)`.
/// `k1` acts on leg 1, `k2` on leg 2; `r_sum = ℛ(a₁+a₂)`, `r_diff = ℛ(a₁−a₂)` on both legs.
pub fn reflection_equation_sides(k1: &RFMatrix, k2: &RFMatrix, r_sum: &RFMatrix, r_diff: &RFMatrix) -> Result<(RFMatrix, RFMatrix)> {
    let legs = [k1.size(), k2.size()];
    if r_sum.size() != legs[0] * legs[1] || r_diff.size() != r_sum.size() {
        return Err(Error::Shape(format!("ℛ has size {} for legs {legs:?}", r_sum.size())));
    }
    let k1 = RFMatrix::embed(k1, &[0], &legs)?;
    let k2 = RFMatrix::embed(k2, &[1], &legs)?;
    let lhs = RFMatrix::chain(&[&k2, r_sum, &k1, r_diff])?;
    let rhs = RFMatrix::chain(&[r_diff, &k1, r_sum, &k2])?;
    Ok((lhs, rhs))
}

pub fn check_reflection_equation(k1: &RFMatrix, k2: &RFMatrix, r_sum: &RFMatrix, r_diff: &RFMatrix) -> Result<bool> {
    let (lhs, rhs) = reflection_equation_sides(k1, k2, r_sum, r_diff)?;
    Ok(lhs.probably_equals(&rhs, 0x4b, 3) && lhs.equals(&rhs))
}

/// `ℛ₁₂(u−v)ℛ₁₃(u−w)ℛ₂₃(v−w) = ℛ₂₃(v−w)ℛ₁₃(u−w)ℛ₁₂(u−v)` on `(ℂ^d)^{⊗3}`.
pub fn check_yang_baxter(r: &dyn Fn(&Poly) -> RFMatrix, u: &Poly, v: &Poly, w: &Poly, d: usize) -> Result<bool> {
    let legs = [d, d, d];
    let r12 = RFMatrix::embed(&r(&u.sub(v)), &[0, 1], &legs)?;
    let r13 = RFMatrix::embed(&r(&u.sub(w)), &[0, 2], &legs)?;
    let r23 = RFMatrix::embed(&r(&v.sub(w)), &[1, 2], &legs)?;
    let lhs = RFMatrix::chain(&[&r12, &r13, &r23])?;
    let rhs = RFMatrix::chain(&[&r23, &r13, &r12])?;
    Ok(lhs.equals(&rhs))
}

/// `m(a)·m(−a) = I`, given both factors.
pub fn check_unitary(m: &RFMatrix, m_neg: &RFMatrix) -> Result<bool> {
    Ok(m.mul(m_neg)?.equals(&RFMatrix::identity(m.legs())))
}

#[derive(Clone, Debug)]
pub struct Fusion {
    /// `ℛ(a₂−a₁)𝒦₂(a₂)ℛ(a₁+a₂)𝒦₁(a₁)`
    pub left: RFMatrix,
    /// `𝒦₁(a₁)ℛ(a₁+a₂)𝒦₂(a₂)ℛ(a₂−a₁)`
    pub right: RFMatrix,
    pub agree: bool,
}

impl Fusion {
    /// The fused matrix when both factorizations agree.
    pub fn fused(&self) -> Result<&RFMatrix> {
        if self.agree {
            Ok(&self.left)
        } else {
            Err(Error::Certificate("fusion factorizations disagree (reflection equation fails for the inputs)".into()))
        }
    }
}

/// Both factorizations of the fused boundary matrix; `r_rev = ℛ(a₂−a₁)`.
pub fn fusion(k1: &RFMatrix, k2: &RFMatrix, r_sum: &RFMatrix, r_rev: &RFMatrix) -> Result<Fusion> {
    let legs = [k1.size(), k2.size()];
    let k1 = RFMatrix::embed(k1, &[0], &legs)?;
    let k2 = RFMatrix::embed(k2, &[1], &legs)?;
    let left = RFMatrix::chain(&[r_rev, &k2, r_sum, &k1])?;
    let right = RFMatrix::chain(&[&k1, r_sum, &k2, r_rev])?;
    let agree = left.equals(&right);
    Ok(Fusion { left, right, agree })
}

/// `𝒮 = ℛ₀ₘ(a₀−bₘ)⋯ℛ₀₁(a₀−b₁)·𝒦₀(a₀)·ℛ₀₁(a₀+b₁)⋯ℛ₀ₘ(a₀+bₘ)` on legs `[0, 1, …, m]`.
/// `r` builds `ℛ(x)` on two legs of dimension `d`; `k0` is `𝒦₀(a₀)`.
pub fn s_operator(k0: &RFMatrix, r: &dyn Fn(&Poly) -> RFMatrix, a0: &Poly, spectators: &[Poly]) -> Result<RFMatrix> {
    let d = k0.size();
    let legs = vec![d; spectators.len() + 1];
    let mut s = RFMatrix::embed(k0, &[0], &legs)?;
    for (j, b) in spectators.iter().enumerate() {
        let left = RFMatrix::embed(&r(&a0.sub(b)), &[0, j + 1], &legs)?;
        let right = RFMatrix::embed(&r(&a0.add(b)), &[0, j + 1], &legs)?;
        s = RFMatrix::chain(&[&left, &s, &right])?;
    }
    Ok(s)
}

/// Reflection equation for `𝒮` in the doubled auxiliary legs `(0, 0′)` with shared spectators:
/// `ℛ₀₀′(u−v)𝒮₀(u)ℛ₀₀′(u+v)𝒮₀′(v) = 𝒮₀′(v)ℛ₀₀′(u+v)𝒮₀(u)ℛ₀₀′(u−v)`.
/// Returns both sides on legs `[0, 0′, 1, …, m]`.
pub fn s_reflection_sides(
    k: &dyn Fn(&Poly) -> RFMatrix,
    r: &dyn Fn(&Poly) -> RFMatrix,
    u: &Poly,
    v: &Poly,
    spectators: &[Poly],
) -> Result<(RFMatrix, RFMatrix)> {
    s_reflection_sides_oriented(k, r, u, v, spectators, Orientation::Literal)
}

/// Which argument the outer `ℛ` factors take in a reflection equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `ℛ(a₁−a₂)` outside, as written in the equation above.
    Literal,
    /// `ℛ(a₂−a₁)` outside.
    Reversed,
}

impl Orientation {
    fn diff(self, x: &Poly, y: &Poly) -> Poly {
        match self {
            Orientation::Literal => x.sub(y),
            Orientation::Reversed => y.sub(x),
        }
    }
}

pub fn s_reflection_sides_oriented(
    k: &dyn Fn(&Poly) -> RFMatrix,
    r: &dyn Fn(&Poly) -> RFMatrix,
    u: &Poly,
    v: &Poly,
    spectators: &[Poly],
    orientation: Orientation,
) -> Result<(RFMatrix, RFMatrix)> {
    let su = s_operator(&k(u), r, u, spectators)?;
    let sv = s_operator(&k(v), r, v, spectators)?;
    let d = su.legs()[0];
    let m = spectators.len();
    let legs = vec![d; m + 2];
    let rest: Vec<usize> = (2..m + 2).collect();
    let pos0: Vec<usize> = core::iter::once(0).chain(rest.iter().copied()).collect();
    let pos1: Vec<usize> = core::iter::once(1).chain(rest.iter().copied()).collect();
    let s0 = RFMatrix::embed(&su, &pos0, &legs)?;
    let s1 = RFMatrix::embed(&sv, &pos1, &legs)?;
    let r_diff = RFMatrix::embed(&r(&orientation.diff(u, v)), &[0, 1], &legs)?;
    let r_sum = RFMatrix::embed(&r(&u.add(v)), &[0, 1], &legs)?;
    let lhs = RFMatrix::chain(&[&r_diff, &s0, &r_sum, &s1])?;
    let rhs = RFMatrix::chain(&[&s1, &r_sum, &s0, &r_diff])?;
    Ok((lhs, rhs))
}

/// Doubled-space dimension used by [`s_reflection_sides`] for `m` spectators of dimension `d`.
pub fn doubled_dim(d: usize, m: usize) -> usize {
    d.pow(m as u32 + 2)
}

/// `true` iff every entry is the constant of the identity after `ħ = 0`.
pub fn is_identity_at_hbar_zero(m: &RFMatrix) -> bool {
    m.at_hbar_zero().is_some_and(|z| z.equals(&RFMatrix::identity(m.legs())))
}

/// Entry `(r, c)` as a rational function, for tables and reports.
pub fn entry(m: &RFMatrix, r: usize, c: usize) -> RatFunc {
    m.get(r, c).clone()
}

/// A generic constant non-diagonal `2×2`, for negative controls.
pub fn generic_constant() -> RFMatrix {
    let q = |n: i64| Q::from_integer(n.into());
    RFMatrix::constant(&[2], &[vec![q(2), q(3)], vec![q(5), q(7)]]).expect("2×2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{a_var, U, V, W};

    #[test]
    fn hbar_zero_and_unitarity() {
        let a = Poly::var(a_var(1));
        assert!(is_identity_at_hbar_zero(&k_example(&a)));
        assert!(check_unitary(&k_example(&a), &k_example(&a.neg())).unwrap());
        let u = Poly::var(U);
        assert!(check_unitary(&yang_r(&u, 2), &yang_r(&u.neg(), 2)).unwrap());
    }

    #[test]
    fn yang_baxter() {
        let r = |x: &Poly| yang_r(x, 2);
        assert!(check_yang_baxter(&r, &Poly::var(U), &Poly::var(V), &Poly::var(W), 2).unwrap());
    }
}
