//! Maffei's embedding `Φ: Λ(v, w) → Λ(ṽ, w̃)` for type `A_n`, slice labels, and the
//! induced forms on `Ṽ`.
//!
//! Vertices are 1-based in this module's public data (`i = 0..=n`, with `Ṽ₀ = W̃₁`);
//! the underlying graphs are 0-based as everywhere else.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{right_adjoint, FormedGrading};
use crate::graph::{DimVector, Graph};
use crate::involutions::{self, InvolutionConfig, Mode};
use crate::matrix::QMatrix;
use crate::partitions::Partition;
use crate::rational::{q, Q};
use crate::rep::{is_type_a_path, RepPoint};

/// A copy `W_j^{(h)}`.
pub type Copy = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaffeiDims {
    pub n: usize,
    pub v: DimVector,
    pub w: DimVector,
    /// `ṽ_1..ṽ_n`.
    pub tilde_v: DimVector,
    pub tilde_w1: i64,
    /// `copies[i]` lists `W′_i` for `i = 0..=n`, ordered by `(j, h)`; copies of zero `W_j` are skipped.
    pub copies: Vec<Vec<Copy>>,
}

impl MaffeiDims {
    pub fn new(v: &[i64], w: &[i64]) -> Result<Self> {
        let n = v.len();
        if w.len() != n {
            return Err(Error::Shape("v and w lengths differ".into()));
        }
        if v.iter().chain(w).any(|&x| x < 0) {
            return Err(Error::Shape("negative dimension".into()));
        }
        let tilde_v = (1..=n)
            .map(|i| v[i - 1] + ((i + 1)..=n).map(|j| (j - i) as i64 * w[j - 1]).sum::<i64>())
            .collect();
        let tilde_w1 = (1..=n).map(|j| j as i64 * w[j - 1]).sum();
        let copies = (0..=n)
            .map(|i| {
                ((i + 1)..=n)
                    .filter(|&j| w[j - 1] > 0)
                    .flat_map(|j| (1..=j - i).map(move |h| (j, h)))
                    .collect()
            })
            .collect();
        Ok(MaffeiDims { n, v: v.to_vec(), w: w.to_vec(), tilde_v, tilde_w1, copies })
    }

    /// `dim V_i` with `V_0 = 0`.
    pub fn v_dim(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.v[i - 1] as usize
        }
    }

    pub fn w_dim(&self, j: usize) -> usize {
        self.w[j - 1] as usize
    }

    /// `dim Ṽ_i` with `Ṽ_0 = W̃_1`.
    pub fn vt_dim(&self, i: usize) -> usize {
        if i == 0 {
            self.tilde_w1 as usize
        } else {
            self.tilde_v[i - 1] as usize
        }
    }

    pub fn wprime_dim(&self, i: usize) -> usize {
        self.vt_dim(i) - self.v_dim(i)
    }

    /// Offset of `W_j^{(h)}` inside `Ṽ_i`.
    pub fn offset(&self, i: usize, c: Copy) -> Option<usize> {
        let mut o = self.v_dim(i);
        for &d in &self.copies[i] {
            if d == c {
                return Some(o);
            }
            o += self.w_dim(d.0);
        }
        None
    }

    /// Offset inside `W′_i` rather than `Ṽ_i`.
    pub fn offset_in_wprime(&self, i: usize, c: Copy) -> Option<usize> {
        self.offset(i, c).map(|o| o - self.v_dim(i))
    }

    /// The big graph and `w̃ = (w̃₁, 0, …, 0)`.
    pub fn big_space(&self) -> (Graph, DimVector, DimVector) {
        let mut wt = vec![0; self.n];
        if self.n > 0 {
            wt[0] = self.tilde_w1;
        }
        (Graph::type_a(self.n), self.tilde_v.clone(), wt)
    }
}

pub fn tilde_dims(v: &[i64], w: &[i64]) -> Result<MaffeiDims> {
    MaffeiDims::new(v, w)
}

/// The same construction after relabelling `i ↦ n+1−i`.
pub fn hat_dims(v: &[i64], w: &[i64]) -> Result<MaffeiDims> {
    let rv: Vec<i64> = v.iter().rev().copied().collect();
    let rw: Vec<i64> = w.iter().rev().copied().collect();
    MaffeiDims::new(&rv, &rw)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    T,
    S,
}

/// `grad(T^{j′,h′}_{i,j,h}) = min(h−h′+1, h−h′+1+j′−j)`, `grad(S^{j′,h′}_{i,j,h}) = min(h−h′, h−h′+j′−j)`.
pub fn grad(i: usize, j: usize, h: usize, jp: usize, hp: usize, kind: BlockKind) -> Result<i64> {
    // T: source in W′_i, target in W′_{i+1}; S: source in W′_{i+1}, target in W′_i.
    let (src_lvl, dst_lvl) = match kind {
        BlockKind::T => (i, i + 1),
        BlockKind::S => (i + 1, i),
    };
    let ok = |lvl: usize, jj: usize, hh: usize| jj > lvl && hh >= 1 && hh <= jj - lvl;
    if !ok(src_lvl, jp, hp) || !ok(dst_lvl, j, h) {
        return Err(Error::Shape(format!("grad indices out of range: i={i} ({jp},{hp}) -> ({j},{h})")));
    }
    let d = h as i64 - hp as i64 + jp as i64 - j as i64;
    let base = h as i64 - hp as i64;
    Ok(match kind {
        BlockKind::T => (base + 1).min(d + 1),
        BlockKind::S => base.min(d),
    })
}

/// `(e_i, f_i)` on `W′_i`.
pub fn maffei_sl2(dims: &MaffeiDims, i: usize) -> (QMatrix, QMatrix) {
    let d = dims.wprime_dim(i);
    let mut e = QMatrix::zeros(d, d);
    let mut f = QMatrix::zeros(d, d);
    for &(j, h) in &dims.copies[i] {
        let wj = dims.w_dim(j);
        let src = dims.offset_in_wprime(i, (j, h)).unwrap();
        if h >= 2 {
            let dst = dims.offset_in_wprime(i, (j, h - 1)).unwrap();
            e.set_block(dst, src, &QMatrix::identity(wj));
        }
        if h < j - i {
            let dst = dims.offset_in_wprime(i, (j, h + 1)).unwrap();
            let c = q((h * (j - i - h)) as i64);
            f.set_block(dst, src, &QMatrix::scalar(wj, &c));
        }
    }
    (e, f)
}

/// A point of `Λ(ṽ, w̃)` read through the decomposition `Ṽ_i = V_i ⊕ W′_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigPoint {
    pub dims: MaffeiDims,
    pub point: RepPoint,
}

impl BigPoint {
    pub fn zero(dims: &MaffeiDims) -> Self {
        let (g, vt, wt) = dims.big_space();
        BigPoint { dims: dims.clone(), point: RepPoint::zero(&g, &vt, &wt) }
    }

    /// `x̃_i : Ṽ_i → Ṽ_{i+1}` (`x̃_0 = p̃_1`).
    pub fn xt(&self, i: usize) -> &QMatrix {
        if i == 0 {
            &self.point.p[0]
        } else {
            &self.point.x[2 * (i - 1)]
        }
    }

    /// `ỹ_i : Ṽ_{i+1} → Ṽ_i` (`ỹ_0 = q̃_1`).
    pub fn yt(&self, i: usize) -> &QMatrix {
        if i == 0 {
            &self.point.q[0]
        } else {
            &self.point.x[2 * (i - 1) + 1]
        }
    }

    pub fn xt_mut(&mut self, i: usize) -> &mut QMatrix {
        if i == 0 {
            &mut self.point.p[0]
        } else {
            &mut self.point.x[2 * (i - 1)]
        }
    }

    pub fn yt_mut(&mut self, i: usize) -> &mut QMatrix {
        if i == 0 {
            &mut self.point.q[0]
        } else {
            &mut self.point.x[2 * (i - 1) + 1]
        }
    }

    fn range(&self, i: usize, c: Option<Copy>) -> (usize, usize) {
        match c {
            None => (0, self.dims.v_dim(i)),
            Some(c) => (self.dims.offset(i, c).unwrap(), self.dims.w_dim(c.0)),
        }
    }

    /// Block of `x̃_i` from component `src` of `Ṽ_i` to `dst` of `Ṽ_{i+1}` (`None` is `V`).
    pub fn x_block(&self, i: usize, src: Option<Copy>, dst: Option<Copy>) -> QMatrix {
        let (c0, nc) = self.range(i, src);
        let (r0, nr) = self.range(i + 1, dst);
        self.xt(i).block(r0, c0, nr, nc)
    }

    /// Block of `ỹ_i` from component `src` of `Ṽ_{i+1}` to `dst` of `Ṽ_i`.
    pub fn y_block(&self, i: usize, src: Option<Copy>, dst: Option<Copy>) -> QMatrix {
        let (c0, nc) = self.range(i + 1, src);
        let (r0, nr) = self.range(i, dst);
        self.yt(i).block(r0, c0, nr, nc)
    }

    pub fn set_x_block(&mut self, i: usize, src: Option<Copy>, dst: Option<Copy>, b: &QMatrix) {
        let (c0, _) = self.range(i, src);
        let (r0, _) = self.range(i + 1, dst);
        self.xt_mut(i).set_block(r0, c0, b);
    }

    pub fn set_y_block(&mut self, i: usize, src: Option<Copy>, dst: Option<Copy>, b: &QMatrix) {
        let (c0, _) = self.range(i + 1, src);
        let (r0, _) = self.range(i, dst);
        self.yt_mut(i).set_block(r0, c0, b);
    }

    /// `π_{W′_i} ỹ_i x̃_i |_{W′_i}`.
    pub fn r1_operator(&self, i: usize) -> QMatrix {
        let m = self.yt(i).mul(self.xt(i));
        let o = self.dims.v_dim(i);
        let d = self.dims.wprime_dim(i);
        m.block(o, o, d, d)
    }

    /// `ỹ_i x̃_i − x̃_{i−1} ỹ_{i−1}` for `i = 1..=n`; this is the moment map at `ζ = 0`.
    pub fn moment_map(&self) -> Vec<QMatrix> {
        self.point.moment_map()
    }

    /// `q̃₁ p̃₁` on `W̃₁`.
    pub fn flag_nilpotent(&self) -> QMatrix {
        self.yt(0).mul(self.xt(0))
    }
}

/// One failed transversality condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransversalReport {
    pub violations: Vec<Violation>,
}

impl TransversalReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn cites(&self, cond: &str) -> bool {
        self.violations.iter().any(|v| v.condition == cond)
    }
}

/// Conditions (t1)–(t5), (s1)–(s5) and (r1).
pub fn is_transversal(bp: &BigPoint) -> TransversalReport {
    let d = &bp.dims;
    let mut rep = TransversalReport::default();
    let mut fail = |c: &'static str, detail: String| rep.violations.push(Violation { condition: c, detail });
    for i in 0..d.n {
        let (lo, hi) = (&d.copies[i], &d.copies[i + 1]);
        for &t in hi {
            if !bp.x_block(i, None, Some(t)).is_zero() {
                fail("t1", format!("i={i} V -> {t:?}"));
            }
            if !bp.y_block(i, Some(t), None).is_zero() {
                fail("s1", format!("i={i} {t:?} -> V"));
            }
        }
        for &(j, h) in lo {
            if h != 1 && !bp.x_block(i, Some((j, h)), None).is_zero() {
                fail("t2", format!("i={i} ({j},{h}) -> V"));
            }
            if h != j - i && !bp.y_block(i, None, Some((j, h))).is_zero() {
                fail("s2", format!("i={i} V -> ({j},{h})"));
            }
        }
        for &(jp, hp) in lo {
            for &(j, h) in hi {
                let b = bp.x_block(i, Some((jp, hp)), Some((j, h)));
                let g = grad(i, j, h, jp, hp, BlockKind::T).unwrap();
                let detail = || format!("i={i} ({jp},{hp}) -> ({j},{h})");
                if g < 0 && !b.is_zero() {
                    fail("t3", detail());
                } else if g == 0 && (jp, hp) != (j, h + 1) && !b.is_zero() {
                    fail("t4", detail());
                } else if g == 0 && (jp, hp) == (j, h + 1) && !b.is_identity() {
                    fail("t5", detail());
                }
            }
        }
        for &(jp, hp) in hi {
            for &(j, h) in lo {
                let b = bp.y_block(i, Some((jp, hp)), Some((j, h)));
                let g = grad(i, j, h, jp, hp, BlockKind::S).unwrap();
                let detail = || format!("i={i} ({jp},{hp}) -> ({j},{h})");
                if g < 0 && !b.is_zero() {
                    fail("s3", detail());
                } else if g == 0 && (jp, hp) != (j, h) && !b.is_zero() {
                    fail("s4", detail());
                } else if g == 0 && (jp, hp) == (j, h) && !b.is_identity() {
                    fail("s5", detail());
                }
            }
        }
        let (e, f) = maffei_sl2(d, i);
        if !bp.r1_operator(i).sub(&e).commutator(&f).is_zero() {
            fail("r1", format!("i={i}"));
        }
    }
    rep
}

#[derive(Clone, Copy, Debug)]
struct Unknown {
    kind: BlockKind,
    i: usize,
    src: Copy,
    dst: Copy,
    len: usize,
}

fn unknowns(d: &MaffeiDims) -> Vec<Unknown> {
    let mut out = Vec::new();
    for i in 0..d.n {
        for &s in &d.copies[i] {
            for &t in &d.copies[i + 1] {
                if grad(i, t.0, t.1, s.0, s.1, BlockKind::T).unwrap() > 0 {
                    out.push(Unknown { kind: BlockKind::T, i, src: s, dst: t, len: d.w_dim(t.0) * d.w_dim(s.0) });
                }
            }
        }
        for &s in &d.copies[i + 1] {
            for &t in &d.copies[i] {
                if grad(i, t.0, t.1, s.0, s.1, BlockKind::S).unwrap() > 0 {
                    out.push(Unknown { kind: BlockKind::S, i, src: s, dst: t, len: d.w_dim(t.0) * d.w_dim(s.0) });
                }
            }
        }
    }
    out
}

/// Base maps in 1-based names: `x_k : V_k → V_{k+1}`, `y_k : V_{k+1} → V_k`.
fn base_x(pt: &RepPoint, k: usize) -> &QMatrix {
    &pt.x[2 * (k - 1)]
}

fn base_y(pt: &RepPoint, k: usize) -> &QMatrix {
    &pt.x[2 * (k - 1) + 1]
}

/// Everything in `Φ(x)` except the positive-grad blocks.
fn seeded(pt: &RepPoint, d: &MaffeiDims) -> BigPoint {
    let mut bp = BigPoint::zero(d);
    for i in 0..d.n {
        if i >= 1 {
            bp.set_x_block(i, None, None, base_x(pt, i));
            bp.set_y_block(i, None, None, base_y(pt, i));
        }
        for &(j, h) in &d.copies[i] {
            if h == 1 {
                // y_{i+1} ⋯ y_{j−1} p_j : W_j → V_{i+1}
                let mut m = pt.p[j - 1].clone();
                for k in ((i + 1)..j).rev() {
                    m = base_y(pt, k).mul(&m);
                }
                bp.set_x_block(i, Some((j, h)), None, &m);
            }
            if h == j - i {
                // q_j x_{j−1} ⋯ x_{i+1} : V_{i+1} → W_j
                let mut m = pt.q[j - 1].clone();
                for k in ((i + 1)..j).rev() {
                    m = m.mul(base_x(pt, k));
                }
                bp.set_y_block(i, None, Some((j, h)), &m);
            }
        }
        for &s in &d.copies[i] {
            for &t in &d.copies[i + 1] {
                if s == (t.0, t.1 + 1) && grad(i, t.0, t.1, s.0, s.1, BlockKind::T).unwrap() == 0 {
                    bp.set_x_block(i, Some(s), Some(t), &QMatrix::identity(d.w_dim(t.0)));
                }
            }
        }
        for &s in &d.copies[i + 1] {
            for &t in &d.copies[i] {
                if s == t && grad(i, t.0, t.1, s.0, s.1, BlockKind::S).unwrap() == 0 {
                    bp.set_y_block(i, Some(s), Some(t), &QMatrix::identity(d.w_dim(t.0)));
                }
            }
        }
    }
    bp
}

fn fill(base: &BigPoint, unk: &[Unknown], u: &[Q]) -> BigPoint {
    let mut bp = base.clone();
    let mut pos = 0;
    for k in unk {
        let (r, c) = (bp.dims.w_dim(k.dst.0), bp.dims.w_dim(k.src.0));
        let b = QMatrix::from_vec(r, c, u[pos..pos + k.len].to_vec());
        pos += k.len;
        match k.kind {
            BlockKind::T => bp.set_x_block(k.i, Some(k.src), Some(k.dst), &b),
            BlockKind::S => bp.set_y_block(k.i, Some(k.src), Some(k.dst), &b),
        }
    }
    bp
}

/// The defining equations: `μ̃ = 0` and (r1), flattened.
fn residual(bp: &BigPoint) -> Vec<Q> {
    let mut out: Vec<Q> = bp.moment_map().iter().flat_map(|m| m.data().iter().cloned()).collect();
    for i in 0..bp.dims.n {
        let (e, f) = maffei_sl2(&bp.dims, i);
        out.extend(bp.r1_operator(i).sub(&e).commutator(&f).data().iter().cloned());
    }
    out
}

/// `Φ(x)` for `x ∈ Λ(v, w)` on `A_n` at `ζ_ℂ = 0`.
///
/// The remaining blocks enter the equations at most quadratically. The linear part `L`
/// must have full column rank (uniqueness); the solution is the fixed point of
/// `U ↦ L⁺(−c − Q(U))`, and the output is certified before it is returned.
pub fn phi_embed(pt: &RepPoint) -> Result<BigPoint> {
    let n = pt.graph.num_vertices();
    if !is_type_a_path(&pt.graph) || pt.graph != Graph::type_a(n) {
        return Err(Error::NotTypeA("Φ needs the standard A_n orientation".into()));
    }
    if !pt.in_lambda(&vec![Q::zero(); n]) {
        return Err(Error::MomentMap("input is not in Λ(v, w) at ζ = 0".into()));
    }
    let d = MaffeiDims::new(&pt.v, &pt.w)?;
    let base = seeded(pt, &d);
    let unk = unknowns(&d);
    let nv: usize = unk.iter().map(|k| k.len).sum();
    let mut u = vec![Q::zero(); nv];
    if nv > 0 {
        let c = residual(&base);
        let m = c.len();
        let mut l = QMatrix::zeros(m, nv);
        let half = Q::new(1.into(), 2.into());
        for k in 0..nv {
            let mut e = vec![Q::zero(); nv];
            e[k] = Q::one();
            let fp = residual(&fill(&base, &unk, &e));
            e[k] = -Q::one();
            let fm = residual(&fill(&base, &unk, &e));
            for r in 0..m {
                l[(r, k)] = (&fp[r] - &fm[r]) * &half;
            }
        }
        if l.rank() < nv {
            return Err(Error::NotUnique(format!("{} free directions among {nv} unknowns", nv - l.rank())));
        }
        let lt = l.transpose();
        let pinv = lt.mul(&l).inverse().ok_or(Error::Singular)?.mul(&lt);
        let apply = |rhs: &[Q]| pinv.mul(&QMatrix::from_vec(m, 1, rhs.to_vec())).col(0);
        let cap = 4 * nv + 16;
        let mut settled = false;
        for _ in 0..cap {
            let f = residual(&fill(&base, &unk, &u));
            let lu = l.mul(&QMatrix::from_vec(nv, 1, u.clone())).col(0);
            // −c − Q(U) = −F(U) + L U
            let rhs: Vec<Q> = f.iter().zip(&lu).map(|(a, b)| b - a).collect();
            let next = apply(&rhs);
            if next == u {
                settled = true;
                break;
            }
            u = next;
        }
        if !settled {
            return Err(Error::Cap(format!("Φ iteration did not settle within {cap} steps")));
        }
    }
    let bp = fill(&base, &unk, &u);
    if residual(&bp).iter().any(|x| !x.is_zero()) {
        return Err(Error::Inconsistent("no transversal completion (input not in Λ?)".into()));
    }
    let rep = is_transversal(&bp);
    if !rep.ok() {
        return Err(Error::Certificate(format!("{:?}", rep.violations)));
    }
    Ok(bp)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceLabel {
    /// `μ_1..μ_{n+1}` before sorting.
    pub mu: Vec<i64>,
    pub mu_prime: Partition,
    pub lambda: Partition,
    pub ambient_dim: usize,
}

/// `μ_i = ṽ_{i−1} − ṽ_i` (with `ṽ_0 = w̃₁`, `ṽ_{n+1} = 0`), `μ′` its transpose after
/// sorting, and `λ = 1^{w₁} ⋯ n^{w_n}`.
pub fn slice_labels(v: &[i64], w: &[i64]) -> Result<SliceLabel> {
    let d = MaffeiDims::new(v, w)?;
    let n = d.n;
    let vt = |i: usize| -> i64 {
        if i == 0 {
            d.tilde_w1
        } else if i > n {
            0
        } else {
            d.tilde_v[i - 1]
        }
    };
    let mu: Vec<i64> = (1..=n + 1).map(|i| vt(i - 1) - vt(i)).collect();
    if let Some(bad) = mu.iter().position(|&m| m < 0) {
        return Err(Error::Partition(format!("invalid flag data: μ_{} = {} < 0", bad + 1, mu[bad])));
    }
    let mut rho: Vec<usize> = mu.iter().map(|&m| m as usize).collect();
    rho.sort_unstable_by(|a, b| b.cmp(a));
    let mult: Vec<usize> = (0..=n).map(|k| rho[k] - rho.get(k + 1).copied().unwrap_or(0)).collect();
    let mu_prime = Partition::from_exponents(&mult);
    let lambda = Partition::from_exponents(&w.iter().map(|&x| x as usize).collect::<Vec<_>>());
    Ok(SliceLabel { mu, mu_prime, lambda, ambient_dim: d.tilde_w1 as usize })
}

/// `x` nilpotent and `[x − e₀, f₀] = 0`.
pub fn slice_membership(x: &QMatrix, e0: &QMatrix, f0: &QMatrix) -> Result<bool> {
    if !x.is_square() || x.shape() != e0.shape() || x.shape() != f0.shape() {
        return Err(Error::Shape("slice membership shapes".into()));
    }
    Ok(x.pow(x.rows()).is_zero() && x.sub(e0).commutator(f0).is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormVariant {
    /// Signs `(−1)^{j−i+h}` on the pairing of `W_j^{(h)}` with `W_j^{(j−i+1−h)}`.
    Angle,
    /// The same pairing without signs.
    Brace,
}

/// Forms on the big space: `v` on `Ṽ_1..Ṽ_n`, `w` with `W̃₁` at the first vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeForms {
    pub v: FormedGrading,
    pub w: FormedGrading,
}

fn sign_of(g: &QMatrix) -> Option<i8> {
    let t = g.transpose();
    if t == *g {
        Some(1)
    } else if t == g.neg() {
        Some(-1)
    } else {
        None
    }
}

/// Gram matrix on `Ṽ_i`.
pub fn tilde_gram(d: &MaffeiDims, forms_v: &FormedGrading, forms_w: &FormedGrading, i: usize, variant: FormVariant) -> QMatrix {
    let mut g = QMatrix::zeros(d.vt_dim(i), d.vt_dim(i));
    if i >= 1 {
        g.set_block(0, 0, forms_v.gram(i - 1));
    }
    for &(j, h) in &d.copies[i] {
        let partner = (j, j - i + 1 - h);
        let r = d.offset(i, (j, h)).unwrap();
        let c = d.offset(i, partner).unwrap();
        let gw = forms_w.gram(j - 1);
        let b = match variant {
            FormVariant::Angle if (j - i + h) % 2 == 1 => gw.neg(),
            _ => gw.clone(),
        };
        g.set_block(r, c, &b);
    }
    g
}

pub fn tilde_form(d: &MaffeiDims, forms_v: &FormedGrading, forms_w: &FormedGrading, variant: FormVariant) -> Result<TildeForms> {
    if forms_v.dims() != d.v || forms_w.dims() != d.w {
        return Err(Error::Shape("forms do not match (v, w)".into()));
    }
    let vgrams: Vec<QMatrix> = (1..=d.n).map(|i| tilde_gram(d, forms_v, forms_w, i, variant)).collect();
    let w1 = tilde_gram(d, forms_v, forms_w, 0, variant);
    let mut wgrams = vec![w1];
    wgrams.extend((1..d.n).map(|_| QMatrix::zeros(0, 0)));
    let signs = |gs: &[QMatrix]| gs.iter().map(sign_of).collect::<Option<Vec<i8>>>();
    let vdelta = signs(&vgrams);
    let wdelta = signs(&wgrams);
    Ok(TildeForms { v: FormedGrading::new(vgrams, vdelta)?, w: FormedGrading::new(wgrams, wdelta)? })
}

/// Sign type of `W̃₁` predicted for an alternating `δ_w`: `(−1)^{j+1} δ_{w,j}` for any `j` with `w_j ≠ 0`.
pub fn predicted_w1_sign(w: &[i64], delta_w: &[i8]) -> Option<i8> {
    let mut s = None;
    for (k, (&wj, &dj)) in w.iter().zip(delta_w).enumerate() {
        if wj == 0 {
            continue;
        }
        let j = k + 1;
        let p = if j % 2 == 1 { dj } else { -dj };
        match s {
            None => s = Some(p),
            Some(t) if t != p => return None,
            _ => {}
        }
    }
    s
}

/// Checks the adjoint table for `Φ(x)`: `X^♮ = X*`, `Y^♮ = Y*`, the first seeded `T`/`S`
/// blocks, and `T^♮ = (−1)^{j−j′+h−h′−1} T*`, `S^♮ = (−1)^{j−j′+h−h′+1} S*` on the
/// `W′` blocks. Returns the list of failing entries.
pub fn check_x_natural(bp: &BigPoint, forms_v: &FormedGrading, forms_w: &FormedGrading) -> Result<Vec<String>> {
    let d = &bp.dims;
    let gram = |i: usize| tilde_gram(d, forms_v, forms_w, i, FormVariant::Angle);
    let gv = |i: usize| forms_v.gram(i - 1);
    let gw = |j: usize| forms_w.gram(j - 1);
    let pm = |e: i64| if e.rem_euclid(2) == 0 { Q::one() } else { -Q::one() };
    let mut bad = Vec::new();
    for i in 0..d.n {
        let (gi, gi1) = (gram(i), gram(i + 1));
        let xn = right_adjoint(bp.xt(i), &gi, &gi1)?;
        let yn = right_adjoint(bp.yt(i), &gi1, &gi)?;
        // Read a block of a map Ṽ_{a} → Ṽ_{b}.
        let blk = |m: &QMatrix, from: usize, src: Option<Copy>, to: usize, dst: Option<Copy>| {
            let r = |lvl: usize, c: Option<Copy>| match c {
                None => (0, d.v_dim(lvl)),
                Some(c) => (d.offset(lvl, c).unwrap(), d.w_dim(c.0)),
            };
            let (c0, nc) = r(from, src);
            let (r0, nr) = r(to, dst);
            m.block(r0, c0, nr, nc)
        };
        let partner = |lvl: usize, (j, h): Copy| (j, j - lvl + 1 - h);
        if i >= 1 {
            let x = bp.x_block(i, None, None);
            if blk(&xn, i + 1, None, i, None) != right_adjoint(&x, gv(i), gv(i + 1))? {
                bad.push(format!("X_{i}"));
            }
            let y = bp.y_block(i, None, None);
            if blk(&yn, i, None, i + 1, None) != right_adjoint(&y, gv(i + 1), gv(i))? {
                bad.push(format!("Y_{i}"));
            }
        }
        let first = (i + 1, 1);
        if d.copies[i].contains(&first) {
            let t = bp.x_block(i, Some(first), None);
            let got = blk(&xn, i + 1, None, i, Some(partner(i, first)));
            if got != right_adjoint(&t, gw(i + 1), gv(i + 1))? {
                bad.push(format!("T^{{{},1}}_{{{i},V}}", i + 1));
            }
            let s = bp.y_block(i, None, Some(first));
            let got = blk(&yn, i, Some(partner(i, first)), i + 1, None);
            if got != right_adjoint(&s, gv(i + 1), gw(i + 1))? {
                bad.push(format!("S^V_{{{i},{},1}}", i + 1));
            }
        }
        for &(jp, hp) in &d.copies[i] {
            for &(j, h) in &d.copies[i + 1] {
                let t = bp.x_block(i, Some((jp, hp)), Some((j, h)));
                let got = blk(&xn, i + 1, Some(partner(i + 1, (j, h))), i, Some(partner(i, (jp, hp))));
                let e = j as i64 - jp as i64 + h as i64 - hp as i64 - 1;
                if got != right_adjoint(&t, gw(jp), gw(j))?.scale(&pm(e)) {
                    bad.push(format!("T^{{{jp},{hp}}}_{{{i},{j},{h}}}"));
                }
            }
        }
        for &(jp, hp) in &d.copies[i + 1] {
            for &(j, h) in &d.copies[i] {
                let s = bp.y_block(i, Some((jp, hp)), Some((j, h)));
                let got = blk(&yn, i, Some(partner(i, (j, h))), i + 1, Some(partner(i + 1, (jp, hp))));
                let e = j as i64 - jp as i64 + h as i64 - hp as i64 + 1;
                if got != right_adjoint(&s, gw(jp), gw(j))?.scale(&pm(e)) {
                    bad.push(format!("S^{{{jp},{hp}}}_{{{i},{j},{h}}}"));
                }
            }
        }
    }
    Ok(bad)
}

/// `Φ(τ x)` against `τ̃ Φ(x)` (or the `τ̂` pair with the brace forms).
pub fn phi_commutes(pt: &RepPoint, forms_v: &FormedGrading, forms_w: &FormedGrading, mode: Mode) -> Result<bool> {
    let cfg = InvolutionConfig::new(forms_v.clone(), forms_w.clone(), mode);
    let lhs = phi_embed(&involutions::apply(pt, &cfg)?)?;
    let bp = phi_embed(pt)?;
    let variant = match mode {
        Mode::Tau => FormVariant::Angle,
        Mode::TauHat => FormVariant::Brace,
    };
    let tf = tilde_form(&bp.dims, forms_v, forms_w, variant)?;
    let rhs = involutions::apply(&bp.point, &InvolutionConfig::new(tf.v, tf.w, mode))?;
    Ok(lhs.point == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::jordan_type;

    #[test]
    fn dims_examples() {
        let d = tilde_dims(&[1, 2, 2, 3, 2, 1], &[0, 1, 0, 1, 0, 0]).unwrap();
        assert_eq!(d.tilde_v, vec![5, 4, 3, 3, 2, 1]);
        assert_eq!(d.tilde_w1, 6);
        let h = hat_dims(&[1, 2, 2, 3, 2, 1], &[0, 1, 0, 1, 0, 0]).unwrap();
        assert_eq!(h.tilde_v, vec![7, 6, 5, 3, 2, 1]);
        assert_eq!(h.tilde_w1, 8);
        let d = tilde_dims(&[0, 0], &[1, 1]).unwrap();
        assert_eq!((d.tilde_v.clone(), d.tilde_w1), (vec![1, 0], 3));
    }

    #[test]
    fn grad_examples() {
        assert_eq!(grad(0, 2, 1, 2, 2, BlockKind::T).unwrap(), 0);
        assert_eq!(grad(0, 2, 1, 2, 1, BlockKind::S).unwrap(), 0);
        assert_eq!(grad(0, 3, 1, 3, 1, BlockKind::T).unwrap(), 1);
        assert!(grad(0, 1, 1, 1, 1, BlockKind::T).is_err());
    }

    #[test]
    fn labels_examples() {
        let l = slice_labels(&[1, 2, 2, 3, 2, 1], &[0, 1, 0, 1, 0, 0]).unwrap();
        assert_eq!(l.mu_prime, Partition::new(vec![6]));
        assert_eq!(l.lambda, Partition::new(vec![4, 2]));
        let l = slice_labels(&[0, 0], &[1, 1]).unwrap();
        assert_eq!(l.mu, vec![2, 1, 0]);
        assert_eq!(l.mu_prime, Partition::new(vec![2, 1]));
        assert_eq!(l.lambda, Partition::new(vec![2, 1]));
        let l = slice_labels(&[0, 0], &[0, 0]).unwrap();
        assert!(l.mu_prime.is_empty() && l.lambda.is_empty());
        assert!(slice_labels(&[5], &[1]).is_err());
    }

    #[test]
    fn phi_of_zero_small() {
        let pt = RepPoint::zero(&Graph::type_a(2), &[1, 1], &[0, 1]);
        let bp = phi_embed(&pt).unwrap();
        let x = bp.flag_nilpotent();
        assert_eq!(x, QMatrix::from_i64(2, 2, &[0, 1, 0, 0]));
        assert_eq!(jordan_type(&x).unwrap(), Partition::new(vec![2]));
    }
}
