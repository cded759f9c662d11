//! Point-level reflection functors `S_i`, words `S_ω`, and `σ = a S_ω τ`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{DiagramAuto, Parameter};
use crate::involutions::{self, diagram_apply, InvolutionConfig, Mode};
use crate::matrix::QMatrix;
use crate::rep::{intertwiner, RepPoint};
use crate::subspace::Subspace;
use crate::Q;

/// `a_i(x) = (q_i; x_h)_{o(h)=i} : V_i → U_i`, with `U_i = W_i ⊕ ⊕_{o(h)=i} V_{i(h)}`.
pub fn a_map(pt: &RepPoint, i: usize) -> QMatrix {
    let g = &pt.graph;
    let mut parts: Vec<&QMatrix> = alloc::vec![&pt.q[i]];
    let outs = g.arrows_out(i);
    parts.extend(outs.iter().map(|&h| &pt.x[h]));
    QMatrix::vstack(&parts, pt.v[i] as usize)
}

/// `b_i(x) = (p_i, ε(h) x_{h̄})_{o(h)=i} : U_i → V_i`.
pub fn b_map(pt: &RepPoint, i: usize) -> QMatrix {
    let g = &pt.graph;
    let mut parts: Vec<QMatrix> = alloc::vec![pt.p[i].clone()];
    for h in g.arrows_out(i) {
        parts.push(pt.x[g.bar(h)].scale(&crate::rational::q(g.eps(h))));
    }
    let refs: Vec<&QMatrix> = parts.iter().collect();
    QMatrix::hstack(&refs, pt.v[i] as usize)
}

fn u_dims(pt: &RepPoint, i: usize) -> Vec<usize> {
    let g = &pt.graph;
    let mut d = alloc::vec![pt.w[i] as usize];
    d.extend(g.arrows_out(i).iter().map(|&h| pt.v[g.dst(h)] as usize));
    d
}

/// Writes `a_i`, `b_i` back into the components at vertex `i` of `pt`.
fn unpack(pt: &mut RepPoint, i: usize, a: &QMatrix, b: &QMatrix) {
    let g = pt.graph.clone();
    let d = u_dims(pt, i);
    let vi = a.cols();
    pt.v[i] = vi as i64;
    let mut off = 0;
    pt.q[i] = a.block(0, 0, d[0], vi);
    pt.p[i] = b.block(0, 0, vi, d[0]);
    off += d[0];
    for (k, h) in g.arrows_out(i).into_iter().enumerate() {
        let dk = d[k + 1];
        pt.x[h] = a.block(off, 0, dk, vi);
        pt.x[g.bar(h)] = b.block(0, off, vi, dk).scale(&crate::rational::q(g.eps(h)));
        off += dk;
    }
}

/// Conditions (R1)–(R4) for a pair `(x, x′)` related at vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// `0 → V′_i → U_i → V_i → 0` exact via `a_i(x′)`, `b_i(x)`.
    pub r1: bool,
    /// `a_i(x)b_i(x) − a_i(x′)b_i(x′) = ζ′^{(i)}`.
    pub r2: bool,
    /// Components away from `i` agree.
    pub r3: bool,
    /// Moment maps away from `i` hit `ζ` and `ζ′`.
    pub r4: bool,
}

impl Certificate {
    pub fn ok(&self) -> bool {
        self.r1 && self.r2 && self.r3 && self.r4
    }
}

/// Checks (R1)–(R4) with `x ∈ Λ_ζ` and `x′ ∈ Λ_{s_i ζ}`.
pub fn certify(x: &RepPoint, xp: &RepPoint, i: usize, zeta: &Parameter) -> Result<Certificate> {
    let g = &x.graph;
    let zp = g.weyl_reflect_q(i, &zeta.zeta_c)?;
    let (ax, bx) = (a_map(x, i), b_map(x, i));
    let (axp, bxp) = (a_map(xp, i), b_map(xp, i));
    let r1 = axp.rank() == axp.cols()
        && bx.rank() == bx.rows()
        && bx.mul(&axp).is_zero()
        && axp.cols() + bx.rows() == ax.rows();
    let r2 = ax.mul(&bx).sub(&axp.mul(&bxp)) == QMatrix::scalar(ax.rows(), &zp[i]);
    let mut r3 = true;
    for h in 0..g.num_arrows() {
        if g.src(h) != i && g.dst(h) != i && x.x[h] != xp.x[h] {
            r3 = false;
        }
    }
    for j in (0..g.num_vertices()).filter(|&j| j != i) {
        if x.p[j] != xp.p[j] || x.q[j] != xp.q[j] {
            r3 = false;
        }
    }
    let (mx, mxp) = (x.moment_map(), xp.moment_map());
    let r4 = (0..g.num_vertices()).filter(|&j| j != i).all(|j| {
        mx[j] == QMatrix::scalar(mx[j].rows(), &zeta.zeta_c[j]) && mxp[j] == QMatrix::scalar(mxp[j].rows(), &zp[j])
    });
    Ok(Certificate { r1, r2, r3, r4 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionResult {
    pub point: RepPoint,
    pub parameter: Parameter,
    /// `a_i`, `b_i` of the output point.
    pub a: QMatrix,
    pub b: QMatrix,
    pub certificate: Certificate,
}

/// `S_i` on a point of `Λ_ζ(v, w)`, landing in `Λ_{s_i ζ}(s_i * v, w)`.
///
/// For `ξ_i < 0` or `ζ_ℂ^{(i)} ≠ 0`, `V′_i = ker b_i(x)`. For `ξ_i > 0` with
/// `ζ_ℂ^{(i)} = 0` the input is taken as `x′` and `V_i = U_i / im a_i(x′)`.
pub fn reflect_point(pt: &RepPoint, i: usize, zeta: &Parameter) -> Result<ReflectionResult> {
    let g = &pt.graph;
    g.check_vertex(i)?;
    if !pt.in_lambda(&zeta.zeta_c) {
        return Err(Error::MomentMap("input is not on the ζ_ℂ level".into()));
    }
    let zi = zeta.zeta_c[i].clone();
    let out_param = zeta.reflect(g, i)?;
    let (a, b) = if zeta.xi[i] < 0 || !zi.is_zero() {
        let bx = b_map(pt, i);
        if bx.rank() != bx.rows() {
            return Err(Error::NotSurjective(i));
        }
        let ax = a_map(pt, i);
        let k = bx.kernel();
        // A = a b − ζ′^{(i)} with ζ′^{(i)} = −ζ^{(i)}
        let big_a = ax.mul(&bx).add(&QMatrix::scalar(ax.rows(), &zi));
        if !bx.mul(&big_a).is_zero() {
            return Err(Error::MomentMap(format!("b_i A ≠ 0 at vertex {i}")));
        }
        let bp = k.solve(&big_a).ok_or_else(|| Error::Inconsistent("A does not factor through ker b".into()))?;
        (k, bp)
    } else if zeta.xi[i] > 0 {
        let axp = a_map(pt, i);
        if axp.rank() != axp.cols() {
            return Err(Error::Chamber(i));
        }
        let bxp = b_map(pt, i);
        let b = Subspace::image_of(&axp).annihilator();
        let big_a = axp.mul(&bxp).add(&QMatrix::scalar(axp.rows(), &zi));
        let r = right_inverse(&b)?;
        (big_a.mul(&r), b)
    } else {
        return Err(Error::Chamber(i));
    };
    let mut out = pt.clone();
    unpack(&mut out, i, &a, &b);
    let certificate = if zeta.xi[i] < 0 || !zi.is_zero() {
        certify(pt, &out, i, zeta)?
    } else {
        certify(&out, pt, i, &out_param)?
    };
    if !certificate.ok() {
        return Err(Error::Certificate(format!("{certificate:?}")));
    }
    Ok(ReflectionResult { a: a_map(&out, i), b: b_map(&out, i), point: out, parameter: out_param, certificate })
}

/// `R` with `B R = I` for `B` of full row rank.
fn right_inverse(b: &QMatrix) -> Result<QMatrix> {
    let bbt = b.mul(&b.transpose());
    let inv = bbt.inverse().ok_or(Error::Singular)?;
    Ok(b.transpose().mul(&inv))
}

/// `S_ω = S_{i_1} ⋯ S_{i_l}`; the rightmost letter acts first.
///
/// With `ζ = 0` and `ω * v = v` the reflection is the identity and `pt` is returned.
pub fn reflect_word(pt: &RepPoint, word: &[usize], zeta: &Parameter) -> Result<(RepPoint, Parameter)> {
    let g = &pt.graph;
    let trivial = zeta.xi.iter().all(|&x| x == 0) && zeta.zeta_c.iter().all(|z| z.is_zero());
    if trivial {
        if g.weyl_star_word(word, &pt.v, &pt.w)? == pt.v {
            return Ok((pt.clone(), zeta.clone()));
        }
        return Err(Error::Chamber(word.last().copied().unwrap_or(0)));
    }
    let mut cur = pt.clone();
    let mut par = zeta.clone();
    for &i in word.iter().rev() {
        let r = reflect_point(&cur, i, &par)?;
        cur = r.point;
        par = r.parameter;
    }
    Ok((cur, par))
}

/// `a(ζ)` with `a(ζ)_{a(i)} = ζ_i`.
pub fn apply_auto_param(a: &DiagramAuto, z: &Parameter) -> Parameter {
    Parameter { xi: a.apply_dims(&z.xi), zeta_c: a.apply_q(&z.zeta_c) }
}

/// Parameter after `τ` (`ζ ↦ −ζ`) or `τ̂` (`ξ ↦ −ξ`).
pub fn transpose_param(z: &Parameter, mode: Mode) -> Parameter {
    match mode {
        Mode::Tau => z.neg(),
        Mode::TauHat => Parameter { xi: z.xi.iter().map(|x| -x).collect(), zeta_c: z.zeta_c.clone() },
    }
}

/// `σ = a S_ω τ` (or `σ̂` with `τ̂`), with the parameter it lands on.
pub fn sigma_point(pt: &RepPoint, omega: &[usize], cfg: &InvolutionConfig, zeta: &Parameter) -> Result<(RepPoint, Parameter)> {
    let t = involutions::apply(pt, cfg)?;
    let (r, par) = reflect_word(&t, omega, &transpose_param(zeta, cfg.mode))?;
    match &cfg.auto {
        Some(a) => Ok((diagram_apply(a, &r)?, apply_auto_param(a, &par))),
        None => Ok((r, par)),
    }
}

/// Which of the three fixedness preconditions fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compatibility {
    pub parameter: bool,
    pub w_fixed: bool,
    pub v_fixed: bool,
}

impl Compatibility {
    pub fn ok(&self) -> bool {
        self.parameter && self.w_fixed && self.v_fixed
    }
}

/// `−aω(ζ) = ζ` (for `τ̂`: `aω(−ξ, ζ_ℂ) = ζ`), `a(w) = w`, `a(ω * v) = v`.
pub fn compatibility(g: &crate::Graph, omega: &[usize], a: &DiagramAuto, mode: Mode, zeta: &Parameter, v: &[i64], w: &[i64]) -> Result<Compatibility> {
    let t = transpose_param(zeta, mode);
    let om = Parameter { xi: g.weyl_reflect_word(omega, &t.xi)?, zeta_c: g.weyl_reflect_word_q(omega, &t.zeta_c)? };
    let parameter = apply_auto_param(a, &om) == *zeta;
    let w_fixed = a.apply_dims(w) == w;
    let v_fixed = a.apply_dims(&g.weyl_star_word(omega, v, w)?) == v;
    Ok(Compatibility { parameter, w_fixed, v_fixed })
}

/// `[σ(x)] = [x]`, decided by an intertwiner.
pub fn is_sigma_fixed(pt: &RepPoint, omega: &[usize], cfg: &InvolutionConfig, zeta: &Parameter) -> Result<bool> {
    let a = cfg.auto.clone().unwrap_or_else(|| pt.graph.identity_auto());
    let c = compatibility(&pt.graph, omega, &a, cfg.mode, zeta, &pt.v, &pt.w)?;
    if !c.ok() {
        return Err(Error::Compatibility(format!("{c:?}")));
    }
    let (s, _) = sigma_point(pt, omega, cfg, zeta)?;
    Ok(intertwiner(&s, pt).is_some())
}

/// `ζ = 0` on `n` vertices.
pub fn zero_parameter(n: usize) -> Parameter {
    Parameter::new(alloc::vec![0; n], alloc::vec![Q::zero(); n])
}
