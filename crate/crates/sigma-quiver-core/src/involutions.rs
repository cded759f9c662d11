//! The transposes `τ`, `τ̂`, the diagram map `a` on points, and the flag-side `σ₁`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forms::{left_adjoint, orthogonal_complement, right_adjoint, FormedGrading};
use crate::graph::DiagramAuto;
use crate::matrix::QMatrix;
use crate::rational::q;
use crate::rep::{flag_containment, RepPoint};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Tau,
    TauHat,
}

/// Forms on `V` and `W`, plus the diagram automorphism used by `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionConfig {
    pub forms_v: FormedGrading,
    pub forms_w: FormedGrading,
    pub auto: Option<DiagramAuto>,
    pub mode: Mode,
}

impl InvolutionConfig {
    pub fn new(forms_v: FormedGrading, forms_w: FormedGrading, mode: Mode) -> Self {
        InvolutionConfig { forms_v, forms_w, auto: None, mode }
    }

    pub fn with_auto(mut self, a: DiagramAuto) -> Self {
        self.auto = Some(a);
        self
    }

    fn check(&self, pt: &RepPoint) -> Result<()> {
        if self.forms_v.dims() != pt.v || self.forms_w.dims() != pt.w {
            return Err(Error::Shape(format!(
                "forms have dims {:?}/{:?}, point has {:?}/{:?}",
                self.forms_v.dims(),
                self.forms_w.dims(),
                pt.v,
                pt.w
            )));
        }
        Ok(())
    }
}

/// Dispatch on `cfg.mode`.
pub fn apply(pt: &RepPoint, cfg: &InvolutionConfig) -> Result<RepPoint> {
    match cfg.mode {
        Mode::Tau => tau(pt, cfg),
        Mode::TauHat => tau_hat(pt, cfg),
    }
}

fn transpose_point(pt: &RepPoint, cfg: &InvolutionConfig, hat: bool) -> Result<RepPoint> {
    cfg.check(pt)?;
    let g = &pt.graph;
    let (fv, fw) = (&cfg.forms_v, &cfg.forms_w);
    let mut out = pt.clone();
    for h in 0..g.num_arrows() {
        let hb = g.bar(h);
        // x_{h̄} : V_{i(h)} → V_{o(h)}
        let adj = right_adjoint(&pt.x[hb], fv.gram(g.dst(h)), fv.gram(g.src(h)))?;
        out.x[h] = if hat { adj } else { adj.scale(&q(g.eps(h))) };
    }
    for i in 0..g.num_vertices() {
        let qs = right_adjoint(&pt.q[i], fv.gram(i), fw.gram(i))?;
        out.p[i] = if hat { qs } else { qs.neg() };
        out.q[i] = right_adjoint(&pt.p[i], fw.gram(i), fv.gram(i))?;
    }
    Ok(out)
}

/// `x_h ↦ ε(h) x*_{h̄}`, `p ↦ −q*`, `q ↦ p*`.
pub fn tau(pt: &RepPoint, cfg: &InvolutionConfig) -> Result<RepPoint> {
    transpose_point(pt, cfg, false)
}

/// `x_h ↦ x*_{h̄}`, `p ↦ q*`, `q ↦ p*`.
pub fn tau_hat(pt: &RepPoint, cfg: &InvolutionConfig) -> Result<RepPoint> {
    transpose_point(pt, cfg, true)
}

/// Inverse of `τ`, through left adjoints.
pub fn tau_inverse(pt: &RepPoint, cfg: &InvolutionConfig) -> Result<RepPoint> {
    cfg.check(pt)?;
    let g = &pt.graph;
    let (fv, fw) = (&cfg.forms_v, &cfg.forms_w);
    let mut out = pt.clone();
    for h in 0..g.num_arrows() {
        let hb = g.bar(h);
        // τx_{h̄} = ε(h̄) x_h*, with τx_{h̄} : V_{i(h)} → V_{o(h)}
        let l = left_adjoint(&pt.x[hb], fv.gram(g.dst(h)), fv.gram(g.src(h)))?;
        out.x[h] = l.scale(&q(g.eps(hb)));
    }
    for i in 0..g.num_vertices() {
        out.q[i] = left_adjoint(&pt.p[i], fw.gram(i), fv.gram(i))?.neg();
        out.p[i] = left_adjoint(&pt.q[i], fv.gram(i), fw.gram(i))?;
    }
    Ok(out)
}

/// `a(x)_h = ε(h)^{(1−c)/2} x_{a⁻¹(h)}`, `a(p)_i = p_{a⁻¹(i)}`, `a(q)_i = q_{a⁻¹(i)}`.
pub fn diagram_apply(a: &DiagramAuto, pt: &RepPoint) -> Result<RepPoint> {
    let g = &pt.graph;
    if a.vertex_perm.len() != g.num_vertices() || a.arrow_perm.len() != g.num_arrows() {
        return Err(Error::InvalidAuto("automorphism does not match the graph".into()));
    }
    let inv_v = a.inverse_vertex();
    let inv_h = a.inverse_arrow();
    let mut out = RepPoint::zero(g, &a.apply_dims(&pt.v), &a.apply_dims(&pt.w));
    for h in 0..g.num_arrows() {
        let m = &pt.x[inv_h[h]];
        out.x[h] = if a.c == -1 { m.scale(&q(g.eps(h))) } else { m.clone() };
    }
    for i in 0..g.num_vertices() {
        out.p[i] = pt.p[inv_v[i]].clone();
        out.q[i] = pt.q[inv_v[i]].clone();
    }
    Ok(out)
}

/// `a(g)_i = g_{a⁻¹(i)}` for a vertex-indexed group element.
pub fn diagram_apply_group(a: &DiagramAuto, g: &[QMatrix]) -> Vec<QMatrix> {
    a.inverse_vertex().iter().map(|&j| g[j].clone()).collect()
}

/// Transports `V`/`W` forms along `a`.
pub fn diagram_apply_forms(a: &DiagramAuto, f: &FormedGrading) -> Result<FormedGrading> {
    let inv = a.inverse_vertex();
    let grams = inv.iter().map(|&j| f.gram(j).clone()).collect();
    let delta = f.delta().map(|d| inv.iter().map(|&j| d[j]).collect());
    FormedGrading::new(grams, delta)
}

/// `(x, F) ↦ (−x*, F^⊥)` for `Tau`, `(x*, F^⊥)` for `TauHat`.
///
/// `flag` lists `F_1 ⊇ ⋯ ⊇ F_n` (with `F_0 = W`, `F_{n+1} = 0` implicit); the
/// output lists `F_n^⊥ ⊇ ⋯ ⊇ F_1^⊥`.
pub fn flag_sigma1(x: &QMatrix, flag: &[Subspace], form_w: &QMatrix, mode: Mode) -> Result<(QMatrix, Vec<Subspace>)> {
    if !x.is_square() || x.rows() != form_w.rows() || flag.iter().any(|f| f.ambient() != x.rows()) {
        return Err(Error::Shape("flag data shapes".into()));
    }
    if !flag_containment(x, flag) {
        return Err(Error::Compatibility("x(F_k) ⊄ F_{k+1} on input".into()));
    }
    let adj = right_adjoint(x, form_w, form_w)?;
    let xs = match mode {
        Mode::Tau => adj.neg(),
        Mode::TauHat => adj,
    };
    let perp: Vec<Subspace> = flag.iter().rev().map(|f| orthogonal_complement(f, form_w)).collect();
    Ok((xs, perp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn a1_tau_fixed() {
        let g = Graph::type_a(1);
        let pt = RepPoint::new(
            g,
            alloc::vec![1],
            alloc::vec![2],
            alloc::vec![],
            alloc::vec![QMatrix::from_i64(1, 2, &[1, 0])],
            alloc::vec![QMatrix::from_i64(2, 1, &[0, 1])],
        )
        .unwrap();
        let cfg = InvolutionConfig::new(
            FormedGrading::canonical(&[1], &[1]).unwrap(),
            FormedGrading::canonical(&[2], &[-1]).unwrap(),
            Mode::Tau,
        );
        assert_eq!(tau(&pt, &cfg).unwrap(), pt);
        assert_eq!(tau_inverse(&pt, &cfg).unwrap(), pt);
    }
}
