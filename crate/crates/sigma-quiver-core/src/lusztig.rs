//! Depth-bounded evaluation tables `π′ : paths → End(W)` modelling `Z_w^{ζ}`, with the
//! transpose `τ₀`, the diagram map `Θ_{a,ε}` and Lusztig's reflection functor.
//!
//! A path lists its arrows in traversal order: `h₁` is traversed first and
//! `i(h_k) = o(h_{k+1})`. A point evaluates as `π′(f) = q_{i(f)} x_{h_s} ⋯ x_{h₁} p_{o(f)}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::{right_adjoint, FormedGrading};
use crate::graph::{DiagramAuto, DimVector, Graph};
use crate::matrix::QMatrix;
use crate::rational::q;
use crate::rep::RepPoint;
use crate::Q;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn lazy(i: usize) -> Self {
        Path { start: i, arrows: Vec::new() }
    }

    pub fn new(g: &Graph, arrows: Vec<usize>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::Path("use Path::lazy for the empty path".into()));
        };
        let p = Path { start: g.src(first), arrows };
        p.validate(g)?;
        Ok(p)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_vertex(self.start)?;
        let mut at = self.start;
        for &h in &self.arrows {
            if h >= g.num_arrows() {
                return Err(Error::BadArrow(h));
            }
            if g.src(h) != at {
                return Err(Error::Path(format!("arrow {h} does not leave vertex {at}")));
            }
            at = g.dst(h);
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `o(f)`.
    pub fn source(&self) -> usize {
        self.start
    }

    /// `i(f)`.
    pub fn target(&self, g: &Graph) -> usize {
        self.arrows.last().map_or(self.start, |&h| g.dst(h))
    }

    /// `f̄`: reversed, each arrow barred.
    pub fn bar(&self, g: &Graph) -> Path {
        Path { start: self.target(g), arrows: self.arrows.iter().rev().map(|&h| g.bar(h)).collect() }
    }

    /// `ε(f) = Π ε(h_k)`, `ε([i]) = 1`.
    pub fn eps(&self, g: &Graph) -> i64 {
        self.arrows.iter().map(|&h| g.eps(h)).product()
    }

    /// Traverse `self`, then `other`.
    pub fn then(&self, g: &Graph, other: &Path) -> Option<Path> {
        if self.target(g) != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { start: self.start, arrows })
    }
}

/// All paths of length at most `max_len`.
pub fn enumerate_paths(g: &Graph, max_len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..g.num_vertices()).map(Path::lazy).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for h in g.arrows_out(p.target(g)) {
                let mut a = p.arrows.clone();
                a.push(h);
                next.push(Path { start: p.start, arrows: a });
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathEval {
    pub graph: Graph,
    pub w: DimVector,
    pub zeta_c: Vec<Q>,
    pub depth: usize,
    pub table: BTreeMap<Path, QMatrix>,
}

/// Default depth `2 Σ v + 2`.
pub fn default_depth(v: &[i64]) -> usize {
    2 * v.iter().sum::<i64>() as usize + 2
}

impl PathEval {
    pub fn get(&self, f: &Path) -> Result<&QMatrix> {
        self.table.get(f).ok_or(Error::DepthExhausted(self.depth))
    }

    /// `π′(f)π′(f′) = Σ_{i(h)=i} ε(h) π′(f′ h̄ h f) − ζ^{(i)} π′(f′ f)` whenever `f′`
    /// ends at `i`, `f` starts there, and `|f| + |f′| ≤ check_len`.
    /// Returns the first failing pair.
    pub fn check_relations(&self, check_len: usize) -> Option<(Path, Path)> {
        let g = &self.graph;
        let lim = check_len.min(self.depth.saturating_sub(2));
        let short: Vec<&Path> = self.table.keys().filter(|p| p.len() <= lim).collect();
        for fp in &short {
            let i = fp.target(g);
            for f in short.iter().filter(|f| f.start == i && f.len() + fp.len() <= lim) {
                let lhs = self.table[*f].mul(&self.table[*fp]);
                let mut rhs = self.table[&fp.then(g, f).unwrap()].scale(&(-self.zeta_c[i].clone()));
                for h in g.arrows_in(i) {
                    let mid = Path { start: i, arrows: vec![g.bar(h), h] };
                    let whole = fp.then(g, &mid).and_then(|p| p.then(g, f)).unwrap();
                    rhs = rhs.add(&self.table[&whole].scale(&q(g.eps(h))));
                }
                if lhs != rhs {
                    return Some(((*fp).clone(), (*f).clone()));
                }
            }
        }
        None
    }

    fn map_values(&self, zeta_c: Vec<Q>, w: DimVector, mut f: impl FnMut(&Path) -> Result<QMatrix>) -> Result<PathEval> {
        let mut table = BTreeMap::new();
        for p in self.table.keys() {
            table.insert(p.clone(), f(p)?);
        }
        Ok(PathEval { graph: self.graph.clone(), w, zeta_c, depth: self.depth, table })
    }
}

/// `π′(f) = q_{i(f)} x_{h_s} ⋯ x_{h₁} p_{o(f)}` for all paths of length `≤ depth`.
pub fn eval_from_point(pt: &RepPoint, zeta_c: &[Q], depth: usize) -> Result<PathEval> {
    if !pt.in_lambda(zeta_c) {
        return Err(Error::MomentMap("point is not on the ζ_ℂ level".into()));
    }
    let g = &pt.graph;
    let mut table = BTreeMap::new();
    // x-products from each start, extended one arrow at a time
    let mut frontier: Vec<(Path, QMatrix)> = (0..g.num_vertices()).map(|i| (Path::lazy(i), pt.p[i].clone())).collect();
    for step in 0..=depth {
        let mut next = Vec::new();
        for (path, m) in &frontier {
            let t = path.target(g);
            table.insert(path.clone(), pt.q[t].mul(m));
            if step < depth {
                for h in g.arrows_out(t) {
                    let mut a = path.arrows.clone();
                    a.push(h);
                    next.push((Path { start: path.start, arrows: a }, pt.x[h].mul(m)));
                }
            }
        }
        frontier = next;
    }
    Ok(PathEval { graph: g.clone(), w: pt.w.clone(), zeta_c: zeta_c.to_vec(), depth, table })
}

/// `τ₀(π′)(f) = −ε(f) π′(f̄)*`, over `−ζ_ℂ`.
pub fn tau0(pe: &PathEval, forms_w: &FormedGrading) -> Result<PathEval> {
    if forms_w.dims() != pe.w {
        return Err(Error::Shape("W forms do not match w".into()));
    }
    let g = &pe.graph;
    let zeta = pe.zeta_c.iter().map(|z| -z).collect();
    pe.map_values(zeta, pe.w.clone(), |f| {
        let fb = f.bar(g);
        let m = pe.get(&fb)?;
        // π′(f̄) : W_{i(f)} → W_{o(f)}
        let adj = right_adjoint(m, forms_w.gram(f.target(g)), forms_w.gram(f.source()))?;
        Ok(adj.scale(&q(-f.eps(g))))
    })
}

/// `Θ_{a,ε}(π′)(f) = Π_{h∈f} ε(h)^{(1−c)/2} π′(a(f))`, over `a⁻¹(ζ_ℂ)` and `a⁻¹(w)`.
pub fn theta_a(pe: &PathEval, a: &DiagramAuto) -> Result<PathEval> {
    let g = &pe.graph;
    if a.vertex_perm.len() != g.num_vertices() || a.arrow_perm.len() != g.num_arrows() {
        return Err(Error::InvalidAuto("automorphism does not match the graph".into()));
    }
    let inv = a.inverse();
    let zeta = inv.apply_q(&pe.zeta_c);
    let w = inv.apply_dims(&pe.w);
    pe.map_values(zeta, w, |f| {
        let af = Path { start: a.vertex_perm[f.start], arrows: f.arrows.iter().map(|&h| a.arrow_perm[h]).collect() };
        let m = pe.get(&af)?;
        Ok(if a.c == -1 { m.scale(&q(f.eps(g))) } else { m.clone() })
    })
}

/// Sign convention for the removal coefficients in [`lusztig_reflect`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemovalSign {
    /// `Π_{t∈J} (−ε(h_t) ζ^{(i)})`.
    Minus,
    /// `Π_{t∈J} ε(h_t) ζ^{(i)}`.
    Plus,
}

/// Lusztig's `S_i`: `[j] ↦ π′([j]) + δ_{ij} ζ^{(i)} id`, and for `f = h₁⋯h_s` the sum over
/// `J ⊆ J₀ = {t ∈ [2, s] : i(h_{t−1}) = i = o(h_t)}` of the removal terms, with `h_t` the
/// arrow leaving `i`. Paths are stored in traversal order. A removal is only a path when
/// `h_t = h̄_{t−1}`; the other terms vanish. The output lies over `s_i(ζ_ℂ)`.
pub fn lusztig_reflect(pe: &PathEval, i: usize, sign: RemovalSign) -> Result<PathEval> {
    let g = &pe.graph;
    g.check_vertex(i)?;
    let zi = pe.zeta_c[i].clone();
    let zeta = g.weyl_reflect_q(i, &pe.zeta_c)?;
    pe.map_values(zeta, pe.w.clone(), |f| {
        if f.is_empty() {
            let m = pe.get(f)?.clone();
            return Ok(if f.start == i { m.add(&QMatrix::scalar(m.rows(), &zi)) } else { m });
        }
        let s = f.len();
        // 0-based k ↔ 1-based t = k + 2
        let j0: Vec<usize> = (0..s.saturating_sub(1))
            .filter(|&k| g.dst(f.arrows[k]) == i && f.arrows[k + 1] == g.bar(f.arrows[k]))
            .collect();
        let mut acc = QMatrix::zeros(pe.get(f)?.rows(), pe.get(f)?.cols());
        for mask in 0u64..(1u64 << j0.len()) {
            let mut drop = vec![false; s];
            let mut coeff = Q::from_integer(1.into());
            for (b, &k) in j0.iter().enumerate() {
                if mask >> b & 1 == 0 {
                    continue;
                }
                drop[k] = true;
                drop[k + 1] = true;
                let e = q(g.eps(f.arrows[k + 1])) * &zi;
                coeff *= match sign {
                    RemovalSign::Minus => -e,
                    RemovalSign::Plus => e,
                };
            }
            if coeff.is_zero() {
                continue;
            }
            let kept: Vec<usize> = (0..s).filter(|&k| !drop[k]).map(|k| f.arrows[k]).collect();
            acc = acc.add(&pe.get(&Path { start: f.start, arrows: kept })?.scale(&coeff));
        }
        Ok(acc)
    })
}

/// `(g·π′)(f) = g_{i(f)} π′(f) g_{o(f)}⁻¹`.
pub fn act_gw(pe: &PathEval, gw: &[QMatrix]) -> Result<PathEval> {
    let g = &pe.graph;
    let inv: Vec<QMatrix> = gw.iter().map(|m| m.inverse().ok_or(Error::Singular)).collect::<Result<_>>()?;
    pe.map_values(pe.zeta_c.clone(), pe.w.clone(), |f| Ok(gw[f.target(g)].mul(pe.get(f)?).mul(&inv[f.source()])))
}

/// `σ₀ = S_ω ∘ Θ_{a,ε} ∘ τ₀` (rightmost letter of `ω` first).
pub fn sigma0(pe: &PathEval, omega: &[usize], a: &DiagramAuto, forms_w: &FormedGrading, sign: RemovalSign) -> Result<PathEval> {
    let mut cur = theta_a(&tau0(pe, forms_w)?, a)?;
    for &i in omega.iter().rev() {
        cur = lusztig_reflect(&cur, i, sign)?;
    }
    Ok(cur)
}

/// `ζ_ℂ = 0` helper for table construction.
pub fn zero_zeta(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_only_lazy() {
        let g = Graph::type_a(1);
        let pt = RepPoint::zero(&g, &[1], &[2]);
        let pe = eval_from_point(&pt, &zero_zeta(1), 4).unwrap();
        assert_eq!(pe.table.len(), 1);
        assert!(pe.table.contains_key(&Path::lazy(0)));
    }

    #[test]
    fn bar_and_eps() {
        let g = Graph::type_a(3);
        let f = Path::new(&g, vec![0, 2]).unwrap();
        assert_eq!(f.target(&g), 2);
        assert_eq!(f.bar(&g), Path::new(&g, vec![3, 1]).unwrap());
        assert_eq!(f.eps(&g), 1);
    }
}
