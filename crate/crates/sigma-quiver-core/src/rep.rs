//! Points of `M(v, w)`: moment map, symplectic form, group actions, stability in the
//! uniform chambers, orbit comparison and the type-A flag map.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{DimVector, Graph};
use crate::linsys::LinearSystem;
use crate::matrix::QMatrix;
use crate::rational::{q, rand_q, rng_from_seed, Rng, Q};
use crate::subspace::Subspace;

/// `x_h : V_{o(h)} → V_{i(h)}`, `p_i : W_i → V_i`, `q_i : V_i → W_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepPoint {
    pub graph: Graph,
    pub v: DimVector,
    pub w: DimVector,
    pub x: Vec<QMatrix>,
    pub p: Vec<QMatrix>,
    pub q: Vec<QMatrix>,
}

/// Vertex-indexed family of invertible blocks, for `G_v` or `G_w`.
pub type GroupElem = Vec<QMatrix>;

fn ud(x: i64) -> usize {
    x as usize
}

impl RepPoint {
    pub fn new(graph: Graph, v: DimVector, w: DimVector, x: Vec<QMatrix>, p: Vec<QMatrix>, q: Vec<QMatrix>) -> Result<Self> {
        let pt = RepPoint { graph, v, w, x, p, q };
        pt.validate()?;
        Ok(pt)
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.graph;
        let n = g.num_vertices();
        g.check_dims(&self.v, "v")?;
        g.check_dims(&self.w, "w")?;
        if self.x.len() != g.num_arrows() || self.p.len() != n || self.q.len() != n {
            return Err(Error::Shape("point component counts do not match the graph".into()));
        }
        for (h, m) in self.x.iter().enumerate() {
            let want = (ud(self.v[g.dst(h)]), ud(self.v[g.src(h)]));
            if m.shape() != want {
                return Err(Error::Shape(format!("x_{h} is {:?}, expected {want:?}", m.shape())));
            }
        }
        for i in 0..n {
            if self.p[i].shape() != (ud(self.v[i]), ud(self.w[i])) || self.q[i].shape() != (ud(self.w[i]), ud(self.v[i])) {
                return Err(Error::Shape(format!("p/q at vertex {i}")));
            }
        }
        Ok(())
    }

    pub fn zero(graph: &Graph, v: &[i64], w: &[i64]) -> Self {
        let x = (0..graph.num_arrows())
            .map(|h| QMatrix::zeros(ud(v[graph.dst(h)]), ud(v[graph.src(h)])))
            .collect();
        let n = graph.num_vertices();
        let p = (0..n).map(|i| QMatrix::zeros(ud(v[i]), ud(w[i]))).collect();
        let q = (0..n).map(|i| QMatrix::zeros(ud(w[i]), ud(v[i]))).collect();
        RepPoint { graph: graph.clone(), v: v.to_vec(), w: w.to_vec(), x, p, q }
    }

    /// Entries drawn independently (not on any moment-map level).
    pub fn random(graph: &Graph, v: &[i64], w: &[i64], rng: &mut Rng) -> Self {
        let mut pt = Self::zero(graph, v, w);
        pt.map_components(|m| QMatrix::random(m.rows(), m.cols(), rng, 3));
        pt
    }

    fn map_components(&mut self, mut f: impl FnMut(&QMatrix) -> QMatrix) {
        for m in self.x.iter_mut().chain(self.p.iter_mut()).chain(self.q.iter_mut()) {
            *m = f(m);
        }
    }

    fn same_space(&self, o: &RepPoint) -> bool {
        self.graph == o.graph && self.v == o.v && self.w == o.w
    }

    pub fn add(&self, o: &RepPoint) -> RepPoint {
        assert!(self.same_space(o));
        let mut out = self.clone();
        let others: Vec<&QMatrix> = o.x.iter().chain(&o.p).chain(&o.q).collect();
        let mut k = 0;
        out.map_components(|m| {
            k += 1;
            m.add(others[k - 1])
        });
        out
    }

    pub fn scale(&self, s: &Q) -> RepPoint {
        let mut out = self.clone();
        out.map_components(|m| m.scale(s));
        out
    }

    /// Coordinates in the order `x` (by arrow), `p`, `q`, each block row-major.
    pub fn to_vec(&self) -> Vec<Q> {
        self.x.iter().chain(&self.p).chain(&self.q).flat_map(|m| m.data().iter().cloned()).collect()
    }

    pub fn from_vec(&self, data: &[Q]) -> RepPoint {
        let mut out = self.clone();
        let mut pos = 0;
        out.map_components(|m| {
            let len = m.rows() * m.cols();
            let b = QMatrix::from_vec(m.rows(), m.cols(), data[pos..pos + len].to_vec());
            pos += len;
            b
        });
        out
    }

    pub fn dim_m(&self) -> usize {
        self.to_vec().len()
    }

    /// `μ_i = Σ_{i(h)=i} ε(h) x_h x_{h̄} − p_i q_i`.
    pub fn moment_map(&self) -> Vec<QMatrix> {
        let g = &self.graph;
        (0..g.num_vertices())
            .map(|i| {
                let mut m = self.p[i].mul(&self.q[i]).neg();
                for h in g.arrows_in(i) {
                    let t = self.x[h].mul(&self.x[g.bar(h)]).scale(&q(g.eps(h)));
                    m = m.add(&t);
                }
                m
            })
            .collect()
    }

    pub fn in_lambda(&self, zeta_c: &[Q]) -> bool {
        self.moment_map()
            .iter()
            .zip(zeta_c)
            .all(|(m, z)| *m == QMatrix::scalar(m.rows(), z))
    }

    /// `ω(x, x′) = Σ_h tr(ε(h) x_h x′_{h̄}) + Σ_i tr(p_i q′_i − p′_i q_i)`.
    pub fn symplectic_pair(&self, o: &RepPoint) -> Result<Q> {
        if !self.same_space(o) {
            return Err(Error::Shape("symplectic pairing of points on different spaces".into()));
        }
        let g = &self.graph;
        let mut acc = Q::zero();
        for h in 0..g.num_arrows() {
            acc += self.x[h].mul(&o.x[g.bar(h)]).trace() * q(g.eps(h));
        }
        for i in 0..g.num_vertices() {
            acc += self.p[i].mul(&o.q[i]).trace() - o.p[i].mul(&self.q[i]).trace();
        }
        Ok(acc)
    }

    /// `x_h ↦ g_{i(h)} x_h g_{o(h)}⁻¹`, `p ↦ g p`, `q ↦ q g⁻¹`.
    pub fn act_gv(&self, g: &[QMatrix]) -> Result<RepPoint> {
        let inv = invert_all(g, &self.v)?;
        let gr = &self.graph;
        let mut out = self.clone();
        for h in 0..gr.num_arrows() {
            out.x[h] = g[gr.dst(h)].mul(&self.x[h]).mul(&inv[gr.src(h)]);
        }
        for i in 0..gr.num_vertices() {
            out.p[i] = g[i].mul(&self.p[i]);
            out.q[i] = self.q[i].mul(&inv[i]);
        }
        Ok(out)
    }

    /// `p ↦ p f⁻¹`, `q ↦ f q`.
    pub fn act_gw(&self, f: &[QMatrix]) -> Result<RepPoint> {
        let inv = invert_all(f, &self.w)?;
        let mut out = self.clone();
        for i in 0..self.graph.num_vertices() {
            out.p[i] = self.p[i].mul(&inv[i]);
            out.q[i] = f[i].mul(&self.q[i]);
        }
        Ok(out)
    }

    /// Largest `x`-invariant graded subspace inside `⊕ ker q_i` is zero.
    pub fn is_stable_positive(&self) -> bool {
        let g = &self.graph;
        let n = g.num_vertices();
        let mut s: Vec<Subspace> = (0..n).map(|i| Subspace::kernel_of(&self.q[i])).collect();
        loop {
            let next: Vec<Subspace> = (0..n)
                .map(|i| {
                    g.arrows_out(i)
                        .into_iter()
                        .fold(s[i].clone(), |acc, h| acc.intersect(&s[g.dst(h)].preimage_under(&self.x[h])))
                })
                .collect();
            if next == s {
                break;
            }
            s = next;
        }
        s.iter().all(|x| x.dim() == 0)
    }

    /// Smallest `x`-invariant graded subspace containing `⊕ im p_i` is everything.
    pub fn is_stable_negative(&self) -> bool {
        let g = &self.graph;
        let n = g.num_vertices();
        let mut t: Vec<Subspace> = (0..n).map(|i| Subspace::image_of(&self.p[i])).collect();
        loop {
            let next: Vec<Subspace> = (0..n)
                .map(|i| {
                    g.arrows_in(i)
                        .into_iter()
                        .fold(t[i].clone(), |acc, h| acc.sum(&t[g.src(h)].image_under(&self.x[h])))
                })
                .collect();
            if next == t {
                break;
            }
            t = next;
        }
        t.iter().zip(&self.v).all(|(x, &d)| x.dim() == ud(d))
    }
}

fn invert_all(g: &[QMatrix], dims: &[i64]) -> Result<Vec<QMatrix>> {
    if g.len() != dims.len() {
        return Err(Error::Shape("group element has the wrong number of blocks".into()));
    }
    g.iter()
        .zip(dims)
        .map(|(m, &d)| {
            if m.shape() != (ud(d), ud(d)) {
                return Err(Error::Shape(format!("group block {:?} on a {d}-dim space", m.shape())));
            }
            m.inverse().ok_or(Error::Singular)
        })
        .collect()
}

/// Random element of `G_v` (or `G_w`) for the given dimensions.
pub fn random_group_elem(dims: &[i64], rng: &mut Rng) -> GroupElem {
    dims.iter().map(|&d| crate::forms::random_invertible(ud(d), rng)).collect()
}

pub fn identity_group_elem(dims: &[i64]) -> GroupElem {
    dims.iter().map(|&d| QMatrix::identity(ud(d))).collect()
}

/// Invertible `g ∈ G_v` with `g·pt1 = pt2`, if one is found.
///
/// The conditions are linear in `g`; the affine solution set is searched at its
/// particular solution and at up to 100 further rational points.
pub fn intertwiner(pt1: &RepPoint, pt2: &RepPoint) -> Option<GroupElem> {
    if !pt1.same_space(pt2) {
        return None;
    }
    let gr = &pt1.graph;
    let n = gr.num_vertices();
    let mut sys = LinearSystem::new();
    let ids: Vec<usize> = pt1.v.iter().map(|&d| sys.add_block(ud(d), ud(d))).collect();
    for h in 0..gr.num_arrows() {
        let (o, t) = (gr.src(h), gr.dst(h));
        let (vo, vt) = (ud(pt1.v[o]), ud(pt1.v[t]));
        // g_t x_h − x′_h g_o = 0
        sys.add_equation(
            &[
                (ids[t], &QMatrix::identity(vt), &pt1.x[h]),
                (ids[o], &pt2.x[h].neg(), &QMatrix::identity(vo)),
            ],
            &QMatrix::zeros(vt, vo),
        );
    }
    for i in 0..n {
        let vi = ud(pt1.v[i]);
        sys.add_equation(&[(ids[i], &QMatrix::identity(vi), &pt1.p[i])], &pt2.p[i]);
        sys.add_equation(&[(ids[i], &pt2.q[i], &QMatrix::identity(vi))], &pt1.q[i]);
    }
    let sol = sys.solve()?;
    let mut rng = rng_from_seed(0x5eed);
    for attempt in 0..=100 {
        let coeffs: Vec<Q> = if attempt == 0 {
            vec![Q::zero(); sol.dim()]
        } else {
            (0..sol.dim()).map(|_| rand_q(&mut rng, 5)).collect()
        };
        let u = sol.point(&coeffs);
        let g: GroupElem = ids.iter().map(|&id| sys.block(&u, id)).collect();
        if g.iter().all(|b| b.is_invertible()) {
            return Some(g);
        }
        if sol.dim() == 0 {
            break;
        }
    }
    None
}

pub fn same_orbit(pt1: &RepPoint, pt2: &RepPoint) -> bool {
    intertwiner(pt1, pt2).is_some()
}

/// The path `0 − 1 − ⋯ − (n−1)` with edge `k` listed as `k → k+1`.
pub fn is_type_a_path(g: &Graph) -> bool {
    g.edges().iter().enumerate().all(|(k, &(a, b, _))| a == k && b == k + 1) && g.edges().len() + 1 == g.num_vertices().max(1)
}

/// `(q₁p₁, [im q₁, im q₁y₁, …, im q₁y₁⋯y_{n−1}])` for `w` supported at the first vertex.
pub fn flag_map(pt: &RepPoint) -> Result<(QMatrix, Vec<Subspace>)> {
    let g = &pt.graph;
    let n = g.num_vertices();
    if !is_type_a_path(g) {
        return Err(Error::NotTypeA("graph is not the A_n path".into()));
    }
    if pt.w.iter().skip(1).any(|&x| x != 0) {
        return Err(Error::NotTypeA("w is not supported at the first vertex".into()));
    }
    let x = pt.q[0].mul(&pt.p[0]);
    let mut flag = Vec::with_capacity(n);
    let mut acc = pt.q[0].clone();
    for k in 0..n {
        if k > 0 {
            // y_k : V_{k} → V_{k−1} (0-based) is the bar arrow of edge k−1.
            acc = acc.mul(&pt.x[2 * (k - 1) + 1]);
        }
        flag.push(Subspace::image_of(&acc));
    }
    Ok((x, flag))
}

/// `x(W) ⊆ F_1`, `x(F_k) ⊆ F_{k+1}` and `x(F_n) = 0`.
pub fn flag_containment(x: &QMatrix, flag: &[Subspace]) -> bool {
    let d = x.rows();
    let full = Subspace::full(d);
    let mut prev = &full;
    for f in flag {
        if !f.contains(&prev.image_under(x)) {
            return false;
        }
        prev = f;
    }
    prev.image_under(x).dim() == 0
}

/// Random point of `Λ_ζ(v, w)`: the arrows listed first in each pair and all `p_i` are
/// drawn at random, the moment map is then affine in the rest.
pub fn random_lambda_point(graph: &Graph, v: &[i64], w: &[i64], zeta_c: &[Q], rng: &mut Rng) -> Result<RepPoint> {
    for _ in 0..64 {
        let mut pt = RepPoint::zero(graph, v, w);
        for h in (0..graph.num_arrows()).step_by(2) {
            pt.x[h] = QMatrix::random(pt.x[h].rows(), pt.x[h].cols(), rng, 3);
        }
        for i in 0..graph.num_vertices() {
            pt.p[i] = QMatrix::random(pt.p[i].rows(), pt.p[i].cols(), rng, 3);
        }
        let mut sys = LinearSystem::new();
        let xid: Vec<Option<usize>> = (0..graph.num_arrows())
            .map(|h| (h % 2 == 1).then(|| sys.add_block(pt.x[h].rows(), pt.x[h].cols())))
            .collect();
        let qid: Vec<usize> = (0..graph.num_vertices()).map(|i| sys.add_block(ud(w[i]), ud(v[i]))).collect();
        for i in 0..graph.num_vertices() {
            let vi = ud(v[i]);
            let id = QMatrix::identity(vi);
            let mut lefts = Vec::new();
            for h in graph.arrows_in(i) {
                let e = q(graph.eps(h));
                let hb = graph.bar(h);
                if let Some(b) = xid[hb] {
                    lefts.push((b, pt.x[h].scale(&e), QMatrix::identity(pt.x[hb].cols())));
                } else if let Some(b) = xid[h] {
                    lefts.push((b, QMatrix::scalar(vi, &e), pt.x[hb].clone()));
                }
            }
            lefts.push((qid[i], pt.p[i].neg(), id.clone()));
            let terms: Vec<(usize, &QMatrix, &QMatrix)> = lefts.iter().map(|(b, l, r)| (*b, l, r)).collect();
            sys.add_equation(&terms, &QMatrix::scalar(vi, &zeta_c[i]));
        }
        let Some(sol) = sys.solve() else { continue };
        let coeffs: Vec<Q> = (0..sol.dim()).map(|_| rand_q(rng, 3)).collect();
        let u = sol.point(&coeffs);
        for (h, b) in xid.iter().enumerate() {
            if let Some(b) = b {
                pt.x[h] = sys.block(&u, *b);
            }
        }
        for i in 0..graph.num_vertices() {
            pt.q[i] = sys.block(&u, qid[i]);
        }
        debug_assert!(pt.in_lambda(zeta_c));
        return Ok(pt);
    }
    Err(Error::SamplingExhausted(64))
}

/// Which uniform chamber a point must be stable in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chamber {
    Positive,
    Negative,
}

/// Random point of `Λ_ζ(v, w)` that is stable in the given chamber.
pub fn random_stable_point(graph: &Graph, v: &[i64], w: &[i64], zeta_c: &[Q], chamber: Chamber, rng: &mut Rng) -> Result<RepPoint> {
    for _ in 0..64 {
        let pt = random_lambda_point(graph, v, w, zeta_c, rng)?;
        let ok = match chamber {
            Chamber::Positive => pt.is_stable_positive(),
            Chamber::Negative => pt.is_stable_negative(),
        };
        if ok {
            return Ok(pt);
        }
    }
    Err(Error::SamplingExhausted(64))
}

/// Matrix of a linear map `M(v,w) → M(v′,w′)` in the `to_vec` coordinates.
pub fn linear_map_matrix(src: &RepPoint, f: impl Fn(&RepPoint) -> RepPoint) -> QMatrix {
    let n = src.dim_m();
    let zero = src.from_vec(&vec![Q::zero(); n]);
    let cols: Vec<Vec<Q>> = (0..n)
        .map(|k| {
            let mut e = vec![Q::zero(); n];
            e[k] = Q::one();
            f(&zero.from_vec(&e)).to_vec()
        })
        .collect();
    let m = cols.first().map_or(0, |c| c.len());
    let mut out = QMatrix::zeros(m, n);
    for (k, c) in cols.iter().enumerate() {
        for (r, x) in c.iter().enumerate() {
            out[(r, k)] = x.clone();
        }
    }
    out
}

/// Random vector in `{x : f(x) = x}` for a linear endomorphism `f` of `M(v,w)`.
pub fn random_fixed_point(template: &RepPoint, f: impl Fn(&RepPoint) -> RepPoint, rng: &mut Rng) -> RepPoint {
    let m = linear_map_matrix(template, f);
    let k = m.sub(&QMatrix::identity(m.rows())).kernel();
    let mut u = vec![Q::zero(); m.rows()];
    for c in 0..k.cols() {
        let s = rand_q(rng, 3);
        for (r, x) in u.iter_mut().enumerate() {
            *x += &s * &k[(r, c)];
        }
    }
    template.from_vec(&u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1_point() -> RepPoint {
        let g = Graph::type_a(1);
        RepPoint::new(
            g,
            vec![1],
            vec![2],
            vec![],
            vec![QMatrix::from_i64(1, 2, &[1, 0])],
            vec![QMatrix::from_i64(2, 1, &[0, 1])],
        )
        .unwrap()
    }

    #[test]
    fn a1_moment_and_stability() {
        let pt = a1_point();
        assert!(pt.moment_map()[0].is_zero());
        assert!(pt.in_lambda(&[Q::zero()]));
        assert!(!pt.in_lambda(&[q(1)]));
        assert!(pt.is_stable_positive());
        let mut bad = pt.clone();
        bad.q[0] = QMatrix::zeros(2, 1);
        assert!(!bad.is_stable_positive());
    }

    #[test]
    fn a1_flag() {
        let (x, flag) = flag_map(&a1_point()).unwrap();
        assert_eq!(x, QMatrix::from_i64(2, 2, &[0, 0, 1, 0]));
        assert_eq!(flag[0], Subspace::span(&QMatrix::from_i64(2, 1, &[0, 1])));
        assert!(flag_containment(&x, &flag));
    }
}
