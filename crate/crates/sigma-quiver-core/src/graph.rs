//! Loop-free graphs with orientation, Cartan matrices, both Weyl actions, roots and
//! diagram automorphisms.
//!
//! Vertex and arrow indices are 0-based. Edge `k` produces the arrow pair `2k`
//! (as listed) and `2k + 1` (its bar).

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::rational::{q, Q};

pub type DimVector = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub eps: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    arrows: Vec<Arrow>,
    cartan: Vec<Vec<i64>>,
}

impl Graph {
    /// Build from unordered edges `(i, j)` and the sign of each listed arrow `i → j`.
    pub fn new(n: usize, edges: &[(usize, usize)], orientation: &[i8]) -> Result<Self> {
        if orientation.len() != edges.len() {
            return Err(Error::InvalidGraph(format!(
                "{} edges but {} orientation signs",
                edges.len(),
                orientation.len()
            )));
        }
        let mut arrows = Vec::with_capacity(2 * edges.len());
        for (&(i, j), &e) in edges.iter().zip(orientation) {
            if i >= n || j >= n {
                return Err(Error::BadVertex(i.max(j)));
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            if e != 1 && e != -1 {
                return Err(Error::InvalidGraph(format!("orientation sign {e} is not ±1")));
            }
            arrows.push(Arrow { src: i, dst: j, eps: e });
            arrows.push(Arrow { src: j, dst: i, eps: -e });
        }
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            cartan[i][i] = 2;
        }
        for a in &arrows {
            cartan[a.src][a.dst] -= 1;
        }
        Ok(Graph { n, arrows, cartan })
    }

    /// `A_n` on a path, with `ε(h) = o(h) − i(h)`: the arrow `i → i+1` carries `−1`.
    pub fn type_a(n: usize) -> Self {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        let orient = vec![-1; edges.len()];
        Self::new(n, &edges, &orient).expect("valid A_n")
    }

    /// `A_n` with alternating orientation: `ε(h) = +1` when `o(h)` is even (0-based).
    /// Compatible with the flip `i ↦ n−1−i` with `c = 1` when `n` is odd.
    pub fn type_a_alternating(n: usize) -> Self {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        let orient: Vec<i8> = (0..edges.len()).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
        Self::new(n, &edges, &orient).expect("valid A_n")
    }

    /// `D_n` (n ≥ 4): path `0 − 1 − … − (n−2)` plus the fork `(n−3) − (n−1)`.
    pub fn type_d(n: usize) -> Self {
        assert!(n >= 4);
        let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
        edges.push((n - 3, n - 1));
        let orient = vec![-1; edges.len()];
        Self::new(n, &edges, &orient).expect("valid D_n")
    }

    /// `E_n` (n = 6, 7, 8): path `0 − … − (n−2)` plus `2 − (n−1)`.
    pub fn type_e(n: usize) -> Self {
        assert!((6..=8).contains(&n));
        let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
        edges.push((2, n - 1));
        let orient = vec![-1; edges.len()];
        Self::new(n, &edges, &orient).expect("valid E_n")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, h: usize) -> Arrow {
        self.arrows[h]
    }

    pub fn src(&self, h: usize) -> usize {
        self.arrows[h].src
    }

    pub fn dst(&self, h: usize) -> usize {
        self.arrows[h].dst
    }

    pub fn eps(&self, h: usize) -> i64 {
        self.arrows[h].eps as i64
    }

    pub fn bar(&self, h: usize) -> usize {
        h ^ 1
    }

    /// Edges as listed, with the sign of each listed arrow.
    pub fn edges(&self) -> Vec<(usize, usize, i8)> {
        self.arrows.iter().step_by(2).map(|a| (a.src, a.dst, a.eps)).collect()
    }

    pub fn arrows_out(&self, i: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&h| self.arrows[h].src == i).collect()
    }

    pub fn arrows_in(&self, i: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&h| self.arrows[h].dst == i).collect()
    }

    pub fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::BadVertex(i))
        }
    }

    pub fn check_dims(&self, v: &[i64], what: &str) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::Shape(format!("{what} has length {} but graph has {} vertices", v.len(), self.n)));
        }
        Ok(())
    }

    /// `C[i][j] = 2δ_ij − #{h : o(h)=i, i(h)=j}`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.cartan.clone()
    }

    /// Linear action `s_i(ξ)_j = ξ_j − c_ji ξ_i`.
    pub fn weyl_reflect(&self, i: usize, xi: &[i64]) -> Result<DimVector> {
        self.check_vertex(i)?;
        self.check_dims(xi, "ξ")?;
        let c = &self.cartan;
        Ok((0..self.n).map(|j| xi[j] - c[j][i] * xi[i]).collect())
    }

    /// The same linear action on rational vectors (used for `ζ_ℂ`).
    pub fn weyl_reflect_q(&self, i: usize, z: &[Q]) -> Result<Vec<Q>> {
        self.check_vertex(i)?;
        let c = &self.cartan;
        Ok((0..self.n).map(|j| &z[j] - q(c[j][i]) * &z[i]).collect())
    }

    /// Affine action `(s_i *_w v)_i = v_i − Σ_j c_ij v_j + w_i`.
    pub fn weyl_star(&self, i: usize, v: &[i64], w: &[i64]) -> Result<DimVector> {
        self.check_vertex(i)?;
        self.check_dims(v, "v")?;
        self.check_dims(w, "w")?;
        let c = &self.cartan;
        let mut out = v.to_vec();
        out[i] = v[i] - (0..self.n).map(|j| c[i][j] * v[j]).sum::<i64>() + w[i];
        Ok(out)
    }

    /// `s_{i_1} * ⋯ * s_{i_l} * v`; the rightmost letter acts first.
    pub fn weyl_star_word(&self, word: &[usize], v: &[i64], w: &[i64]) -> Result<DimVector> {
        let mut out = v.to_vec();
        for &i in word.iter().rev() {
            out = self.weyl_star(i, &out, w)?;
        }
        Ok(out)
    }

    /// Linear action of a word; the rightmost letter acts first.
    pub fn weyl_reflect_word(&self, word: &[usize], xi: &[i64]) -> Result<DimVector> {
        let mut out = xi.to_vec();
        for &i in word.iter().rev() {
            out = self.weyl_reflect(i, &out)?;
        }
        Ok(out)
    }

    pub fn weyl_reflect_word_q(&self, word: &[usize], z: &[Q]) -> Result<Vec<Q>> {
        let mut out = z.to_vec();
        for &i in word.iter().rev() {
            out = self.weyl_reflect_q(i, &out)?;
        }
        Ok(out)
    }

    /// `C v` as integers.
    pub fn cartan_apply(&self, v: &[i64]) -> DimVector {
        let c = &self.cartan;
        (0..self.n).map(|i| (0..self.n).map(|j| c[i][j] * v[j]).sum()).collect()
    }

    fn quad(&self, c: &[Vec<i64>], g: &[i64]) -> i64 {
        (0..self.n).map(|i| (0..self.n).map(|j| g[i] * c[i][j] * g[j]).sum::<i64>()).sum()
    }

    /// `R_+(v)`: nonzero `γ ≤ v` with `ᵗγCγ ≤ 2`, by exhaustive box search.
    /// `cap` bounds `Σ v_i` (default 64 in callers).
    pub fn positive_roots_bounded(&self, v: &[i64], cap: i64) -> Result<Vec<DimVector>> {
        self.check_dims(v, "v")?;
        if v.iter().any(|&x| x < 0) {
            return Err(Error::Shape("v must be nonnegative".into()));
        }
        let total: i64 = v.iter().sum();
        if total > cap {
            return Err(Error::BoxTooLarge(total as u64, cap as u64));
        }
        let c = self.cartan_matrix();
        let mut out = Vec::new();
        let mut g = vec![0i64; self.n];
        loop {
            // Odometer increment.
            let mut k = 0;
            while k < self.n {
                if g[k] < v[k] {
                    g[k] += 1;
                    break;
                }
                g[k] = 0;
                k += 1;
            }
            if k == self.n {
                break;
            }
            if self.quad(&c, &g) <= 2 {
                out.push(g.clone());
            }
        }
        out.sort();
        Ok(out)
    }

    /// Generic iff `ξ·γ ≠ 0` for all `γ ∈ R_+(v)`, or `ζ_ℂ·γ ≠ 0` for all of them.
    pub fn is_generic(&self, zeta: &Parameter, v: &[i64], cap: i64) -> Result<bool> {
        let roots = self.positive_roots_bounded(v, cap)?;
        let real_ok = roots.iter().all(|g| g.iter().zip(&zeta.xi).map(|(a, b)| a * b).sum::<i64>() != 0);
        let cplx_ok = roots.iter().all(|g| {
            let s: Q = g.iter().zip(&zeta.zeta_c).map(|(a, b)| q(*a) * b).sum();
            !s.is_zero()
        });
        Ok(real_ok || cplx_ok)
    }

    /// Positive definiteness of `C` by leading principal minors over `Q`.
    pub fn is_dynkin(&self) -> bool {
        let c = self.cartan_matrix();
        (1..=self.n).all(|k| {
            let m = QMatrix::from_vec(k, k, (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| q(c[i][j])).collect());
            det(&m).is_positive()
        })
    }

    /// Matrix of `s_i` on root coordinates: `γ ↦ γ − (Cγ)_i α_i`.
    fn root_reflection(&self, c: &[Vec<i64>], i: usize) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.n]; self.n];
        for (j, row) in m.iter_mut().enumerate() {
            row[j] = 1;
        }
        for j in 0..self.n {
            m[i][j] -= c[i][j];
        }
        m
    }

    /// Reduced word of `w₀` and the involution `θ` with `w₀(α_i) = −α_θ(i)`.
    pub fn longest_element(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        if !self.is_dynkin() {
            return Err(Error::NotDynkin);
        }
        let c = self.cartan_matrix();
        let refl: Vec<_> = (0..self.n).map(|i| self.root_reflection(&c, i)).collect();
        let mut w = identity_i(self.n);
        let mut word = Vec::new();
        // Extend w by s_i on the right while w(α_i) > 0.
        'grow: loop {
            for (i, r) in refl.iter().enumerate() {
                let col: Vec<i64> = (0..self.n).map(|k| w[k][i]).collect();
                if col.iter().all(|&x| x >= 0) {
                    w = mat_mul_i(&w, r);
                    word.push(i);
                    continue 'grow;
                }
            }
            break;
        }
        let mut theta = vec![0; self.n];
        for i in 0..self.n {
            let col: Vec<i64> = (0..self.n).map(|k| w[k][i]).collect();
            let j = col.iter().position(|&x| x != 0).ok_or(Error::NotDynkin)?;
            if col[j] != -1 || col.iter().filter(|&&x| x != 0).count() != 1 {
                return Err(Error::NotDynkin);
            }
            theta[i] = j;
        }
        Ok((word, theta))
    }

    /// Matrix of a word on root coordinates (rightmost letter acts first).
    pub fn word_matrix(&self, word: &[usize]) -> Vec<Vec<i64>> {
        let c = self.cartan_matrix();
        let mut m = identity_i(self.n);
        for &i in word {
            m = mat_mul_i(&m, &self.root_reflection(&c, i));
        }
        m
    }

    /// Breadth-first enumeration of `W` as root-lattice matrices with shortest words.
    /// Stops at word length `length_cap` or `size_cap` elements.
    pub fn enumerate_weyl(&self, length_cap: usize, size_cap: usize) -> Result<Vec<(Vec<usize>, Vec<Vec<i64>>)>> {
        let c = self.cartan_matrix();
        let refl: Vec<_> = (0..self.n).map(|i| self.root_reflection(&c, i)).collect();
        let mut seen: BTreeMap<Vec<Vec<i64>>, ()> = BTreeMap::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        let id = identity_i(self.n);
        seen.insert(id.clone(), ());
        queue.push_back((Vec::new(), id));
        while let Some((word, m)) = queue.pop_front() {
            out.push((word.clone(), m.clone()));
            if out.len() > size_cap {
                return Err(Error::Cap(format!("Weyl group exceeds {size_cap} elements")));
            }
            if word.len() >= length_cap {
                continue;
            }
            for (i, r) in refl.iter().enumerate() {
                let m2 = mat_mul_i(&m, r);
                if seen.contains_key(&m2) {
                    continue;
                }
                seen.insert(m2.clone(), ());
                let mut w2 = word.clone();
                w2.push(i);
                queue.push_back((w2, m2));
            }
        }
        Ok(out)
    }

    /// Elements of `W^{ω,a} = {x : xω = ωx, a(x) = x}` up to the word-length cap.
    pub fn fixed_subgroup_scan(&self, omega: &[usize], a: &DiagramAuto, length_cap: usize) -> Result<Vec<Vec<usize>>> {
        if !self.is_dynkin() {
            return Err(Error::NotDynkin);
        }
        let om = self.word_matrix(omega);
        // a acts on root coordinates by the vertex permutation matrix.
        let mut p = vec![vec![0i64; self.n]; self.n];
        for i in 0..self.n {
            p[a.vertex_perm[i]][i] = 1;
        }
        let pinv = transpose_i(&p);
        let elems = self.enumerate_weyl(length_cap, 1_000_000)?;
        Ok(elems
            .into_iter()
            .filter(|(_, m)| mat_mul_i(m, &om) == mat_mul_i(&om, m) && mat_mul_i(&mat_mul_i(&p, m), &pinv) == *m)
            .map(|(w, _)| w)
            .collect())
    }

    /// Diagram automorphism from a vertex permutation: each arrow goes to the first
    /// unused arrow with permuted endpoints; `c` is read off and must be uniform.
    pub fn auto_from_vertex_perm(&self, perm: &[usize]) -> Result<DiagramAuto> {
        if perm.len() != self.n {
            return Err(Error::InvalidAuto("permutation length".into()));
        }
        let set: BTreeSet<_> = perm.iter().collect();
        if set.len() != self.n || perm.iter().any(|&x| x >= self.n) {
            return Err(Error::InvalidAuto("not a permutation".into()));
        }
        let mut arrow_perm = vec![usize::MAX; self.arrows.len()];
        let mut used = vec![false; self.arrows.len()];
        for h in (0..self.arrows.len()).step_by(2) {
            let a = self.arrows[h];
            let target = (0..self.arrows.len())
                .find(|&k| !used[k] && self.arrows[k].src == perm[a.src] && self.arrows[k].dst == perm[a.dst])
                .ok_or_else(|| Error::InvalidAuto(format!("no image for arrow {h}")))?;
            arrow_perm[h] = target;
            arrow_perm[h ^ 1] = target ^ 1;
            used[target] = true;
            used[target ^ 1] = true;
        }
        let c = if self.arrows.is_empty() { 1 } else { self.eps(arrow_perm[0]) * self.eps(0) };
        DiagramAuto::new(self, perm.to_vec(), arrow_perm, c as i8)
    }

    pub fn identity_auto(&self) -> DiagramAuto {
        DiagramAuto {
            vertex_perm: (0..self.n).collect(),
            arrow_perm: (0..self.arrows.len()).collect(),
            c: 1,
        }
    }
}

/// `ζ = (ξ, ζ_ℂ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parameter {
    pub xi: DimVector,
    pub zeta_c: Vec<Q>,
}

impl Parameter {
    pub fn new(xi: DimVector, zeta_c: Vec<Q>) -> Self {
        Parameter { xi, zeta_c }
    }

    pub fn real(xi: DimVector) -> Self {
        let n = xi.len();
        Parameter { xi, zeta_c: vec![Q::zero(); n] }
    }

    /// Linear Weyl action on both components.
    pub fn reflect(&self, g: &Graph, i: usize) -> Result<Parameter> {
        Ok(Parameter { xi: g.weyl_reflect(i, &self.xi)?, zeta_c: g.weyl_reflect_q(i, &self.zeta_c)? })
    }

    pub fn neg(&self) -> Parameter {
        Parameter { xi: self.xi.iter().map(|x| -x).collect(), zeta_c: self.zeta_c.iter().map(|z| -z).collect() }
    }
}

/// Graph automorphism with `ε(a(h)) = c·ε(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAuto {
    pub vertex_perm: Vec<usize>,
    pub arrow_perm: Vec<usize>,
    pub c: i8,
}

impl DiagramAuto {
    /// Validates incidence, bar-compatibility and the sign rule; `c` is recomputed.
    pub fn new(g: &Graph, vertex_perm: Vec<usize>, arrow_perm: Vec<usize>, c: i8) -> Result<Self> {
        if vertex_perm.len() != g.num_vertices() || arrow_perm.len() != g.num_arrows() {
            return Err(Error::InvalidAuto("permutation lengths".into()));
        }
        for h in 0..g.num_arrows() {
            let ah = arrow_perm[h];
            if ah >= g.num_arrows() {
                return Err(Error::InvalidAuto(format!("arrow image {ah} out of range")));
            }
            if g.src(ah) != vertex_perm[g.src(h)] || g.dst(ah) != vertex_perm[g.dst(h)] {
                return Err(Error::InvalidAuto(format!("arrow {h} endpoints not preserved")));
            }
            if arrow_perm[g.bar(h)] != g.bar(ah) {
                return Err(Error::InvalidAuto(format!("bar not preserved at arrow {h}")));
            }
        }
        let recomputed = if g.num_arrows() == 0 { c as i64 } else { g.eps(arrow_perm[0]) * g.eps(0) };
        if recomputed != c as i64 {
            return Err(Error::InvalidAuto(format!("declared c = {c} but ε gives {recomputed}")));
        }
        for h in 0..g.num_arrows() {
            if g.eps(arrow_perm[h]) != recomputed * g.eps(h) {
                return Err(Error::InvalidAuto(format!("ε(a(h)) ≠ c·ε(h) at arrow {h}")));
            }
        }
        Ok(DiagramAuto { vertex_perm, arrow_perm, c })
    }

    pub fn inverse_vertex(&self) -> Vec<usize> {
        let mut inv = vec![0; self.vertex_perm.len()];
        for (i, &j) in self.vertex_perm.iter().enumerate() {
            inv[j] = i;
        }
        inv
    }

    pub fn inverse_arrow(&self) -> Vec<usize> {
        let mut inv = vec![0; self.arrow_perm.len()];
        for (i, &j) in self.arrow_perm.iter().enumerate() {
            inv[j] = i;
        }
        inv
    }

    /// `a⁻¹`, compatible with the same `c`.
    pub fn inverse(&self) -> DiagramAuto {
        DiagramAuto { vertex_perm: self.inverse_vertex(), arrow_perm: self.inverse_arrow(), c: self.c }
    }

    /// `a(v)_{a(i)} = v_i`.
    pub fn apply_dims(&self, v: &[i64]) -> DimVector {
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.vertex_perm[i]] = x;
        }
        out
    }

    pub fn apply_q(&self, v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); v.len()];
        for (i, x) in v.iter().enumerate() {
            out[self.vertex_perm[i]] = x.clone();
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_perm.iter().enumerate().all(|(i, &j)| i == j) && self.arrow_perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Order of the vertex permutation.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut p = self.vertex_perm.clone();
        let mut ap = self.arrow_perm.clone();
        while !(p.iter().enumerate().all(|(i, &j)| i == j) && ap.iter().enumerate().all(|(i, &j)| i == j)) {
            p = p.iter().map(|&j| self.vertex_perm[j]).collect();
            ap = ap.iter().map(|&j| self.arrow_perm[j]).collect();
            k += 1;
        }
        k
    }
}

/// Row of Table 1: fixed-point subalgebra and Satake type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeRecord {
    /// The table entry with its symbolic indices, e.g. `sl_p ⊕ gl_{p+1}`.
    pub k_template: String,
    /// The same entry evaluated at the given rank.
    pub k: String,
    pub satake_type: String,
}

/// Lookup in the table of Satake diagrams without black vertices.
pub fn satake_lookup(family: char, rank: usize, a_order: usize) -> Result<SatakeRecord> {
    let rec = |t: &str, k: String, s: &str| SatakeRecord { k_template: t.into(), k, satake_type: s.into() };
    let l = rank;
    let missing = || Error::Lookup(format!("({family}_{rank}, |a|={a_order})"));
    match (family, a_order) {
        ('A', 1) if l >= 1 && l.is_multiple_of(2) => {
            let p = l / 2;
            Ok(rec("sl_p ⊕ gl_{p+1}", format!("sl_{p} ⊕ gl_{}", p + 1), "AIII"))
        }
        ('A', 1) if l >= 1 => {
            let p = l.div_ceil(2);
            Ok(rec("sl_p ⊕ gl_p", format!("sl_{p} ⊕ gl_{p}"), "AIII"))
        }
        ('A', 2) if l >= 2 => Ok(rec("so_{ℓ+1}", format!("so_{}", l + 1), "AI")),
        ('D', 1) if l >= 4 && l % 2 == 1 => Ok(rec("so_{ℓ−1} ⊕ so_{ℓ+1}", format!("so_{} ⊕ so_{}", l - 1, l + 1), "DI")),
        ('D', 1) if l >= 4 => Ok(rec("so_ℓ ⊕ so_ℓ", format!("so_{l} ⊕ so_{l}"), "DI")),
        ('D', 2) if l >= 4 && l % 2 == 1 => Ok(rec("so_ℓ ⊕ so_ℓ", format!("so_{l} ⊕ so_{l}"), "DI")),
        ('D', 2) if l >= 4 => Ok(rec("so_{ℓ−1} ⊕ so_{ℓ+1}", format!("so_{} ⊕ so_{}", l - 1, l + 1), "DI")),
        ('E', 1) if l == 6 => Ok(rec("sl_2 ⊕ sl_6", "sl_2 ⊕ sl_6".into(), "EII")),
        ('E', 2) if l == 6 => Ok(rec("sp_4", "sp_4".into(), "EI")),
        ('E', 1) if l == 7 => Ok(rec("sl_8", "sl_8".into(), "EV")),
        ('E', 1) if l == 8 => Ok(rec("so_16", "so_16".into(), "EVIII")),
        _ => Err(missing()),
    }
}

fn identity_i(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

fn transpose_i(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

fn mat_mul_i(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Determinant by fraction-free elimination over `Q`.
pub fn det(m: &QMatrix) -> Q {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let mut d = Q::from_integer(1.into());
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            for c in 0..n {
                let t = a[(p, c)].clone();
                a[(p, c)] = a[(col, c)].clone();
                a[(col, c)] = t;
            }
            d = -d;
        }
        let piv = a[(col, col)].clone();
        d *= &piv;
        for r in col + 1..n {
            if a[(r, col)].is_zero() {
                continue;
            }
            let f = &a[(r, col)] / &piv;
            for c in col..n {
                let v = &a[(col, c)] * &f;
                a[(r, c)] -= v;
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_cartan() {
        assert_eq!(Graph::type_a(2).cartan_matrix(), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(Graph::type_a(1).cartan_matrix(), vec![vec![2]]);
    }

    #[test]
    fn longest_a2() {
        let (w, t) = Graph::type_a(2).longest_element().unwrap();
        assert_eq!(w, vec![0, 1, 0]);
        assert_eq!(t, vec![1, 0]);
    }
}
