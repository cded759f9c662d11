//! Torus fixed-point decompositions `v¹ + v² + ⋯ ⊨ v` and the rank-two chamber picture.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{DiagramAuto, DimVector, Graph};

/// `v¹` together with `v², …, v^m` (one per torus block).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModelDecomp {
    pub v1: DimVector,
    pub blocks: Vec<DimVector>,
}

impl ModelDecomp {
    pub fn v2(&self) -> &DimVector {
        &self.blocks[0]
    }
}

/// Largest box the scan will visit.
pub const BOX_CAP: u64 = 5_000_000;

struct Ctx<'a> {
    g: &'a Graph,
    a: &'a DiagramAuto,
    omega: &'a [usize],
}

impl Ctx<'_> {
    /// `a(ω *_w u)`.
    fn dual(&self, u: &[i64], w: &[i64]) -> Result<DimVector> {
        Ok(self.a.apply_dims(&self.g.weyl_star_word(self.omega, u, w)?))
    }

    fn self_paired(&self, v1: &[i64], w1: &[i64]) -> Result<bool> {
        Ok(self.dual(v1, w1)? == v1)
    }
}

fn check_pre(g: &Graph, a: &DiagramAuto, v: &[i64], w1: &[i64], ws: &[DimVector]) -> Result<DimVector> {
    g.check_dims(v, "v")?;
    g.check_dims(w1, "w¹")?;
    for (k, wk) in ws.iter().enumerate() {
        g.check_dims(wk, &format!("w^{}", k + 2))?;
    }
    if a.vertex_perm.len() != g.num_vertices() {
        return Err(Error::InvalidAuto("vertex permutation length".into()));
    }
    if a.apply_dims(w1) != w1 {
        return Err(Error::InvalidAuto("a(w¹) ≠ w¹".into()));
    }
    let mut w = w1.to_vec();
    for wk in ws {
        for (x, y) in w.iter_mut().zip(wk) {
            *x += 2 * y;
        }
    }
    if a.apply_dims(&w) != w {
        return Err(Error::InvalidAuto("a(w) ≠ w for w = w¹ + 2Σw^k".into()));
    }
    let size = ws.len() as u32 + 1;
    let cells: u64 = v.iter().map(|&x| x as u64 + 1).product();
    let total = cells.checked_pow(size).unwrap_or(u64::MAX);
    if total > BOX_CAP {
        return Err(Error::BoxTooLarge(total, BOX_CAP));
    }
    Ok(w)
}

/// All `u` with `0 ≤ u ≤ v` entrywise, in lexicographic order.
pub fn box_points(v: &[i64]) -> Vec<DimVector> {
    let mut out = vec![vec![0; v.len()]];
    for (i, &b) in v.iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * (b.max(0) as usize + 1));
        for u in &out {
            for x in 0..=b.max(0) {
                let mut u = u.clone();
                u[i] = x;
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// Single torus block: `v¹ = a(ω *_{w¹} v¹)` and `v¹ + v² + a(ω *_{w²} v²) = v`.
pub fn enumerate_models(
    g: &Graph,
    a: &DiagramAuto,
    omega: &[usize],
    v: &[i64],
    w1: &[i64],
    w2: &[i64],
) -> Result<Vec<ModelDecomp>> {
    enumerate_models_multi(g, a, omega, v, w1, &[w2.to_vec()])
}

/// Several blocks `w = w¹ + 2Σ_{k≥2} w^k`.
pub fn enumerate_models_multi(
    g: &Graph,
    a: &DiagramAuto,
    omega: &[usize],
    v: &[i64],
    w1: &[i64],
    ws: &[DimVector],
) -> Result<Vec<ModelDecomp>> {
    check_pre(g, a, v, w1, ws)?;
    let ctx = Ctx { g, a, omega };
    let pts = box_points(v);
    let mut out = Vec::new();
    for v1 in &pts {
        if !ctx.self_paired(v1, w1)? {
            continue;
        }
        let mut chosen = Vec::new();
        scan_blocks(&ctx, v, ws, &pts, v1.clone(), &mut chosen, &mut |blocks| {
            out.push(ModelDecomp { v1: v1.clone(), blocks: blocks.to_vec() });
        })?;
    }
    Ok(out)
}

fn scan_blocks(
    ctx: &Ctx,
    v: &[i64],
    ws: &[DimVector],
    pts: &[DimVector],
    acc: DimVector,
    chosen: &mut Vec<DimVector>,
    emit: &mut dyn FnMut(&[DimVector]),
) -> Result<()> {
    let k = chosen.len();
    if k == ws.len() {
        if acc == v {
            emit(chosen);
        }
        return Ok(());
    }
    for u in pts {
        let du = ctx.dual(u, &ws[k])?;
        if du.iter().any(|&x| x < 0) {
            continue;
        }
        let next: DimVector = acc.iter().zip(u).zip(&du).map(|((x, y), z)| x + y + z).collect();
        if next.iter().zip(v).any(|(x, y)| x > y) {
            continue;
        }
        chosen.push(u.clone());
        scan_blocks(ctx, v, ws, pts, next, chosen, emit)?;
        chosen.pop();
    }
    Ok(())
}

/// Independent scan: blocks are chosen last-to-first over the full product box and `v¹` is
/// read off as the remainder. Used to cross-check [`enumerate_models_multi`].
pub fn brute_force_models(
    g: &Graph,
    a: &DiagramAuto,
    omega: &[usize],
    v: &[i64],
    w1: &[i64],
    ws: &[DimVector],
) -> Result<Vec<ModelDecomp>> {
    check_pre(g, a, v, w1, ws)?;
    let ctx = Ctx { g, a, omega };
    let pts = box_points(v);
    let m = ws.len();
    let mut idx = vec![0usize; m];
    let mut out = Vec::new();
    'outer: loop {
        let mut rem = v.to_vec();
        for k in (0..m).rev() {
            let u = &pts[idx[k]];
            let du = ctx.dual(u, &ws[k])?;
            for i in 0..v.len() {
                rem[i] -= u[i] + du[i];
            }
            if du.iter().any(|&x| x < 0) {
                rem[0] = -1;
            }
        }
        if rem.iter().all(|&x| x >= 0) && ctx.self_paired(&rem, w1)? {
            out.push(ModelDecomp { v1: rem, blocks: idx.iter().map(|&j| pts[j].clone()).collect() });
        }
        // odometer, slowest digit first
        for k in 0..m {
            idx[k] += 1;
            if idx[k] < pts.len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    out.sort();
    Ok(out)
}

/// Wall-crossing type: `𝒦` across `a_i = 0`, `ℛ` across `a₁ ± a₂ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Crossing {
    K,
    R,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    /// Linear form `n₁a₁ + n₂a₂`.
    pub normal: (i64, i64),
    pub kind: Crossing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber2 {
    /// Sign of each wall's linear form on the chamber.
    pub signs: Vec<i8>,
    pub representative: (i64, i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank2Chambers {
    pub walls: Vec<Wall>,
    pub chambers: Vec<Chamber2>,
}

impl Rank2Chambers {
    pub fn chamber_of(&self, pt: (i64, i64)) -> Option<usize> {
        let s = signs_at(&self.walls, pt)?;
        self.chambers.iter().position(|c| c.signs == s)
    }

    /// Index of the single wall separating two chambers, if adjacent.
    pub fn separating_wall(&self, c1: usize, c2: usize) -> Option<usize> {
        let (s1, s2) = (&self.chambers[c1].signs, &self.chambers[c2].signs);
        let diff: Vec<usize> = (0..s1.len()).filter(|&k| s1[k] != s2[k]).collect();
        if diff.len() == 1 {
            Some(diff[0])
        } else {
            None
        }
    }

    /// Shortest gallery `from → to` as the list of walls crossed (BFS over adjacency).
    pub fn gallery(&self, from: usize, to: usize) -> Vec<usize> {
        let n = self.chambers.len();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = alloc::collections::VecDeque::new();
        seen[from] = true;
        queue.push_back(from);
        while let Some(c) = queue.pop_front() {
            if c == to {
                break;
            }
            for d in 0..n {
                if let (false, Some(wall)) = (seen[d], self.separating_wall(c, d)) {
                    seen[d] = true;
                    prev[d] = Some((c, wall));
                    queue.push_back(d);
                }
            }
        }
        let mut walls = Vec::new();
        let mut c = to;
        while let Some((p, wall)) = prev[c] {
            walls.push(wall);
            c = p;
        }
        walls.reverse();
        walls
    }

    pub fn crossing_counts(&self, gallery: &[usize]) -> (usize, usize) {
        let k = gallery.iter().filter(|&&w| self.walls[w].kind == Crossing::K).count();
        (k, gallery.len() - k)
    }
}

fn signs_at(walls: &[Wall], (x, y): (i64, i64)) -> Option<Vec<i8>> {
    let mut s = Vec::with_capacity(walls.len());
    for w in walls {
        let val = w.normal.0 * x + w.normal.1 * y;
        if val == 0 {
            return None;
        }
        s.push(if val > 0 { 1 } else { -1 });
    }
    Some(s)
}

/// The lines `a₁ = 0`, `a₂ = 0`, `a₁ − a₂ = 0`, `a₁ + a₂ = 0` and the chambers they cut out,
/// found by scanning integer points off the walls.
pub fn rank2_chambers() -> Rank2Chambers {
    let walls = vec![
        Wall { normal: (1, 0), kind: Crossing::K },
        Wall { normal: (0, 1), kind: Crossing::K },
        Wall { normal: (1, -1), kind: Crossing::R },
        Wall { normal: (1, 1), kind: Crossing::R },
    ];
    let mut chambers: Vec<Chamber2> = Vec::new();
    for x in -3..=3 {
        for y in -3..=3 {
            if let Some(signs) = signs_at(&walls, (x, y)) {
                if !chambers.iter().any(|c| c.signs == signs) {
                    chambers.push(Chamber2 { signs, representative: (x, y) });
                }
            }
        }
    }
    Rank2Chambers { walls, chambers }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_two_components() {
        let g = Graph::type_a(1);
        let (w0, _) = g.longest_element().unwrap();
        let a = g.identity_auto();
        let got = enumerate_models(&g, &a, &w0, &[1], &[0], &[1]).unwrap();
        let v2: Vec<_> = got.iter().map(|d| (d.v1[0], d.v2()[0])).collect();
        assert_eq!(v2, vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn chamber_counts() {
        let c = rank2_chambers();
        assert_eq!(c.walls.len(), 4);
        assert_eq!(c.chambers.len(), 8);
        let from = c.chamber_of((2, 1)).unwrap();
        let to = c.chamber_of((-2, -1)).unwrap();
        assert_eq!(c.crossing_counts(&c.gallery(from, to)), (2, 2));
    }
}
