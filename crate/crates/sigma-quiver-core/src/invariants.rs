//! Invariant functions `tr(x_{h_s}⋯x_{h₁})` and `χ(q x⋯x p)` and their invariance under
//! sampled isometries of `V` on τ-fixed points.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forms::{random_invertible, sample_isometry};
use crate::involutions::{self, InvolutionConfig};
use crate::lusztig::{enumerate_paths, Path};
use crate::matrix::QMatrix;
use crate::rational::rng_from_seed;
use crate::rep::RepPoint;
use crate::Q;

/// `x_{h_s} ⋯ x_{h₁} : V_{o(f)} → V_{i(f)}`.
pub fn path_map(pt: &RepPoint, f: &Path) -> Result<QMatrix> {
    f.validate(&pt.graph)?;
    let mut m = QMatrix::identity(pt.v[f.source()] as usize);
    for &h in &f.arrows {
        m = pt.x[h].mul(&m);
    }
    Ok(m)
}

pub fn trace_cycle(pt: &RepPoint, cycle: &Path) -> Result<Q> {
    if cycle.target(&pt.graph) != cycle.source() {
        return Err(Error::Path(format!("path from {} to {} is not closed", cycle.source(), cycle.target(&pt.graph))));
    }
    Ok(path_map(pt, cycle)?.trace())
}

/// `q_{i(f)} x_{h_s} ⋯ x_{h₁} p_{o(f)} : W_{o(f)} → W_{i(f)}`.
pub fn path_composite(pt: &RepPoint, f: &Path) -> Result<QMatrix> {
    let i = f.target(&pt.graph);
    Ok(pt.q[i].mul(&path_map(pt, f)?).mul(&pt.p[f.source()]))
}

/// `χ(M) = Σ_{ab} χ_{ab} M_{ab}` on the composite.
pub fn chi_path(pt: &RepPoint, f: &Path, chi: &QMatrix) -> Result<Q> {
    let m = path_composite(pt, f)?;
    if m.shape() != chi.shape() {
        return Err(Error::Shape(format!("χ is {:?}, composite is {:?}", chi.shape(), m.shape())));
    }
    Ok(chi.transpose().mul(&m).trace())
}

/// Closed paths of length `1..=max_len`.
pub fn cycles(pt: &RepPoint, max_len: usize) -> Vec<Path> {
    enumerate_paths(&pt.graph, max_len)
        .into_iter()
        .filter(|f| !f.is_empty() && f.target(&pt.graph) == f.source())
        .collect()
}

/// Generator values: traces of cycles, then every entry of every composite (each entry is
/// `χ` for a matrix unit).
pub fn generator_values(pt: &RepPoint, max_len: usize) -> Result<Vec<Q>> {
    let mut out = Vec::new();
    for c in cycles(pt, max_len) {
        out.push(trace_cycle(pt, &c)?);
    }
    for f in enumerate_paths(&pt.graph, max_len) {
        out.extend(path_composite(pt, &f)?.data().iter().cloned());
    }
    Ok(out)
}

#[derive(Clone, Debug, Default)]
pub struct InvarianceReport {
    pub samples: usize,
    pub generators: usize,
    pub violations: Vec<String>,
    /// A random `g ∈ G_w` changed some `χ` value.
    pub control_gw_detected: bool,
    /// A random non-isometric `g ∈ G_v` moved the point off the fixed locus.
    pub control_off_fixed_detected: bool,
}

impl InvarianceReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.control_gw_detected && self.control_off_fixed_detected
    }
}

/// Samples `num_samples` isometries `g ∈ G_v^τ` (Cayley transforms for `cfg.forms_v`) and checks
/// that every generator up to `max_len` is unchanged and `g·x` stays fixed by the involution.
/// `pt` must itself be fixed.
pub fn check_invariance(pt: &RepPoint, cfg: &InvolutionConfig, max_len: usize, num_samples: usize, seed: u64) -> Result<InvarianceReport> {
    if involutions::apply(pt, cfg)? != *pt {
        return Err(Error::Compatibility("point is not fixed by the involution".into()));
    }
    let mut rng = rng_from_seed(seed);
    let base = generator_values(pt, max_len)?;
    let mut rep = InvarianceReport { generators: base.len(), ..Default::default() };
    let n = pt.graph.num_vertices();
    for s in 0..num_samples {
        let g: Vec<QMatrix> = (0..n).map(|i| sample_isometry(cfg.forms_v.gram(i), &mut rng)).collect::<Result<_>>()?;
        let moved = pt.act_gv(&g)?;
        if involutions::apply(&moved, cfg)? != moved {
            rep.violations.push(format!("sample {s}: g·x left the fixed locus"));
        }
        let vals = generator_values(&moved, max_len)?;
        if let Some(k) = (0..vals.len()).find(|&k| vals[k] != base[k]) {
            rep.violations.push(format!("sample {s}: generator {k} changed"));
        }
        rep.samples += 1;
    }
    for _ in 0..8 {
        let f: Vec<QMatrix> = pt.w.iter().map(|&d| random_invertible(d as usize, &mut rng)).collect();
        if generator_values(&pt.act_gw(&f)?, max_len)? != base {
            rep.control_gw_detected = true;
            break;
        }
    }
    for _ in 0..8 {
        let g: Vec<QMatrix> = pt.v.iter().map(|&d| random_invertible(d as usize, &mut rng)).collect();
        let moved = pt.act_gv(&g)?;
        if involutions::apply(&moved, cfg)? != moved {
            rep.control_off_fixed_detected = true;
            break;
        }
    }
    Ok(rep)
}
