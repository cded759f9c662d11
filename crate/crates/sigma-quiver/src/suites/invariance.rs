use sigma_quiver_core::forms::{random_invertible, FormedGrading};
use sigma_quiver_core::invariants::{check_invariance, cycles, generator_values, trace_cycle};
use sigma_quiver_core::involutions::{self, InvolutionConfig, Mode};
use sigma_quiver_core::rational::{rng_from_seed, Rng};
use sigma_quiver_core::rep::random_fixed_point;
use sigma_quiver_core::{Graph, QMatrix, RepPoint, Result, Q};

use crate::report::{Caps, Recorder, SuiteReport};

const MAX_LEN: usize = 4;

struct Fixture {
    graph: Graph,
    v: Vec<i64>,
    w: Vec<i64>,
    delta_v: Vec<i8>,
    delta_w: Vec<i8>,
}

fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture { graph: Graph::type_a(1), v: vec![2], w: vec![2], delta_v: vec![-1], delta_w: vec![1] },
        Fixture { graph: Graph::type_a(2), v: vec![1, 2], w: vec![2, 1], delta_v: vec![1, -1], delta_w: vec![-1, 1] },
    ]
}

/// A τ-fixed point with at least one nonzero generator.
fn fixed_point(f: &Fixture, cfg: &InvolutionConfig, rng: &mut Rng) -> Result<RepPoint> {
    let template = RepPoint::zero(&f.graph, &f.v, &f.w);
    for _ in 0..16 {
        let pt = random_fixed_point(&template, |p| involutions::apply(p, cfg).expect("shapes match the template"), rng);
        if generator_values(&pt, MAX_LEN)?.iter().any(|x| *x != Q::from_integer(0.into())) {
            return Ok(pt);
        }
    }
    Err(sigma_quiver_core::Error::Compatibility("no τ-fixed point with a nonzero generator".into()))
}

struct Outcome {
    samples: usize,
    generators: usize,
    violations: Vec<String>,
    control_gw: bool,
    control_off: bool,
    full_gv_traces: bool,
}

fn one(f: &Fixture, samples: usize, seed: u64, rng: &mut Rng) -> Result<Outcome> {
    let cfg = InvolutionConfig::new(FormedGrading::canonical(&f.v, &f.delta_v)?, FormedGrading::canonical(&f.w, &f.delta_w)?, Mode::Tau);
    let pt = fixed_point(f, &cfg, rng)?;
    let rep = check_invariance(&pt, &cfg, MAX_LEN, samples, seed)?;
    // traces never see p or q, so they are invariant under all of G_v
    let g: Vec<QMatrix> = f.v.iter().map(|&d| random_invertible(d as usize, rng)).collect();
    let moved = pt.act_gv(&g)?;
    let mut full = true;
    for c in cycles(&pt, MAX_LEN) {
        full &= trace_cycle(&pt, &c)? == trace_cycle(&moved, &c)?;
    }
    Ok(Outcome {
        samples: rep.samples,
        generators: rep.generators,
        violations: rep.violations,
        control_gw: rep.control_gw_detected,
        control_off: rep.control_off_fixed_detected,
        full_gv_traces: full,
    })
}

pub fn run(caps: &Caps, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("invariance", seed);
    let mut rng = rng_from_seed(seed);
    let samples = caps.samples.min(100);
    for f in fixtures().iter().filter(|f| f.graph.num_vertices() <= caps.max_rank) {
        let tag = format!("A{} v = {:?}, w = {:?}", f.graph.num_vertices(), f.v, f.w);
        match one(f, samples, seed, &mut rng) {
            Ok(o) => {
                let detail = format!("{} generators, {} isometries{}", o.generators, o.samples, o.violations.first().map(|s| format!("; {s}")).unwrap_or_default());
                rec.check(format!("{tag}: generators invariant under sampled isometries"), o.violations.is_empty() && o.samples == samples, detail);
                rec.check(format!("{tag}: negative control, some g ∈ G_w changes a χ value"), o.control_gw, "");
                rec.check(format!("{tag}: negative control, a non-isometry leaves the fixed locus"), o.control_off, "");
                rec.check(format!("{tag}: traces invariant under all of G_v"), o.full_gv_traces, "");
            }
            Err(e) => rec.check(format!("{tag}: generators invariant under sampled isometries"), false, format!("error: {e}")),
        }
    }
    rec.finish()
}
