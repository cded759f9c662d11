use sigma_quiver_core::forms::FormedGrading;
use sigma_quiver_core::involutions::{diagram_apply, tau, InvolutionConfig, Mode};
use sigma_quiver_core::rational::{q, rng_from_seed, Rng};
use sigma_quiver_core::reflection::{apply_auto_param, reflect_point, reflect_word};
use sigma_quiver_core::rep::{random_lambda_point, random_stable_point, same_orbit, Chamber};
use sigma_quiver_core::{Graph, Parameter, RepPoint, Result};

use crate::report::{Caps, Recorder, SuiteReport};

struct Fixture {
    name: &'static str,
    graph: Graph,
    v: Vec<i64>,
    w: Vec<i64>,
    zeta: Parameter,
}

fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture { name: "A1", graph: Graph::type_a(1), v: vec![1], w: vec![2], zeta: Parameter::new(vec![1], vec![q(1)]) },
        Fixture { name: "A2", graph: Graph::type_a(2), v: vec![1, 1], w: vec![2, 1], zeta: Parameter::new(vec![1, 1], vec![q(2), q(3)]) },
        Fixture { name: "A3", graph: Graph::type_a(3), v: vec![1, 2, 1], w: vec![1, 1, 1], zeta: Parameter::new(vec![1, -1, 1], vec![q(1), q(2), q(-1)]) },
    ]
}

#[derive(Default)]
struct Tally {
    runs: usize,
    cert: usize,
    dims: usize,
    square: usize,
    tau: usize,
    auto: usize,
    first: Option<String>,
}

impl Tally {
    fn note(&mut self, msg: String) {
        self.first.get_or_insert(msg);
    }

    fn detail(&self, bad: usize) -> String {
        format!("{bad} of {} reflections fail{}", self.runs, self.first.as_ref().map(|s| format!("; first: {s}")).unwrap_or_default())
    }
}

/// Forms with identity Gram matrices, so `τ` is defined on every dimension vector.
fn identity_cfg(pt: &RepPoint) -> InvolutionConfig {
    InvolutionConfig::new(FormedGrading::identity(&pt.v), FormedGrading::identity(&pt.w), Mode::Tau)
}

fn one_vertex(pt: &RepPoint, i: usize, zeta: &Parameter, t: &mut Tally) -> Result<()> {
    let g = &pt.graph;
    t.runs += 1;
    let r = reflect_point(pt, i, zeta)?;
    if !r.certificate.ok() {
        t.cert += 1;
        t.note(format!("certificate {:?} at vertex {i}", r.certificate));
    }
    if r.point.v != g.weyl_star(i, &pt.v, &pt.w)? {
        t.dims += 1;
        t.note(format!("dims {:?} at vertex {i}", r.point.v));
    }
    let back = reflect_point(&r.point, i, &r.parameter)?;
    if back.point.v != pt.v || !same_orbit(&back.point, pt) {
        t.square += 1;
        t.note(format!("S_{i}² not the identity on the orbit"));
    }
    // τ S_i = S_i τ, the right side at −ζ
    let lhs = tau(&r.point, &identity_cfg(&r.point))?;
    let rhs = reflect_point(&tau(pt, &identity_cfg(pt))?, i, &zeta.neg())?.point;
    if !same_orbit(&lhs, &rhs) {
        t.tau += 1;
        t.note(format!("τ S_{i} ≠ S_{i} τ"));
    }
    // a S_i = S_{a(i)} a for every diagram automorphism of a type A graph
    if let Some(a) = flip(g) {
        let lhs = diagram_apply(&a, &r.point)?;
        let rhs = reflect_point(&diagram_apply(&a, pt)?, a.vertex_perm[i], &apply_auto_param(&a, zeta))?.point;
        if !same_orbit(&lhs, &rhs) {
            t.auto += 1;
            t.note(format!("a S_{i} ≠ S_a(i) a"));
        }
    }
    Ok(())
}

fn flip(g: &Graph) -> Option<sigma_quiver_core::DiagramAuto> {
    let n = g.num_vertices();
    if n < 2 {
        return None;
    }
    g.auto_from_vertex_perm(&(0..n).rev().collect::<Vec<_>>()).ok()
}

fn battery(f: &Fixture, rng: &mut Rng, samples: usize, t: &mut Tally) -> Result<()> {
    for _ in 0..samples {
        let pt = random_lambda_point(&f.graph, &f.v, &f.w, &f.zeta.zeta_c, rng)?;
        for i in 0..f.graph.num_vertices() {
            one_vertex(&pt, i, &f.zeta, t)?;
        }
    }
    Ok(())
}

/// Stable points with `ζ_ℂ = 0`, so both branches of `S_i` are exercised.
fn real_battery(rng: &mut Rng, samples: usize, t: &mut Tally) -> Result<()> {
    let g = Graph::type_a(2);
    let zero = vec![q(0); 2];
    for _ in 0..samples {
        let pt = random_stable_point(&g, &[1, 1], &[2, 0], &zero, Chamber::Negative, rng)?;
        for i in 0..2 {
            one_vertex(&pt, i, &Parameter::real(vec![-1, -1]), t)?;
        }
    }
    Ok(())
}

fn braid(rng: &mut Rng, samples: usize) -> Result<(usize, Option<String>)> {
    let g = Graph::type_a(2);
    let mut bad = 0;
    let mut first = None;
    let cases = [
        (vec![1, 1], vec![2, 0], Parameter::real(vec![-1, -1]), true),
        (vec![1, 1], vec![2, 1], Parameter::new(vec![1, 1], vec![q(2), q(3)]), false),
    ];
    for (v, w, zeta, stable) in &cases {
        for _ in 0..samples {
            let pt = if *stable {
                random_stable_point(&g, v, w, &zeta.zeta_c, Chamber::Negative, rng)?
            } else {
                random_lambda_point(&g, v, w, &zeta.zeta_c, rng)?
            };
            let (l, pl) = reflect_word(&pt, &[0, 1, 0], zeta)?;
            let (r, pr) = reflect_word(&pt, &[1, 0, 1], zeta)?;
            if pl != pr || !same_orbit(&l, &r) {
                bad += 1;
                first.get_or_insert(format!("v = {v:?}, w = {w:?}"));
            }
        }
    }
    Ok((bad, first))
}

pub fn run(caps: &Caps, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("reflection", seed);
    let mut rng = rng_from_seed(seed);
    let samples = (caps.samples / 20).max(2);
    let mut t = Tally::default();
    let mut errors = Vec::new();
    for f in fixtures().iter().filter(|f| f.graph.num_vertices() <= caps.max_rank) {
        if let Err(e) = battery(f, &mut rng, samples, &mut t) {
            errors.push(format!("{}: {e}", f.name));
        }
    }
    if let Err(e) = real_battery(&mut rng, samples, &mut t) {
        errors.push(format!("A2 stable: {e}"));
    }
    let ok = |bad: usize| bad == 0 && errors.is_empty();
    let detail = |bad: usize| if errors.is_empty() { t.detail(bad) } else { format!("error: {}", errors.join("; ")) };
    rec.check("(R1)–(R4) certificates on every output", ok(t.cert), detail(t.cert));
    rec.check("output dimensions are s_i * v", ok(t.dims), detail(t.dims));
    rec.check("S_i² = 1 on orbits", ok(t.square), detail(t.square));
    rec.check("τ S_i = S_i τ on orbits", ok(t.tau), detail(t.tau));
    rec.check("a S_i = S_a(i) a on orbits", ok(t.auto), detail(t.auto));
    match braid(&mut rng, samples) {
        Ok((bad, first)) => rec.check("A2 braid S_0 S_1 S_0 = S_1 S_0 S_1 on orbits", bad == 0, first.unwrap_or_else(|| format!("{} samples", 2 * samples))),
        Err(e) => rec.check("A2 braid S_0 S_1 S_0 = S_1 S_0 S_1 on orbits", false, format!("error: {e}")),
    }
    rec.finish()
}
