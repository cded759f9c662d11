use sigma_quiver_core::forms::{random_gram, FormedGrading};
use sigma_quiver_core::involutions::{diagram_apply, tau, InvolutionConfig, Mode};
use sigma_quiver_core::lusztig::{act_gw, eval_from_point, lusztig_reflect, tau0, theta_a, zero_zeta, PathEval, RemovalSign};
use sigma_quiver_core::rational::{q, rng_from_seed, Rng};
use sigma_quiver_core::reflection::reflect_point;
use sigma_quiver_core::rep::{random_group_elem, random_lambda_point};
use sigma_quiver_core::{Graph, Parameter, Result, Q};

use crate::report::{Caps, Recorder, SuiteReport};

const DEPTH: usize = 5;
const CHECK_LEN: usize = 3;

struct Tally {
    bad: usize,
    total: usize,
    first: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { bad: 0, total: 0, first: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.bad += 1;
            self.first.get_or_insert_with(what);
        }
    }

    fn relations(&mut self, pe: &PathEval, what: &str) {
        let r = pe.check_relations(CHECK_LEN);
        self.record(r.is_none(), || format!("{what}: relation fails at {r:?}"));
    }

    fn detail(&self) -> String {
        format!("{} of {} fail{}", self.bad, self.total, self.first.as_ref().map(|s| format!("; first: {s}")).unwrap_or_default())
    }
}

fn uniform_forms(dims: &[i64], rng: &mut Rng) -> Result<FormedGrading> {
    FormedGrading::new(dims.iter().map(|&d| random_gram(d as usize, 1, rng)).collect(), Some(vec![1; dims.len()]))
}

struct Tallies {
    relations: Tally,
    zero: Tally,
    compat: Tally,
    tau: Tally,
    auto: Tally,
    gw: Tally,
}

fn battery(g: &Graph, v: &[i64], w: &[i64], zeta: &[Q], rng: &mut Rng, t: &mut Tallies) -> Result<()> {
    let n = g.num_vertices();
    let pt = random_lambda_point(g, v, w, zeta, rng)?;
    let pe = eval_from_point(&pt, zeta, DEPTH)?;
    t.relations.relations(&pe, "π′(x)");

    let fw = uniform_forms(w, rng)?;
    let t0 = tau0(&pe, &fw)?;
    t.relations.relations(&t0, "τ₀");
    // the point-level τ induces τ₀ on tables
    let cfg = InvolutionConfig::new(uniform_forms(v, rng)?, fw.clone(), Mode::Tau);
    let neg: Vec<Q> = zeta.iter().map(|z| -z).collect();
    let lhs = eval_from_point(&tau(&pt, &cfg)?, &neg, DEPTH)?;
    t.tau.record(lhs == t0, || format!("π′(τx) ≠ τ₀π′(x) for v = {v:?}"));

    if n >= 2 {
        let a = g.auto_from_vertex_perm(&(0..n).rev().collect::<Vec<_>>())?;
        let th = theta_a(&pe, &a)?;
        t.relations.relations(&th, "Θ_a");
        // ϑ(a⁻¹ x) = Θ_a ϑ(x)
        let ai = a.inverse();
        let moved = eval_from_point(&diagram_apply(&ai, &pt)?, &ai.apply_q(zeta), DEPTH)?;
        t.auto.record(moved == th, || format!("π′(a⁻¹x) ≠ Θ_a π′(x) for v = {v:?}"));
    }

    let gw = random_group_elem(w, rng);
    let moved = act_gw(&pe, &gw)?;
    t.relations.relations(&moved, "G_w");
    let direct = eval_from_point(&pt.act_gw(&gw)?, zeta, DEPTH)?;
    t.gw.record(direct == moved, || format!("π′(g x) ≠ g π′(x) for v = {v:?}"));

    let par = Parameter::new(vec![1; n], zeta.to_vec());
    for i in 0..n {
        let s = lusztig_reflect(&pe, i, RemovalSign::Plus)?;
        t.relations.relations(&s, &format!("S_{i}"));
        if zeta[i] == q(0) {
            continue;
        }
        let r = reflect_point(&pt, i, &par)?;
        let lhs = eval_from_point(&r.point, &r.parameter.zeta_c, DEPTH)?;
        t.compat.record(lhs == s, || format!("π′(S_{i} x) ≠ S_{i} π′(x) for v = {v:?}"));
    }

    let pt0 = random_lambda_point(g, v, w, &zero_zeta(n), rng)?;
    let pe0 = eval_from_point(&pt0, &zero_zeta(n), DEPTH)?;
    for i in 0..n {
        let s = lusztig_reflect(&pe0, i, RemovalSign::Plus)?;
        t.zero.record(s == pe0, || format!("S_{i} ≠ 1 at ζ = 0 for v = {v:?}"));
    }
    Ok(())
}

pub fn run(caps: &Caps, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("zw", seed);
    let mut rng = rng_from_seed(seed);
    let samples = (caps.samples / 20).max(2);
    let mut t = Tallies { relations: Tally::new(), zero: Tally::new(), compat: Tally::new(), tau: Tally::new(), auto: Tally::new(), gw: Tally::new() };
    let cases: Vec<(Graph, Vec<i64>, Vec<i64>, Vec<Q>)> = vec![
        (Graph::type_a(2), vec![1, 1], vec![2, 1], vec![q(2), q(3)]),
        (Graph::type_a(2), vec![1, 2], vec![2, 2], vec![q(-1), q(1)]),
        (Graph::type_a(3), vec![1, 1, 1], vec![1, 0, 1], vec![q(1), q(2), q(-1)]),
    ];
    let mut errors = Vec::new();
    for (g, v, w, z) in cases.iter().filter(|c| c.0.num_vertices() <= caps.max_rank) {
        for _ in 0..samples {
            if let Err(e) = battery(g, v, w, z, &mut rng, &mut t) {
                errors.push(format!("v = {v:?}: {e}"));
                break;
            }
        }
    }
    let mut put = |name: &str, t: &Tally| {
        let ok = t.bad == 0 && t.total > 0 && errors.is_empty();
        let detail = if errors.is_empty() { t.detail() } else { format!("error: {}", errors.join("; ")) };
        rec.check(name, ok, detail);
    };
    put("defining relations after every transform", &t.relations);
    put("Lusztig S_i is the identity at ζ = 0", &t.zero);
    put("point-level S_i matches Lusztig S_i (ζ_ℂ^(i) ≠ 0)", &t.compat);
    put("point-level τ matches τ₀", &t.tau);
    put("Θ_a matches the diagram action on points", &t.auto);
    put("G_w action matches on points", &t.gw);
    rec.finish()
}
