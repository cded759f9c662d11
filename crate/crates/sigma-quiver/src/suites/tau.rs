use sigma_quiver_core::forms::{random_gram, right_adjoint, FormedGrading};
use sigma_quiver_core::involutions::{tau, tau_hat, tau_inverse, InvolutionConfig, Mode};
use sigma_quiver_core::rational::{rng_from_seed, Rng};
use sigma_quiver_core::rep::same_orbit;
use sigma_quiver_core::{Graph, QMatrix, RepPoint, Result};

use crate::report::{Caps, Recorder, SuiteReport};

pub(crate) struct TauFixture {
    pub name: &'static str,
    pub graph: Graph,
    pub v: Vec<i64>,
    pub w: Vec<i64>,
    /// Γ-alternating signs on `V`, and signs on `W`.
    pub delta_v: Vec<i8>,
    pub delta_w: Vec<i8>,
}

pub(crate) fn fixtures() -> Vec<TauFixture> {
    vec![
        TauFixture { name: "A1", graph: Graph::type_a(1), v: vec![2], w: vec![2], delta_v: vec![1], delta_w: vec![-1] },
        TauFixture { name: "A2", graph: Graph::type_a(2), v: vec![1, 2], w: vec![2, 1], delta_v: vec![1, -1], delta_w: vec![-1, 1] },
        TauFixture { name: "A3", graph: Graph::type_a(3), v: vec![1, 2, 1], w: vec![1, 0, 1], delta_v: vec![1, -1, 1], delta_w: vec![1, 1, 1] },
    ]
}

pub(crate) fn random_forms(dims: &[i64], delta: &[i8], rng: &mut Rng) -> Result<FormedGrading> {
    FormedGrading::new(dims.iter().zip(delta).map(|(&d, &s)| random_gram(d as usize, s, rng)).collect(), Some(delta.to_vec()))
}

fn mu_adjoint(pt: &RepPoint, fv: &FormedGrading) -> Result<Vec<QMatrix>> {
    pt.moment_map().iter().enumerate().map(|(i, m)| right_adjoint(m, fv.gram(i), fv.gram(i))).collect()
}

fn battery(f: &TauFixture, rng: &mut Rng, rec: &mut Recorder, samples: usize) -> Result<()> {
    let n = f.graph.num_vertices();
    let fv = random_forms(&f.v, &f.delta_v, rng)?;
    let fw = random_forms(&f.w, &f.delta_w, rng)?;
    let cfg = InvolutionConfig::new(fv.clone(), fw.clone(), Mode::Tau);
    let uni_v = random_forms(&f.v, &vec![1; n], rng)?;
    let uni_w = random_forms(&f.w, &vec![1; n], rng)?;
    let hat = InvolutionConfig::new(uni_v.clone(), uni_w, Mode::TauHat);
    let fv2 = random_forms(&f.v, &f.delta_v, rng)?;
    let cfg2 = InvolutionConfig::new(fv2.clone(), fw.clone(), Mode::Tau);

    let (mut mu_t, mut mu_h, mut om_t, mut om_h, mut indep, mut indep_explicit, mut sq_t, mut sq_h, mut inv) = (0, 0, 0, 0, 0, 0, 0, 0, 0);
    for _ in 0..samples {
        let x = RepPoint::random(&f.graph, &f.v, &f.w, rng);
        let y = RepPoint::random(&f.graph, &f.v, &f.w, rng);
        let tx = tau(&x, &cfg)?;
        let hx = tau_hat(&x, &hat)?;
        let neg: Vec<QMatrix> = mu_adjoint(&x, &fv)?.iter().map(|m| m.neg()).collect();
        mu_t += (tx.moment_map() != neg) as usize;
        mu_h += (hx.moment_map() != mu_adjoint(&x, &uni_v)?) as usize;
        let w0 = x.symplectic_pair(&y)?;
        om_t += (tx.symplectic_pair(&tau(&y, &cfg)?)? != w0) as usize;
        om_h += (hx.symplectic_pair(&tau_hat(&y, &hat)?)? != -w0.clone()) as usize;
        // independence of the V-forms: by search, and against g_i = G′_i⁻¹ G_i
        let tx2 = tau(&x, &cfg2)?;
        indep += (!same_orbit(&tx, &tx2)) as usize;
        let g: Vec<QMatrix> = (0..n).map(|i| fv2.gram(i).inverse().expect("invertible").mul(fv.gram(i))).collect();
        indep_explicit += (tx.act_gv(&g)? != tx2) as usize;
        sq_t += (!same_orbit(&tau(&tx, &cfg)?, &x)) as usize;
        sq_h += (!same_orbit(&tau_hat(&hx, &hat)?, &x)) as usize;
        inv += (tau_inverse(&tx, &cfg)? != x) as usize;
    }
    let d = |bad: usize| format!("{bad} of {samples} samples fail");
    let name = f.name;
    rec.check(format!("{name} μ(τx) = −μ(x)*"), mu_t == 0, d(mu_t));
    rec.check(format!("{name} μ(τ̂x) = μ(x)*"), mu_h == 0, d(mu_h));
    rec.check(format!("{name} ω(τx, τy) = ω(x, y)"), om_t == 0, d(om_t));
    rec.check(format!("{name} ω(τ̂x, τ̂y) = −ω(x, y)"), om_h == 0, d(om_h));
    rec.check(format!("{name} τ independent of V-forms up to G_v (intertwiner)"), indep == 0, d(indep));
    rec.check(format!("{name} τ independent of V-forms up to G_v (explicit G′⁻¹G)"), indep_explicit == 0, d(indep_explicit));
    rec.check(format!("{name} τ² = 1 on orbits (Γ-alternating signs)"), sq_t == 0, d(sq_t));
    rec.check(format!("{name} τ̂² = 1 on orbits (uniform signs)"), sq_h == 0, d(sq_h));
    rec.check(format!("{name} τ⁻¹τ = 1"), inv == 0, d(inv));
    Ok(())
}

pub fn run(caps: &Caps, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("tau", seed);
    let mut rng = rng_from_seed(seed);
    let samples = (caps.samples / 4).max(3);
    for f in fixtures().iter().filter(|f| f.graph.num_vertices() <= caps.max_rank) {
        if let Err(e) = battery(f, &mut rng, &mut rec, samples) {
            rec.check(format!("{} battery", f.name), false, format!("error: {e}"));
        }
    }
    rec.finish()
}
