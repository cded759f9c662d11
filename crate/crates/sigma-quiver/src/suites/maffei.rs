use sigma_quiver_core::forms::{jordan_type, random_gram, FormedGrading};
use sigma_quiver_core::involutions::Mode;
use sigma_quiver_core::lusztig::zero_zeta;
use sigma_quiver_core::maffei::{check_x_natural, is_transversal, phi_commutes, phi_embed, slice_labels};
use sigma_quiver_core::partitions::Partition;
use sigma_quiver_core::rational::{rng_from_seed, Rng};
use sigma_quiver_core::rep::random_lambda_point;
use sigma_quiver_core::{Graph, RepPoint, Result};

use crate::report::{Caps, Recorder, SuiteReport};

/// `(v, w, λ)` for the Jordan type check at `Φ(0)`.
pub(crate) fn jordan_fixtures() -> Vec<(Vec<i64>, Vec<i64>, Partition)> {
    vec![
        (vec![1, 2, 2, 3, 2, 1], vec![0, 1, 0, 1, 0, 0], Partition::new(vec![4, 2])),
        (vec![1, 1], vec![0, 1], Partition::new(vec![2])),
        (vec![1, 2, 1], vec![0, 1, 1], Partition::new(vec![3, 2])),
    ]
}

/// Small `(v, w)` on which random points are pushed through `Φ`.
fn sample_shapes() -> Vec<(Vec<i64>, Vec<i64>)> {
    vec![(vec![1, 1], vec![0, 1]), (vec![1, 1], vec![1, 1]), (vec![1, 2, 1], vec![0, 1, 1]), (vec![2, 2, 1], vec![1, 0, 1]), (vec![1, 1, 1], vec![0, 0, 2])]
}

fn forms(dims: &[i64], rng: &mut Rng) -> Result<FormedGrading> {
    FormedGrading::new(dims.iter().map(|&d| random_gram(d as usize, 1, rng)).collect(), Some(vec![1; dims.len()]))
}

#[derive(Default)]
struct Tally {
    total: usize,
    transversal: usize,
    moment: usize,
    natural: usize,
    tau: usize,
    tau_hat: usize,
    first: Option<String>,
}

fn sample(v: &[i64], w: &[i64], rng: &mut Rng, t: &mut Tally) -> Result<()> {
    let g = Graph::type_a(v.len());
    let pt = random_lambda_point(&g, v, w, &zero_zeta(v.len()), rng)?;
    let bp = phi_embed(&pt)?;
    t.total += 1;
    let fail = |slot: &mut usize, what: &str, first: &mut Option<String>| {
        *slot += 1;
        first.get_or_insert(format!("{what} at v = {v:?}, w = {w:?}"));
    };
    if !is_transversal(&bp).ok() {
        fail(&mut t.transversal, "transversality", &mut t.first);
    }
    if bp.moment_map().iter().any(|m| !m.is_zero()) {
        fail(&mut t.moment, "μ(Φ(x)) ≠ 0", &mut t.first);
    }
    let (fv, fw) = (forms(v, rng)?, forms(w, rng)?);
    let bad = check_x_natural(&bp, &fv, &fw)?;
    if !bad.is_empty() {
        fail(&mut t.natural, &format!("adjoint table {bad:?}"), &mut t.first);
    }
    if !phi_commutes(&pt, &fv, &fw, Mode::Tau)? {
        fail(&mut t.tau, "Φτ ≠ τ̃Φ", &mut t.first);
    }
    if !phi_commutes(&pt, &fv, &fw, Mode::TauHat)? {
        fail(&mut t.tau_hat, "Φτ̂ ≠ τ̂̃Φ", &mut t.first);
    }
    Ok(())
}

/// With `w` supported at the first vertex nothing is added and `Φ` is the identity.
fn identity_case(rng: &mut Rng) -> Result<bool> {
    for (v, w) in [(vec![2, 1], vec![3, 0]), (vec![1, 1, 1], vec![2, 0, 0]), (vec![2], vec![4])] {
        let g = Graph::type_a(v.len());
        let pt: RepPoint = random_lambda_point(&g, &v, &w, &zero_zeta(v.len()), rng)?;
        if phi_embed(&pt)?.point != pt {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn run(caps: &Caps, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("maffei", seed);
    let mut rng = rng_from_seed(seed);
    let samples = (caps.samples / 25).max(2);
    let mut t = Tally::default();
    let mut errors = Vec::new();
    for (v, w) in sample_shapes().iter().filter(|(v, _)| v.len() <= caps.max_rank) {
        for _ in 0..samples {
            if let Err(e) = sample(v, w, &mut rng, &mut t) {
                errors.push(format!("v = {v:?}, w = {w:?}: {e}"));
                break;
            }
        }
    }
    let detail = |bad: usize| {
        if errors.is_empty() {
            format!("{bad} of {} points fail{}", t.total, t.first.as_ref().map(|s| format!("; first: {s}")).unwrap_or_default())
        } else {
            format!("error: {}", errors.join("; "))
        }
    };
    let ok = |bad: usize| bad == 0 && errors.is_empty() && t.total > 0;
    rec.check("Φ(x) is transversal", ok(t.transversal), detail(t.transversal));
    rec.check("μ(Φ(x)) = 0", ok(t.moment), detail(t.moment));
    rec.check("adjoint table of Φ(x)", ok(t.natural), detail(t.natural));
    rec.check("Φτ = τ̃Φ", ok(t.tau), detail(t.tau));
    rec.check("Φτ̂ = τ̂̃Φ", ok(t.tau_hat), detail(t.tau_hat));
    rec.check_result("Φ = id for w at the first vertex", identity_case(&mut rng), "");

    for (v, w, lambda) in jordan_fixtures() {
        let name = format!("Jordan type of Φ(0) is {lambda} for v = {v:?}, w = {w:?}");
        let r = (|| -> Result<(Partition, Partition)> {
            let pt = RepPoint::zero(&Graph::type_a(v.len()), &v, &w);
            let jt = jordan_type(&phi_embed(&pt)?.flag_nilpotent())?;
            Ok((jt, slice_labels(&v, &w)?.lambda))
        })();
        match r {
            Ok((jt, l)) => rec.check(name, jt == lambda && l == lambda, format!("got {jt}, label λ = {l}")),
            Err(e) => rec.check(name, false, format!("error: {e}")),
        }
    }
    rec.finish()
}
