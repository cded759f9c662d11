use sigma_quiver_core::forms::{left_adjoint, random_gram, random_invertible, right_adjoint};
use sigma_quiver_core::rational::{q, rand_below, rng_from_seed, Rng};
use sigma_quiver_core::{QMatrix, Result};

use crate::report::{Caps, Recorder, SuiteReport};

fn signed_space(rng: &mut Rng, max_dim: usize) -> (usize, i8, QMatrix) {
    let delta: i8 = if rand_below(rng, 2) == 0 { 1 } else { -1 };
    let mut d = rand_below(rng, max_dim + 1);
    if delta == -1 && d % 2 == 1 {
        d += 1;
    }
    (d, delta, random_gram(d, delta, rng))
}

struct Tally {
    composition: usize,
    double: usize,
    round_trip: usize,
    first: Option<String>,
}

fn one_instance(rng: &mut Rng, max_dim: usize, k: usize, t: &mut Tally) -> Result<()> {
    let (du, su, gu) = signed_space(rng, max_dim);
    let (dv, sv, gv) = signed_space(rng, max_dim);
    let (dw, _, gw) = signed_space(rng, max_dim);
    let a = QMatrix::random(dv, du, rng, 4);
    let b = QMatrix::random(dw, dv, rng, 4);
    let lhs = right_adjoint(&b.mul(&a), &gu, &gw)?;
    let rhs = right_adjoint(&a, &gu, &gv)?.mul(&right_adjoint(&b, &gv, &gw)?);
    if lhs != rhs {
        t.composition += 1;
        t.first.get_or_insert(format!("instance {k}: (T′T)* ≠ T*T′*"));
    }
    let twice = right_adjoint(&right_adjoint(&a, &gu, &gv)?, &gv, &gu)?;
    if twice != a.scale(&q((su * sv) as i64)) {
        t.double += 1;
        t.first.get_or_insert(format!("instance {k}: (T*)* ≠ δδ′T"));
    }
    // round trips also with forms that are neither symmetric nor skew
    let hu = random_invertible(du, rng);
    let hv = random_invertible(dv, rng);
    for (x, y) in [(&gu, &gv), (&hu, &hv)] {
        let r = right_adjoint(&a, x, y)?;
        let l = left_adjoint(&a, x, y)?;
        if left_adjoint(&r, y, x)? != a || right_adjoint(&l, y, x)? != a {
            t.round_trip += 1;
            t.first.get_or_insert(format!("instance {k}: adjoint round trip"));
        }
    }
    Ok(())
}

pub fn run(caps: &Caps, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("adjoint", seed);
    let mut rng = rng_from_seed(seed);
    let n = 5 * caps.samples;
    let mut t = Tally { composition: 0, double: 0, round_trip: 0, first: None };
    let mut errors = 0;
    for k in 0..n {
        if let Err(e) = one_instance(&mut rng, caps.max_dim as usize, k, &mut t) {
            errors += 1;
            t.first.get_or_insert(format!("instance {k}: {e}"));
        }
    }
    let detail = |bad: usize| format!("{} of {n} instances fail{}", bad + errors, t.first.as_ref().map(|s| format!("; first: {s}")).unwrap_or_default());
    rec.check("(T′T)* = T*T′*", t.composition + errors == 0, detail(t.composition));
    rec.check("(T*)* = δδ′T", t.double + errors == 0, detail(t.double));
    rec.check("left/right adjoint round trips", t.round_trip + errors == 0, detail(t.round_trip));
    rec.finish()
}
