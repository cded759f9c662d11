use sigma_quiver_core::kmatrix::{
    check_reflection_equation, check_unitary, check_yang_baxter, doubled_dim, entry, fusion, is_identity_at_hbar_zero, k_example,
    s_reflection_sides_oriented, yang_r, Orientation, RFMatrix,
};
use sigma_quiver_core::poly::{a_var, Poly, HBAR, U, V, W};
use sigma_quiver_core::Q;

use crate::report::{Caps, Recorder, SuiteReport};

fn var(i: usize) -> Poly {
    Poly::var(i)
}

fn r2(x: &Poly) -> RFMatrix {
    yang_r(x, 2)
}

/// `𝒦₁(a)` evaluated entrywise against `a/(a−ħ)` and `−ħ/(a−ħ)` at a few rational points.
fn entries_match() -> (bool, String) {
    let a = a_var(1);
    let k = k_example(&var(a));
    let nv = a + 1;
    let mut bad = None;
    for (av, hv) in [(3, 1), (5, -2), (-7, 4), (11, 13)] {
        let mut pt = vec![Q::from_integer(0.into()); nv];
        pt[a] = Q::from_integer(av.into());
        pt[HBAR] = Q::from_integer(hv.into());
        let den = Q::from_integer((av - hv).into());
        let diag = Q::from_integer(av.into()) / den.clone();
        let off = Q::from_integer((-hv).into()) / den;
        let want = [[&diag, &off], [&off, &diag]];
        for r in 0..2 {
            for c in 0..2 {
                if entry(&k, r, c).eval(&pt).as_ref() != Some(want[r][c]) {
                    bad.get_or_insert(format!("entry ({r}, {c}) at a = {av}, ħ = {hv}"));
                }
            }
        }
    }
    let detail = bad.clone().unwrap_or_else(|| format!("𝒦₁(a) = [[{}, {}], [{}, {}]]", entry(&k, 0, 0), entry(&k, 0, 1), entry(&k, 1, 0), entry(&k, 1, 1)));
    (bad.is_none(), detail)
}

pub fn run(_caps: &Caps, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("kmatrix", seed);
    let (a1, a2) = (var(a_var(1)), var(a_var(2)));
    let (ok, detail) = entries_match();
    rec.check("𝒦₁(a) = (aI − ħX)/(a − ħ) entrywise", ok, detail);
    rec.check_result("𝒦₁(a)𝒦₁(−a) = I", check_unitary(&k_example(&a1), &k_example(&a1.neg())), "");
    rec.check_result("ℛ(u)ℛ(−u) = I", check_unitary(&r2(&var(U)), &r2(&var(U).neg())), "");
    rec.check("𝒦₁ and ℛ are the identity at ħ = 0", is_identity_at_hbar_zero(&k_example(&a1)) && is_identity_at_hbar_zero(&r2(&var(U))), "");
    rec.check_result("Yang–Baxter for ℛ", check_yang_baxter(&r2, &var(U), &var(V), &var(W), 2), "");

    let (k1, k2) = (k_example(&a1), k_example(&a2));
    let (r_sum, r_diff, r_rev) = (r2(&a1.add(&a2)), r2(&a1.sub(&a2)), r2(&a2.sub(&a1)));
    rec.check_result(
        "reflection equation 𝒦₂ℛ(a₁+a₂)𝒦₁ℛ(a₁−a₂) = ℛ(a₁−a₂)𝒦₁ℛ(a₁+a₂)𝒦₂",
        check_reflection_equation(&k1, &k2, &r_sum, &r_diff),
        "exact over ℚ(a₁, a₂, ħ)",
    );
    match fusion(&k1, &k2, &r_sum, &r_rev) {
        Ok(f) => rec.check("fusion: ℛ(a₂−a₁)𝒦₂ℛ(a₁+a₂)𝒦₁ = 𝒦₁ℛ(a₁+a₂)𝒦₂ℛ(a₂−a₁)", f.agree, "exact over ℚ(a₁, a₂, ħ)"),
        Err(e) => rec.check("fusion: ℛ(a₂−a₁)𝒦₂ℛ(a₁+a₂)𝒦₁ = 𝒦₁ℛ(a₁+a₂)𝒦₂ℛ(a₂−a₁)", false, format!("error: {e}")),
    }
    let name = format!("𝒮 reflection equation with one spectator ({}-dimensional)", doubled_dim(2, 1));
    let spectators = [var(a_var(3))];
    match s_reflection_sides_oriented(&k_example, &r2, &var(U), &var(V), &spectators, Orientation::Literal) {
        Ok((l, r)) => rec.check(name, l.equals(&r), "exact over ℚ(u, v, b, ħ)"),
        Err(e) => rec.check(name, false, format!("error: {e}")),
    }

    // The reversed orientation, reported alongside for reference.
    rec.check_result(
        "reference: reflection equation with ℛ(a₂−a₁) outside",
        check_reflection_equation(&k1, &k2, &r_sum, &r_rev),
        "",
    );
    rec.finish()
}
