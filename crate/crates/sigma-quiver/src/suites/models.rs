use sigma_quiver_core::graph::DiagramAuto;
use sigma_quiver_core::torus::{box_points, brute_force_models, enumerate_models, enumerate_models_multi, rank2_chambers, Crossing};
use sigma_quiver_core::{Graph, Result};

use crate::report::{Caps, Recorder, SuiteReport};

fn a1_case(rec: &mut Recorder) {
    let g = Graph::type_a(1);
    let r = g.longest_element().and_then(|(w0, _)| enumerate_models(&g, &g.identity_auto(), &w0, &[1], &[0], &[1]));
    match r {
        Ok(d) => {
            let list: Vec<String> = d.iter().map(|m| format!("v¹ = {:?}, v² = {:?}", m.v1, m.v2())).collect();
            rec.check("A1 with v = 1, w² = 1: exactly 2 decompositions", d.len() == 2, list.join("; "));
        }
        Err(e) => rec.check("A1 with v = 1, w² = 1: exactly 2 decompositions", false, format!("error: {e}")),
    }
}

fn autos(g: &Graph) -> Vec<(&'static str, DiagramAuto)> {
    let n = g.num_vertices();
    let mut out = vec![("1", g.identity_auto())];
    if n >= 2 {
        if let Ok(a) = g.auto_from_vertex_perm(&(0..n).rev().collect::<Vec<_>>()) {
            out.push(("flip", a));
        }
    }
    out
}

struct Scan {
    cases: usize,
    decomps: usize,
    first: Option<String>,
}

fn compare(g: &Graph, a: &DiagramAuto, omega: &[usize], v: &[i64], w1: &[i64], ws: &[Vec<i64>], s: &mut Scan) -> Result<()> {
    let mut fast = match enumerate_models_multi(g, a, omega, v, w1, ws) {
        Ok(f) => f,
        Err(sigma_quiver_core::Error::InvalidAuto(_)) => return Ok(()),
        Err(e) => return Err(e),
    };
    fast.sort();
    let slow = brute_force_models(g, a, omega, v, w1, ws)?;
    s.cases += 1;
    s.decomps += fast.len();
    if fast != slow {
        s.first.get_or_insert(format!("v = {v:?}, w¹ = {w1:?}, blocks {ws:?}: {} vs {}", fast.len(), slow.len()));
    }
    Ok(())
}

fn grid(caps: &Caps) -> Result<Scan> {
    let mut s = Scan { cases: 0, decomps: 0, first: None };
    for n in 1..=caps.max_rank.min(3) {
        let g = Graph::type_a(n);
        let (w0, _) = g.longest_element()?;
        let vb = if n <= 2 { 3 } else { 2 };
        for (_, a) in autos(&g) {
            for omega in [w0.clone(), vec![]] {
                for v in box_points(&vec![vb; n]) {
                    for w1 in box_points(&vec![1; n]) {
                        for w2 in box_points(&vec![1; n]) {
                            compare(&g, &a, &omega, &v, &w1, &[w2], &mut s)?;
                        }
                    }
                }
            }
        }
        // two blocks on a smaller box
        for v in box_points(&vec![2; n]) {
            for w2 in box_points(&vec![1; n]) {
                for w3 in box_points(&vec![1; n]) {
                    compare(&g, &g.identity_auto(), &w0, &v, &vec![0; n], &[w2.clone(), w3], &mut s)?;
                }
            }
        }
    }
    Ok(s)
}

pub fn run(caps: &Caps, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("models", seed);
    a1_case(&mut rec);
    match grid(caps) {
        Ok(s) => rec.check(
            "enumeration agrees with the brute-force scan (n ≤ 3)",
            s.first.is_none() && s.cases > 0,
            s.first.unwrap_or_else(|| format!("{} cases, {} decompositions", s.cases, s.decomps)),
        ),
        Err(e) => rec.check("enumeration agrees with the brute-force scan (n ≤ 3)", false, format!("error: {e}")),
    }
    let c = rank2_chambers();
    let k = c.walls.iter().filter(|w| w.kind == Crossing::K).count();
    rec.check("rank 2: 8 chambers and 4 walls", c.chambers.len() == 8 && c.walls.len() == 4, format!("{} chambers, {} walls ({k} of type 𝒦)", c.chambers.len(), c.walls.len()));
    let r = (|| {
        let from = c.chamber_of((2, 1))?;
        let to = c.chamber_of((-2, -1))?;
        Some(c.crossing_counts(&c.gallery(from, to)))
    })();
    rec.check("rank 2: the gallery to the opposite chamber crosses 2 𝒦 and 2 ℛ walls", r == Some((2, 2)), format!("{r:?}"));
    rec.finish()
}
