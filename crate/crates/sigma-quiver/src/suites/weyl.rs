use sigma_quiver_core::torus::box_points;
use sigma_quiver_core::{Graph, Result};

use crate::report::{Caps, Recorder, SuiteReport};

pub(crate) fn graphs(max_rank: usize) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = (1..=max_rank).map(|n| (format!("A{n}"), Graph::type_a(n))).collect();
    if max_rank >= 4 {
        out.push(("D4".into(), Graph::type_d(4)));
    }
    out
}

fn pairs_relation(c: &[Vec<i64>], i: usize, j: usize) -> Option<usize> {
    match c[i][j] {
        0 => Some(2),
        -1 => Some(3),
        _ => None,
    }
}

/// `(s_i s_j)^m` as a word.
fn braid_word(i: usize, j: usize, m: usize) -> (Vec<usize>, Vec<usize>) {
    let left: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
    let right: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
    (left, right)
}

fn star_battery(g: &Graph, v: &[i64], w: &[i64]) -> Result<Option<String>> {
    let n = g.num_vertices();
    let c = g.cartan_matrix();
    let cv: Vec<i64> = g.cartan_apply(v);
    for i in 0..n {
        let s = g.weyl_star(i, v, w)?;
        if g.weyl_star(i, &s, w)? != v {
            return Ok(Some(format!("s_{i} * s_{i} * {v:?} ≠ v (w = {w:?})")));
        }
        // C(s_i * v) = s_i(Cv − w) + w
        let lhs = g.cartan_apply(&s);
        let xi: Vec<i64> = cv.iter().zip(w).map(|(a, b)| a - b).collect();
        let rhs: Vec<i64> = g.weyl_reflect(i, &xi)?.iter().zip(w).map(|(a, b)| a + b).collect();
        if lhs != rhs {
            return Ok(Some(format!("C(s_{i} * v) identity fails at v = {v:?}, w = {w:?}")));
        }
        for j in i + 1..n {
            let Some(m) = pairs_relation(&c, i, j) else { continue };
            let (l, r) = braid_word(i, j, m);
            if g.weyl_star_word(&l, v, w)? != g.weyl_star_word(&r, v, w)? {
                return Ok(Some(format!("braid ({i},{j}) fails at v = {v:?}, w = {w:?}")));
            }
        }
    }
    Ok(None)
}

fn linear_battery(g: &Graph, xi: &[i64]) -> Result<Option<String>> {
    let n = g.num_vertices();
    let c = g.cartan_matrix();
    for i in 0..n {
        if g.weyl_reflect(i, &g.weyl_reflect(i, xi)?)? != xi {
            return Ok(Some(format!("s_{i}² ≠ 1 at {xi:?}")));
        }
        for j in i + 1..n {
            let Some(m) = pairs_relation(&c, i, j) else { continue };
            let (l, r) = braid_word(i, j, m);
            if g.weyl_reflect_word(&l, xi)? != g.weyl_reflect_word(&r, xi)? {
                return Ok(Some(format!("braid ({i},{j}) fails at ξ = {xi:?}")));
            }
        }
    }
    Ok(None)
}

pub fn run(caps: &Caps, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("weyl", seed);
    let d = caps.max_dim;
    for (name, g) in graphs(caps.max_rank) {
        let n = g.num_vertices();
        let box_ = box_points(&vec![d; n]);
        let mut star_fail = None;
        let mut count = 0usize;
        'outer: for v in &box_ {
            for w in &box_ {
                count += 1;
                match star_battery(&g, v, w) {
                    Ok(None) => {}
                    Ok(Some(msg)) => {
                        star_fail = Some(msg);
                        break 'outer;
                    }
                    Err(e) => {
                        star_fail = Some(format!("error: {e}"));
                        break 'outer;
                    }
                }
            }
        }
        rec.check(format!("{name} star action: involutive, braid, C(s*v) identity"), star_fail.is_none(), star_fail.unwrap_or_else(|| format!("{count} (v, w) pairs")));

        let shifted: Vec<Vec<i64>> = box_points(&vec![2 * d; n]).into_iter().map(|x| x.into_iter().map(|y| y - d).collect()).collect();
        let lin_fail = shifted.iter().find_map(|xi| match linear_battery(&g, xi) {
            Ok(r) => r,
            Err(e) => Some(format!("error: {e}")),
        });
        rec.check(format!("{name} linear action: involutive, braid"), lin_fail.is_none(), lin_fail.unwrap_or_else(|| format!("{} weights", shifted.len())));

        if name.starts_with('A') {
            let (w0, _) = match g.longest_element() {
                Ok(x) => x,
                Err(e) => {
                    rec.check(format!("{name} w0"), false, e.to_string());
                    continue;
                }
            };
            let mut bad = None;
            for v in &box_ {
                for w1 in 0..=d {
                    let mut w = vec![0; n];
                    w[0] = w1;
                    let want: Vec<i64> = v.iter().rev().map(|x| w1 - x).collect();
                    match g.weyl_star_word(&w0, v, &w) {
                        Ok(got) if got == want => {}
                        Ok(got) => {
                            bad = Some(format!("v = {v:?}, w₁ = {w1}: got {got:?}, want {want:?}"));
                            break;
                        }
                        Err(e) => {
                            bad = Some(e.to_string());
                            break;
                        }
                    }
                }
                if bad.is_some() {
                    break;
                }
            }
            rec.check(format!("{name} w0 * v = (w1 − v_n, …, w1 − v_1)"), bad.is_none(), bad.unwrap_or_default());
        }
    }
    rec.finish()
}
