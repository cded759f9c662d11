use sigma_quiver_core::partitions::{column_removal, rect_symmetry, row_addition, Partition};
use sigma_quiver_core::torus::box_points;
use sigma_quiver_core::Result;

use crate::report::{Caps, Recorder, SuiteReport};

const KOSTKA_CAP: usize = 1_000_000;

fn two_row(rec: &mut Recorder) {
    let r = rect_symmetry(&[1, 2, 2, 3, 2, 1], &[0, 1, 0, 1, 0, 0], KOSTKA_CAP);
    let want = [vec![6], vec![4, 2], vec![7, 1], vec![5, 3]];
    match r {
        Ok(r) => {
            let got = [&r.labels.mu_prime, &r.labels.lambda, &r.hat_labels.mu_prime, &r.hat_labels.lambda];
            let ok = got.iter().zip(&want).all(|(g, w)| **g == Partition::new(w.clone()));
            let detail = format!("μ′ = {}, λ = {}, μ̂′ = {}, λ̂ = {}", got[0], got[1], got[2], got[3]);
            rec.check("two-row example: μ′ = (6), λ = (4,2), μ̂′ = (7,1), λ̂ = (5,3)", ok, detail);
        }
        Err(e) => rec.check("two-row example: μ′ = (6), λ = (4,2), μ̂′ = (7,1), λ̂ = (5,3)", false, format!("error: {e}")),
    }
}

#[derive(Default)]
struct Grid {
    valid: usize,
    mu_hat: Option<String>,
    rect: Option<String>,
    kostka: Option<String>,
    column: Option<String>,
    row: Option<String>,
}

fn visit(v: &[i64], w: &[i64], g: &mut Grid) -> Result<()> {
    let r = match rect_symmetry(v, w, KOSTKA_CAP) {
        Ok(r) => r,
        // data outside the flag variety: nothing to compare
        Err(sigma_quiver_core::Error::Partition(_)) => return Ok(()),
        Err(e) => return Err(e),
    };
    g.valid += 1;
    let at = || format!("v = {v:?}, w = {w:?}");
    if !(r.mu_hat_ok && r.mu_prime_hat_ok) {
        g.mu_hat.get_or_insert_with(at);
    }
    // both pairs fit the (n+1) × Σw rectangle
    let (n, sw) = (v.len(), w.iter().sum::<i64>() as usize);
    let fits = |p: &Partition| p.parts().iter().all(|&x| x <= n + 1) && p.len() <= sw;
    if ![&r.labels.mu_prime, &r.labels.lambda, &r.hat_labels.mu_prime, &r.hat_labels.lambda].iter().all(|p| fits(p)) {
        g.rect.get_or_insert_with(at);
    }
    if r.kostka.0 != r.kostka.1 || r.kostka_transposed.0 != r.kostka_transposed.1 {
        g.kostka.get_or_insert_with(|| format!("{} with K = {:?}", at(), r.kostka));
    }
    let c = column_removal(v, w)?;
    if !(c.formula_ok && c.inverse_ok) {
        g.column.get_or_insert_with(at);
    }
    for a in 1..=2 {
        let r = row_addition(v, w, a)?;
        if !(r.formula_ok && r.inverse_ok) {
            g.row.get_or_insert_with(|| format!("{} with a = {a}", at()));
        }
    }
    Ok(())
}

pub fn run(caps: &Caps, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("partitions", seed);
    two_row(&mut rec);
    let mut g = Grid::default();
    let mut error = None;
    'grid: for n in 1..=caps.max_weight {
        let vb = if n <= 3 { 3 } else { 2 };
        let wb = 2;
        for w in box_points(&vec![wb; n]) {
            for v in box_points(&vec![vb; n]) {
                if let Err(e) = visit(&v, &w, &mut g) {
                    error = Some(format!("v = {v:?}, w = {w:?}: {e}"));
                    break 'grid;
                }
            }
        }
    }
    let mut put = |name: &str, bad: &Option<String>| {
        let detail = match (&error, bad) {
            (Some(e), _) => format!("error: {e}"),
            (None, Some(b)) => format!("first failure at {b}"),
            (None, None) => format!("{} valid (v, w) with n ≤ {}", g.valid, caps.max_weight),
        };
        rec.check(name, error.is_none() && bad.is_none() && g.valid > 0, detail);
    };
    put("μ_i + μ̂_{n+2−i} = Σw and the μ̂′ exponent formula", &g.mu_hat);
    put("label pairs fit the (n+1) × Σw rectangle", &g.rect);
    put("K_{λ,μ′} = K_{λ̂,μ̂′}", &g.kostka);
    put("column removal formula and inverse", &g.column);
    put("row addition formula and inverse", &g.row);
    let _ = seed;
    rec.finish()
}
