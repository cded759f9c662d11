use proptest::prelude::*;
use sigma_quiver_core::forms::{jordan_type, random_invertible};
use sigma_quiver_core::invariants::{cycles, trace_cycle};
use sigma_quiver_core::partitions::{kostka, Partition};
use sigma_quiver_core::poly::{Poly, RatFunc};
use sigma_quiver_core::rational::rng_from_seed;
use sigma_quiver_core::torus::{brute_force_models, enumerate_models};
use sigma_quiver_core::{Graph, QMatrix, RepPoint};

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::new)
}

/// Semistandard fillings of `shape` with content `mu`, counted cell by cell.
fn ssyt_count(shape: &[usize], mu: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut left = mu.to_vec();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        let Some(&(r, c)) = cells.get(k) else { return 1 };
        let mut total = 0;
        for x in 0..left.len() {
            if left[x] == 0 || (c > 0 && grid[r][c - 1] > x) || (r > 0 && grid[r - 1][c] >= x) {
                continue;
            }
            left[x] -= 1;
            grid[r][c] = x;
            total += go(k + 1, cells, grid, left);
            left[x] += 1;
        }
        total
    }
    go(0, &cells, &mut grid, &mut left)
}

fn hook_length_count(p: &Partition) -> u64 {
    let t = p.transpose();
    let n = p.size() as u64;
    let mut num: u64 = (1..=n).product();
    for (r, &l) in p.parts().iter().enumerate() {
        for c in 0..l {
            num /= ((l - c - 1) + (t.parts()[c] - r - 1) + 1) as u64;
        }
    }
    num
}

fn nilpotent_of_type(p: &Partition) -> QMatrix {
    let blocks: Vec<QMatrix> = p
        .parts()
        .iter()
        .map(|&k| {
            let mut b = QMatrix::zeros(k, k);
            for i in 1..k {
                b.set_block(i, i - 1, &QMatrix::identity(1));
            }
            b
        })
        .collect();
    QMatrix::block_diag(&blocks.iter().collect::<Vec<_>>())
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..=4, 0usize..3, 0u32..3), 0..4).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (c, v, e)| {
            let mut m = Poly::int(c);
            for _ in 0..e {
                m = m.mul(&Poly::var(v));
            }
            acc.add(&m)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transpose_is_an_involution(p in partition(6, 6)) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().size(), p.size());
    }

    #[test]
    fn kostka_matches_tableau_count(lam in partition(4, 3), mu in prop::collection::vec(0usize..4, 1..4)) {
        prop_assume!(lam.size() == mu.iter().sum::<usize>());
        prop_assert_eq!(kostka(&lam, &mu, 100).unwrap(), ssyt_count(lam.parts(), &mu));
    }

    #[test]
    fn kostka_standard_content_is_hook_length(lam in partition(4, 4)) {
        let ones = vec![1; lam.size()];
        prop_assert_eq!(kostka(&lam, &ones, 100).unwrap(), hook_length_count(&lam));
    }

    #[test]
    fn kostka_vanishes_off_dominance(lam in partition(4, 3), mu in partition(4, 3)) {
        prop_assume!(lam.size() == mu.size());
        let k = kostka(&lam, mu.parts(), 100).unwrap();
        prop_assert_eq!(k > 0, lam.dominates(&mu));
        if lam == mu {
            prop_assert_eq!(k, 1);
        }
    }

    #[test]
    fn jordan_type_survives_conjugation(p in partition(3, 3), seed in any::<u64>()) {
        prop_assume!(p.size() > 0);
        let mut rng = rng_from_seed(seed);
        let g = random_invertible(p.size(), &mut rng);
        let n = g.mul(&nilpotent_of_type(&p)).mul(&g.inverse().unwrap());
        prop_assert_eq!(jordan_type(&n).unwrap(), p);
    }

    #[test]
    fn kernel_and_rank(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        // low rank on purpose
        let a = QMatrix::random(rows, 2, &mut rng, 3).mul(&QMatrix::random(2, cols, &mut rng, 3));
        let k = a.kernel();
        prop_assert!(a.mul(&k).is_zero());
        prop_assert_eq!(a.rank() + k.cols(), cols);
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn poly_ring_identities(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&a.sub(&b)), a.mul(&a).sub(&b.mul(&b)));
        prop_assert!(a.sub(&a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        }
    }

    #[test]
    fn ratfunc_field_identities(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let x = RatFunc::new(a.clone(), b.clone()).unwrap();
        let y = RatFunc::new(c.clone(), a.clone()).unwrap();
        prop_assert!(x.mul(&x.inv().unwrap()).equals(&RatFunc::one()));
        prop_assert!(x.add(&y).sub(&y).equals(&x));
        // c/b = (a/b)(c/a)
        prop_assert!(x.mul(&y).equals(&RatFunc::new(c, b).unwrap()));
    }

    #[test]
    fn star_action_is_involutive(n in 1usize..5, seed in any::<u64>()) {
        let g = Graph::type_a(n);
        let mut rng = rng_from_seed(seed);
        let v: Vec<i64> = (0..n).map(|_| sigma_quiver_core::rational::rand_below(&mut rng, 5) as i64).collect();
        let w: Vec<i64> = (0..n).map(|_| sigma_quiver_core::rational::rand_below(&mut rng, 5) as i64).collect();
        for i in 0..n {
            let once = g.weyl_star(i, &v, &w).unwrap();
            prop_assert_eq!(g.weyl_star(i, &once, &w).unwrap(), v.clone());
            // w − C(s_i * v) = s_i(w − Cv)
            let wt = |u: &[i64]| -> Vec<i64> { let c = g.cartan_apply(u); w.iter().zip(&c).map(|(a, b)| a - b).collect() };
            prop_assert_eq!(wt(&once), g.weyl_reflect(i, &wt(&v)).unwrap());
        }
    }

    #[test]
    fn torus_enumeration_matches_brute_force(v in prop::collection::vec(0i64..4, 2), w1 in prop::collection::vec(0i64..2, 2), w2 in prop::collection::vec(0i64..3, 2)) {
        let g = Graph::type_a(2);
        let (w0, _) = g.longest_element().unwrap();
        let a = g.identity_auto();
        let mut fast = enumerate_models(&g, &a, &w0, &v, &w1, &w2).unwrap();
        fast.sort();
        prop_assert_eq!(fast, brute_force_models(&g, &a, &w0, &v, &w1, std::slice::from_ref(&w2)).unwrap());
    }

    #[test]
    fn traces_are_gv_invariant(seed in any::<u64>()) {
        let g = Graph::type_a(3);
        let mut rng = rng_from_seed(seed);
        let (v, w) = ([2, 1, 2], [1, 0, 1]);
        let pt = RepPoint::random(&g, &v, &w, &mut rng);
        let h: Vec<QMatrix> = v.iter().map(|&d| random_invertible(d as usize, &mut rng)).collect();
        let moved = pt.act_gv(&h).unwrap();
        for c in cycles(&pt, 4) {
            prop_assert_eq!(trace_cycle(&pt, &c).unwrap(), trace_cycle(&moved, &c).unwrap());
        }
    }
}

#[test]
fn small_kostka_values() {
    let k = |l: Vec<usize>, m: &[usize]| kostka(&Partition::new(l), m, 100).unwrap();
    assert_eq!(k(vec![2, 1], &[1, 1, 1]), 2);
    assert_eq!(k(vec![3, 2], &[2, 2, 1]), 2);
    assert_eq!(k(vec![2, 2], &[3, 1]), 0);
}
