use std::collections::{BTreeMap, BTreeSet};

use lattice_core::matrix::solve_row_combination;
use lattice_core::{
    connected_components, enumerate_fiber, kernel_basis, project_graph, project_point, Fiber, IntMatrix, Move,
    MoveSet, VectorConfiguration,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// All exponent vectors of length `n` and total degree `d`.
fn monomials(n: usize, d: i32) -> Vec<Vec<i32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in monomials(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn config_strategy() -> impl Strategy<Value = VectorConfiguration> {
    (1usize..3, 2usize..7).prop_flat_map(|(extra, n)| {
        prop::collection::vec(prop::collection::vec(0i64..4, n), extra).prop_map(move |rows| {
            let mut all = vec![vec![1i64; n]];
            all.extend(rows);
            VectorConfiguration::plain(IntMatrix::from_rows(n, &all).unwrap()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn fiber_matches_monomial_filter(cfg in config_strategy(), seed in 0u64..1000, degree in 0i32..5) {
        let n = cfg.n();
        let all = monomials(n, degree);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = all.choose(&mut rng).unwrap().clone();
        let rhs = cfg.image(&u).unwrap();
        let fiber = enumerate_fiber(&cfg, &rhs).unwrap();
        let mut oracle: Vec<Vec<i32>> = all.into_iter().filter(|m| cfg.image(m).unwrap() == rhs).collect();
        oracle.sort();
        prop_assert_eq!(fiber.points, oracle);
    }

    #[test]
    fn kernel_basis_is_saturated(cfg in config_strategy()) {
        let basis = kernel_basis(&cfg).unwrap();
        let n = cfg.n();
        prop_assert_eq!(basis.len(), n - cfg.rank());
        prop_assume!(n <= 5);
        if basis.is_empty() {
            return Ok(());
        }
        let rows: Vec<Vec<i64>> = basis.iter().map(|m| m.as_slice().iter().map(|&x| x as i64).collect()).collect();
        let k = IntMatrix::from_rows(n, &rows).unwrap();
        let mut v = vec![-2i64; n];
        loop {
            if cfg.matrix().mul_vec(&v).unwrap().iter().all(|&x| x == 0) {
                let coeffs = solve_row_combination(&k, &v).expect("kernel vector in span");
                prop_assert!(coeffs.iter().all(|c| c.is_integer()), "{:?} not an integer combination", v);
            }
            let mut i = 0;
            while i < n && v[i] == 2 {
                v[i] = -2;
                i += 1;
            }
            if i == n {
                break;
            }
            v[i] += 1;
        }
    }

    #[test]
    fn components_ignore_ordering(cfg in config_strategy(), seed in 0u64..1000, degree in 1i32..4) {
        let n = cfg.n();
        let all = monomials(n, degree);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rhs = cfg.image(all.choose(&mut rng).unwrap()).unwrap();
        let fiber = enumerate_fiber(&cfg, &rhs).unwrap();
        let moves: Vec<Move> = kernel_basis(&cfg).unwrap().iter().cloned().collect();
        let fg = connected_components(&fiber, &MoveSet::from_moves(moves.clone()));
        let partition = |f: &Fiber, comps: &[Vec<usize>]| -> BTreeSet<BTreeSet<Vec<i32>>> {
            comps.iter().map(|c| c.iter().map(|&i| f.points[i].clone()).collect()).collect()
        };
        let mut shuffled = fiber.clone();
        shuffled.points.shuffle(&mut rng);
        let mut rev = moves;
        rev.reverse();
        let fg2 = connected_components(&shuffled, &MoveSet::from_moves(rev));
        prop_assert_eq!(partition(&fiber, &fg.components), partition(&shuffled, &fg2.components));

        let gamma: Vec<usize> = (0..n).map(|i| i % 2).collect();
        let pg = project_graph(&fg, &gamma, 2);
        for p in &fiber.points {
            prop_assert!(pg.vertices.contains(&project_point(p, &gamma, 2)));
        }
    }
}

#[test]
fn four_cycle_needs_quartics() {
    // Binary 4-cycle: edge marginals of a 2x2x2x2 table.
    let edges = [(0usize, 1usize), (1, 2), (2, 3), (0, 3)];
    let cells: Vec<[usize; 4]> = (0..16).map(|c| [c >> 3 & 1, c >> 2 & 1, c >> 1 & 1, c & 1]).collect();
    let mut rows = Vec::new();
    for (a, b) in edges {
        for x in 0..2 {
            for y in 0..2 {
                rows.push(cells.iter().map(|c| i64::from(c[a] == x && c[b] == y)).collect::<Vec<_>>());
            }
        }
    }
    let cfg = VectorConfiguration::plain(IntMatrix::from_rows(16, &rows).unwrap()).unwrap();
    // Every degree-2 move in the kernel.
    let quadrics: MoveSet = monomials(16, 2)
        .into_iter()
        .flat_map(|p| monomials(16, 2).into_iter().map(move |q| (p.clone(), q)))
        .filter(|(p, q)| p < q && cfg.image(p).unwrap() == cfg.image(q).unwrap())
        .map(|(p, q)| Move::from_terms(&p, &q).unwrap())
        .filter(|m| m.degree() == 2)
        .collect();
    assert_eq!(quadrics.len(), 8);
    let mut fibers: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
    for m in monomials(16, 4) {
        fibers.insert(cfg.image(&m).unwrap(), ());
    }
    let disconnected = fibers
        .keys()
        .filter(|rhs| !connected_components(&enumerate_fiber(&cfg, rhs).unwrap(), &quadrics).is_connected())
        .count();
    assert!(disconnected > 0);
}
