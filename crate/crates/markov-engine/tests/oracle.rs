use std::collections::{BTreeMap, HashSet, VecDeque};

use lattice_core::{IntMatrix, Move, MoveSet, VectorConfiguration};
use markov_engine::{default_bound, generating_set, markov_basis, minimal_degrees, verify_markov, Status};
use proptest::prelude::*;

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

/// Breadth-first search over a fiber given as a point set.
fn connected(points: &[Vec<i32>], moves: &MoveSet) -> bool {
    let set: HashSet<&Vec<i32>> = points.iter().collect();
    let mut seen: HashSet<Vec<i32>> = HashSet::from([points[0].clone()]);
    let mut queue = VecDeque::from([points[0].clone()]);
    while let Some(p) = queue.pop_front() {
        for m in moves {
            for sign in [1, -1] {
                let q: Vec<i32> = p.iter().zip(m.as_slice()).map(|(a, b)| a + sign * b).collect();
                if set.contains(&q) && seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
    }
    seen.len() == points.len()
}

fn config_strategy() -> impl Strategy<Value = VectorConfiguration> {
    (1usize..3, 3usize..7).prop_flat_map(|(extra, n)| {
        prop::collection::vec(prop::collection::vec(0i64..4, n), extra).prop_map(move |rows| {
            let mut all = vec![vec![1i64; n]];
            all.extend(rows);
            VectorConfiguration::plain(IntMatrix::from_rows(n, &all).unwrap()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn basis_connects_every_small_fiber(cfg in config_strategy()) {
        let res = markov_basis(&cfg).unwrap();
        for m in &res.basis {
            prop_assert!(m.in_kernel(cfg.matrix()).unwrap());
        }
        let n = cfg.n();
        for d in 1..=6 {
            let mut fibers: BTreeMap<Vec<i64>, Vec<Vec<i32>>> = BTreeMap::new();
            for u in monomials(n, d) {
                fibers.entry(cfg.image(&u).unwrap()).or_default().push(u);
            }
            for (rhs, pts) in fibers {
                prop_assert!(connected(&pts, &res.basis), "fiber {:?} disconnected", rhs);
            }
        }
    }

    #[test]
    fn verification_accepts_computed_bases(cfg in config_strategy()) {
        let res = markov_basis(&cfg).unwrap();
        let bound = default_bound(&res.basis).min(8);
        prop_assert_eq!(verify_markov(&cfg, &res.basis, bound).unwrap().status, Status::Verified);
    }

    #[test]
    fn widths_agree_across_bases(cfg in config_strategy()) {
        let res = markov_basis(&cfg).unwrap();
        let full = generating_set(&cfg, &Default::default()).unwrap();
        let (counts, mu) = minimal_degrees(&cfg, &full).unwrap();
        prop_assert_eq!(counts, res.minimal_counts);
        prop_assert_eq!(mu, res.mu);
    }
}

#[test]
fn dropping_a_minimal_generator_is_refuted() {
    let cfg = VectorConfiguration::plain(IntMatrix::from_rows(4, &[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap()).unwrap();
    let res = markov_basis(&cfg).unwrap();
    assert_eq!(res.basis.len(), 3);
    let fewer: MoveSet = res.basis.iter().skip(1).cloned().collect::<Vec<Move>>().into_iter().collect();
    let v = verify_markov(&cfg, &fewer, 4).unwrap();
    assert_eq!(v.status, Status::Refuted);
    assert_eq!(v.witness.unwrap().degree, 2);
}
