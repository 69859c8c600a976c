use std::collections::BTreeMap;
use std::time::Instant;

use lattice_core::{IntMatrix, VectorConfiguration};
use markov_engine::{markov_basis, minimal_degrees, verify_markov, Status};

/// Facet-marginal matrix of a hierarchical model; cells in lex order.
fn hier(facets: &[Vec<usize>], d: &[usize]) -> VectorConfiguration {
    let mut cells: Vec<Vec<usize>> = vec![vec![]];
    for &dv in d {
        cells = cells
            .into_iter()
            .flat_map(|c| {
                (0..dv).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    let mut rows = Vec::new();
    for f in facets {
        let mut margins: Vec<Vec<usize>> = vec![vec![]];
        for &v in f {
            margins = margins
                .into_iter()
                .flat_map(|c| {
                    (0..d[v]).map(move |x| {
                        let mut c = c.clone();
                        c.push(x);
                        c
                    })
                })
                .collect();
        }
        for m in margins {
            rows.push(
                cells
                    .iter()
                    .map(|c| i64::from(f.iter().zip(&m).all(|(&v, &x)| c[v] == x)))
                    .collect::<Vec<i64>>(),
            );
        }
    }
    VectorConfiguration::plain(IntMatrix::from_rows(cells.len(), &rows).unwrap()).unwrap()
}

fn cycle(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| vec![i.min((i + 1) % n), i.max((i + 1) % n)]).collect()
}

#[test]
fn four_cycle_counts() {
    let t = Instant::now();
    let cfg = hier(&cycle(4), &[2, 2, 2, 2]);
    let res = markov_basis(&cfg).unwrap();
    eprintln!("c4 {:?} in {:?}", res.minimal_counts, t.elapsed());
    assert_eq!(res.minimal_counts, BTreeMap::from([(2, 8), (4, 8)]));
    assert_eq!(res.mu, 4);
    assert_eq!(verify_markov(&cfg, &res.basis, 6).unwrap().status, Status::Verified);
}

#[test]
fn triangle_single_quartic() {
    let cfg = hier(&cycle(3), &[2, 2, 2]);
    let res = markov_basis(&cfg).unwrap();
    assert_eq!(res.basis.len(), 1);
    assert_eq!(res.basis.get(0).degree(), 4);
}

#[test]
fn k4_binary() {
    let t = Instant::now();
    let facets: Vec<Vec<usize>> = vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]];
    let cfg = hier(&facets, &[2, 2, 2, 2]);
    let res = markov_basis(&cfg).unwrap();
    eprintln!("k4 {:?} gens {} in {:?}", res.minimal_counts, res.generating_set_size, t.elapsed());
    assert_eq!(res.degree_histogram, BTreeMap::from([(4, 20), (6, 40)]));
    assert_eq!(res.mu, 6);
}

#[test]
fn triangle_widths() {
    for (d, mu) in [([2, 2, 2], 4), ([2, 2, 3], 4), ([2, 3, 3], 6), ([3, 3, 3], 6)] {
        let t = Instant::now();
        let cfg = hier(&cycle(3), &d);
        let res = markov_basis(&cfg).unwrap();
        eprintln!("k3 {:?}: {:?} gens {} in {:?}", d, res.minimal_counts, res.generating_set_size, t.elapsed());
        assert_eq!(res.mu, mu, "{d:?}");
    }
}

#[test]
fn minimal_counts_do_not_depend_on_basis() {
    let cfg = hier(&cycle(4), &[2, 2, 2, 2]);
    let res = markov_basis(&cfg).unwrap();
    let full = markov_engine::generating_set(&cfg, &Default::default()).unwrap();
    let (counts, mu) = minimal_degrees(&cfg, &full).unwrap();
    assert_eq!(counts, res.minimal_counts);
    assert_eq!(mu, res.mu);
}

#[test]
#[ignore = "long: five-cycle with mixed levels"]
fn five_cycle_mixed_levels() {
    let t = Instant::now();
    let cfg = hier(&cycle(5), &[2, 2, 3, 3, 3]);
    let res = markov_basis(&cfg).unwrap();
    eprintln!("c5 {:?} gens {} in {:?}", res.minimal_counts, res.generating_set_size, t.elapsed());
    assert_eq!(res.mu, 6);
}
