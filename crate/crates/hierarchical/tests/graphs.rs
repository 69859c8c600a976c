use std::collections::BTreeSet;

use hierarchical::{
    has_k23_minor, has_k4_minor, is_ring_graph, outerplanar_and_slim, sp_basis, width, width_bound, HierModel,
    MarkovGraph, SimplicialComplex,
};
use markov_engine::{covers_basis, markov_basis, verify_markov, EngineOptions, Status};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minor test by assigning every vertex to a branch set or to none.
fn brute_minor(g: &MarkovGraph, h_n: usize, h_edges: &[(usize, usize)]) -> bool {
    let n = g.n();
    let total = (h_n + 1).pow(n as u32);
    'assign: for code in 0..total {
        let mut c = code;
        let mut part = vec![0usize; n];
        for p in part.iter_mut() {
            *p = c % (h_n + 1);
            c /= h_n + 1;
        }
        for b in 1..=h_n {
            let members: Vec<usize> = (0..n).filter(|&v| part[v] == b).collect();
            if members.is_empty() {
                continue 'assign;
            }
            let mut seen = BTreeSet::from([members[0]]);
            let mut stack = vec![members[0]];
            while let Some(v) = stack.pop() {
                for w in g.neighbors(v) {
                    if part[w] == b && seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            if seen.len() != members.len() {
                continue 'assign;
            }
        }
        let ok = h_edges.iter().all(|&(x, y)| {
            g.edges()
                .iter()
                .any(|&(a, b)| (part[a] == x + 1 && part[b] == y + 1) || (part[a] == y + 1 && part[b] == x + 1))
        });
        if ok {
            return true;
        }
    }
    false
}

fn k4_edges() -> Vec<(usize, usize)> {
    vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
}

fn k23_edges() -> Vec<(usize, usize)> {
    vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> MarkovGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    MarkovGraph::from_positions(n, edges)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn minor_search_matches_branch_sets(seed in any::<u64>(), n in 4usize..=6, p in 0.3f64..0.8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p);
        prop_assert_eq!(has_k4_minor(&g).unwrap(), brute_minor(&g, 4, &k4_edges()));
        prop_assert_eq!(has_k23_minor(&g).unwrap(), brute_minor(&g, 5, &k23_edges()));
    }
}

#[test]
fn named_graphs() {
    let r = outerplanar_and_slim(&MarkovGraph::complete(4)).unwrap();
    assert!(!r.outerplanar && !r.markov_slim);
    let r = outerplanar_and_slim(&MarkovGraph::complete_bipartite(2, 3)).unwrap();
    assert!(r.k23_minor && !r.k4_minor && !r.outerplanar);
    let r = outerplanar_and_slim(&MarkovGraph::cycle(7)).unwrap();
    assert!(r.outerplanar && r.ring_graph);
    // A fan is outerplanar and its triangles share edges.
    let fan = MarkovGraph::from_positions(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 2), (0, 3), (0, 4), (0, 5)]);
    let r = outerplanar_and_slim(&fan).unwrap();
    assert!(r.outerplanar && r.ring_graph);
}

#[test]
fn outerplanar_graphs_are_ring_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let g = random_graph(&mut rng, n, 0.35);
        if outerplanar_and_slim(&g).unwrap().outerplanar {
            assert!(is_ring_graph(&g), "{:?}", g.edges());
            checked += 1;
        }
    }
    assert!(checked > 20);
}

fn graph_model(g: &MarkovGraph, d: &[usize]) -> HierModel {
    HierModel::new(g.complex(), d.to_vec()).unwrap()
}

#[test]
fn width_examples() {
    let opts = EngineOptions::default();
    let path = MarkovGraph::from_positions(3, [(0, 1), (1, 2)]);
    assert_eq!(width(&graph_model(&path, &[3, 3, 3]), &opts).unwrap(), 2);
    assert_eq!(width(&graph_model(&path, &[2, 3, 2]), &opts).unwrap(), 2);
    let c4 = MarkovGraph::cycle(4);
    assert_eq!(width(&graph_model(&c4, &[2; 4]), &opts).unwrap(), 4);
    let k3 = MarkovGraph::complete(3);
    assert_eq!(width(&graph_model(&k3, &[2, 2, 3]), &opts).unwrap(), 4);
    assert_eq!(width(&graph_model(&k3, &[2, 3, 3]), &opts).unwrap(), 6);
}

#[test]
fn opposite_levels_on_a_square() {
    // Edges 12, 13, 24, 34: vertices 1 and 4 are opposite.
    let g = MarkovGraph::new(vec![1, 2, 3, 4], &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
    let d = [3, 2, 2, 3];
    let wb = width_bound(&g, &d).unwrap();
    assert_eq!(wb.bound, Some(4));
    assert_eq!(width(&graph_model(&g, &d), &EngineOptions::default()).unwrap(), 4);
}

#[test]
fn bound_examples() {
    // Three squares in a row sharing edges.
    let ladder = MarkovGraph::from_positions(
        8,
        [(0, 1), (2, 3), (4, 5), (6, 7), (0, 2), (2, 4), (4, 6), (1, 3), (3, 5), (5, 7)],
    );
    let wb = width_bound(&ladder, &[2; 8]).unwrap();
    assert_eq!(wb.bound, Some(4));
    assert!(wb.trace.iter().any(|l| l.contains("3 cycles glued along edges")));
    assert_eq!(width_bound(&MarkovGraph::cycle(5), &[2, 2, 3, 3, 3]).unwrap().bound, Some(6));
    assert_eq!(width_bound(&MarkovGraph::complete_bipartite(2, 3), &[3, 3, 2, 2, 2]).unwrap().bound, None);
}

#[test]
fn bound_dominates_width() {
    let opts = EngineOptions::default();
    let cases: Vec<(MarkovGraph, Vec<usize>)> = vec![
        (MarkovGraph::complete(3), vec![2, 2, 2]),
        (MarkovGraph::complete(3), vec![2, 2, 3]),
        (MarkovGraph::complete(3), vec![2, 3, 3]),
        (MarkovGraph::cycle(4), vec![2, 2, 2, 2]),
        (MarkovGraph::cycle(4), vec![2, 3, 2, 3]),
        (MarkovGraph::cycle(5), vec![2; 5]),
        (MarkovGraph::from_positions(4, [(0, 1), (1, 2), (0, 2), (2, 3)]), vec![2, 2, 3, 3]),
        (MarkovGraph::from_positions(4, [(0, 1), (1, 2), (2, 3)]), vec![3, 2, 3, 2]),
        (MarkovGraph::from_positions(4, [(0, 1), (1, 2), (0, 2), (0, 3), (2, 3)]), vec![2; 4]),
    ];
    for (g, d) in cases {
        let wb = width_bound(&g, &d).unwrap();
        let mu = width(&graph_model(&g, &d), &opts).unwrap();
        let b = wb.bound.expect("these graphs have bounds");
        assert!(b >= mu, "{:?} {:?}: bound {b} < width {mu}\n{}", g.edges(), d, wb.trace.join("\n"));
    }
}

#[test]
fn series_parallel_examples() {
    let k2 = MarkovGraph::complete(2);
    assert!(sp_basis(&k2, 0, 1).unwrap().basis.is_empty());
    let tri = sp_basis(&MarkovGraph::complete(3), 0, 2).unwrap();
    assert_eq!(tri.basis.len(), 1);
    assert_eq!(tri.basis.get(0).degree(), 4);
    assert!(sp_basis(&MarkovGraph::complete(4), 0, 1).is_err());
}

fn check_sp(g: &MarkovGraph, top: usize, bottom: usize) {
    let res = sp_basis(g, top, bottom).unwrap();
    assert!(res.degrees.keys().all(|d| *d == 2 || *d == 4), "{:?}", res.degrees);
    let model = HierModel::binary(g.complex()).unwrap();
    let reference = markov_basis(model.config()).unwrap().basis;
    let gap = covers_basis(model.config(), &res.basis, &reference, 1_000_000).unwrap();
    assert!(gap.is_none(), "{:?}: reference move {:?} not connected", g.edges(), gap.map(|g| g.0));
    if g.n() <= 4 {
        let v = verify_markov(model.config(), &res.basis, 6).unwrap();
        assert_eq!(v.status, Status::Verified);
    }
}

#[test]
fn series_parallel_named() {
    check_sp(&MarkovGraph::cycle(4), 0, 2);
    check_sp(&MarkovGraph::cycle(5), 0, 1);
    check_sp(&MarkovGraph::complete_bipartite(2, 3), 0, 1);
    check_sp(&MarkovGraph::from_positions(4, [(0, 1), (1, 2), (0, 2), (0, 3), (2, 3)]), 0, 2);
    check_sp(&MarkovGraph::from_positions(5, [(0, 1), (0, 2), (0, 3), (0, 4)]), 1, 2);
}

#[test]
fn series_parallel_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < 12 {
        let n = rng.gen_range(3..=6);
        let g = random_graph(&mut rng, n, 0.5);
        if !g.is_connected() || has_k4_minor(&g).unwrap() {
            continue;
        }
        let (top, bottom) = *g.edges().iter().next().unwrap();
        check_sp(&g, top, bottom);
        done += 1;
    }
}

#[test]
fn graph_complex_facets() {
    let g = MarkovGraph::from_positions(4, [(0, 1), (1, 2)]);
    let c = g.complex();
    assert_eq!(c.facets(), SimplicialComplex::from_positions((0..4).collect(), vec![vec![0, 1], vec![1, 2], vec![3]]).facets());
}
