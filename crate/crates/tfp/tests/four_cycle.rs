use std::collections::BTreeMap;

use lattice_core::{Grading, GradedVariableSet, IntMatrix, Move, MoveSet, VectorConfiguration};
use markov_engine::{markov_basis, verify_markov, EngineOptions, Status};
use tfp::{
    assemble_markov, cpp_check, glue_sets, lift_moves, product_config, quad_moves, slow_varying_check, tilde_extend,
    AssembleOptions, Justification, ProductConfiguration, Side, DEFAULT_GLUE_CAP,
};

/// Binary path {0,1},{0,2} graded by the cell of vertices (1,2).
fn path_side() -> VectorConfiguration {
    let vars = GradedVariableSet::class_major(&[2, 2, 2, 2]).unwrap();
    let mut cols = Vec::new();
    for l in vars.labels() {
        let (i2, i3, i1) = (l.class / 2, l.class % 2, l.j);
        let mut c = vec![0i64; 8];
        c[2 * i1 + i2] = 1;
        c[4 + 2 * i1 + i3] = 1;
        cols.push(c);
    }
    let b = IntMatrix::from_columns(8, &cols).unwrap();
    let mut pi = IntMatrix::zeros(4, 8);
    for i1 in 0..2 {
        for x in 0..2 {
            pi.set(x, 2 * i1 + x, 1);
            pi.set(2 + x, 4 + 2 * i1 + x, 1);
        }
    }
    VectorConfiguration::new(vars, b, two_vertices(), Some(pi)).unwrap()
}

fn two_vertices() -> Grading {
    let cols: Vec<Vec<i64>> = (0..4)
        .map(|class| {
            let mut c = vec![0i64; 4];
            c[class / 2] = 1;
            c[2 + class % 2] = 1;
            c
        })
        .collect();
    Grading::new(IntMatrix::from_columns(4, &cols).unwrap()).unwrap()
}

fn four_cycle() -> ProductConfiguration {
    let side = path_side();
    product_config(&side, &side, &two_vertices()).unwrap()
}

#[test]
fn quads_and_lifts() {
    let p = four_cycle();
    assert_eq!(quad_moves(&p).len(), 4);
    let f = markov_basis(p.left()).unwrap().basis;
    assert_eq!(f.len(), 2);
    for m in &f {
        let lifted = lift_moves(&MoveSet::from_moves([m.clone()]), Side::Left, &p);
        // Path quadrics change class, so they cannot be aligned row by row.
        assert!(lifted.is_err());
    }
    let tilde = tilde_extend(&p).unwrap();
    let ft = markov_basis(&tilde.tilde_left).unwrap().basis;
    assert_eq!(ft.degree_histogram(), BTreeMap::from([(4, 1)]));
    let lifted = lift_moves(&ft, Side::Left, &p).unwrap();
    assert_eq!(lifted.len(), 16);
    assert!(lifted.iter().all(|m| m.degree() == 4));
}

#[test]
fn glue_gives_four_quadrics() {
    let p = four_cycle();
    let f = markov_basis(p.left()).unwrap().basis;
    let g = markov_basis(p.right()).unwrap().basis;
    let glued = glue_sets(&f, &g, &p, DEFAULT_GLUE_CAP).unwrap();
    assert_eq!(glued.degree_histogram(), BTreeMap::from([(2, 4)]));
    for m in &glued {
        assert!(m.in_kernel(p.product().matrix()).unwrap());
        let x = Move::new(p.project_to(Side::Left, m.as_slice()));
        assert!(x.in_kernel(p.left().matrix()).unwrap());
    }
    let sv = slow_varying_check(&f, &g, &p).unwrap();
    assert!(sv.holds);
    assert!(sv.norm_criterion);
}

#[test]
fn assembled_basis_verifies() {
    let p = four_cycle();
    let (asm, _) = assemble_markov(&p, &EngineOptions::default(), &AssembleOptions::default()).unwrap();
    assert_eq!(asm.moves.degree_histogram(), BTreeMap::from([(2, 8), (4, 32)]));
    let kinds = asm.count_by_kind();
    assert_eq!(kinds.get("quad"), Some(&4));
    assert_eq!(kinds.get("glue"), Some(&4));
    assert_eq!(kinds.get("lift-left").copied().unwrap_or(0) + kinds.get("lift-right").copied().unwrap_or(0), 32);
    assert_eq!(asm.justification, Justification::SlowVarying);
    let v = verify_markov(p.product(), &asm.moves, 6).unwrap();
    assert_eq!(v.status, Status::Verified);
}

#[test]
fn glue_graph_matches_intersection() {
    let p = four_cycle();
    let f = markov_basis(p.left()).unwrap().basis;
    let g = markov_basis(p.right()).unwrap().basis;
    let glued = glue_sets(&f, &g, &p, DEFAULT_GLUE_CAP).unwrap();
    let report = cpp_check(&f, &g, &p, 4, Some(&glued), 100_000).unwrap();
    assert!(report.holds);
    assert!(report.lemma_checked > 0);
    assert_eq!(report.lemma_mismatch, None);
}

/// Left moves change class content by twice the kernel generator of `A`,
/// right moves by once; the projected graphs then share vertices but no edges.
#[test]
fn spaced_projections_refute() {
    let a = Grading::new(IntMatrix::from_rows(2, &[vec![1, 1]]).unwrap()).unwrap();
    let lvars = GradedVariableSet::class_major(&[2, 1]).unwrap();
    let b = IntMatrix::from_rows(3, &[vec![1, 1, 1], vec![0, 2, 1]]).unwrap();
    let left = VectorConfiguration::new(lvars, b, a.clone(), Some(IntMatrix::from_rows(2, &[vec![1, 0]]).unwrap())).unwrap();
    let rvars = GradedVariableSet::class_major(&[1, 1]).unwrap();
    let c = IntMatrix::from_rows(2, &[vec![1, 1]]).unwrap();
    let right = VectorConfiguration::new(rvars, c, a.clone(), Some(IntMatrix::identity(1))).unwrap();
    let p = product_config(&left, &right, &a).unwrap();
    assert_eq!(p.codim(), 1);
    let f = markov_basis(&left).unwrap().basis;
    let g = markov_basis(&right).unwrap().basis;
    let sv = slow_varying_check(&f, &g, &p).unwrap();
    assert!(!sv.holds);
    let report = cpp_check(&f, &g, &p, 4, None, 10_000).unwrap();
    assert!(!report.holds);
    let w = report.witness.unwrap();
    assert_eq!(w.degree, 2);
    assert_eq!(w.components, 2);
    let (asm, _) = assemble_markov(&p, &EngineOptions::default(), &AssembleOptions::default()).unwrap();
    assert!(matches!(asm.justification, Justification::Unjustified { .. }));
    assert_eq!(verify_markov(p.product(), &asm.moves, 4).unwrap().status, Status::Refuted);
}

#[test]
fn single_right_variables_reproduce_left() {
    // One right variable per class with column a_i: the product is the left
    // configuration with relabeled variables.
    let left = path_side();
    let a = two_vertices();
    let right = VectorConfiguration::from_classes(GradedVariableSet::class_major(&[1; 4]).unwrap(), a.clone()).unwrap();
    let p = product_config(&left, &right, &a).unwrap();
    assert_eq!(p.z_len(), left.n());
    let f = markov_basis(&left).unwrap().basis;
    let h = markov_basis(p.product()).unwrap().basis;
    let relabeled: MoveSet = h
        .iter()
        .map(|m| Move::new(p.project_to(Side::Left, m.as_slice())))
        .collect();
    assert_eq!(relabeled, f);
    let (asm, _) = assemble_markov(&p, &EngineOptions::default(), &AssembleOptions::default()).unwrap();
    assert_eq!(verify_markov(p.product(), &asm.moves, 4).unwrap().status, Status::Verified);
}
