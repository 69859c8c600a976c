use hierarchical::{hier_codim, split, HierModel, SimplicialComplex, Split};
use lattice_core::kernel_basis;
use proptest::prelude::*;

fn complex_from_masks(n: usize, masks: &[u32]) -> SimplicialComplex {
    let facets = masks
        .iter()
        .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
        .collect();
    SimplicialComplex::from_positions((0..n).collect(), facets)
}

fn kernels_agree(model: &HierModel, s: &Split) {
    let whole = kernel_basis(model.config()).unwrap();
    let prod = kernel_basis(s.product().product()).unwrap();
    assert_eq!(whole.len(), prod.len());
    for m in &prod {
        assert!(s.to_cells(m).in_kernel(model.matrix()).unwrap());
    }
    for m in &whole {
        assert!(s.from_cells(m).in_kernel(s.product().product().matrix()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn codim_formula_matches_rank(
        n in 2usize..=5,
        masks in prop::collection::vec(1u32..32, 1..5),
        levels in prop::collection::vec(2usize..=3, 5),
    ) {
        let masks: Vec<u32> = masks.iter().map(|m| m & ((1 << n) - 1)).filter(|&m| m != 0).collect();
        let c = complex_from_masks(n, &masks);
        let mut d = levels[..n].to_vec();
        // Keep the matrix small enough for exact rank in debug builds.
        while d.iter().product::<usize>() > 48 {
            let i = d.iter().position(|&x| x == 3).unwrap();
            d[i] = 2;
        }
        let model = HierModel::new(c.clone(), d.clone()).unwrap();
        let expected = (model.columns() - model.config().rank()) as u64;
        prop_assert_eq!(hier_codim(&c, &d).unwrap(), expected);
    }

    #[test]
    fn split_product_has_the_model_kernel(
        n in 3usize..=5,
        cut in 1usize..4,
        overlap in 0usize..3,
        left_masks in prop::collection::vec(1u32..32, 1..4),
        right_masks in prop::collection::vec(1u32..32, 1..4),
    ) {
        // V1 = 0..a and V2 = b..n overlap in b..a.
        let b = 1 + cut % (n - 1);
        let a = (b + overlap).min(n);
        let v1: Vec<usize> = (0..a).collect();
        let v2: Vec<usize> = (b..n).collect();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for m in &left_masks {
            facets.push(v1.iter().copied().filter(|v| m >> v & 1 == 1).collect());
        }
        for m in &right_masks {
            facets.push(v2.iter().copied().filter(|v| m >> (v - b) & 1 == 1).collect());
        }
        let c = SimplicialComplex::from_positions((0..n).collect(), facets);
        let model = HierModel::binary(c).unwrap();
        // At most 20 columns per side.
        prop_assume!(v1.len() <= 4 && v2.len() <= 4);
        let s = Split::new(&model, &v1, &v2).unwrap();
        kernels_agree(&model, &s);
    }
}

#[test]
fn four_cycle_into_two_paths() {
    let c = SimplicialComplex::new(vec![1, 2, 3, 4], &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap();
    let model = HierModel::binary(c).unwrap();
    let s = split(&model, &[1, 2, 3], &[1, 3, 4]).unwrap();
    assert_eq!(s.codim(), 1);
    kernels_agree(&model, &s);
}

#[test]
fn two_k4_over_an_empty_triangle() {
    let mut edges = Vec::new();
    for (a, b) in [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4), (1, 5), (2, 5), (3, 5)] {
        edges.push(vec![a, b]);
    }
    let c = SimplicialComplex::new(vec![1, 2, 3, 4, 5], &edges).unwrap();
    let model = HierModel::binary(c).unwrap();
    let s = split(&model, &[1, 2, 3, 4], &[1, 2, 3, 5]).unwrap();
    assert_eq!(s.codim(), 1);
    assert!(s.tilde(tfp::Side::Left).complex().is_face(&[0, 1, 2]));
    kernels_agree(&model, &s);
}

#[test]
fn clique_overlap_is_codim_zero() {
    let c = SimplicialComplex::new(vec![1, 2, 3, 4], &[vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
    let model = HierModel::new(c, vec![2, 3, 2, 3]).unwrap();
    let s = split(&model, &[1, 2, 3], &[2, 3, 4]).unwrap();
    assert_eq!(s.codim(), 0);
    kernels_agree(&model, &s);
}

#[test]
fn separator_complex_codim_one() {
    // Gamma_S is the boundary of the triangle on S: binary gives codimension one.
    let c = SimplicialComplex::simplex_boundary(3);
    assert_eq!(hier_codim(&c, &[2, 2, 2]).unwrap(), 1);
    assert_eq!(hier_codim(&c, &[2, 2, 3]).unwrap(), 2);
}
