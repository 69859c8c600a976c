use lattice_core::{Grading, GradedVariableSet, IntMatrix, Move, MoveSet, VectorConfiguration};
use markov_engine::{markov_basis, verify_markov, Status};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tfp::{
    assemble_from_tilde, cpp_check, default_cpp_bound, glue_sets, lift_moves, product_config, quad_moves, tilde_extend,
    AssembleOptions, ProductConfiguration, Side, DEFAULT_GLUE_CAP,
};

const CASES: u64 = 50;
const MAX_BOUND: u64 = 5;

/// Grading with an all-ones first row, at most 3 classes and codimension at most one.
fn random_grading(rng: &mut ChaCha8Rng) -> Grading {
    loop {
        let r = rng.gen_range(1..=3);
        let mut rows = vec![vec![1i64; r]];
        for _ in 0..rng.gen_range(0..=2) {
            rows.push((0..r).map(|_| rng.gen_range(0..=2)).collect());
        }
        let a = Grading::new(IntMatrix::from_rows(r, &rows).unwrap()).unwrap();
        if a.kernel_rank() <= 1 {
            return a;
        }
    }
}

/// Columns `(a_i, extra)` with extra rows of entries at most 2; `pi` keeps the top block.
fn random_side(rng: &mut ChaCha8Rng, a: &Grading) -> VectorConfiguration {
    let sizes: Vec<usize> = (0..a.r()).map(|_| rng.gen_range(1..=3)).collect();
    let extra = rng.gen_range(0..=2);
    let vars = GradedVariableSet::class_major(&sizes).unwrap();
    let d = a.dim();
    let cols: Vec<Vec<i64>> = vars
        .labels()
        .iter()
        .map(|l| {
            let mut c = a.column(l.class);
            c.extend((0..extra).map(|_| rng.gen_range(0..=2i64)));
            c
        })
        .collect();
    let b = IntMatrix::from_columns(d + extra, &cols).unwrap();
    let mut pi = IntMatrix::zeros(d, d + extra);
    for i in 0..d {
        pi.set(i, i, 1);
    }
    VectorConfiguration::new(vars, b, a.clone(), Some(pi)).unwrap()
}

fn random_product(seed: u64) -> ProductConfiguration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_grading(&mut rng);
    let left = random_side(&mut rng, &a);
    let right = random_side(&mut rng, &a);
    product_config(&left, &right, &a).unwrap()
}

struct Bases {
    f: MoveSet,
    g: MoveSet,
    ft: MoveSet,
    gt: MoveSet,
}

fn bases(p: &ProductConfiguration) -> Bases {
    let tilde = tilde_extend(p).unwrap();
    Bases {
        f: markov_basis(p.left()).unwrap().basis,
        g: markov_basis(p.right()).unwrap().basis,
        ft: markov_basis(&tilde.tilde_left).unwrap().basis,
        gt: markov_basis(&tilde.tilde_right).unwrap().basis,
    }
}

fn bound_for(b: &Bases) -> u64 {
    default_cpp_bound(&b.f, &b.g).min(MAX_BOUND)
}

#[test]
fn glued_graph_equals_intersection() {
    let mut checked = 0;
    for seed in 0..CASES {
        let p = random_product(seed);
        let b = bases(&p);
        let glue = glue_sets(&b.f, &b.g, &p, DEFAULT_GLUE_CAP).unwrap();
        let report = cpp_check(&b.f, &b.g, &p, bound_for(&b), Some(&glue), 200_000).unwrap();
        assert_eq!(report.lemma_mismatch, None, "seed {seed}");
        checked += report.lemma_checked;
    }
    assert!(checked > 0);
}

#[test]
fn assembly_verifies_exactly_when_projections_are_compatible() {
    let (mut agree_true, mut agree_false) = (0, 0);
    for seed in 0..CASES {
        let p = random_product(seed);
        let b = bases(&p);
        let bound = bound_for(&b);
        let asm = assemble_from_tilde(&b.ft, &b.gt, &b.f, &b.g, &p, &AssembleOptions::default()).unwrap();
        let cpp = cpp_check(&b.f, &b.g, &p, bound, None, 200_000).unwrap();
        let v = verify_markov(p.product(), &asm.moves, bound).unwrap();
        assert_ne!(v.status, Status::Inconclusive, "seed {seed}");
        let verified = v.status == Status::Verified;
        assert_eq!(verified, cpp.holds, "seed {seed}: verify {:?}, cpp {:?}", v.status, cpp.witness);
        if verified {
            agree_true += 1;
        } else {
            agree_false += 1;
        }
    }
    eprintln!("compatible {agree_true}, refuted {agree_false}");
}

#[test]
fn constructed_moves_project_into_side_kernels() {
    for seed in 0..CASES {
        let p = random_product(seed);
        let b = bases(&p);
        let glue = glue_sets(&b.f, &b.g, &p, DEFAULT_GLUE_CAP).unwrap();
        let lifted_left = lift_moves(&b.ft, Side::Left, &p).unwrap();
        let lifted_right = lift_moves(&b.gt, Side::Right, &p).unwrap();
        for (src, set) in [(&b.ft, &lifted_left), (&b.gt, &lifted_right)] {
            let degrees: Vec<u32> = src.iter().map(Move::degree).collect();
            assert!(set.iter().all(|m| degrees.contains(&m.degree())), "seed {seed}");
        }
        let quads = quad_moves(&p);
        for m in glue.iter().chain(&lifted_left).chain(&lifted_right).chain(&quads) {
            assert!(m.in_kernel(p.product().matrix()).unwrap(), "seed {seed}");
            let x = Move::new(p.project_to(Side::Left, m.as_slice()));
            let y = Move::new(p.project_to(Side::Right, m.as_slice()));
            assert!(x.in_kernel(p.left().matrix()).unwrap(), "seed {seed}");
            assert!(y.in_kernel(p.right().matrix()).unwrap(), "seed {seed}");
        }
    }
}

#[test]
fn codimension_zero_products_need_no_glue_check() {
    let mut seen = 0;
    for seed in 0..CASES {
        let p = random_product(seed);
        if p.codim() != 0 {
            continue;
        }
        seen += 1;
        let b = bases(&p);
        let report = cpp_check(&b.f, &b.g, &p, bound_for(&b), None, 200_000).unwrap();
        assert!(report.holds, "seed {seed}");
    }
    assert!(seen > 0);
}
