use std::collections::{BTreeMap, BTreeSet, HashMap};

use lattice_core::{
    connected_components, enumerate_fiber_with_cap, project_graph, MoveSet, ProjectionGraph, VectorConfiguration,
    DEFAULT_FIBER_CAP,
};
use markov_engine::realizable_images;
use rayon::prelude::*;

use crate::error::{Result, TfpError};
use crate::product::{ProductConfiguration, Side};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlowVarying {
    pub holds: bool,
    /// First move whose class image is not `0` or `+-h`.
    pub witness: Option<(Side, usize, Vec<i64>)>,
    /// Whether every move has 1-norm below `2 |h|_1`.
    pub norm_criterion: bool,
    pub h: Vec<i64>,
}

/// Exact slow-varying test against the primitive kernel generator of `A`.
pub fn slow_varying_check(f: &MoveSet, g: &MoveSet, product: &ProductConfiguration) -> Result<SlowVarying> {
    if product.codim() != 1 {
        return Err(TfpError::Codimension {
            expected: 1,
            found: product.codim(),
        });
    }
    let h = product.grading().kernel_generator().expect("codimension one").to_vec();
    let neg: Vec<i64> = h.iter().map(|x| -x).collect();
    let h_norm: u64 = h.iter().map(|x| x.unsigned_abs()).sum();
    let mut witness = None;
    let mut max_norm = 0u64;
    for (side, set) in [(Side::Left, f), (Side::Right, g)] {
        for (idx, m) in set.iter().enumerate() {
            max_norm = max_norm.max(m.l1() as u64);
            let img = product.gamma_side(side, m.as_slice());
            let ok = img.iter().all(|&x| x == 0) || img == h || img == neg;
            if !ok && witness.is_none() {
                witness = Some((side, idx, img));
            }
        }
    }
    Ok(SlowVarying {
        holds: witness.is_none(),
        witness,
        norm_criterion: max_norm < 2 * h_norm,
        h,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CppWitness {
    pub b: Vec<i64>,
    pub c: Vec<i64>,
    pub degree: u64,
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CppReport {
    pub holds: bool,
    pub bound: u64,
    pub pairs_checked: usize,
    pub witness: Option<CppWitness>,
    /// Pairs on which the glued product graph was compared with the intersection.
    pub lemma_checked: usize,
    /// First pair where the two graphs differ.
    pub lemma_mismatch: Option<(Vec<i64>, Vec<i64>)>,
}

/// `max degree of F and G + 2`.
pub fn default_cpp_bound(f: &MoveSet, g: &MoveSet) -> u64 {
    f.max_degree().max(g.max_degree()) as u64 + 2
}

fn side_graph(cfg: &VectorConfiguration, rhs: &[i64], moves: &MoveSet, gamma: &[usize], r: usize, cap: usize) -> Result<ProjectionGraph> {
    let fiber = enumerate_fiber_with_cap(cfg, rhs, cap)?;
    let fg = connected_components(&fiber, moves);
    Ok(project_graph(&fg, gamma, r))
}

fn pi_image(cfg: &VectorConfiguration, b: &[i64]) -> Result<Vec<i64>> {
    Ok(cfg.pi().expect("product sides carry pi").mul_vec(b)?)
}

/// Checks the compatible projection property on all matched pairs `(b, c)`
/// of total degree at most `bound`. When `glue` is given, also compares the
/// projected product graph under `glue` with the intersection graph.
pub fn cpp_check(
    f: &MoveSet,
    g: &MoveSet,
    product: &ProductConfiguration,
    bound: u64,
    glue: Option<&MoveSet>,
    cap: usize,
) -> Result<CppReport> {
    let (left, right) = (product.left(), product.right());
    let r = product.r();
    let gl = left.vars().classes();
    let gr = right.vars().classes();
    let gz = product.product().vars().classes();
    let lb = realizable_images(left, bound)?;
    let lc = realizable_images(right, bound)?;
    let mut report = CppReport {
        holds: true,
        bound,
        pairs_checked: 0,
        witness: None,
        lemma_checked: 0,
        lemma_mismatch: None,
    };
    for degree in 1..=bound as usize {
        let mut by_key: BTreeMap<Vec<i64>, (Vec<&Vec<i64>>, Vec<&Vec<i64>>)> = BTreeMap::new();
        for b in &lb[degree] {
            by_key.entry(pi_image(left, b)?).or_default().0.push(b);
        }
        for c in &lc[degree] {
            by_key.entry(pi_image(right, c)?).or_default().1.push(c);
        }
        let pairs: Vec<(&Vec<i64>, &Vec<i64>)> = by_key
            .values()
            .flat_map(|(bs, cs)| bs.iter().flat_map(move |b| cs.iter().map(move |c| (*b, *c))))
            .collect();
        let needed_b: BTreeSet<&Vec<i64>> = pairs.iter().map(|p| p.0).collect();
        let needed_c: BTreeSet<&Vec<i64>> = pairs.iter().map(|p| p.1).collect();
        let graphs_b: HashMap<&Vec<i64>, ProjectionGraph> = needed_b
            .into_par_iter()
            .map(|b| side_graph(left, b, f, &gl, r, cap).map(|pg| (b, pg)))
            .collect::<Result<_>>()?;
        let graphs_c: HashMap<&Vec<i64>, ProjectionGraph> = needed_c
            .into_par_iter()
            .map(|c| side_graph(right, c, g, &gr, r, cap).map(|pg| (c, pg)))
            .collect::<Result<_>>()?;
        let outcomes: Vec<Result<(usize, bool)>> = pairs
            .par_iter()
            .map(|(b, c)| {
                let inter = graphs_b[b].intersect(&graphs_c[c]);
                let comps = inter.component_count();
                let lemma_ok = match glue {
                    None => true,
                    Some(glue) => {
                        let mut rhs = (*b).clone();
                        rhs.extend(c.iter());
                        side_graph(product.product(), &rhs, glue, &gz, r, cap)? == inter
                    }
                };
                Ok((comps, lemma_ok))
            })
            .collect();
        for ((b, c), out) in pairs.iter().zip(outcomes) {
            let (comps, lemma_ok) = out?;
            report.pairs_checked += 1;
            if glue.is_some() {
                report.lemma_checked += 1;
                if !lemma_ok && report.lemma_mismatch.is_none() {
                    report.lemma_mismatch = Some(((*b).clone(), (*c).clone()));
                }
            }
            if comps > 1 && report.witness.is_none() {
                report.holds = false;
                report.witness = Some(CppWitness {
                    b: (*b).clone(),
                    c: (*c).clone(),
                    degree: degree as u64,
                    components: comps,
                });
            }
        }
        if report.witness.is_some() {
            break;
        }
    }
    Ok(report)
}

/// `cpp_check` with the default fiber cap.
pub fn cpp_check_default(f: &MoveSet, g: &MoveSet, product: &ProductConfiguration, bound: u64) -> Result<CppReport> {
    cpp_check(f, g, product, bound, None, DEFAULT_FIBER_CAP)
}
