//! Global Markov models of graphs and their splits along clique separators.

use std::collections::BTreeSet;

use decomp::{MonomialSpace, Piece};
use hierarchical::MarkovGraph;
use rayon::prelude::*;

use crate::error::{CiError, Result};
use crate::fiber::{ci_tfp, SeparatorRing};
use crate::generators::model_polynomials;
use crate::statement::{CIModel, CIStatement};

/// Largest graph accepted by separation enumeration.
pub const MAX_GRAPH_VERTICES: usize = 8;

fn labels(g: &MarkovGraph, positions: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    positions.into_iter().map(|p| g.label(p)).collect()
}

/// Levels of `g`'s vertices, in position order, as a model skeleton.
fn empty_model(g: &MarkovGraph, levels: &[usize], statements: Vec<CIStatement>) -> Result<CIModel> {
    if levels.len() != g.n() {
        return Err(CiError::InvalidModel(format!("{} levels for {} vertices", levels.len(), g.n())));
    }
    CIModel::new(g.vertices().to_vec(), levels.to_vec(), statements)
}

/// Saturated statements `A ⊥ B | C` with `C` separating `A` from `B`,
/// dropping those that follow by weak union from one with a smaller `C`.
pub fn global_markov(g: &MarkovGraph, levels: &[usize]) -> Result<CIModel> {
    let n = g.n();
    if n > MAX_GRAPH_VERTICES {
        return Err(CiError::TooLarge {
            what: "graph for separation enumeration",
            size: n,
            limit: MAX_GRAPH_VERTICES,
        });
    }
    let all: Vec<CIStatement> = (0u32..1 << n)
        .into_par_iter()
        .flat_map_iter(|mask| {
            let c: Vec<usize> = (0..n).filter(|&p| mask >> p & 1 == 1).collect();
            let comps = g.components_without(&c);
            let k = comps.len();
            let cl = labels(g, c.iter().copied());
            // Component 0 always sits on the first side.
            (1u32..1 << (k.max(1) - 1))
                .map(|rest| {
                    let side = |first: bool| {
                        comps
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| (*i == 0 || rest >> (i - 1) & 1 == 0) == first)
                            .flat_map(|(_, comp)| labels(g, comp.iter().copied()))
                            .collect::<BTreeSet<usize>>()
                    };
                    CIStatement::new(side(true), side(false), cl.clone()).expect("disjoint by construction")
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let implied = |s: &CIStatement| {
        all.iter().any(|t| {
            t.c().len() < s.c().len()
                && t.c().is_subset(s.c())
                && ((t.a().is_superset(s.a()) && t.b().is_superset(s.b()))
                    || (t.a().is_superset(s.b()) && t.b().is_superset(s.a())))
        })
    };
    let kept: Vec<CIStatement> = all.iter().filter(|s| !implied(s)).cloned().collect();
    empty_model(g, levels, kept)
}

/// A split `V = V1 ∪ V2` along a clique separator `S = V1 ∩ V2`, with the
/// global Markov models of both induced subgraphs.
#[derive(Clone, Debug)]
pub struct GraphicalSplit {
    pub separator: BTreeSet<usize>,
    pub left: CIModel,
    pub right: CIModel,
}

impl GraphicalSplit {
    /// The CI product of the two sides.
    pub fn product(&self) -> Result<CIModel> {
        ci_tfp(&self.left, &self.right)
    }
}

fn positions_of(g: &MarkovGraph, set: &BTreeSet<usize>) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = set
        .iter()
        .map(|&v| {
            g.position(v)
                .ok_or_else(|| CiError::InvalidModel(format!("vertex {v} is not in the graph")))
        })
        .collect::<Result<_>>()?;
    out.sort_unstable();
    Ok(out)
}

/// Checks that `V1 ∩ V2` is a clique separating `V1∖V2` from `V2∖V1`.
pub fn graphical_split(g: &MarkovGraph, levels: &[usize], v1: &BTreeSet<usize>, v2: &BTreeSet<usize>) -> Result<GraphicalSplit> {
    let union: BTreeSet<usize> = v1.union(v2).copied().collect();
    if union != labels(g, 0..g.n()) {
        return Err(CiError::InvalidModel("the two vertex sets must cover the graph".into()));
    }
    let sep: BTreeSet<usize> = v1.intersection(v2).copied().collect();
    let sv: Vec<usize> = sep.iter().copied().collect();
    for (i, &a) in sv.iter().enumerate() {
        for &b in &sv[i + 1..] {
            if !g.has_edge(g.position(a).expect("vertex"), g.position(b).expect("vertex")) {
                return Err(CiError::NotClique(a, b));
            }
        }
    }
    for &(pa, pb) in g.edges() {
        let (a, b) = (g.label(pa), g.label(pb));
        let crosses = |x: usize, y: usize| !v2.contains(&x) && !v1.contains(&y);
        if crosses(a, b) || crosses(b, a) {
            return Err(CiError::NotSeparating(a, b));
        }
    }
    let side = |set: &BTreeSet<usize>| -> Result<CIModel> {
        let pos = positions_of(g, set)?;
        let sub = g.induced(&pos);
        let lv: Vec<usize> = pos.iter().map(|&p| levels[p]).collect();
        global_markov(&sub, &lv)
    };
    if levels.len() != g.n() {
        return Err(CiError::InvalidModel(format!("{} levels for {} vertices", levels.len(), g.n())));
    }
    Ok(GraphicalSplit {
        left: side(v1)?,
        right: side(v2)?,
        separator: sep,
    })
}

/// Result of comparing graded pieces of the global Markov ideal and of the
/// CI product of a split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceAgreement {
    pub bound: u32,
    pub degrees: usize,
    /// First multidegree where the pieces differ, as separator-state counts.
    pub mismatch: Option<Vec<u32>>,
}

impl PieceAgreement {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares the pieces of both ideals in every multidegree of coarse degree
/// at most `bound` in the separator grading.
pub fn split_agreement(g: &MarkovGraph, levels: &[usize], split: &GraphicalSplit, bound: u32) -> Result<PieceAgreement> {
    let whole = global_markov(g, levels)?;
    let sr = SeparatorRing::of(&whole, &split.separator)?;
    let ring = &sr.ring;
    let to_ring = |m: &CIModel| -> Result<Vec<decomp::Polynomial>> {
        Ok(model_polynomials(m)?.iter().map(|p| sr.to_ring(p)).collect())
    };
    let (a, b) = (to_ring(&whole)?, to_ring(&split.product()?)?);
    let degrees = ring.degrees_up_to(bound);
    let results: Vec<Result<bool>> = degrees
        .par_iter()
        .map(|deg| {
            let space = MonomialSpace::of_degree(ring, deg);
            let (pa, pb) = (Piece::build(ring, &space, deg, &a)?, Piece::build(ring, &space, deg, &b)?);
            Ok(pa.contained_in(&pb) && pb.contained_in(&pa))
        })
        .collect();
    let mut mismatch = None;
    for (deg, r) in degrees.iter().zip(results) {
        if !r? {
            mismatch = Some(deg.counts[0].clone());
            break;
        }
    }
    Ok(PieceAgreement {
        bound,
        degrees: degrees.len(),
        mismatch,
    })
}

/// Recursive splitting of a graph along clique separators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitTree {
    /// A subgraph without a clique separator, by vertex labels.
    Leaf(BTreeSet<usize>),
    Split {
        separator: BTreeSet<usize>,
        left: Box<SplitTree>,
        right: Box<SplitTree>,
    },
}

impl SplitTree {
    pub fn leaves(&self) -> Vec<&BTreeSet<usize>> {
        match self {
            SplitTree::Leaf(v) => vec![v],
            SplitTree::Split { left, right, .. } => {
                let mut out = left.leaves();
                out.extend(right.leaves());
                out
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            SplitTree::Leaf(_) => 0,
            SplitTree::Split { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }
}

/// The smallest clique separator, first in lexicographic order of positions,
/// with the component holding the least vertex and the rest.
fn clique_separator(g: &MarkovGraph) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut masks: Vec<u32> = (0u32..1 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
    masks.into_iter().find_map(|mask| {
        let c: Vec<usize> = (0..n).filter(|&p| mask >> p & 1 == 1).collect();
        let clique = c.iter().enumerate().all(|(i, &a)| c[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if !clique {
            return None;
        }
        let comps = g.components_without(&c);
        if comps.len() < 2 {
            return None;
        }
        let first = comps[0].clone();
        let rest: Vec<usize> = comps[1..].iter().flatten().copied().collect();
        Some((c, first, rest))
    })
}

/// Splits along clique separators until no piece has one.
pub fn clique_split_tree(g: &MarkovGraph) -> Result<SplitTree> {
    if g.n() > MAX_GRAPH_VERTICES * 2 {
        return Err(CiError::TooLarge {
            what: "graph for clique separator search",
            size: g.n(),
            limit: MAX_GRAPH_VERTICES * 2,
        });
    }
    let Some((c, first, rest)) = clique_separator(g) else {
        return Ok(SplitTree::Leaf(labels(g, 0..g.n())));
    };
    let side = |part: &[usize]| {
        let mut pos: Vec<usize> = c.iter().chain(part).copied().collect();
        pos.sort_unstable();
        clique_split_tree(&g.induced(&pos))
    };
    Ok(SplitTree::Split {
        separator: labels(g, c.iter().copied()),
        left: Box::new(side(&first)?),
        right: Box::new(side(&rest)?),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeVerdict {
    /// Every leaf is complete, so the ideal is a product of zero ideals.
    Prime,
    /// Some leaf is not complete; nothing is claimed.
    Undetermined,
}

pub fn prime_by_splitting(g: &MarkovGraph) -> Result<(SplitTree, PrimeVerdict)> {
    let tree = clique_split_tree(g)?;
    let complete = |leaf: &BTreeSet<usize>| {
        let pos: Vec<usize> = leaf.iter().map(|&v| g.position(v).expect("vertex")).collect();
        pos.iter().enumerate().all(|(i, &a)| pos[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    };
    let verdict = if tree.leaves().into_iter().all(complete) {
        PrimeVerdict::Prime
    } else {
        PrimeVerdict::Undetermined
    };
    Ok((tree, verdict))
}
