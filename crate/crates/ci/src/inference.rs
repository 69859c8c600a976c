//! Syntactic CI inference rules with a bounded algebraic confirmation.

use std::collections::BTreeSet;

use decomp::{MonomialSpace, Piece, Ring};
use lattice_core::Grading;

use crate::error::Result;
use crate::generators::{ci_generators, Cells};
use crate::statement::CIStatement;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// `A ⊥ B ∪ D | C` gives `A ⊥ B | C`.
    Decomposition,
    /// `A ⊥ B ∪ D | C` gives `A ⊥ B | C ∪ D`.
    WeakUnion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Identical after symmetry.
    Equal,
    /// The second statement follows from the first.
    Implies(Rule),
    /// The first statement follows from the second.
    ImpliedBy(Rule),
    /// `A ⊥ B | C ∪ D` and `A ⊥ D | C`. No containment is asserted.
    Contraction,
    Unrelated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inference {
    pub relation: Relation,
    /// Graded containment of the implied ideal in every degree up to the
    /// bound, when a containment is claimed.
    pub confirmed: Option<bool>,
    pub bound: u32,
}

type Triple = (BTreeSet<usize>, BTreeSet<usize>, BTreeSet<usize>);

fn orientations(s: &CIStatement) -> [Triple; 2] {
    [(s.a().clone(), s.b().clone(), s.c().clone()), s.swapped()]
}

/// The rule deriving `to` from `from` in one step.
fn derives(from: &CIStatement, to: &CIStatement) -> Option<Rule> {
    let (a2, b2, c2) = (to.a(), to.b(), to.c());
    for (x, y, c1) in orientations(from) {
        for (p, q) in [(a2, b2), (b2, a2)] {
            if *p != x || !q.is_subset(&y) || q.len() == y.len() {
                continue;
            }
            let dropped: BTreeSet<usize> = y.difference(q).copied().collect();
            if *c2 == c1 {
                return Some(Rule::Decomposition);
            }
            if *c2 == c1.union(&dropped).copied().collect() {
                return Some(Rule::WeakUnion);
            }
        }
    }
    None
}

/// `first = A ⊥ B | C ∪ D` and `second = A ⊥ D | C` in some orientation.
fn contraction(first: &CIStatement, second: &CIStatement) -> bool {
    orientations(first).iter().any(|(a1, b1, c1)| {
        orientations(second).iter().any(|(a2, d, c2)| {
            a1 == a2
                && c2.is_subset(c1)
                && *d == c1.difference(c2).copied().collect::<BTreeSet<usize>>()
                && !d.is_empty()
                && b1.is_disjoint(d)
        })
    })
}

/// Whether the ideal of `small` lies in that of `big` in every total degree
/// up to `bound`.
pub fn graded_containment(small: &CIStatement, big: &CIStatement, cells: &Cells, bound: u32) -> Result<bool> {
    let ring = Ring::class_major(&[cells.len()], Grading::unit(1), Some(cells.names()))?;
    let gs = ci_generators(small, cells)?.polynomials(cells)?;
    let gb = ci_generators(big, cells)?.polynomials(cells)?;
    for deg in ring.degrees_up_to(bound) {
        let space = MonomialSpace::of_degree(&ring, &deg);
        if !Piece::build(&ring, &space, &deg, &gs)?.contained_in(&Piece::build(&ring, &space, &deg, &gb)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Relates two statements over the cells `cells` and confirms claimed
/// containments up to `bound`.
pub fn ci_inference_check(first: &CIStatement, second: &CIStatement, cells: &Cells, bound: u32) -> Result<Inference> {
    let (relation, confirm) = if first == second {
        (Relation::Equal, None)
    } else if let Some(rule) = derives(first, second) {
        (Relation::Implies(rule), Some((second, first)))
    } else if let Some(rule) = derives(second, first) {
        (Relation::ImpliedBy(rule), Some((first, second)))
    } else if contraction(first, second) || contraction(second, first) {
        (Relation::Contraction, None)
    } else {
        (Relation::Unrelated, None)
    };
    let confirmed = match confirm {
        Some((small, big)) => Some(graded_containment(small, big, cells, bound)?),
        None => None,
    };
    Ok(Inference {
        relation,
        confirmed,
        bound,
    })
}
