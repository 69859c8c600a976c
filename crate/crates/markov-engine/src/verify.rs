use std::collections::BTreeSet;

use lattice_core::{components_from_edges, fiber_edges, FiberEnumerator, MoveSet, VectorConfiguration, DEFAULT_FIBER_CAP};
use rayon::prelude::*;

use crate::error::{MarkovError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Refuted,
    Inconclusive,
}

/// A disconnected fiber: its right-hand side and one point per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub rhs: Vec<i64>,
    pub degree: u64,
    pub representatives: Vec<Vec<i32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub bound_used: u64,
    pub fibers_checked: usize,
}

/// Twice the largest degree in the candidate set (at least 2).
pub fn default_bound(candidate: &MoveSet) -> u64 {
    (2 * candidate.max_degree() as u64).max(2)
}

/// Distinct images of monomials of each total degree `0..=bound`.
pub fn realizable_images(config: &VectorConfiguration, bound: u64) -> Result<Vec<BTreeSet<Vec<i64>>>> {
    let cols = config.matrix().columns();
    let mut levels = vec![BTreeSet::from([vec![0i64; config.matrix().rows()]])];
    for _ in 0..bound {
        let prev = levels.last().expect("level zero exists");
        let mut next = BTreeSet::new();
        for s in prev {
            for c in &cols {
                let v = s
                    .iter()
                    .zip(c)
                    .map(|(a, b)| a.checked_add(*b))
                    .collect::<Option<Vec<_>>>()
                    .ok_or(lattice_core::LatticeError::Overflow("image enumeration"))?;
                next.insert(v);
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

fn check_fiber(enumerator: &FiberEnumerator, rhs: &[i64], degree: u64, moves: &MoveSet) -> Result<Option<Witness>> {
    let points = enumerator.enumerate(rhs, degree)?;
    if points.len() <= 1 {
        return Ok(None);
    }
    let comps = components_from_edges(points.len(), &fiber_edges(&points, moves));
    if comps.len() <= 1 {
        return Ok(None);
    }
    Ok(Some(Witness {
        rhs: rhs.to_vec(),
        degree,
        representatives: comps.iter().map(|c| points[c[0]].clone()).collect(),
    }))
}

/// Checks that `candidate` connects every fiber of total degree at most `bound`.
pub fn verify_markov(config: &VectorConfiguration, candidate: &MoveSet, bound: u64) -> Result<Verdict> {
    verify_markov_with_cap(config, candidate, bound, DEFAULT_FIBER_CAP)
}

pub fn verify_markov_with_cap(
    config: &VectorConfiguration,
    candidate: &MoveSet,
    bound: u64,
    cap: usize,
) -> Result<Verdict> {
    config.degree_form()?;
    if let Some(index) = candidate.first_outside_kernel(config.matrix())? {
        return Err(MarkovError::NotInKernel { index });
    }
    let enumerator = FiberEnumerator::new(config.matrix(), cap);
    let mut checked = 0usize;
    let cols = config.matrix().columns();
    let mut level: BTreeSet<Vec<i64>> = BTreeSet::from([vec![0i64; config.matrix().rows()]]);
    for degree in 1..=bound {
        let mut next = BTreeSet::new();
        for s in &level {
            for c in &cols {
                let v = s
                    .iter()
                    .zip(c)
                    .map(|(a, b)| a.checked_add(*b))
                    .collect::<Option<Vec<_>>>()
                    .ok_or(lattice_core::LatticeError::Overflow("image enumeration"))?;
                next.insert(v);
            }
        }
        level = next;
        let rhs: Vec<&Vec<i64>> = level.iter().collect();
        let results: Vec<Result<Option<Witness>>> = rhs
            .par_iter()
            .map(|b| check_fiber(&enumerator, b, degree, candidate))
            .collect();
        for r in results {
            checked += 1;
            if let Some(w) = r? {
                return Ok(Verdict {
                    status: Status::Refuted,
                    witness: Some(w),
                    bound_used: bound,
                    fibers_checked: checked,
                });
            }
        }
    }
    Ok(Verdict {
        status: Status::Verified,
        witness: None,
        bound_used: bound,
        fibers_checked: checked,
    })
}

/// Index and disconnected fiber of the first `reference` move whose two
/// monomials `candidate` cannot connect. When `reference` is a Markov basis,
/// `None` means `candidate` is one too, with no degree bound involved.
pub fn covers_basis(
    config: &VectorConfiguration,
    candidate: &MoveSet,
    reference: &MoveSet,
    cap: usize,
) -> Result<Option<(usize, Witness)>> {
    if let Some(index) = candidate.first_outside_kernel(config.matrix())? {
        return Err(MarkovError::NotInKernel { index });
    }
    let enumerator = FiberEnumerator::new(config.matrix(), cap);
    let results: Vec<Result<Option<Witness>>> = reference
        .as_slice()
        .par_iter()
        .map(|m| {
            let (plus, minus) = (m.plus(), m.minus());
            let rhs = config.matrix().mul_vec(&plus)?;
            let degree = m.degree() as u64;
            let points = enumerator.enumerate(&rhs, degree)?;
            let comps = components_from_edges(points.len(), &fiber_edges(&points, candidate));
            let find = |p: &Vec<i32>| comps.iter().position(|c| c.iter().any(|&i| &points[i] == p));
            if find(&plus) == find(&minus) {
                return Ok(None);
            }
            Ok(Some(Witness {
                rhs,
                degree,
                representatives: comps.iter().map(|c| points[c[0]].clone()).collect(),
            }))
        })
        .collect();
    for (i, r) in results.into_iter().enumerate() {
        if let Some(w) = r? {
            return Ok(Some((i, w)));
        }
    }
    Ok(None)
}
