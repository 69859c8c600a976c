use std::collections::BTreeMap;

use lattice_core::{fiber_edges, FiberEnumerator, Move, MoveSet, VectorConfiguration, DEFAULT_FIBER_CAP};
use rayon::prelude::*;

use crate::error::{MarkovError, Result};

/// Minimal generators chosen from a generating set, with their degree counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSelection {
    pub basis: MoveSet,
    pub counts: BTreeMap<u32, usize>,
}

impl MinimalSelection {
    /// Largest degree with a nonzero count.
    pub fn mu(&self) -> u32 {
        self.counts.iter().rev().find(|(_, &c)| c > 0).map_or(0, |(&d, _)| d)
    }
}

struct Uf(Vec<usize>);

impl Uf {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Keeps the candidates of one fiber that join distinct components.
fn select_in_fiber(
    config: &VectorConfiguration,
    rhs: &[i64],
    degree: u64,
    candidates: &[&Move],
    lower: &MoveSet,
    cap: usize,
) -> Result<Vec<Move>> {
    let points = FiberEnumerator::new(config.matrix(), cap).enumerate(rhs, degree)?;
    let index: std::collections::HashMap<&[i32], usize> =
        points.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut uf = Uf((0..points.len()).collect());
    for (a, b) in fiber_edges(&points, lower) {
        uf.union(a, b);
    }
    let mut kept = Vec::new();
    for m in candidates {
        let (p, q) = (m.plus(), m.minus());
        let (Some(&a), Some(&b)) = (index.get(p.as_slice()), index.get(q.as_slice())) else {
            return Err(MarkovError::NotInKernel { index: 0 });
        };
        if uf.union(a, b) {
            kept.push((*m).clone());
        }
    }
    Ok(kept)
}

/// Selects a minimal generating subset of a Markov basis, degree by degree.
///
/// For each degree `D`, the fiber of every candidate of degree `D` is
/// partitioned by the moves already kept below `D`; a candidate is kept when
/// it joins two components. The count per fiber is therefore the component
/// count minus one.
pub fn select_minimal(config: &VectorConfiguration, candidates: &MoveSet, cap: usize) -> Result<MinimalSelection> {
    if let Some(index) = candidates.first_outside_kernel(config.matrix())? {
        return Err(MarkovError::NotInKernel { index });
    }
    let mut by_degree: BTreeMap<u32, BTreeMap<Vec<i64>, Vec<&Move>>> = BTreeMap::new();
    for m in candidates {
        let rhs = config.image(&m.plus())?;
        by_degree.entry(m.degree()).or_default().entry(rhs).or_default().push(m);
    }
    let mut kept: Vec<Move> = Vec::new();
    let mut counts = BTreeMap::new();
    for (degree, fibers) in by_degree {
        let lower = MoveSet::from_moves(kept.iter().cloned());
        let fibers: Vec<(Vec<i64>, Vec<&Move>)> = fibers.into_iter().collect();
        let chosen: Vec<Result<Vec<Move>>> = fibers
            .par_iter()
            .map(|(rhs, cands)| select_in_fiber(config, rhs, degree as u64, cands, &lower, cap))
            .collect();
        let mut count = 0;
        for c in chosen {
            let c = c?;
            count += c.len();
            kept.extend(c);
        }
        counts.insert(degree, count);
    }
    Ok(MinimalSelection {
        basis: MoveSet::from_moves(kept),
        counts,
    })
}

/// Minimal generator counts per degree and the Markov width of a Markov basis.
pub fn minimal_degrees(config: &VectorConfiguration, basis: &MoveSet) -> Result<(BTreeMap<u32, usize>, u32)> {
    let sel = select_minimal(config, basis, DEFAULT_FIBER_CAP)?;
    let mu = sel.mu();
    let counts = sel.counts.into_iter().filter(|(_, c)| *c > 0).collect();
    Ok((counts, mu))
}
