//! Generators of the toric ideal from a lattice basis.
//!
//! The ideal of the lattice basis is saturated one variable at a time. For
//! variable `t` a Groebner basis is computed in graded reverse lexicographic
//! order with `x_t` smallest; binomials are kept as exponent vectors with
//! common factors cancelled, so the division by `x_t` happens implicitly.
//! Variables that a unit pivot confines to one basis vector are skipped.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use lattice_core::{kernel_basis, Move, MoveSet, VectorConfiguration};

use crate::error::{MarkovError, Result};

#[derive(Clone, Debug)]
pub struct CompletionOptions {
    /// Maximum number of S-pairs reduced per saturation step.
    pub max_pairs: usize,
    /// Maximum size of an intermediate Groebner basis.
    pub max_generators: usize,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions {
            max_pairs: 50_000_000,
            max_generators: 500_000,
        }
    }
}

fn support_mask(v: &[i32], positive: bool) -> Vec<u64> {
    let mut mask = vec![0u64; v.len().div_ceil(64)];
    fill_mask(&mut mask, v, positive);
    mask
}

fn fill_mask(mask: &mut [u64], v: &[i32], positive: bool) {
    mask.iter_mut().for_each(|w| *w = 0);
    for (i, &x) in v.iter().enumerate() {
        if (positive && x > 0) || (!positive && x < 0) {
            mask[i / 64] |= 1 << (i % 64);
        }
    }
}

fn mask_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn masks_disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

/// Orients `v` so its lead term is `v+` in the order with `t` smallest.
/// Returns false for the zero vector.
fn orient(v: &mut [i32], t: usize) -> bool {
    let last = if v[t] != 0 {
        Some(v[t])
    } else {
        v.iter().enumerate().rev().find(|&(i, &x)| i != t && x != 0).map(|(_, &x)| x)
    };
    match last {
        None => false,
        Some(x) => {
            if x > 0 {
                v.iter_mut().for_each(|y| *y = -*y);
            }
            true
        }
    }
}

fn plus_le(g: &[i32], s: &[i32]) -> bool {
    g.iter().zip(s).all(|(&a, &b)| a <= 0 || a <= b)
}

/// `g+ <= s-` componentwise.
fn plus_le_minus(g: &[i32], s: &[i32]) -> bool {
    g.iter().zip(s).all(|(&a, &b)| a <= 0 || a <= -b)
}

fn sub_in_place(a: &mut [i32], b: &[i32]) -> Result<()> {
    for (x, &y) in a.iter_mut().zip(b) {
        *x = x
            .checked_sub(y)
            .ok_or(MarkovError::Lattice(lattice_core::LatticeError::Overflow("binomial reduction")))?;
    }
    Ok(())
}

fn sub(a: &[i32], b: &[i32]) -> Result<Vec<i32>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y))
        .collect::<Option<Vec<_>>>()
        .ok_or(MarkovError::Lattice(lattice_core::LatticeError::Overflow("binomial reduction")))
}

fn add(a: &[i32], b: &[i32]) -> Result<Vec<i32>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y))
        .collect::<Option<Vec<_>>>()
        .ok_or(MarkovError::Lattice(lattice_core::LatticeError::Overflow("binomial reduction")))
}

struct Binomial {
    v: Vec<i32>,
    lead: Vec<u64>,
}

impl Binomial {
    fn new(v: Vec<i32>) -> Self {
        let lead = support_mask(&v, true);
        Binomial { v, lead }
    }
}

fn lcm_degree(a: &[i32], b: &[i32]) -> u32 {
    a.iter().zip(b).map(|(&x, &y)| x.max(y).max(0) as u32).sum()
}

struct Completion<'a> {
    t: usize,
    basis: Vec<Binomial>,
    queue: BinaryHeap<Reverse<(u32, usize, usize)>>,
    /// `pending[j]` has bit `i` set while the pair `(i, j)`, `i < j`, is queued.
    pending: Vec<Vec<u64>>,
    opts: &'a CompletionOptions,
}

impl<'a> Completion<'a> {
    fn reduce(&self, mut s: Vec<i32>) -> Result<Option<Vec<i32>>> {
        if !orient(&mut s, self.t) {
            return Ok(None);
        }
        let mut mask = support_mask(&s, true);
        loop {
            let reducer = self
                .basis
                .iter()
                .find(|g| mask_subset(&g.lead, &mask) && plus_le(&g.v, &s));
            match reducer {
                None => return Ok(Some(s)),
                Some(g) => {
                    sub_in_place(&mut s, &g.v)?;
                    if !orient(&mut s, self.t) {
                        return Ok(None);
                    }
                    fill_mask(&mut mask, &s, true);
                }
            }
        }
    }

    fn push(&mut self, v: Vec<i32>) -> Result<()> {
        let k = self.basis.len();
        if k >= self.opts.max_generators {
            return Err(MarkovError::Budget {
                what: "intermediate generators",
                limit: self.opts.max_generators,
            });
        }
        let b = Binomial::new(v);
        let mut bits = vec![0u64; k.div_ceil(64)];
        for (i, g) in self.basis.iter().enumerate() {
            if masks_disjoint(&g.lead, &b.lead) {
                continue;
            }
            self.queue.push(Reverse((lcm_degree(&g.v, &b.v), i, k)));
            bits[i / 64] |= 1 << (i % 64);
        }
        self.pending.push(bits);
        self.basis.push(b);
        Ok(())
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        let (i, j) = (a.min(b), a.max(b));
        self.pending[j][i / 64] >> (i % 64) & 1 == 1
    }

    /// Chain criterion: some lead divides the lcm and both side pairs are done.
    fn chain_skip(&self, i: usize, j: usize) -> bool {
        let (gi, gj) = (&self.basis[i], &self.basis[j]);
        self.basis.iter().enumerate().any(|(k, gk)| {
            k != i
                && k != j
                && gk
                    .lead
                    .iter()
                    .zip(gi.lead.iter().zip(&gj.lead))
                    .all(|(c, (a, b))| c & !(a | b) == 0)
                && !self.is_pending(i, k)
                && !self.is_pending(j, k)
                && gk
                    .v
                    .iter()
                    .zip(gi.v.iter().zip(&gj.v))
                    .all(|(&c, (&a, &b))| c <= 0 || c <= a.max(b))
        })
    }

    fn run(&mut self, gens: Vec<Vec<i32>>) -> Result<()> {
        for g in gens {
            if let Some(r) = self.reduce(g)? {
                self.push(r)?;
            }
        }
        let mut processed = 0usize;
        while let Some(Reverse((_, i, j))) = self.queue.pop() {
            self.pending[j][i / 64] &= !(1 << (i % 64));
            if self.chain_skip(i, j) {
                continue;
            }
            processed += 1;
            if processed > self.opts.max_pairs {
                return Err(MarkovError::Budget {
                    what: "S-pairs",
                    limit: self.opts.max_pairs,
                });
            }
            let s = sub(&self.basis[j].v, &self.basis[i].v)?;
            if let Some(r) = self.reduce(s)? {
                self.push(r)?;
            }
        }
        Ok(())
    }

    /// Drops elements with reducible leads and reduces the remaining tails.
    fn finish(self) -> Result<Vec<Vec<i32>>> {
        let t = self.t;
        let n = self.basis.len();
        let mut keep = vec![true; n];
        for a in 0..n {
            for b in 0..n {
                if a == b || !keep[b] {
                    continue;
                }
                let (ga, gb) = (&self.basis[a], &self.basis[b]);
                if mask_subset(&gb.lead, &ga.lead) && plus_le(&gb.v, &ga.v) {
                    let equal = ga.v.iter().zip(&gb.v).all(|(&x, &y)| x.max(0) == y.max(0));
                    if !equal || b < a {
                        keep[a] = false;
                        break;
                    }
                }
            }
        }
        let reducers: Vec<&Binomial> = self.basis.iter().zip(&keep).filter(|(_, &k)| k).map(|(g, _)| g).collect();
        let mut out = Vec::with_capacity(reducers.len());
        for g in &reducers {
            let mut v = g.v.clone();
            let mut steps = 0usize;
            while let Some(h) = reducers
                .iter()
                .find(|h| !std::ptr::eq(**h, *g) && plus_le_minus(&h.v, &v))
            {
                v = add(&v, &h.v)?;
                if !orient(&mut v, t) {
                    break;
                }
                steps += 1;
                if steps > 100_000 {
                    return Err(MarkovError::Budget {
                        what: "tail reduction steps",
                        limit: 100_000,
                    });
                }
            }
            if v.iter().any(|&x| x != 0) {
                out.push(v);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

fn saturate_at(gens: Vec<Vec<i32>>, t: usize, opts: &CompletionOptions) -> Result<Vec<Vec<i32>>> {
    let mut c = Completion {
        t,
        basis: Vec::new(),
        queue: BinaryHeap::new(),
        pending: Vec::new(),
        opts,
    };
    c.run(gens)?;
    c.finish()
}

/// Row operations on a lattice basis pivoting on entries of absolute value one.
/// Returns the coordinates that end up in exactly one basis vector.
///
/// A walk between the two sides of a lattice vector can be ordered so each
/// such coordinate changes monotonically, so these variables need no saturation.
fn unit_pivots(basis: &mut [Vec<i32>]) -> Result<Vec<bool>> {
    let n = basis.first().map_or(0, |b| b.len());
    let mut single = vec![false; n];
    let overflow = || MarkovError::Lattice(lattice_core::LatticeError::Overflow("unit pivoting"));
    for r in 0..basis.len() {
        // Prefer the unit entry whose column is sparsest among the other rows.
        let pick = (0..n)
            .filter(|&c| !single[c] && basis[r][c].abs() == 1)
            .min_by_key(|&c| (basis.iter().filter(|b| b[c] != 0).count(), c));
        let Some(c) = pick else { continue };
        if basis[r][c] < 0 {
            basis[r].iter_mut().for_each(|x| *x = -*x);
        }
        let row = basis[r].clone();
        for (k, b) in basis.iter_mut().enumerate() {
            let q = b[c];
            if k == r || q == 0 {
                continue;
            }
            for (x, &y) in b.iter_mut().zip(&row) {
                *x = y.checked_mul(q).and_then(|p| x.checked_sub(p)).ok_or_else(overflow)?;
            }
        }
        single[c] = true;
    }
    Ok(single)
}

/// A generating set of the toric ideal of `config` (not necessarily minimal).
pub fn generating_set(config: &VectorConfiguration, opts: &CompletionOptions) -> Result<MoveSet> {
    config.degree_form()?;
    let seed = kernel_basis(config)?;
    let mut gens: Vec<Vec<i32>> = seed.iter().map(|m| m.as_slice().to_vec()).collect();
    if gens.is_empty() {
        return Ok(MoveSet::new());
    }
    let single = unit_pivots(&mut gens)?;
    for t in (0..config.n()).filter(|&t| !single[t]) {
        gens = saturate_at(gens, t, opts)?;
    }
    Ok(MoveSet::from_moves(gens.into_iter().map(Move::new)))
}
