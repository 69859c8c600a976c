use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{LatticeError, Result};
use crate::matrix::IntMatrix;

/// An integer vector read as the binomial `x^plus - x^minus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move(Vec<i32>);

impl Move {
    pub fn new(v: Vec<i32>) -> Self {
        Move(v)
    }

    /// From `plus - minus` given as exponent vectors (common factors cancel).
    pub fn from_terms(plus: &[i32], minus: &[i32]) -> Result<Self> {
        plus.iter()
            .zip(minus)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Move)
            .ok_or(LatticeError::Overflow("move construction"))
    }

    pub fn from_i64(v: &[i64]) -> Result<Self> {
        v.iter()
            .map(|&x| i32::try_from(x).ok())
            .collect::<Option<Vec<_>>>()
            .map(Move)
            .ok_or(LatticeError::Overflow("move entry exceeds i32"))
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn plus(&self) -> Vec<i32> {
        self.0.iter().map(|&x| x.max(0)).collect()
    }

    pub fn minus(&self) -> Vec<i32> {
        self.0.iter().map(|&x| (-x).max(0)).collect()
    }

    /// Total degree of the positive part.
    pub fn degree(&self) -> u32 {
        self.0.iter().filter(|&&x| x > 0).map(|&x| x as u32).sum()
    }

    pub fn l1(&self) -> u32 {
        self.0.iter().map(|x| x.unsigned_abs()).sum()
    }

    pub fn neg(&self) -> Move {
        Move(self.0.iter().map(|&x| -x).collect())
    }

    /// Sign-normalized copy: first nonzero entry positive.
    pub fn canonical(&self) -> Move {
        match self.0.iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.0.iter().find(|&&x| x != 0).is_none_or(|&x| x > 0)
    }

    /// `B * v == 0`, with checked arithmetic.
    pub fn in_kernel(&self, b: &IntMatrix) -> Result<bool> {
        Ok(b.mul_vec(&self.0)?.iter().all(|&x| x == 0))
    }

    /// Applies the move to a point if the result stays nonnegative.
    pub fn apply(&self, point: &[i32]) -> Option<Vec<i32>> {
        let mut out = Vec::with_capacity(point.len());
        for (&p, &m) in point.iter().zip(&self.0) {
            let x = p.checked_add(m)?;
            if x < 0 {
                return None;
            }
            out.push(x);
        }
        Some(out)
    }
}

fn canonical_cmp(a: &Move, b: &Move) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0))
}

/// Deduplicated moves up to sign, ordered by degree then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MoveSet {
    moves: Vec<Move>,
}

impl MoveSet {
    pub fn new() -> Self {
        MoveSet::default()
    }

    pub fn from_moves<I: IntoIterator<Item = Move>>(moves: I) -> Self {
        let mut v: Vec<Move> = moves
            .into_iter()
            .filter(|m| !m.is_zero())
            .map(|m| m.canonical())
            .collect();
        v.sort_by(canonical_cmp);
        v.dedup();
        MoveSet { moves: v }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Move> {
        self.moves.iter()
    }

    pub fn as_slice(&self) -> &[Move] {
        &self.moves
    }

    pub fn get(&self, i: usize) -> &Move {
        &self.moves[i]
    }

    pub fn contains(&self, m: &Move) -> bool {
        let c = m.canonical();
        self.moves.binary_search_by(|x| canonical_cmp(x, &c)).is_ok()
    }

    /// Position of a move (either sign) in canonical order.
    pub fn position(&self, m: &Move) -> Option<usize> {
        let c = m.canonical();
        self.moves.binary_search_by(|x| canonical_cmp(x, &c)).ok()
    }

    pub fn union(&self, other: &MoveSet) -> MoveSet {
        MoveSet::from_moves(self.moves.iter().chain(other.moves.iter()).cloned())
    }

    pub fn max_degree(&self) -> u32 {
        self.moves.iter().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_histogram(&self) -> BTreeMap<u32, usize> {
        let mut h = BTreeMap::new();
        for m in &self.moves {
            *h.entry(m.degree()).or_insert(0) += 1;
        }
        h
    }

    /// Moves of degree strictly below `d`.
    pub fn below_degree(&self, d: u32) -> MoveSet {
        MoveSet {
            moves: self.moves.iter().filter(|m| m.degree() < d).cloned().collect(),
        }
    }

    /// First move outside `ker B`, if any.
    pub fn first_outside_kernel(&self, b: &IntMatrix) -> Result<Option<usize>> {
        for (i, m) in self.moves.iter().enumerate() {
            if !m.in_kernel(b)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

impl<'a> IntoIterator for &'a MoveSet {
    type Item = &'a Move;
    type IntoIter = std::slice::Iter<'a, Move>;
    fn into_iter(self) -> Self::IntoIter {
        self.moves.iter()
    }
}

impl FromIterator<Move> for MoveSet {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        MoveSet::from_moves(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts_are_disjoint() {
        let m = Move::new(vec![2, -1, 0, -1]);
        assert_eq!(m.plus(), vec![2, 0, 0, 0]);
        assert_eq!(m.minus(), vec![0, 1, 0, 1]);
        assert_eq!(m.degree(), 2);
    }

    #[test]
    fn set_dedups_signs_and_drops_zero() {
        let s = MoveSet::from_moves(vec![
            Move::new(vec![-1, 1, 0]),
            Move::new(vec![1, -1, 0]),
            Move::new(vec![0, 0, 0]),
            Move::new(vec![2, 0, -2]),
        ]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.get(0), &Move::new(vec![1, -1, 0]));
        assert!(s.contains(&Move::new(vec![-2, 0, 2])));
    }

    #[test]
    fn apply_respects_nonnegativity() {
        let m = Move::new(vec![1, -1]);
        assert_eq!(m.apply(&[0, 1]), Some(vec![1, 0]));
        assert_eq!(m.apply(&[1, 0]), None);
    }
}
