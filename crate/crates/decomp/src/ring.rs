use std::collections::BTreeMap;

use lattice_core::{GradedVariableSet, Grading, IntMatrix, Label};

use crate::error::{DecompError, Result};
use crate::poly::{Monomial, Polynomial};

/// Polynomial ring whose variables are grouped into the classes of a grading `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    vars: GradedVariableSet,
    grading: Grading,
    names: Vec<String>,
    class_vars: Vec<Vec<u32>>,
}

/// One multidegree `a` in `NA` and the class counts that realize it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree {
    pub a: Vec<i64>,
    pub coarse: u32,
    pub counts: Vec<Vec<u32>>,
}

impl Ring {
    pub fn new(vars: GradedVariableSet, grading: Grading, names: Option<Vec<String>>) -> Result<Self> {
        if vars.r() != grading.r() {
            return Err(DecompError::InvalidRing(format!(
                "{} classes but the grading has {} columns",
                vars.r(),
                grading.r()
            )));
        }
        if !grading.matrix().is_nonnegative() {
            return Err(DecompError::InvalidRing("grading entries must be nonnegative".into()));
        }
        let names = match names {
            Some(n) if n.len() == vars.len() => n,
            Some(n) => {
                return Err(DecompError::InvalidRing(format!(
                    "{} names for {} variables",
                    n.len(),
                    vars.len()
                )))
            }
            None => (0..vars.len()).map(|i| format!("x{i}")).collect(),
        };
        let mut class_vars = vec![Vec::new(); vars.r()];
        for (i, l) in vars.labels().iter().enumerate() {
            class_vars[l.class].push(i as u32);
        }
        Ok(Ring {
            vars,
            grading,
            names,
            class_vars,
        })
    }

    /// Class-major ring with `sizes[i]` variables in class `i`.
    pub fn class_major(sizes: &[usize], grading: Grading, names: Option<Vec<String>>) -> Result<Self> {
        Self::new(GradedVariableSet::class_major(sizes)?, grading, names)
    }

    /// Every variable its own class, graded by unit vectors.
    pub fn fine(names: &[&str]) -> Result<Self> {
        let n = names.len();
        Self::class_major(&vec![1; n], Grading::unit(n), Some(names.iter().map(|s| s.to_string()).collect()))
    }

    pub fn vars(&self) -> &GradedVariableSet {
        &self.vars
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn label(&self, v: u32) -> Label {
        self.vars.label(v as usize)
    }

    pub fn class_counts(&self, m: &[u32]) -> Vec<u32> {
        let mut c = vec![0u32; self.vars.r()];
        m.iter().for_each(|&v| c[self.label(v).class] += 1);
        c
    }

    pub fn multidegree(&self, m: &[u32]) -> Vec<i64> {
        self.degree_of_counts(&self.class_counts(m))
    }

    pub fn degree_of_counts(&self, counts: &[u32]) -> Vec<i64> {
        let a = self.grading.matrix();
        (0..a.rows())
            .map(|r| counts.iter().enumerate().map(|(i, &c)| a.get(r, i) * c as i64).sum())
            .collect()
    }

    /// Multidegree of a homogeneous polynomial; `None` when the terms disagree.
    pub fn homogeneous_degree(&self, p: &Polynomial) -> Option<Vec<i64>> {
        let mut degs = p.terms().iter().map(|t| self.multidegree(&t.mono));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// All multidegrees of coarse degree `1..=bound`, by coarse degree then `a`.
    pub fn degrees_up_to(&self, bound: u32) -> Vec<Degree> {
        let r = self.vars.r();
        let mut out = Vec::new();
        for d in 1..=bound {
            let mut by_a: BTreeMap<Vec<i64>, Vec<Vec<u32>>> = BTreeMap::new();
            for counts in compositions(d, r) {
                by_a.entry(self.degree_of_counts(&counts)).or_default().push(counts);
            }
            out.extend(by_a.into_iter().map(|(a, counts)| Degree { a, coarse: d, counts }));
        }
        out
    }

    /// The multidegree with the given class counts, and every count vector
    /// sharing its multidegree.
    pub fn degree_for_counts(&self, counts: &[u32]) -> Degree {
        let coarse: u32 = counts.iter().sum();
        let a = self.degree_of_counts(counts);
        let all = compositions(coarse, self.vars.r())
            .into_iter()
            .filter(|c| self.degree_of_counts(c) == a)
            .collect();
        Degree { a, coarse, counts: all }
    }

    /// Monomials with exactly `counts[i]` variables from class `i`, sorted.
    pub fn monomials_with_counts(&self, counts: &[u32]) -> Vec<Monomial> {
        let mut acc: Vec<Monomial> = vec![Vec::new()];
        for (i, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let part = multisets(&self.class_vars[i], c as usize);
            acc = acc
                .iter()
                .flat_map(|m| part.iter().map(move |p| crate::poly::mono_mul(m, p)))
                .collect();
        }
        acc.sort();
        acc
    }

    pub fn monomials(&self, degree: &Degree) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = degree.counts.iter().flat_map(|c| self.monomials_with_counts(c)).collect();
        out.sort();
        out
    }

    /// The same ring with variables renamed by `perm` (old index to new index)
    /// and relabeled by `vars`.
    pub fn permuted(&self, perm: &[usize], vars: GradedVariableSet, grading: Grading) -> Result<Ring> {
        if perm.len() != self.n() || vars.len() != self.n() {
            return Err(DecompError::InvalidRing("permutation length differs from the ring size".into()));
        }
        let mut names = vec![String::new(); self.n()];
        for (old, &new) in perm.iter().enumerate() {
            names[new] = self.names[old].clone();
        }
        Ring::new(vars, grading, Some(names))
    }

    pub fn linearly_independent(&self) -> bool {
        self.grading.kernel_rank() == 0
    }

    pub fn grading_rows(&self) -> Vec<Vec<i64>> {
        self.grading.matrix().to_rows()
    }

    pub fn grading_from_rows(r: usize, rows: &[Vec<i64>]) -> Result<Grading> {
        Ok(Grading::new(IntMatrix::from_rows(r, rows)?)?)
    }
}

/// All vectors of `parts` nonnegative entries summing to `total`.
pub(crate) fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for x in (0..=left).rev() {
            cur[i] = x;
            go(i + 1, left - x, cur, out);
        }
    }
    go(0, total, &mut cur, &mut out);
    out
}

/// Sorted multisets of size `k` from `items`.
fn multisets(items: &[u32], k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(items: &[u32], start: usize, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i, k, cur, out);
            cur.pop();
        }
    }
    go(items, 0, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        let ring = Ring::class_major(&[2, 3], Grading::unit(2), None).unwrap();
        let deg = ring.degree_for_counts(&[2, 1]);
        // 3 quadrics in class 0 times 3 variables of class 1.
        assert_eq!(ring.monomials(&deg).len(), 9);
        assert_eq!(ring.degrees_up_to(2).len(), 2 + 3);
    }

    #[test]
    fn coarse_grading_merges_counts() {
        let a = Ring::grading_from_rows(2, &[vec![1, 1]]).unwrap();
        let ring = Ring::class_major(&[1, 1], a, None).unwrap();
        let degs = ring.degrees_up_to(2);
        assert_eq!(degs.len(), 2);
        assert_eq!(degs[1].counts.len(), 3);
        assert_eq!(ring.monomials(&degs[1]).len(), 3);
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(multisets(&[0, 1, 2], 2).len(), 6);
    }
}
