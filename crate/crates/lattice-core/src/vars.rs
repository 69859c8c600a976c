use std::collections::HashMap;

use crate::error::{LatticeError, Result};

/// Position of a variable inside its grading class: `(i, j)` on a side,
/// `(i, j, k)` on a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub class: usize,
    pub j: usize,
    pub k: Option<usize>,
}

impl Label {
    pub fn pair(class: usize, j: usize) -> Self {
        Label { class, j, k: None }
    }

    pub fn triple(class: usize, j: usize, k: usize) -> Self {
        Label {
            class,
            j,
            k: Some(k),
        }
    }
}

/// Variables grouped into `r` grading classes. The flat order is arbitrary
/// but fixed; `index_of` inverts `label`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVariableSet {
    r: usize,
    sizes: Vec<usize>,
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl GradedVariableSet {
    /// Validates that the labels cover every class completely and without repeats.
    pub fn new(r: usize, labels: Vec<Label>) -> Result<Self> {
        if r == 0 {
            return Err(LatticeError::InvalidLabels("no grading classes".into()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.class >= r {
                return Err(LatticeError::InvalidLabels(format!("class {} out of range", l.class)));
            }
            if index.insert(*l, i).is_some() {
                return Err(LatticeError::InvalidLabels(format!("repeated label {l:?}")));
            }
        }
        let triples = labels.first().map(|l| l.k.is_some()).unwrap_or(false);
        if labels.iter().any(|l| l.k.is_some() != triples) {
            return Err(LatticeError::InvalidLabels("mixed pair and triple labels".into()));
        }
        let mut sizes = vec![0usize; r];
        let mut jmax = vec![0usize; r];
        let mut kmax = vec![0usize; r];
        for l in &labels {
            sizes[l.class] += 1;
            jmax[l.class] = jmax[l.class].max(l.j + 1);
            kmax[l.class] = kmax[l.class].max(l.k.map_or(1, |k| k + 1));
        }
        for i in 0..r {
            if sizes[i] == 0 {
                return Err(LatticeError::InvalidLabels(format!("class {i} is empty")));
            }
            if sizes[i] != jmax[i] * kmax[i] {
                return Err(LatticeError::InvalidLabels(format!(
                    "class {i} does not enumerate a full index range"
                )));
            }
        }
        Ok(GradedVariableSet {
            r,
            sizes,
            labels,
            index,
        })
    }

    /// Side variables `(i, j)` in class-major order.
    pub fn class_major(sizes: &[usize]) -> Result<Self> {
        let mut labels = Vec::new();
        for (i, &s) in sizes.iter().enumerate() {
            labels.extend((0..s).map(|j| Label::pair(i, j)));
        }
        Self::new(sizes.len(), labels)
    }

    /// Product variables `(i, j, k)` in class-major, then `j`, then `k` order.
    pub fn product(s: &[usize], t: &[usize]) -> Result<Self> {
        if s.len() != t.len() {
            return Err(LatticeError::DimensionMismatch {
                what: "class counts",
                expected: s.len(),
                found: t.len(),
            });
        }
        let mut labels = Vec::new();
        for i in 0..s.len() {
            for j in 0..s[i] {
                labels.extend((0..t[i]).map(|k| Label::triple(i, j, k)));
            }
        }
        Self::new(s.len(), labels)
    }

    /// All variables in a single class.
    pub fn single_class(n: usize) -> Result<Self> {
        Self::class_major(&[n])
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, idx: usize) -> Label {
        self.labels[idx]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn class_of(&self, idx: usize) -> usize {
        self.labels[idx].class
    }

    /// Class index of every variable, in flat order.
    pub fn classes(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l.class).collect()
    }

    /// Number of distinct `j` values in a class (equals `sizes[i]` for pair labels).
    pub fn j_count(&self, class: usize) -> usize {
        self.labels
            .iter()
            .filter(|l| l.class == class)
            .map(|l| l.j + 1)
            .max()
            .unwrap_or(0)
    }

    /// Class content of an exponent vector.
    pub fn class_content(&self, v: &[i32]) -> Vec<i64> {
        let mut out = vec![0i64; self.r];
        for (idx, &x) in v.iter().enumerate() {
            out[self.labels[idx].class] += x as i64;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_index_round_trip() {
        let vs = GradedVariableSet::product(&[2, 1], &[2, 3]).unwrap();
        assert_eq!(vs.len(), 7);
        assert_eq!(vs.sizes(), &[4, 3]);
        for i in 0..vs.len() {
            assert_eq!(vs.index_of(&vs.label(i)), Some(i));
        }
    }

    #[test]
    fn rejects_gaps_and_repeats() {
        assert!(GradedVariableSet::new(1, vec![Label::pair(0, 0), Label::pair(0, 0)]).is_err());
        assert!(GradedVariableSet::new(1, vec![Label::pair(0, 1)]).is_err());
        assert!(GradedVariableSet::new(2, vec![Label::pair(0, 0)]).is_err());
    }
}
