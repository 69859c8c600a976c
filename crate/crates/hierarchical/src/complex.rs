use std::collections::BTreeSet;

use crate::error::{HierError, Result};

/// A simplicial complex given by its facets.
///
/// Vertices carry arbitrary labels; internally everything is addressed by
/// position in `vertices`. Facets are sorted position lists, kept in input
/// order after dropping non-maximal ones. Uncovered vertices get singleton
/// facets appended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    facets: Vec<Vec<usize>>,
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn maximal(faces: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        let dominated = faces
            .iter()
            .enumerate()
            .any(|(j, g)| (g.len() > f.len() && is_subset(f, g)) || (j < i && g == f));
        if !dominated {
            out.push(f.clone());
        }
    }
    out
}

impl SimplicialComplex {
    /// Facets are given by vertex labels.
    pub fn new(vertices: Vec<usize>, facets: &[Vec<usize>]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(*v) {
                return Err(HierError::InvalidComplex(format!("vertex {v} listed twice")));
            }
        }
        let mut pos_facets = Vec::with_capacity(facets.len());
        for f in facets {
            let mut p = Vec::with_capacity(f.len());
            for v in f {
                let idx = vertices
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| HierError::InvalidComplex(format!("facet vertex {v} is not a vertex")))?;
                p.push(idx);
            }
            p.sort_unstable();
            if p.windows(2).any(|w| w[0] == w[1]) {
                return Err(HierError::InvalidComplex(format!("facet {f:?} repeats a vertex")));
            }
            pos_facets.push(p);
        }
        Ok(Self::from_positions(vertices, pos_facets))
    }

    /// Facets are given by positions, which must be in range.
    pub fn from_positions(vertices: Vec<usize>, facets: Vec<Vec<usize>>) -> Self {
        let mut facets: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .filter(|f| !f.is_empty())
            .collect();
        let covered: BTreeSet<usize> = facets.iter().flatten().copied().collect();
        for v in 0..vertices.len() {
            if !covered.contains(&v) {
                facets.push(vec![v]);
            }
        }
        SimplicialComplex {
            vertices,
            facets: maximal(facets),
        }
    }

    /// The full simplex on `n` vertices labeled `0..n`.
    pub fn simplex(n: usize) -> Self {
        Self::from_positions((0..n).collect(), vec![(0..n).collect()])
    }

    /// All proper faces of the simplex on `n` vertices labeled `0..n`.
    pub fn simplex_boundary(n: usize) -> Self {
        let facets = (0..n).map(|skip| (0..n).filter(|&v| v != skip).collect()).collect();
        Self::from_positions((0..n).collect(), facets)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.vertices.iter().position(|&v| v == label)
    }

    pub fn positions(&self, labels: &[usize]) -> Result<Vec<usize>> {
        let mut out = labels
            .iter()
            .map(|&l| {
                self.position(l)
                    .ok_or_else(|| HierError::InvalidComplex(format!("{l} is not a vertex")))
            })
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn labels_of(&self, positions: &[usize]) -> Vec<usize> {
        positions.iter().map(|&p| self.vertices[p]).collect()
    }

    /// `face` is a sorted position list.
    pub fn is_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.n()
    }

    /// Subcomplex induced on the sorted positions `subset`, re-indexed in that order.
    pub fn induced(&self, subset: &[usize]) -> Self {
        let facets = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .filter_map(|v| subset.iter().position(|w| w == v))
                    .collect::<Vec<usize>>()
            })
            .collect();
        Self::from_positions(self.labels_of(subset), facets)
    }

    /// The complex with one more face (positions).
    pub fn with_face(&self, face: &[usize]) -> Self {
        let mut facets = self.facets.clone();
        facets.push(face.to_vec());
        Self::from_positions(self.vertices.clone(), facets)
    }

    /// Cone with a new apex appended as the last vertex.
    pub fn cone(&self, apex_label: usize) -> Self {
        let apex = self.n();
        let mut vertices = self.vertices.clone();
        vertices.push(apex_label);
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.push(apex);
                g
            })
            .collect();
        Self::from_positions(vertices, facets)
    }

    /// Nonempty non-faces as sorted position lists; `n` must be small.
    pub fn non_faces(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        (1u64..(1u64 << n))
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<usize>>())
            .filter(|s| !self.is_face(s))
            .collect()
    }
}
