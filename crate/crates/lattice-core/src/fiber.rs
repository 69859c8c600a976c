use std::collections::{BTreeSet, HashMap};

use crate::config::VectorConfiguration;
use crate::error::{LatticeError, Result};
use crate::matrix::IntMatrix;
use crate::moves::MoveSet;

pub const DEFAULT_FIBER_CAP: usize = 250_000;

/// All lattice points `u >= 0` with `B u = rhs`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub rhs: Vec<i64>,
    pub points: Vec<Vec<i32>>,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Depth-first enumerator with per-row range pruning.
///
/// For each position `k` and row `r`, `suffix_min[k][r]` and
/// `suffix_max[k][r]` bound the entries of row `r` over columns `k..n`, so a
/// residual is reachable with `d` more units only if it lies in
/// `[d * min, d * max]`.
pub struct FiberEnumerator<'a> {
    b: &'a IntMatrix,
    cols: Vec<Vec<i64>>,
    suffix_min: Vec<Vec<i64>>,
    suffix_max: Vec<Vec<i64>>,
    cap: usize,
}

impl<'a> FiberEnumerator<'a> {
    pub fn new(b: &'a IntMatrix, cap: usize) -> Self {
        let n = b.cols();
        let m = b.rows();
        let cols = b.columns();
        let mut suffix_min = vec![vec![0i64; m]; n + 1];
        let mut suffix_max = vec![vec![0i64; m]; n + 1];
        for k in (0..n).rev() {
            for r in 0..m {
                let x = cols[k][r];
                if k == n - 1 {
                    suffix_min[k][r] = x;
                    suffix_max[k][r] = x;
                } else {
                    suffix_min[k][r] = x.min(suffix_min[k + 1][r]);
                    suffix_max[k][r] = x.max(suffix_max[k + 1][r]);
                }
            }
        }
        FiberEnumerator {
            b,
            cols,
            suffix_min,
            suffix_max,
            cap,
        }
    }

    /// Points of total degree `degree` mapping to `rhs`.
    pub fn enumerate(&self, rhs: &[i64], degree: u64) -> Result<Vec<Vec<i32>>> {
        let n = self.b.cols();
        let mut out = Vec::new();
        if n == 0 {
            if degree == 0 && rhs.iter().all(|&x| x == 0) {
                out.push(Vec::new());
            }
            return Ok(out);
        }
        let degree = i64::try_from(degree).map_err(|_| LatticeError::Overflow("fiber degree"))?;
        let max_entry = self.cols.iter().flatten().map(|x| x.unsigned_abs()).max().unwrap_or(0);
        let max_rhs = rhs.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
        let bound = (degree as u64).checked_mul(max_entry).and_then(|x| x.checked_add(max_rhs));
        if bound.is_none_or(|b| b > (i64::MAX as u64) / 4) {
            return Err(LatticeError::Overflow("fiber enumeration"));
        }
        let mut point = vec![0i32; n];
        let mut residual = rhs.to_vec();
        self.dfs(0, degree, &mut residual, &mut point, &mut out, rhs)?;
        out.sort();
        Ok(out)
    }

    fn feasible(&self, k: usize, remaining: i64, residual: &[i64]) -> bool {
        let lo = &self.suffix_min[k];
        let hi = &self.suffix_max[k];
        residual
            .iter()
            .zip(lo.iter().zip(hi))
            .all(|(&x, (&a, &b))| x >= remaining * a && x <= remaining * b)
    }

    fn dfs(
        &self,
        k: usize,
        remaining: i64,
        residual: &mut Vec<i64>,
        point: &mut Vec<i32>,
        out: &mut Vec<Vec<i32>>,
        rhs: &[i64],
    ) -> Result<()> {
        let n = self.cols.len();
        if !self.feasible(k, remaining, residual) {
            return Ok(());
        }
        let col = &self.cols[k];
        if k == n - 1 {
            if residual.iter().zip(col).all(|(&x, &c)| x == remaining * c) {
                point[k] = i32::try_from(remaining).map_err(|_| LatticeError::Overflow("fiber point"))?;
                if out.len() >= self.cap {
                    return Err(LatticeError::FiberTooLarge {
                        rhs: rhs.to_vec(),
                        cap: self.cap,
                    });
                }
                out.push(point.clone());
                point[k] = 0;
            }
            return Ok(());
        }
        for val in (0..=remaining).rev() {
            for (x, &c) in residual.iter_mut().zip(col) {
                *x -= val * c;
            }
            point[k] = val as i32;
            self.dfs(k + 1, remaining - val, residual, point, out, rhs)?;
            for (x, &c) in residual.iter_mut().zip(col) {
                *x += val * c;
            }
        }
        point[k] = 0;
        Ok(())
    }
}

/// Enumerates the fiber over `rhs` with the default point cap.
pub fn enumerate_fiber(config: &VectorConfiguration, rhs: &[i64]) -> Result<Fiber> {
    enumerate_fiber_with_cap(config, rhs, DEFAULT_FIBER_CAP)
}

pub fn enumerate_fiber_with_cap(config: &VectorConfiguration, rhs: &[i64], cap: usize) -> Result<Fiber> {
    let points = match config.coarse_degree(rhs)? {
        Some(d) => FiberEnumerator::new(config.matrix(), cap).enumerate(rhs, d)?,
        None => Vec::new(),
    };
    Ok(Fiber {
        rhs: rhs.to_vec(),
        points,
    })
}

/// A fiber together with the edges induced by a move set.
#[derive(Clone, Debug)]
pub struct FiberGraph {
    pub fiber: Fiber,
    pub moves: MoveSet,
    /// Index pairs `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Components as sorted index lists, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
}

impl FiberGraph {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }

    /// Component index of every point.
    pub fn component_of(&self) -> Vec<usize> {
        let mut of = vec![0usize; self.fiber.len()];
        for (c, comp) in self.components.iter().enumerate() {
            for &p in comp {
                of[p] = c;
            }
        }
        of
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Edges of the fiber graph: pairs of points differing by a move (either sign).
pub fn fiber_edges(points: &[Vec<i32>], moves: &MoveSet) -> Vec<(usize, usize)> {
    let index: HashMap<&[i32], usize> = points.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for m in moves {
            for cand in [m.apply(p), m.neg().apply(p)].into_iter().flatten() {
                if let Some(&j) = index.get(cand.as_slice()) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Groups indices `0..n` into components from an edge list.
pub fn components_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    for &(a, b) in edges {
        uf.union(a, b);
    }
    let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..n {
        by_root.entry(uf.find(i)).or_default().push(i);
    }
    let mut comps: Vec<Vec<usize>> = by_root.into_values().collect();
    comps.sort_by_key(|c| c[0]);
    comps
}

pub fn connected_components(fiber: &Fiber, moves: &MoveSet) -> FiberGraph {
    let edges = fiber_edges(&fiber.points, moves);
    let components = components_from_edges(fiber.len(), &edges);
    FiberGraph {
        fiber: fiber.clone(),
        moves: moves.clone(),
        edges,
        components,
    }
}

/// Image of a fiber graph under a variable-to-class map, as a graph on `Z^r`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProjectionGraph {
    pub vertices: BTreeSet<Vec<i64>>,
    /// Unordered edges stored with the smaller endpoint first; loops dropped.
    pub edges: BTreeSet<(Vec<i64>, Vec<i64>)>,
}

impl ProjectionGraph {
    pub fn intersect(&self, other: &ProjectionGraph) -> ProjectionGraph {
        ProjectionGraph {
            vertices: self.vertices.intersection(&other.vertices).cloned().collect(),
            edges: self.edges.intersection(&other.edges).cloned().collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn component_count(&self) -> usize {
        let verts: Vec<&Vec<i64>> = self.vertices.iter().collect();
        let index: HashMap<&Vec<i64>, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut uf = UnionFind::new(verts.len());
        for (a, b) in &self.edges {
            if let (Some(&i), Some(&j)) = (index.get(a), index.get(b)) {
                uf.union(i, j);
            }
        }
        (0..verts.len()).filter(|&i| uf.find(i) == i).count()
    }
}

/// Projects points by summing exponents per class.
pub fn project_point(point: &[i32], gamma: &[usize], r: usize) -> Vec<i64> {
    let mut out = vec![0i64; r];
    for (&x, &c) in point.iter().zip(gamma) {
        out[c] += x as i64;
    }
    out
}

pub fn project_graph(fg: &FiberGraph, gamma: &[usize], r: usize) -> ProjectionGraph {
    let images: Vec<Vec<i64>> = fg.fiber.points.iter().map(|p| project_point(p, gamma, r)).collect();
    let vertices = images.iter().cloned().collect();
    let mut edges = BTreeSet::new();
    for &(a, b) in &fg.edges {
        let (u, v) = (&images[a], &images[b]);
        if u == v {
            continue;
        }
        if u < v {
            edges.insert((u.clone(), v.clone()));
        } else {
            edges.insert((v.clone(), u.clone()));
        }
    }
    ProjectionGraph { vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::Move;

    fn independence() -> VectorConfiguration {
        let m = IntMatrix::from_rows(
            4,
            &[vec![1, 1, 0, 0], vec![0, 0, 1, 1], vec![1, 0, 1, 0], vec![0, 1, 0, 1]],
        )
        .unwrap();
        VectorConfiguration::plain(m).unwrap()
    }

    #[test]
    fn fibers_of_a_row_of_ones() {
        let cfg = VectorConfiguration::plain(IntMatrix::from_rows(2, &[vec![1, 1]]).unwrap()).unwrap();
        let f = enumerate_fiber(&cfg, &[2]).unwrap();
        assert_eq!(f.points, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(enumerate_fiber(&cfg, &[0]).unwrap().points, vec![vec![0, 0]]);
        assert!(enumerate_fiber(&cfg, &[-1]).unwrap().is_empty());
    }

    #[test]
    fn independence_fiber_and_components() {
        let cfg = independence();
        let f = enumerate_fiber(&cfg, &[1, 1, 1, 1]).unwrap();
        assert_eq!(f.points, vec![vec![0, 1, 1, 0], vec![1, 0, 0, 1]]);
        let with = connected_components(&f, &MoveSet::from_moves(vec![Move::new(vec![1, -1, -1, 1])]));
        assert_eq!(with.component_count(), 1);
        let without = connected_components(&f, &MoveSet::new());
        assert_eq!(without.component_count(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = VectorConfiguration::plain(IntMatrix::from_rows(3, &[vec![1, 1, 1]]).unwrap()).unwrap();
        let err = enumerate_fiber_with_cap(&cfg, &[10], 5).unwrap_err();
        assert!(matches!(err, LatticeError::FiberTooLarge { cap: 5, .. }));
    }

    #[test]
    fn projection_of_single_point() {
        let cfg = independence();
        let f = enumerate_fiber(&cfg, &[1, 0, 1, 0]).unwrap();
        let g = connected_components(&f, &MoveSet::new());
        let p = project_graph(&g, &[0, 1, 0, 1], 2);
        assert_eq!(p.vertices.len(), 1);
        assert!(p.edges.is_empty());
        assert!(p.is_connected());
    }
}
