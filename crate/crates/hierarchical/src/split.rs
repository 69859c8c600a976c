use lattice_core::{Grading, GradedVariableSet, IntMatrix, Label, Move, MoveSet, VectorConfiguration};
use tfp::{product_config, ProductConfiguration, Side};

use crate::complex::SimplicialComplex;
use crate::error::{HierError, Result};
use crate::model::{marginal_rows, CellIndex, HierModel};

/// A model written as a fiber product of its restrictions to two vertex sets
/// meeting in the separator.
#[derive(Clone, Debug)]
pub struct Split {
    separator: Vec<usize>,
    left_vertices: Vec<usize>,
    right_vertices: Vec<usize>,
    left: HierModel,
    right: HierModel,
    left_tilde: HierModel,
    right_tilde: HierModel,
    grading: Grading,
    product: ProductConfiguration,
    /// Cell of the whole model for each product variable.
    z_to_cell: Vec<usize>,
}

fn sorted_union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Positions of `sub` inside the sorted list `within`.
fn local(sub: &[usize], within: &[usize]) -> Vec<usize> {
    sub.iter()
        .map(|v| within.binary_search(v).expect("subset"))
        .collect()
}

/// `A` of the separator complex; a single all-ones row when the separator is empty.
fn separator_grading(gs: &SimplicialComplex, ds: &[usize]) -> Result<Grading> {
    if gs.n() == 0 {
        return Ok(Grading::new(IntMatrix::from_rows(1, &[vec![1]])?)?);
    }
    let (_, a) = marginal_rows(gs, ds);
    Ok(Grading::new(a)?)
}

/// Side configuration with variables labeled by (separator cell, rest cell)
/// in the side's own lex order, and `pi` summing side rows onto separator rows.
fn side_config(side: &HierModel, sep_local: &[usize], gs: &SimplicialComplex, grading: &Grading) -> Result<VectorConfiguration> {
    let d = side.d();
    let rest: Vec<usize> = (0..d.len()).filter(|v| !sep_local.contains(v)).collect();
    let sep_cells = CellIndex::new(&sep_local.iter().map(|&v| d[v]).collect::<Vec<_>>());
    let rest_cells = CellIndex::new(&rest.iter().map(|&v| d[v]).collect::<Vec<_>>());
    let labels: Vec<Label> = side
        .cells()
        .cells()
        .map(|c| {
            let s: Vec<usize> = sep_local.iter().map(|&v| c[v]).collect();
            let r: Vec<usize> = rest.iter().map(|&v| c[v]).collect();
            Label::pair(sep_cells.index(&s), rest_cells.index(&r))
        })
        .collect();
    let vars = GradedVariableSet::new(sep_cells.len(), labels)?;

    let meta = side.row_labels();
    let facets = side.complex().facets();
    let mut pi_rows: Vec<Vec<i64>> = Vec::new();
    if gs.n() == 0 {
        let mut row = vec![0i64; meta.len()];
        for (r, (fi, _)) in meta.iter().enumerate() {
            if *fi == 0 {
                row[r] = 1;
            }
        }
        pi_rows.push(row);
    } else {
        for g in gs.facets() {
            // The separator facet in side positions, and a side facet containing it.
            let g_side: Vec<usize> = g.iter().map(|&v| sep_local[v]).collect();
            let host = facets
                .iter()
                .position(|f| g_side.iter().all(|v| f.contains(v)))
                .expect("separator faces are side faces");
            let g_cells = CellIndex::new(&g_side.iter().map(|&v| d[v]).collect::<Vec<_>>());
            let start = pi_rows.len();
            pi_rows.extend((0..g_cells.len()).map(|_| vec![0i64; meta.len()]));
            for (r, (fi, fcell)) in meta.iter().enumerate() {
                if *fi != host {
                    continue;
                }
                let f = &facets[host];
                let marg: Vec<usize> = g_side
                    .iter()
                    .map(|v| fcell[f.iter().position(|w| w == v).expect("contained")])
                    .collect();
                pi_rows[start + g_cells.index(&marg)][r] = 1;
            }
        }
    }
    let pi = IntMatrix::from_rows(meta.len(), &pi_rows)?;
    Ok(VectorConfiguration::new(vars, side.matrix().clone(), grading.clone(), Some(pi))?)
}

impl Split {
    /// `v1` and `v2` are vertex positions of `model`.
    pub fn new(model: &HierModel, v1: &[usize], v2: &[usize]) -> Result<Self> {
        let complex = model.complex();
        let n = complex.n();
        let mut v1 = v1.to_vec();
        let mut v2 = v2.to_vec();
        v1.sort_unstable();
        v1.dedup();
        v2.sort_unstable();
        v2.dedup();
        if v1.iter().chain(&v2).any(|&v| v >= n) {
            return Err(HierError::InvalidSplit("vertex out of range".into()));
        }
        if v1.is_empty() || v2.is_empty() {
            return Err(HierError::InvalidSplit("both parts must be nonempty".into()));
        }
        if sorted_union(&v1, &v2).len() != n {
            return Err(HierError::InvalidSplit("the parts do not cover all vertices".into()));
        }
        for f in complex.facets() {
            let in1 = f.iter().all(|v| v1.contains(v));
            let in2 = f.iter().all(|v| v2.contains(v));
            if !in1 && !in2 {
                return Err(HierError::InvalidSplit(format!(
                    "facet {:?} lies in neither part",
                    complex.labels_of(f)
                )));
            }
        }
        let sep: Vec<usize> = v1.iter().copied().filter(|v| v2.contains(v)).collect();
        let d = model.d();
        let pick = |vs: &[usize]| vs.iter().map(|&v| d[v]).collect::<Vec<usize>>();
        let gs = complex.induced(&sep);
        let grading = separator_grading(&gs, &pick(&sep))?;

        let left = HierModel::new(complex.induced(&v1), pick(&v1))?;
        let right = HierModel::new(complex.induced(&v2), pick(&v2))?;
        let sep1 = local(&sep, &v1);
        let sep2 = local(&sep, &v2);
        let left_tilde = HierModel::new(left.complex().with_face(&sep1), pick(&v1))?;
        let right_tilde = HierModel::new(right.complex().with_face(&sep2), pick(&v2))?;

        let lcfg = side_config(&left, &sep1, &gs, &grading)?;
        let rcfg = side_config(&right, &sep2, &gs, &grading)?;
        let product = product_config(&lcfg, &rcfg, &grading)?;

        let mut z_to_cell = vec![0usize; product.z_len()];
        let cells = model.cells();
        for (idx, cell) in cells.cells().enumerate() {
            let c1: Vec<usize> = v1.iter().map(|&v| cell[v]).collect();
            let c2: Vec<usize> = v2.iter().map(|&v| cell[v]).collect();
            let l1 = lcfg.vars().label(left.cells().index(&c1));
            let l2 = rcfg.vars().label(right.cells().index(&c2));
            debug_assert_eq!(l1.class, l2.class);
            z_to_cell[product.z_index(l1.class, l1.j, l2.j)] = idx;
        }
        Ok(Split {
            separator: sep,
            left_vertices: v1,
            right_vertices: v2,
            left,
            right,
            left_tilde,
            right_tilde,
            grading,
            product,
            z_to_cell,
        })
    }

    /// Splits by vertex labels.
    pub fn by_labels(model: &HierModel, v1: &[usize], v2: &[usize]) -> Result<Self> {
        let c = model.complex();
        Self::new(model, &c.positions(v1)?, &c.positions(v2)?)
    }

    pub fn separator(&self) -> &[usize] {
        &self.separator
    }

    pub fn vertices(&self, side: Side) -> &[usize] {
        match side {
            Side::Left => &self.left_vertices,
            Side::Right => &self.right_vertices,
        }
    }

    pub fn model(&self, side: Side) -> &HierModel {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    /// The side with the separator added as a face.
    pub fn tilde(&self, side: Side) -> &HierModel {
        match side {
            Side::Left => &self.left_tilde,
            Side::Right => &self.right_tilde,
        }
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn codim(&self) -> usize {
        self.grading.kernel_rank()
    }

    pub fn product(&self) -> &ProductConfiguration {
        &self.product
    }

    /// Cell index of the whole model for product variable `z`.
    pub fn cell_of(&self, z: usize) -> usize {
        self.z_to_cell[z]
    }

    /// Rewrites a product move in the whole model's cell coordinates.
    pub fn to_cells(&self, m: &Move) -> Move {
        let mut v = vec![0i32; m.len()];
        for (z, &x) in m.as_slice().iter().enumerate() {
            v[self.z_to_cell[z]] = x;
        }
        Move::new(v)
    }

    pub fn moves_to_cells(&self, moves: &MoveSet) -> MoveSet {
        MoveSet::from_moves(moves.iter().map(|m| self.to_cells(m)))
    }

    /// Rewrites a whole-model move in product coordinates.
    pub fn from_cells(&self, m: &Move) -> Move {
        let v = (0..self.z_to_cell.len()).map(|z| m.as_slice()[self.z_to_cell[z]]).collect();
        Move::new(v)
    }
}

/// `split(model, V1, V2)` by vertex labels.
pub fn split(model: &HierModel, v1: &[usize], v2: &[usize]) -> Result<Split> {
    Split::by_labels(model, v1, v2)
}
