use lattice_core::{IntMatrix, VectorConfiguration};

use crate::complex::SimplicialComplex;
use crate::error::{HierError, Result};

/// Largest vertex count accepted by subset enumeration.
pub const MAX_SUBSET_VERTICES: usize = 20;

/// Cells of a product of level sets, lexicographic with the first coordinate
/// most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellIndex {
    levels: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl CellIndex {
    pub fn new(levels: &[usize]) -> Self {
        let mut strides = vec![0; levels.len()];
        let mut acc = 1usize;
        for v in (0..levels.len()).rev() {
            strides[v] = acc;
            acc *= levels[v];
        }
        CellIndex {
            levels: levels.to_vec(),
            strides,
            len: acc,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn index(&self, cell: &[usize]) -> usize {
        cell.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub fn cell(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.levels.len()];
        for (v, s) in self.strides.iter().enumerate() {
            out[v] = index / s;
            index %= s;
        }
        out
    }

    pub fn cells(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len).map(|i| self.cell(i))
    }
}

/// A hierarchical model: complex, levels and its marginal configuration.
#[derive(Clone, Debug)]
pub struct HierModel {
    complex: SimplicialComplex,
    d: Vec<usize>,
    cells: CellIndex,
    /// `(facet, marginal cell)` of each matrix row.
    rows: Vec<(usize, Vec<usize>)>,
    config: VectorConfiguration,
}

fn check_levels(complex: &SimplicialComplex, d: &[usize]) -> Result<()> {
    if d.len() != complex.n() {
        return Err(HierError::InvalidLevels(format!(
            "{} levels for {} vertices",
            d.len(),
            complex.n()
        )));
    }
    if let Some(v) = d.iter().position(|&x| x < 2) {
        return Err(HierError::InvalidLevels(format!(
            "vertex {} has {} levels, at least 2 required",
            complex.vertices()[v],
            d[v]
        )));
    }
    Ok(())
}

/// Rows of the marginal matrix: facet by facet, each facet's cells in lex order.
pub fn marginal_rows(complex: &SimplicialComplex, d: &[usize]) -> (Vec<(usize, Vec<usize>)>, IntMatrix) {
    let cells = CellIndex::new(d);
    let mut meta = Vec::new();
    let mut rows = Vec::new();
    for (fi, f) in complex.facets().iter().enumerate() {
        let fl: Vec<usize> = f.iter().map(|&v| d[v]).collect();
        let fcells = CellIndex::new(&fl);
        let start = rows.len();
        for _ in 0..fcells.len() {
            rows.push(vec![0i64; cells.len()]);
        }
        for (idx, cell) in cells.cells().enumerate() {
            let marg: Vec<usize> = f.iter().map(|&v| cell[v]).collect();
            rows[start + fcells.index(&marg)][idx] = 1;
        }
        meta.extend(fcells.cells().map(|c| (fi, c)));
    }
    let m = IntMatrix::from_rows(cells.len(), &rows).expect("rows have the cell count");
    (meta, m)
}

impl HierModel {
    pub fn new(complex: SimplicialComplex, d: Vec<usize>) -> Result<Self> {
        check_levels(&complex, &d)?;
        let (rows, matrix) = marginal_rows(&complex, &d);
        let config = VectorConfiguration::plain(matrix)?;
        Ok(HierModel {
            cells: CellIndex::new(&d),
            complex,
            d,
            rows,
            config,
        })
    }

    /// Binary levels on every vertex.
    pub fn binary(complex: SimplicialComplex) -> Result<Self> {
        let d = vec![2; complex.n()];
        Self::new(complex, d)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn cells(&self) -> &CellIndex {
        &self.cells
    }

    pub fn row_labels(&self) -> &[(usize, Vec<usize>)] {
        &self.rows
    }

    pub fn config(&self) -> &VectorConfiguration {
        &self.config
    }

    pub fn matrix(&self) -> &IntMatrix {
        self.config.matrix()
    }

    pub fn columns(&self) -> usize {
        self.cells.len()
    }
}

pub fn model_matrix(complex: SimplicialComplex, d: Vec<usize>) -> Result<HierModel> {
    HierModel::new(complex, d)
}

/// Sum over nonempty non-faces `F` of `prod_{v in F} (d_v - 1)`.
pub fn hier_codim(complex: &SimplicialComplex, d: &[usize]) -> Result<u64> {
    check_levels(complex, d)?;
    if complex.n() > MAX_SUBSET_VERTICES {
        return Err(HierError::TooLarge {
            what: "vertices for subset enumeration",
            size: complex.n(),
            limit: MAX_SUBSET_VERTICES,
        });
    }
    Ok(complex
        .non_faces()
        .iter()
        .map(|f| f.iter().map(|&v| d[v] as u64 - 1).product::<u64>())
        .sum())
}
