use lattice_core::{check_homogeneous, Grading, GradedVariableSet, Homogeneity, IntMatrix, Label, VectorConfiguration};

use crate::error::{Result, TfpError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// The fiber product of two configurations graded by the same `A`.
///
/// Product variables are labeled `(i, j, k)` in class-major order; the
/// column of `(i, j, k)` is the left column `(i, j)` stacked on the right
/// column `(i, k)`.
#[derive(Clone, Debug)]
pub struct ProductConfiguration {
    left: VectorConfiguration,
    right: VectorConfiguration,
    grading: Grading,
    product: VectorConfiguration,
    codim: usize,
    /// Flat index of each left/right variable by `(class, index)`.
    left_index: Vec<Vec<usize>>,
    right_index: Vec<Vec<usize>>,
    z_offsets: Vec<usize>,
}

fn side_index(vars: &GradedVariableSet) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); vars.r()];
    for (i, out_i) in out.iter_mut().enumerate() {
        for j in 0..vars.sizes()[i] {
            out_i.push(vars.index_of(&Label::pair(i, j)).expect("pair labels are dense"));
        }
    }
    out
}

fn check_side(side: Side, cfg: &VectorConfiguration, grading: &Grading) -> Result<()> {
    if cfg.vars().r() != grading.r() {
        return Err(TfpError::GradingMismatch(format!(
            "{} side has {} classes, grading has {}",
            side.name(),
            cfg.vars().r(),
            grading.r()
        )));
    }
    if cfg.vars().labels().iter().any(|l| l.k.is_some()) {
        return Err(TfpError::GradingMismatch(format!("{} side must use pair labels", side.name())));
    }
    let pi = cfg
        .pi()
        .ok_or_else(|| TfpError::GradingMismatch(format!("{} side has no projection map", side.name())))?;
    match check_homogeneous(cfg, grading, pi)? {
        Homogeneity::Consistent => Ok(()),
        Homogeneity::Violation { class, j, var } => Err(TfpError::NotHomogeneous {
            side: side.name(),
            class,
            j,
            var,
        }),
    }
}

/// Builds `B x_A C` after checking that both sides are `A`-homogeneous.
pub fn product_config(left: &VectorConfiguration, right: &VectorConfiguration, grading: &Grading) -> Result<ProductConfiguration> {
    check_side(Side::Left, left, grading)?;
    check_side(Side::Right, right, grading)?;
    let s = left.vars().sizes().to_vec();
    let t = right.vars().sizes().to_vec();
    let vars = GradedVariableSet::product(&s, &t)?;
    let left_index = side_index(left.vars());
    let right_index = side_index(right.vars());
    let (d1, d2) = (left.matrix().rows(), right.matrix().rows());
    let mut columns = Vec::with_capacity(vars.len());
    for l in vars.labels() {
        let k = l.k.expect("product labels are triples");
        let mut col = left.matrix().column(left_index[l.class][l.j]);
        col.extend(right.matrix().column(right_index[l.class][k]));
        columns.push(col);
    }
    let matrix = IntMatrix::from_columns(d1 + d2, &columns)?;
    let pi1 = left.pi().expect("checked above");
    let mut pi = IntMatrix::zeros(pi1.rows(), d1 + d2);
    for r in 0..pi1.rows() {
        for c in 0..d1 {
            pi.set(r, c, pi1.get(r, c));
        }
    }
    let product = VectorConfiguration::new(vars, matrix, grading.clone(), Some(pi))?;
    let mut z_offsets = Vec::with_capacity(s.len());
    let mut acc = 0;
    for i in 0..s.len() {
        z_offsets.push(acc);
        acc += s[i] * t[i];
    }
    Ok(ProductConfiguration {
        left: left.clone(),
        right: right.clone(),
        codim: grading.kernel_rank(),
        grading: grading.clone(),
        product,
        left_index,
        right_index,
        z_offsets,
    })
}

impl ProductConfiguration {
    pub fn left(&self) -> &VectorConfiguration {
        &self.left
    }

    pub fn right(&self) -> &VectorConfiguration {
        &self.right
    }

    pub fn side(&self, side: Side) -> &VectorConfiguration {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn product(&self) -> &VectorConfiguration {
        &self.product
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn r(&self) -> usize {
        self.grading.r()
    }

    pub fn s(&self) -> &[usize] {
        self.left.vars().sizes()
    }

    pub fn t(&self) -> &[usize] {
        self.right.vars().sizes()
    }

    /// Per-class sizes of one side.
    pub fn sizes(&self, side: Side) -> &[usize] {
        match side {
            Side::Left => self.s(),
            Side::Right => self.t(),
        }
    }

    pub fn z_len(&self) -> usize {
        self.product.n()
    }

    pub fn z_index(&self, class: usize, j: usize, k: usize) -> usize {
        self.z_offsets[class] + j * self.t()[class] + k
    }

    /// Flat index of side variable `(class, index)`.
    pub fn side_index(&self, side: Side, class: usize, index: usize) -> usize {
        match side {
            Side::Left => self.left_index[class][index],
            Side::Right => self.right_index[class][index],
        }
    }

    /// Pushes a product vector to one side by summing out the other index.
    pub fn project_to(&self, side: Side, z: &[i32]) -> Vec<i32> {
        let mut out = vec![0i32; self.side(side).n()];
        for (idx, l) in self.product.vars().labels().iter().enumerate() {
            let k = l.k.expect("triple");
            let target = match side {
                Side::Left => self.left_index[l.class][l.j],
                Side::Right => self.right_index[l.class][k],
            };
            out[target] += z[idx];
        }
        out
    }

    /// Class content of a product vector.
    pub fn gamma(&self, z: &[i32]) -> Vec<i64> {
        self.product.vars().class_content(z)
    }

    /// Class content of a side vector.
    pub fn gamma_side(&self, side: Side, v: &[i32]) -> Vec<i64> {
        self.side(side).vars().class_content(v)
    }

    /// The equivalent configuration with the grading vector inserted between
    /// the two halves of every column.
    pub fn augmented(&self) -> Result<VectorConfiguration> {
        let (d1, d2, e) = (self.left.matrix().rows(), self.right.matrix().rows(), self.grading.dim());
        let m = self.product.matrix();
        let mut columns = Vec::with_capacity(m.cols());
        for (idx, l) in self.product.vars().labels().iter().enumerate() {
            let col = m.column(idx);
            let mut out = col[..d1].to_vec();
            out.extend(self.grading.column(l.class));
            out.extend_from_slice(&col[d1..d1 + d2]);
            columns.push(out);
        }
        let matrix = IntMatrix::from_columns(d1 + e + d2, &columns)?;
        Ok(VectorConfiguration::new(self.product.vars().clone(), matrix, self.grading.clone(), None)?)
    }
}

/// The associated codimension-zero product: unit rows appended to both sides.
#[derive(Clone, Debug)]
pub struct TildeProduct {
    pub tilde_left: VectorConfiguration,
    pub tilde_right: VectorConfiguration,
    pub tilde_grading: Grading,
    pub product: ProductConfiguration,
    /// Row counts of the original sides, for stripping the appended rows.
    pub original_rows: (usize, usize),
}

fn append_units(cfg: &VectorConfiguration, grading: &Grading, tilde: &Grading) -> Result<VectorConfiguration> {
    let r = grading.r();
    let d = cfg.matrix().rows();
    let mut columns = Vec::with_capacity(cfg.n());
    for (idx, l) in cfg.vars().labels().iter().enumerate() {
        let mut col = cfg.matrix().column(idx);
        col.extend((0..r).map(|i| i64::from(i == l.class)));
        columns.push(col);
    }
    let matrix = IntMatrix::from_columns(d + r, &columns)?;
    let pi = cfg.pi().expect("product sides carry pi");
    let e = grading.dim();
    let mut tilde_pi = IntMatrix::zeros(e + r, d + r);
    for a in 0..e {
        for b in 0..d {
            tilde_pi.set(a, b, pi.get(a, b));
        }
    }
    for i in 0..r {
        tilde_pi.set(e + i, d + i, 1);
    }
    Ok(VectorConfiguration::new(cfg.vars().clone(), matrix, tilde.clone(), Some(tilde_pi))?)
}

pub fn tilde_extend(product: &ProductConfiguration) -> Result<TildeProduct> {
    let a = product.grading();
    let r = a.r();
    let mut rows = a.matrix().to_rows();
    for i in 0..r {
        rows.push((0..r).map(|c| i64::from(c == i)).collect());
    }
    let tilde_grading = Grading::new(IntMatrix::from_rows(r, &rows)?)?;
    let tilde_left = append_units(product.left(), a, &tilde_grading)?;
    let tilde_right = append_units(product.right(), a, &tilde_grading)?;
    let tp = product_config(&tilde_left, &tilde_right, &tilde_grading)?;
    Ok(TildeProduct {
        original_rows: (product.left().matrix().rows(), product.right().matrix().rows()),
        tilde_left,
        tilde_right,
        tilde_grading,
        product: tp,
    })
}
