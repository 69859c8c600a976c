use num::BigRational;

use crate::error::{LatticeError, Result};
use crate::grading::Grading;
use crate::matrix::{as_nonneg_integer, integer_kernel, rational_dot, solve_row_combination, IntMatrix};
use crate::moves::{Move, MoveSet};
use crate::vars::GradedVariableSet;

/// Outcome of checking `pi * b_ij = a_i` for every column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Consistent,
    /// First violating column: its class, its index in the class, and its flat index.
    Violation { class: usize, j: usize, var: usize },
}

impl Homogeneity {
    pub fn holds(&self) -> bool {
        matches!(self, Homogeneity::Consistent)
    }
}

/// A grouped integer configuration `B` with grading `A` and linear map `pi`.
#[derive(Clone, Debug)]
pub struct VectorConfiguration {
    vars: GradedVariableSet,
    columns: IntMatrix,
    grading: Grading,
    pi: Option<IntMatrix>,
    pi_consistent: bool,
    degree_form: Option<Vec<BigRational>>,
}

impl VectorConfiguration {
    pub fn new(
        vars: GradedVariableSet,
        columns: IntMatrix,
        grading: Grading,
        pi: Option<IntMatrix>,
    ) -> Result<Self> {
        if columns.cols() != vars.len() {
            return Err(LatticeError::DimensionMismatch {
                what: "configuration columns",
                expected: vars.len(),
                found: columns.cols(),
            });
        }
        if grading.r() != vars.r() {
            return Err(LatticeError::DimensionMismatch {
                what: "grading classes",
                expected: vars.r(),
                found: grading.r(),
            });
        }
        let pi_consistent = match &pi {
            Some(p) => check_homogeneous_parts(&vars, &columns, &grading, p)?.holds(),
            None => false,
        };
        let ones = vec![1i64; columns.cols()];
        let degree_form = solve_row_combination(&columns, &ones);
        Ok(VectorConfiguration {
            vars,
            columns,
            grading,
            pi,
            pi_consistent,
            degree_form,
        })
    }

    /// A bare matrix: one class, trivial grading, no `pi`.
    pub fn plain(columns: IntMatrix) -> Result<Self> {
        let vars = GradedVariableSet::single_class(columns.cols())?;
        let grading = Grading::new(IntMatrix::identity(1))?;
        Self::new(vars, columns, grading, None)
    }

    /// The configuration whose columns are the grading vectors of the classes.
    pub fn from_classes(vars: GradedVariableSet, grading: Grading) -> Result<Self> {
        let cols: Vec<Vec<i64>> = vars.labels().iter().map(|l| grading.column(l.class)).collect();
        let columns = IntMatrix::from_columns(grading.dim(), &cols)?;
        let pi = IntMatrix::identity(grading.dim());
        Self::new(vars, columns, grading, Some(pi))
    }

    pub fn vars(&self) -> &GradedVariableSet {
        &self.vars
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.columns
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn pi(&self) -> Option<&IntMatrix> {
        self.pi.as_ref()
    }

    pub fn pi_consistent(&self) -> bool {
        self.pi_consistent
    }

    pub fn n(&self) -> usize {
        self.columns.cols()
    }

    pub fn rank(&self) -> usize {
        self.columns.rank()
    }

    /// Row vector `c` with `c * B = (1, .., 1)`; exists iff fibers are finite
    /// slices of fixed total degree.
    pub fn degree_form(&self) -> Result<&[BigRational]> {
        self.degree_form.as_deref().ok_or(LatticeError::NoPositiveGrading)
    }

    /// Coarse degree of a right-hand side, when it is a nonnegative integer.
    pub fn coarse_degree(&self, rhs: &[i64]) -> Result<Option<u64>> {
        let c = self.degree_form()?;
        if rhs.len() != self.columns.rows() {
            return Err(LatticeError::DimensionMismatch {
                what: "right-hand side",
                expected: self.columns.rows(),
                found: rhs.len(),
            });
        }
        Ok(as_nonneg_integer(&rational_dot(c, rhs)))
    }

    pub fn image(&self, u: &[i32]) -> Result<Vec<i64>> {
        self.columns.mul_vec(u)
    }

    /// Same configuration with a different class structure and grading.
    pub fn regraded(&self, vars: GradedVariableSet, grading: Grading, pi: Option<IntMatrix>) -> Result<Self> {
        Self::new(vars, self.columns.clone(), grading, pi)
    }

    pub fn kernel_rank(&self) -> usize {
        self.n() - self.rank()
    }
}

/// Integer kernel lattice basis of the configuration matrix.
pub fn kernel_basis(config: &VectorConfiguration) -> Result<MoveSet> {
    let basis = integer_kernel(config.matrix())?;
    let moves = basis.iter().map(|v| Move::from_i64(v)).collect::<Result<Vec<_>>>()?;
    Ok(MoveSet::from_moves(moves))
}

/// Checks `pi * b_ij = a_i` for all columns of `config` against `grading`.
pub fn check_homogeneous(config: &VectorConfiguration, grading: &Grading, pi: &IntMatrix) -> Result<Homogeneity> {
    check_homogeneous_parts(config.vars(), config.matrix(), grading, pi)
}

fn check_homogeneous_parts(
    vars: &GradedVariableSet,
    columns: &IntMatrix,
    grading: &Grading,
    pi: &IntMatrix,
) -> Result<Homogeneity> {
    if pi.cols() != columns.rows() {
        return Err(LatticeError::DimensionMismatch {
            what: "pi columns",
            expected: columns.rows(),
            found: pi.cols(),
        });
    }
    if pi.rows() != grading.dim() {
        return Err(LatticeError::DimensionMismatch {
            what: "pi rows",
            expected: grading.dim(),
            found: pi.rows(),
        });
    }
    if vars.r() != grading.r() {
        return Err(LatticeError::DimensionMismatch {
            what: "grading classes",
            expected: vars.r(),
            found: grading.r(),
        });
    }
    for var in 0..columns.cols() {
        let label = vars.label(var);
        let image = pi.mul_vec(&columns.column(var))?;
        if image != grading.column(label.class) {
            return Ok(Homogeneity::Violation {
                class: label.class,
                j: label.j,
                var,
            });
        }
    }
    Ok(Homogeneity::Consistent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn independence() -> VectorConfiguration {
        // cells 11,12,21,22; rows: first-index margins then second-index margins
        let m = IntMatrix::from_rows(
            4,
            &[vec![1, 1, 0, 0], vec![0, 0, 1, 1], vec![1, 0, 1, 0], vec![0, 1, 0, 1]],
        )
        .unwrap();
        VectorConfiguration::plain(m).unwrap()
    }

    #[test]
    fn kernel_examples() {
        let id = VectorConfiguration::plain(IntMatrix::identity(2)).unwrap();
        assert!(kernel_basis(&id).unwrap().is_empty());
        let ones = VectorConfiguration::plain(IntMatrix::from_rows(2, &[vec![1, 1]]).unwrap()).unwrap();
        assert_eq!(kernel_basis(&ones).unwrap().as_slice(), &[Move::new(vec![1, -1])]);
        assert_eq!(
            kernel_basis(&independence()).unwrap().as_slice(),
            &[Move::new(vec![1, -1, -1, 1])]
        );
    }

    #[test]
    fn homogeneity_witness() {
        let cfg = independence();
        // classes by the second index, grading e_1, e_2, pi picks the last two rows
        let vars = GradedVariableSet::new(
            2,
            vec![
                crate::vars::Label::pair(0, 0),
                crate::vars::Label::pair(1, 0),
                crate::vars::Label::pair(0, 1),
                crate::vars::Label::pair(1, 1),
            ],
        )
        .unwrap();
        let grading = Grading::unit(2);
        let pi = IntMatrix::from_rows(4, &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap();
        let cfg = cfg.regraded(vars.clone(), grading.clone(), Some(pi.clone())).unwrap();
        assert!(cfg.pi_consistent());
        assert_eq!(check_homogeneous(&cfg, &grading, &pi).unwrap(), Homogeneity::Consistent);

        let mut bad = cfg.matrix().clone();
        bad.set(2, 1, 1);
        let bad = VectorConfiguration::new(vars, bad, grading.clone(), Some(pi.clone())).unwrap();
        assert_eq!(
            check_homogeneous(&bad, &grading, &pi).unwrap(),
            Homogeneity::Violation { class: 1, j: 0, var: 1 }
        );
        let wrong = IntMatrix::identity(3);
        assert!(check_homogeneous(&bad, &grading, &wrong).is_err());
    }
}
