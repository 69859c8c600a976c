use num::{BigRational, One};

use crate::error::{LatticeError, Result};
use crate::matrix::{integer_kernel, rational_dot, solve_row_combination, IntMatrix};

/// The grading configuration `A`, one column per class, with a rational
/// certificate `omega` satisfying `omega . a_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    a: IntMatrix,
    omega: Vec<BigRational>,
    kernel_rank: usize,
    kernel_generator: Option<Vec<i64>>,
}

impl Grading {
    pub fn new(a: IntMatrix) -> Result<Self> {
        let ones = vec![1i64; a.cols()];
        let omega = solve_row_combination(&a, &ones).ok_or(LatticeError::NoPositiveGrading)?;
        let kernel = integer_kernel(&a)?;
        let kernel_rank = kernel.len();
        let kernel_generator = if kernel_rank == 1 {
            let mut h = kernel.into_iter().next().expect("one vector");
            if h.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                h.iter_mut().for_each(|x| *x = -*x);
            }
            Some(h)
        } else {
            None
        };
        Ok(Grading {
            a,
            omega,
            kernel_rank,
            kernel_generator,
        })
    }

    /// Unit vectors `e_1..e_r`: the linearly independent grading.
    pub fn unit(r: usize) -> Self {
        Self::new(IntMatrix::identity(r)).expect("identity grading is positive")
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn r(&self) -> usize {
        self.a.cols()
    }

    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    pub fn omega(&self) -> &[BigRational] {
        &self.omega
    }

    pub fn kernel_rank(&self) -> usize {
        self.kernel_rank
    }

    pub fn kernel_generator(&self) -> Option<&[i64]> {
        self.kernel_generator.as_deref()
    }

    pub fn column(&self, i: usize) -> Vec<i64> {
        self.a.column(i)
    }

    /// Checks the certificate on every column.
    pub fn certificate_holds(&self) -> bool {
        (0..self.r()).all(|i| rational_dot(&self.omega, &self.a.column(i)).is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_isolated_binary_vertices_have_codim_one() {
        // classes (i2, i3) in {1,2}^2; rows are the two vertex marginals
        let a = IntMatrix::from_rows(
            4,
            &[vec![1, 1, 0, 0], vec![0, 0, 1, 1], vec![1, 0, 1, 0], vec![0, 1, 0, 1]],
        )
        .unwrap();
        let g = Grading::new(a).unwrap();
        assert!(g.certificate_holds());
        assert_eq!(g.kernel_rank(), 1);
        assert_eq!(g.kernel_generator(), Some(&[1, -1, -1, 1][..]));
    }

    #[test]
    fn unit_grading_is_codim_zero() {
        let g = Grading::unit(3);
        assert_eq!(g.kernel_rank(), 0);
        assert!(g.kernel_generator().is_none());
    }

    #[test]
    fn missing_certificate_is_an_error() {
        let a = IntMatrix::from_rows(2, &[vec![1, -1]]).unwrap();
        assert_eq!(Grading::new(a), Err(LatticeError::NoPositiveGrading));
    }
}
