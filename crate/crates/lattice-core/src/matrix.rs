use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{LatticeError, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LatticeError::DimensionMismatch {
                    what: "matrix row",
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LatticeError::DimensionMismatch {
                    what: "matrix column",
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&x| x >= 0)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(LatticeError::DimensionMismatch {
                what: "vstack",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Checked product `self * v` for an integer vector.
    pub fn mul_vec<T: Copy + Into<i64>>(&self, v: &[T]) -> Result<Vec<i64>> {
        if v.len() != self.cols {
            return Err(LatticeError::DimensionMismatch {
                what: "matrix-vector product",
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![0i64; self.rows];
        for (r, o) in out.iter_mut().enumerate() {
            let row = self.row(r);
            let mut acc = 0i64;
            for (a, &x) in row.iter().zip(v) {
                let x: i64 = x.into();
                if *a == 0 || x == 0 {
                    continue;
                }
                let p = a.checked_mul(x).ok_or(LatticeError::Overflow("matrix-vector product"))?;
                acc = acc.checked_add(p).ok_or(LatticeError::Overflow("matrix-vector product"))?;
            }
            *o = acc;
        }
        Ok(out)
    }

    /// Checked matrix product.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(LatticeError::DimensionMismatch {
                what: "matrix product",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for c in 0..other.cols {
            let col = other.column(c);
            let prod = self.mul_vec(&col)?;
            for (r, x) in prod.into_iter().enumerate() {
                out.set(r, c, x);
            }
        }
        Ok(out)
    }

    pub fn to_rational_rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_rational_rows();
        rref(&mut rows).len()
    }
}

/// In-place reduced row echelon form over Q; returns pivot columns.
pub fn rref(rows: &mut Vec<Vec<BigRational>>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            let (top, bottom) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&mut a[i], &b[0])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&mut b[0], &a[r])
            };
            for (x, y) in top.iter_mut().zip(bottom.iter()) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Solves `x * M = target` for a rational row vector `x`, where `M` has the
/// given rows. Returns `None` when the system is inconsistent.
pub fn solve_row_combination(m: &IntMatrix, target: &[i64]) -> Option<Vec<BigRational>> {
    // Unknowns are the m.rows() coefficients; equations are the columns.
    let n = m.rows();
    let mut aug: Vec<Vec<BigRational>> = (0..m.cols())
        .map(|c| {
            let mut row: Vec<BigRational> = (0..n)
                .map(|r| BigRational::from_integer(BigInt::from(m.get(r, c))))
                .collect();
            row.push(BigRational::from_integer(BigInt::from(target[c])));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Greatest common divisor of the entries (0 for the zero vector).
pub fn content(v: &[i64]) -> i64 {
    v.iter().fold(0, |g, &x| gcd(g, x))
}

/// Lattice basis of the integer kernel of `m`, via column-style Hermite
/// reduction of `[m; I]`. Every operation is checked.
pub fn integer_kernel(m: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    let rows = m.rows();
    let n = m.cols();
    // cols[j] = (top part of column j, unimodular part of column j)
    let mut top: Vec<Vec<i64>> = (0..n).map(|c| m.column(c)).collect();
    let mut unit: Vec<Vec<i64>> = (0..n)
        .map(|c| {
            let mut e = vec![0i64; n];
            e[c] = 1;
            e
        })
        .collect();
    let mut pivot = 0usize;
    for r in 0..rows {
        if pivot == n {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (pivot..n).filter(|&c| top[c][r] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&c) = nonzero.first() {
                    top.swap(pivot, c);
                    unit.swap(pivot, c);
                    pivot += 1;
                }
                break;
            }
            let best = *nonzero
                .iter()
                .min_by_key(|&&c| (top[c][r].unsigned_abs(), c))
                .expect("nonempty");
            let bval = top[best][r];
            for &c in &nonzero {
                if c == best {
                    continue;
                }
                let q = top[c][r].div_euclid(bval);
                if q == 0 {
                    continue;
                }
                let (src_top, src_unit) = (top[best].clone(), unit[best].clone());
                axpy(&mut top[c], -q, &src_top)?;
                axpy(&mut unit[c], -q, &src_unit)?;
            }
        }
    }
    let mut basis: Vec<Vec<i64>> = unit.split_off(pivot);
    size_reduce(&mut basis)?;
    Ok(basis)
}

fn axpy(dst: &mut [i64], q: i64, src: &[i64]) -> Result<()> {
    for (d, &s) in dst.iter_mut().zip(src) {
        if s == 0 {
            continue;
        }
        let p = s.checked_mul(q).ok_or(LatticeError::Overflow("kernel reduction"))?;
        *d = d.checked_add(p).ok_or(LatticeError::Overflow("kernel reduction"))?;
    }
    Ok(())
}

fn l1(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

/// Pairwise reduction of a lattice basis to shrink 1-norms; keeps the span.
fn size_reduce(basis: &mut [Vec<i64>]) -> Result<()> {
    let mut changed = true;
    let mut rounds = 0;
    while changed && rounds < 64 {
        changed = false;
        rounds += 1;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand: Vec<i64> = basis[i]
                        .iter()
                        .zip(&basis[j])
                        .map(|(a, b)| a.checked_sub(sign * b))
                        .collect::<Option<Vec<_>>>()
                        .ok_or(LatticeError::Overflow("basis size reduction"))?;
                    if l1(&cand) < l1(&basis[i]) {
                        basis[i] = cand;
                        changed = true;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Rank of an integer matrix given as a list of rows over Q.
pub fn rank_of_rows(rows: &[Vec<i64>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    IntMatrix::from_rows(cols, rows).map(|m| m.rank()).unwrap_or(0)
}

pub(crate) fn big(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Dot product of a rational row with an integer vector.
pub fn rational_dot(w: &[BigRational], v: &[i64]) -> BigRational {
    let mut acc = BigRational::zero();
    for (a, &b) in w.iter().zip(v) {
        if b != 0 && !a.is_zero() {
            acc += a * big(b);
        }
    }
    acc
}

/// Interprets a rational as a nonnegative integer, if it is one.
pub fn as_nonneg_integer(q: &BigRational) -> Option<u64> {
    if !q.is_integer() || q.is_negative() {
        return None;
    }
    let n = q.to_integer();
    u64::try_from(n).ok()
}
