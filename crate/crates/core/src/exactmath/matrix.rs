use std::fmt;

use super::subspace::{EchelonBasis, Subspace};
use super::vector::{self, Vector};
use super::GaussianRational;
use crate::error::{Error, Result};

type G = GaussianRational;

/// Dense `rows × cols` matrix over ℚ(i), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<G>,
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![G::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, G::one());
        }
        m
    }

    /// The matrix unit with a single 1 at `(i, j)` (zero-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(i, j, G::one());
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(ExactMatrix {
            rows: n,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &G {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: G) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[G] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[G]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn entries(&self) -> &[G] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.entries)
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(G::is_real)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> G {
        (0..self.rows.min(self.cols)).fold(G::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn scale(&self, c: &G) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| c * x).collect(),
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = &out.entries[i * other.cols + j];
                        out.entries[i * other.cols + j] = cur + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Row vector times matrix, `v·M`.
    pub fn left_apply(&self, v: &[G]) -> Result<Vector> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = vector::zeros(self.cols);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(&mut out, c, self.row(i));
            }
        }
        Ok(out)
    }

    fn echelon(&self) -> EchelonBasis {
        let mut basis = EchelonBasis::new(self.cols);
        for r in self.row_vectors() {
            basis.insert(r.to_vec()).expect("row length equals cols");
        }
        basis
    }

    /// The unique reduced row echelon form. Pivots are the first nonzero
    /// entry in column order; zero rows are kept at the bottom.
    pub fn rref(&self) -> Rref {
        let basis = self.echelon();
        let rank = basis.rank();
        let pivots = basis.pivots().to_vec();
        let mut rows: Vec<Vector> = basis.rows().to_vec();
        rows.resize(self.rows.max(rank), vector::zeros(self.cols));
        Rref {
            matrix: ExactMatrix::from_rows(self.cols, rows).expect("widths agree"),
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// `{x : M·xᵀ = 0}`.
    pub fn kernel(&self) -> Subspace {
        self.echelon().null_space()
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_echelon(self.echelon())
    }

    /// Solves `M·x = b` for a column vector `x`; `None` when inconsistent.
    pub fn solve(&self, b: &[G]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut basis = EchelonBasis::new(self.cols + 1);
        for (r, bi) in self.row_vectors().zip(b) {
            let mut aug = r.to_vec();
            aug.push(bi.clone());
            basis.insert(aug)?;
        }
        if basis.pivots().last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vector::zeros(self.cols);
        for (row, &p) in basis.rows().iter().zip(basis.pivots()) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Two-sided inverse, `None` for singular matrices.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut basis = EchelonBasis::new(2 * n);
        for (i, r) in self.row_vectors().enumerate() {
            let mut aug = r.to_vec();
            aug.extend(vector::unit(n, i));
            basis.insert(aug)?;
        }
        if basis.pivots().iter().take(n).copied().ne(0..n) {
            return Ok(None);
        }
        let rows = basis.rows()[..n].iter().map(|r| r[n..].to_vec()).collect();
        Ok(Some(ExactMatrix::from_rows(n, rows)?))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in self.row_vectors() {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
