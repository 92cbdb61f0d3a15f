//! Finite-dimensional algebras given by structure constants.
//!
//! No symmetry is assumed in storage: `[e_i, e_j]` and `[e_j, e_i]` are
//! independent entries, which is what Leibniz algebras need.

mod checks;
mod ideals;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::{ExactMatrix, GaussianRational};

pub use checks::{check_leibniz, check_lie, verify_iso};
pub use ideals::{
    center, ideal_closure, is_ideal, left_annihilator, quotient_algebra, right_annihilator,
    squares_ideal, squares_span, subalgebra,
};

type G = GaussianRational;

/// Scalar field an algebra is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Gaussian,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Rational => "rational",
            Field::Gaussian => "gaussian",
        }
    }

    /// The smaller field containing both.
    pub fn join(self, other: Field) -> Field {
        if self == Field::Rational && other == Field::Rational {
            Field::Rational
        } else {
            Field::Gaussian
        }
    }
}

/// `[e_i, e_j] = Σ_k c_{ij}^k e_k`, stored sparsely by ordered pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTable {
    field: Field,
    labels: Vec<String>,
    // Each value is sorted by k and holds only nonzero coefficients.
    table: BTreeMap<(usize, usize), Vec<(usize, G)>>,
}

impl AlgebraTable {
    /// An algebra with zero bracket on the given basis.
    pub fn new<S: Into<String>>(field: Field, labels: impl IntoIterator<Item = S>) -> Self {
        AlgebraTable {
            field,
            labels: labels.into_iter().map(Into::into).collect(),
            table: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Re-tags the scalar field. Extending scalars is always allowed;
    /// restricting to ℚ requires every coefficient to be real.
    pub fn with_field(&self, field: Field) -> Result<Self> {
        if field == Field::Rational {
            if let Some((_, _, _, c)) = self.entries().find(|(_, _, _, c)| !c.is_real()) {
                return Err(Error::NotReal(c.to_string()));
            }
        }
        Ok(AlgebraTable {
            field,
            ..self.clone()
        })
    }

    pub fn with_labels<S: Into<String>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: labels.len(),
            });
        }
        Ok(AlgebraTable {
            labels,
            ..self.clone()
        })
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.dim() {
            return Err(Error::IndexOutOfRange {
                index,
                dim: self.dim(),
            });
        }
        Ok(())
    }

    fn check_scalar(&self, c: &G) -> Result<()> {
        if self.field == Field::Rational && !c.is_real() {
            return Err(Error::NotReal(c.to_string()));
        }
        Ok(())
    }

    fn check_vector(&self, v: &[G]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Adds `coeff·e_k` to `[e_i, e_j]`.
    pub fn add_term(&mut self, i: usize, j: usize, k: usize, coeff: G) -> Result<()> {
        for idx in [i, j, k] {
            self.check_index(idx)?;
        }
        self.check_scalar(&coeff)?;
        if coeff.is_zero() {
            return Ok(());
        }
        let terms = self.table.entry((i, j)).or_default();
        match terms.binary_search_by_key(&k, |(kk, _)| *kk) {
            Ok(pos) => {
                let sum = &terms[pos].1 + &coeff;
                if sum.is_zero() {
                    terms.remove(pos);
                } else {
                    terms[pos].1 = sum;
                }
            }
            Err(pos) => terms.insert(pos, (k, coeff)),
        }
        if terms.is_empty() {
            self.table.remove(&(i, j));
        }
        Ok(())
    }

    /// Replaces `[e_i, e_j]` with the dense vector `value`.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: &[G]) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.check_vector(value)?;
        for c in value {
            self.check_scalar(c)?;
        }
        let terms: Vec<(usize, G)> = value
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect();
        if terms.is_empty() {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), terms);
        }
        Ok(())
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = −v`.
    pub fn set_antisymmetric(&mut self, i: usize, j: usize, value: &[G]) -> Result<()> {
        self.set_bracket(i, j, value)?;
        let neg: Vector = value.iter().map(|c| -c).collect();
        self.set_bracket(j, i, &neg)
    }

    /// Sparse terms of `[e_i, e_j]`, sorted by output index.
    pub fn terms(&self, i: usize, j: usize) -> &[(usize, G)] {
        self.table.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> G {
        self.terms(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(G::zero, |(_, c)| c.clone())
    }

    /// All nonzero `(i, j, k, c_{ij}^k)` in `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &G)> {
        self.table
            .iter()
            .flat_map(|(&(i, j), terms)| terms.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let mut out = vector::zeros(self.dim());
        for (k, c) in self.terms(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[G], y: &[G]) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        let mut out = vector::zeros(self.dim());
        for (&(i, j), terms) in &self.table {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            let xy = &x[i] * &y[j];
            for (k, c) in terms {
                out[*k] = &out[*k] + &(&xy * c);
            }
        }
        Ok(out)
    }

    /// Left bracket by a fixed vector as a dim × dim matrix: row `j` holds
    /// `[x, e_j]`.
    pub fn left_multiplication(&self, x: &[G]) -> Result<ExactMatrix> {
        self.check_vector(x)?;
        let n = self.dim();
        let rows = (0..n)
            .map(|j| self.bracket(x, &vector::unit(n, j)))
            .collect::<Result<Vec<_>>>()?;
        ExactMatrix::from_rows(n, rows)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim()).all(|i| {
            (i..self.dim()).all(|j| {
                vector::is_zero(&vector::add(&self.bracket_basis(i, j), &self.bracket_basis(j, i)))
            })
        })
    }

    /// Expresses the algebra in a new basis whose vectors are the rows of
    /// `basis` (in old coordinates).
    pub fn change_basis<S: Into<String>>(
        &self,
        basis: &ExactMatrix,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<AlgebraTable> {
        let n = self.dim();
        if basis.rows() != n || basis.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: basis.rows(),
            });
        }
        let inv = basis.inverse()?.ok_or_else(|| {
            Error::InvalidProblem("basis change matrix is singular".to_string())
        })?;
        let mut out = AlgebraTable::new(self.field, labels);
        if out.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: out.dim(),
            });
        }
        for a in 0..n {
            for b in 0..n {
                let br = self.bracket(basis.row(a), basis.row(b))?;
                let coords = inv.left_apply(&br)?;
                out.set_bracket(a, b, &coords)?;
            }
        }
        Ok(out)
    }
}

/// Linear map between coordinate spaces; row `i` of `matrix` is the image of
/// the `i`-th source basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: ExactMatrix,
}

impl LinearMap {
    pub fn new(matrix: ExactMatrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::new(ExactMatrix::identity(n))
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[G]) -> Result<Vector> {
        self.matrix.left_apply(v)
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_square() && self.matrix.rank() == self.matrix.rows()
    }
}
