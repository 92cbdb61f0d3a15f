use super::vector::{is_zero, Vector};
use super::GaussianRational;
use crate::error::{Error, Result};

/// Rows of a fully reduced row echelon form, grown one vector at a time.
///
/// Every stored row has a leading 1 at its pivot and zeros at every other
/// row's pivot, so reducing a vector is a single pass over the rows that hit
/// its nonzero pivot coordinates, in any order.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    // Nonzero column indices per row.
    supports: Vec<Vec<usize>>,
}

impl PartialEq for EchelonBasis {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.rows == other.rows
    }
}

impl Eq for EchelonBasis {}

fn support(v: &[GaussianRational]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, _)| j)
        .collect()
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            supports: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &[GaussianRational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Subtracts the span's contribution from `v` in place, leaving zeros at
    /// every pivot column.
    pub fn reduce_in_place(&self, v: &mut [GaussianRational]) {
        for ((row, &p), supp) in self.rows.iter().zip(&self.pivots).zip(&self.supports) {
            if v[p].is_zero() {
                continue;
            }
            let coef = v[p].clone();
            for &j in supp {
                v[j] = &v[j] - &(&coef * &row[j]);
            }
        }
    }

    pub fn contains(&self, v: &[GaussianRational]) -> Result<bool> {
        self.check_len(v)?;
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        Ok(is_zero(&w))
    }

    /// Adds `v` to the spanning set. Returns `true` when the rank grew.
    pub fn insert(&mut self, mut v: Vector) -> Result<bool> {
        self.check_len(&v)?;
        self.reduce_in_place(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let scale = v[p].inv()?;
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = &*x * &scale;
            }
        }
        let new_supp = support(&v);
        for (row, supp) in self.rows.iter_mut().zip(self.supports.iter_mut()) {
            if row[p].is_zero() {
                continue;
            }
            let coef = row[p].clone();
            for &j in &new_supp {
                row[j] = &row[j] - &(&coef * &v[j]);
            }
            *supp = support(row);
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        self.supports.insert(at, new_supp);
        Ok(true)
    }

    /// Canonical basis of `{x : r·x = 0 for every stored row r}`.
    pub fn null_space(&self) -> Subspace {
        let mut is_pivot = vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = EchelonBasis::new(self.dim);
        for f in (0..self.dim).filter(|&f| !is_pivot[f]) {
            let mut x = vec![GaussianRational::zero(); self.dim];
            x[f] = GaussianRational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    x[p] = -&row[f];
                }
            }
            out.insert(x).expect("length matches");
        }
        Subspace { basis: out }
    }
}

/// A linear subspace of `F^n` stored by its canonical (RREF) basis.
///
/// Two subspaces compare equal exactly when they are the same space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: EchelonBasis,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            basis: EchelonBasis::new(ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, (0..ambient_dim).map(|i| super::vector::unit(ambient_dim, i)))
            .expect("unit vectors have the ambient length")
    }

    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut basis = EchelonBasis::new(ambient_dim);
        for v in vectors {
            basis.insert(v)?;
        }
        Ok(Subspace { basis })
    }

    pub fn from_echelon(basis: EchelonBasis) -> Self {
        Subspace { basis }
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &[Vector] {
        self.basis.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.basis.pivots()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains(&self, v: &[GaussianRational]) -> Result<bool> {
        self.basis.contains(v)
    }

    /// `v` minus its component along the pivot coordinates of this space.
    pub fn reduce(&self, v: &[GaussianRational]) -> Result<Vector> {
        self.basis.check_len(v)?;
        let mut w = v.to_vec();
        self.basis.reduce_in_place(&mut w);
        Ok(w)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim(),
                right: other.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut basis = self.basis.clone();
        for v in other.basis() {
            basis.insert(v.clone())?;
        }
        Ok(Subspace { basis })
    }

    /// `{x : v·x = 0 for all v in self}` under the bilinear (unconjugated) dot
    /// product, so that `annihilator(annihilator(A)) == A` over ℚ(i).
    pub fn annihilator(&self) -> Subspace {
        self.basis.null_space()
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for v in self.basis() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `dim self − dim sub`, defined when `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize> {
        if !sub.is_subspace_of(self)? {
            return Err(Error::NotASubspace);
        }
        Ok(self.dim() - sub.dim())
    }
}
