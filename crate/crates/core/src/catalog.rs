//! Constructors for the Diamond, complex Diamond and Heisenberg algebras.
//!
//! Basis order is fixed: `J, P_1..P_m, Q_1..Q_m, T` (complex: `J, P_k^+,
//! Q_k^-, T`); Heisenberg is `X_1..X_m, Y_1..Y_m, Z`. Every representation
//! and action table indexes against this order.

use crate::algebra::{AlgebraTable, Field, LinearMap};
use crate::error::{Error, Result};
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::{ExactMatrix, GaussianRational};

type G = GaussianRational;

/// Zero-based positions of the Diamond basis for a given `m`. `k` is the
/// one-based index used in the brackets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiamondBasis {
    pub m: usize,
}

impl DiamondBasis {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidM(m));
        }
        Ok(DiamondBasis { m })
    }

    pub fn dim(&self) -> usize {
        2 * self.m + 2
    }

    pub fn j(&self) -> usize {
        0
    }

    pub fn p(&self, k: usize) -> usize {
        debug_assert!((1..=self.m).contains(&k));
        k
    }

    pub fn q(&self, k: usize) -> usize {
        debug_assert!((1..=self.m).contains(&k));
        self.m + k
    }

    pub fn t(&self) -> usize {
        2 * self.m + 1
    }

    pub fn unit(&self, i: usize) -> Vector {
        vector::unit(self.dim(), i)
    }

    /// Recovers `m` from an algebra dimension `2m + 2`.
    pub fn from_dim(dim: usize) -> Option<Self> {
        (dim >= 4 && dim.is_multiple_of(2)).then(|| DiamondBasis { m: (dim - 2) / 2 })
    }
}

fn scaled_unit(n: usize, i: usize, c: G) -> Vector {
    let mut v = vector::zeros(n);
    v[i] = c;
    v
}

pub fn diamond_real_labels(m: usize) -> Vec<String> {
    let mut labels = vec!["J".to_string()];
    labels.extend((1..=m).map(|k| format!("P{k}")));
    labels.extend((1..=m).map(|k| format!("Q{k}")));
    labels.push("T".into());
    labels
}

pub fn diamond_complex_labels(m: usize) -> Vec<String> {
    let mut labels = vec!["J".to_string()];
    labels.extend((1..=m).map(|k| format!("P{k}+")));
    labels.extend((1..=m).map(|k| format!("Q{k}-")));
    labels.push("T".into());
    labels
}

pub fn heisenberg_labels(m: usize) -> Vec<String> {
    let mut labels: Vec<String> = (1..=m).map(|k| format!("X{k}")).collect();
    labels.extend((1..=m).map(|k| format!("Y{k}")));
    labels.push("Z".into());
    labels
}

/// The real Diamond algebra: `[J,P_k] = Q_k`, `[J,Q_k] = −P_k`,
/// `[P_k,Q_k] = T`, plus the antisymmetric counterparts.
pub fn diamond_real(m: usize) -> Result<AlgebraTable> {
    let b = DiamondBasis::new(m)?;
    let n = b.dim();
    let mut a = AlgebraTable::new(Field::Rational, diamond_real_labels(m));
    for k in 1..=m {
        a.set_antisymmetric(b.j(), b.p(k), &b.unit(b.q(k)))?;
        a.set_antisymmetric(b.j(), b.q(k), &scaled_unit(n, b.p(k), G::int(-1)))?;
        a.set_antisymmetric(b.p(k), b.q(k), &b.unit(b.t()))?;
    }
    Ok(a)
}

/// The complexified Diamond algebra in the basis `P_k^+ = P_k − iQ_k`,
/// `Q_k^- = P_k + iQ_k`: `[J,P_k^+] = iP_k^+`, `[J,Q_k^-] = −iQ_k^-`,
/// `[P_k^+,Q_k^-] = 2iT`.
pub fn diamond_complex(m: usize) -> Result<AlgebraTable> {
    let b = DiamondBasis::new(m)?;
    let n = b.dim();
    let mut a = AlgebraTable::new(Field::Gaussian, diamond_complex_labels(m));
    for k in 1..=m {
        a.set_antisymmetric(b.j(), b.p(k), &scaled_unit(n, b.p(k), G::i()))?;
        a.set_antisymmetric(b.j(), b.q(k), &scaled_unit(n, b.q(k), G::frac_i(-1, 1)))?;
        a.set_antisymmetric(b.p(k), b.q(k), &scaled_unit(n, b.t(), G::frac_i(2, 1)))?;
    }
    Ok(a)
}

/// `𝔥_m`: `[X_i, Y_i] = Z = −[Y_i, X_i]`.
pub fn heisenberg(m: usize) -> Result<AlgebraTable> {
    if m == 0 {
        return Err(Error::InvalidM(m));
    }
    let n = 2 * m + 1;
    let mut a = AlgebraTable::new(Field::Rational, heisenberg_labels(m));
    for k in 0..m {
        a.set_antisymmetric(k, m + k, &vector::unit(n, 2 * m))?;
    }
    Ok(a)
}

/// Extends scalars of [`diamond_real`] to ℚ(i) and rewrites it in the basis
/// `P_k^+ = P_k − iQ_k`, `Q_k^- = P_k + iQ_k` (`J`, `T` unchanged).
///
/// The returned map sends each new basis vector to its coordinates in the
/// real basis.
pub fn complexify_diamond(m: usize) -> Result<(AlgebraTable, LinearMap)> {
    let b = DiamondBasis::new(m)?;
    let n = b.dim();
    let real = diamond_real(m)?.with_field(Field::Gaussian)?;
    let mut change = ExactMatrix::zeros(n, n);
    change.set(b.j(), b.j(), G::one());
    change.set(b.t(), b.t(), G::one());
    for k in 1..=m {
        change.set(b.p(k), b.p(k), G::one());
        change.set(b.p(k), b.q(k), G::frac_i(-1, 1));
        change.set(b.q(k), b.p(k), G::one());
        change.set(b.q(k), b.q(k), G::i());
    }
    let table = real.change_basis(&change, diamond_complex_labels(m))?;
    Ok((table, LinearMap::new(change)))
}

/// Catalog algebras addressable by name.
pub fn by_name(name: &str, m: usize) -> Result<AlgebraTable> {
    match name {
        "diamond-real" => diamond_real(m),
        "diamond-complex" => diamond_complex(m),
        "heisenberg" => heisenberg(m),
        other => Err(Error::Parse(format!("unknown algebra {other:?}"))),
    }
}

/// Identifies a catalog algebra by its basis labels.
pub fn recognize(labels: &[String]) -> Option<AlgebraTable> {
    let m = DiamondBasis::from_dim(labels.len()).map(|b| b.m);
    if let Some(m) = m {
        if labels == diamond_real_labels(m).as_slice() {
            return diamond_real(m).ok();
        }
        if labels == diamond_complex_labels(m).as_slice() {
            return diamond_complex(m).ok();
        }
    }
    if !labels.len().is_multiple_of(2) && labels.len() >= 3 {
        let m = (labels.len() - 1) / 2;
        if labels == heisenberg_labels(m).as_slice() {
            return heisenberg(m).ok();
        }
    }
    None
}
