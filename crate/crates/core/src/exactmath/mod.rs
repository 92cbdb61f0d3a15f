//! Exact arithmetic over ℚ and ℚ(i) and the dense linear algebra built on it.

mod gaussian;
mod matrix;
mod rational;
mod subspace;

pub use gaussian::GaussianRational;
pub use matrix::{ExactMatrix, Rref};
pub use rational::Rational;
pub use subspace::{EchelonBasis, Subspace};

pub mod vector {
    //! Helpers for plain coefficient vectors.

    use super::GaussianRational;

    pub type Vector = Vec<GaussianRational>;

    pub fn zeros(n: usize) -> Vector {
        vec![GaussianRational::zero(); n]
    }

    pub fn unit(n: usize, i: usize) -> Vector {
        let mut v = zeros(n);
        v[i] = GaussianRational::one();
        v
    }

    pub fn is_zero(v: &[GaussianRational]) -> bool {
        v.iter().all(GaussianRational::is_zero)
    }

    /// `acc += c·x`.
    pub fn axpy(acc: &mut [GaussianRational], c: &GaussianRational, x: &[GaussianRational]) {
        debug_assert_eq!(acc.len(), x.len());
        if c.is_zero() {
            return;
        }
        for (a, b) in acc.iter_mut().zip(x) {
            if !b.is_zero() {
                *a = &*a + &(c * b);
            }
        }
    }

    pub fn scale(c: &GaussianRational, x: &[GaussianRational]) -> Vector {
        x.iter().map(|b| c * b).collect()
    }

    pub fn sub(x: &[GaussianRational], y: &[GaussianRational]) -> Vector {
        x.iter().zip(y).map(|(a, b)| a - b).collect()
    }

    pub fn add(x: &[GaussianRational], y: &[GaussianRational]) -> Vector {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }
}
