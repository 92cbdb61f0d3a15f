use std::collections::VecDeque;

use super::{AlgebraTable, LinearMap, G};
use crate::error::{Error, Result};
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::{ExactMatrix, Subspace};

/// Span of all squares `[x, x]`, i.e. of the symmetrized brackets
/// `[e_i, e_j] + [e_j, e_i]` for `i ≤ j`.
pub fn squares_span(a: &AlgebraTable) -> Subspace {
    let n = a.dim();
    let gens = (0..n).flat_map(|i| {
        (i..n).map(move |j| vector::add(&a.bracket_basis(i, j), &a.bracket_basis(j, i)))
    });
    Subspace::span(n, gens).expect("bracket vectors have the algebra's dimension")
}

/// Smallest subspace containing `s` that is closed under bracketing with
/// every basis element on either side.
pub fn ideal_closure(a: &AlgebraTable, s: &Subspace) -> Result<Subspace> {
    let n = a.dim();
    if s.ambient_dim() != n {
        return Err(Error::AmbientMismatch {
            left: n,
            right: s.ambient_dim(),
        });
    }
    let mut basis = s.echelon().clone();
    let mut queue: VecDeque<Vector> = s.basis().iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        for k in 0..n {
            let e = vector::unit(n, k);
            for w in [a.bracket(&v, &e)?, a.bracket(&e, &v)?] {
                if basis.insert(w.clone())? {
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(Subspace::from_echelon(basis))
}

/// The ideal generated by squares; its quotient is the largest Lie quotient.
pub fn squares_ideal(a: &AlgebraTable) -> Subspace {
    ideal_closure(a, &squares_span(a)).expect("ambient matches")
}

pub fn is_ideal(a: &AlgebraTable, s: &Subspace) -> Result<bool> {
    Ok(ideal_closure(a, s)? == *s)
}

/// Kernel of the stacked constraints `Σ_j v_j c(i, j)^k = 0` over all `i, k`,
/// where `pick(i, j)` selects which structure constants to use.
fn annihilator_by(a: &AlgebraTable, pick: impl Fn(usize, usize) -> (usize, usize)) -> Subspace {
    let n = a.dim();
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for k in 0..n {
            let row: Vector = (0..n)
                .map(|j| {
                    let (p, q) = pick(i, j);
                    a.structure_constant(p, q, k)
                })
                .collect();
            if !vector::is_zero(&row) {
                rows.push(row);
            }
        }
    }
    ExactMatrix::from_rows(n, rows)
        .expect("rows have the algebra's dimension")
        .kernel()
}

/// `{v : [x, v] = 0 for all x}`.
pub fn right_annihilator(a: &AlgebraTable) -> Subspace {
    annihilator_by(a, |i, j| (i, j))
}

/// `{v : [v, x] = 0 for all x}`.
pub fn left_annihilator(a: &AlgebraTable) -> Subspace {
    annihilator_by(a, |i, j| (j, i))
}

pub fn center(a: &AlgebraTable) -> Subspace {
    right_annihilator(a)
        .intersection(&left_annihilator(a))
        .expect("same ambient")
}

/// Quotient by a two-sided ideal. Coset representatives are the basis
/// vectors at the non-pivot columns of the ideal's canonical basis; the
/// returned map projects onto them.
pub fn quotient_algebra(a: &AlgebraTable, ideal: &Subspace) -> Result<(AlgebraTable, LinearMap)> {
    if !is_ideal(a, ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let n = a.dim();
    let mut is_pivot = vec![false; n];
    for &p in ideal.pivots() {
        is_pivot[p] = true;
    }
    let reps: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
    let project = |v: &[G]| -> Result<Vector> {
        let r = ideal.reduce(v)?;
        Ok(reps.iter().map(|&i| r[i].clone()).collect())
    };

    let mut q = AlgebraTable::new(a.field(), reps.iter().map(|&i| a.label(i).to_string()));
    for (qa, &ra) in reps.iter().enumerate() {
        for (qb, &rb) in reps.iter().enumerate() {
            q.set_bracket(qa, qb, &project(&a.bracket_basis(ra, rb))?)?;
        }
    }
    let proj_rows = (0..n)
        .map(|i| project(&vector::unit(n, i)))
        .collect::<Result<Vec<_>>>()?;
    let proj = LinearMap::new(ExactMatrix::from_rows(reps.len(), proj_rows)?);
    Ok((q, proj))
}

/// Restriction to the span of a subset of basis vectors, which must be closed
/// under the bracket.
pub fn subalgebra(a: &AlgebraTable, indices: &[usize]) -> Result<AlgebraTable> {
    let mut position = vec![None; a.dim()];
    for (new, &old) in indices.iter().enumerate() {
        if old >= a.dim() {
            return Err(Error::IndexOutOfRange {
                index: old,
                dim: a.dim(),
            });
        }
        position[old] = Some(new);
    }
    let mut sub = AlgebraTable::new(a.field(), indices.iter().map(|&i| a.label(i).to_string()));
    for (ni, &i) in indices.iter().enumerate() {
        for (nj, &j) in indices.iter().enumerate() {
            for (k, c) in a.terms(i, j) {
                let nk = position[*k].ok_or_else(|| {
                    Error::InvalidProblem(format!(
                        "[{}, {}] leaves the chosen span (component on {})",
                        a.label(i),
                        a.label(j),
                        a.label(*k)
                    ))
                })?;
                sub.add_term(ni, nj, nk, c.clone())?;
            }
        }
    }
    Ok(sub)
}
