//! Independent cohomology oracle. It evaluates the Leibniz identity on built
//! extensions and ranks the results with plain sparse forward elimination,
//! sharing none of the library's constraint generation or echelon code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use leibniz_diamond::algebra::AlgebraTable;
use leibniz_diamond::extensions::{build_extension, Cocycle, ExtensionProblem};
use leibniz_diamond::GaussianRational as G;

pub type Sparse = BTreeMap<usize, G>;

fn axpy(acc: &mut Sparse, c: &G, x: &Sparse) {
    for (k, v) in x {
        let e = acc.entry(*k).or_insert_with(G::zero);
        *e = &*e + &(c * v);
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

fn basis_bracket(a: &AlgebraTable, i: usize, j: usize) -> Sparse {
    a.terms(i, j).iter().cloned().collect()
}

fn bracket_left_basis(a: &AlgebraTable, i: usize, y: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (j, c) in y {
        axpy(&mut out, c, &basis_bracket(a, i, *j));
    }
    out
}

fn bracket_right_basis(a: &AlgebraTable, x: &Sparse, j: usize) -> Sparse {
    let mut out = Sparse::new();
    for (i, c) in x {
        axpy(&mut out, c, &basis_bracket(a, *i, j));
    }
    out
}

/// `[x,[y,z]] − [[x,y],z] + [[x,z],y]` for basis elements.
fn leibniz_residual(a: &AlgebraTable, x: usize, y: usize, z: usize) -> Sparse {
    let mut r = bracket_left_basis(a, x, &basis_bracket(a, y, z));
    axpy(&mut r, &G::int(-1), &bracket_right_basis(a, &basis_bracket(a, x, y), z));
    axpy(&mut r, &G::one(), &bracket_right_basis(a, &basis_bracket(a, x, z), y));
    r
}

/// All Leibniz residuals over quotient triples, flattened.
fn residual_vector(p: &ExtensionProblem, omega: &Cocycle) -> Sparse {
    let ext = build_extension(p, omega).expect("shape");
    let (n, total) = (p.lie_dim(), ext.dim());
    let mut out = Sparse::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let base = ((x * n + y) * n + z) * total;
                for (k, v) in leibniz_residual(&ext, x, y, z) {
                    out.insert(base + k, v);
                }
            }
        }
    }
    out
}

/// Rank by forward elimination on sparse rows, pivoting on the leading column.
pub fn rank(rows: impl IntoIterator<Item = Sparse>) -> usize {
    let mut pivots: BTreeMap<usize, Sparse> = BTreeMap::new();
    for mut row in rows {
        while let Some((&lead, coeff)) = row.iter().next() {
            match pivots.get(&lead) {
                Some(prow) => {
                    let factor = -(coeff * &prow[&lead].inv().expect("pivot nonzero"));
                    axpy(&mut row, &factor, prow);
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn unit_cocycle(p: &ExtensionProblem, i: usize, j: usize, c: usize) -> Cocycle {
    let mut w = Cocycle::zero(p);
    w.add_term(i, j, c, G::one());
    w
}

/// The coboundary of the lift change `f(e_a) = X_w`, obtained by bracketing
/// lifted elements in the split extension.
fn coboundary_of_unit_lift(split: &AlgebraTable, n: usize, a: usize, w: usize) -> Sparse {
    let lift = |x: usize| -> Sparse {
        let mut v = Sparse::new();
        v.insert(x, G::one());
        if x == a {
            v.insert(n + w, G::one());
        }
        v
    };
    let mut out = Sparse::new();
    for x in 0..n {
        for y in 0..n {
            let lx = lift(x);
            let ly = lift(y);
            let mut br = Sparse::new();
            for (i, ci) in &lx {
                for (j, cj) in &ly {
                    axpy(&mut br, &(ci * cj), &basis_bracket(split, *i, *j));
                }
            }
            // Subtract the lift of the quotient bracket to leave the module part.
            for (k, c) in basis_bracket(split, x, y) {
                if k < n {
                    axpy(&mut br, &-&c, &lift(k));
                }
            }
            for (k, v) in br {
                assert!(k >= n, "lifted bracket left a quotient component");
                out.insert((x * n + y) * split.dim() + k, v);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCohomology {
    pub unknowns: usize,
    pub constraint_rank: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub quotient_dim: usize,
}

pub fn cohomology(p: &ExtensionProblem) -> OracleCohomology {
    let (n, d) = (p.lie_dim(), p.module_dim());
    let unknowns = n * n * d;
    let base = residual_vector(p, &Cocycle::zero(p));
    assert!(base.is_empty(), "split extension is not Leibniz");
    let columns = (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..d).map(move |c| (i, j, c))));
    let constraint_rank = rank(columns.map(|(i, j, c)| residual_vector(p, &unit_cocycle(p, i, j, c))));
    let split = build_extension(p, &Cocycle::zero(p)).expect("shape");
    let lifts = (0..n).flat_map(|a| (0..d).map(move |w| (a, w)));
    let coboundary_dim = rank(lifts.map(|(a, w)| coboundary_of_unit_lift(&split, n, a, w)));
    let cocycle_dim = unknowns - constraint_rank;
    OracleCohomology {
        unknowns,
        constraint_rank,
        cocycle_dim,
        coboundary_dim,
        quotient_dim: cocycle_dim - coboundary_dim,
    }
}
