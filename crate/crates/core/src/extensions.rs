//! Leibniz algebras `G ⊕ M` over a Lie algebra `G` and a right `G`-module `M`.
//!
//! Module elements only bracket from the left: `[v, x] = v·x`, `[x, v] = 0`,
//! `[v, w] = 0`. Brackets of lifted quotient elements may pick up a module
//! component `ω(x, y)`; the Leibniz identity on triples from `G` is linear in
//! `ω` and cuts out the cocycle space, while changing lifts `x ↦ x + f(x)`
//! moves `ω` by the coboundary `δf(x, y) = f(x)·y − f([x, y])`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{self, check_lie, AlgebraTable, LinearMap};
use crate::catalog::{self, DiamondBasis};
use crate::error::{Error, Result};
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::{EchelonBasis, ExactMatrix, GaussianRational, Rational, Subspace};
use crate::reps::{self, check_right_module, ModuleAction};

type G = GaussianRational;

/// Seed for every pseudo-random sample drawn in this module.
pub const SAMPLE_SEED: u64 = 0xD1A3_0001;

/// A Lie algebra together with a right module over it.
#[derive(Clone, Debug)]
pub struct ExtensionProblem {
    quotient: AlgebraTable,
    action: ModuleAction,
    // act[e][v] = X_v · e, dense.
    act: Vec<Vec<Vector>>,
}

impl ExtensionProblem {
    pub fn new(quotient: AlgebraTable, action: ModuleAction) -> Result<Self> {
        if action.algebra() != &quotient {
            return Err(Error::InvalidProblem(
                "module action is over a different algebra".into(),
            ));
        }
        let lie = check_lie(&quotient);
        if !lie.passed() {
            return Err(Error::InvalidProblem(format!("quotient is not Lie: {lie}")));
        }
        let module = check_right_module(&action);
        if !module.passed() {
            return Err(Error::InvalidProblem(format!("not a right module: {module}")));
        }
        let act = (0..quotient.dim())
            .map(|e| (0..action.module_dim()).map(|v| action.act_basis(v, e)).collect())
            .collect();
        Ok(ExtensionProblem {
            quotient,
            action,
            act,
        })
    }

    /// Complex Diamond algebra with its natural `(m+2)`-dimensional module.
    pub fn sl(m: usize) -> Result<Self> {
        Self::new(catalog::diamond_complex(m)?, reps::action_table_sl(m)?)
    }

    /// Real Diamond algebra with its natural `(2m+2)`-dimensional module.
    pub fn sp(m: usize) -> Result<Self> {
        Self::new(catalog::diamond_real(m)?, reps::action_table_sp(m)?)
    }

    pub fn quotient(&self) -> &AlgebraTable {
        &self.quotient
    }

    pub fn action(&self) -> &ModuleAction {
        &self.action
    }

    /// Dimension of the quotient Lie algebra.
    pub fn lie_dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn module_dim(&self) -> usize {
        self.action.module_dim()
    }

    /// Number of coordinates of a cocycle, `dim² · module_dim`.
    pub fn unknowns(&self) -> usize {
        self.lie_dim() * self.lie_dim() * self.module_dim()
    }

    /// Coordinate of the `X_c` component of `ω(e_i, e_j)`.
    pub fn index(&self, i: usize, j: usize, c: usize) -> usize {
        (i * self.lie_dim() + j) * self.module_dim() + c
    }

    fn act_coef(&self, v: usize, e: usize, c: usize) -> &G {
        &self.act[e][v][c]
    }
}

/// Module components `ω(e_i, e_j)` of the brackets of lifted basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    lie_dim: usize,
    module_dim: usize,
    coeffs: Vector,
}

impl Cocycle {
    pub fn zero(p: &ExtensionProblem) -> Self {
        Cocycle {
            lie_dim: p.lie_dim(),
            module_dim: p.module_dim(),
            coeffs: vector::zeros(p.unknowns()),
        }
    }

    pub fn from_vector(p: &ExtensionProblem, coeffs: Vector) -> Result<Self> {
        if coeffs.len() != p.unknowns() {
            return Err(Error::DimensionMismatch {
                expected: p.unknowns(),
                found: coeffs.len(),
            });
        }
        Ok(Cocycle {
            lie_dim: p.lie_dim(),
            module_dim: p.module_dim(),
            coeffs,
        })
    }

    pub fn as_vector(&self) -> &[G] {
        &self.coeffs
    }

    pub fn lie_dim(&self) -> usize {
        self.lie_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.lie_dim + j) * self.module_dim
    }

    pub fn get(&self, i: usize, j: usize) -> &[G] {
        let o = self.offset(i, j);
        &self.coeffs[o..o + self.module_dim]
    }

    /// Adds `coeff·X_c` to `ω(e_i, e_j)` (zero-based indices).
    pub fn add_term(&mut self, i: usize, j: usize, c: usize, coeff: G) {
        let o = self.offset(i, j) + c;
        self.coeffs[o] = &self.coeffs[o] + &coeff;
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.coeffs)
    }

    pub fn add(&self, other: &Cocycle) -> Cocycle {
        Cocycle {
            coeffs: vector::add(&self.coeffs, &other.coeffs),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Cocycle) -> Cocycle {
        Cocycle {
            coeffs: vector::sub(&self.coeffs, &other.coeffs),
            ..self.clone()
        }
    }

    /// Nonzero `(i, j, c, coefficient)` in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, usize, &G)> {
        let (n, d) = (self.lie_dim, self.module_dim);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(u, x)| (u / (n * d), (u / d) % n, u % d, x))
    }

    fn check_shape(&self, p: &ExtensionProblem) -> Result<()> {
        if self.lie_dim != p.lie_dim() || self.module_dim != p.module_dim() {
            return Err(Error::DimensionMismatch {
                expected: p.unknowns(),
                found: self.coeffs.len(),
            });
        }
        Ok(())
    }
}

/// A change of lifts `e_i ↦ e_i + f(e_i)` with `f(e_i)` in the module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftMap {
    lie_dim: usize,
    module_dim: usize,
    coeffs: Vector,
}

impl LiftMap {
    pub fn zero(p: &ExtensionProblem) -> Self {
        LiftMap {
            lie_dim: p.lie_dim(),
            module_dim: p.module_dim(),
            coeffs: vector::zeros(p.lie_dim() * p.module_dim()),
        }
    }

    /// `f(e_i)` as a module vector.
    pub fn image(&self, i: usize) -> &[G] {
        &self.coeffs[i * self.module_dim..(i + 1) * self.module_dim]
    }

    pub fn set(&mut self, i: usize, value: &[G]) {
        let d = self.module_dim;
        self.coeffs[i * d..(i + 1) * d].clone_from_slice(value);
    }

    pub fn as_vector(&self) -> &[G] {
        &self.coeffs
    }
}

/// `G ⊕ M` with `[g_i, g_j] = [g_i, g_j]_G + ω(i, j)`, `[v, g] = v·g` and all
/// brackets with a module element on the right zero. Module basis vectors are
/// labelled `X1..XN` after the quotient's labels.
pub fn build_extension(p: &ExtensionProblem, omega: &Cocycle) -> Result<AlgebraTable> {
    omega.check_shape(p)?;
    let (n, d) = (p.lie_dim(), p.module_dim());
    let labels = p
        .quotient
        .labels()
        .iter()
        .cloned()
        .chain(p.action.module_labels());
    let mut a = AlgebraTable::new(p.quotient.field(), labels);
    for (i, j, k, c) in p.quotient.entries() {
        a.add_term(i, j, k, c.clone())?;
    }
    for (i, j, c, x) in omega.terms() {
        a.add_term(i, j, n + c, x.clone())?;
    }
    for (v, e, img) in p.action.entries() {
        for (c, x) in img.iter().enumerate() {
            if !x.is_zero() {
                a.add_term(n + v, e, n + c, x.clone())?;
            }
        }
    }
    debug_assert_eq!(a.dim(), n + d);
    Ok(a)
}

/// Sparse row of the cocycle condition for the triple `(x, y, z)` in module
/// coordinate `c`:
/// `ω(x,[y,z]) − ω([x,y],z) − ω(x,y)·z + ω([x,z],y) + ω(x,z)·y = 0`.
pub fn constraint_row(p: &ExtensionProblem, x: usize, y: usize, z: usize, c: usize) -> Vec<(usize, G)> {
    let q = &p.quotient;
    let d = p.module_dim();
    let mut row: Vec<(usize, G)> = Vec::new();
    for (l, coef) in q.terms(y, z) {
        row.push((p.index(x, *l, c), coef.clone()));
    }
    for (l, coef) in q.terms(x, y) {
        row.push((p.index(*l, z, c), -coef));
    }
    for (l, coef) in q.terms(x, z) {
        row.push((p.index(*l, y, c), coef.clone()));
    }
    for w in 0..d {
        let a = p.act_coef(w, z, c);
        if !a.is_zero() {
            row.push((p.index(x, y, w), -a));
        }
        let b = p.act_coef(w, y, c);
        if !b.is_zero() {
            row.push((p.index(x, z, w), b.clone()));
        }
    }
    // Merge duplicate columns.
    row.sort_by_key(|(u, _)| *u);
    let mut merged: Vec<(usize, G)> = Vec::with_capacity(row.len());
    for (u, v) in row {
        match merged.last_mut() {
            Some((last, acc)) if *last == u => *acc = &*acc + &v,
            _ => merged.push((u, v)),
        }
    }
    merged.retain(|(_, v)| !v.is_zero());
    merged
}

/// Row index of `(x, y, z, c)` in [`cocycle_constraints`].
pub fn constraint_index(p: &ExtensionProblem, x: usize, y: usize, z: usize, c: usize) -> usize {
    let n = p.lie_dim();
    ((x * n + y) * n + z) * p.module_dim() + c
}

fn for_each_constraint(p: &ExtensionProblem, mut f: impl FnMut(Vec<(usize, G)>)) {
    let n = p.lie_dim();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for c in 0..p.module_dim() {
                    f(constraint_row(p, x, y, z, c));
                }
            }
        }
    }
}

fn densify(len: usize, row: &[(usize, G)]) -> Vector {
    let mut v = vector::zeros(len);
    for (u, x) in row {
        v[*u] = x.clone();
    }
    v
}

/// One equation per (basis triple, module coordinate), in the order given by
/// [`constraint_index`]; columns are the cocycle coordinates.
pub fn cocycle_constraints(p: &ExtensionProblem) -> ExactMatrix {
    let u = p.unknowns();
    let mut rows = Vec::new();
    for_each_constraint(p, |r| rows.push(densify(u, &r)));
    ExactMatrix::from_rows(u, rows).expect("rows have one entry per unknown")
}

/// Kernel of [`cocycle_constraints`], computed without materializing the
/// full matrix.
pub fn cocycle_space(p: &ExtensionProblem) -> Subspace {
    let u = p.unknowns();
    let mut basis = EchelonBasis::new(u);
    for_each_constraint(p, |r| {
        if !r.is_empty() {
            basis.insert(densify(u, &r)).expect("row length matches");
        }
    });
    basis.null_space()
}

/// Matrix of `δ`: row `i·d + w` is `δf` for the lift `f(e_i) = X_w`.
pub fn coboundary_matrix(p: &ExtensionProblem) -> ExactMatrix {
    let (n, d) = (p.lie_dim(), p.module_dim());
    let mut rows = Vec::with_capacity(n * d);
    for a in 0..n {
        for w in 0..d {
            let mut row = vector::zeros(p.unknowns());
            // f(x)·y, nonzero only for x = e_a.
            for y in 0..n {
                for c in 0..d {
                    let v = p.act_coef(w, y, c);
                    if !v.is_zero() {
                        let u = p.index(a, y, c);
                        row[u] = &row[u] + v;
                    }
                }
            }
            // −f([x, y]): the e_a component of [x, y], sent to X_w.
            for x in 0..n {
                for y in 0..n {
                    for (l, coef) in p.quotient.terms(x, y) {
                        if *l == a {
                            let u = p.index(x, y, w);
                            row[u] = &row[u] - coef;
                        }
                    }
                }
            }
            rows.push(row);
        }
    }
    ExactMatrix::from_rows(p.unknowns(), rows).expect("rows have one entry per unknown")
}

/// `δf(x, y) = f(x)·y − f([x, y])`.
pub fn coboundary(p: &ExtensionProblem, f: &LiftMap) -> Cocycle {
    let coeffs = coboundary_matrix(p)
        .left_apply(f.as_vector())
        .expect("lift has lie_dim·module_dim coordinates");
    Cocycle::from_vector(p, coeffs).expect("unknown count matches")
}

pub fn coboundary_space(p: &ExtensionProblem) -> Subspace {
    coboundary_matrix(p).row_space()
}

/// Cocycles, coboundaries and a complement of the latter in the former.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    pub quotient_dim: usize,
    /// Cocycle basis vectors (in canonical order) that extend the coboundary
    /// basis to a basis of the cocycle space.
    pub representatives: Vec<Cocycle>,
}

pub fn cohomology(p: &ExtensionProblem) -> CohomologyReport {
    let cocycles = cocycle_space(p);
    let coboundaries = coboundary_space(p);
    let quotient_dim = cocycles
        .quotient_dim(&coboundaries)
        .expect("every coboundary is a cocycle");
    let mut span = coboundaries.echelon().clone();
    let mut representatives = Vec::with_capacity(quotient_dim);
    for v in cocycles.basis() {
        if span.insert(v.clone()).expect("same ambient") {
            representatives.push(Cocycle::from_vector(p, v.clone()).expect("same ambient"));
        }
    }
    debug_assert_eq!(representatives.len(), quotient_dim);
    CohomologyReport {
        cocycles,
        coboundaries,
        quotient_dim,
        representatives,
    }
}

/// A lift change `f` with `ω + δf = 0`, if `ω` is a coboundary.
pub fn solve_lift(p: &ExtensionProblem, omega: &Cocycle) -> Result<Option<LiftMap>> {
    omega.check_shape(p)?;
    let rhs: Vector = omega.as_vector().iter().map(|x| -x).collect();
    let sol = coboundary_matrix(p).transpose().solve(&rhs)?;
    Ok(sol.map(|coeffs| LiftMap {
        lie_dim: p.lie_dim(),
        module_dim: p.module_dim(),
        coeffs,
    }))
}

/// The isomorphism `build(ω + δf) → build(ω)` sending `e_i ↦ e_i + f(e_i)`
/// and fixing the module.
pub fn lift_isomorphism(p: &ExtensionProblem, f: &LiftMap) -> LinearMap {
    let (n, d) = (p.lie_dim(), p.module_dim());
    let mut m = ExactMatrix::identity(n + d);
    for i in 0..n {
        for (c, x) in f.image(i).iter().enumerate() {
            m.set(i, n + c, x.clone());
        }
    }
    LinearMap::new(m)
}

/// Seeded random integer combinations (coefficients in `-9..=9`) of a
/// subspace basis.
pub fn sample_vectors(space: &Subspace, count: usize, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut v = vector::zeros(space.ambient_dim());
            for b in space.basis() {
                vector::axpy(&mut v, &G::int(rng.gen_range(-9..=9)), b);
            }
            v
        })
        .collect()
}

/// Seeded lift map with small integer coefficients, real unless the
/// problem is over ℚ(i).
pub fn sample_lift(p: &ExtensionProblem, seed: u64) -> LiftMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = LiftMap::zero(p);
    let complex = p.quotient.field() == algebra::Field::Gaussian;
    for x in f.coeffs.iter_mut() {
        let re = Rational::integer(rng.gen_range(-9..=9));
        let im = if complex {
            Rational::integer(rng.gen_range(-9..=9))
        } else {
            Rational::zero()
        };
        *x = G::new(re, im);
    }
    f
}

/// Outcome of the splitting check for the complex Diamond algebra with its
/// natural module.
#[derive(Clone, Debug)]
pub struct SplitReport {
    pub m: usize,
    pub quotient_dim: usize,
    /// Sampled cocycles with the lift change that kills each, if found.
    pub samples: Vec<(Cocycle, Option<LiftMap>)>,
}

impl SplitReport {
    pub fn passed(&self) -> bool {
        self.quotient_dim == 0 && self.samples.iter().all(|(_, f)| f.is_some())
    }
}

/// Shows every extension of `𝔇_m(ℂ)` by its natural module splits: the
/// cohomology vanishes, and for three seeded cocycles an explicit lift change
/// with `ω + δf = 0` is constructed and checked.
pub fn theorem1_split_check(m: usize) -> Result<SplitReport> {
    let p = ExtensionProblem::sl(m)?;
    let h = cohomology(&p);
    let mut samples = Vec::new();
    for v in sample_vectors(&h.cocycles, 3, SAMPLE_SEED + m as u64) {
        let omega = Cocycle::from_vector(&p, v)?;
        let f = solve_lift(&p, &omega)?.filter(|f| omega.add(&coboundary(&p, f)).is_zero());
        samples.push((omega, f));
    }
    Ok(SplitReport {
        m,
        quotient_dim: h.quotient_dim,
        samples,
    })
}

/// Checks that `b` is antisymmetric and `c` symmetric, both `m × m` with zero
/// diagonal.
pub fn check_theorem2_params(m: usize, b: &[Vec<Rational>], c: &[Vec<Rational>]) -> Result<()> {
    for (name, mat) in [("b", b), ("c", c)] {
        if mat.len() != m || mat.iter().any(|r| r.len() != m) {
            return Err(Error::Restriction(format!("{name} must be {m}x{m}")));
        }
    }
    for k in 0..m {
        for (name, mat) in [("b", b), ("c", c)] {
            if !mat[k][k].is_zero() {
                return Err(Error::Restriction(format!(
                    "{name}_{{{0},{0}}} = 0 (diagonal entries are not parameters), got {1}",
                    k + 1,
                    mat[k][k]
                )));
            }
        }
        for s in k + 1..m {
            if b[k][s] != -&b[s][k] {
                return Err(Error::Restriction(format!(
                    "b_{{k,s}} = -b_{{s,k}} fails at (k,s) = ({}, {}): {} vs {}",
                    k + 1,
                    s + 1,
                    b[k][s],
                    b[s][k]
                )));
            }
            if c[k][s] != c[s][k] {
                return Err(Error::Restriction(format!(
                    "c_{{k,s}} = c_{{s,k}} fails at (k,s) = ({}, {}): {} vs {}",
                    k + 1,
                    s + 1,
                    c[k][s],
                    c[s][k]
                )));
            }
        }
    }
    Ok(())
}

/// The normal-form cocycle for `𝔇_m` with the symplectic module, all
/// components on `X_{2m+2}`:
/// `ω(J,J) = a₁`, `ω(P_k,P_s) = ω(Q_k,Q_s) = b_{k,s}`, `ω(P_k,Q_s) = c_{k,s}`,
/// `ω(Q_k,P_s) = −c_{k,s}`.
///
/// The minus sign on `ω(Q_k,P_s)` is forced by the Leibniz identity on
/// `(P_k, P_s, J)`; with `+c_{k,s}` the result is not Leibniz unless `c = 0`.
pub fn theorem2_cocycle_unchecked(
    p: &ExtensionProblem,
    a1: &Rational,
    b: &[Vec<Rational>],
    c: &[Vec<Rational>],
) -> Result<Cocycle> {
    let basis = DiamondBasis::from_dim(p.lie_dim())
        .ok_or_else(|| Error::InvalidProblem("quotient is not a Diamond algebra".into()))?;
    let m = basis.m;
    if b.len() != m || c.len() != m || b.iter().chain(c).any(|r| r.len() != m) {
        return Err(Error::Restriction(format!("b and c must be {m}x{m}")));
    }
    let top = p.module_dim() - 1;
    let mut omega = Cocycle::zero(p);
    omega.add_term(basis.j(), basis.j(), top, a1.clone().into());
    for k in 1..=m {
        for s in 1..=m {
            if k == s {
                continue;
            }
            let bks: G = b[k - 1][s - 1].clone().into();
            let cks: G = c[k - 1][s - 1].clone().into();
            omega.add_term(basis.p(k), basis.p(s), top, bks.clone());
            omega.add_term(basis.q(k), basis.q(s), top, bks);
            omega.add_term(basis.p(k), basis.q(s), top, cks.clone());
            omega.add_term(basis.q(k), basis.p(s), top, -cks);
        }
    }
    Ok(omega)
}

/// [`theorem2_cocycle_unchecked`] after validating the parameter restrictions.
pub fn theorem2_cocycle(
    m: usize,
    a1: &Rational,
    b: &[Vec<Rational>],
    c: &[Vec<Rational>],
) -> Result<(ExtensionProblem, Cocycle)> {
    DiamondBasis::new(m)?;
    check_theorem2_params(m, b, c)?;
    let p = ExtensionProblem::sp(m)?;
    let omega = theorem2_cocycle_unchecked(&p, a1, b, c)?;
    Ok((p, omega))
}

/// The `(4m+4)`-dimensional Leibniz algebra with the normal-form table over
/// `𝔇_m` and the symplectic module.
pub fn theorem2_table(
    m: usize,
    a1: &Rational,
    b: &[Vec<Rational>],
    c: &[Vec<Rational>],
) -> Result<AlgebraTable> {
    let (p, omega) = theorem2_cocycle(m, a1, b, c)?;
    build_extension(&p, &omega)
}

/// Seeded admissible parameters `(a₁, b, c)` with entries in `-9..=9`.
pub fn sample_theorem2_params(m: usize, seed: u64) -> (Rational, Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || Rational::integer(rng.gen_range(-9..=9));
    let a1 = draw();
    let mut b = vec![vec![Rational::zero(); m]; m];
    let mut c = vec![vec![Rational::zero(); m]; m];
    for k in 0..m {
        for s in k + 1..m {
            b[k][s] = draw();
            b[s][k] = -&b[k][s];
            c[k][s] = draw();
            c[s][k] = c[k][s].clone();
        }
    }
    (a1, b, c)
}

/// Squares ideal of the split extension `build_extension(p, 0)`, as a
/// subspace of `G ⊕ M`.
pub fn split_squares_ideal(p: &ExtensionProblem) -> Result<Subspace> {
    let a = build_extension(p, &Cocycle::zero(p))?;
    Ok(algebra::squares_ideal(&a))
}

/// The module `M` as a subspace of `G ⊕ M`.
pub fn module_subspace(p: &ExtensionProblem) -> Subspace {
    let (n, d) = (p.lie_dim(), p.module_dim());
    Subspace::span(n + d, (n..n + d).map(|i| vector::unit(n + d, i))).expect("unit vectors")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_leibniz, quotient_algebra, verify_iso, Field};

    fn zeros(m: usize) -> Vec<Vec<Rational>> {
        vec![vec![Rational::zero(); m]; m]
    }

    #[test]
    fn split_complex_extension_is_leibniz() {
        let p = ExtensionProblem::sl(1).unwrap();
        let a = build_extension(&p, &Cocycle::zero(&p)).unwrap();
        assert_eq!(a.dim(), 7);
        assert!(check_leibniz(&a).passed());
        let (q, _) = quotient_algebra(&a, &module_subspace(&p)).unwrap();
        assert_eq!(q, catalog::diamond_complex(1).unwrap());
    }

    #[test]
    fn a1_only_cocycle_is_leibniz() {
        let (p, omega) = theorem2_cocycle(1, &Rational::integer(5), &zeros(1), &zeros(1)).unwrap();
        let a = build_extension(&p, &omega).unwrap();
        assert!(check_leibniz(&a).passed());
        assert_eq!(a.bracket_basis(0, 0)[7], G::int(5));
    }

    #[test]
    fn trivial_problem_has_no_constraints() {
        let g = AlgebraTable::new(Field::Rational, ["x", "y"]);
        let act = ModuleAction::new(g.clone(), 2);
        let p = ExtensionProblem::new(g, act).unwrap();
        assert!(cocycle_constraints(&p).is_zero());
        assert_eq!(cocycle_space(&p), Subspace::full(8));
        assert!(coboundary_space(&p).is_zero());
    }

    #[test]
    fn problem_validation() {
        let bad_module = {
            let mut t = reps::action_table_sp(1).unwrap();
            t.set(0, 3, vector::unit(4, 3)).unwrap();
            t
        };
        assert!(matches!(
            ExtensionProblem::new(catalog::diamond_real(1).unwrap(), bad_module),
            Err(Error::InvalidProblem(_))
        ));
        assert!(ExtensionProblem::new(catalog::diamond_real(2).unwrap(), reps::action_table_sp(1).unwrap()).is_err());
    }

    #[test]
    fn wrong_shape_cocycle_rejected() {
        let p1 = ExtensionProblem::sp(1).unwrap();
        let p2 = ExtensionProblem::sp(2).unwrap();
        assert!(build_extension(&p1, &Cocycle::zero(&p2)).is_err());
        assert!(Cocycle::from_vector(&p1, vec![]).is_err());
    }

    #[test]
    fn t_j_row_from_complex_triple() {
        // The (P1+, J, Q1-) equations pin the module part of [T, J].
        let p = ExtensionProblem::sl(1).unwrap();
        let b = DiamondBasis::new(1).unwrap();
        for c in 0..3 {
            let row = constraint_row(&p, b.p(1), b.j(), b.q(1), c);
            assert!(row.iter().any(|(u, _)| *u == p.index(b.t(), b.j(), c)));
        }
        let h = cohomology(&p);
        for v in h.cocycles.basis() {
            let omega = Cocycle::from_vector(&p, v.clone()).unwrap();
            // Every cocycle is killed by some lift change.
            let f = solve_lift(&p, &omega).unwrap().unwrap();
            assert!(omega.add(&coboundary(&p, &f)).is_zero());
        }
    }

    #[test]
    fn delta_of_j_lift() {
        let p = ExtensionProblem::sl(1).unwrap();
        let mut f = LiftMap::zero(&p);
        f.set(0, &vector::unit(3, 0));
        let d = coboundary(&p, &f);
        assert_eq!(d.get(0, 0), &[G::frac_i(1, 3), G::zero(), G::zero()]);

        let p = ExtensionProblem::sp(1).unwrap();
        let mut f = LiftMap::zero(&p);
        f.set(0, &vector::unit(4, 0));
        assert!(vector::is_zero(coboundary(&p, &f).get(0, 0)));
    }

    #[test]
    fn coboundary_of_zero_is_zero() {
        let p = ExtensionProblem::sp(2).unwrap();
        assert!(coboundary(&p, &LiftMap::zero(&p)).is_zero());
    }

    #[test]
    fn lift_change_is_isomorphism() {
        for p in [ExtensionProblem::sl(1).unwrap(), ExtensionProblem::sp(1).unwrap()] {
            let h = cohomology(&p);
            let omega = Cocycle::from_vector(&p, sample_vectors(&h.cocycles, 1, 7).remove(0)).unwrap();
            let f = sample_lift(&p, 11);
            let a = build_extension(&p, &omega).unwrap();
            let b = build_extension(&p, &omega.add(&coboundary(&p, &f))).unwrap();
            assert!(check_leibniz(&b).passed());
            assert!(verify_iso(&lift_isomorphism(&p, &f), &b, &a).passed());
        }
    }

    #[test]
    fn theorem2_restrictions() {
        let mut b = zeros(2);
        b[0][1] = Rational::one();
        b[1][0] = Rational::one();
        let err = theorem2_table(2, &Rational::one(), &b, &zeros(2)).unwrap_err();
        assert!(matches!(err, Error::Restriction(ref s) if s.contains("b_{k,s} = -b_{s,k}")));

        let mut c = zeros(2);
        c[0][1] = Rational::one();
        c[1][0] = Rational::integer(2);
        let err = theorem2_table(2, &Rational::one(), &zeros(2), &c).unwrap_err();
        assert!(matches!(err, Error::Restriction(ref s) if s.contains("c_{k,s} = c_{s,k}")));

        let mut d = zeros(2);
        d[1][1] = Rational::one();
        assert!(theorem2_table(2, &Rational::one(), &zeros(2), &d).is_err());
        assert!(theorem2_table(0, &Rational::one(), &[], &[]).is_err());
    }

    #[test]
    fn theorem2_m2_brackets() {
        let mut b = zeros(2);
        b[0][1] = Rational::one();
        b[1][0] = Rational::integer(-1);
        let a = theorem2_table(2, &Rational::zero(), &b, &zeros(2)).unwrap();
        let x6 = vector::unit(12, 11);
        assert_eq!(a.bracket_basis(1, 2), x6);
        assert_eq!(a.bracket_basis(3, 4), x6);
        assert_eq!(a.bracket_basis(2, 1), vector::scale(&G::int(-1), &x6));
        assert!(check_leibniz(&a).passed());
    }

    #[test]
    fn theorem2_zero_params_is_split() {
        let p = ExtensionProblem::sp(2).unwrap();
        let a = theorem2_table(2, &Rational::zero(), &zeros(2), &zeros(2)).unwrap();
        assert_eq!(a, build_extension(&p, &Cocycle::zero(&p)).unwrap());
    }
}
