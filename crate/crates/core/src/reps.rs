//! Matrix representations of the Diamond algebras and the right modules
//! they induce.
//!
//! Module vectors are rows: the action of `e` on `x` is `x·φ(e)`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraTable, Field};
use crate::catalog::{self, DiamondBasis};
use crate::error::{Error, Result};
use crate::exactmath::vector::{self, Vector};
use crate::exactmath::{ExactMatrix, GaussianRational, Subspace};
use crate::report::{CheckReport, Violation};

type G = GaussianRational;

/// One `order × order` matrix per basis element of `algebra`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    algebra: AlgebraTable,
    order: usize,
    images: Vec<ExactMatrix>,
}

impl MatrixRep {
    pub fn new(algebra: AlgebraTable, order: usize, images: Vec<ExactMatrix>) -> Result<Self> {
        if images.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: images.len(),
            });
        }
        for m in &images {
            if m.rows() != order || m.cols() != order {
                return Err(Error::DimensionMismatch {
                    expected: order,
                    found: if m.rows() != order { m.rows() } else { m.cols() },
                });
            }
            if algebra.field() == Field::Rational && !m.is_real() {
                return Err(Error::NotReal(format!("{m:?}")));
            }
        }
        Ok(MatrixRep {
            algebra,
            order,
            images,
        })
    }

    pub fn algebra(&self) -> &AlgebraTable {
        &self.algebra
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn images(&self) -> &[ExactMatrix] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &ExactMatrix {
        &self.images[i]
    }

    /// Replaces one image; used to build deliberately broken variants.
    pub fn with_image(&self, i: usize, m: ExactMatrix) -> Result<Self> {
        let mut images = self.images.clone();
        images[i] = m;
        MatrixRep::new(self.algebra.clone(), self.order, images)
    }

    /// `φ(x)` for an arbitrary coefficient vector.
    pub fn apply(&self, x: &[G]) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.order, self.order);
        for (c, m) in x.iter().zip(&self.images) {
            if !c.is_zero() {
                out = out.add(&m.scale(c)).expect("same order");
            }
        }
        out
    }
}

/// Matrix unit `e_{i,j}` with one-based indices, scaled by `c`.
fn e(n: usize, i: usize, j: usize, c: G) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    m.set(i - 1, j - 1, c);
    m
}

fn plus(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix {
    a.add(&b).expect("same order")
}

/// The order-`(m+2)` representation of the complex Diamond algebra into
/// traceless matrices.
pub fn phi_sl(m: usize) -> Result<MatrixRep> {
    let b = DiamondBasis::new(m)?;
    let n = m + 2;
    let mi = m as i64;
    let d = mi + 2;
    let mut images = vec![ExactMatrix::zeros(n, n); b.dim()];

    let mut j = e(n, 1, 1, G::frac_i(mi, d));
    for s in 2..=m + 1 {
        j = plus(j, e(n, s, s, G::frac_i(-2, d)));
    }
    images[b.j()] = plus(j, e(n, n, n, G::frac_i(mi, d)));
    images[b.t()] = e(n, 1, n, G::frac_i(-1, 2));
    for k in 1..=m {
        images[b.p(k)] = e(n, 1, m + 2 - k, G::one());
        images[b.q(k)] = e(n, m + 2 - k, n, G::one());
    }
    MatrixRep::new(catalog::diamond_complex(m)?, n, images)
}

/// The order-`(2m+2)` real representation of the Diamond algebra whose image
/// preserves a nondegenerate skew form.
pub fn phi_sp(m: usize) -> Result<MatrixRep> {
    let b = DiamondBasis::new(m)?;
    let n = 2 * m + 2;
    let one = G::one;
    let neg = || G::int(-1);
    let mut images = vec![ExactMatrix::zeros(n, n); b.dim()];

    let mut j = ExactMatrix::zeros(n, n);
    for k in 2..=m + 1 {
        j = plus(j, e(n, k, 2 * m + 3 - k, neg()));
    }
    for k in m + 2..=2 * m + 1 {
        j = plus(j, e(n, k, 2 * m + 3 - k, one()));
    }
    images[b.j()] = j;
    images[b.t()] = e(n, 1, n, G::int(2));
    for k in 1..=m {
        images[b.p(k)] = plus(e(n, 1, 1 + k, one()), e(n, 2 * m + 2 - k, n, neg()));
        images[b.q(k)] = plus(e(n, 1, 2 * m + 2 - k, one()), e(n, k + 1, n, one()));
    }
    MatrixRep::new(catalog::diamond_real(m)?, n, images)
}

fn labels(a: &AlgebraTable, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| a.label(i).to_string()).collect()
}

/// `φ([x,y]) = φ(x)φ(y) − φ(y)φ(x)` on every ordered basis pair.
pub fn check_rep_homomorphism(rep: &MatrixRep) -> CheckReport {
    let a = rep.algebra();
    let mut report = CheckReport::new("homomorphism");
    for x in 0..a.dim() {
        for y in 0..a.dim() {
            let lhs = rep.apply(&a.bracket_basis(x, y));
            let rhs = rep.image(x).commutator(rep.image(y)).expect("same order");
            let diff = lhs.sub(&rhs).expect("same order");
            if !diff.is_zero() {
                report.record(|| Violation {
                    kind: "homomorphism".into(),
                    indices: vec![x, y],
                    labels: labels(a, &[x, y]),
                    residual: diff.entries().to_vec(),
                });
            }
        }
    }
    report
}

/// Images stacked as the columns of an `order² × dim` matrix, transposed so
/// that its kernel is the representation's kernel.
fn image_matrix(rep: &MatrixRep) -> ExactMatrix {
    let n2 = rep.order() * rep.order();
    let cols: Vec<Vector> = rep.images().iter().map(|m| m.entries().to_vec()).collect();
    ExactMatrix::from_rows(n2, cols)
        .expect("images share an order")
        .transpose()
}

/// Kernel of `x ↦ φ(x)`.
pub fn rep_kernel(rep: &MatrixRep) -> Subspace {
    image_matrix(rep).kernel()
}

pub fn check_faithful(rep: &MatrixRep) -> CheckReport {
    let mut report = CheckReport::new("faithful");
    let ker = rep_kernel(rep);
    if let Some(v) = ker.basis().first() {
        let v = v.clone();
        report.record(|| Violation {
            kind: "nonzero kernel".into(),
            indices: vec![],
            labels: vec![],
            residual: v,
        });
        report.violations = ker.dim();
    }
    report
}

/// For a representation of a `(2m+2)`-dimensional Diamond algebra: passes iff
/// the order equals `m + 2`, the smallest order a faithful representation of
/// its Heisenberg subalgebra admits.
pub fn check_minimal_order(rep: &MatrixRep) -> CheckReport {
    let mut report = CheckReport::new("minimal order");
    let bound = DiamondBasis::from_dim(rep.algebra().dim()).map(|b| b.m + 2);
    if bound != Some(rep.order()) {
        report.record(|| Violation {
            kind: format!("order {} differs from bound {:?}", rep.order(), bound),
            indices: vec![rep.order()],
            labels: vec![],
            residual: vec![],
        });
    }
    report
}

pub fn check_traceless(rep: &MatrixRep) -> CheckReport {
    let a = rep.algebra();
    let mut report = CheckReport::new("traceless");
    for (x, m) in rep.images().iter().enumerate() {
        let tr = m.trace();
        if !tr.is_zero() {
            report.record(|| Violation {
                kind: "trace".into(),
                indices: vec![x],
                labels: labels(a, &[x]),
                residual: vec![tr],
            });
        }
    }
    report
}

/// All `B` (flattened row-major) with `φ(x)ᵀB + Bφ(x) = 0` for every basis
/// element `x`.
pub fn invariant_forms(rep: &MatrixRep) -> Subspace {
    let n = rep.order();
    let mut rows = Vec::new();
    for phi in rep.images() {
        for a in 0..n {
            for b in 0..n {
                let mut row = vector::zeros(n * n);
                for c in 0..n {
                    // (φᵀB)_{ab} = Σ_c φ_{ca} B_{cb}
                    let l = phi.get(c, a);
                    if !l.is_zero() {
                        row[c * n + b] = &row[c * n + b] + l;
                    }
                    // (Bφ)_{ab} = Σ_c B_{ac} φ_{cb}
                    let r = phi.get(c, b);
                    if !r.is_zero() {
                        row[a * n + c] = &row[a * n + c] + r;
                    }
                }
                if !vector::is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    ExactMatrix::from_rows(n * n, rows)
        .expect("rows have n² entries")
        .kernel()
}

/// Skew-symmetric `n × n` matrices, flattened.
fn skew_matrices(n: usize) -> Subspace {
    let gens = (0..n).flat_map(|a| {
        (a + 1..n).map(move |b| {
            let mut v = vector::zeros(n * n);
            v[a * n + b] = G::one();
            v[b * n + a] = G::int(-1);
            v
        })
    });
    Subspace::span(n * n, gens).expect("length n²")
}

/// A nondegenerate skew-symmetric invariant form, if one is found.
///
/// Searches the basis of invariant skew forms, then seeded random integer
/// combinations of it. The answer is certified by exact rank.
pub fn skew_invariant_form(rep: &MatrixRep) -> Option<ExactMatrix> {
    const TRIES: usize = 64;
    let n = rep.order();
    let skew = invariant_forms(rep)
        .intersection(&skew_matrices(n))
        .expect("same ambient");
    let to_matrix = |v: &[G]| {
        ExactMatrix::from_rows(n, v.chunks(n).map(<[G]>::to_vec).collect()).expect("n² entries")
    };
    let full_rank = |m: &ExactMatrix| m.rank() == n;

    for v in skew.basis() {
        let m = to_matrix(v);
        if full_rank(&m) {
            return Some(m);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..TRIES {
        let mut v = vector::zeros(n * n);
        for b in skew.basis() {
            vector::axpy(&mut v, &G::int(rng.gen_range(-9..=9)), b);
        }
        let m = to_matrix(&v);
        if full_rank(&m) {
            return Some(m);
        }
    }
    None
}

pub fn check_symplectic(rep: &MatrixRep) -> CheckReport {
    let mut report = CheckReport::new("symplectic");
    if skew_invariant_form(rep).is_none() {
        report.record(|| Violation {
            kind: "no nondegenerate invariant skew form".into(),
            indices: vec![],
            labels: vec![],
            residual: vec![],
        });
    }
    report
}

/// A right action `(v, e) ↦ v·e` of an algebra on a module with basis
/// `X_1..X_N`, stored sparsely; only nonzero products are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    algebra: AlgebraTable,
    module_dim: usize,
    entries: BTreeMap<(usize, usize), Vector>,
}

impl ModuleAction {
    pub fn new(algebra: AlgebraTable, module_dim: usize) -> Self {
        ModuleAction {
            algebra,
            module_dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn algebra(&self) -> &AlgebraTable {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn module_labels(&self) -> Vec<String> {
        (1..=self.module_dim).map(|k| format!("X{k}")).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.entries.iter().map(|(&(v, e), x)| (v, e, x))
    }

    /// Sets `X_v · e_e` (zero-based indices).
    pub fn set(&mut self, v: usize, e: usize, value: Vector) -> Result<()> {
        if v >= self.module_dim {
            return Err(Error::IndexOutOfRange {
                index: v,
                dim: self.module_dim,
            });
        }
        if e >= self.algebra.dim() {
            return Err(Error::IndexOutOfRange {
                index: e,
                dim: self.algebra.dim(),
            });
        }
        if value.len() != self.module_dim {
            return Err(Error::DimensionMismatch {
                expected: self.module_dim,
                found: value.len(),
            });
        }
        if self.algebra.field() == Field::Rational {
            if let Some(c) = value.iter().find(|c| !c.is_real()) {
                return Err(Error::NotReal(c.to_string()));
            }
        }
        if vector::is_zero(&value) {
            self.entries.remove(&(v, e));
        } else {
            self.entries.insert((v, e), value);
        }
        Ok(())
    }

    /// Sets `X_v · e = c·X_w` with one-based module indices.
    fn put(&mut self, v: usize, e: usize, w: usize, c: G) -> Result<()> {
        let mut x = vector::zeros(self.module_dim);
        x[w - 1] = c;
        self.set(v - 1, e, x)
    }

    pub fn act_basis(&self, v: usize, e: usize) -> Vector {
        self.entries
            .get(&(v, e))
            .cloned()
            .unwrap_or_else(|| vector::zeros(self.module_dim))
    }

    /// `x · e_e` for a module vector `x`.
    pub fn act(&self, x: &[G], e: usize) -> Vector {
        let mut out = vector::zeros(self.module_dim);
        for (v, c) in x.iter().enumerate() {
            if let Some(img) = self.entries.get(&(v, e)) {
                vector::axpy(&mut out, c, img);
            }
        }
        out
    }

    /// The matrix of `x ↦ x·e` (row `v` is `X_v · e`).
    pub fn matrix(&self, e: usize) -> ExactMatrix {
        let rows = (0..self.module_dim).map(|v| self.act_basis(v, e)).collect();
        ExactMatrix::from_rows(self.module_dim, rows).expect("module_dim columns")
    }
}

/// The natural module of a representation: `X_v · e` is row `v` of `φ(e)`.
pub fn module_from_rep(rep: &MatrixRep) -> ModuleAction {
    let mut act = ModuleAction::new(rep.algebra().clone(), rep.order());
    for (e, m) in rep.images().iter().enumerate() {
        for v in 0..rep.order() {
            act.set(v, e, m.row(v).to_vec()).expect("shape fixed by rep");
        }
    }
    act
}

/// The action on `ℂ^{m+2}` written out product by product; all unlisted
/// products vanish.
pub fn action_table_sl(m: usize) -> Result<ModuleAction> {
    let b = DiamondBasis::new(m)?;
    let (mi, d) = (m as i64, m as i64 + 2);
    let mut act = ModuleAction::new(catalog::diamond_complex(m)?, m + 2);
    act.put(1, b.j(), 1, G::frac_i(mi, d))?;
    for k in 2..=m + 1 {
        act.put(k, b.j(), k, G::frac_i(-2, d))?;
    }
    act.put(m + 2, b.j(), m + 2, G::frac_i(mi, d))?;
    for k in 1..=m {
        act.put(1, b.p(k), m + 2 - k, G::one())?;
        act.put(m + 2 - k, b.q(k), m + 2, G::one())?;
    }
    act.put(1, b.t(), m + 2, G::frac_i(-1, 2))?;
    Ok(act)
}

/// The action on `ℝ^{2m+2}` written out product by product; all unlisted
/// products vanish.
pub fn action_table_sp(m: usize) -> Result<ModuleAction> {
    let b = DiamondBasis::new(m)?;
    let n = 2 * m + 2;
    let mut act = ModuleAction::new(catalog::diamond_real(m)?, n);
    for k in 2..=m + 1 {
        act.put(k, b.j(), 2 * m + 3 - k, G::int(-1))?;
    }
    for k in m + 2..=2 * m + 1 {
        act.put(k, b.j(), 2 * m + 3 - k, G::one())?;
    }
    for k in 1..=m {
        act.put(1, b.p(k), k + 1, G::one())?;
        act.put(2 * m + 2 - k, b.p(k), n, G::int(-1))?;
        act.put(1, b.q(k), 2 * m + 2 - k, G::one())?;
        act.put(k + 1, b.q(k), n, G::one())?;
    }
    act.put(1, b.t(), n, G::int(2))?;
    Ok(act)
}

/// Named module actions: `sl-natural` and `sp-natural`.
pub fn action_by_name(name: &str, m: usize) -> Result<ModuleAction> {
    match name {
        "sl-natural" => action_table_sl(m),
        "sp-natural" => action_table_sp(m),
        other => Err(Error::Parse(format!("unknown module {other:?}"))),
    }
}

/// `v·[e,f] = (v·e)·f − (v·f)·e` over all module-basis × algebra-basis ×
/// algebra-basis triples.
pub fn check_right_module(act: &ModuleAction) -> CheckReport {
    let a = act.algebra();
    let n = a.dim();
    let mats: Vec<ExactMatrix> = (0..n).map(|e| act.matrix(e)).collect();
    let mut report = CheckReport::new("right module");
    for e in 0..n {
        for f in 0..n {
            let mut lhs = ExactMatrix::zeros(act.module_dim(), act.module_dim());
            for (k, c) in a.terms(e, f) {
                lhs = lhs.add(&mats[*k].scale(c)).expect("same shape");
            }
            let rhs = mats[e].commutator(&mats[f]).expect("same shape");
            let diff = lhs.sub(&rhs).expect("same shape");
            for v in 0..act.module_dim() {
                let r = diff.row(v);
                if !vector::is_zero(r) {
                    let witness = Violation {
                        kind: "right module".into(),
                        indices: vec![v, e, f],
                        labels: vec![format!("X{}", v + 1), a.label(e).into(), a.label(f).into()],
                        residual: r.to_vec(),
                    };
                    // Keep the first violation in (v, e, f) order.
                    let earlier = report
                        .first
                        .as_ref()
                        .is_some_and(|w| w.indices <= witness.indices);
                    report.violations += 1;
                    if !earlier {
                        report.first = Some(witness);
                    }
                }
            }
        }
    }
    report
}
