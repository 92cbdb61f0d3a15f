use super::{AlgebraTable, LinearMap, G};
use crate::exactmath::vector::{self, Vector};
use crate::report::{CheckReport, Violation};

fn labels(a: &AlgebraTable, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| a.label(i).to_string()).collect()
}

/// `Σ_k coeff_k [e_k, e_right]` over the sparse terms of some bracket.
fn bracket_terms_left(a: &AlgebraTable, terms: &[(usize, G)], right: usize, out: &mut Vector) {
    for (k, c) in terms {
        for (l, d) in a.terms(*k, right) {
            out[*l] = &out[*l] + &(c * d);
        }
    }
}

/// `Σ_k coeff_k [e_left, e_k]`.
fn bracket_terms_right(a: &AlgebraTable, left: usize, terms: &[(usize, G)], out: &mut Vector) {
    for (k, c) in terms {
        for (l, d) in a.terms(left, *k) {
            out[*l] = &out[*l] + &(c * d);
        }
    }
}

/// Residual of the Leibniz identity on basis elements:
/// `[x,[y,z]] − [[x,y],z] + [[x,z],y]`.
pub(crate) fn leibniz_residual(a: &AlgebraTable, x: usize, y: usize, z: usize) -> Vector {
    let n = a.dim();
    let mut lhs = vector::zeros(n);
    bracket_terms_right(a, x, a.terms(y, z), &mut lhs);
    let mut xy_z = vector::zeros(n);
    bracket_terms_left(a, a.terms(x, y), z, &mut xy_z);
    let mut xz_y = vector::zeros(n);
    bracket_terms_left(a, a.terms(x, z), y, &mut xz_y);
    lhs.iter()
        .zip(&xy_z)
        .zip(&xz_y)
        .map(|((l, p), q)| &(l - p) + q)
        .collect()
}

/// Checks the Leibniz identity on every ordered basis triple.
pub fn check_leibniz(a: &AlgebraTable) -> CheckReport {
    let n = a.dim();
    let mut report = CheckReport::new("leibniz");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let r = leibniz_residual(a, x, y, z);
                if !vector::is_zero(&r) {
                    report.record(|| Violation {
                        kind: "leibniz".into(),
                        indices: vec![x, y, z],
                        labels: labels(a, &[x, y, z]),
                        residual: r,
                    });
                }
            }
        }
    }
    report
}

/// Antisymmetry on all pairs (including `[e_i, e_i] = 0`) followed by the
/// Leibniz identity, which is Jacobi once antisymmetry holds.
pub fn check_lie(a: &AlgebraTable) -> CheckReport {
    let n = a.dim();
    let mut report = CheckReport::new("lie");
    for i in 0..n {
        for j in i..n {
            let r = vector::add(&a.bracket_basis(i, j), &a.bracket_basis(j, i));
            if !vector::is_zero(&r) {
                report.record(|| Violation {
                    kind: "antisymmetry".into(),
                    indices: vec![i, j],
                    labels: labels(a, &[i, j]),
                    residual: r,
                });
            }
        }
    }
    report.absorb(check_leibniz(a));
    report
}

/// Passes iff `f` is invertible and `f([x,y]_A) = [f(x), f(y)]_B` on all
/// basis pairs.
pub fn verify_iso(f: &LinearMap, a: &AlgebraTable, b: &AlgebraTable) -> CheckReport {
    let mut report = CheckReport::new("isomorphism");
    if f.source_dim() != a.dim() || f.target_dim() != b.dim() || !f.is_invertible() {
        report.record(|| Violation {
            kind: "not invertible".into(),
            indices: vec![],
            labels: vec![],
            residual: vec![],
        });
        return report;
    }
    let images: Vec<Vector> = (0..a.dim()).map(|i| f.matrix().row(i).to_vec()).collect();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = f.apply(&a.bracket_basis(i, j)).expect("shape checked");
            let rhs = b.bracket(&images[i], &images[j]).expect("shape checked");
            let r = vector::sub(&lhs, &rhs);
            if !vector::is_zero(&r) {
                report.record(|| Violation {
                    kind: "bracket not preserved".into(),
                    indices: vec![i, j],
                    labels: labels(a, &[i, j]),
                    residual: r,
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::exactmath::ExactMatrix;

    fn sl2() -> AlgebraTable {
        // e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
        let mut a = AlgebraTable::new(Field::Rational, ["e", "f", "h"]);
        a.set_antisymmetric(0, 1, &[G::zero(), G::zero(), G::one()]).unwrap();
        a.set_antisymmetric(2, 0, &[G::int(2), G::zero(), G::zero()]).unwrap();
        a.set_antisymmetric(2, 1, &[G::zero(), G::int(-2), G::zero()]).unwrap();
        a
    }

    #[test]
    fn sl2_is_lie() {
        assert!(check_lie(&sl2()).passed());
    }

    #[test]
    fn broken_jacobi_is_caught() {
        let mut a = sl2();
        a.set_antisymmetric(2, 0, &[G::int(3), G::zero(), G::zero()]).unwrap();
        let r = check_lie(&a);
        assert!(!r.passed());
        assert_eq!(r.first.unwrap().kind, "leibniz");
    }

    #[test]
    fn symmetric_square_fails_antisymmetry_only() {
        let mut a = AlgebraTable::new(Field::Rational, ["x", "v"]);
        a.add_term(0, 0, 1, G::one()).unwrap();
        assert!(check_leibniz(&a).passed());
        let r = check_lie(&a);
        assert_eq!(r.violations, 1);
        assert_eq!(r.first_labels(), Some(vec!["x", "x"]));
    }

    #[test]
    fn iso_identity_and_singular() {
        let a = sl2();
        assert!(verify_iso(&LinearMap::identity(3), &a, &a).passed());
        let mut m = ExactMatrix::identity(3);
        m.set(2, 2, G::zero());
        let r = verify_iso(&LinearMap::new(m), &a, &a);
        assert_eq!(r.first.unwrap().kind, "not invertible");
    }

    #[test]
    fn iso_scaling_of_sl2() {
        // e -> 2e, f -> f/2 preserves every bracket.
        let mut m = ExactMatrix::identity(3);
        m.set(0, 0, G::int(2));
        m.set(1, 1, G::frac(1, 2));
        assert!(verify_iso(&LinearMap::new(m.clone()), &sl2(), &sl2()).passed());
        m.set(1, 1, G::one());
        assert!(!verify_iso(&LinearMap::new(m), &sl2(), &sl2()).passed());
    }
}
