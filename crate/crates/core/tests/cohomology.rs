mod oracle;

use leibniz_diamond::algebra::check_leibniz;
use leibniz_diamond::catalog::DiamondBasis;
use leibniz_diamond::exactmath::vector;
use leibniz_diamond::extensions::{
    build_extension, coboundary, cohomology, solve_lift, theorem1_split_check, theorem2_cocycle,
    theorem2_table, Cocycle, ExtensionProblem, LiftMap,
};
use leibniz_diamond::{GaussianRational as G, Rational};

fn zeros(m: usize) -> Vec<Vec<Rational>> {
    vec![vec![Rational::zero(); m]; m]
}

#[test]
fn sl_cohomology_vanishes() {
    for m in 1..=3 {
        let h = cohomology(&ExtensionProblem::sl(m).unwrap());
        assert_eq!(h.quotient_dim, 0, "m={m}");
        assert!(h.representatives.is_empty());
        assert!(theorem1_split_check(m).unwrap().passed());
    }
}

#[test]
fn sp_cohomology_dimensions() {
    // 1 + m(m-1) normal-form parameters plus m-1 diagonal classes for m >= 2,
    // and one further class at m = 1.
    for (m, expected) in [(1, 2), (2, 4), (3, 9), (4, 16)] {
        let h = cohomology(&ExtensionProblem::sp(m).unwrap());
        assert_eq!(h.quotient_dim, expected, "m={m}");
        assert_eq!(h.representatives.len(), expected);
    }
}

#[test]
fn library_matches_oracle_on_small_problems() {
    for p in [ExtensionProblem::sl(1), ExtensionProblem::sl(2), ExtensionProblem::sp(1), ExtensionProblem::sp(2)] {
        let p = p.unwrap();
        let h = cohomology(&p);
        let o = oracle::cohomology(&p);
        assert_eq!(
            (h.cocycles.dim(), h.coboundaries.dim(), h.quotient_dim),
            (o.cocycle_dim, o.coboundary_dim, o.quotient_dim)
        );
    }
}

fn diagonal_c(p: &ExtensionProblem, m: usize, k: usize) -> Cocycle {
    let b = DiamondBasis::new(m).unwrap();
    let top = p.module_dim() - 1;
    let mut w = Cocycle::zero(p);
    w.add_term(b.p(k), b.q(k), top, G::one());
    w.add_term(b.q(k), b.p(k), top, G::int(-1));
    w
}

#[test]
fn diagonal_c_classes_survive_lift_changes() {
    for m in 2..=3 {
        let p = ExtensionProblem::sp(m).unwrap();
        let h = cohomology(&p);
        let mut span = h.coboundaries.echelon().clone();
        let z = zeros(m);
        span.insert(theorem2_cocycle(m, &Rational::one(), &z, &z).unwrap().1.as_vector().to_vec())
            .unwrap();
        for k in 1..=m {
            for s in k + 1..=m {
                let mut b = zeros(m);
                b[k - 1][s - 1] = Rational::one();
                b[s - 1][k - 1] = -Rational::one();
                let mut c = zeros(m);
                c[k - 1][s - 1] = Rational::one();
                c[s - 1][k - 1] = Rational::one();
                for (bb, cc) in [(&b, &z), (&z, &c)] {
                    let w = theorem2_cocycle(m, &Rational::zero(), bb, cc).unwrap().1;
                    assert!(span.insert(w.as_vector().to_vec()).unwrap());
                }
            }
        }
        let mut fresh = 0;
        for k in 1..=m {
            let w = diagonal_c(&p, m, k);
            assert!(check_leibniz(&build_extension(&p, &w).unwrap()).passed());
            if span.insert(w.as_vector().to_vec()).unwrap() {
                fresh += 1;
            }
        }
        assert_eq!(fresh, m - 1, "m={m}");
        assert_eq!(span.rank(), h.cocycles.dim());
    }
}

#[test]
fn literal_plus_sign_table_is_not_leibniz() {
    let m = 2;
    let mut c = zeros(m);
    c[0][1] = Rational::one();
    c[1][0] = Rational::one();
    let (p, mut w) = theorem2_cocycle(m, &Rational::zero(), &zeros(m), &c).unwrap();
    assert!(check_leibniz(&build_extension(&p, &w).unwrap()).passed());
    // Flip ω(Q_k, P_s) from -c to +c.
    let b = DiamondBasis::new(m).unwrap();
    let top = p.module_dim() - 1;
    w.add_term(b.q(1), b.p(2), top, G::int(2));
    w.add_term(b.q(2), b.p(1), top, G::int(2));
    let r = check_leibniz(&build_extension(&p, &w).unwrap());
    assert!(!r.passed());
    let labels = r.first_labels().unwrap();
    assert_eq!(labels.len(), 3);
    assert!(labels.contains(&"J"), "{r}");
}

#[test]
fn normal_form_m1_a1() {
    let a = theorem2_table(1, &Rational::integer(7), &zeros(1), &zeros(1)).unwrap();
    assert_eq!(a.dim(), 8);
    assert_eq!(a.bracket_basis(0, 0), {
        let mut v = vector::zeros(8);
        v[7] = G::int(7);
        v
    });
    // The Diamond part is untouched.
    assert_eq!(a.bracket_basis(1, 2), vector::unit(8, 3));
    assert_eq!(a.bracket_basis(2, 1), vector::scale(&G::int(-1), &vector::unit(8, 3)));
    assert!(check_leibniz(&a).passed());
}

#[test]
fn explicit_lift_for_jj_component() {
    let p = ExtensionProblem::sl(2).unwrap();
    let mut g = LiftMap::zero(&p);
    g.set(0, &vector::unit(4, 0));
    let omega = coboundary(&p, &g);
    // X1·J = (i/2) X1 for m = 2.
    assert_eq!(omega.get(0, 0)[0], G::frac_i(1, 2));
    let f = solve_lift(&p, &omega).unwrap().expect("coboundary");
    assert!(omega.add(&coboundary(&p, &f)).is_zero());
    assert_eq!(coboundary(&p, &f).get(0, 0)[0], G::frac_i(-1, 2));
}
