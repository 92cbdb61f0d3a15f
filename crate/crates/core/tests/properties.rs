use std::sync::OnceLock;

use proptest::prelude::*;

use leibniz_diamond::algebra::{
    check_leibniz, check_lie, ideal_closure, quotient_algebra, right_annihilator, squares_ideal,
    squares_span, verify_iso, AlgebraTable,
};
use leibniz_diamond::catalog::{diamond_complex, diamond_real, heisenberg};
use leibniz_diamond::exactmath::vector;
use leibniz_diamond::extensions::{
    build_extension, coboundary, cohomology, lift_isomorphism, sample_lift, Cocycle,
    CohomologyReport, ExtensionProblem,
};
use leibniz_diamond::io::{algebra_from_json, algebra_to_json};
use leibniz_diamond::{ExactMatrix, GaussianRational as G, Rational, Subspace};

fn scalar() -> impl Strategy<Value = G> {
    prop_oneof![
        3 => Just(G::zero()),
        2 => (-5i64..=5, 1i64..=4).prop_map(|(n, d)| G::frac(n, d)),
        2 => (-5i64..=5, -5i64..=5, 1i64..=4)
            .prop_map(|(a, b, d)| G::new(Rational::frac(a, d), Rational::frac(b, d))),
    ]
}

fn matrix(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(scalar(), c), r)
            .prop_map(move |rows| ExactMatrix::from_rows(c, rows).unwrap())
    })
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<G>>> {
    proptest::collection::vec(proptest::collection::vec(scalar(), n), 0..=max)
}

struct Fixture {
    problem: ExtensionProblem,
    report: CohomologyReport,
}

fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| {
        [
            ExtensionProblem::sl(1),
            ExtensionProblem::sl(2),
            ExtensionProblem::sp(1),
            ExtensionProblem::sp(2),
        ]
        .into_iter()
        .map(|p| {
            let problem = p.unwrap();
            let report = cohomology(&problem);
            Fixture { problem, report }
        })
        .collect()
    })
}

fn sampled_cocycle(f: &Fixture, coeffs: &[i64]) -> Cocycle {
    let mut v = vector::zeros(f.problem.unknowns());
    for (b, c) in f.report.cocycles.basis().iter().zip(coeffs.iter().cycle()) {
        vector::axpy(&mut v, &G::int(*c), b);
    }
    Cocycle::from_vector(&f.problem, v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn division_is_exact(a in scalar(), b in scalar()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
    }

    #[test]
    fn rref_idempotent(m in matrix(6)) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix);
    }

    #[test]
    fn rank_nullity(m in matrix(6)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
    }

    #[test]
    fn span_is_canonical(vs in vectors(5, 6), k in -3i64..=3) {
        let a = Subspace::span(5, vs.clone()).unwrap();
        let mut shuffled: Vec<Vec<G>> = vs.iter().rev().cloned().collect();
        if let (Some(first), Some(last)) = (shuffled.first().cloned(), shuffled.last_mut()) {
            vector::axpy(last, &G::int(k), &first);
        }
        shuffled.extend(vs.iter().take(2).map(|v| vector::scale(&G::int(2), v)));
        let b = Subspace::span(5, shuffled).unwrap();
        prop_assert_eq!(a.dim(), b.dim());
        prop_assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn grassmann_formula(xs in vectors(5, 4), ys in vectors(5, 4)) {
        let a = Subspace::span(5, xs).unwrap();
        let b = Subspace::span(5, ys).unwrap();
        let sum = a.sum(&b).unwrap();
        let meet = a.intersection(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(meet.is_subspace_of(&a).unwrap() && meet.is_subspace_of(&b).unwrap());
    }

    #[test]
    fn ideal_closure_is_a_closure(which in 0usize..4, seed in any::<u64>(), coeffs in proptest::collection::vec(-3i64..=3, 8)) {
        let f = &fixtures()[which];
        let a = build_extension(&f.problem, &sampled_cocycle(f, &coeffs)).unwrap();
        let n = a.dim();
        let pick = |s: u64, count: usize| -> Vec<Vec<G>> {
            (0..count).map(|i| vector::unit(n, ((s >> (5 * i)) as usize) % n)).collect()
        };
        let small = Subspace::span(n, pick(seed, 1)).unwrap();
        let big = small.sum(&Subspace::span(n, pick(seed >> 7, 2)).unwrap()).unwrap();
        let cs = ideal_closure(&a, &small).unwrap();
        let cb = ideal_closure(&a, &big).unwrap();
        prop_assert!(small.is_subspace_of(&cs).unwrap());
        prop_assert!(cs.is_subspace_of(&cb).unwrap());
        prop_assert_eq!(ideal_closure(&a, &cs).unwrap(), cs);
    }

    #[test]
    fn cocycles_give_leibniz_algebras(which in 0usize..4, coeffs in proptest::collection::vec(-9i64..=9, 1..12)) {
        let f = &fixtures()[which];
        let omega = sampled_cocycle(f, &coeffs);
        let a = build_extension(&f.problem, &omega).unwrap();
        prop_assert!(check_leibniz(&a).passed());
        prop_assert!(squares_span(&a).is_subspace_of(&right_annihilator(&a)).unwrap());
        let (q, _) = quotient_algebra(&a, &squares_ideal(&a)).unwrap();
        prop_assert!(check_lie(&q).passed());
    }

    #[test]
    fn non_cocycles_fail(which in 0usize..4, entries in proptest::collection::vec((any::<prop::sample::Index>(), -4i64..=4), 1..4)) {
        let f = &fixtures()[which];
        let mut v = vector::zeros(f.problem.unknowns());
        for (idx, c) in entries {
            let len = v.len();
            v[idx.index(len)] = G::int(c);
        }
        let in_space = f.report.cocycles.contains(&v).unwrap();
        let a = build_extension(&f.problem, &Cocycle::from_vector(&f.problem, v).unwrap()).unwrap();
        prop_assert_eq!(check_leibniz(&a).passed(), in_space);
    }

    #[test]
    fn lift_changes_are_isomorphisms(which in 0usize..4, seed in any::<u64>(), coeffs in proptest::collection::vec(-9i64..=9, 1..6)) {
        let f = &fixtures()[which];
        let omega = sampled_cocycle(f, &coeffs);
        let lift = sample_lift(&f.problem, seed);
        let d = coboundary(&f.problem, &lift);
        prop_assert!(f.report.cocycles.contains(d.as_vector()).unwrap());
        prop_assert!(f.report.coboundaries.contains(d.as_vector()).unwrap());
        let moved = build_extension(&f.problem, &omega.add(&d)).unwrap();
        let orig = build_extension(&f.problem, &omega).unwrap();
        prop_assert!(verify_iso(&lift_isomorphism(&f.problem, &lift), &moved, &orig).passed());
    }

    #[test]
    fn json_round_trip_is_byte_exact(which in 0usize..4, coeffs in proptest::collection::vec(-9i64..=9, 1..6)) {
        let f = &fixtures()[which];
        let a = build_extension(&f.problem, &sampled_cocycle(f, &coeffs)).unwrap();
        let s = algebra_to_json(&a);
        let back: AlgebraTable = algebra_from_json(&s).unwrap();
        prop_assert_eq!(algebra_to_json(&back), s);
        prop_assert_eq!(back, a);
    }
}

#[test]
fn catalog_squares_lie_in_right_annihilator() {
    for m in 1..=4 {
        for a in [diamond_real(m).unwrap(), diamond_complex(m).unwrap(), heisenberg(m).unwrap()] {
            assert!(check_lie(&a).passed() && check_leibniz(&a).passed());
            assert!(squares_span(&a).is_zero());
            assert!(squares_span(&a).is_subspace_of(&right_annihilator(&a)).unwrap());
        }
    }
}
