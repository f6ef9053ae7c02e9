use gstar::eval::{evaluate, is_identity, scheme_points, Assignment};
use gstar::free::{multilinear_basis, y, z};
use gstar::hwv::dense_assignment;
use gstar::scalar::rat;
use gstar::{AlgebraKind, FreePolynomial, MultiDegree, Variable};
use proptest::prelude::*;

fn vars() -> Vec<Variable> {
    [1, 2].into_iter().flat_map(|i| [y(i, 0), y(i, 1), z(i, 0), z(i, 1)]).collect()
}

fn kind_strategy() -> impl Strategy<Value = AlgebraKind> {
    prop::sample::select(AlgebraKind::ALL.to_vec())
}

fn poly_strategy() -> impl Strategy<Value = FreePolynomial> {
    let word = prop::collection::vec(prop::sample::select(vars()), 0..4);
    prop::collection::vec((word, -3i64..=3), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(FreePolynomial::zero(), |acc, (w, c)| &acc + &FreePolynomial::monomial(&w).scale(&rat(c)))
    })
}

fn point(kind: AlgebraKind) -> Assignment {
    // UT11E has no odd skew elements; bind those variables to zero.
    let usable: Vec<Variable> = vars()
        .into_iter()
        .filter(|v| !(kind == AlgebraKind::UT11E && v.species() == 3))
        .collect();
    let mut asg = dense_assignment(kind, &usable).unwrap();
    if kind == AlgebraKind::UT11E {
        for v in vars().into_iter().filter(|v| v.species() == 3) {
            asg.bind(v, gstar::AlgebraElement::zero(kind, asg.rank())).unwrap();
        }
    }
    asg
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_linear(kind in kind_strategy(), p in poly_strategy(), q in poly_strategy(), a in -3i64..=3, b in -3i64..=3) {
        let asg = point(kind);
        let lhs = evaluate(&(&p.scale(&rat(a)) + &q.scale(&rat(b))), &asg).unwrap();
        let rhs = evaluate(&p, &asg).unwrap().scale(&rat(a)).add(&evaluate(&q, &asg).unwrap().scale(&rat(b))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_multiplicative(kind in kind_strategy(), p in poly_strategy(), q in poly_strategy()) {
        let asg = point(kind);
        let lhs = evaluate(&(&p * &q), &asg).unwrap();
        let rhs = evaluate(&p, &asg).unwrap().mul(&evaluate(&q, &asg).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn odd_skew_variables_vanish_in_ut11e() {
    for total in 1..=4 {
        for d in MultiDegree::with_total(total).into_iter().filter(|d| d.0[3] > 0) {
            for w in multilinear_basis(d).unwrap() {
                assert!(is_identity(&FreePolynomial::from_word(w), AlgebraKind::UT11E).unwrap());
            }
        }
    }
}

#[test]
fn schemes_are_deterministic() {
    for kind in AlgebraKind::ALL {
        let d = MultiDegree::new(1, 1, 1, 1);
        let a = scheme_points(kind, d).unwrap().assignments();
        let b = scheme_points(kind, d).unwrap().assignments();
        assert_eq!(a, b);
    }
}
