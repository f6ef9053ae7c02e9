mod support;

use gstar::cochar::multiplicity;
use gstar::dims::dim_p;
use gstar::{AlgebraKind, MultiDegree};

#[test]
fn oracle_recovers_the_dimension() {
    for kind in AlgebraKind::ALL {
        for total in 0..=4 {
            for d in MultiDegree::with_total(total) {
                let sum: u64 = support::oracle_multiplicities(kind, d)
                    .iter()
                    .map(|(mp, m)| m * mp.degree_product())
                    .sum();
                assert_eq!(sum as usize, dim_p(d, kind).unwrap(), "{kind} {d}");
            }
        }
    }
}

#[test]
fn multiplicities_of_the_two_by_two_algebras() {
    for kind in [AlgebraKind::M11E, AlgebraKind::UT11E] {
        for total in 0..=4 {
            for d in MultiDegree::with_total(total) {
                for (mp, m) in support::oracle_multiplicities(kind, d) {
                    assert_eq!(multiplicity(kind, &mp), m, "{kind} {mp}");
                }
            }
        }
    }
}

#[test]
fn upper_triangular_multiplicities_with_at_most_one_odd_variable() {
    let kind = AlgebraKind::UT3E010;
    for total in 0..=4 {
        for d in MultiDegree::with_total(total).into_iter().filter(|d| d.0[1] + d.0[3] <= 1) {
            for (mp, m) in support::oracle_multiplicities(kind, d) {
                assert_eq!(multiplicity(kind, &mp), m, "{kind} {mp}");
            }
        }
    }
}
