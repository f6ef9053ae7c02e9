//! Cocharacter multiplicities of the three algebras and their reconciliation with the
//! computed dimensions of `P_d`.

use serde::Serialize;

use crate::algebra::AlgebraKind;
use crate::dims::{dimension, BasisFlavor, DimOptions};
use crate::error::Result;
use crate::free::MultiDegree;
use crate::partition::{multipartitions, Multipartition, Partition};

/// A multiplicity together with the theorem case it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Multiplicity {
    pub value: u64,
    /// Label of the matching case, `None` when the multiplicity is zero by exclusion.
    pub case: Option<&'static str>,
    /// The case applies a reading of a side condition that differs from its literal text.
    pub interpreted: bool,
}

impl Multiplicity {
    const ZERO: Multiplicity = Multiplicity {
        value: 0,
        case: None,
        interpreted: false,
    };

    fn of(value: u64, case: &'static str) -> Self {
        Multiplicity {
            value,
            case: Some(case),
            interpreted: false,
        }
    }
}

pub fn multiplicity(kind: AlgebraKind, mp: &Multipartition) -> u64 {
    multiplicity_detail(kind, mp).value
}

pub fn multiplicity_detail(kind: AlgebraKind, mp: &Multipartition) -> Multiplicity {
    if mp.degree().total() == 0 {
        return Multiplicity::of(1, "unit");
    }
    match kind {
        AlgebraKind::M11E => m11e(mp),
        AlgebraKind::UT11E => ut11e(mp),
        AlgebraKind::UT3E010 => ut3e010(mp),
    }
}

fn m11e(mp: &Multipartition) -> Multiplicity {
    let [l1, l2, l3, l4] = &mp.0;
    if !l1.is_row() || !l3.is_row() {
        return Multiplicity::ZERO;
    }
    let (a, b) = (l2.size(), l4.size());
    if !l2.is_column_of(a) || !l4.is_column_of(b) {
        return Multiplicity::ZERO;
    }
    match (a, b) {
        (0, 0) => Multiplicity::of(1, "i"),
        _ if a == b => Multiplicity::of(2, "ii"),
        _ if a == b + 1 => Multiplicity::of(1, "iii"),
        _ if b == a + 1 => Multiplicity::of(1, "iv"),
        _ => Multiplicity::ZERO,
    }
}

fn ut11e(mp: &Multipartition) -> Multiplicity {
    let [l1, l2, l3, l4] = &mp.0;
    if !l1.is_row() || !l3.is_row() || !l4.is_empty() {
        return Multiplicity::ZERO;
    }
    match l2.size() {
        0 => Multiplicity::of(1, "i"),
        1 => Multiplicity::of(1, "i'"),
        _ => Multiplicity::ZERO,
    }
}

fn ut3e010(mp: &Multipartition) -> Multiplicity {
    let [l1, l2, l3, l4] = &mp.0;
    let (n2, n3, n4) = (l2.size(), l3.size(), l4.size());
    if n2 == 0 && n4 == 0 {
        if !l1.is_row() {
            return Multiplicity::ZERO;
        }
        if l3.is_row() {
            return Multiplicity::of(1, "i");
        }
        if n3 > 1 && *l3 == Partition::new(vec![n3 - 1, 1]) {
            return Multiplicity::of(1, "i");
        }
        return Multiplicity::ZERO;
    }
    if l1.height() > 2 || !l3.is_row() {
        return Multiplicity::ZERO;
    }
    let p = l1.part(1) as u64;
    let q = l1.part(0) as u64 - p;
    match (n2, n4) {
        (1, 0) | (0, 1) => {
            if n3 == 0 {
                Multiplicity {
                    value: q + 1,
                    case: Some("ii"),
                    interpreted: true,
                }
            } else {
                Multiplicity::of(2 * (q + 1), "iii")
            }
        }
        (1, 1) => {
            if n3 == 0 {
                Multiplicity::of(q + 1, "v")
            } else {
                Multiplicity::of(n3 as u64 * (q + 1), "iv")
            }
        }
        _ => Multiplicity::ZERO,
    }
}

/// `Σ m_λ · deg λ` over all multipartitions of `d`.
pub fn predicted_dim(kind: AlgebraKind, d: MultiDegree) -> u64 {
    multipartitions(d)
        .iter()
        .map(|mp| multiplicity(kind, mp) * mp.degree_product())
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityRow {
    pub multipartition: Multipartition,
    pub multiplicity: u64,
    pub degree_product: u64,
    pub case: Option<&'static str>,
    pub interpreted: bool,
}

/// Predicted against computed dimension of `P_d`; rows list the multipartitions with
/// nonzero multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    pub algebra: AlgebraKind,
    pub degree: MultiDegree,
    pub rows: Vec<MultiplicityRow>,
    pub predicted: u64,
    pub computed: u64,
    #[serde(rename = "match")]
    pub matched: bool,
}

impl MultiplicityReport {
    pub fn interpreted(&self) -> bool {
        self.rows.iter().any(|r| r.interpreted)
    }
}

pub fn multiplicity_rows(kind: AlgebraKind, d: MultiDegree) -> Vec<MultiplicityRow> {
    multipartitions(d)
        .into_iter()
        .filter_map(|mp| {
            let m = multiplicity_detail(kind, &mp);
            (m.value > 0).then(|| MultiplicityRow {
                degree_product: mp.degree_product(),
                multipartition: mp,
                multiplicity: m.value,
                case: m.case,
                interpreted: m.interpreted,
            })
        })
        .collect()
}

/// Report from an already computed `dim P_d`.
pub fn report_from_dim(kind: AlgebraKind, d: MultiDegree, computed: u64) -> MultiplicityReport {
    let rows = multiplicity_rows(kind, d);
    let predicted = rows.iter().map(|r| r.multiplicity * r.degree_product).sum();
    MultiplicityReport {
        algebra: kind,
        degree: d,
        rows,
        predicted,
        computed,
        matched: predicted == computed,
    }
}

pub fn verify_cocharacters(kind: AlgebraKind, d: MultiDegree) -> Result<MultiplicityReport> {
    verify_cocharacters_with(kind, d, &DimOptions::default())
}

pub fn verify_cocharacters_with(kind: AlgebraKind, d: MultiDegree, opts: &DimOptions) -> Result<MultiplicityReport> {
    let computed = dimension(d, kind, BasisFlavor::Full, opts)? as u64;
    Ok(report_from_dim(kind, d, computed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(a: &[usize], b: &[usize], c: &[usize], d: &[usize]) -> Multipartition {
        Multipartition::new(
            Partition::new(a.to_vec()),
            Partition::new(b.to_vec()),
            Partition::new(c.to_vec()),
            Partition::new(d.to_vec()),
        )
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(AlgebraKind::M11E, &mp(&[2], &[1, 1], &[1], &[1, 1])), 2);
        assert_eq!(multiplicity(AlgebraKind::UT11E, &mp(&[3], &[1], &[2], &[])), 1);
        assert_eq!(multiplicity(AlgebraKind::UT3E010, &mp(&[3, 1], &[1], &[2], &[1])), 6);
    }

    #[test]
    fn exclusions() {
        assert_eq!(multiplicity(AlgebraKind::M11E, &mp(&[1, 1], &[], &[], &[])), 0);
        assert_eq!(multiplicity(AlgebraKind::M11E, &mp(&[], &[], &[1, 1], &[])), 0);
        assert_eq!(multiplicity(AlgebraKind::M11E, &mp(&[], &[1, 1], &[], &[])), 0);
        assert_eq!(multiplicity(AlgebraKind::UT11E, &mp(&[], &[], &[], &[1])), 0);
        assert_eq!(multiplicity(AlgebraKind::UT3E010, &mp(&[1, 1, 1], &[1], &[], &[])), 0);
    }

    #[test]
    fn interpreted_flag() {
        let m = multiplicity_detail(AlgebraKind::UT3E010, &mp(&[2], &[1], &[], &[]));
        assert_eq!(m.value, 3);
        assert!(m.interpreted);
        assert!(!multiplicity_detail(AlgebraKind::UT3E010, &mp(&[2], &[1], &[1], &[])).interpreted);
    }

    #[test]
    fn predicted_examples() {
        assert_eq!(predicted_dim(AlgebraKind::M11E, MultiDegree::new(1, 1, 1, 1)), 2);
        assert_eq!(predicted_dim(AlgebraKind::UT11E, MultiDegree::new(2, 0, 2, 0)), 1);
        for kind in AlgebraKind::ALL {
            assert_eq!(predicted_dim(kind, MultiDegree::new(0, 0, 0, 0)), 1);
        }
    }

    #[test]
    fn reports() {
        let r = verify_cocharacters(AlgebraKind::M11E, MultiDegree::new(1, 1, 1, 1)).unwrap();
        assert!(r.matched);
        assert_eq!((r.predicted, r.computed), (2, 2));
        let r = verify_cocharacters(AlgebraKind::UT11E, MultiDegree::new(0, 0, 0, 1)).unwrap();
        assert_eq!((r.predicted, r.computed, r.matched), (0, 0, true));
        let r = verify_cocharacters(AlgebraKind::UT3E010, MultiDegree::new(1, 1, 0, 0)).unwrap();
        assert_eq!((r.predicted, r.computed), (2, 2));
    }
}
