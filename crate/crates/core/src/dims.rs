//! Dimensions of the relatively free multilinear spaces via evaluation matrices.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraKind;
use crate::error::{Error, Result};
use crate::eval::{scheme_points_with_slack, EvaluationScheme};
use crate::free::{multilinear_basis, proper_products, FreePolynomial, MultiDegree, Variable};
use crate::rank::{exact_rank, SparseMatrix};
use crate::scalar::Rational;

/// Default total degree cap for dimension computations.
pub const DIM_DEGREE_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisFlavor {
    /// All multilinear words.
    Full,
    /// The `Y_0`-proper spanning products.
    Proper,
}

impl BasisFlavor {
    pub fn name(self) -> &'static str {
        match self {
            BasisFlavor::Full => "full",
            BasisFlavor::Proper => "proper",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimOptions {
    pub rank_slack: usize,
    pub degree_cap: usize,
}

impl Default for DimOptions {
    fn default() -> Self {
        DimOptions {
            rank_slack: 0,
            degree_cap: DIM_DEGREE_CAP,
        }
    }
}

/// Rows are spanning polynomials; columns are `(point, cell, grassmann mask)` triples,
/// interned in first-seen order.
#[derive(Debug, Clone)]
pub struct EvaluationMatrix {
    pub matrix: SparseMatrix,
    pub row_labels: Vec<String>,
    pub points: usize,
}

impl EvaluationMatrix {
    pub fn rank(&self) -> usize {
        exact_rank(&self.matrix)
    }
}

/// Lexicographic rank of a permutation given as positions into the sorted variable list.
fn permutation_rank(perm: &[usize]) -> usize {
    let n = perm.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller_later = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        rank = rank * (n - i) + smaller_later;
    }
    rank
}

/// Expresses a multilinear polynomial over `vars` by word ranks.
fn word_coordinates(p: &FreePolynomial, vars: &[Variable]) -> Result<Vec<(usize, Rational)>> {
    p.terms()
        .map(|(w, c)| {
            let perm = w
                .0
                .iter()
                .map(|v| vars.binary_search(v).map_err(|_| Error::Binding(v.to_string())))
                .collect::<Result<Vec<_>>>()?;
            if perm.len() != vars.len() {
                return Err(Error::Contract(format!("word {w} is not multilinear in the scheme variables")));
            }
            Ok((permutation_rank(&perm), c.clone()))
        })
        .collect()
}

type PointValues = Vec<(usize, Vec<(usize, u64, Rational)>)>;

/// Evaluation matrix of the given rows (as word-rank combinations) over a scheme whose
/// variables are exactly the multilinear variables.
fn assemble(scheme: &EvaluationScheme, rows: &[Vec<(usize, Rational)>], full: bool) -> SparseMatrix {
    let nwords: usize = (1..=scheme.variables().len()).product();
    let per_point: Vec<PointValues> = (0..scheme.len())
        .into_par_iter()
        .map(|i| {
            let mut values: Vec<Option<Vec<(usize, u64, Rational)>>> = vec![None; nwords];
            scheme.for_each_word_value(i, |r, x| {
                values[r] = Some(x.coordinates().map(|(c, m, v)| (c, m, v.clone())).collect());
            });
            if full {
                values
                    .into_iter()
                    .enumerate()
                    .filter_map(|(r, v)| v.map(|v| (r, v)))
                    .collect()
            } else {
                rows.iter()
                    .enumerate()
                    .filter_map(|(r, combo)| {
                        let mut acc: HashMap<(usize, u64), Rational> = HashMap::new();
                        for (w, c) in combo {
                            if let Some(v) = &values[*w] {
                                for (cell, mask, x) in v {
                                    *acc.entry((*cell, *mask)).or_default() += c * x;
                                }
                            }
                        }
                        let mut entries: Vec<(usize, u64, Rational)> = acc
                            .into_iter()
                            .filter(|(_, x)| x != &Rational::default())
                            .map(|((c, m), x)| (c, m, x))
                            .collect();
                        entries.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
                        (!entries.is_empty()).then_some((r, entries))
                    })
                    .collect()
            }
        })
        .collect();

    let nrows = if full { nwords } else { rows.len() };
    let mut columns: HashMap<(usize, usize, u64), usize> = HashMap::new();
    let mut row_entries: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); nrows];
    for (point, values) in per_point.into_iter().enumerate() {
        for (r, entries) in values {
            for (cell, mask, x) in entries {
                let next = columns.len();
                let col = *columns.entry((point, cell, mask)).or_insert(next);
                row_entries[r].push((col, x));
            }
        }
    }
    let mut m = SparseMatrix::new(columns.len());
    for r in row_entries {
        m.push_row(r);
    }
    m
}

fn check_cap(d: MultiDegree, opts: &DimOptions) -> Result<()> {
    if d.total() > opts.degree_cap {
        return Err(Error::Capacity {
            what: "dimension total degree",
            cap: opts.degree_cap,
            requested: d.total(),
        });
    }
    Ok(())
}

/// Matrix for a given scheme over the designated variables of `d`.
pub fn evaluation_matrix_on(scheme: &EvaluationScheme, d: MultiDegree, flavor: BasisFlavor) -> Result<EvaluationMatrix> {
    let vars = d.variables();
    if scheme.variables() != vars.as_slice() {
        return Err(Error::Contract("scheme variables differ from the designated variables".into()));
    }
    let (labels, rows): (Vec<String>, Vec<Vec<(usize, Rational)>>) = match flavor {
        BasisFlavor::Full => {
            let words = multilinear_basis(d)?;
            (words.iter().map(|w| w.to_string()).collect(), Vec::new())
        }
        BasisFlavor::Proper => {
            let products = proper_products(d)?;
            let mut labels = Vec::with_capacity(products.len());
            let mut rows = Vec::with_capacity(products.len());
            for factors in products {
                labels.push(factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" "));
                let p = factors.iter().fold(FreePolynomial::one(), |acc, f| &acc * &f.expand());
                rows.push(word_coordinates(&p, &vars)?);
            }
            (labels, rows)
        }
    };
    let matrix = assemble(scheme, &rows, flavor == BasisFlavor::Full);
    Ok(EvaluationMatrix {
        matrix,
        row_labels: labels,
        points: scheme.len(),
    })
}

pub fn evaluation_matrix(d: MultiDegree, kind: AlgebraKind, flavor: BasisFlavor, opts: &DimOptions) -> Result<EvaluationMatrix> {
    check_cap(d, opts)?;
    let scheme = scheme_points_with_slack(kind, d, opts.rank_slack)?;
    evaluation_matrix_on(&scheme, d, flavor)
}

pub fn dimension(d: MultiDegree, kind: AlgebraKind, flavor: BasisFlavor, opts: &DimOptions) -> Result<usize> {
    Ok(evaluation_matrix(d, kind, flavor, opts)?.rank())
}

/// `dim P_d(kind)`.
pub fn dim_p(d: MultiDegree, kind: AlgebraKind) -> Result<usize> {
    dimension(d, kind, BasisFlavor::Full, &DimOptions::default())
}

/// `dim Γ_d(kind)`.
pub fn dim_gamma(d: MultiDegree, kind: AlgebraKind) -> Result<usize> {
    dimension(d, kind, BasisFlavor::Proper, &DimOptions::default())
}

/// `dim P_d` computed on all basis tuples of the rank-`rank` algebra.
pub fn dim_p_exhaustive(d: MultiDegree, kind: AlgebraKind, rank: usize) -> Result<usize> {
    check_cap(d, &DimOptions::default())?;
    let scheme = EvaluationScheme::exhaustive(kind, &d.variables(), rank)?;
    Ok(evaluation_matrix_on(&scheme, d, BasisFlavor::Full)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(a: usize, b: usize, c: usize, e: usize) -> MultiDegree {
        MultiDegree::new(a, b, c, e)
    }

    #[test]
    fn permutation_rank_is_lexicographic() {
        assert_eq!(permutation_rank(&[0, 1, 2]), 0);
        assert_eq!(permutation_rank(&[0, 2, 1]), 1);
        assert_eq!(permutation_rank(&[2, 1, 0]), 5);
    }

    #[test]
    fn matrix_examples() {
        let m = evaluation_matrix(md(0, 1, 0, 0), AlgebraKind::UT11E, BasisFlavor::Full, &DimOptions::default()).unwrap();
        assert_eq!(m.matrix.nrows(), 1);
        assert_eq!(m.rank(), 1);
        assert_eq!(dim_p(md(0, 0, 0, 1), AlgebraKind::UT11E).unwrap(), 0);
        let m = evaluation_matrix(md(1, 0, 1, 0), AlgebraKind::M11E, BasisFlavor::Full, &DimOptions::default()).unwrap();
        // y_{1,0} is central in M11E, so the two words coincide modulo identities.
        assert_eq!(m.matrix.nrows(), 2);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn dim_p_examples() {
        assert_eq!(dim_p(md(1, 1, 1, 1), AlgebraKind::M11E).unwrap(), 2);
        assert_eq!(dim_p(md(2, 0, 2, 0), AlgebraKind::UT11E).unwrap(), 1);
        assert_eq!(dim_p(md(1, 1, 0, 0), AlgebraKind::UT3E010).unwrap(), 2);
        assert_eq!(dim_p(md(0, 0, 0, 0), AlgebraKind::M11E).unwrap(), 1);
    }

    #[test]
    fn dim_gamma_examples() {
        assert_eq!(dim_gamma(md(0, 2, 0, 2), AlgebraKind::M11E).unwrap(), 2);
        assert_eq!(dim_gamma(md(0, 0, 2, 0), AlgebraKind::M11E).unwrap(), 1);
        assert_eq!(dim_gamma(md(1, 0, 1, 0), AlgebraKind::UT11E).unwrap(), 0);
    }

    #[test]
    fn capacity() {
        assert!(matches!(
            dim_p(md(7, 0, 0, 0), AlgebraKind::M11E),
            Err(Error::Capacity { cap: 6, .. })
        ));
    }
}
