//! Sparse rational matrices and exact rank by fraction-free elimination.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

/// Row-major sparse matrix; each row is sorted by column with no explicit zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    /// Appends a row given as `(column, value)` pairs in any order; duplicates are summed.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, Rational)>) {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.ncols, "column {c} out of range {}", self.ncols);
            *acc.entry(c).or_insert_with(Rational::zero) += v;
        }
        self.rows.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::new(ncols);
        for r in rows {
            m.push_row(r.iter().enumerate().map(|(c, &v)| (c, Rational::from_integer(v.into()))));
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Same matrix with rows and columns reordered by the given permutations.
    pub fn permuted(&self, row_order: &[usize], col_map: &[usize]) -> SparseMatrix {
        let mut m = SparseMatrix::new(self.ncols);
        for &r in row_order {
            m.push_row(self.rows[r].iter().map(|(c, v)| (col_map[*c], v.clone())));
        }
        m
    }
}

type IntRow = Vec<(usize, BigInt)>;

/// Clears denominators of a rational row, returning the row and the multiplier used.
fn integer_row(row: &[(usize, Rational)]) -> (IntRow, BigInt) {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let out: IntRow = row
        .iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    (out, lcm)
}

fn make_primitive(row: &mut IntRow, combo: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter().chain(combo.iter()) {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return;
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut().chain(combo.iter_mut()) {
            *v = &*v / &g;
        }
    }
}

/// `a*x - b*y` on sparse rows.
fn combine(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ci = x.get(i).map_or(usize::MAX, |e| e.0);
        let cj = y.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, a * &x[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(b * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, a * &x[i - 1].1 - b * &y[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

struct Tracked {
    row: IntRow,
    combo: IntRow,
    origin: usize,
}

/// Echelon elimination. Returns the rank and, if `track` is set, the combinations of
/// original rows that reduced to zero.
fn eliminate(m: &SparseMatrix, track: bool) -> (usize, Vec<IntRow>) {
    let mut buckets: BTreeMap<usize, Vec<Tracked>> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (i, r) in m.rows.iter().enumerate() {
        let (mut row, scale) = integer_row(r);
        let mut combo = if track { vec![(i, scale)] } else { Vec::new() };
        if row.is_empty() {
            if track {
                kernel.push(vec![(i, BigInt::one())]);
            }
            continue;
        }
        make_primitive(&mut row, &mut combo);
        buckets.entry(row[0].0).or_default().push(Tracked { row, combo, origin: i });
    }
    let mut rank = 0;
    while let Some((_, mut bucket)) = buckets.pop_first() {
        // Pivot: smallest leading magnitude, then shortest row, then earliest origin.
        let best = (0..bucket.len())
            .min_by(|&a, &b| {
                let (ra, rb) = (&bucket[a], &bucket[b]);
                ra.row[0]
                    .1
                    .abs()
                    .cmp(&rb.row[0].1.abs())
                    .then(ra.row.len().cmp(&rb.row.len()))
                    .then(ra.origin.cmp(&rb.origin))
            })
            .expect("bucket is nonempty");
        let pivot = bucket.swap_remove(best);
        rank += 1;
        let lp = &pivot.row[0].1;
        for t in bucket {
            let lt = &t.row[0].1;
            let g = lp.gcd(lt);
            let (a, b) = (lp / &g, lt / &g);
            let mut row = combine(&a, &t.row, &b, &pivot.row);
            let mut combo = if track {
                combine(&a, &t.combo, &b, &pivot.combo)
            } else {
                Vec::new()
            };
            make_primitive(&mut row, &mut combo);
            if row.is_empty() {
                if track {
                    kernel.push(combo);
                }
            } else {
                buckets.entry(row[0].0).or_default().push(Tracked {
                    row,
                    combo,
                    origin: t.origin,
                });
            }
        }
    }
    (rank, kernel)
}

/// Rank over the rationals, exact.
pub fn exact_rank(m: &SparseMatrix) -> usize {
    eliminate(m, false).0
}

/// Basis of `{c : c^T M = 0}`, each vector of length `nrows` with integer entries.
pub fn left_kernel(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    let (_, kernel) = eliminate(m, true);
    kernel
        .into_iter()
        .map(|combo| {
            let mut v = vec![Rational::zero(); m.nrows()];
            for (i, c) in combo {
                v[i] = Rational::from_integer(c);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, rat};
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        assert_eq!(exact_rank(&SparseMatrix::from_dense(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])), 3);
        assert_eq!(exact_rank(&SparseMatrix::from_dense(&[vec![0, 0], vec![0, 0]])), 0);
        assert_eq!(exact_rank(&SparseMatrix::from_dense(&[vec![1, 2], vec![2, 4]])), 1);
        assert_eq!(exact_rank(&SparseMatrix::new(5)), 0);
    }

    #[test]
    fn rational_entries() {
        let mut m = SparseMatrix::new(2);
        m.push_row([(0, frac(1, 2)), (1, frac(1, 3))]);
        m.push_row([(0, rat(3)), (1, rat(2))]);
        assert_eq!(exact_rank(&m), 1);
    }

    fn dense_rank(rows: &[Vec<i64>]) -> usize {
        // Plain rational Gaussian elimination, independent of the sparse code path.
        let mut a: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        let ncols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..a.len() {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] / &a[rank][c];
                    for k in 0..ncols {
                        let d = &f * &a[rank][k];
                        a[r][k] -= d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
        })
    }

    proptest! {
        #[test]
        fn agrees_with_dense_elimination(rows in matrix_strategy()) {
            prop_assert_eq!(exact_rank(&SparseMatrix::from_dense(&rows)), dense_rank(&rows));
        }

        #[test]
        fn kernel_vectors_annihilate(rows in matrix_strategy()) {
            let m = SparseMatrix::from_dense(&rows);
            let kernel = left_kernel(&m);
            prop_assert_eq!(kernel.len(), m.nrows() - exact_rank(&m));
            for v in kernel {
                prop_assert!(v.iter().any(|x| !x.is_zero()));
                for c in 0..m.ncols() {
                    let mut s = Rational::zero();
                    for (i, row) in rows.iter().enumerate() {
                        s += &v[i] * rat(row[c]);
                    }
                    prop_assert!(s.is_zero());
                }
            }
        }
    }
}
