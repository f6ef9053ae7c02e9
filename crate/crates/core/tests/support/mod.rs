//! Independent multiplicity oracle: the character of the product of symmetric groups acting
//! on the relatively free multilinear quotient, paired with irreducible characters computed
//! by the Murnaghan-Nakayama rule.

#![allow(dead_code)]

use std::collections::HashMap;

use gstar::dims::{evaluation_matrix, BasisFlavor, DimOptions};
use gstar::partition::{partitions, Multipartition, Partition};
use gstar::rank::{exact_rank, SparseMatrix};
use gstar::{AlgebraKind, MultiDegree, Rational, Word};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `χ_λ` at the class of cycle type `mu`, via beta-numbers.
pub fn mn_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let k = lambda.len();
    let beta: Vec<i64> = lambda.iter().enumerate().map(|(i, &l)| (l + k - 1 - i) as i64).collect();
    fn rec(beta: &mut Vec<i64>, mu: &[usize]) -> i64 {
        let Some((&r, rest)) = mu.split_first() else {
            return 1;
        };
        let r = r as i64;
        let mut total = 0;
        for i in 0..beta.len() {
            let b = beta[i];
            let nb = b - r;
            if nb < 0 || beta.contains(&nb) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > nb && x < b).count();
            beta[i] = nb;
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * rec(beta, rest);
            beta[i] = b;
        }
        total
    }
    let mut beta = beta;
    rec(&mut beta, mu)
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Size of the conjugacy class of cycle type `mu` in `S_n`.
fn class_size(mu: &[usize]) -> u64 {
    let n: usize = mu.iter().sum();
    let mut z: u64 = 1;
    let mut counts: HashMap<usize, u64> = HashMap::new();
    for &m in mu {
        *counts.entry(m).or_default() += 1;
    }
    for (m, c) in counts {
        z *= (m as u64).pow(c as u32) * factorial(c as usize);
    }
    factorial(n) / z
}

/// A permutation of `0..n` with the given cycle type.
fn representative(mu: &[usize]) -> Vec<usize> {
    let n: usize = mu.iter().sum();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in mu {
        for j in 0..len {
            perm[start + j] = start + (j + 1) % len;
        }
        start += len;
    }
    perm
}

/// Quotient data: a basis of the row space as word indices, words, and a dense projection
/// preserving the row relations.
pub struct Quotient {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    pivot_cols: Vec<usize>,
    inverse: Vec<Vec<Rational>>,
}

fn rank_dense(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = SparseMatrix::new(ncols);
    for r in rows {
        m.push_row(r.iter().cloned().enumerate());
    }
    exact_rank(&m)
}

fn invert(mut a: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("invertible");
        a.swap(c, p);
        inv.swap(c, p);
        let f = a[c][c].clone();
        for j in 0..n {
            a[c][j] = &a[c][j] / &f;
            inv[c][j] = &inv[c][j] / &f;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let g = a[r][c].clone();
                for j in 0..n {
                    let (x, y) = (&g * &a[c][j], &g * &inv[c][j]);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv
}

impl Quotient {
    pub fn new(kind: AlgebraKind, d: MultiDegree) -> Self {
        let em = evaluation_matrix(d, kind, BasisFlavor::Full, &DimOptions::default()).unwrap();
        let rank = em.rank();
        let words: Vec<Word> = em.row_labels.iter().map(|s| s.parse().unwrap()).collect();
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let ncols = em.matrix.ncols();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut width = rank + 4;
        let rows = loop {
            let proj: Vec<Vec<i64>> = (0..ncols).map(|_| (0..width).map(|_| rng.gen_range(-9..=9)).collect()).collect();
            let rows: Vec<Vec<Rational>> = (0..em.matrix.nrows())
                .map(|i| {
                    let mut out = vec![Rational::zero(); width];
                    for (c, v) in em.matrix.row(i) {
                        for (j, o) in out.iter_mut().enumerate() {
                            *o += v * Rational::from_integer(proj[*c][j].into());
                        }
                    }
                    out
                })
                .collect();
            if rank_dense(&rows) == rank {
                break rows;
            }
            width += 4;
        };
        let mut basis = Vec::new();
        for i in 0..rows.len() {
            let mut trial: Vec<Vec<Rational>> = basis.iter().map(|&b: &usize| rows[b].clone()).collect();
            trial.push(rows[i].clone());
            if rank_dense(&trial) == trial.len() {
                basis.push(i);
            }
            if basis.len() == rank {
                break;
            }
        }
        let mut pivot_cols = Vec::new();
        for c in 0..width {
            let mut trial = pivot_cols.clone();
            trial.push(c);
            let sub: Vec<Vec<Rational>> = basis.iter().map(|&b| trial.iter().map(|&j| rows[b][j].clone()).collect()).collect();
            if rank_dense(&transpose(&sub)) == trial.len() {
                pivot_cols.push(c);
            }
            if pivot_cols.len() == rank {
                break;
            }
        }
        let square: Vec<Vec<Rational>> = basis
            .iter()
            .map(|&b| pivot_cols.iter().map(|&j| rows[b][j].clone()).collect())
            .collect();
        let inverse = if rank == 0 { Vec::new() } else { invert(square) };
        Quotient { words, index, rows, basis, pivot_cols, inverse }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Trace of the renaming `perms[s]` (one permutation per species) on the quotient.
    pub fn trace(&self, perms: &[Vec<usize>; 4]) -> Rational {
        let mut tr = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let image = Word(
                self.words[b]
                    .0
                    .iter()
                    .map(|v| {
                        let mut w = *v;
                        w.index = perms[v.species()][(v.index - 1) as usize] as u32 + 1;
                        w
                    })
                    .collect(),
            );
            let row = &self.rows[self.index[&image]];
            // Coordinates x with x^T S = row restricted to the pivot columns.
            let v: Vec<&Rational> = self.pivot_cols.iter().map(|&j| &row[j]).collect();
            let mut xi = Rational::zero();
            for (k, vk) in v.iter().enumerate() {
                xi += *vk * &self.inverse[k][i];
            }
            tr += xi;
        }
        tr
    }
}

fn transpose(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.first().map_or(0, Vec::len);
    (0..n).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// All multiplicities of the quotient of degree `d`, keyed by multipartition.
pub fn oracle_multiplicities(kind: AlgebraKind, d: MultiDegree) -> Vec<(Multipartition, u64)> {
    let q = Quotient::new(kind, d);
    let class_lists: Vec<Vec<Partition>> = d.0.iter().map(|&n| partitions(n)).collect();
    let mut classes = Vec::new();
    for a in &class_lists[0] {
        for b in &class_lists[1] {
            for c in &class_lists[2] {
                for e in &class_lists[3] {
                    let types = [a, b, c, e];
                    let size: u64 = types.iter().map(|t| class_size(t.parts())).product();
                    let perms = types.map(|t| representative(t.parts()));
                    let chi = q.trace(&perms);
                    classes.push((types.map(|t| t.parts().to_vec()), size, chi));
                }
            }
        }
    }
    let order: u64 = d.0.iter().map(|&n| factorial(n)).product();
    gstar::partition::multipartitions(d)
        .into_iter()
        .map(|mp| {
            let mut s = Rational::zero();
            for (types, size, chi) in &classes {
                let irr: i64 = (0..4).map(|i| mn_character(mp.0[i].parts(), &types[i])).product();
                s += chi * Rational::from_integer((*size as i64 * irr).into());
            }
            let m = s / Rational::from_integer((order as i64).into());
            assert!(m.is_integer(), "non-integral multiplicity {m} for {mp}");
            let m = m.to_integer();
            (mp, u64::try_from(m).expect("nonnegative multiplicity"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use gstar::partition::irreducible_degree;

    #[test]
    fn characters_at_identity_are_degrees() {
        for n in 1..=6 {
            for l in partitions(n) {
                let ones = vec![1; n];
                assert_eq!(mn_character(l.parts(), &ones) as u64, irreducible_degree(&l));
            }
        }
    }
}
