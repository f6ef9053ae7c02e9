//! Integer partitions, multipartitions and irreducible character degrees.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::free::MultiDegree;

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts into decreasing order and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// At most one row (the empty partition counts).
    pub fn is_row(&self) -> bool {
        self.height() <= 1
    }

    /// A single column of the given length (the empty partition is the column of length 0).
    pub fn is_column_of(&self, len: usize) -> bool {
        self.size() == len && self.0.iter().all(|&p| p == 1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            cur.push(part);
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Degree of the irreducible symmetric group character, by the hook length formula.
pub fn irreducible_degree(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let mut hooks: Vec<u128> = Vec::with_capacity(lambda.size());
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            hooks.push((row - j - 1 + conj.part(j) - i - 1 + 1) as u128);
        }
    }
    // Interleave multiplication and division to keep intermediate values small.
    let mut num: u128 = 1;
    let mut den: u128 = hooks.iter().product();
    for k in 1..=lambda.size() as u128 {
        num *= k;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    u64::try_from(num).expect("character degree fits in u64")
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A 4-tuple of partitions indexing an irreducible character of `S_{n1} x ... x S_{n4}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition(pub [Partition; 4]);

impl Multipartition {
    pub fn new(a: Partition, b: Partition, c: Partition, d: Partition) -> Self {
        Multipartition([a, b, c, d])
    }

    pub fn degree(&self) -> MultiDegree {
        MultiDegree([self.0[0].size(), self.0[1].size(), self.0[2].size(), self.0[3].size()])
    }

    /// Product of the component character degrees.
    pub fn degree_product(&self) -> u64 {
        self.0.iter().map(irreducible_degree).product()
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// All multipartitions of `d`, component-wise reverse lexicographic.
pub fn multipartitions(d: MultiDegree) -> Vec<Multipartition> {
    let lists: Vec<Vec<Partition>> = d.0.iter().map(|&n| partitions(n)).collect();
    let mut out = Vec::new();
    for a in &lists[0] {
        for b in &lists[1] {
            for c in &lists[2] {
                for e in &lists[3] {
                    out.push(Multipartition::new(a.clone(), b.clone(), c.clone(), e.clone()));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Standard Young tableaux counted by removing corners recursively.
    fn syt_count(parts: &[usize]) -> u64 {
        if parts.iter().all(|&p| p == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let is_corner = parts[i] > 0 && (i + 1 == parts.len() || parts[i + 1] < parts[i]);
            if is_corner {
                let mut next = parts.to_vec();
                next[i] -= 1;
                total += syt_count(&next);
            }
        }
        total
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(
            partitions(3),
            vec![Partition::new(vec![3]), Partition::new(vec![2, 1]), Partition::new(vec![1, 1, 1])]
        );
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn degrees() {
        assert_eq!(irreducible_degree(&Partition::row(5)), 1);
        assert_eq!(irreducible_degree(&Partition::column(5)), 1);
        assert_eq!(irreducible_degree(&Partition::new(vec![2, 1])), 2);
        assert_eq!(irreducible_degree(&Partition::empty()), 1);
        for n in 0..=6 {
            for p in partitions(n) {
                assert_eq!(irreducible_degree(&p), syt_count(p.parts()), "{p}");
            }
        }
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 0..=6u64 {
            let s: u64 = partitions(n as usize).iter().map(|p| irreducible_degree(p).pow(2)).sum();
            assert_eq!(s, (1..=n).product::<u64>());
        }
    }

    #[test]
    fn multipartition_count() {
        let d = MultiDegree::new(2, 1, 3, 0);
        assert_eq!(multipartitions(d).len(), 2 * 3);
        assert!(multipartitions(d).iter().all(|m| m.degree() == d));
    }

    proptest! {
        #[test]
        fn conjugation_is_involution(parts in prop::collection::vec(1usize..6, 0..6)) {
            let p = Partition::new(parts);
            prop_assert_eq!(p.conjugate().conjugate(), p.clone());
            prop_assert_eq!(irreducible_degree(&p.conjugate()), irreducible_degree(&p));
        }
    }
}
