//! Finite-rank Grassmann algebra `E(n)` over the rationals.
//!
//! A basis monomial `e_{i1} e_{i2} ... e_{ik}` with `i1 < ... < ik` is encoded as a
//! bitmask with bit `i - 1` set for generator `e_i`. Coefficients are exact.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Parity, Rational};

pub const MAX_RANK: usize = 64;

/// Sign variant of the superinvolution induced by `±id` on the generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuperSign {
    /// `i_E`: the identity map.
    Plus,
    /// `-i_E`: fixes `E_0`, negates `E_1`.
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrassmannElement {
    rank: usize,
    /// Sorted by mask; no zero coefficients.
    terms: Vec<(u64, Rational)>,
}

/// Sign of `e_S * e_T` for disjoint `S`, `T`: parity of the inversions created by
/// concatenating the two ascending index sequences.
#[inline]
pub fn merge_sign(s: u64, t: u64) -> bool {
    let mut inversions = 0u32;
    let mut rest = t;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        let above = if bit >= 63 { 0 } else { s >> (bit + 1) };
        inversions += above.count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

fn check_rank(rank: usize) -> Result<()> {
    if rank > MAX_RANK {
        return Err(Error::Capacity {
            what: "grassmann rank",
            cap: MAX_RANK,
            requested: rank,
        });
    }
    Ok(())
}

impl GrassmannElement {
    pub fn zero(rank: usize) -> Self {
        GrassmannElement {
            rank,
            terms: Vec::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::scalar(rank, Rational::one())
    }

    pub fn scalar(rank: usize, c: Rational) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(0, c)] };
        GrassmannElement { rank, terms }
    }

    /// The generator `e_i` (1-based).
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        Self::monomial(rank, &[i])
    }

    /// Canonical monomial for the product `e_{i1} ... e_{ik}` in the given order.
    ///
    /// The coefficient is the sign of the sorting permutation; a repeated index gives zero.
    pub fn monomial(rank: usize, indices: &[usize]) -> Result<Self> {
        check_rank(rank)?;
        let mut mask = 0u64;
        let mut odd = false;
        for &i in indices {
            if i == 0 || i > rank {
                return Err(Error::Range { index: i, rank });
            }
            let bit = 1u64 << (i - 1);
            if mask & bit != 0 {
                return Ok(Self::zero(rank));
            }
            // e_i moves left past every already-placed generator with a larger index.
            odd ^= (mask >> (i - 1)).count_ones() % 2 == 1;
            mask |= bit;
        }
        let c = if odd { -Rational::one() } else { Rational::one() };
        Ok(GrassmannElement {
            rank,
            terms: vec![(mask, c)],
        })
    }

    /// Builds an element from raw `(mask, coefficient)` pairs, combining duplicates.
    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (u64, Rational)>) -> Result<Self> {
        check_rank(rank)?;
        let limit = if rank == 64 { u64::MAX } else { (1u64 << rank) - 1 };
        let mut raw = Vec::new();
        for (mask, c) in terms {
            if mask & !limit != 0 {
                let index = 64 - mask.leading_zeros() as usize;
                return Err(Error::Range { index, rank });
            }
            raw.push((mask, c));
        }
        Ok(Self::normalized(rank, raw))
    }

    fn normalized(rank: usize, mut raw: Vec<(u64, Rational)>) -> Self {
        raw.sort_by_key(|(m, _)| *m);
        let mut terms: Vec<(u64, Rational)> = Vec::with_capacity(raw.len());
        for (mask, c) in raw {
            match terms.last_mut() {
                Some((last, acc)) if *last == mask => *acc += c,
                _ => terms.push((mask, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        GrassmannElement { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &[(u64, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mask: u64) -> Rational {
        match self.terms.binary_search_by_key(&mask, |(m, _)| *m) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// `Some(p)` if every stored monomial has parity `p`; zero reports `Even`.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut parity = None;
        for (mask, _) in &self.terms {
            let p = Parity::of_len(mask.count_ones() as usize);
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(parity.unwrap_or(Parity::Even))
    }

    pub fn lies_in(&self, p: Parity) -> bool {
        self.terms
            .iter()
            .all(|(mask, _)| Parity::of_len(mask.count_ones() as usize) == p)
    }

    fn same_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::Structural(format!(
                "grassmann rank mismatch: {} vs {}",
                self.rank, other.rank
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            if ma < mb {
                out.push((*ma, ca.clone()));
                i += 1;
            } else if mb < ma {
                out.push((*mb, cb.clone()));
                j += 1;
            } else {
                let c = ca + cb;
                if !c.is_zero() {
                    out.push((*ma, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        GrassmannElement {
            rank: self.rank,
            terms: out,
        }
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        *self = self.add_unchecked(other);
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.rank);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma & mb != 0 {
                    continue;
                }
                let c = ca * cb;
                let c = if merge_sign(*ma, *mb) { -c } else { c };
                raw.push((ma | mb, c));
            }
        }
        if raw.len() <= 1 {
            return GrassmannElement {
                rank: self.rank,
                terms: raw,
            };
        }
        Self::normalized(self.rank, raw)
    }

    pub fn neg(&self) -> Self {
        GrassmannElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        GrassmannElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Terms whose monomial length has parity `p`.
    pub fn parity_component(&self, p: Parity) -> Self {
        GrassmannElement {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| Parity::of_len(m.count_ones() as usize) == p)
                .cloned()
                .collect(),
        }
    }

    pub fn superinvolution(&self, variant: SuperSign) -> Self {
        match variant {
            SuperSign::Plus => self.clone(),
            SuperSign::Minus => GrassmannElement {
                rank: self.rank,
                terms: self
                    .terms
                    .iter()
                    .map(|(m, c)| {
                        if m.count_ones() % 2 == 1 {
                            (*m, -c)
                        } else {
                            (*m, c.clone())
                        }
                    })
                    .collect(),
            },
        }
    }

    /// Same element viewed in a larger Grassmann algebra.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        Self::from_terms(rank, self.terms.iter().cloned())
    }
}

pub(crate) fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask & (1u64 << b) != 0).map(|b| b + 1).collect()
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mask, c)) in self.terms.iter().enumerate() {
            let idx = mask_indices(*mask)
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            if k == 0 {
                write!(f, "{}·e{{{}}}", c, idx)?;
            } else if c.is_negative() {
                write!(f, " - {}·e{{{}}}", -c, idx)?;
            } else {
                write!(f, " + {}·e{{{}}}", c, idx)?;
            }
        }
        Ok(())
    }
}
