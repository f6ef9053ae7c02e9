//! The free graded algebra with graded involution on symmetric (`y`) and skew (`z`)
//! variables of both degrees.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{rat, Parity, Rational};

/// Degree cap for `multilinear_basis` (8! words).
pub const MULTILINEAR_DEGREE_CAP: usize = 8;
/// Degree cap for `proper_spanning`.
pub const PROPER_DEGREE_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VarKind {
    Y,
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub kind: VarKind,
    pub parity: Parity,
    pub index: u32,
}

impl Variable {
    pub const fn new(kind: VarKind, parity: Parity, index: u32) -> Self {
        Variable { kind, parity, index }
    }

    pub const fn y(index: u32, parity: Parity) -> Self {
        Variable::new(VarKind::Y, parity, index)
    }

    pub const fn z(index: u32, parity: Parity) -> Self {
        Variable::new(VarKind::Z, parity, index)
    }

    /// Position of the variable's species in `(y·0, y·1, z·0, z·1)`.
    pub fn species(&self) -> usize {
        match (self.kind, self.parity) {
            (VarKind::Y, Parity::Even) => 0,
            (VarKind::Y, Parity::Odd) => 1,
            (VarKind::Z, Parity::Even) => 2,
            (VarKind::Z, Parity::Odd) => 3,
        }
    }

    pub fn is_y0(&self) -> bool {
        self.species() == 0
    }
}

/// Short constructors used throughout tests and identity lists: `y(1,0)` is `y_{1,0}`.
pub fn y(index: u32, parity: u8) -> Variable {
    Variable::y(index, Parity::from_bit(parity))
}

pub fn z(index: u32, parity: u8) -> Variable {
    Variable::z(index, Parity::from_bit(parity))
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            VarKind::Y => 'y',
            VarKind::Z => 'z',
        };
        write!(f, "{}{}.{}", k, self.index, self.parity)
    }
}

impl FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Contract(format!("malformed variable '{s}'"));
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('y') => VarKind::Y,
            Some('z') => VarKind::Z,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        let (idx, par) = rest.split_once('.').ok_or_else(bad)?;
        let index: u32 = idx.parse().map_err(|_| bad())?;
        let parity = match par {
            "0" => Parity::Even,
            "1" => Parity::Odd,
            _ => return Err(bad()),
        };
        if index == 0 {
            return Err(bad());
        }
        Ok(Variable::new(kind, parity, index))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Variable>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self) -> Parity {
        self.0.iter().fold(Parity::Even, |acc, v| acc + v.parity)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word::empty());
        }
        s.split_whitespace()
            .map(Variable::from_str)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiDegree(pub [usize; 4]);

impl MultiDegree {
    pub fn new(n1: usize, n2: usize, n3: usize, n4: usize) -> Self {
        MultiDegree([n1, n2, n3, n4])
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The designated variables `y_{1..n1,0}, y_{1..n2,1}, z_{1..n3,0}, z_{1..n4,1}`, sorted.
    pub fn variables(&self) -> Vec<Variable> {
        let [n1, n2, n3, n4] = self.0;
        let mut v = Vec::with_capacity(self.total());
        v.extend((1..=n1 as u32).map(|i| y(i, 0)));
        v.extend((1..=n2 as u32).map(|i| y(i, 1)));
        v.extend((1..=n3 as u32).map(|i| z(i, 0)));
        v.extend((1..=n4 as u32).map(|i| z(i, 1)));
        v
    }

    pub fn of_variables(vars: &[Variable]) -> Self {
        let mut n = [0; 4];
        for v in vars {
            n[v.species()] += 1;
        }
        MultiDegree(n)
    }

    /// All multidegrees with the given total degree, in lexicographic order.
    pub fn with_total(total: usize) -> Vec<MultiDegree> {
        let mut out = Vec::new();
        for n1 in (0..=total).rev() {
            for n2 in (0..=total - n1).rev() {
                for n3 in (0..=total - n1 - n2).rev() {
                    out.push(MultiDegree::new(n1, n2, n3, total - n1 - n2 - n3));
                }
            }
        }
        out.reverse();
        out
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// Exact rational combination of words. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreePolynomial {
    terms: BTreeMap<Word, Rational>,
}

impl FreePolynomial {
    pub fn zero() -> Self {
        FreePolynomial::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn var(v: Variable) -> Self {
        Self::from_word(Word(vec![v]))
    }

    pub fn from_word(w: Word) -> Self {
        Self::from_terms([(w, Rational::one())])
    }

    /// Product of the given variables, left to right.
    pub fn monomial(vars: &[Variable]) -> Self {
        Self::from_word(Word(vars.to_vec()))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = FreePolynomial::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreePolynomial {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The involution: reverse every word, sign `(-1)^{#z}`.
    pub fn star_action(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| {
            let zs = w.0.iter().filter(|v| v.kind == VarKind::Z).count();
            let mut rev = w.0.clone();
            rev.reverse();
            let c = if zs % 2 == 1 { -c } else { c.clone() };
            (Word(rev), c)
        }))
    }

    /// Distinct variables occurring in the polynomial, sorted.
    pub fn variables(&self) -> Vec<Variable> {
        let mut vs: Vec<Variable> = self.terms.keys().flat_map(|w| w.0.iter().copied()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// `Some(vars)` if every word uses each of `vars` exactly once (zero counts as multilinear
    /// with no variables).
    pub fn multilinear_variables(&self) -> Option<Vec<Variable>> {
        let mut reference: Option<Vec<Variable>> = None;
        for w in self.terms.keys() {
            let mut sorted = w.0.clone();
            sorted.sort();
            if sorted.windows(2).any(|p| p[0] == p[1]) {
                return None;
            }
            match &reference {
                None => reference = Some(sorted),
                Some(r) if *r != sorted => return None,
                _ => {}
            }
        }
        Some(reference.unwrap_or_default())
    }

    pub fn is_multilinear(&self) -> bool {
        self.multilinear_variables().is_some()
    }

    /// Parity if every word has the same degree.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut parity = None;
        for w in self.terms.keys() {
            let p = w.parity();
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(parity.unwrap_or(Parity::Even))
    }

    /// Renames variables through `f` (used to substitute fresh indices).
    pub fn rename(&self, f: impl Fn(Variable) -> Variable) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(w, c)| (Word(w.0.iter().map(|v| f(*v)).collect()), c.clone())),
        )
    }
}

impl Add for &FreePolynomial {
    type Output = FreePolynomial;

    fn add(self, rhs: &FreePolynomial) -> FreePolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FreePolynomial {
    type Output = FreePolynomial;

    fn sub(self, rhs: &FreePolynomial) -> FreePolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &FreePolynomial {
    type Output = FreePolynomial;

    fn neg(self) -> FreePolynomial {
        self.scale(&rat(-1))
    }
}

impl Mul for &FreePolynomial {
    type Output = FreePolynomial;

    fn mul(self, rhs: &FreePolynomial) -> FreePolynomial {
        let mut out = FreePolynomial::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for FreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag.is_one() && !w.is_empty() {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag} {w}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    word: String,
    num: String,
    den: String,
}

impl Serialize for FreePolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(w, c)| TermRepr {
                word: w.to_string(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FreePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = Vec::<TermRepr>::deserialize(d)?;
        let mut p = FreePolynomial::zero();
        for t in v {
            let w: Word = t.word.parse().map_err(D::Error::custom)?;
            let num: num_bigint::BigInt = t.num.parse().map_err(D::Error::custom)?;
            let den: num_bigint::BigInt = t.den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            p.add_term(w, Rational::new(num, den));
        }
        Ok(p)
    }
}

/// Left-normed commutator `[a1, a2, ..., ak] = [[a1, a2], ..., ak]`.
pub fn commutator(args: &[FreePolynomial]) -> Result<FreePolynomial> {
    if args.len() < 2 {
        return Err(Error::Arity(format!(
            "commutator needs at least 2 arguments, got {}",
            args.len()
        )));
    }
    let mut acc = args[0].clone();
    for b in &args[1..] {
        acc = &(&acc * b) - &(b * &acc);
    }
    Ok(acc)
}

/// Commutator of variables.
pub fn commutator_vars(vars: &[Variable]) -> Result<FreePolynomial> {
    let args: Vec<FreePolynomial> = vars.iter().map(|v| FreePolynomial::var(*v)).collect();
    commutator(&args)
}

/// Jordan product `ab + ba`.
pub fn circle(a: &FreePolynomial, b: &FreePolynomial) -> FreePolynomial {
    &(a * b) + &(b * a)
}

fn check_cap(what: &'static str, cap: usize, requested: usize) -> Result<()> {
    if requested > cap {
        return Err(Error::Capacity { what, cap, requested });
    }
    Ok(())
}

/// Visits the permutations of `0..n` in lexicographic order.
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        f(&perm);
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// Every word using each designated variable of `d` exactly once, in lexicographic order.
pub fn multilinear_basis(d: MultiDegree) -> Result<Vec<Word>> {
    multilinear_basis_capped(d, MULTILINEAR_DEGREE_CAP)
}

pub fn multilinear_basis_capped(d: MultiDegree, cap: usize) -> Result<Vec<Word>> {
    check_cap("multilinear basis total degree", cap, d.total())?;
    let vars = d.variables();
    let mut out = Vec::new();
    for_each_permutation(vars.len(), |perm| {
        out.push(Word(perm.iter().map(|&i| vars[i]).collect()));
    });
    Ok(out)
}

/// One factor of a `Y_0`-proper product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProperFactor {
    Var(Variable),
    /// Left-normed commutator whose first entry is the largest of its entries.
    Commutator(Vec<Variable>),
}

impl ProperFactor {
    pub fn expand(&self) -> FreePolynomial {
        match self {
            ProperFactor::Var(v) => FreePolynomial::var(*v),
            ProperFactor::Commutator(vs) => commutator_vars(vs).expect("commutator factors have length >= 2"),
        }
    }
}

impl fmt::Display for ProperFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProperFactor::Var(v) => write!(f, "{v}"),
            ProperFactor::Commutator(vs) => {
                let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

/// Products of variables from `Y_1 ∪ Z` and left-normed commutators, using each designated
/// variable of `d` exactly once; `y_{·,0}` only inside commutators.
pub fn proper_products(d: MultiDegree) -> Result<Vec<Vec<ProperFactor>>> {
    proper_products_capped(d, PROPER_DEGREE_CAP)
}

pub fn proper_products_capped(d: MultiDegree, cap: usize) -> Result<Vec<Vec<ProperFactor>>> {
    check_cap("proper spanning total degree", cap, d.total())?;
    let vars = d.variables();
    let n = vars.len();
    let mut out = Vec::new();
    let mut current = Vec::new();
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    proper_rec(&vars, full, &mut current, &mut out);
    Ok(out)
}

fn proper_rec(vars: &[Variable], remaining: u32, current: &mut Vec<ProperFactor>, out: &mut Vec<Vec<ProperFactor>>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    // Enumerate nonempty subsets of `remaining` in increasing numeric order.
    let mut sub: u32 = 0;
    loop {
        sub = (sub.wrapping_sub(remaining)) & remaining;
        if sub == 0 {
            break;
        }
        let members: Vec<usize> = (0..vars.len()).filter(|&i| sub & (1 << i) != 0).collect();
        if members.len() == 1 {
            let v = vars[members[0]];
            if v.is_y0() {
                continue;
            }
            current.push(ProperFactor::Var(v));
            proper_rec(vars, remaining & !sub, current, out);
            current.pop();
        } else {
            // vars are sorted, so the last member is the maximum.
            let head = vars[*members.last().unwrap()];
            let tail: Vec<Variable> = members[..members.len() - 1].iter().map(|&i| vars[i]).collect();
            for_each_permutation(tail.len(), |perm| {
                let mut entries = vec![head];
                entries.extend(perm.iter().map(|&i| tail[i]));
                current.push(ProperFactor::Commutator(entries));
                proper_rec(vars, remaining & !sub, current, out);
                current.pop();
            });
        }
    }
}

/// Expanded spanning set of the multilinear `Y_0`-proper polynomials of multidegree `d`.
pub fn proper_spanning(d: MultiDegree) -> Result<Vec<FreePolynomial>> {
    Ok(proper_products(d)?
        .iter()
        .map(|factors| {
            factors
                .iter()
                .fold(FreePolynomial::one(), |acc, f| &acc * &f.expand())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Variable) -> FreePolynomial {
        FreePolynomial::var(x)
    }

    #[test]
    fn star_action_examples() {
        let p = FreePolynomial::monomial(&[y(1, 0), z(1, 0)]);
        let expect = FreePolynomial::monomial(&[z(1, 0), y(1, 0)]).scale(&rat(-1));
        assert_eq!(p.star_action(), expect);
        let q = FreePolynomial::monomial(&[y(1, 1), y(2, 1)]);
        assert_eq!(q.star_action(), FreePolynomial::monomial(&[y(2, 1), y(1, 1)]));
    }

    #[test]
    fn commutator_examples() {
        let x = v(y(1, 0));
        assert!(commutator(&[x.clone(), x.clone()]).unwrap().is_zero());
        let c = commutator(&[v(y(1, 0)), v(z(1, 0))]).unwrap();
        let expect = &FreePolynomial::monomial(&[y(1, 0), z(1, 0)]) - &FreePolynomial::monomial(&[z(1, 0), y(1, 0)]);
        assert_eq!(c, expect);
        assert!(matches!(commutator(&[x]), Err(Error::Arity(_))));

        // [a,b,c] = abc - bac - cab + cba
        let (a, b, cc) = (y(1, 1), y(2, 1), y(3, 1));
        let t = commutator_vars(&[a, b, cc]).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.coefficient(&Word(vec![a, b, cc])), rat(1));
        assert_eq!(t.coefficient(&Word(vec![b, a, cc])), rat(-1));
        assert_eq!(t.coefficient(&Word(vec![cc, a, b])), rat(-1));
        assert_eq!(t.coefficient(&Word(vec![cc, b, a])), rat(1));
    }

    #[test]
    fn circle_examples() {
        let a = v(z(1, 0));
        let b = v(y(1, 1));
        let expect = &FreePolynomial::monomial(&[z(1, 0), y(1, 1)]) + &FreePolynomial::monomial(&[y(1, 1), z(1, 0)]);
        assert_eq!(circle(&a, &b), expect);
        assert_eq!(circle(&a, &b), circle(&b, &a));
        assert_eq!(circle(&FreePolynomial::one(), &a), a.scale(&rat(2)));
    }

    #[test]
    fn multilinear_basis_examples() {
        let b = multilinear_basis(MultiDegree::new(1, 0, 1, 0)).unwrap();
        assert_eq!(
            b,
            vec![Word(vec![y(1, 0), z(1, 0)]), Word(vec![z(1, 0), y(1, 0)])]
        );
        assert_eq!(multilinear_basis(MultiDegree::new(0, 0, 0, 0)).unwrap(), vec![Word::empty()]);
        assert_eq!(multilinear_basis(MultiDegree::new(2, 1, 0, 0)).unwrap().len(), 6);
        assert!(matches!(
            multilinear_basis(MultiDegree::new(9, 0, 0, 0)),
            Err(Error::Capacity { cap: 8, .. })
        ));
    }

    #[test]
    fn proper_spanning_examples() {
        let p = proper_spanning(MultiDegree::new(0, 1, 0, 0)).unwrap();
        assert_eq!(p, vec![v(y(1, 1))]);
        assert!(proper_spanning(MultiDegree::new(1, 0, 0, 0)).unwrap().is_empty());
        let q = proper_products(MultiDegree::new(1, 0, 1, 0)).unwrap();
        assert_eq!(q, vec![vec![ProperFactor::Commutator(vec![z(1, 0), y(1, 0)])]]);
        assert_eq!(proper_spanning(MultiDegree::new(0, 0, 0, 0)).unwrap(), vec![FreePolynomial::one()]);
    }

    #[test]
    fn proper_spanning_count_three_free_variables() {
        // 3! products of single variables, 3*2 (commutator pair, single) arrangements,
        // and 2 canonical triple commutators.
        let p = proper_products(MultiDegree::new(0, 1, 1, 1)).unwrap();
        assert_eq!(p.len(), 6 + 6 + 2);
    }

    #[test]
    fn text_round_trip() {
        let w: Word = "y1.0 z2.1".parse().unwrap();
        assert_eq!(w, Word(vec![y(1, 0), z(2, 1)]));
        assert_eq!(w.to_string(), "y1.0 z2.1");
        assert!("x1.0".parse::<Word>().is_err());
        let p = &FreePolynomial::monomial(&[y(1, 1), z(1, 1)]).scale(&crate::scalar::frac(-3, 2)) + &FreePolynomial::one();
        let json = serde_json::to_string(&p).unwrap();
        let back: FreePolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn multidegree_enumeration() {
        assert_eq!(MultiDegree::with_total(3).len(), 20);
        assert_eq!(MultiDegree::with_total(0), vec![MultiDegree::new(0, 0, 0, 0)]);
        assert_eq!(MultiDegree::new(1, 1, 0, 2).variables(), vec![y(1, 0), y(1, 1), z(1, 1), z(2, 1)]);
    }
}
