//! The three graded algebras with graded involution: `M_{1,1}(E)`, `UT_{1,1}(E)` and
//! the Grassmann envelope of `UT_3(K)` graded by `(0,1,0)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::GrassmannElement;
use crate::scalar::{frac, rat, Parity, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    /// `(M_{1,1}(E), *)`
    M11E,
    /// `(UT_{1,1}(E), *)`
    UT11E,
    /// `(UT_3(E)_{(0,1,0)}, *)`
    UT3E010,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 3] = [AlgebraKind::M11E, AlgebraKind::UT11E, AlgebraKind::UT3E010];

    pub fn matrix_size(self) -> usize {
        match self {
            AlgebraKind::M11E | AlgebraKind::UT11E => 2,
            AlgebraKind::UT3E010 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::M11E => "m11e",
            AlgebraKind::UT11E => "ut11e",
            AlgebraKind::UT3E010 => "ut3e010",
        }
    }

    /// Grading degree of the matrix unit at `(i, j)` (0-based).
    pub fn position_parity(self, i: usize, j: usize) -> Parity {
        match self {
            AlgebraKind::M11E | AlgebraKind::UT11E => {
                if i == j {
                    Parity::Even
                } else {
                    Parity::Odd
                }
            }
            AlgebraKind::UT3E010 => {
                if i == j || (i, j) == (0, 2) {
                    Parity::Even
                } else {
                    Parity::Odd
                }
            }
        }
    }

    /// Whether position `(i, j)` may be nonzero.
    pub fn in_shape(self, i: usize, j: usize) -> bool {
        match self {
            AlgebraKind::M11E => true,
            AlgebraKind::UT11E | AlgebraKind::UT3E010 => i <= j,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "m11e" => Ok(AlgebraKind::M11E),
            "ut11e" => Ok(AlgebraKind::UT11E),
            "ut3e010" => Ok(AlgebraKind::UT3E010),
            other => Err(Error::Contract(format!("unknown algebra '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Symmetry {
    Symmetric,
    Skew,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ComponentLabel {
    pub parity: Parity,
    pub symmetry: Symmetry,
}

impl ComponentLabel {
    pub const ALL: [ComponentLabel; 4] = [
        ComponentLabel::new(Parity::Even, Symmetry::Symmetric),
        ComponentLabel::new(Parity::Even, Symmetry::Skew),
        ComponentLabel::new(Parity::Odd, Symmetry::Symmetric),
        ComponentLabel::new(Parity::Odd, Symmetry::Skew),
    ];

    pub const fn new(parity: Parity, symmetry: Symmetry) -> Self {
        ComponentLabel { parity, symmetry }
    }
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.symmetry {
            Symmetry::Symmetric => '+',
            Symmetry::Skew => '-',
        };
        write!(f, "({},{})", self.parity, s)
    }
}

/// A square matrix over `K`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    size: usize,
    entries: Vec<Rational>,
}

impl Pattern {
    pub fn zero(size: usize) -> Self {
        Pattern {
            size,
            entries: vec![Rational::zero(); size * size],
        }
    }

    pub fn from_ints(size: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), size * size, "pattern entry count");
        Pattern {
            size,
            entries: entries.iter().map(|&x| rat(x)).collect(),
        }
    }

    /// Single matrix unit `e_{i,j}` (1-based, as in the usual notation).
    pub fn unit(size: usize, i: usize, j: usize) -> Self {
        let mut p = Pattern::zero(size);
        p.entries[(i - 1) * size + (j - 1)] = Rational::one();
        p
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.size + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Pattern) -> Pattern {
        Pattern {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Pattern {
        Pattern {
            size: self.size,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Parity of a pattern homogeneous for the kind's grading (`None` if mixed or zero).
    pub fn parity(&self, kind: AlgebraKind) -> Option<Parity> {
        let mut parity = None;
        for i in 0..self.size {
            for j in 0..self.size {
                if self.get(i, j).is_zero() {
                    continue;
                }
                let p = kind.position_parity(i, j);
                match parity {
                    None => parity = Some(p),
                    Some(q) if q != p => return None,
                    _ => {}
                }
            }
        }
        parity
    }
}

/// The superinvolution of the underlying K-superalgebra, applied to a scalar pattern.
pub fn pattern_superinvolution(kind: AlgebraKind, p: &Pattern) -> Pattern {
    let n = p.size;
    let mut out = Pattern::zero(n);
    for (i, j, c) in star_moves(kind) {
        out.entries[i * n + j] = p.get_by_move(*c);
    }
    out
}

impl Pattern {
    fn get_by_move(&self, mv: Move) -> Rational {
        let v = self.get(mv.from.0, mv.from.1).clone();
        if mv.negate {
            -v
        } else {
            v
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Move {
    from: (usize, usize),
    negate: bool,
}

const fn mv(i: usize, j: usize, negate: bool) -> Move {
    Move {
        from: (i, j),
        negate,
    }
}

/// For each target position, the source position and sign of the involution formula.
fn star_moves(kind: AlgebraKind) -> &'static [(usize, usize, Move)] {
    // M11E: (a b; c d)* = (d b; -c a)
    const M11: [(usize, usize, Move); 4] = [
        (0, 0, mv(1, 1, false)),
        (0, 1, mv(0, 1, false)),
        (1, 0, mv(1, 0, true)),
        (1, 1, mv(0, 0, false)),
    ];
    // UT11E: (a c; 0 b)* = (b c; 0 a)
    const UT11: [(usize, usize, Move); 3] = [
        (0, 0, mv(1, 1, false)),
        (0, 1, mv(0, 1, false)),
        (1, 1, mv(0, 0, false)),
    ];
    // UT3E010: (a f d; 0 b g; 0 0 c)* = (c g -d; 0 b f; 0 0 a)
    const UT3: [(usize, usize, Move); 6] = [
        (0, 0, mv(2, 2, false)),
        (0, 1, mv(1, 2, false)),
        (0, 2, mv(0, 2, true)),
        (1, 1, mv(1, 1, false)),
        (1, 2, mv(0, 1, false)),
        (2, 2, mv(0, 0, false)),
    ];
    match kind {
        AlgebraKind::M11E => &M11,
        AlgebraKind::UT11E => &UT11,
        AlgebraKind::UT3E010 => &UT3,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    kind: AlgebraKind,
    rank: usize,
    /// Row-major `size x size`.
    entries: Vec<GrassmannElement>,
}

impl AlgebraElement {
    pub fn zero(kind: AlgebraKind, rank: usize) -> Self {
        let n = kind.matrix_size();
        AlgebraElement {
            kind,
            rank,
            entries: vec![GrassmannElement::zero(rank); n * n],
        }
    }

    pub fn identity(kind: AlgebraKind, rank: usize) -> Self {
        let mut x = Self::zero(kind, rank);
        let n = kind.matrix_size();
        for i in 0..n {
            x.entries[i * n + i] = GrassmannElement::one(rank);
        }
        x
    }

    /// Builds an element from a row-major entry list, checking membership.
    pub fn from_entries(kind: AlgebraKind, rank: usize, entries: Vec<GrassmannElement>) -> Result<Self> {
        let n = kind.matrix_size();
        if entries.len() != n * n {
            return Err(Error::Structural(format!(
                "{kind} expects {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        let x = AlgebraElement { kind, rank, entries };
        x.validate()?;
        Ok(x)
    }

    /// `pattern ⊗ 1`, for even patterns only.
    pub fn from_pattern(kind: AlgebraKind, rank: usize, pattern: &Pattern) -> Result<Self> {
        embed_super_tensor(kind, pattern, &GrassmannElement::one(rank))
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> &GrassmannElement {
        &self.entries[i * self.kind.matrix_size() + j]
    }

    pub fn entries(&self) -> &[GrassmannElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GrassmannElement::is_zero)
    }

    /// Checks shape, super tensor parity condition and common rank.
    pub fn validate(&self) -> Result<()> {
        let n = self.kind.matrix_size();
        for i in 0..n {
            for j in 0..n {
                let x = self.entry(i, j);
                if x.rank() != self.rank {
                    return Err(Error::Structural(format!(
                        "entry ({},{}) has rank {} in a rank-{} element",
                        i + 1,
                        j + 1,
                        x.rank(),
                        self.rank
                    )));
                }
                if x.is_zero() {
                    continue;
                }
                if !self.kind.in_shape(i, j) {
                    return Err(Error::Structural(format!(
                        "{} has no entry at ({},{})",
                        self.kind,
                        i + 1,
                        j + 1
                    )));
                }
                let p = self.kind.position_parity(i, j);
                if !x.lies_in(p) {
                    return Err(Error::Structural(format!(
                        "entry ({},{}) must lie in E_{}",
                        i + 1,
                        j + 1,
                        p
                    )));
                }
            }
        }
        Ok(())
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::Structural(format!(
                "algebra mismatch: {} vs {}",
                self.kind, other.kind
            )));
        }
        if self.rank != other.rank {
            return Err(Error::Structural(format!(
                "rank mismatch: {} vs {}",
                self.rank, other.rank
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.kind.matrix_size();
        let mut out = Self::zero(self.kind, self.rank);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[i * n + j].add_assign_unchecked(&a.mul_unchecked(b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        AlgebraElement {
            kind: self.kind,
            rank: self.rank,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add_unchecked(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn neg(&self) -> Self {
        self.map(GrassmannElement::neg)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scale(c))
    }

    fn map(&self, f: impl Fn(&GrassmannElement) -> GrassmannElement) -> Self {
        AlgebraElement {
            kind: self.kind,
            rank: self.rank,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// The algebra's graded involution.
    pub fn star(&self) -> Result<Self> {
        self.validate()?;
        Ok(self.star_unchecked())
    }

    pub(crate) fn star_unchecked(&self) -> Self {
        let n = self.kind.matrix_size();
        let mut out = Self::zero(self.kind, self.rank);
        for (i, j, m) in star_moves(self.kind) {
            let v = self.entry(m.from.0, m.from.1);
            out.entries[i * n + j] = if m.negate { v.neg() } else { v.clone() };
        }
        out
    }

    /// Homogeneous component of the grading (zeroes the positions of the other degree).
    pub fn graded_part(&self, p: Parity) -> Self {
        let n = self.kind.matrix_size();
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                if self.kind.position_parity(i, j) != p {
                    out.entries[i * n + j] = GrassmannElement::zero(self.rank);
                }
            }
        }
        out
    }

    /// Projection onto the `(parity, symmetry)` component: `(y ± y*)/2` of the graded part.
    pub fn component_project(&self, label: ComponentLabel) -> Result<Self> {
        self.validate()?;
        let y = self.graded_part(label.parity);
        let ys = y.star_unchecked();
        let sum = match label.symmetry {
            Symmetry::Symmetric => y.add_unchecked(&ys),
            Symmetry::Skew => y.add_unchecked(&ys.neg()),
        };
        Ok(sum.scale(&frac(1, 2)))
    }

    pub fn in_component(&self, label: ComponentLabel) -> Result<bool> {
        Ok(&self.component_project(label)? == self)
    }

    /// Re-embeds into a Grassmann algebra of larger rank.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|x| x.with_rank(rank))
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgebraElement {
            kind: self.kind,
            rank,
            entries,
        })
    }

    /// Nonzero coordinates as `(cell, mask, coefficient)`, cells row-major.
    pub fn coordinates(&self) -> impl Iterator<Item = (usize, u64, &Rational)> {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(cell, x)| x.terms().iter().map(move |(m, c)| (cell, *m, c)))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.kind.matrix_size();
        write!(f, "[")?;
        for i in 0..n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// `pattern ⊗ g` in the super tensor product; the pattern's parity must match `g`'s.
pub fn embed_super_tensor(kind: AlgebraKind, pattern: &Pattern, g: &GrassmannElement) -> Result<AlgebraElement> {
    let n = kind.matrix_size();
    if pattern.size() != n {
        return Err(Error::Structural(format!(
            "{kind} needs a {n}x{n} pattern, got {0}x{0}",
            pattern.size()
        )));
    }
    for i in 0..n {
        for j in 0..n {
            if !pattern.get(i, j).is_zero() && !kind.in_shape(i, j) {
                return Err(Error::Structural(format!(
                    "pattern entry ({},{}) outside the shape of {kind}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let rank = g.rank();
    if pattern.is_zero() || g.is_zero() {
        return Ok(AlgebraElement::zero(kind, rank));
    }
    let pp = pattern
        .parity(kind)
        .ok_or_else(|| Error::Structural("pattern is not homogeneous".into()))?;
    let gp = g
        .homogeneous_parity()
        .ok_or_else(|| Error::Structural("grassmann factor is not homogeneous".into()))?;
    if pp != gp {
        return Err(Error::Structural(format!(
            "parity mismatch: pattern has degree {pp}, grassmann factor has degree {gp}"
        )));
    }
    let entries = (0..n * n)
        .map(|k| g.scale(&pattern.entries[k]))
        .collect();
    Ok(AlgebraElement { kind, rank, entries })
}

/// Matrix patterns spanning a component over `E_0` / `E_1`, in the fixed report order.
pub fn component_patterns(kind: AlgebraKind, label: ComponentLabel) -> Vec<Pattern> {
    use Parity::*;
    use Symmetry::*;
    let n = kind.matrix_size();
    let p = |v: &[i64]| Pattern::from_ints(n, v);
    match (kind, label.parity, label.symmetry) {
        (AlgebraKind::M11E, Even, Symmetric) | (AlgebraKind::UT11E, Even, Symmetric) => {
            vec![p(&[1, 0, 0, 1])]
        }
        (AlgebraKind::M11E, Even, Skew) | (AlgebraKind::UT11E, Even, Skew) => vec![p(&[1, 0, 0, -1])],
        (AlgebraKind::M11E, Odd, Symmetric) | (AlgebraKind::UT11E, Odd, Symmetric) => {
            vec![p(&[0, 1, 0, 0])]
        }
        (AlgebraKind::M11E, Odd, Skew) => vec![p(&[0, 0, 1, 0])],
        (AlgebraKind::UT11E, Odd, Skew) => vec![],
        (AlgebraKind::UT3E010, Even, Symmetric) => vec![
            p(&[1, 0, 0, 0, 0, 0, 0, 0, 1]),
            p(&[0, 0, 0, 0, 1, 0, 0, 0, 0]),
        ],
        (AlgebraKind::UT3E010, Even, Skew) => vec![
            p(&[1, 0, 0, 0, 0, 0, 0, 0, -1]),
            p(&[0, 0, 1, 0, 0, 0, 0, 0, 0]),
        ],
        (AlgebraKind::UT3E010, Odd, Symmetric) => vec![p(&[0, 1, 0, 0, 0, 1, 0, 0, 0])],
        (AlgebraKind::UT3E010, Odd, Skew) => vec![p(&[0, 1, 0, 0, 0, -1, 0, 0, 0])],
    }
}

/// Hands out unused generator indices `1..=rank`.
#[derive(Debug, Clone)]
pub struct GeneratorAllocator {
    next: usize,
    rank: usize,
}

impl GeneratorAllocator {
    pub fn new(rank: usize) -> Self {
        GeneratorAllocator { next: 1, rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn used(&self) -> usize {
        self.next - 1
    }

    pub fn fresh(&mut self) -> Result<usize> {
        if self.next > self.rank {
            return Err(Error::Capacity {
                what: "fresh grassmann generators",
                cap: self.rank,
                requested: self.next,
            });
        }
        let i = self.next;
        self.next += 1;
        Ok(i)
    }
}

/// Generic points of a component: every pattern tensored with every content option.
///
/// Even components use the contents `1` and `e_a e_b`; odd components use `e_a`. The
/// generators `a`, `b` are drawn once per call and shared by the returned options, which
/// are alternatives for a single variable.
pub fn generic_basis(
    kind: AlgebraKind,
    label: ComponentLabel,
    alloc: &mut GeneratorAllocator,
) -> Result<Vec<AlgebraElement>> {
    let rank = alloc.rank();
    let contents = match label.parity {
        Parity::Even => {
            let a = alloc.fresh()?;
            let b = alloc.fresh()?;
            vec![GrassmannElement::one(rank), GrassmannElement::monomial(rank, &[a, b])?]
        }
        Parity::Odd => {
            let a = alloc.fresh()?;
            vec![GrassmannElement::generator(rank, a)?]
        }
    };
    let mut out = Vec::new();
    for pattern in component_patterns(kind, label) {
        for g in &contents {
            out.push(embed_super_tensor(kind, &pattern, g)?);
        }
    }
    Ok(out)
}
