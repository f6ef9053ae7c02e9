//! Highest weight vectors attached to the multipartitions with nonzero multiplicity, their
//! normal forms, and checks that they are not identities.

use serde::Serialize;

use crate::algebra::{embed_super_tensor, AlgebraElement, AlgebraKind, Pattern};
use crate::error::{Error, Result};
use crate::eval::{evaluate, is_identity_homogeneous, congruent, linearize, Assignment, EvaluationScheme};
use crate::free::{for_each_permutation, y, z, FreePolynomial, Variable};
use crate::grassmann::GrassmannElement;
use crate::partition::{Multipartition, Partition};
use crate::rank::{exact_rank, SparseMatrix};
use crate::scalar::{rat, Parity};

/// Which of two families sharing a multipartition is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HwvVariant {
    /// `ω`, `ω⁺` (symmetric variable first) or `f¹` (skew prefix before the odd variable).
    #[default]
    Primary,
    /// `ω̄`, `ω̄⁺` (skew variable first) or `f²` (skew block after the odd variable).
    Secondary,
}

/// Parameters selecting a member of a family. Unused fields are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct HwvParams {
    pub variant: HwvVariant,
    /// Exponent of `y_{1,0}` before the first odd variable, counting the alternated slots
    /// (for the two-row skew family, the gap between the two alternated skew slots).
    pub i1: usize,
    /// Exponent of `y_{1,0}` after the first odd variable, counting the alternated slots.
    pub i2: usize,
    /// Exponent of `z_{1,0}` before the first odd variable.
    pub j1: usize,
}

impl HwvParams {
    pub fn new(variant: HwvVariant, i1: usize, i2: usize, j1: usize) -> Self {
        HwvParams { variant, i1, i2, j1 }
    }
}

/// The family a multipartition falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HwvShape {
    /// `(y_{1,0})^{n1} (z_{1,0})^{n3}` with an optional trailing odd variable.
    Prefix { n1: usize, n3: usize, odd: Option<Variable> },
    /// Alternating sums over one-column tableaux in the odd variables (M11E).
    Alternating { n1: usize, n3: usize, ys: usize, zs: usize },
    /// Second row of the skew tableau: `(y_{1,0})^{n1} ẑ (z_{1,0})^k ẑ (z_{1,0})^l`.
    SkewTwoRow { n1: usize, n3: usize },
    /// Two-row `λ(1) = (p+q, p)` with one odd variable.
    OneOdd { p: usize, q: usize, n3: usize, odd: Variable },
    /// Two-row `λ(1)` with two odd variables, which may coincide.
    TwoOdd { p: usize, q: usize, n3: usize, first: Variable, second: Variable },
}

fn v(x: Variable) -> FreePolynomial {
    FreePolynomial::var(x)
}

fn power(x: Variable, k: usize) -> FreePolynomial {
    v(x).pow(k)
}

fn unsupported(kind: AlgebraKind, mp: &Multipartition) -> Error {
    Error::UnsupportedFamily(format!("{kind} {mp}"))
}

/// Classifies `mp` into one of the treated families of `kind`.
pub fn classify(kind: AlgebraKind, mp: &Multipartition) -> Result<HwvShape> {
    let [l1, l2, l3, l4] = &mp.0;
    let (n1, n2, n3, n4) = (l1.size(), l2.size(), l3.size(), l4.size());
    let one = Partition::row(1);
    match kind {
        AlgebraKind::M11E => {
            if l1.is_row() && l3.is_row() && l2.is_column_of(n2) && l4.is_column_of(n4) && n2.abs_diff(n4) <= 1 {
                if n2 == 0 && n4 == 0 {
                    return Ok(HwvShape::Prefix { n1, n3, odd: None });
                }
                return Ok(HwvShape::Alternating { n1, n3, ys: n2, zs: n4 });
            }
        }
        AlgebraKind::UT11E => {
            if l1.is_row() && l3.is_row() && n4 == 0 && n2 <= 1 {
                let odd = (n2 == 1).then_some(y(1, 1));
                return Ok(HwvShape::Prefix { n1, n3, odd });
            }
        }
        AlgebraKind::UT3E010 => {
            if n2 == 0 && n4 == 0 && l1.is_row() {
                if l3.is_row() {
                    return Ok(HwvShape::Prefix { n1, n3, odd: None });
                }
                if n3 > 1 && *l3 == Partition::new(vec![n3 - 1, 1]) {
                    return Ok(HwvShape::SkewTwoRow { n1, n3 });
                }
            } else if l1.height() <= 2 && l3.is_row() {
                let p = l1.part(1);
                let q = l1.part(0) - p;
                let two = Partition::row(2);
                match (l2, l4) {
                    (a, b) if *a == one && b.is_empty() => return Ok(HwvShape::OneOdd { p, q, n3, odd: y(1, 1) }),
                    (a, b) if a.is_empty() && *b == one => return Ok(HwvShape::OneOdd { p, q, n3, odd: z(1, 1) }),
                    (a, b) if *a == one && *b == one => {
                        return Ok(HwvShape::TwoOdd { p, q, n3, first: y(1, 1), second: z(1, 1) })
                    }
                    (a, b) if *a == two && b.is_empty() => {
                        return Ok(HwvShape::TwoOdd { p, q, n3, first: y(1, 1), second: y(1, 1) })
                    }
                    (a, b) if a.is_empty() && *b == two => {
                        return Ok(HwvShape::TwoOdd { p, q, n3, first: z(1, 1), second: z(1, 1) })
                    }
                    _ => {}
                }
            }
        }
    }
    Err(unsupported(kind, mp))
}

fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    for_each_permutation(n, |perm| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        out.push((perm.to_vec(), if inversions % 2 == 0 { 1 } else { -1 }));
    });
    out
}

/// `Σ sgn σ sgn τ` over words alternating the odd symmetric and skew variables.
fn alternating_sum(ys: usize, zs: usize) -> FreePolynomial {
    let y_first = ys >= zs;
    let len = ys + zs;
    let mut out = FreePolynomial::zero();
    for (sigma, ss) in signed_permutations(ys) {
        for (tau, st) in signed_permutations(zs) {
            let mut word = Vec::with_capacity(len);
            let (mut a, mut b) = (0, 0);
            for pos in 0..len {
                let take_y = (pos % 2 == 0) == y_first;
                if take_y {
                    word.push(y(sigma[a] as u32 + 1, 1));
                    a += 1;
                } else {
                    word.push(z(tau[b] as u32 + 1, 1));
                    b += 1;
                }
            }
            out = &out + &FreePolynomial::monomial(&word).scale(&rat(ss * st));
        }
    }
    out
}

fn ordered_product(ys: usize, zs: usize) -> FreePolynomial {
    let y_first = ys >= zs;
    let (mut a, mut b) = (0, 0);
    let word: Vec<Variable> = (0..ys + zs)
        .map(|pos| {
            if (pos % 2 == 0) == y_first {
                a += 1;
                y(a, 1)
            } else {
                b += 1;
                z(b, 1)
            }
        })
        .collect();
    FreePolynomial::monomial(&word)
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `Σ_k (-1)^k C(p,k) pre · y1^{a-k} y2^k · mid · y1^{b-p+k} y2^{p-k} · post`, the
/// `p`-fold alternation of paired `y_{1,0}`/`y_{2,0}` slots after commuting the even
/// symmetric variables together.
fn paired_alternation(
    p: usize,
    a: usize,
    b: usize,
    pre: &FreePolynomial,
    mid: &FreePolynomial,
    post: &FreePolynomial,
) -> FreePolynomial {
    let (y1, y2) = (y(1, 0), y(2, 0));
    let mut out = FreePolynomial::zero();
    for k in 0..=p {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let term = &(&(&(&(pre * &power(y1, a - k)) * &power(y2, k)) * mid) * &power(y1, b - p + k))
            * &power(y2, p - k);
        out = &out + &(&term * post).scale(&rat(sign * binomial(p, k)));
    }
    out
}

/// The literal alternation: slot `k` of the first block and slot `k` of the second block
/// are antisymmetrized between `y_{1,0}` and `y_{2,0}`; no commutation is applied.
pub fn paired_alternation_literal(
    p: usize,
    a: usize,
    b: usize,
    pre: &FreePolynomial,
    mid: &FreePolynomial,
    post: &FreePolynomial,
) -> FreePolynomial {
    let (y1, y2) = (y(1, 0), y(2, 0));
    let mut out = FreePolynomial::zero();
    for swapped in 0u32..(1 << p) {
        let first: Vec<Variable> = (0..p).map(|k| if swapped >> k & 1 == 1 { y2 } else { y1 }).collect();
        let second: Vec<Variable> = (0..p).map(|k| if swapped >> k & 1 == 1 { y1 } else { y2 }).collect();
        let sign = if swapped.count_ones() % 2 == 0 { 1 } else { -1 };
        let term = &(&(&(&(&(pre * &FreePolynomial::monomial(&first)) * &power(y1, a - p)) * mid)
            * &FreePolynomial::monomial(&second))
            * &power(y1, b - p))
            * post;
        out = &out + &term.scale(&rat(sign));
    }
    out
}

fn check_range(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::UnsupportedFamily(format!("parameter out of range: {what}")))
    }
}

/// Pieces of a two-row family: `(pre, mid, post, a, b)` for [`paired_alternation`].
fn two_row_pieces(
    shape: HwvShape,
    params: &HwvParams,
) -> Result<(usize, FreePolynomial, FreePolynomial, FreePolynomial, usize, usize)> {
    let z1 = z(1, 0);
    let y1 = y(1, 0);
    match shape {
        HwvShape::OneOdd { p, q, n3, odd } => {
            let n1 = 2 * p + q;
            check_range(params.i1 >= p && params.i1 <= p + q, "p <= i1 <= p+q")?;
            let (a, b) = (params.i1, n1 - params.i1);
            let zs = power(z1, n3);
            let (pre, mid) = match params.variant {
                HwvVariant::Primary => (zs, v(odd)),
                HwvVariant::Secondary => (FreePolynomial::one(), &v(odd) * &zs),
            };
            Ok((p, pre, mid, FreePolynomial::one(), a, b))
        }
        HwvShape::TwoOdd { p, q, n3, first, second } => {
            let n1 = 2 * p + q;
            let (i1, i2) = (params.i1, params.i2);
            check_range(i1 >= p && i2 >= p && i1 + i2 <= n1, "p <= i1, i2 and i1 + i2 <= n1")?;
            check_range(params.j1 <= n3, "j1 <= n3")?;
            let i3 = n1 - i1 - i2;
            let mid = &power(z1, params.j1) * &v(first);
            let post = &(&v(second) * &power(y1, i3)) * &power(z1, n3 - params.j1);
            Ok((p, FreePolynomial::one(), mid, post, i1, i2))
        }
        _ => unreachable!("only two-row shapes have paired slots"),
    }
}

/// The highest weight vector of the family selected by `mp` and `params`.
pub fn hwv_family(kind: AlgebraKind, mp: &Multipartition, params: &HwvParams) -> Result<FreePolynomial> {
    let shape = classify(kind, mp)?;
    let prefix = |n1: usize, n3: usize| &power(y(1, 0), n1) * &power(z(1, 0), n3);
    match shape {
        HwvShape::Prefix { n1, n3, odd } => {
            let base = prefix(n1, n3);
            Ok(match odd {
                Some(o) => &base * &v(o),
                None => base,
            })
        }
        HwvShape::Alternating { n1, n3, ys, zs } => {
            let body = if ys == zs && params.variant == HwvVariant::Secondary {
                alternating_sum_skew_first(ys)
            } else {
                alternating_sum(ys, zs)
            };
            Ok(&prefix(n1, n3) * &body)
        }
        HwvShape::SkewTwoRow { n1, n3 } => {
            let k = params.i1;
            check_range(k + 2 <= n3, "gap k <= n3 - 2")?;
            let l = n3 - 2 - k;
            let (z1, z2) = (z(1, 0), z(2, 0));
            let body = |first: Variable, second: Variable| {
                &(&(&v(first) * &power(z1, k)) * &v(second)) * &power(z1, l)
            };
            let alt = &body(z1, z2) - &body(z2, z1);
            Ok(&power(y(1, 0), n1) * &alt)
        }
        HwvShape::OneOdd { .. } | HwvShape::TwoOdd { .. } => {
            let (p, pre, mid, post, a, b) = two_row_pieces(shape, params)?;
            Ok(paired_alternation(p, a, b, &pre, &mid, &post))
        }
    }
}

fn alternating_sum_skew_first(n: usize) -> FreePolynomial {
    let mut out = FreePolynomial::zero();
    for (sigma, ss) in signed_permutations(n) {
        for (tau, st) in signed_permutations(n) {
            let mut word = Vec::with_capacity(2 * n);
            for k in 0..n {
                word.push(z(tau[k] as u32 + 1, 1));
                word.push(y(sigma[k] as u32 + 1, 1));
            }
            out = &out + &FreePolynomial::monomial(&word).scale(&rat(ss * st));
        }
    }
    out
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// The rewritten form the family is congruent to, where one is stated.
pub fn normal_form(kind: AlgebraKind, mp: &Multipartition, params: &HwvParams) -> Result<Option<FreePolynomial>> {
    let shape = classify(kind, mp)?;
    let prefix = |n1: usize, n3: usize| &power(y(1, 0), n1) * &power(z(1, 0), n3);
    Ok(match shape {
        HwvShape::Alternating { n1, n3, ys, zs } => {
            let coeff = factorial(ys) * factorial(zs);
            let body = if ys == zs && params.variant == HwvVariant::Secondary {
                let word: Vec<Variable> = (1..=ys as u32).flat_map(|i| [z(i, 1), y(i, 1)]).collect();
                FreePolynomial::monomial(&word)
            } else {
                ordered_product(ys, zs)
            };
            Some(&prefix(n1, n3) * &body.scale(&rat(coeff)))
        }
        HwvShape::SkewTwoRow { n1, n3 } => {
            let k = params.i1;
            check_range(k + 2 <= n3, "gap k <= n3 - 2")?;
            if k % 2 == 1 {
                Some(FreePolynomial::zero())
            } else {
                let comm = crate::free::commutator_vars(&[z(1, 0), z(2, 0)])?;
                Some(&(&power(y(1, 0), n1) * &comm) * &power(z(1, 0), n3 - 2))
            }
        }
        _ => None,
    })
}

/// Human-readable family name.
pub fn family_label(kind: AlgebraKind, mp: &Multipartition, params: &HwvParams) -> Result<String> {
    let shape = classify(kind, mp)?;
    let secondary = params.variant == HwvVariant::Secondary;
    Ok(match shape {
        HwvShape::Prefix { odd: Some(_), .. } => "y0^n1 z0^n3 y1".to_string(),
        HwvShape::Prefix { .. } => "y0^n1 z0^n3".to_string(),
        HwvShape::Alternating { ys, zs, .. } => match (ys.cmp(&zs), secondary) {
            (std::cmp::Ordering::Equal, false) => "omega".into(),
            (std::cmp::Ordering::Equal, true) => "omega-bar".into(),
            (std::cmp::Ordering::Greater, _) => "omega-plus".into(),
            (std::cmp::Ordering::Less, _) => "omega-bar-plus".into(),
        },
        HwvShape::SkewTwoRow { .. } => format!("omega_k (k = {})", params.i1),
        HwvShape::OneOdd { n3, .. } if n3 > 0 => {
            format!("f{}(i1 = {})", if secondary { 2 } else { 1 }, params.i1)
        }
        HwvShape::OneOdd { .. } => format!("f(i1 = {})", params.i1),
        HwvShape::TwoOdd { first, second, .. } if first == second => format!(
            "repeated-odd(i1 = {}, i2 = {}, j1 = {})",
            params.i1, params.i2, params.j1
        ),
        HwvShape::TwoOdd { .. } => format!("f(i1 = {}, i2 = {}, j1 = {})", params.i1, params.i2, params.j1),
    })
}

/// Concrete evaluation modelled on the separating witnesses: scalar diagonal data for the
/// even variables and one fresh generator per odd variable.
///
/// For the upper triangular kind, `y_{i,0} = (e11 + e33) + (i+1) e22` and
/// `z_{i,0} = (e11 - e33) + i e13`; odd variables are `e_k (e12 ± e23)`.
pub fn dense_assignment(kind: AlgebraKind, vars: &[Variable]) -> Result<Assignment> {
    let odd_count = vars.iter().filter(|x| x.parity == Parity::Odd).count();
    let rank = odd_count.max(1);
    let n = kind.matrix_size();
    let mut asg = Assignment::new(kind, rank);
    let mut next_gen = 1;
    for x in vars {
        let i = x.index as i64;
        let (pattern, content) = match (kind, x.species()) {
            (AlgebraKind::UT3E010, 0) => (Pattern::from_ints(3, &[1, 0, 0, 0, i + 1, 0, 0, 0, 1]), None),
            (AlgebraKind::UT3E010, 2) => (Pattern::from_ints(3, &[1, 0, i, 0, 0, 0, 0, 0, -1]), None),
            (AlgebraKind::UT3E010, 1) => (Pattern::from_ints(3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]), Some(())),
            (AlgebraKind::UT3E010, _) => (Pattern::from_ints(3, &[0, 1, 0, 0, 0, -1, 0, 0, 0]), Some(())),
            (_, 0) => (Pattern::from_ints(n, &[i + 1, 0, 0, i + 1]), None),
            (_, 2) => (Pattern::from_ints(n, &[i, 0, 0, -i]), None),
            (_, 1) => (Pattern::from_ints(n, &[0, 1, 0, 0]), Some(())),
            (_, _) => (Pattern::from_ints(n, &[0, 0, 1, 0]), Some(())),
        };
        let g = match content {
            None => GrassmannElement::one(rank),
            Some(()) => {
                let gen = GrassmannElement::generator(rank, next_gen)?;
                next_gen += 1;
                gen
            }
        };
        asg.bind(*x, embed_super_tensor(kind, &pattern, &g)?)?;
    }
    Ok(asg)
}

/// Outcome of checking one highest weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HwvCheck {
    pub algebra: AlgebraKind,
    pub multipartition: Multipartition,
    pub params: HwvParams,
    pub family: String,
    /// Nonzero under the concrete dense substitution.
    pub dense_nonzero: bool,
    /// Not an identity (decided on the linearization when the dense point vanishes).
    pub nonzero: bool,
    /// Whether the family member is expected to survive; false when its normal form is zero.
    pub expected_nonzero: bool,
    /// Congruent to the stated normal form, if one is stated.
    pub normal_form: Option<bool>,
}

impl HwvCheck {
    pub fn passed(&self) -> bool {
        self.nonzero == self.expected_nonzero && self.normal_form != Some(false)
    }
}

pub fn hwv_nonidentity_check(kind: AlgebraKind, mp: &Multipartition, params: &HwvParams) -> Result<HwvCheck> {
    let f = hwv_family(kind, mp, params)?;
    let asg = dense_assignment(kind, &f.variables())?;
    let dense_nonzero = !evaluate(&f, &asg)?.is_zero();
    let nonzero = dense_nonzero || !is_identity_homogeneous(&f, kind)?;
    let nf = normal_form(kind, mp, params)?;
    let expected_nonzero = nf.as_ref().map_or(true, |p| !p.is_zero());
    let normal_form = match nf {
        Some(nf) => Some(congruent(&f, &nf, kind)?),
        None => None,
    };
    Ok(HwvCheck {
        algebra: kind,
        multipartition: mp.clone(),
        params: *params,
        family: family_label(kind, mp, params)?,
        dense_nonzero,
        nonzero,
        expected_nonzero,
        normal_form,
    })
}

/// Dimension of the span of the given multihomogeneous polynomials modulo the identities of
/// `kind`, computed on their linearizations over the generic scheme.
pub fn span_rank_modulo_identities(kind: AlgebraKind, polys: &[FreePolynomial]) -> Result<usize> {
    let lin = polys.iter().map(linearize).collect::<Result<Vec<_>>>()?;
    let mut vars: Vec<Variable> = lin.iter().flat_map(|p| p.variables()).collect();
    vars.sort();
    vars.dedup();
    let scheme = EvaluationScheme::generic(kind, &vars, 0)?;
    let mut columns = std::collections::HashMap::new();
    let mut rows: Vec<Vec<(usize, crate::scalar::Rational)>> = vec![Vec::new(); lin.len()];
    for i in 0..scheme.len() {
        for (r, p) in lin.iter().enumerate() {
            let x: AlgebraElement = scheme.evaluate_at(p, i)?;
            for (cell, mask, c) in x.coordinates() {
                let next = columns.len();
                let col = *columns.entry((i, cell, mask)).or_insert(next);
                rows[r].push((col, c.clone()));
            }
        }
    }
    let mut m = SparseMatrix::new(columns.len());
    for r in rows {
        m.push_row(r);
    }
    Ok(exact_rank(&m))
}
