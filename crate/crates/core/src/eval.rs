//! Substituting algebra elements for free variables and deciding multilinear identities.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::algebra::{component_patterns, generic_basis, embed_super_tensor, AlgebraElement, AlgebraKind, ComponentLabel, GeneratorAllocator, Symmetry};
use crate::error::{Error, Result};
use crate::free::{FreePolynomial, MultiDegree, VarKind, Variable, Word};
use crate::grassmann::{GrassmannElement, MAX_RANK};
use crate::scalar::{Parity, Rational};

/// Upper bound on the number of points a scheme may enumerate.
pub const MAX_SCHEME_POINTS: usize = 1 << 22;
/// Upper bound on the rank accepted by the exhaustive oracle.
pub const MAX_EXHAUSTIVE_RANK: usize = 8;

/// The component a variable ranges over.
pub fn component_of(v: &Variable) -> ComponentLabel {
    let symmetry = match v.kind {
        VarKind::Y => Symmetry::Symmetric,
        VarKind::Z => Symmetry::Skew,
    };
    ComponentLabel::new(v.parity, symmetry)
}

/// A substitution of algebra elements for variables, all of one kind and rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    kind: AlgebraKind,
    rank: usize,
    values: BTreeMap<Variable, AlgebraElement>,
}

impl Assignment {
    pub fn new(kind: AlgebraKind, rank: usize) -> Self {
        Assignment {
            kind,
            rank,
            values: BTreeMap::new(),
        }
    }

    /// Binds `v`, checking that the value lies in the component of `v`.
    pub fn bind(&mut self, v: Variable, value: AlgebraElement) -> Result<()> {
        if value.kind() != self.kind || value.rank() != self.rank {
            return Err(Error::Structural(format!(
                "value for {v} is a {} element of rank {}, expected {} of rank {}",
                value.kind(),
                value.rank(),
                self.kind,
                self.rank
            )));
        }
        if !value.in_component(component_of(&v))? {
            return Err(Error::Structural(format!(
                "value for {v} does not lie in component {}",
                component_of(&v)
            )));
        }
        self.values.insert(v, value);
        Ok(())
    }

    pub fn with(mut self, v: Variable, value: AlgebraElement) -> Result<Self> {
        self.bind(v, value)?;
        Ok(self)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, v: &Variable) -> Option<&AlgebraElement> {
        self.values.get(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &AlgebraElement)> {
        self.values.iter()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, x)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v} = {x}")?;
        }
        Ok(())
    }
}

pub fn evaluate_word(w: &Word, a: &Assignment) -> Result<AlgebraElement> {
    let mut acc = AlgebraElement::identity(a.kind, a.rank);
    for v in &w.0 {
        let x = a.values.get(v).ok_or_else(|| Error::Binding(v.to_string()))?;
        acc = acc.mul_unchecked(x);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Value of `p` under `a`, word by word.
pub fn evaluate(p: &FreePolynomial, a: &Assignment) -> Result<AlgebraElement> {
    for v in p.variables() {
        if !a.values.contains_key(&v) {
            return Err(Error::Binding(v.to_string()));
        }
    }
    let mut acc = AlgebraElement::zero(a.kind, a.rank);
    for (w, c) in p.terms() {
        let x = evaluate_word(w, a)?;
        if !x.is_zero() {
            acc = acc.add_unchecked(&x.scale(c));
        }
    }
    Ok(acc)
}

/// A finite list of substitutions for a fixed sorted variable list. Each variable has a
/// list of candidate values; a point picks one candidate per variable.
#[derive(Debug, Clone)]
pub struct EvaluationScheme {
    kind: AlgebraKind,
    rank: usize,
    variables: Vec<Variable>,
    pub(crate) options: Vec<Vec<AlgebraElement>>,
    pub(crate) points: Vec<Vec<u8>>,
}

fn cartesian(sizes: &[usize], keep: impl Fn(&[u8]) -> bool) -> Result<Vec<Vec<u8>>> {
    if sizes.iter().any(|&s| s == 0) {
        return Ok(Vec::new());
    }
    let total = sizes.iter().try_fold(1usize, |acc, &s| acc.checked_mul(s));
    match total {
        Some(t) if t <= MAX_SCHEME_POINTS => {}
        _ => {
            return Err(Error::Capacity {
                what: "evaluation scheme points",
                cap: MAX_SCHEME_POINTS,
                requested: total.unwrap_or(usize::MAX),
            })
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0u8; sizes.len()];
    loop {
        if keep(&cur) {
            out.push(cur.clone());
        }
        // odometer, last variable fastest
        let mut k = sizes.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            cur[k] += 1;
            if (cur[k] as usize) < sizes[k] {
                break;
            }
            cur[k] = 0;
        }
    }
}

fn sorted_distinct(vars: &[Variable]) -> Result<Vec<Variable>> {
    let mut v = vars.to_vec();
    v.sort();
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Contract("scheme variables must be distinct".into()));
    }
    Ok(v)
}

/// Number of fresh generators the generic scheme needs for `vars`, before slack.
pub fn generic_rank(vars: &[Variable]) -> usize {
    vars.iter()
        .map(|v| match v.parity {
            Parity::Even => 2,
            Parity::Odd => 1,
        })
        .sum()
}

impl EvaluationScheme {
    /// Fresh-generator generic points: every variable gets its own generators, and all
    /// combinations of pattern and content option are enumerated.
    pub fn generic(kind: AlgebraKind, vars: &[Variable], slack: usize) -> Result<Self> {
        let variables = sorted_distinct(vars)?;
        let rank = generic_rank(&variables) + slack;
        if rank > MAX_RANK {
            return Err(Error::Capacity {
                what: "grassmann rank",
                cap: MAX_RANK,
                requested: rank,
            });
        }
        let mut alloc = GeneratorAllocator::new(rank);
        let options = variables
            .iter()
            .map(|v| generic_basis(kind, component_of(v), &mut alloc))
            .collect::<Result<Vec<_>>>()?;
        let sizes: Vec<usize> = options.iter().map(Vec::len).collect();
        let points = cartesian(&sizes, |_| true)?;
        Ok(EvaluationScheme {
            kind,
            rank,
            variables,
            options,
            points,
        })
    }

    /// Every tuple of basis elements `pattern ⊗ e_S` of the rank-`rank` algebra whose
    /// Grassmann supports are pairwise disjoint (all other tuples evaluate every
    /// multilinear word to zero).
    pub fn exhaustive(kind: AlgebraKind, vars: &[Variable], rank: usize) -> Result<Self> {
        if rank > MAX_EXHAUSTIVE_RANK {
            return Err(Error::Capacity {
                what: "exhaustive oracle rank",
                cap: MAX_EXHAUSTIVE_RANK,
                requested: rank,
            });
        }
        let variables = sorted_distinct(vars)?;
        let mut options = Vec::with_capacity(variables.len());
        let mut supports = Vec::with_capacity(variables.len());
        for v in &variables {
            let label = component_of(v);
            let mut opts = Vec::new();
            let mut sups = Vec::new();
            for pattern in component_patterns(kind, label) {
                for mask in 0u64..(1u64 << rank) {
                    if Parity::of_len(mask.count_ones() as usize) != label.parity {
                        continue;
                    }
                    let g = GrassmannElement::from_terms(rank, [(mask, Rational::from_integer(1.into()))])?;
                    opts.push(embed_super_tensor(kind, &pattern, &g)?);
                    sups.push(mask);
                }
            }
            options.push(opts);
            supports.push(sups);
        }
        let sizes: Vec<usize> = options.iter().map(Vec::len).collect();
        let points = cartesian(&sizes, |pt| {
            let mut used = 0u64;
            for (k, &o) in pt.iter().enumerate() {
                let s = supports[k][o as usize];
                if used & s != 0 {
                    return false;
                }
                used |= s;
            }
            true
        })?;
        Ok(EvaluationScheme {
            kind,
            rank,
            variables,
            options,
            points,
        })
    }

    /// Explicit points given as full assignments over the same variables.
    pub fn from_assignments(kind: AlgebraKind, rank: usize, vars: &[Variable], assignments: &[Assignment]) -> Result<Self> {
        let variables = sorted_distinct(vars)?;
        let mut options: Vec<Vec<AlgebraElement>> = vec![Vec::new(); variables.len()];
        let mut points = Vec::with_capacity(assignments.len());
        for a in assignments {
            if a.kind != kind || a.rank != rank {
                return Err(Error::Structural("assignment kind or rank differs from scheme".into()));
            }
            let mut pt = Vec::with_capacity(variables.len());
            for (k, v) in variables.iter().enumerate() {
                let x = a.get(v).ok_or_else(|| Error::Binding(v.to_string()))?;
                let idx = match options[k].iter().position(|o| o == x) {
                    Some(i) => i,
                    None => {
                        options[k].push(x.clone());
                        options[k].len() - 1
                    }
                };
                pt.push(u8::try_from(idx).map_err(|_| Error::Capacity {
                    what: "distinct values per variable",
                    cap: 256,
                    requested: idx + 1,
                })?);
            }
            points.push(pt);
        }
        Ok(EvaluationScheme {
            kind,
            rank,
            variables,
            options,
            points,
        })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Value of the `k`-th variable at point `i`.
    pub fn value(&self, i: usize, k: usize) -> &AlgebraElement {
        &self.options[k][self.points[i][k] as usize]
    }

    pub fn assignment(&self, i: usize) -> Assignment {
        let values = self
            .variables
            .iter()
            .enumerate()
            .map(|(k, v)| (*v, self.value(i, k).clone()))
            .collect();
        Assignment {
            kind: self.kind,
            rank: self.rank,
            values,
        }
    }

    pub fn assignments(&self) -> Vec<Assignment> {
        (0..self.len()).map(|i| self.assignment(i)).collect()
    }

    fn position(&self, v: &Variable) -> Result<usize> {
        self.variables
            .binary_search(v)
            .map_err(|_| Error::Binding(v.to_string()))
    }

    /// Evaluates `p` at point `i`. Every variable of `p` must belong to the scheme.
    pub fn evaluate_at(&self, p: &FreePolynomial, i: usize) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::zero(self.kind, self.rank);
        for (w, c) in p.terms() {
            let mut x = AlgebraElement::identity(self.kind, self.rank);
            for v in &w.0 {
                x = x.mul_unchecked(self.value(i, self.position(v)?));
                if x.is_zero() {
                    break;
                }
            }
            if !x.is_zero() {
                acc = acc.add_unchecked(&x.scale(c));
            }
        }
        Ok(acc)
    }

    /// First point (in scheme order) where `p` does not vanish, with its value.
    pub fn find_nonvanishing(&self, p: &FreePolynomial) -> Result<Option<(usize, AlgebraElement)>> {
        for v in p.variables() {
            self.position(&v)?;
        }
        Ok((0..self.len()).into_par_iter().find_map_first(|i| {
            let x = self.evaluate_at(p, i).expect("variables checked above");
            (!x.is_zero()).then_some((i, x))
        }))
    }

    /// Values of every word in the variables of the scheme, indexed by the lexicographic
    /// rank of the word, at point `i`. `f` only sees nonzero values.
    pub fn for_each_word_value(&self, i: usize, mut f: impl FnMut(usize, &AlgebraElement)) {
        let n = self.variables.len();
        let mut factorial = vec![1usize; n + 1];
        for k in 1..=n {
            factorial[k] = factorial[k - 1] * k;
        }
        let id = AlgebraElement::identity(self.kind, self.rank);
        let mut used = vec![false; n];
        self.word_dfs(i, &id, &mut used, 0, 0, &factorial, &mut f);
    }

    #[allow(clippy::too_many_arguments)]
    fn word_dfs(
        &self,
        i: usize,
        prefix: &AlgebraElement,
        used: &mut [bool],
        depth: usize,
        base: usize,
        factorial: &[usize],
        f: &mut impl FnMut(usize, &AlgebraElement),
    ) {
        let n = used.len();
        if depth == n {
            f(base, prefix);
            return;
        }
        let block = factorial[n - depth - 1];
        let mut slot = 0;
        for k in 0..n {
            if used[k] {
                continue;
            }
            let next = prefix.mul_unchecked(self.value(i, k));
            if !next.is_zero() {
                used[k] = true;
                self.word_dfs(i, &next, used, depth + 1, base + slot * block, factorial, f);
                used[k] = false;
            }
            slot += 1;
        }
    }
}

/// Generic scheme for the designated variables of `d`.
pub fn scheme_points(kind: AlgebraKind, d: MultiDegree) -> Result<EvaluationScheme> {
    scheme_points_with_slack(kind, d, 0)
}

pub fn scheme_points_with_slack(kind: AlgebraKind, d: MultiDegree, slack: usize) -> Result<EvaluationScheme> {
    check_degree(d.total())?;
    EvaluationScheme::generic(kind, &d.variables(), slack)
}

fn check_degree(n: usize) -> Result<()> {
    if n > crate::free::MULTILINEAR_DEGREE_CAP {
        return Err(Error::Capacity {
            what: "identity check total degree",
            cap: crate::free::MULTILINEAR_DEGREE_CAP,
            requested: n,
        });
    }
    Ok(())
}

fn multilinear_vars(p: &FreePolynomial) -> Result<Vec<Variable>> {
    let vars = p
        .multilinear_variables()
        .ok_or_else(|| Error::Contract(format!("polynomial is not multilinear: {p}")))?;
    check_degree(vars.len())?;
    Ok(vars)
}

/// A substitution under which a polynomial does not vanish.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub assignment: Assignment,
    pub value: AlgebraElement,
}

/// Searches the generic scheme of `p` for a non-vanishing point.
pub fn counterexample(p: &FreePolynomial, kind: AlgebraKind, slack: usize) -> Result<Option<Counterexample>> {
    let vars = multilinear_vars(p)?;
    let scheme = EvaluationScheme::generic(kind, &vars, slack)?;
    Ok(scheme.find_nonvanishing(p)?.map(|(i, value)| Counterexample {
        assignment: scheme.assignment(i),
        value,
    }))
}

/// Whether the multilinear polynomial `p` vanishes on every generic point.
pub fn is_identity(p: &FreePolynomial, kind: AlgebraKind) -> Result<bool> {
    is_identity_with_slack(p, kind, 0)
}

pub fn is_identity_with_slack(p: &FreePolynomial, kind: AlgebraKind, slack: usize) -> Result<bool> {
    Ok(counterexample(p, kind, slack)?.is_none())
}

/// Ground truth at a fixed rank: vanishing on all tuples of basis elements.
pub fn is_identity_exhaustive(p: &FreePolynomial, kind: AlgebraKind, rank: usize) -> Result<bool> {
    let vars = multilinear_vars(p)?;
    let scheme = EvaluationScheme::exhaustive(kind, &vars, rank)?;
    Ok(scheme.find_nonvanishing(p)?.is_none())
}

/// Full linearization of a multihomogeneous polynomial: a variable of degree `d` is replaced
/// by `d` fresh copies summed over all placements. Over characteristic zero `p` is an
/// identity iff its linearization is.
pub fn linearize(p: &FreePolynomial) -> Result<FreePolynomial> {
    let mut degrees: Option<BTreeMap<Variable, usize>> = None;
    for (w, _) in p.terms() {
        let mut counts = BTreeMap::new();
        for v in &w.0 {
            *counts.entry(*v).or_insert(0usize) += 1;
        }
        match &degrees {
            None => degrees = Some(counts),
            Some(d) if *d != counts => {
                return Err(Error::Contract(format!("polynomial is not multihomogeneous: {p}")))
            }
            _ => {}
        }
    }
    let Some(degrees) = degrees else {
        return Ok(FreePolynomial::zero());
    };
    // Copies of a repeated variable get indices above every index in use for its species.
    let mut top: HashMap<usize, u32> = HashMap::new();
    for v in degrees.keys() {
        let t = top.entry(v.species()).or_insert(0);
        *t = (*t).max(v.index);
    }
    let mut copies: BTreeMap<Variable, Vec<Variable>> = BTreeMap::new();
    for (v, &d) in &degrees {
        let mut list = vec![*v];
        for _ in 1..d {
            let t = top.get_mut(&v.species()).unwrap();
            *t += 1;
            list.push(Variable::new(v.kind, v.parity, *t));
        }
        copies.insert(*v, list);
    }
    let mut out = FreePolynomial::zero();
    for (w, c) in p.terms() {
        // Positions of each variable in the word, then distribute copies over them.
        let mut positions: BTreeMap<Variable, Vec<usize>> = BTreeMap::new();
        for (pos, v) in w.0.iter().enumerate() {
            positions.entry(*v).or_default().push(pos);
        }
        let mut words = vec![w.0.clone()];
        for (v, pos) in &positions {
            let list = &copies[v];
            let mut next = Vec::new();
            for base in &words {
                crate::free::for_each_permutation(list.len(), |perm| {
                    let mut nw = base.clone();
                    for (slot, &pi) in pos.iter().zip(perm) {
                        nw[*slot] = list[pi];
                    }
                    next.push(nw);
                });
            }
            words = next;
        }
        for nw in words {
            out.add_term(Word(nw), c.clone());
        }
    }
    Ok(out)
}

/// `p ≡ q` modulo the identities of `kind`. Multihomogeneous differences are linearized.
pub fn congruent(p: &FreePolynomial, q: &FreePolynomial, kind: AlgebraKind) -> Result<bool> {
    let diff = p - q;
    if diff.is_zero() {
        return Ok(true);
    }
    if diff.is_multilinear() {
        return is_identity(&diff, kind);
    }
    is_identity(&linearize(&diff)?, kind)
}

/// Whether `p` (multilinear or multihomogeneous) is a graded *-identity of `kind`.
pub fn is_identity_homogeneous(p: &FreePolynomial, kind: AlgebraKind) -> Result<bool> {
    if p.is_multilinear() {
        is_identity(p, kind)
    } else {
        is_identity(&linearize(p)?, kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Pattern;
    use crate::free::{circle, commutator, commutator_vars, y, z};
    use crate::scalar::rat;

    fn var(v: Variable) -> FreePolynomial {
        FreePolynomial::var(v)
    }

    #[test]
    fn circle_relation_in_ut11e() {
        let rank = 2;
        let a = GrassmannElement::monomial(rank, &[]).unwrap();
        let c = GrassmannElement::generator(rank, 1).unwrap();
        let zv = embed_super_tensor(AlgebraKind::UT11E, &Pattern::from_ints(2, &[1, 0, 0, -1]), &a).unwrap();
        let yv = embed_super_tensor(AlgebraKind::UT11E, &Pattern::from_ints(2, &[0, 1, 0, 0]), &c).unwrap();
        let asg = Assignment::new(AlgebraKind::UT11E, rank)
            .with(z(1, 0), zv)
            .unwrap()
            .with(y(1, 1), yv)
            .unwrap();
        let p = circle(&var(z(1, 0)), &var(y(1, 1)));
        assert!(evaluate(&p, &asg).unwrap().is_zero());
    }

    #[test]
    fn long_commutator_witness_in_b() {
        // [z_l, z_1, ..] with z_l on e13 and the rest on diag(1,0,-1).
        let kind = AlgebraKind::UT3E010;
        let rank = 1;
        let one = GrassmannElement::one(rank);
        let e13 = embed_super_tensor(kind, &Pattern::unit(3, 1, 3), &one).unwrap();
        let d = embed_super_tensor(kind, &Pattern::from_ints(3, &[1, 0, 0, 0, 0, 0, 0, 0, -1]), &one).unwrap();
        let mut asg = Assignment::new(kind, rank);
        asg.bind(z(1, 0), e13.clone()).unwrap();
        asg.bind(z(2, 0), d.clone()).unwrap();
        asg.bind(z(3, 0), d).unwrap();
        let p = commutator_vars(&[z(1, 0), z(2, 0), z(3, 0)]).unwrap();
        assert_eq!(evaluate(&p, &asg).unwrap(), e13.scale(&rat(4)));
    }

    #[test]
    fn empty_word_is_identity_matrix() {
        let asg = Assignment::new(AlgebraKind::M11E, 3);
        assert_eq!(
            evaluate(&FreePolynomial::one(), &asg).unwrap(),
            AlgebraElement::identity(AlgebraKind::M11E, 3)
        );
    }

    #[test]
    fn binding_and_component_errors() {
        let asg = Assignment::new(AlgebraKind::M11E, 2);
        assert!(matches!(evaluate(&var(y(1, 0)), &asg), Err(Error::Binding(_))));
        let skew = AlgebraElement::from_pattern(AlgebraKind::M11E, 2, &Pattern::from_ints(2, &[1, 0, 0, -1])).unwrap();
        let mut asg = Assignment::new(AlgebraKind::M11E, 2);
        assert!(matches!(asg.bind(y(1, 0), skew), Err(Error::Structural(_))));
    }

    #[test]
    fn scheme_sizes() {
        assert_eq!(scheme_points(AlgebraKind::M11E, MultiDegree::new(0, 1, 0, 1)).unwrap().len(), 1);
        assert_eq!(scheme_points(AlgebraKind::UT11E, MultiDegree::new(0, 0, 0, 1)).unwrap().len(), 0);
        assert_eq!(scheme_points(AlgebraKind::UT3E010, MultiDegree::new(0, 0, 1, 0)).unwrap().len(), 4);
        let s = scheme_points(AlgebraKind::UT3E010, MultiDegree::new(1, 1, 1, 0)).unwrap();
        assert_eq!(s.rank(), 5);
    }

    #[test]
    fn identity_examples() {
        let comm = commutator_vars(&[y(1, 0), y(2, 0)]).unwrap();
        assert!(is_identity(&comm, AlgebraKind::UT3E010).unwrap());
        let w = FreePolynomial::monomial(&[y(1, 1), z(1, 1)]);
        assert!(!is_identity(&w, AlgebraKind::M11E).unwrap());
        let zz = commutator_vars(&[z(1, 0), z(2, 0)]).unwrap();
        assert!(is_identity_exhaustive(&zz, AlgebraKind::M11E, 4).unwrap());
        assert!(!is_identity_exhaustive(&var(y(1, 0)), AlgebraKind::M11E, 4).unwrap());
        let sq = FreePolynomial::monomial(&[y(1, 0), y(1, 0)]);
        assert!(matches!(is_identity(&sq, AlgebraKind::M11E), Err(Error::Contract(_))));
    }

    #[test]
    fn vacuous_component() {
        let p = FreePolynomial::monomial(&[y(1, 0), z(1, 1)]);
        assert!(is_identity(&p, AlgebraKind::UT11E).unwrap());
    }

    #[test]
    fn congruence_examples() {
        let lhs = commutator(&[var(y(1, 1)), var(z(1, 0))]).unwrap();
        let rhs = FreePolynomial::monomial(&[y(1, 1), z(1, 0)]).scale(&rat(2));
        assert!(congruent(&lhs, &rhs, AlgebraKind::M11E).unwrap());
        assert!(congruent(&lhs, &lhs, AlgebraKind::M11E).unwrap());

        // [y11, z10, z11] equals +[z11, z10, y11] modulo the identities, not its negative.
        let a = commutator_vars(&[y(1, 1), z(1, 0), z(1, 1)]).unwrap();
        let b = commutator_vars(&[z(1, 1), z(1, 0), y(1, 1)]).unwrap();
        assert!(congruent(&a, &b, AlgebraKind::M11E).unwrap());
        assert!(!congruent(&a, &-&b, AlgebraKind::M11E).unwrap());
    }

    #[test]
    fn linearization_of_square() {
        let sq = FreePolynomial::monomial(&[y(1, 0), y(1, 0)]);
        let lin = linearize(&sq).unwrap();
        let expect = &FreePolynomial::monomial(&[y(1, 0), y(2, 0)]) + &FreePolynomial::monomial(&[y(2, 0), y(1, 0)]);
        assert_eq!(lin, expect);
        // y_{1,1}^2 vanishes in every algebra here since odd contents square to zero.
        let odd_sq = FreePolynomial::monomial(&[y(1, 1), y(1, 1)]);
        assert!(is_identity_homogeneous(&odd_sq, AlgebraKind::M11E).unwrap());
        assert!(!is_identity_homogeneous(&sq, AlgebraKind::M11E).unwrap());
    }

    #[test]
    fn word_values_follow_lexicographic_order() {
        let d = MultiDegree::new(1, 0, 1, 1);
        let s = scheme_points(AlgebraKind::M11E, d).unwrap();
        let words = crate::free::multilinear_basis(d).unwrap();
        for i in 0..s.len() {
            let mut seen = vec![None; words.len()];
            s.for_each_word_value(i, |r, x| seen[r] = Some(x.clone()));
            for (r, w) in words.iter().enumerate() {
                let direct = s.evaluate_at(&FreePolynomial::from_word(w.clone()), i).unwrap();
                assert_eq!(seen[r].clone().unwrap_or_else(|| AlgebraElement::zero(s.kind(), s.rank())), direct);
            }
        }
    }
}
