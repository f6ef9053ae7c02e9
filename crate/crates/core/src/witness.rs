//! Concrete evaluations on the upper triangular algebra that separate spanning
//! polynomials, and the evaluation showing the repeated-odd shape vanishes.

use crate::algebra::{embed_super_tensor, AlgebraElement, AlgebraKind, Pattern};
use crate::error::{Error, Result};
use crate::eval::{evaluate, Assignment};
use crate::free::{commutator_vars, y, z, FreePolynomial, Variable};
use crate::grassmann::GrassmannElement;
use crate::scalar::rat;

const KIND: AlgebraKind = AlgebraKind::UT3E010;

fn pattern(entries: [i64; 9]) -> Pattern {
    Pattern::from_ints(3, &entries)
}

fn outer_diag() -> Pattern {
    pattern([1, 0, 0, 0, 0, 0, 0, 0, 1])
}

fn middle() -> Pattern {
    pattern([0, 0, 0, 0, 1, 0, 0, 0, 0])
}

fn skew_diag() -> Pattern {
    pattern([1, 0, 0, 0, 0, 0, 0, 0, -1])
}

fn corner() -> Pattern {
    pattern([0, 0, 1, 0, 0, 0, 0, 0, 0])
}

fn odd_sym() -> Pattern {
    pattern([0, 1, 0, 0, 0, 1, 0, 0, 0])
}

fn scalar(rank: usize, p: &Pattern) -> Result<AlgebraElement> {
    embed_super_tensor(KIND, p, &GrassmannElement::one(rank))
}

fn odd(rank: usize, generator: usize, p: &Pattern) -> Result<AlgebraElement> {
    embed_super_tensor(KIND, p, &GrassmannElement::generator(rank, generator)?)
}

/// `[z_l, z_1, …, ẑ_l, …, z_{n3}]` (all skew even) with `z_l = e13` and every other
/// `z_i = e11 - e33`.
pub fn skew_commutator_witness(n3: usize, l: usize) -> Result<AlgebraElement> {
    if n3 < 2 || l == 0 || l > n3 {
        return Err(Error::Contract(format!("need 1 <= l <= n3 and n3 >= 2, got l = {l}, n3 = {n3}")));
    }
    let mut order = vec![z(l as u32, 0)];
    order.extend((1..=n3 as u32).filter(|&i| i != l as u32).map(|i| z(i, 0)));
    let poly = commutator_vars(&order)?;
    let mut asg = Assignment::new(KIND, 1);
    for i in 1..=n3 {
        let p = if i == l { corner() } else { skew_diag() };
        asg.bind(z(i as u32, 0), scalar(1, &p)?)?;
    }
    evaluate(&poly, &asg)
}

/// The two spanning families for one odd symmetric variable:
/// `y_I z_1…z_{n3} ŷ y_K` (`skew_after_odd = false`) and `y_I ŷ y_K z_1…z_{n3}`
/// (`skew_after_odd = true`), with `I` and `K` increasing index lists.
pub fn one_odd_monomial(before: &[u32], after: &[u32], n3: usize, skew_after_odd: bool) -> FreePolynomial {
    let zs: Vec<Variable> = (1..=n3 as u32).map(|i| z(i, 0)).collect();
    let mut word: Vec<Variable> = before.iter().map(|&i| y(i, 0)).collect();
    if !skew_after_odd {
        word.extend(&zs);
    }
    word.push(y(1, 1));
    word.extend(after.iter().map(|&i| y(i, 0)));
    if skew_after_odd {
        word.extend(&zs);
    }
    FreePolynomial::monomial(&word)
}

/// The evaluation isolating the monomials indexed by the subset `outer` of `1..=n1`:
/// `y_i = e11 + e33` for `i ∈ outer`, `y_i = e22` otherwise, `ŷ = e1 (e12 + e23)`,
/// every `z = e11 - e33`.
pub fn one_odd_assignment(n1: usize, outer: &[u32], n3: usize) -> Result<Assignment> {
    let mut asg = Assignment::new(KIND, 1);
    for i in 1..=n1 as u32 {
        let p = if outer.contains(&i) { outer_diag() } else { middle() };
        asg.bind(y(i, 0), scalar(1, &p)?)?;
    }
    for i in 1..=n3 as u32 {
        asg.bind(z(i, 0), scalar(1, &skew_diag())?)?;
    }
    asg.bind(y(1, 1), odd(1, 1, &odd_sym())?)?;
    Ok(asg)
}

/// Monomials for two odd symmetric variables:
/// `y_{I1} z_1…z_l ŷ_1 y_J ŷ_2 y_{I2} z_{l+1}…z_{n3}`.
pub fn two_odd_monomial(first: &[u32], middle_ys: &[u32], last: &[u32], l: usize, n3: usize) -> FreePolynomial {
    let mut word: Vec<Variable> = first.iter().map(|&i| y(i, 0)).collect();
    word.extend((1..=l as u32).map(|i| z(i, 0)));
    word.push(y(1, 1));
    word.extend(middle_ys.iter().map(|&i| y(i, 0)));
    word.push(y(2, 1));
    word.extend(last.iter().map(|&i| y(i, 0)));
    word.extend((l as u32 + 1..=n3 as u32).map(|i| z(i, 0)));
    FreePolynomial::monomial(&word)
}

/// `y_i = e11 + e33` outside `middle_ys`, `e22` inside, `ŷ_j = e_j (e12 + e23)`,
/// every `z = e11 - e33`.
pub fn two_odd_assignment(n1: usize, middle_ys: &[u32], n3: usize) -> Result<Assignment> {
    let mut asg = Assignment::new(KIND, 2);
    for i in 1..=n1 as u32 {
        let p = if middle_ys.contains(&i) { middle() } else { outer_diag() };
        asg.bind(y(i, 0), scalar(2, &p)?)?;
    }
    for i in 1..=n3 as u32 {
        asg.bind(z(i, 0), scalar(2, &skew_diag())?)?;
    }
    asg.bind(y(1, 1), odd(2, 1, &odd_sym())?)?;
    asg.bind(y(2, 1), odd(2, 2, &odd_sym())?)?;
    Ok(asg)
}

/// `ŷ y_{k_1} … y_{k_p} (y_{1,0})^{tail} ŷ` under `y_{i,0} = a_i (e11 + e33) + b_i e22`
/// with even non-scalar `a_i`, `b_i` and `ŷ = c (e12 + e23)` for the odd sum
/// `c = e1 + e2 + e3`.
pub fn repeated_odd_obstruction(ks: &[u32], tail: usize) -> Result<AlgebraElement> {
    let rank = 7;
    let mut word = vec![y(1, 1)];
    word.extend(ks.iter().map(|&k| y(k, 0)));
    word.extend(std::iter::repeat(y(1, 0)).take(tail));
    word.push(y(1, 1));
    let poly = FreePolynomial::monomial(&word);

    let even = |c: i64, a: usize, b: usize| -> Result<GrassmannElement> {
        GrassmannElement::scalar(rank, rat(c)).add(&GrassmannElement::monomial(rank, &[a, b])?)
    };
    let mut asg = Assignment::new(KIND, rank);
    let mut indices: Vec<u32> = ks.to_vec();
    indices.push(1);
    indices.sort_unstable();
    indices.dedup();
    for i in indices {
        let a = even(i as i64 + 1, 4, 5)?;
        let b = even(i as i64 + 2, 6, 7)?;
        let value = embed_super_tensor(KIND, &outer_diag(), &a)?.add(&embed_super_tensor(KIND, &middle(), &b)?)?;
        asg.bind(y(i, 0), value)?;
    }
    let c = (1..=3).try_fold(GrassmannElement::zero(rank), |acc, i| acc.add(&GrassmannElement::generator(rank, i)?))?;
    asg.bind(y(1, 1), embed_super_tensor(KIND, &odd_sym(), &c)?)?;
    evaluate(&poly, &asg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_commutator_at_three() {
        let v = skew_commutator_witness(3, 2).unwrap();
        assert_eq!(v, scalar(1, &corner().scale(&rat(4))).unwrap());
    }

    #[test]
    fn single_generator_odd_square_vanishes() {
        let poly = FreePolynomial::monomial(&[y(1, 1), y(1, 0), y(1, 1)]);
        let asg = one_odd_assignment(1, &[1], 0).unwrap();
        assert!(evaluate(&poly, &asg).unwrap().is_zero());
    }

    #[test]
    fn obstruction_vanishes() {
        assert!(repeated_odd_obstruction(&[1, 2], 1).unwrap().is_zero());
        assert!(repeated_odd_obstruction(&[], 0).unwrap().is_zero());
    }

    #[test]
    fn contract_errors() {
        assert!(skew_commutator_witness(1, 1).is_err());
        assert!(skew_commutator_witness(3, 4).is_err());
    }
}
