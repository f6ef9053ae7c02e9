//! Generating identities of the three algebras, with schematic letters instantiated.

use serde::Serialize;

use crate::algebra::AlgebraKind;
use crate::free::{circle, commutator_vars, y, z, FreePolynomial, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedIdentity {
    /// Scheme label, with the instantiation in parentheses when the scheme expands.
    pub label: String,
    pub poly: FreePolynomial,
}

fn named(label: impl Into<String>, poly: FreePolynomial) -> NamedIdentity {
    NamedIdentity {
        label: label.into(),
        poly,
    }
}

fn m(vars: &[Variable]) -> FreePolynomial {
    FreePolynomial::monomial(vars)
}

fn comm(vars: &[Variable]) -> FreePolynomial {
    commutator_vars(vars).expect("two or more entries")
}

fn circ(a: Variable, b: Variable) -> FreePolynomial {
    circle(&FreePolynomial::var(a), &FreePolynomial::var(b))
}

/// One representative variable of each species other than `y_{1,0}`, for `[y_{1,0}, x]`.
fn partners_of_y10() -> [Variable; 4] {
    [y(2, 0), y(1, 1), z(1, 0), z(1, 1)]
}

/// Odd variable of index `i`, symmetric if `sym`.
fn odd(sym: bool, i: u32) -> Variable {
    if sym {
        y(i, 1)
    } else {
        z(i, 1)
    }
}

fn species_letter(sym: bool) -> &'static str {
    if sym {
        "y"
    } else {
        "z"
    }
}

/// Concrete multilinear generating identities of `kind`, in scheme order.
pub fn identity_basis(kind: AlgebraKind) -> Vec<NamedIdentity> {
    match kind {
        AlgebraKind::M11E => m11e(),
        AlgebraKind::UT11E => ut11e(),
        AlgebraKind::UT3E010 => ut3e010(),
    }
}

fn m11e() -> Vec<NamedIdentity> {
    let mut out = vec![
        named("1", m(&[y(1, 1), y(2, 1)])),
        named("2", m(&[z(1, 1), z(2, 1)])),
        named("3", circ(z(1, 1), z(1, 0))),
        named("4", circ(z(1, 0), y(1, 1))),
        named("5", comm(&[z(1, 0), z(2, 0)])),
        named("6", comm(&[y(1, 1), y(1, 0)])),
        named(
            "7",
            &comm(&[z(1, 0), y(1, 1)]) * &comm(&[z(2, 0), y(2, 1)]),
        ),
        named(
            "8",
            &comm(&[z(1, 1), z(1, 0)]) * &comm(&[z(2, 1), z(2, 0)]),
        ),
        named(
            "9",
            &m(&[y(1, 1), z(1, 1), y(2, 1)]) + &m(&[y(2, 1), z(1, 1), y(1, 1)]),
        ),
        named(
            "10",
            &m(&[z(1, 1), y(1, 1), z(2, 1)]) + &m(&[z(2, 1), y(1, 1), z(1, 1)]),
        ),
    ];
    for x in partners_of_y10() {
        out.push(named(format!("11 (x = {x})"), comm(&[y(1, 0), x])));
    }
    out
}

fn ut11e() -> Vec<NamedIdentity> {
    let mut out: Vec<NamedIdentity> = partners_of_y10()
        .into_iter()
        .map(|x| named(format!("i (x = {x})"), comm(&[y(1, 0), x])))
        .collect();
    out.push(named("ii", m(&[y(1, 1), y(2, 1)])));
    out.push(named("iii", FreePolynomial::var(z(1, 1))));
    out.push(named("iv", comm(&[z(1, 0), z(2, 0)])));
    out.push(named("v", circ(z(1, 0), y(1, 1))));
    out
}

fn ut3e010() -> Vec<NamedIdentity> {
    let mut out = vec![
        named("i", comm(&[y(1, 0), y(2, 0)])),
        named("ii", comm(&[y(1, 0), z(1, 0)])),
        named("iii", circ(y(1, 1), y(2, 1))),
        named("iv", comm(&[y(1, 1), z(1, 1)])),
        named("v", circ(z(1, 1), z(2, 1))),
        named(
            "vi",
            &m(&[y(1, 1), y(1, 0), y(2, 1)]) + &m(&[y(2, 1), y(1, 0), y(1, 1)]),
        ),
        named(
            "vii",
            &m(&[z(1, 1), y(1, 0), z(2, 1)]) + &m(&[z(2, 1), y(1, 0), z(1, 1)]),
        ),
        named(
            "viii",
            &m(&[y(1, 1), y(1, 0), z(1, 1)]) - &m(&[z(1, 1), y(1, 0), y(1, 1)]),
        ),
        named(
            "ix",
            &m(&[z(1, 0), z(2, 0), z(3, 0)]) - &m(&[z(3, 0), z(2, 0), z(1, 0)]),
        ),
        named(
            "x",
            &comm(&[z(1, 0), z(2, 0)]) * &comm(&[z(3, 0), z(4, 0)]),
        ),
    ];
    let zz = comm(&[z(1, 0), z(2, 0)]);
    for sym in [true, false] {
        let x = FreePolynomial::var(odd(sym, 1));
        out.push(named(format!("xi (x = {})", species_letter(sym)), &x * &zz));
    }
    for sym in [true, false] {
        let x = FreePolynomial::var(odd(sym, 1));
        out.push(named(format!("xii (x = {})", species_letter(sym)), &zz * &x));
    }
    for sym in [true, false] {
        out.push(named(
            format!("xiii (x = {})", species_letter(sym)),
            m(&[z(1, 0), odd(sym, 1), z(2, 0)]),
        ));
    }
    for xs in [true, false] {
        for ws in [true, false] {
            let first = odd(xs, 1);
            let second = odd(ws, if xs == ws { 2 } else { 1 });
            out.push(named(
                format!("xiv (x = {}, w = {})", species_letter(xs), species_letter(ws)),
                m(&[first, z(1, 0), second]),
            ));
        }
    }
    for a in [true, false] {
        for b in [true, false] {
            for c in [true, false] {
                // Index each odd variable by how many of its species precede it.
                let mut ny = 0;
                let mut nz = 0;
                let vars: Vec<Variable> = [a, b, c]
                    .iter()
                    .map(|&s| {
                        if s {
                            ny += 1;
                            odd(true, ny)
                        } else {
                            nz += 1;
                            odd(false, nz)
                        }
                    })
                    .collect();
                let label = format!(
                    "xv ({}{}{})",
                    species_letter(a),
                    species_letter(b),
                    species_letter(c)
                );
                out.push(named(label, m(&vars)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expanded_counts() {
        assert_eq!(identity_basis(AlgebraKind::M11E).len(), 14);
        assert_eq!(identity_basis(AlgebraKind::UT11E).len(), 8);
        let b = identity_basis(AlgebraKind::UT3E010);
        assert_eq!(b.iter().filter(|i| i.label.starts_with("xv ")).count(), 8);
        assert_eq!(b.len(), 28);
    }

    #[test]
    fn all_multilinear_and_distinct() {
        for kind in AlgebraKind::ALL {
            let list = identity_basis(kind);
            for id in &list {
                assert!(id.poly.is_multilinear(), "{} {}", kind, id.label);
                assert!(!id.poly.is_zero());
            }
            let mut labels: Vec<&str> = list.iter().map(|i| i.label.as_str()).collect();
            labels.sort();
            labels.dedup();
            assert_eq!(labels.len(), list.len());
        }
    }
}
