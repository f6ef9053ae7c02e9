//! Exact computation with graded algebras with graded involution over a Grassmann envelope:
//! evaluation of free polynomials, identity checking, dimensions of relatively free
//! quotients, and cocharacter verification.

pub mod algebra;
pub mod cochar;
pub mod dims;
pub mod error;
pub mod eval;
pub mod free;
pub mod grassmann;
pub mod hwv;
pub mod identities;
pub mod partition;
pub mod rank;
pub mod scalar;
pub mod witness;

pub use algebra::{AlgebraElement, AlgebraKind, ComponentLabel, Symmetry};
pub use error::{Error, Result};
pub use free::{FreePolynomial, MultiDegree, Variable, Word};
pub use grassmann::GrassmannElement;
pub use scalar::{Parity, Rational};
