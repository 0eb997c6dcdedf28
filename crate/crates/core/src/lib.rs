//! Exact commutative algebra over prime fields for studying the relation
//! type of ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`polyring`]: prime fields, monomials, monomial orders and sparse
//!   polynomials, plus the text syntax used by ring files.
//! * [`groebner`]: a Buchberger engine and the ideal operations built on it
//!   (membership, elimination, colon, saturation, intersection, radical
//!   membership, Krull dimension).
//! * [`quotient`]: quotient rings `k[x]/J`, regularity and parameter tests,
//!   colon ideals in the quotient and Fedder's F-purity test.
//! * [`rees`]: Rees-algebra presentation ideals, relation type and the
//!   two-parameter descent.
//! * [`monres`]: monomial ideals, mapping-cone resolutions, determinantal
//!   rank and height checks.
//! * [`multipliers`]: Cohen-Macaulay multiplier certificates, colon
//!   transfer, relation-type perturbation and superficiality checks.
//! * [`ramsey`]: chains in sequences of tuples under the product order.

pub mod error;
pub mod groebner;
pub mod monres;
pub mod multipliers;
pub mod polyring;
pub mod quotient;
pub mod ramsey;
pub mod rees;

pub use error::{Error, ErrorKind, Result};
pub use groebner::Ideal;
pub use polyring::{Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField, Term};
pub use quotient::QuotientRing;

/// Default coefficient characteristic.
pub const DEFAULT_PRIME: u32 = 32003;

/// Default bound on the total degree of S-pairs processed by Buchberger.
pub const DEFAULT_DEGREE_CAP: u32 = 60;
