//! Prime fields, monomials, monomial orders and sparse polynomials.

mod field;
mod monomial;
mod order;
pub mod parse;
mod poly;

pub use field::PrimeField;
pub use monomial::{Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use poly::{PolyRing, Polynomial, Term};
