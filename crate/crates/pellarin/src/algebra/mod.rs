//! Exact arithmetic for F_q and for polynomials over F_q in each of the
//! variables theta, t, u and z, plus reduced fractions and binomial
//! coefficients mod p. Everything is immutable and deterministic; the field
//! is supplied per call.

pub mod apoly;
pub mod binom;
pub mod field;
pub mod rational;
pub mod tpoly;
pub mod upoly;
pub mod zpoly;

pub use apoly::APoly;
pub use binom::binom_mod_p;
pub use field::{Field, FqElem};
pub use rational::{FracPoly, RationalForm};
pub use tpoly::{chi_eval, TPoly};
pub use upoly::UPoly;
pub use zpoly::ZPoly;
