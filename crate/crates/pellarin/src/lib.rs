//! Exact arithmetic for the special values of Pellarin's L-series over
//! A = F_q[theta]: twisted power sums, the special polynomials
//! z(chi_t^beta, x, -k) with their trivial zeros, the exact-degree formula,
//! Carlitz interpolation polynomials, and Wagner coefficients. Every core
//! quantity is computable by at least two independent routes (closed
//! formula or recursion vs. a brute-force sum over the defining set), and
//! the verification suites cross-check them.
//!
//! No floating point anywhere; all values are immutable and all operations
//! pure and deterministic.

pub mod algebra;
pub mod approximation;
pub mod carlitz;
pub mod cli;
pub mod error;
pub mod powersums;
pub mod specialpolys;
pub mod verify;

pub use error::{Error, Result};
