//! Exact integer/rational linear algebra and polynomial arithmetic.
//!
//! Everything in this module is exact: matrices carry `BigInt` entries,
//! vectors carry normalized `BigRational` entries, and no floating point is
//! ever stored. The matrices of interest are small (rank 10), so all
//! algorithms are simple dense O(n^3) schemes.

mod matrix;
mod poly;
mod vector;

pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use vector::{solve_rational, RatVector};
