//! Exact integer linear algebra (characteristic polynomials, square-free
//! decomposition, Sturm counting) plus a numeric Jacobi eigensolver used as
//! an independent cross-check.

mod gadget;
mod jacobi;
mod matrix;
mod poly;
mod squarefree;
mod sturm;

pub use gadget::{case2_matrix, rho2_case2_gadget, Rho2Gadget};
pub use jacobi::{numeric_eigenvalues, symmetric_eigenvalues, MAX_SWEEPS, RELATIVE_OFF_TOLERANCE};
pub use matrix::{adjacency, laplacian, IntegerSymMatrix, MAX_ORDER};
pub use poly::IntegerPolynomial;
pub use squarefree::{square_free_decompose, SquareFreeDecomposition};
pub use sturm::{count_roots_in_interval, IntervalCount, RootCounter, SturmChain};

use num_rational::BigRational;

/// Convenience constructor for an integral rational.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
