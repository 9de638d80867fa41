//! The rank-two perturbation used when every outside vertex hangs off a
//! single cycle vertex.

use super::jacobi::symmetric_eigenvalues;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rho2Gadget {
    pub a: u64,
    pub g: usize,
    /// `(1 + a - sqrt(a^2 - 2a + 5)) / 2`
    pub closed_form: f64,
    /// Second-largest eigenvalue of the assembled matrix.
    pub numeric: f64,
    /// `f(a) = (a + sqrt(a^2 - 2a + 5) - 1) / 2 - 1`, the slack in the final
    /// bound; never negative for `a >= 1`.
    pub slack: f64,
}

impl Rho2Gadget {
    pub fn slack_nonnegative(&self) -> bool {
        self.slack >= 0.0
    }
}

/// Order `g + 1` matrix with `a` at (0,0), `1` at (g,g), `-1` at (0,g) and
/// (g,0), zeros elsewhere.
pub fn case2_matrix(a: u64, g: usize) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; g + 1]; g + 1];
    m[0][0] = a as f64;
    m[0][g] = -1.0;
    m[g][0] = -1.0;
    m[g][g] = 1.0;
    m
}

pub fn rho2_case2_gadget(a: u64, g: usize) -> Result<Rho2Gadget> {
    if a < 1 || g < 3 {
        return Err(Error::InvalidArgument(format!("need a >= 1 and g >= 3, got a = {a}, g = {g}")));
    }
    let af = a as f64;
    let root = (af * af - 2.0 * af + 5.0).sqrt();
    let closed_form = (1.0 + af - root) / 2.0;
    let slack = (af + root - 1.0) / 2.0 - 1.0;
    let eig = symmetric_eigenvalues(case2_matrix(a, g))?;
    Ok(Rho2Gadget { a, g, closed_form, numeric: eig[1], slack })
}
