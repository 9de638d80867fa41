//! Cyclic Jacobi rotations for dense symmetric matrices.

use super::matrix::{IntegerSymMatrix, MAX_ORDER};
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
/// Stop once the off-diagonal Frobenius norm drops below this fraction of its
/// starting value.
pub const RELATIVE_OFF_TOLERANCE: f64 = 1e-12;

/// Eigenvalues of an integer symmetric matrix, largest first.
pub fn numeric_eigenvalues(m: &IntegerSymMatrix) -> Result<Vec<f64>> {
    if m.order() > MAX_ORDER {
        return Err(Error::VertexCount { n: m.order(), min: 0, max: MAX_ORDER });
    }
    symmetric_eigenvalues(m.to_f64_rows())
}

/// Eigenvalues of a symmetric `f64` matrix given by rows, largest first.
/// Only the upper triangle is read.
#[allow(clippy::needless_range_loop)]
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Result<Vec<f64>> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument("matrix is not square".into()));
    }
    for i in 0..n {
        for j in 0..i {
            a[i][j] = a[j][i];
        }
    }

    let off_norm = |a: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i][j] * a[i][j];
            }
        }
        s.sqrt()
    };
    let frob: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let initial = off_norm(&a);
    // rounding keeps the off-diagonal mass around eps * ||A||, so a matrix that
    // starts nearly diagonal needs an absolute floor as well
    let threshold = (RELATIVE_OFF_TOLERANCE * initial).max(1e-15 * frob);

    let mut sweeps = 0;
    while off_norm(&a) > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let g = a[r][p];
                    let h = a[r][q];
                    let rp = g - s * (h + g * tau);
                    let rq = h + s * (g - h * tau);
                    a[r][p] = rp;
                    a[p][r] = rp;
                    a[r][q] = rq;
                    a[q][r] = rq;
                }
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    Ok(eig)
}
