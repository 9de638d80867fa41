//! Exact real-root counting on half-open intervals `(a, b]`.

use std::cmp::Ordering;

use num_rational::BigRational;

use super::poly::IntegerPolynomial;
use super::squarefree::{square_free_decompose, SquareFreeDecomposition};
use crate::error::{Error, Result};

/// Sturm sequence of a square-free polynomial, built from sign-preserving
/// pseudo-remainders.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntegerPolynomial>,
}

impl SturmChain {
    pub fn new(square_free: &IntegerPolynomial) -> Self {
        let mut seq = vec![square_free.clone()];
        let d = square_free.derivative();
        if !d.is_zero() {
            seq.push(d);
        }
        while seq.len() >= 2 {
            let k = seq.len();
            let r = seq[k - 2].positive_pseudo_rem(&seq[k - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&(-1).into()));
        }
        Self { seq }
    }

    /// Sign changes of the chain at `x`, zeros dropped.
    pub fn variations(&self, x: &BigRational) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for p in &self.seq {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(a, b]`. With zeros dropped, `V` is right-continuous
    /// at every root of a square-free polynomial, so `V(a) - V(b)` counts
    /// exactly the half-open interval.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }
}

/// Outcome of one exact interval count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalCount {
    /// Roots in `(a, b]`, with multiplicity.
    pub count: usize,
    /// Distinct roots of each square-free factor inside `(a, b]`.
    pub factor_counts: Vec<usize>,
    /// Multiplicity of `a` as a root (0 if it is not one).
    pub a_multiplicity: usize,
    pub b_multiplicity: usize,
}

/// Reusable exact counter: decomposes once, then answers any number of
/// interval queries.
#[derive(Clone, Debug)]
pub struct RootCounter {
    poly: IntegerPolynomial,
    decomposition: SquareFreeDecomposition,
    chains: Vec<SturmChain>,
}

impl RootCounter {
    pub fn new(p: &IntegerPolynomial) -> Result<Self> {
        let decomposition = square_free_decompose(p)?;
        let chains = decomposition.factors.iter().map(|(q, _)| SturmChain::new(q)).collect();
        Ok(Self { poly: p.clone(), decomposition, chains })
    }

    pub fn polynomial(&self) -> &IntegerPolynomial {
        &self.poly
    }

    pub fn decomposition(&self) -> &SquareFreeDecomposition {
        &self.decomposition
    }

    /// Multiplicity of `x` as a root, decided by exact evaluation.
    pub fn multiplicity_at(&self, x: &BigRational) -> usize {
        self.decomposition
            .factors
            .iter()
            .filter(|(q, _)| q.sign_at(x) == Ordering::Equal)
            .map(|(_, m)| *m as usize)
            .sum()
    }

    pub fn count(&self, a: &BigRational, b: &BigRational) -> Result<IntervalCount> {
        if a >= b {
            return Err(Error::DegenerateInterval { a: a.to_string(), b: b.to_string() });
        }
        let factor_counts: Vec<usize> = self.chains.iter().map(|c| c.count(a, b)).collect();
        let count = factor_counts
            .iter()
            .zip(&self.decomposition.factors)
            .map(|(k, (_, m))| k * *m as usize)
            .sum();
        Ok(IntervalCount {
            count,
            factor_counts,
            a_multiplicity: self.multiplicity_at(a),
            b_multiplicity: self.multiplicity_at(b),
        })
    }
}

/// Real roots of `p` in `(a, b]`, counted with multiplicity.
pub fn count_roots_in_interval(p: &IntegerPolynomial, a: &BigRational, b: &BigRational) -> Result<usize> {
    if a >= b {
        return Err(Error::DegenerateInterval { a: a.to_string(), b: b.to_string() });
    }
    Ok(RootCounter::new(p)?.count(a, b)?.count)
}
