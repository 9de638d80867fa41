//! Closed-form Laplacian spectra of the special families, and exact
//! eigenvalue counting `m_G(a, b]` for arbitrary graphs.

use std::f64::consts::PI;
use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{
    laplacian, numeric_eigenvalues, rational, IntegerPolynomial, IntervalCount, RootCounter,
    SquareFreeDecomposition,
};

/// An eigenvalue known exactly: an integer, or `4 sin^2(π num / den)` with
/// `num / den` reduced and strictly inside `(0, 1/2)` so that equal values
/// always carry equal tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ExactEigenvalue {
    Integer(i64),
    SinSquared { num: u64, den: u64 },
}

impl ExactEigenvalue {
    /// `4 sin^2(k π / n)`, normalized. Values that are rational (Niven's
    /// theorem leaves only 0, 1, 2, 3, 4) come back as integers.
    pub fn sin_squared(k: u64, n: u64) -> Self {
        assert!(n > 0);
        let mut k = k % n;
        if 2 * k > n {
            k = n - k;
        }
        let d = k.gcd(&n);
        let (num, den) = (k / d, n / d);
        match (num, den) {
            (0, _) => Self::Integer(0),
            (1, 6) => Self::Integer(1),
            (1, 4) => Self::Integer(2),
            (1, 3) => Self::Integer(3),
            (1, 2) => Self::Integer(4),
            _ => Self::SinSquared { num, den },
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Self::Integer(v) => v as f64,
            Self::SinSquared { num, den } => {
                let s = (PI * num as f64 / den as f64).sin();
                4.0 * s * s
            }
        }
    }
}

impl fmt::Display for ExactEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Integer(v) => write!(f, "{v}"),
            Self::SinSquared { num, den } => {
                let k = if num == 1 { String::new() } else { num.to_string() };
                write!(f, "4sin^2({k}π/{den})≈{:.6}", self.to_f64())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub value: ExactEigenvalue,
    pub multiplicity: usize,
}

/// A spectrum as a multiset of exact values, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormSpectrum {
    pub entries: Vec<SpectrumEntry>,
}

impl ClosedFormSpectrum {
    fn from_values(values: impl IntoIterator<Item = (ExactEigenvalue, usize)>) -> Self {
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        for (value, multiplicity) in values {
            if multiplicity == 0 {
                continue;
            }
            match entries.iter_mut().find(|e| e.value == value) {
                Some(e) => e.multiplicity += multiplicity,
                None => entries.push(SpectrumEntry { value, multiplicity }),
            }
        }
        entries.sort_by(|a, b| a.value.to_f64().total_cmp(&b.value.to_f64()));
        Self { entries }
    }

    /// Total multiplicity, i.e. the order of the graph.
    /// Spectrum from exactly known integer eigenvalues and multiplicities.
    pub fn from_integers(values: &[(i64, usize)]) -> Self {
        Self::from_values(values.iter().map(|&(v, m)| (ExactEigenvalue::Integer(v), m)))
    }

    pub fn order(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Every eigenvalue repeated by multiplicity, largest first.
    pub fn values_desc(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value.to_f64(), e.multiplicity))
            .collect();
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }
}

impl fmt::Display for ClosedFormSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if e.multiplicity == 1 {
                write!(f, "{}", e.value)?;
            } else {
                write!(f, "{}×{}", e.value, e.multiplicity)?;
            }
        }
        Ok(())
    }
}

/// `C_n`: `4 sin^2(kπ/n)` for `k = 1..=n`.
pub fn cycle_spectrum(n: usize) -> Result<ClosedFormSpectrum> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
    }
    let n = n as u64;
    Ok(ClosedFormSpectrum::from_values((1..=n).map(|k| (ExactEigenvalue::sin_squared(k, n), 1))))
}

/// `P_n`: `4 sin^2((n-k)π/2n)` for `k = 1..=n`.
pub fn path_spectrum(n: usize) -> Result<ClosedFormSpectrum> {
    if n < 1 {
        return Err(Error::InvalidArgument("path needs n >= 1".into()));
    }
    let n = n as u64;
    Ok(ClosedFormSpectrum::from_values(
        (1..=n).map(|k| (ExactEigenvalue::sin_squared(n - k, 2 * n), 1)),
    ))
}

/// `K_{r1..rt}`: `0`, `n - r_i` with multiplicity `r_i - 1`, and `n` with
/// multiplicity `t - 1`.
pub fn multipartite_spectrum(parts: &[usize]) -> Result<ClosedFormSpectrum> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(Error::InvalidArgument("need at least two non-empty parts".into()));
    }
    let n: usize = parts.iter().sum();
    let int = |v: usize| ExactEigenvalue::Integer(v as i64);
    let values = std::iter::once((int(0), 1))
        .chain(parts.iter().map(|&r| (int(n - r), r - 1)))
        .chain(std::iter::once((int(n), parts.len() - 1)));
    Ok(ClosedFormSpectrum::from_values(values))
}

/// Exact evidence for one value of `m_G(a, b]`.
#[derive(Clone, Debug)]
pub struct IntervalCountCertificate {
    pub a: BigRational,
    pub b: BigRational,
    pub polynomial: IntegerPolynomial,
    pub decomposition: SquareFreeDecomposition,
    pub result: IntervalCount,
}

impl IntervalCountCertificate {
    pub fn count(&self) -> usize {
        self.result.count
    }
}

/// Characteristic polynomial of `L(G)` prepared for repeated exact interval
/// queries.
#[derive(Clone, Debug)]
pub struct LaplacianCounter {
    n: usize,
    counter: RootCounter,
}

impl LaplacianCounter {
    pub fn new(g: &Graph) -> Result<Self> {
        let poly = laplacian(g).char_poly()?;
        Ok(Self { n: g.n(), counter: RootCounter::new(&poly)? })
    }

    pub fn polynomial(&self) -> &IntegerPolynomial {
        self.counter.polynomial()
    }

    /// `m_G(a, b]`, with multiplicity.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> Result<usize> {
        Ok(self.counter.count(a, b)?.count)
    }

    pub fn count_int(&self, a: i64, b: i64) -> Result<usize> {
        self.count(&rational(a), &rational(b))
    }

    pub fn multiplicity_at(&self, x: &BigRational) -> usize {
        self.counter.multiplicity_at(x)
    }

    pub fn certificate(&self, a: &BigRational, b: &BigRational) -> Result<IntervalCountCertificate> {
        let result = self.counter.count(a, b)?;
        Ok(IntervalCountCertificate {
            a: a.clone(),
            b: b.clone(),
            polynomial: self.counter.polynomial().clone(),
            decomposition: self.counter.decomposition().clone(),
            result,
        })
    }

    /// Integer eigenvalues with their multiplicities, ascending. Laplacian
    /// eigenvalues lie in `[0, n]` and rational roots of a monic integer
    /// polynomial are integers, so this finds every rational eigenvalue.
    pub fn integer_eigenvalues(&self) -> Vec<(i64, usize)> {
        (0..=self.n as i64)
            .map(|v| (v, self.multiplicity_at(&rational(v))))
            .filter(|&(_, m)| m > 0)
            .collect()
    }
}

/// `m_G(a, b]`: the number of Laplacian eigenvalues in `(a, b]`.
pub fn m_interval(g: &Graph, a: &BigRational, b: &BigRational) -> Result<IntervalCountCertificate> {
    if a >= b {
        return Err(Error::DegenerateInterval { a: a.to_string(), b: b.to_string() });
    }
    LaplacianCounter::new(g)?.certificate(a, b)
}

/// Numeric Laplacian eigenvalues, largest first.
pub fn numeric_spectrum(g: &Graph) -> Result<Vec<f64>> {
    numeric_eigenvalues(&laplacian(g))
}

/// `μ_k(G)`, the `k`-th largest Laplacian eigenvalue (1-based).
pub fn mu_k(g: &Graph, k: usize) -> Result<f64> {
    if k < 1 || k > g.n() {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={}", g.n())));
    }
    Ok(numeric_spectrum(g)?[k - 1])
}
