use super::poly::IntegerPolynomial;
use crate::error::{Error, Result};

/// `p = c * Π q_i^{m_i}` with each `q_i` square-free, primitive, with positive
/// leading coefficient, and pairwise coprime. Multiplicities are strictly
/// increasing along `factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreeDecomposition {
    pub factors: Vec<(IntegerPolynomial, u32)>,
}

impl SquareFreeDecomposition {
    /// `Π q_i^{m_i}`, equal to the input up to a rational constant.
    pub fn expand(&self) -> IntegerPolynomial {
        self.factors
            .iter()
            .fold(IntegerPolynomial::one(), |acc, (q, m)| acc.mul(&q.pow(*m)))
    }

    pub fn weighted_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(q, m)| q.degree().unwrap_or(0) * *m as usize)
            .sum()
    }
}

/// Yun's algorithm over the integers. Every quotient taken is by a primitive
/// divisor, so by Gauss's lemma it stays integral.
pub fn square_free_decompose(p: &IntegerPolynomial) -> Result<SquareFreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.primitive_part();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquareFreeDecomposition { factors });
    }
    let df = f.derivative();
    let g = f.gcd(&df);
    let mut a = f.exact_div(&g).expect("gcd divides f");
    let mut b = df.exact_div(&g).expect("gcd divides f'");
    let mut mult = 1u32;
    while a.degree() > Some(0) {
        let c = sub(&b, &a.derivative());
        let d = a.gcd(&c);
        if d.degree() > Some(0) {
            factors.push((d.clone(), mult));
        }
        a = a.exact_div(&d).expect("d divides a");
        b = c.exact_div(&d).expect("d divides b - a'");
        mult += 1;
    }
    Ok(SquareFreeDecomposition { factors })
}

fn sub(x: &IntegerPolynomial, y: &IntegerPolynomial) -> IntegerPolynomial {
    let len = x.coeffs().len().max(y.coeffs().len());
    IntegerPolynomial::new((0..len).map(|i| x.coeff(i) - y.coeff(i)).collect())
}
