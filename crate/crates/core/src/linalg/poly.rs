//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree; never carries trailing zeros, so the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// Expands `Π (x - r)` over the given integer roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, &r| acc.mul(&Self::from_i64(&[-r, 1])))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and normalizes the leading coefficient to be
    /// positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Remainder of `self` by `divisor` up to a positive constant factor:
    /// returns `r` with `k * self = q * divisor + r`, `k > 0`, `deg r < deg divisor`.
    /// Keeping `k` positive preserves signs, which Sturm chains rely on.
    pub fn positive_pseudo_rem(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap();
        let lc_abs = lc.abs();
        let lc_sign = lc.signum();
        let mut r = self.coeffs.clone();
        while r.len() > d && !r.is_empty() {
            let shift = r.len() - 1 - d;
            let top = r.last().unwrap() * &lc_sign;
            for c in r.iter_mut() {
                *c *= &lc_abs;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                r[shift + i] -= &top * b;
            }
            debug_assert!(r.last().unwrap().is_zero());
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        let r = Self::new(r);
        let c = r.content();
        if c > BigInt::one() {
            Self::new(r.coeffs.iter().map(|x| x / &c).collect())
        } else {
            r
        }
    }

    /// Exact quotient `self / divisor` over the integers; `None` if the
    /// division leaves a remainder or a non-integral coefficient.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let d = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree()?;
        if n < d {
            return None;
        }
        let lc = divisor.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let top = &r[k + d];
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                r[k + i] -= &quot * b;
            }
            q[k] = quot;
        }
        r.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.positive_pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)` for rational `x`, computed from the homogenized value
    /// `den^deg * p(num / den)` with `den > 0`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let (num, den) = (x.numer(), x.denom());
        let value = if den.is_one() {
            self.eval_int(num)
        } else {
            let mut acc = BigInt::zero();
            let mut den_pow = BigInt::one();
            // Horner on the reversed polynomial: sum c_i num^i den^(d-i)
            for c in self.coeffs.iter().rev() {
                acc = acc * num + c * &den_pow;
                den_pow *= den;
            }
            acc
        };
        value.cmp(&BigInt::zero())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerPolynomial({self})")
    }
}
