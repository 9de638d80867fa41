use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::poly::IntegerPolynomial;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest matrix order the exact and numeric engines accept.
pub const MAX_ORDER: usize = 64;

/// Dense symmetric matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSymMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntegerSymMatrix {
    pub fn zeros(order: usize) -> Self {
        Self { order, entries: vec![BigInt::zero(); order * order] }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        let mut m = Self::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::InvalidArgument(format!("row {i} has length {}, expected {order}", row.len())));
            }
            for (j, &x) in row.iter().enumerate() {
                m.entries[i * order + j] = x.into();
            }
        }
        for i in 0..order {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::InvalidArgument(format!("matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(m)
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set_sym(i, i, v.into());
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set_sym(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[j * self.order + i] = value.clone();
        self.entries[i * self.order + j] = value;
    }

    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        let mut m = Self::zeros(indices.len());
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                m.entries[a * indices.len() + b] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::InvalidArgument("matrix orders differ".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Self { order: self.order, entries })
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| self.get(i, j).to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }

    /// `det(xI - M)` by the Faddeev–LeVerrier recurrence
    ///
    /// ```text
    /// N_1 = I,  c_{n-k} = -tr(M N_k) / k,  N_{k+1} = M N_k + c_{n-k} I
    /// ```
    ///
    /// Every division by `k` is exact over the integers.
    pub fn char_poly(&self) -> Result<IntegerPolynomial> {
        let n = self.order;
        if n > MAX_ORDER {
            return Err(Error::VertexCount { n, min: 0, max: MAX_ORDER });
        }
        // sparse rows of M: the Laplacians we care about are mostly zeros
        let sparse: Vec<Vec<(usize, &BigInt)>> = (0..n)
            .map(|i| (0..n).map(|j| (j, self.get(i, j))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();

        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        let mut acc = Self::diagonal(&vec![1; n]).entries;
        let mut next = vec![BigInt::zero(); n * n];
        for k in 1..=n {
            for (i, row) in sparse.iter().enumerate() {
                for j in 0..n {
                    let mut s = BigInt::zero();
                    for &(l, m_il) in row {
                        let x = &acc[l * n + j];
                        if !x.is_zero() {
                            s += m_il * x;
                        }
                    }
                    next[i * n + j] = s;
                }
            }
            let tr: BigInt = (0..n).map(|i| &next[i * n + i]).sum();
            let (c, rem) = (-tr).div_rem(&BigInt::from(k));
            debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
            if k < n {
                for i in 0..n {
                    next[i * n + i] += &c;
                }
                std::mem::swap(&mut acc, &mut next);
            }
            coeffs[n - k] = c;
        }
        Ok(IntegerPolynomial::new(coeffs))
    }
}

/// `L(G) = D(G) - A(G)`.
pub fn laplacian(g: &Graph) -> IntegerSymMatrix {
    let n = g.n();
    let mut m = IntegerSymMatrix::zeros(n);
    for v in 0..n {
        m.set_sym(v, v, BigInt::from(g.degree(v)));
    }
    for (u, v) in g.edges() {
        m.set_sym(u, v, BigInt::from(-1));
    }
    m
}

/// Adjacency matrix `A(G)`.
pub fn adjacency(g: &Graph) -> IntegerSymMatrix {
    let mut m = IntegerSymMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        m.set_sym(u, v, BigInt::from(1));
    }
    m
}
