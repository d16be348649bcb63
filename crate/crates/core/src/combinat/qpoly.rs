use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

/// Polynomial in `q` with non-negative integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u64>", into = "Vec<u64>")]
pub struct QPolynomial(Vec<u64>);

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial(vec![])
    }

    pub fn one() -> Self {
        QPolynomial(vec![1])
    }

    /// `q^d`.
    pub fn monomial(d: usize) -> Self {
        let mut v = vec![0; d + 1];
        v[d] = 1;
        QPolynomial(v)
    }

    pub fn from_coeffs(mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        QPolynomial(c)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn coeff(&self, d: usize) -> u64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    /// Coefficients `0..len`, padded with zeros.
    pub fn padded(&self, len: usize) -> Vec<u64> {
        (0..len).map(|d| self.coeff(d)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_one(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `[i]_q = 1 + q + … + q^{i−1}`.
    pub fn q_integer(i: usize) -> Self {
        QPolynomial(vec![1; i])
    }

    /// `[k]_q! = Π_{i=1}^{k} [i]_q`.
    pub fn q_factorial(k: usize) -> Self {
        (1..=k).fold(Self::one(), |acc, i| &acc * &Self::q_integer(i))
    }

    /// Coefficients `0..=max_degree` of `self · Π_{i=1}^{k} (1−q^i)^{−1}`.
    pub fn times_invariant_series(&self, k: usize, max_degree: usize) -> Vec<u64> {
        let mut c = self.padded(max_degree + 1);
        for i in 1..=k {
            for d in i..=max_degree {
                c[d] += c[d - i];
            }
        }
        c
    }
}

impl From<Vec<u64>> for QPolynomial {
    fn from(v: Vec<u64>) -> Self {
        QPolynomial::from_coeffs(v)
    }
}

impl From<QPolynomial> for Vec<u64> {
    fn from(p: QPolynomial) -> Self {
        p.0
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.0.len().max(rhs.0.len());
        QPolynomial::from_coeffs((0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut c = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(c)
    }
}

/// Human-readable form, e.g. `q + 2q^3`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, d) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, d) => write!(f, "q^{d}")?,
                (c, 1) => write!(f, "{c}q")?,
                (c, d) => write!(f, "{c}q^{d}")?,
            }
        }
        Ok(())
    }
}
