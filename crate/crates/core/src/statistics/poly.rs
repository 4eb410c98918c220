//! Generating functions with exact nonnegative coefficients.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Dense polynomial in `q`; `coefficients()[k]` is the coefficient of `q^k`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigUint>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial {
            coeffs: vec![BigUint::one()],
        }
    }

    /// `[k]_q = 1 + q + ... + q^{k-1}`.
    pub fn q_integer(k: usize) -> Self {
        QPolynomial::new(vec![BigUint::one(); k])
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        QPolynomial::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

/// Coefficients joined by commas, lowest degree first: `1,2,2,2,1`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `prod_{i=1}^{n} [im]_q`, the Poincare polynomial of `G(m,1,n)`.
pub fn poincare(m: usize, n: usize) -> QPolynomial {
    (1..=n).fold(QPolynomial::one(), |acc, i| {
        &acc * &QPolynomial::q_integer(i * m)
    })
}
