use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial in `q` with arbitrary-precision integer
/// coefficients. Index `i` of the coefficient vector is the coefficient of
/// `q^i`; the vector never carries trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^exp` (zero outside the support).
    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let low = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let support = &self.coeffs[low.min(self.coeffs.len())..];
        support.iter().eq(support.iter().rev())
    }

    /// Multiplication by `q^s`.
    pub fn shifted(&self, s: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    fn add_shifted_assign(&mut self, other: &Self, s: usize) {
        if other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + s;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + s] += c;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: Self) -> IntPolynomial {
        let mut out = self.clone();
        out.add_shifted_assign(rhs, 0);
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: Self) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(coeffs.len().max(rhs.coeffs.len()), BigInt::zero());
        for (x, y) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *x -= y;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{c}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{c}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// The Gaussian polynomial `[a choose b]_q`, built with the q-Pascal
/// recurrence `[a,b] = [a−1,b] + q^{a−b}·[a−1,b−1]` so no polynomial division
/// is ever needed.
pub fn gaussian_polynomial(a: usize, b: usize) -> Result<IntPolynomial> {
    if b > a {
        return Err(Error::GaussianRange { a, b });
    }
    // row[c] = [n choose c]_q for the current n, c = 0..=min(n, b)
    let mut row = vec![IntPolynomial::one()];
    for n in 1..=a {
        let width = n.min(b);
        let mut next = Vec::with_capacity(width + 1);
        for c in 0..=width {
            let mut entry = if c < row.len() && c < n {
                row[c].clone()
            } else {
                IntPolynomial::zero()
            };
            if c >= 1 {
                entry.add_shifted_assign(&row[c - 1], n - c);
            }
            next.push(entry);
        }
        row = next;
    }
    Ok(row.swap_remove(b))
}
