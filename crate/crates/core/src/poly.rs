//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, used for Hilbert series numerators.

use num::{BigInt, One, Zero};

/// Polynomial in one variable `t`; coefficient of `t^k` at index `k`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// The monomial `c * t^k`.
    pub fn term(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact quotient by `(1 - t)`; `None` if `1` is not a root.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // p = q * (1 - t) means q_k = sum of p_0..p_k; exactness needs p(1) = 0.
        let mut acc = BigInt::zero();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            acc += c;
            coeffs.push(acc.clone());
        }
        let rem = coeffs.pop().expect("nonzero poly has coefficients");
        if rem.is_zero() {
            Some(IntPoly::from_coeffs(coeffs))
        } else {
            None
        }
    }

    /// Order of vanishing at `t = 1` (zero polynomial reports 0).
    pub fn vanishing_order_at_one(&self) -> usize {
        let mut p = self.clone();
        let mut order = 0;
        while !p.is_zero() {
            match p.div_one_minus_t() {
                Some(q) => {
                    p = q;
                    order += 1;
                }
                None => break,
            }
        }
        order
    }

    /// First `len` coefficients of the power series `self / (1 - t)^n`.
    pub fn series_div_geom(&self, n: usize, len: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = (0..len).map(|k| self.coeff(k)).collect();
        for _ in 0..n {
            let mut acc = BigInt::zero();
            for c in out.iter_mut() {
                acc += &*c;
                *c = acc.clone();
            }
        }
        out
    }
}
