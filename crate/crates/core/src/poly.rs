//! Integer polynomials, used for simplex generating functions.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

/// Simplex generating function `1 + f_0 t + f_1 t^2 + ... + f_q t^(q+1)`.
///
/// The coefficient of `t^k` counts simplices with `k` vertices; the constant
/// term stands for the empty set. Products, sums and derivatives are exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FPolynomial {
    coeffs: Vec<i64>,
}

impl FPolynomial {
    pub fn from_coefficients(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        FPolynomial { coeffs }
    }

    /// Builds `1 + sum_k f[k] t^(k+1)` from an f-vector.
    pub fn from_f_vector(f: &[u64]) -> Self {
        let mut coeffs = Vec::with_capacity(f.len() + 1);
        coeffs.push(1);
        coeffs.extend(f.iter().map(|&c| c as i64));
        Self::from_coefficients(coeffs)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as i64 * c)
            .collect();
        Self::from_coefficients(coeffs)
    }

    pub fn zero() -> Self {
        FPolynomial { coeffs: vec![0] }
    }

    pub fn one() -> Self {
        FPolynomial { coeffs: vec![1] }
    }
}

impl Add for &FPolynomial {
    type Output = FPolynomial;

    fn add(self, rhs: &FPolynomial) -> FPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coefficient(k) + rhs.coefficient(k))
            .collect();
        FPolynomial::from_coefficients(coeffs)
    }
}

impl Mul for &FPolynomial {
    type Output = FPolynomial;

    fn mul(self, rhs: &FPolynomial) -> FPolynomial {
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        FPolynomial::from_coefficients(coeffs)
    }
}

impl fmt::Display for FPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 && !(k == 0 && self.coeffs.len() == 1) {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 if a == 1 => f.write_str("t")?,
                1 => write!(f, "{a}t")?,
                _ if a == 1 => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_zero_spheres() {
        let s0 = FPolynomial::from_f_vector(&[2]);
        let sq = &s0 * &s0;
        assert_eq!(sq.coefficients(), &[1, 4, 4]);
        let cube = &sq * &s0;
        assert_eq!(cube.coefficients(), &[1, 6, 12, 8]);
    }

    #[test]
    fn eval_and_derivative() {
        let oct = FPolynomial::from_f_vector(&[6, 12, 8]);
        assert_eq!(1 - oct.eval(-1), 2);
        assert_eq!(oct.derivative().coefficients(), &[6, 24, 24]);
        assert_eq!(oct.to_string(), "1 + 6t + 12t^2 + 8t^3");
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = FPolynomial::from_coefficients(vec![1, 0, 0]);
        assert_eq!(p, FPolynomial::one());
        assert_eq!(p.degree(), 0);
    }
}
