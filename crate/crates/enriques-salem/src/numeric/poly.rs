use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Integer-coefficient univariate polynomial, coefficients ascending by degree.
///
/// The representation is canonical: the zero polynomial is the empty list and
/// the last coefficient is nonzero otherwise. `degree()` returns `None` for
/// the zero polynomial rather than a sentinel number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// x^n - 1.
    pub fn x_pow_minus_one(n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Coefficient palindrome test: x^d p(1/x) == p(x).
    pub fn is_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// x^d p(1/x).
    pub fn reversed(&self) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Exact division: returns `r` with `self == q * r`, or `None` when `q`
    /// does not divide `self` over the integers. Never truncates.
    ///
    /// `q` must be nonzero and monic.
    pub fn exact_div(&self, q: &IntPolynomial) -> Option<IntPolynomial> {
        assert!(!q.is_zero(), "division by the zero polynomial");
        assert!(q.is_monic(), "divisor must be monic");
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let dq = q.degree().unwrap();
        let dp = self.degree().unwrap();
        if dp < dq {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let lead = rem[k + dq].clone();
            if lead.is_zero() {
                continue;
            }
            quot[k] = lead.clone();
            for (i, qc) in q.coeffs.iter().enumerate() {
                rem[k + i] -= &lead * qc;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPolynomial::from_coeffs(quot))
    }

    /// Render with descending powers, e.g. `x^2 - 14x + 1`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                out.push_str(&mag.to_string());
            }
            if k >= 1 {
                out.push_str(var);
                if k >= 2 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
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

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty("x"))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(IntPolynomial::from_i64(&[0, 0, 0]), IntPolynomial::zero());
    }

    #[test]
    fn exact_div_constructed_product() {
        // (x-1)(x^2-3x+1) / (x-1) = x^2-3x+1
        let a = IntPolynomial::from_i64(&[-1, 1]);
        let b = IntPolynomial::from_i64(&[1, -3, 1]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b));
    }

    #[test]
    fn exact_div_rejects_non_divisor() {
        // (x^2-14x+1) at -1 evaluates to 16, so x+1 is not a factor
        let p = IntPolynomial::from_i64(&[1, -14, 1]);
        let q = IntPolynomial::from_i64(&[1, 1]);
        assert_eq!(p.eval_int(&BigInt::from(-1)), BigInt::from(16));
        assert_eq!(p.exact_div(&q), None);
    }

    #[test]
    fn reciprocal_detection() {
        assert!(IntPolynomial::from_i64(&[1, -14, 1]).is_reciprocal());
        assert!(!IntPolynomial::from_i64(&[-1, -1, 1]).is_reciprocal());
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(
            IntPolynomial::from_i64(&[1, -14, 1]).pretty("x"),
            "x^2 - 14x + 1"
        );
        assert_eq!(IntPolynomial::from_i64(&[0, -1]).pretty("x"), "-x");
        assert_eq!(IntPolynomial::zero().pretty("x"), "0");
    }
}
