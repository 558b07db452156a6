use std::fmt;
use std::ops::Mul;

use num::bigint::BigInt;
use num::traits::{One, Zero};

use super::poly::IntPolynomial;
use super::vector::RatVector;

/// A square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Build from a row-major entry list. Panics unless `entries.len() == dim * dim`.
    pub fn new(dim: usize, entries: Vec<BigInt>) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");
        IntMatrix { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        IntMatrix::new(dim, vec![BigInt::zero(); dim * dim])
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zero(dim);
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Build from `i64` rows, mostly for tests and fixed Gram matrices.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "rows must be square");
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| BigInt::from(v)))
            .collect();
        IntMatrix::new(dim, entries)
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        IntMatrix::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.entries[row * self.dim + col] = value;
    }

    /// Set column `col` to the image vector `v` (columns are images of basis vectors).
    pub fn set_column(&mut self, col: usize, v: &[BigInt]) {
        assert_eq!(v.len(), self.dim);
        for (row, value) in v.iter().enumerate() {
            self.set(row, col, value.clone());
        }
    }

    pub fn column(&self, col: usize) -> Vec<BigInt> {
        (0..self.dim).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.dim, |r, c| self.get(c, r).clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.dim)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Exact matrix product. Panics on dimension mismatch.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        let n = self.dim;
        IntMatrix::from_fn(n, |r, c| {
            let mut acc = BigInt::zero();
            for k in 0..n {
                acc += self.get(r, k) * other.get(k, c);
            }
            acc
        })
    }

    /// Apply to a column vector of rationals.
    pub fn apply(&self, v: &RatVector) -> RatVector {
        assert_eq!(v.dim(), self.dim, "vector dimension mismatch");
        RatVector::from_fn(self.dim, |r| {
            (0..self.dim).map(|c| v.get(c) * self.get(r, c)).sum()
        })
    }

    /// Characteristic polynomial by the Faddeev–LeVerrier recurrence.
    ///
    /// All divisions in the recurrence are exact over the integers, so the
    /// result is the exact monic characteristic polynomial of degree `dim`.
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.dim;
        // coeffs[k] is the coefficient of x^(n-k); coeffs[0] = 1.
        let mut coeffs: Vec<BigInt> = Vec::with_capacity(n + 1);
        coeffs.push(BigInt::one());
        let mut m = self.clone();
        let mut c = -m.trace();
        coeffs.push(c.clone());
        for k in 2..=n {
            // M_k = A (M_{k-1} + c_{k-1} I)
            let mut shifted = m;
            for i in 0..n {
                let v = shifted.get(i, i) + &c;
                shifted.set(i, i, v);
            }
            m = self.mul(&shifted);
            let t = m.trace();
            let k_big = BigInt::from(k);
            let (q, r) = num::Integer::div_rem(&(-t), &k_big);
            debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
            c = q;
            coeffs.push(c.clone());
        }
        coeffs.reverse(); // ascending order
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Determinant, read off the characteristic polynomial constant term.
    pub fn det(&self) -> BigInt {
        let p = self.char_poly();
        let c0 = p.coeff(0);
        if self.dim % 2 == 0 {
            c0
        } else {
            -c0
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        IntMatrix::mul(self, rhs)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix({}x{})", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
