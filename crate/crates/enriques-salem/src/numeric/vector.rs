use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// A column vector of exact rationals.
///
/// `BigRational` keeps every entry normalized (coprime numerator/denominator,
/// positive denominator), so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatVector {
    entries: Vec<BigRational>,
}

impl RatVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        assert!(!entries.is_empty(), "vector dimension must be positive");
        RatVector { entries }
    }

    pub fn zero(dim: usize) -> Self {
        RatVector::new(vec![BigRational::zero(); dim])
    }

    /// Standard basis vector e_i (0-based index).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = RatVector::zero(dim);
        v.entries[i] = BigRational::one();
        v
    }

    pub fn from_integers(values: &[i64]) -> Self {
        RatVector::new(
            values
                .iter()
                .map(|&v| BigRational::from(BigInt::from(v)))
                .collect(),
        )
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize) -> BigRational) -> Self {
        RatVector::new((0..dim).map(&mut f).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> &BigRational {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        RatVector::from_fn(self.dim(), |i| self.get(i) + other.get(i))
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        RatVector::from_fn(self.dim(), |i| self.get(i) - other.get(i))
    }

    pub fn neg(&self) -> RatVector {
        RatVector::from_fn(self.dim(), |i| -self.get(i).clone())
    }

    pub fn scale(&self, s: &BigRational) -> RatVector {
        RatVector::from_fn(self.dim(), |i| self.get(i) * s)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    /// Convert to integers; panics if any entry has a denominator.
    pub fn to_integers(&self) -> Vec<BigInt> {
        self.entries
            .iter()
            .map(|e| {
                assert!(e.is_integer(), "entry {e} is not an integer");
                e.to_integer()
            })
            .collect()
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Solve `gram * x = rhs` exactly over the rationals by Gaussian elimination
/// with exact pivoting. Returns `Error::SingularGram` when no unique solution
/// exists.
pub fn solve_rational(gram: &IntMatrix, rhs: &RatVector) -> Result<RatVector> {
    let n = gram.dim();
    assert_eq!(rhs.dim(), n, "right-hand side dimension mismatch");
    // augmented system over BigRational
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| BigRational::from(gram.get(r, c).clone()))
                .collect()
        })
        .collect();
    let mut b: Vec<BigRational> = rhs.entries().to_vec();

    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot_row else {
            return Err(Error::SingularGram);
        };
        a.swap(col, p);
        b.swap(col, p);
        let pivot = a[col][col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..n {
                let s = &factor * &a[col][c];
                a[r][c] -= s;
            }
            let s = &factor * &b[col];
            b[r] -= s;
        }
    }
    let solution = (0..n).map(|i| &b[i] / &a[i][i]).collect();
    Ok(RatVector::new(solution))
}
