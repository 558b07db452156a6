//! Sturm-sequence root counting over exact rationals.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, Zero};

use crate::numeric::IntPolynomial;

/// Interval endpoint for root counting.
#[derive(Clone, Debug)]
pub enum Endpoint {
    NegInfinity,
    Value(BigRational),
    PosInfinity,
}

impl Endpoint {
    pub fn from_int(v: i64) -> Self {
        Endpoint::Value(BigRational::from(BigInt::from(v)))
    }
}

/// Dense rational polynomial used internally for remainder sequences.
#[derive(Clone)]
struct RatPoly {
    coeffs: Vec<BigRational>, // ascending, trailing zeros stripped
}

impl RatPoly {
    fn from_int(p: &IntPolynomial) -> Self {
        RatPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        }
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly { coeffs: vec![] };
        }
        RatPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from(BigInt::from(k)))
                .collect(),
        }
        .normalize()
    }

    /// Remainder of self divided by d.
    fn rem(&self, d: &RatPoly) -> RatPoly {
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lead = d.coeffs.last().unwrap();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let factor = r.last().unwrap() / lead;
            if !factor.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let s = &factor * dc;
                    r[k + i] -= s;
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        RatPoly { coeffs: r }
    }

    /// Sign at a finite point or at +/- infinity.
    fn sign_at(&self, x: &Endpoint) -> i8 {
        if self.is_zero() {
            return 0;
        }
        match x {
            Endpoint::PosInfinity => sign(self.coeffs.last().unwrap()),
            Endpoint::NegInfinity => {
                let s = sign(self.coeffs.last().unwrap());
                if self.degree() % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            Endpoint::Value(v) => {
                let mut acc = BigRational::zero();
                for c in self.coeffs.iter().rev() {
                    acc = acc * v + c;
                }
                sign(&acc)
            }
        }
    }
}

fn sign(v: &BigRational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// The Sturm chain of `p`: p, p', then negated remainders down to a constant.
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let p0 = RatPoly::from_int(p);
        let p1 = p0.derivative();
        let mut chain = vec![p0];
        if !p1.is_zero() {
            chain.push(p1);
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(RatPoly {
                    coeffs: r.coeffs.iter().map(|c| -c.clone()).collect(),
                });
                if chain.last().unwrap().degree() == 0 {
                    break;
                }
            }
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &Endpoint) -> usize {
        let mut count = 0;
        let mut last: i8 = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    ///
    /// Requires `a < b` in the interval order; infinite endpoints allowed.
    pub fn count_roots_halfopen(&self, a: &Endpoint, b: &Endpoint) -> usize {
        let va = self.variations(a);
        let vb = self.variations(b);
        assert!(va >= vb, "endpoints out of order for Sturm count");
        va - vb
    }
}

/// Distinct real roots of `p` in `(a, b]`.
pub fn count_roots_in(p: &IntPolynomial, a: &Endpoint, b: &Endpoint) -> usize {
    SturmChain::new(p).count_roots_halfopen(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_roots_of_quadratic() {
        // x^2 - 2 has one root in (0, 2] and one in (-2, 0]
        let p = IntPolynomial::from_i64(&[-2, 0, 1]);
        assert_eq!(
            count_roots_in(&p, &Endpoint::from_int(0), &Endpoint::from_int(2)),
            1
        );
        assert_eq!(
            count_roots_in(&p, &Endpoint::from_int(-2), &Endpoint::from_int(0)),
            1
        );
        assert_eq!(
            count_roots_in(&p, &Endpoint::NegInfinity, &Endpoint::PosInfinity),
            2
        );
    }

    #[test]
    fn counts_distinct_roots_with_multiplicity_collapsed() {
        // (x-1)^2 (x+3)
        let sq = IntPolynomial::from_i64(&[-1, 1]);
        let p = &(&sq * &sq) * &IntPolynomial::from_i64(&[3, 1]);
        assert_eq!(
            count_roots_in(&p, &Endpoint::NegInfinity, &Endpoint::PosInfinity),
            2
        );
    }

    #[test]
    fn no_real_roots() {
        let p = IntPolynomial::from_i64(&[1, 0, 1]); // x^2 + 1
        assert_eq!(
            count_roots_in(&p, &Endpoint::NegInfinity, &Endpoint::PosInfinity),
            0
        );
    }

    #[test]
    fn half_open_convention_includes_right_endpoint() {
        let p = IntPolynomial::from_i64(&[-1, 1]); // x - 1
        assert_eq!(
            count_roots_in(&p, &Endpoint::from_int(0), &Endpoint::from_int(1)),
            1
        );
        assert_eq!(
            count_roots_in(&p, &Endpoint::from_int(1), &Endpoint::from_int(2)),
            0
        );
    }
}
