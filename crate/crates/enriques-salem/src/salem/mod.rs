//! Cyclotomic stripping, Salem classification and certified spectral radii.
//!
//! The characteristic polynomial of an isometry of a hyperbolic lattice is a
//! product of cyclotomic polynomials and at most one Salem polynomial. This
//! module strips the cyclotomic part, classifies the residual by exact
//! Sturm-sequence root counts, and encloses the Salem root in a rational
//! interval of width at most 10^-12.
//!
//! All certification is exact: palindrome checks, root counts and sign
//! evaluations run over `BigInt`/`BigRational`. No floating-point value ever
//! decides a classification.

mod sturm;

pub use sturm::{count_roots_in, Endpoint, SturmChain};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::IntPolynomial;

/// Classification of a cyclotomic-free residual polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualClass {
    /// The residual is the constant 1.
    Unit,
    /// Reciprocal of even degree with one real root > 1, its inverse in
    /// (0, 1), and all other roots on the unit circle.
    Salem,
    /// Anything else; signals a non-isometry input or an upstream bug.
    Anomalous,
}

/// Classification attached to a full factorization report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    AllCyclotomic,
    Salem,
    Anomalous,
}

/// Result of stripping every cyclotomic factor from a monic polynomial.
#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub input: IntPolynomial,
    /// Pairs `(n, multiplicity)` for each cyclotomic factor Phi_n, ascending n.
    pub cyclotomic_part: Vec<(u32, u32)>,
    pub residual: IntPolynomial,
    pub classification: Classification,
}

impl FactorizationReport {
    /// Multiply the cyclotomic part back onto the residual.
    pub fn reconstruct(&self) -> IntPolynomial {
        let mut acc = self.residual.clone();
        for &(n, mult) in &self.cyclotomic_part {
            let phi = cyclotomic(n);
            for _ in 0..mult {
                acc = &acc * &phi;
            }
        }
        acc
    }

    pub fn salem_factor(&self) -> Option<&IntPolynomial> {
        match self.classification {
            Classification::Salem => Some(&self.residual),
            _ => None,
        }
    }
}

/// Certified enclosure of the Salem root of a Salem polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralRadius {
    /// Exact rational lower bound.
    pub lower: BigRational,
    /// Exact rational upper bound; `upper - lower <= 10^-12`.
    pub upper: BigRational,
    /// Human-readable decimal rendering of the enclosure midpoint.
    pub decimal_hint: String,
}

impl SpectralRadius {
    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    /// Midpoint rounded to `places` decimal places.
    pub fn display(&self, places: usize) -> String {
        let two = BigRational::from(BigInt::from(2));
        decimal_string(&((&self.lower + &self.upper) / two), places)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.lower)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    // good enough for display and tolerance checks far wider than 1e-12
    let scale = BigInt::from(10).pow(15);
    let scaled = r * BigRational::from(scale);
    let i = scaled.to_integer();
    let approx: f64 = i.to_string().parse().unwrap_or(f64::NAN);
    approx / 1e15
}

/// Euler's totient by trial division.
fn totient(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// The n-th cyclotomic polynomial Phi_n, by iterated exact division of
/// x^n - 1 by Phi_d over the proper divisors d of n.
pub fn cyclotomic(n: u32) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    if n == 1 {
        return IntPolynomial::from_i64(&[-1, 1]);
    }
    let mut result = IntPolynomial::x_pow_minus_one(n as usize);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic(d);
        result = result
            .exact_div(&phi_d)
            .expect("cyclotomic division is always exact");
    }
    result
}

/// All n whose cyclotomic polynomial could divide a polynomial of degree
/// `deg`, i.e. totient(n) <= deg. For n > 2, totient(n) >= sqrt(n/2), so
/// scanning n <= 2 deg^2 + 2 is exhaustive.
pub fn cyclotomic_candidates(deg: usize) -> Vec<u32> {
    let deg = deg as u32;
    (1..=2 * deg * deg + 2)
        .filter(|&n| totient(n) <= deg)
        .collect()
}

/// Divide out every cyclotomic factor of `p` to maximal multiplicity.
///
/// `p` must be monic and nonzero. The residual has no cyclotomic factor.
pub fn strip_cyclotomic(p: &IntPolynomial) -> FactorizationReport {
    assert!(!p.is_zero(), "cannot strip the zero polynomial");
    assert!(p.is_monic(), "input must be monic");
    let deg = p.degree().unwrap();
    let mut residual = p.clone();
    let mut cyclotomic_part = Vec::new();
    for n in cyclotomic_candidates(deg) {
        let phi = cyclotomic(n);
        let mut mult = 0u32;
        while let Some(q) = residual.exact_div(&phi) {
            residual = q;
            mult += 1;
        }
        if mult > 0 {
            cyclotomic_part.push((n, mult));
        }
    }
    let classification = match classify_residual(&residual) {
        ResidualClass::Unit => Classification::AllCyclotomic,
        ResidualClass::Salem => Classification::Salem,
        ResidualClass::Anomalous => Classification::Anomalous,
    };
    FactorizationReport {
        input: p.clone(),
        cyclotomic_part,
        residual,
        classification,
    }
}

/// The trace polynomial Q with p(x) = x^k Q(x + 1/x), defined for reciprocal
/// polynomials of even degree 2k. Roots y of Q in (-2, 2) correspond to
/// conjugate root pairs of p on the unit circle, and a root y > 2 to the
/// real pair (lambda, 1/lambda).
pub fn trace_polynomial(p: &IntPolynomial) -> Option<IntPolynomial> {
    let deg = p.degree()?;
    if deg == 0 || deg % 2 != 0 || !p.is_reciprocal() {
        return None;
    }
    let k = deg / 2;
    // P_j(y) = x^j + x^-j as a polynomial in y = x + 1/x
    let mut p_prev = IntPolynomial::from_i64(&[2]); // P_0
    let mut p_cur = IntPolynomial::from_i64(&[0, 1]); // P_1
    let y = IntPolynomial::from_i64(&[0, 1]);
    let mut q = IntPolynomial::from_coeffs(vec![p.coeff(k)]);
    for j in 1..=k {
        let term_coeff = IntPolynomial::from_coeffs(vec![p.coeff(k + j)]);
        q = &q + &(&term_coeff * &p_cur);
        if j < k {
            let next = &(&y * &p_cur) - &p_prev;
            p_prev = p_cur;
            p_cur = next;
        }
    }
    Some(q)
}

/// Classify a cyclotomic-free residual: `Unit`, `Salem` or `Anomalous`.
///
/// Salem certification is exact. With Q the trace polynomial of degree k,
/// the residual is Salem iff Q has exactly one real root above 2, exactly
/// k-1 real roots inside (-2, 2) and none below -2; those counts force all
/// roots of Q to be real and simple, which is equivalent to the unit-circle
/// condition on p. A product of two Salem polynomials would put two roots
/// above 2 and is correctly rejected.
pub fn classify_residual(p: &IntPolynomial) -> ResidualClass {
    if p.is_one() {
        return ResidualClass::Unit;
    }
    let Some(deg) = p.degree() else {
        return ResidualClass::Anomalous; // zero polynomial
    };
    if deg == 0 || deg % 2 != 0 || !p.is_monic() || !p.is_reciprocal() {
        return ResidualClass::Anomalous;
    }
    // a cyclotomic-free residual cannot vanish at x = 1 or x = -1
    if p.eval_int(&BigInt::one()).is_zero() || p.eval_int(&BigInt::from(-1)).is_zero() {
        return ResidualClass::Anomalous;
    }
    let k = deg / 2;
    let q = trace_polynomial(p).expect("even reciprocal polynomial has a trace polynomial");
    let above_2 = count_roots_in(&q, &Endpoint::from_int(2), &Endpoint::PosInfinity);
    let inside = count_roots_in(&q, &Endpoint::from_int(-2), &Endpoint::from_int(2));
    let below_minus_2 = count_roots_in(&q, &Endpoint::NegInfinity, &Endpoint::from_int(-2));
    if above_2 == 1 && inside == k - 1 && below_minus_2 == 0 {
        ResidualClass::Salem
    } else {
        ResidualClass::Anomalous
    }
}

/// Enclose sqrt(t) for t >= 0 in a rational interval of width 1/(denom * 2^bits).
fn sqrt_enclosure(t: &BigRational, bits: u32) -> (BigRational, BigRational) {
    assert!(!t.is_negative(), "square root of a negative rational");
    let n = t.numer();
    let d = t.denom();
    let scale = BigInt::one() << bits;
    let u = n * d * (&scale * &scale);
    let k = u.sqrt(); // floor square root
    let denom = d * &scale;
    let lower = BigRational::new(k.clone(), denom.clone());
    let upper = BigRational::new(k + BigInt::one(), denom);
    (lower, upper)
}

/// Certified spectral radius of a Salem polynomial.
///
/// Isolates the unique root y0 > 2 of the trace polynomial by exact-sign
/// bisection and maps back through lambda = (y0 + sqrt(y0^2 - 4)) / 2 with
/// outward-rounded interval arithmetic. The returned enclosure has width at
/// most 10^-12 and certifiably brackets the Salem root.
pub fn spectral_radius(p: &IntPolynomial) -> Result<SpectralRadius> {
    if classify_residual(p) != ResidualClass::Salem {
        return Err(Error::NotSalem(p.pretty("x")));
    }
    let q = trace_polynomial(p).expect("Salem polynomial has a trace polynomial");
    let two = BigRational::from(BigInt::from(2));
    let four = BigRational::from(BigInt::from(4));
    let target = BigRational::new(BigInt::one(), BigInt::from(10).pow(12));

    // Cauchy bound: every root of the monic q satisfies |y| < 1 + max |coeff|.
    let bound = BigRational::from(
        q.coeffs()
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
            + BigInt::one(),
    );
    let sign_at = |x: &BigRational| -> i8 {
        let v = q.eval_rational(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    };
    let mut lo = two.clone();
    let mut hi = bound;
    debug_assert_eq!(sign_at(&lo), -1, "trace polynomial must be negative at 2");
    debug_assert_eq!(sign_at(&hi), 1, "Cauchy bound must clear the largest root");
    let mut exact: Option<BigRational> = None;

    let mut bits: u32 = 80;
    loop {
        if exact.is_none() {
            for _ in 0..16 {
                let mid = (&lo + &hi) / &two;
                match sign_at(&mid) {
                    0 => {
                        exact = Some(mid);
                        break;
                    }
                    s if s < 0 => lo = mid,
                    _ => hi = mid,
                }
            }
        }
        let (y_lo, y_hi) = match &exact {
            Some(y0) => (y0.clone(), y0.clone()),
            None => (lo.clone(), hi.clone()),
        };
        let (s_lo, _) = sqrt_enclosure(&(&y_lo * &y_lo - &four), bits);
        let (_, s_hi) = sqrt_enclosure(&(&y_hi * &y_hi - &four), bits);
        let lambda_lo = (&y_lo + &s_lo) / &two;
        let lambda_hi = (&y_hi + &s_hi) / &two;
        if &lambda_hi - &lambda_lo <= target {
            let decimal_hint = {
                let mid = (&lambda_lo + &lambda_hi) / &two;
                decimal_string(&mid, 12)
            };
            return Ok(SpectralRadius {
                lower: lambda_lo,
                upper: lambda_hi,
                decimal_hint,
            });
        }
        bits += 32;
    }
}

/// Render an exact rational as a decimal string with `places` fractional
/// digits, rounding half away from zero.
pub fn decimal_string(value: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10).pow(places as u32);
    let scaled = value * BigRational::from(scale.clone());
    let neg = scaled.is_negative();
    let num = scaled.numer().abs();
    let den = scaled.denom().clone(); // positive by normalization
    let rounded = (num * 2u8 + &den) / (den * 2u8);
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    let sign = if neg && (!int_part.is_zero() || !frac_part.is_zero()) {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part.to_string(),
            width = places
        )
    }
}
