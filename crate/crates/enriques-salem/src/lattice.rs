//! Coordinate models of the rank-10 numerical lattice.
//!
//! Two bases are used throughout. The isotropic-sequence model carries ten
//! isotropic vectors f_1..f_10 with pairwise product 1 and the polarization
//! class delta = (f_1 + ... + f_10)/3 of square 10. The Petersen model
//! carries ten (-2)-classes U_ab indexed by 2-element subsets of {1..5},
//! meeting exactly when the index pairs are disjoint, together with the
//! isotropic classes f_ab of the induced elliptic pencils and the roots
//! alpha_ab = f_ab - U_ab whose pairing pattern is the anti-Petersen graph.
//!
//! Both models validate every stated pairing identity at construction.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{solve_rational, IntMatrix, RatVector};

/// An unordered pair {a, b} with 1 <= a < b <= 5, indexing Petersen classes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair(u8, u8);

/// The fixed global ordering of the ten pairs. All 1-based word letters for
/// the projection-involution families index into this list.
pub const PAIR_ORDER: [(u8, u8); 10] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];

impl Pair {
    pub fn new(a: u8, b: u8) -> Result<Pair> {
        if a == 0 || b == 0 || a > 5 || b > 5 || a == b {
            return Err(Error::InvalidIndex(format!(
                "pair ({a},{b}) must have distinct entries in 1..=5"
            )));
        }
        Ok(if a < b { Pair(a, b) } else { Pair(b, a) })
    }

    pub fn a(&self) -> u8 {
        self.0
    }

    pub fn b(&self) -> u8 {
        self.1
    }

    pub fn contains(&self, v: u8) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn is_disjoint(&self, other: &Pair) -> bool {
        !other.contains(self.0) && !other.contains(self.1)
    }

    pub fn shares_one(&self, other: &Pair) -> bool {
        self != other && !self.is_disjoint(other)
    }

    /// 0-based position in the fixed pair order.
    pub fn index(&self) -> usize {
        PAIR_ORDER
            .iter()
            .position(|&(a, b)| (a, b) == (self.0, self.1))
            .expect("validated pair is in the order list")
    }

    /// Pair at a 0-based position in the fixed order.
    pub fn from_index(i: usize) -> Pair {
        let (a, b) = PAIR_ORDER[i];
        Pair(a, b)
    }

    /// Apply the transposition (s t) of {1..5} to both entries.
    pub fn transposed(&self, s: u8, t: u8) -> Pair {
        let map = |v: u8| {
            if v == s {
                t
            } else if v == t {
                s
            } else {
                v
            }
        };
        let (a, b) = (map(self.0), map(self.1));
        if a < b {
            Pair(a, b)
        } else {
            Pair(b, a)
        }
    }

    /// Parse labels like "12" or "3,4".
    pub fn parse(s: &str) -> Result<Pair> {
        let digits: Vec<u8> = s
            .chars()
            .filter(|c| c.is_ascii_digit())
            .map(|c| c as u8 - b'0')
            .collect();
        if digits.len() != 2 {
            return Err(Error::InvalidIndex(format!("cannot parse pair from {s:?}")));
        }
        Pair::new(digits[0], digits[1])
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

/// A (-2)-class r_{i,i+1} = f_i + f_{i+1} - f_{10-i+1} in f-basis coordinates.
#[derive(Clone, Debug)]
pub struct NodalClass {
    pub index: usize,
    pub coords: RatVector,
}

/// Signature of a symmetric integer form: counts of positive, negative and
/// zero eigenvalues (with multiplicity).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Inertia of a symmetric Gram matrix by exact congruence diagonalization
/// over the rationals (Sylvester's law keeps the sign counts invariant).
pub fn signature(gram: &IntMatrix) -> Signature {
    assert!(gram.is_symmetric(), "signature of a non-symmetric matrix");
    let n = gram.dim();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| BigRational::from(gram.get(r, c).clone()))
                .collect()
        })
        .collect();
    let mut positive = 0;
    let mut negative = 0;
    let mut zero = 0;
    for k in 0..n {
        if a[k][k].is_zero() {
            // Bring a nonzero entry onto the diagonal by congruence. With
            // a_kk = 0 and a_kj != 0, one of e_k + e_j / e_k - e_j gives the
            // diagonal value a_jj +/- 2 a_kj, and they cannot both vanish.
            match (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                None => {
                    zero += 1;
                    continue;
                }
                Some(j) => {
                    let add_row_col = |a: &mut Vec<Vec<BigRational>>, s: i64| {
                        let s = BigRational::from(BigInt::from(s));
                        for c in 0..n {
                            let v = &a[k][c] + &s * &a[j][c];
                            a[k][c] = v;
                        }
                        for r in 0..n {
                            let v = &a[r][k] + &s * &a[r][j];
                            a[r][k] = v;
                        }
                    };
                    add_row_col(&mut a, 1);
                    if a[k][k].is_zero() {
                        add_row_col(&mut a, -2); // net congruence e_k - e_j
                    }
                    assert!(!a[k][k].is_zero(), "congruence pivot fix-up failed");
                }
            }
        }
        if a[k][k].is_positive() {
            positive += 1;
        } else {
            negative += 1;
        }
        let pivot = a[k][k].clone();
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let factor = &a[r][k] / &pivot;
            for c in 0..n {
                let s = &factor * &a[k][c];
                a[r][c] -= s;
            }
            for c in 0..n {
                let s = &factor * &a[c][k];
                a[c][r] -= s.clone();
            }
        }
    }
    Signature {
        positive,
        negative,
        zero,
    }
}

/// Pairing of two coordinate vectors against a Gram matrix: v^T G w.
pub fn inner(gram: &IntMatrix, v: &RatVector, w: &RatVector) -> BigRational {
    let gw = gram.apply(w);
    (0..v.dim()).map(|i| v.get(i) * gw.get(i)).sum()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The isotropic-sequence model: basis (f_1, ..., f_10) with Gram having
/// zero diagonal and off-diagonal ones.
#[derive(Clone, Debug)]
pub struct FBasisModel {
    gram: IntMatrix,
    delta: RatVector,
    f10: RatVector,
}

impl FBasisModel {
    /// Build and self-validate the model.
    pub fn build() -> FBasisModel {
        let gram = IntMatrix::from_fn(10, |r, c| {
            if r == c {
                BigInt::zero()
            } else {
                BigInt::one()
            }
        });
        let delta = RatVector::from_fn(10, |_| rat(1, 3));
        let f10 = RatVector::unit(10, 9);
        let model = FBasisModel { gram, delta, f10 };
        model.validate();
        model
    }

    fn validate(&self) {
        let ten = BigRational::from(BigInt::from(10));
        let three = BigRational::from(BigInt::from(3));
        let one = BigRational::one();
        for i in 0..10 {
            let fi = self.f(i + 1);
            assert!(self.inner(&fi, &fi).is_zero(), "(f_i, f_i) must vanish");
            assert_eq!(self.inner(&self.delta, &fi), three, "(delta, f_i) = 3");
            for j in 0..i {
                assert_eq!(self.inner(&fi, &self.f(j + 1)), one, "(f_i, f_j) = 1");
            }
        }
        assert_eq!(self.inner(&self.delta, &self.delta), ten, "delta^2 = 10");
        // f_10 = 3 delta - f_1 - ... - f_9
        let mut acc = self.delta.scale(&three);
        for i in 1..=9 {
            acc = acc.sub(&self.f(i));
        }
        assert_eq!(acc, self.f10, "f_10 = 3 delta - f_1 - ... - f_9");
        let sig = signature(&self.gram);
        assert_eq!(
            sig,
            Signature {
                positive: 1,
                negative: 9,
                zero: 0
            },
            "f-basis gram must have signature (1,9)"
        );
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    /// Basis vector f_i, 1-based.
    pub fn f(&self, i: usize) -> RatVector {
        assert!((1..=10).contains(&i), "f index must be in 1..=10");
        RatVector::unit(10, i - 1)
    }

    pub fn delta(&self) -> &RatVector {
        &self.delta
    }

    pub fn f10(&self) -> &RatVector {
        &self.f10
    }

    pub fn inner(&self, v: &RatVector, w: &RatVector) -> BigRational {
        inner(&self.gram, v, w)
    }

    /// Nodal class r_{i,i+1} = f_i + f_{i+1} - f_{10-i+1}, for i in 1..=4.
    pub fn nodal_class(&self, i: usize) -> Result<NodalClass> {
        if !(1..=4).contains(&i) {
            return Err(Error::InvalidIndex(format!(
                "nodal class index {i} must be in 1..=4"
            )));
        }
        let coords = self.f(i).add(&self.f(i + 1)).sub(&self.f(10 - i + 1));
        let minus_two = -BigRational::from(BigInt::from(2));
        assert_eq!(self.inner(&coords, &coords), minus_two);
        assert!(self.inner(&coords, &self.f(i)).is_zero());
        assert!(self.inner(&coords, &self.f(i + 1)).is_zero());
        Ok(NodalClass { index: i, coords })
    }

    /// Simple roots of the T-shaped reflection-group diagram. Informational
    /// only; no construction in this crate consumes them.
    pub fn simple_roots(&self) -> Vec<RatVector> {
        let mut roots = Vec::with_capacity(10);
        let alpha0 = self.delta.sub(&self.f(1)).sub(&self.f(2)).sub(&self.f(3));
        roots.push(alpha0);
        for i in 1..=9 {
            roots.push(self.f(i).sub(&self.f(i + 1)));
        }
        roots
    }
}

/// The Petersen-graph model on the ten classes U_ab.
#[derive(Clone, Debug)]
pub struct PetersenModel {
    gram: IntMatrix,
    f_coords: Vec<RatVector>,
    alpha_coords: Vec<RatVector>,
    delta: RatVector,
}

impl PetersenModel {
    /// Build the model and assert every pairing identity: Petersen Gram with
    /// determinant -256 and signature (1,9), the isotropic 10-sequence f_ab,
    /// the elliptic-pencil relations (f_ab, U_cd) = [pairs disjoint], and the
    /// anti-Petersen pattern of the roots alpha_ab.
    pub fn build() -> PetersenModel {
        let gram = IntMatrix::from_fn(10, |r, c| {
            if r == c {
                BigInt::from(-2)
            } else if Pair::from_index(r).is_disjoint(&Pair::from_index(c)) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        assert_eq!(gram.det(), BigInt::from(-256), "Petersen gram determinant");
        assert_eq!(
            signature(&gram),
            Signature {
                positive: 1,
                negative: 9,
                zero: 0
            },
            "Petersen gram must have signature (1,9)"
        );

        // f_ab is pinned by the pairing prescription (f_ab, U_cd) = 1 exactly
        // when the pairs are disjoint; solve the Gram system for each pair.
        let f_coords: Vec<RatVector> = (0..10)
            .map(|i| {
                let pair = Pair::from_index(i);
                let rhs = RatVector::from_fn(10, |j| {
                    if Pair::from_index(j).is_disjoint(&pair) {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                });
                solve_rational(&gram, &rhs).expect("Petersen gram is invertible")
            })
            .collect();
        let alpha_coords: Vec<RatVector> = (0..10)
            .map(|i| f_coords[i].sub(&RatVector::unit(10, i)))
            .collect();
        let delta = RatVector::from_fn(10, |_| BigRational::one());

        let model = PetersenModel {
            gram,
            f_coords,
            alpha_coords,
            delta,
        };
        model.validate();
        model
    }

    fn validate(&self) {
        let one = BigRational::one();
        let ten = BigRational::from(BigInt::from(10));
        let three = BigRational::from(BigInt::from(3));
        let minus_two = -BigRational::from(BigInt::from(2));
        for i in 0..10 {
            let pi = Pair::from_index(i);
            let fi = &self.f_coords[i];
            let ai = &self.alpha_coords[i];
            assert!(self.inner(fi, fi).is_zero(), "(f_ab, f_ab) = 0");
            assert_eq!(self.inner(ai, ai), minus_two, "(alpha_ab, alpha_ab) = -2");
            assert_eq!(
                self.inner(&self.delta, &self.u(i)),
                one,
                "(delta, U_ab) = 1"
            );
            for j in 0..10 {
                let pj = Pair::from_index(j);
                let expected_fu = if pi.is_disjoint(&pj) {
                    one.clone()
                } else {
                    BigRational::zero()
                };
                assert_eq!(self.inner(fi, &self.u(j)), expected_fu, "(f_ab, U_cd)");
                if i != j {
                    assert_eq!(self.inner(fi, &self.f_coords[j]), one, "(f_ab, f_cd) = 1");
                    let expected_aa = if pi.shares_one(&pj) {
                        one.clone()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(
                        self.inner(ai, &self.alpha_coords[j]),
                        expected_aa,
                        "anti-Petersen pairing"
                    );
                }
                // every model pairing must be an integer even when the
                // coordinates are rational
                assert!(
                    self.inner(fi, &self.f_coords[j]).is_integer(),
                    "model pairings are integral"
                );
            }
        }
        assert_eq!(self.inner(&self.delta, &self.delta), ten, "delta^2 = 10");
        // sum of the f_ab equals 3 delta
        let mut acc = RatVector::zero(10);
        for f in &self.f_coords {
            acc = acc.add(f);
        }
        assert_eq!(acc, self.delta.scale(&three), "sum f_ab = 3 delta");
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn pairs(&self) -> [Pair; 10] {
        std::array::from_fn(Pair::from_index)
    }

    /// Basis vector U at a 0-based position in the fixed pair order.
    pub fn u(&self, index: usize) -> RatVector {
        RatVector::unit(10, index)
    }

    pub fn u_of(&self, pair: Pair) -> RatVector {
        self.u(pair.index())
    }

    /// Isotropic class f_ab of the elliptic pencil through the pair.
    pub fn f_of(&self, pair: Pair) -> &RatVector {
        &self.f_coords[pair.index()]
    }

    /// Root alpha_ab = f_ab - U_ab.
    pub fn alpha_of(&self, pair: Pair) -> &RatVector {
        &self.alpha_coords[pair.index()]
    }

    pub fn delta(&self) -> &RatVector {
        &self.delta
    }

    pub fn inner(&self, v: &RatVector, w: &RatVector) -> BigRational {
        inner(&self.gram, v, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_model_invariants() {
        let m = FBasisModel::build();
        let one = BigRational::one();
        assert_eq!(m.inner(&m.f(1), &m.f(2)), one);
        assert_eq!(
            m.inner(m.delta(), m.delta()),
            BigRational::from(BigInt::from(10))
        );
        // (f_10, f_1) = 1 through the expansion 3 delta - f_1 - ... - f_9
        assert_eq!(m.inner(m.f10(), &m.f(1)), one);
    }

    #[test]
    fn petersen_model_examples() {
        let m = PetersenModel::build();
        let u12 = m.u_of(Pair::new(1, 2).unwrap());
        let u34 = m.u_of(Pair::new(3, 4).unwrap());
        let u13 = m.u_of(Pair::new(1, 3).unwrap());
        assert_eq!(m.inner(&u12, &u34), BigRational::one());
        assert!(m.inner(&u12, &u13).is_zero());
        let f12 = m.f_of(Pair::new(1, 2).unwrap());
        let f34 = m.f_of(Pair::new(3, 4).unwrap());
        assert_eq!(m.inner(f12, f34), BigRational::one());
        // frozen coordinates: f_12 = (U_13+U_14+U_15+U_23+U_24+U_25)/2
        let expect = RatVector::new(
            [0, 1, 1, 1, 1, 1, 1, 0, 0, 0]
                .iter()
                .map(|&n| BigRational::new(BigInt::from(n), BigInt::from(2)))
                .collect(),
        );
        assert_eq!(f12, &expect);
    }

    #[test]
    fn alpha_pairings_follow_anti_petersen_pattern() {
        let m = PetersenModel::build();
        let a12 = m.alpha_of(Pair::new(1, 2).unwrap());
        let a45 = m.alpha_of(Pair::new(4, 5).unwrap());
        let a13 = m.alpha_of(Pair::new(1, 3).unwrap());
        assert_eq!(m.inner(a12, a12), -BigRational::from(BigInt::from(2)));
        assert!(m.inner(a12, a45).is_zero());
        assert_eq!(m.inner(a12, a13), BigRational::one());
    }

    #[test]
    fn signature_counts_multiplicity() {
        let neg3 = IntMatrix::from_rows(&[vec![-1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]]);
        assert_eq!(
            signature(&neg3),
            Signature {
                positive: 0,
                negative: 3,
                zero: 0
            }
        );
        let degenerate = IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]);
        assert_eq!(
            signature(&degenerate),
            Signature {
                positive: 1,
                negative: 0,
                zero: 1
            }
        );
        // hyperbolic plane: eigenvalues +1 and -1
        let u = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            signature(&u),
            Signature {
                positive: 1,
                negative: 1,
                zero: 0
            }
        );
        // zero diagonal with the -2/1 pattern that defeats a single fix-up
        let tricky = IntMatrix::from_rows(&[vec![0, 1], vec![1, -2]]);
        assert_eq!(
            signature(&tricky),
            Signature {
                positive: 1,
                negative: 1,
                zero: 0
            }
        );
    }

    #[test]
    fn nodal_classes_are_minus_two_curves() {
        let m = FBasisModel::build();
        for i in 1..=4 {
            let r = m.nodal_class(i).unwrap();
            assert_eq!(
                m.inner(&r.coords, &r.coords),
                -BigRational::from(BigInt::from(2))
            );
        }
        assert!(m.nodal_class(5).is_err());
    }

    #[test]
    fn simple_roots_have_square_minus_two() {
        let m = FBasisModel::build();
        for root in m.simple_roots() {
            assert_eq!(m.inner(&root, &root), -BigRational::from(BigInt::from(2)));
        }
    }
}
