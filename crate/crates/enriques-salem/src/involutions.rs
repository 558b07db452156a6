//! The three families of lattice involutions.
//!
//! Double-plane involutions act on the isotropic-sequence model: the general
//! form negates everything orthogonal to the fixed pencil pair,
//!
//! ```text
//! g_ij(gamma) = -gamma + 2 (gamma, f_i) f_j + 2 (gamma, f_j) f_i
//! ```
//!
//! and the nodal form adds the correction sigma(r) + r for the projection r
//! of gamma onto the sublattice spanned by the common fiber components, with
//! sigma the fiber symmetry acting on the component graph.
//!
//! Projection involutions act on the Petersen model as the reflection in
//! alpha_ab = f_ab - U_ab composed with the index transposition (ab); at an
//! Eckardt degeneration the reflection disappears and only the transposition
//! remains.
//!
//! Every factory asserts that its output squares to the identity and
//! preserves the owning Gram form exactly.

use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{signature, FBasisModel, NodalClass, Pair, PetersenModel};
use crate::numeric::{solve_rational, IntMatrix, RatVector};

/// Connected component shapes of the fiber graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    A,
    D,
    E,
}

/// The deck-transformation action on the components of a connected fiber,
/// as a permutation of the component indices in their graph labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaAction {
    pub graph: GraphKind,
    pub n: usize,
    perm: Vec<usize>,
}

impl SigmaAction {
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }
}

/// Build the fiber symmetry for a component graph:
/// A_n reverses the chain, D_n swaps the fork ends only for odd n,
/// E_6 folds around the branch vertex, E_7 and E_8 are rigid.
pub fn sigma_action(graph: GraphKind, n: usize) -> Result<SigmaAction> {
    let perm: Vec<usize> = match graph {
        GraphKind::A => {
            if n < 1 {
                return Err(Error::InvalidSigma(format!("A_{n} requires n >= 1")));
            }
            (0..n).map(|i| n - 1 - i).collect()
        }
        GraphKind::D => {
            if n < 4 {
                return Err(Error::InvalidSigma(format!("D_{n} requires n >= 4")));
            }
            if n % 2 == 0 {
                (0..n).collect()
            } else {
                // swap d_1 and d_2, fix the rest
                (0..n)
                    .map(|i| match i {
                        0 => 1,
                        1 => 0,
                        other => other,
                    })
                    .collect()
            }
        }
        GraphKind::E => match n {
            6 => {
                // e_1 fixed, e_i -> e_{8-i} for i != 1 (1-based labels)
                (0..6).map(|i| if i == 0 { 0 } else { 6 - i }).collect()
            }
            7 | 8 => (0..n).collect(),
            _ => {
                return Err(Error::InvalidSigma(format!(
                    "E_{n} requires n in {{6,7,8}}"
                )));
            }
        },
    };
    // the action is an involution on each component
    for (i, &p) in perm.iter().enumerate() {
        assert_eq!(perm[p], i, "sigma must be an involution");
    }
    Ok(SigmaAction { graph, n, perm })
}

/// One connected component of the common-fiber sublattice: the classes in
/// graph labeling order together with the symmetry acting on them.
#[derive(Clone, Debug)]
pub struct RootChain {
    pub classes: Vec<RatVector>,
    pub sigma: SigmaAction,
}

impl RootChain {
    pub fn single(class: RatVector) -> RootChain {
        RootChain {
            classes: vec![class],
            sigma: sigma_action(GraphKind::A, 1).expect("A_1 is valid"),
        }
    }
}

/// Symbolic description of a generator along with its realized matrix.
#[derive(Clone, Debug)]
pub struct InvolutionSpec {
    pub family: InvolutionFamily,
    pub matrix: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionFamily {
    GeneralDoublePlane {
        i: usize,
        j: usize,
    },
    NodalDoublePlane {
        i: usize,
        j: usize,
        nodal: Vec<usize>,
    },
    HessianProjection {
        pair: Pair,
        eckardt: bool,
    },
    PencilPairComposition {
        ab: Pair,
        cd: Pair,
    },
}

impl fmt::Display for InvolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionFamily::GeneralDoublePlane { i, j } => write!(f, "g_{i},{j}"),
            InvolutionFamily::NodalDoublePlane { i, j, nodal } => {
                write!(f, "g_{i},{j}[r")?;
                for n in nodal {
                    write!(f, " {n}")?;
                }
                write!(f, "]")
            }
            InvolutionFamily::HessianProjection { pair, eckardt } => {
                if *eckardt {
                    write!(f, "h_{pair}(eckardt)")
                } else {
                    write!(f, "h_{pair}")
                }
            }
            InvolutionFamily::PencilPairComposition { ab, cd } => write!(f, "g_{ab},{cd}"),
        }
    }
}

fn assert_involution_isometry(m: &IntMatrix, gram: &IntMatrix, what: &str) {
    assert!(
        m.mul(m).is_identity(),
        "{what}: matrix must square to identity"
    );
    assert_eq!(
        &m.transpose().mul(gram).mul(m),
        gram,
        "{what}: matrix must preserve the gram form"
    );
}

/// The general double-plane involution on the isotropic-sequence basis:
/// fixes f_i and f_j, sends every other basis vector f_a to 2f_i + 2f_j - f_a.
pub fn general_double_plane(model: &FBasisModel, i: usize, j: usize) -> Result<InvolutionSpec> {
    if !(1..=10).contains(&i) || !(1..=10).contains(&j) || i >= j {
        return Err(Error::InvalidIndex(format!(
            "double plane indices ({i},{j}) must satisfy 1 <= i < j <= 10"
        )));
    }
    let mut m = IntMatrix::zero(10);
    for a in 1..=10 {
        if a == i || a == j {
            m.set(a - 1, a - 1, BigInt::one());
        } else {
            m.set(a - 1, a - 1, BigInt::from(-1));
            m.set(i - 1, a - 1, BigInt::from(2));
            m.set(j - 1, a - 1, BigInt::from(2));
        }
    }
    assert_involution_isometry(&m, model.gram(), "general double plane");
    Ok(InvolutionSpec {
        family: InvolutionFamily::GeneralDoublePlane { i, j },
        matrix: m,
    })
}

/// Core of the decomposition formula: the involution fixing the isotropic
/// vectors `fi`, `fj` (with (fi, fj) = 1) and the invariant part of the
/// common-component sublattice spanned by `chains`, negating the rest.
///
/// For each basis vector gamma the image is
/// `-gamma + 2(gamma,fi) fj + 2(gamma,fj) fi + sigma(r) + r`, where r is the
/// exact orthogonal projection of gamma onto the span of the chains.
pub fn double_plane_matrix(
    gram: &IntMatrix,
    fi: &RatVector,
    fj: &RatVector,
    chains: &[RootChain],
) -> Result<IntMatrix> {
    let dim = gram.dim();
    let inner = |v: &RatVector, w: &RatVector| crate::lattice::inner(gram, v, w);
    if !inner(fi, fi).is_zero() || !inner(fj, fj).is_zero() {
        return Err(Error::InvalidNodalData(
            "pencil classes must be isotropic".into(),
        ));
    }
    if inner(fi, fj) != BigRational::one() {
        return Err(Error::InvalidNodalData(
            "pencil classes must pair to 1".into(),
        ));
    }
    let classes: Vec<&RatVector> = chains.iter().flat_map(|c| c.classes.iter()).collect();
    // block permutation induced by the per-chain symmetries
    let mut sigma: Vec<usize> = Vec::with_capacity(classes.len());
    let mut offset = 0;
    for chain in chains {
        if chain.sigma.perm().len() != chain.classes.len() {
            return Err(Error::InvalidSigma(format!(
                "symmetry acts on {} components but the chain has {}",
                chain.sigma.perm().len(),
                chain.classes.len()
            )));
        }
        for &p in chain.sigma.perm() {
            sigma.push(offset + p);
        }
        offset += chain.classes.len();
    }
    let k = classes.len();
    for class in &classes {
        if !inner(class, fi).is_zero() || !inner(class, fj).is_zero() {
            return Err(Error::InvalidNodalData(
                "common components must be orthogonal to both pencil classes".into(),
            ));
        }
    }
    let r_gram = if k > 0 {
        for r in 0..k {
            for c in 0..k {
                if !inner(classes[r], classes[c]).is_integer() {
                    return Err(Error::InvalidNodalData(
                        "component pairings must be integers".into(),
                    ));
                }
            }
        }
        let g = IntMatrix::from_fn(k, |r, c| inner(classes[r], classes[c]).to_integer());
        let sig = signature(&g);
        if sig.negative != k {
            return Err(Error::InvalidNodalData(format!(
                "component span must be negative definite, got {sig:?}"
            )));
        }
        // the symmetry must preserve the component pairing
        for r in 0..k {
            for c in 0..k {
                if g.get(r, c) != g.get(sigma[r], sigma[c]) {
                    return Err(Error::InvalidNodalData(
                        "symmetry does not preserve the component pairing".into(),
                    ));
                }
            }
        }
        Some(g)
    } else {
        None
    };

    let two = BigRational::from(BigInt::from(2));
    let mut m = IntMatrix::zero(dim);
    for col in 0..dim {
        let gamma = RatVector::unit(dim, col);
        let a = inner(&gamma, fi);
        let b = inner(&gamma, fj);
        let mut image = gamma
            .neg()
            .add(&fj.scale(&(&two * &a)))
            .add(&fi.scale(&(&two * &b)));
        if let Some(g) = &r_gram {
            let rhs = RatVector::from_fn(k, |t| inner(&gamma, classes[t]));
            let coeffs = solve_rational(g, &rhs).expect("negative definite gram is invertible");
            for t in 0..k {
                let c = coeffs.get(t);
                if c.is_zero() {
                    continue;
                }
                image = image.add(&classes[t].scale(c));
                image = image.add(&classes[sigma[t]].scale(c));
            }
        }
        if !image.is_integral() {
            return Err(Error::InvalidNodalData(format!(
                "action on basis vector {col} is not integral"
            )));
        }
        m.set_column(col, &image.to_integers());
    }
    assert_involution_isometry(&m, gram, "double plane involution");
    Ok(m)
}

/// Nodal double-plane involution on the isotropic-sequence model. Each entry
/// of `classes` is one connected component of the blown-down configuration
/// together with its fiber symmetry.
pub fn nodal_double_plane(
    model: &FBasisModel,
    i: usize,
    j: usize,
    classes: &[(NodalClass, SigmaAction)],
) -> Result<InvolutionSpec> {
    if !(1..=10).contains(&i) || !(1..=10).contains(&j) || i >= j {
        return Err(Error::InvalidIndex(format!(
            "double plane indices ({i},{j}) must satisfy 1 <= i < j <= 10"
        )));
    }
    let chains: Vec<RootChain> = classes
        .iter()
        .map(|(class, sigma)| {
            if sigma.perm().len() != 1 {
                return Err(Error::InvalidSigma(
                    "a nodal class is a single component; its action must be A_1".into(),
                ));
            }
            Ok(RootChain {
                classes: vec![class.coords.clone()],
                sigma: sigma.clone(),
            })
        })
        .collect::<Result<_>>()?;
    let matrix = double_plane_matrix(model.gram(), &model.f(i), &model.f(j), &chains)?;
    Ok(InvolutionSpec {
        family: InvolutionFamily::NodalDoublePlane {
            i,
            j,
            nodal: classes.iter().map(|(c, _)| c.index).collect(),
        },
        matrix,
    })
}

/// Projection involution h_ab on the Petersen model.
///
/// Non-degenerate case: the reflection in alpha_ab composed with the basis
/// transposition (ab); the two commute because the transposition fixes
/// alpha_ab. Eckardt case: the bare transposition.
pub fn hessian_projection(model: &PetersenModel, pair: Pair, eckardt: bool) -> InvolutionSpec {
    let dim = 10;
    let (a, b) = (pair.a(), pair.b());
    let mut m = IntMatrix::zero(dim);
    let alpha = model.alpha_of(pair);
    for col in 0..dim {
        let source = Pair::from_index(col);
        let permuted = model.u_of(source.transposed(a, b));
        let image = if eckardt {
            permuted
        } else {
            let pairing = model.inner(&permuted, alpha);
            permuted.add(&alpha.scale(&pairing))
        };
        assert!(image.is_integral(), "projection action must be integral");
        m.set_column(col, &image.to_integers());
    }
    assert_involution_isometry(&m, model.gram(), "projection involution");
    InvolutionSpec {
        family: InvolutionFamily::HessianProjection { pair, eckardt },
        matrix: m,
    }
}

/// The double-plane involution attached to a pair of elliptic pencils on the
/// Petersen model, composed from non-degenerate projection involutions:
/// `h_ab h_cd` for disjoint index pairs, and the single `h_de` with
/// {d,e} the complement of the union for pairs sharing an index.
pub fn derived_g(model: &PetersenModel, ab: Pair, cd: Pair) -> Result<InvolutionSpec> {
    if ab == cd {
        return Err(Error::InvalidIndex("pencil pairs must differ".into()));
    }
    let matrix = if ab.is_disjoint(&cd) {
        let h_ab = hessian_projection(model, ab, false);
        let h_cd = hessian_projection(model, cd, false);
        let m = h_ab.matrix.mul(&h_cd.matrix);
        assert_involution_isometry(&m, model.gram(), "disjoint pencil composition");
        m
    } else {
        let de = complement_pair(ab, cd);
        hessian_projection(model, de, false).matrix
    };
    Ok(InvolutionSpec {
        family: InvolutionFamily::PencilPairComposition { ab, cd },
        matrix,
    })
}

fn complement_pair(ab: Pair, cd: Pair) -> Pair {
    let used: BTreeSet<u8> = [ab.a(), ab.b(), cd.a(), cd.b()].into_iter().collect();
    let rest: Vec<u8> = (1..=5).filter(|v| !used.contains(v)).collect();
    assert_eq!(
        rest.len(),
        2,
        "sharing pairs leave a two-element complement"
    );
    Pair::new(rest[0], rest[1]).expect("complement is a valid pair")
}

/// The same double-plane involution built independently from the
/// decomposition formula, using the common components of the two elliptic
/// pencils as the blown-down sublattice: two chains of two classes for
/// disjoint pairs, and two single classes plus a three-class chain for pairs
/// sharing an index.
pub fn pencil_pair_double_plane(
    model: &PetersenModel,
    ab: Pair,
    cd: Pair,
) -> Result<InvolutionSpec> {
    if ab == cd {
        return Err(Error::InvalidIndex("pencil pairs must differ".into()));
    }
    let u = |x: u8, y: u8| model.u_of(Pair::new(x, y).expect("valid component pair"));
    let chains: Vec<RootChain> = if ab.is_disjoint(&cd) {
        let (a, b) = (ab.a(), ab.b());
        let (c, d) = (cd.a(), cd.b());
        // the four common components split into two swapped two-chains
        vec![
            RootChain {
                classes: vec![u(a, c), u(b, d)],
                sigma: sigma_action(GraphKind::A, 2)?,
            },
            RootChain {
                classes: vec![u(a, d), u(b, c)],
                sigma: sigma_action(GraphKind::A, 2)?,
            },
        ]
    } else {
        let shared = [cd.a(), cd.b()]
            .into_iter()
            .find(|&v| ab.contains(v))
            .expect("pairs share an index");
        let x = if ab.a() == shared { ab.b() } else { ab.a() };
        let y = if cd.a() == shared { cd.b() } else { cd.a() };
        let rest: Vec<u8> = (1..=5)
            .filter(|&v| v != shared && v != x && v != y)
            .collect();
        let (d, e) = (rest[0], rest[1]);
        // five common components: the two pencil-pair classes are fixed,
        // the three-chain folds around U_xy
        vec![
            RootChain::single(model.u_of(ab)),
            RootChain::single(model.u_of(cd)),
            RootChain {
                classes: vec![u(shared, e), u(x, y), u(shared, d)],
                sigma: sigma_action(GraphKind::A, 3)?,
            },
        ]
    };
    let matrix = double_plane_matrix(model.gram(), model.f_of(ab), model.f_of(cd), &chains)?;
    Ok(InvolutionSpec {
        family: InvolutionFamily::PencilPairComposition { ab, cd },
        matrix,
    })
}

/// Which projection involutions degenerate to bare transpositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EckardtConfig {
    /// No degenerate projections (a general surface of this type).
    None,
    /// The six pairs within {1,2,3,4}; the specialization used for the
    /// small-Salem search table.
    Standard6,
    /// An arbitrary set of degenerate pairs.
    Pairs(BTreeSet<Pair>),
}

impl EckardtConfig {
    pub fn is_eckardt(&self, pair: Pair) -> bool {
        match self {
            EckardtConfig::None => false,
            EckardtConfig::Standard6 => pair.a() <= 4 && pair.b() <= 4,
            EckardtConfig::Pairs(set) => set.contains(&pair),
        }
    }

    pub fn eckardt_pairs(&self) -> Vec<Pair> {
        (0..10)
            .map(Pair::from_index)
            .filter(|p| self.is_eckardt(*p))
            .collect()
    }
}

/// All ten projection involutions in the fixed pair order.
pub fn hessian_generators(model: &PetersenModel, config: &EckardtConfig) -> Vec<InvolutionSpec> {
    (0..10)
        .map(|i| {
            let pair = Pair::from_index(i);
            hessian_projection(model, pair, config.is_eckardt(pair))
        })
        .collect()
}

/// The two composition experiments over the isotropic-sequence model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Experiment {
    /// All ten double planes general.
    One,
    /// The first m double planes carry the nodal class r_{i,i+1}; m in 0..=4
    /// (m = 0 reproduces the first experiment).
    Two(u8),
}

/// The generator list g_12, g_23, ..., g_9,10, g_1,10.
pub fn experiment_generators(
    model: &FBasisModel,
    experiment: Experiment,
) -> Result<Vec<InvolutionSpec>> {
    let m = match experiment {
        Experiment::One => 0,
        Experiment::Two(m) => {
            if m > 4 {
                return Err(Error::InvalidIndex(format!(
                    "nodal count {m} must be in 0..=4"
                )));
            }
            m as usize
        }
    };
    (0..10usize)
        .map(|idx| {
            let (i, j) = if idx < 9 { (idx + 1, idx + 2) } else { (1, 10) };
            if idx < m {
                let class = model.nodal_class(idx + 1)?;
                let sigma = sigma_action(GraphKind::A, 1)?;
                nodal_double_plane(model, i, j, &[(class, sigma)])
            } else {
                general_double_plane(model, i, j)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::Signed;

    fn fmodel() -> FBasisModel {
        FBasisModel::build()
    }

    fn pmodel() -> PetersenModel {
        PetersenModel::build()
    }

    fn pair(a: u8, b: u8) -> Pair {
        Pair::new(a, b).unwrap()
    }

    #[test]
    fn sigma_action_cases() {
        assert_eq!(sigma_action(GraphKind::A, 1).unwrap().perm(), &[0]);
        assert_eq!(sigma_action(GraphKind::A, 3).unwrap().perm(), &[2, 1, 0]);
        assert_eq!(sigma_action(GraphKind::D, 4).unwrap().perm(), &[0, 1, 2, 3]);
        assert_eq!(
            sigma_action(GraphKind::D, 5).unwrap().perm(),
            &[1, 0, 2, 3, 4]
        );
        assert_eq!(
            sigma_action(GraphKind::E, 6).unwrap().perm(),
            &[0, 5, 4, 3, 2, 1]
        );
        assert_eq!(
            sigma_action(GraphKind::E, 7).unwrap().perm(),
            &[0, 1, 2, 3, 4, 5, 6]
        );
        assert!(sigma_action(GraphKind::D, 3).is_err());
        assert!(sigma_action(GraphKind::E, 5).is_err());
    }

    #[test]
    fn general_double_plane_images() {
        let model = fmodel();
        let g12 = general_double_plane(&model, 1, 2).unwrap();
        // f_3 -> 2f_1 + 2f_2 - f_3
        let image = g12.matrix.apply(&model.f(3));
        let expect = model
            .f(1)
            .scale(&BigRational::from(BigInt::from(2)))
            .add(&model.f(2).scale(&BigRational::from(BigInt::from(2))))
            .sub(&model.f(3));
        assert_eq!(image, expect);
        // f_1 is fixed
        assert_eq!(g12.matrix.apply(&model.f(1)), model.f(1));
        // delta -> 6f_1 + 6f_2 - delta, and the image still has square 10
        let image = g12.matrix.apply(model.delta());
        let six = BigRational::from(BigInt::from(6));
        let expect = model
            .f(1)
            .scale(&six)
            .add(&model.f(2).scale(&six))
            .sub(model.delta());
        assert_eq!(image, expect);
        assert_eq!(
            model.inner(&image, &image),
            BigRational::from(BigInt::from(10))
        );
    }

    #[test]
    fn nodal_with_empty_class_list_equals_general() {
        let model = fmodel();
        for (i, j) in [(1, 2), (3, 7), (9, 10)] {
            let general = general_double_plane(&model, i, j).unwrap();
            let nodal = nodal_double_plane(&model, i, j, &[]).unwrap();
            assert_eq!(general.matrix, nodal.matrix);
        }
    }

    #[test]
    fn nodal_fixes_its_class_and_negates_orthogonal_vectors() {
        let model = fmodel();
        let class = model.nodal_class(1).unwrap();
        let sigma = sigma_action(GraphKind::A, 1).unwrap();
        let g = nodal_double_plane(&model, 1, 2, &[(class.clone(), sigma)]).unwrap();
        // the nodal class itself is fixed
        assert_eq!(g.matrix.apply(&class.coords), class.coords);
        // a vector orthogonal to f_1, f_2 and the class is negated
        let v = model.f(3).sub(&model.f(4));
        assert!(model.inner(&v, &model.f(1)).is_zero());
        assert!(model.inner(&v, &class.coords).is_zero());
        assert_eq!(g.matrix.apply(&v), v.neg());
    }

    #[test]
    fn nodal_rejects_misplaced_class() {
        let model = fmodel();
        // r_12 is not orthogonal to f_3, so it cannot decorate g_34
        let class = model.nodal_class(1).unwrap();
        let sigma = sigma_action(GraphKind::A, 1).unwrap();
        assert!(nodal_double_plane(&model, 3, 4, &[(class, sigma)]).is_err());
    }

    #[test]
    fn nodal_rejects_degenerate_span() {
        let model = fmodel();
        // the same class twice spans a rank-1 (degenerate) sublattice
        let class = model.nodal_class(1).unwrap();
        let sigma = || sigma_action(GraphKind::A, 1).unwrap();
        let result =
            nodal_double_plane(&model, 1, 2, &[(class.clone(), sigma()), (class, sigma())]);
        assert!(matches!(result, Err(Error::InvalidNodalData(_))));
    }

    #[test]
    fn chains_reject_mislabeled_symmetry() {
        let model = pmodel();
        let u = |a, b| model.u_of(pair(a, b));
        // sigma length must match the chain
        let bad_length = RootChain {
            classes: vec![u(1, 3)],
            sigma: sigma_action(GraphKind::A, 2).unwrap(),
        };
        let result = double_plane_matrix(
            model.gram(),
            model.f_of(pair(1, 2)),
            model.f_of(pair(3, 4)),
            &[bad_length],
        );
        assert!(matches!(result, Err(Error::InvalidSigma(_))));
        // a three-chain listed out of graph order: the end swap does not
        // preserve the pairing (U_13, U_24) = 1 vs (U_14, U_24) = 0
        let out_of_order = RootChain {
            classes: vec![u(1, 3), u(2, 4), u(1, 4)],
            sigma: sigma_action(GraphKind::A, 3).unwrap(),
        };
        let result = double_plane_matrix(
            model.gram(),
            model.f_of(pair(1, 2)),
            model.f_of(pair(3, 4)),
            &[out_of_order],
        );
        assert!(matches!(result, Err(Error::InvalidNodalData(_))));
    }

    #[test]
    fn projection_involution_images() {
        let model = pmodel();
        let h12 = hessian_projection(&model, pair(1, 2), false);
        assert_eq!(
            h12.matrix.apply(&model.u_of(pair(3, 4))),
            model.u_of(pair(3, 4))
        );
        assert_eq!(
            h12.matrix.apply(&model.u_of(pair(1, 3))),
            model.u_of(pair(2, 3))
        );
        // U_12 -> 2 f_12 - U_12
        let expect = model
            .f_of(pair(1, 2))
            .scale(&BigRational::from(BigInt::from(2)))
            .sub(&model.u_of(pair(1, 2)));
        assert_eq!(h12.matrix.apply(&model.u_of(pair(1, 2))), expect);
        // the projection fixes the pencil class f_12
        assert_eq!(
            h12.matrix.apply(model.f_of(pair(1, 2))),
            model.f_of(pair(1, 2)).clone()
        );
    }

    #[test]
    fn eckardt_projection_is_bare_transposition() {
        let model = pmodel();
        let h12 = hessian_projection(&model, pair(1, 2), true);
        assert_eq!(
            h12.matrix.apply(&model.u_of(pair(1, 2))),
            model.u_of(pair(1, 2))
        );
        assert_eq!(
            h12.matrix.apply(&model.u_of(pair(1, 3))),
            model.u_of(pair(2, 3))
        );
    }

    #[test]
    fn derived_g_examples() {
        let model = pmodel();
        let g = derived_g(&model, pair(1, 2), pair(3, 4)).unwrap();
        assert!(g.matrix.mul(&g.matrix).is_identity());
        let h45 = hessian_projection(&model, pair(4, 5), false);
        let g_sharing = derived_g(&model, pair(1, 2), pair(2, 3)).unwrap();
        assert_eq!(g_sharing.matrix, h45.matrix);
        assert!(derived_g(&model, pair(1, 2), pair(1, 2)).is_err());
    }

    #[test]
    fn pencil_pair_double_plane_matches_composition() {
        let model = pmodel();
        // one disjoint and one sharing example; the full 45-case comparison
        // runs in the acceptance suite
        let dp = pencil_pair_double_plane(&model, pair(1, 2), pair(3, 4)).unwrap();
        let comp = derived_g(&model, pair(1, 2), pair(3, 4)).unwrap();
        assert_eq!(dp.matrix, comp.matrix);
        let dp = pencil_pair_double_plane(&model, pair(1, 2), pair(2, 3)).unwrap();
        let comp = derived_g(&model, pair(1, 2), pair(2, 3)).unwrap();
        assert_eq!(dp.matrix, comp.matrix);
    }

    #[test]
    fn experiment_generator_shapes() {
        let model = fmodel();
        let one = experiment_generators(&model, Experiment::One).unwrap();
        assert_eq!(one.len(), 10);
        for g in &one {
            assert!(matches!(
                g.family,
                InvolutionFamily::GeneralDoublePlane { .. }
            ));
        }
        let two = experiment_generators(&model, Experiment::Two(3)).unwrap();
        let nodal_count = two
            .iter()
            .filter(|g| matches!(g.family, InvolutionFamily::NodalDoublePlane { .. }))
            .count();
        assert_eq!(nodal_count, 3);
        // m = 0 reproduces the first experiment
        let zero = experiment_generators(&model, Experiment::Two(0)).unwrap();
        for (a, b) in one.iter().zip(zero.iter()) {
            assert_eq!(a.matrix, b.matrix);
        }
        assert!(experiment_generators(&model, Experiment::Two(5)).is_err());
    }

    #[test]
    fn all_generators_have_unit_determinant() {
        let fm = fmodel();
        let pm = pmodel();
        for g in experiment_generators(&fm, Experiment::Two(2)).unwrap() {
            assert!(g.matrix.det().abs().is_one());
        }
        for g in hessian_generators(&pm, &EckardtConfig::Standard6) {
            assert!(g.matrix.det().abs().is_one());
        }
    }
}
