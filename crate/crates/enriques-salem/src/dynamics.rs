//! Word composition, Salem analysis, search and orbit growth.
//!
//! A word is a sequence of 1-based indices into a fixed generator list; it
//! realizes the product of the generator matrices in word order, acting on
//! column vectors. Analysis composes the word, takes the characteristic
//! polynomial, strips cyclotomic factors and encloses the Salem root.
//!
//! Search deduplicates words by a conjugacy heuristic: free reduction of
//! adjacent equal letters, then the lexicographic minimum over all cyclic
//! rotations of the word and of its reversal. Every generator here is an
//! involution, so the reversed word is the inverse and shares its spectral
//! radius; rotations are conjugate. The heuristic can merge only words with
//! equal dynamical degree, never distinct ones.

use std::collections::{BTreeMap, HashSet};

use num::rational::BigRational;
use num::traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::involutions::{
    experiment_generators, hessian_generators, EckardtConfig, Experiment, InvolutionSpec,
};
use crate::lattice::{FBasisModel, PetersenModel};
use crate::numeric::{IntMatrix, IntPolynomial, RatVector};
use crate::salem::{
    spectral_radius, strip_cyclotomic, Classification, FactorizationReport, SpectralRadius,
};

/// A composition word: 1-based indices into the owning generator list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Word {
        Word { letters }
    }

    pub fn empty() -> Word {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A generator family together with the Gram form it preserves.
pub struct GeneratorSet {
    /// Canonical family label; doubles as the cache configuration digest.
    pub label: String,
    pub gram: IntMatrix,
    pub generators: Vec<InvolutionSpec>,
    /// The polarization class of square 10 in this family's coordinates.
    pub delta: RatVector,
}

impl GeneratorSet {
    /// Double-plane compositions over the isotropic-sequence model.
    pub fn experiment(experiment: Experiment) -> Result<GeneratorSet> {
        let model = FBasisModel::build();
        let generators = experiment_generators(&model, experiment)?;
        let label = match experiment {
            Experiment::One => "exp1".to_string(),
            Experiment::Two(m) => format!("exp2:{m}"),
        };
        Ok(GeneratorSet {
            label,
            gram: model.gram().clone(),
            generators,
            delta: model.delta().clone(),
        })
    }

    /// Projection involutions over the Petersen model.
    pub fn hessian(config: &EckardtConfig) -> GeneratorSet {
        let model = PetersenModel::build();
        let generators = hessian_generators(&model, config);
        let label = match config {
            EckardtConfig::None => "hessian".to_string(),
            EckardtConfig::Standard6 => "hessian:table2".to_string(),
            EckardtConfig::Pairs(pairs) => {
                let parts: Vec<String> = pairs.iter().map(|p| p.to_string()).collect();
                format!("hessian:{}", parts.join(","))
            }
        };
        GeneratorSet {
            label,
            gram: model.gram().clone(),
            generators,
            delta: model.delta().clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn validate_word(&self, word: &Word) -> Result<()> {
        for &letter in word.letters() {
            if letter == 0 || letter > self.generators.len() {
                return Err(Error::LetterOutOfRange {
                    letter,
                    count: self.generators.len(),
                });
            }
        }
        Ok(())
    }

    /// Matrix realized by a word: the product of generator matrices in word
    /// order, acting on column vectors. The empty word is the identity.
    pub fn compose(&self, word: &Word) -> Result<IntMatrix> {
        self.validate_word(word)?;
        let dim = self.gram.dim();
        let mut m = IntMatrix::identity(dim);
        for &letter in word.letters() {
            m = m.mul(&self.generators[letter - 1].matrix);
        }
        Ok(m)
    }
}

/// Full analysis of one word: characteristic polynomial, cyclotomic/Salem
/// split, and a certified spectral radius when a Salem factor is present.
#[derive(Clone, Debug)]
pub struct SalemReport {
    pub word: Word,
    pub char_poly: IntPolynomial,
    pub factorization: FactorizationReport,
    /// Degree of the Salem factor; 0 when there is none.
    pub salem_degree: usize,
    /// Present exactly when the classification is Salem.
    pub lambda: Option<SpectralRadius>,
}

impl SalemReport {
    pub fn classification(&self) -> Classification {
        self.factorization.classification
    }

    pub fn salem_factor(&self) -> Option<&IntPolynomial> {
        self.factorization.salem_factor()
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.lambda.is_some()
    }
}

/// Compose, factor and enclose: the whole pipeline for one word.
pub fn analyze(generators: &GeneratorSet, word: &Word) -> Result<SalemReport> {
    let matrix = generators.compose(word)?;
    let char_poly = matrix.char_poly();
    let factorization = strip_cyclotomic(&char_poly);
    let (salem_degree, lambda) = match factorization.classification {
        Classification::Salem => {
            let degree = factorization
                .residual
                .degree()
                .expect("Salem residual is nonzero");
            let sr = spectral_radius(&factorization.residual)
                .expect("classified Salem residual has a spectral radius");
            (degree, Some(sr))
        }
        _ => (0, None),
    };
    Ok(SalemReport {
        word: word.clone(),
        char_poly,
        factorization,
        salem_degree,
        lambda,
    })
}

/// Canonical representative of the conjugacy-heuristic class of a word:
/// free reduction of adjacent equal letters (involutions cancel), cyclic
/// reduction of matching first/last letters (conjugation), then the
/// lexicographic minimum over all rotations of the word and of its
/// reversal. Rotations, reversal and both reductions preserve the dynamical
/// degree, so merged words always share their Salem data.
pub fn canonical_form(word: &Word) -> Word {
    // stack-based reduction handles cascading cancellations
    let mut reduced: Vec<usize> = Vec::with_capacity(word.len());
    for &letter in word.letters() {
        if reduced.last() == Some(&letter) {
            reduced.pop();
        } else {
            reduced.push(letter);
        }
    }
    // cyclic reduction: a w a is conjugate to w for an involution letter a
    while reduced.len() >= 2 && reduced.first() == reduced.last() {
        reduced.pop();
        reduced.remove(0);
    }
    if reduced.is_empty() {
        return Word::empty();
    }
    let n = reduced.len();
    let mut best: Option<Vec<usize>> = None;
    let mut consider = |candidate: &[usize]| {
        for shift in 0..n {
            let rotated: Vec<usize> = (0..n).map(|i| candidate[(i + shift) % n]).collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    };
    consider(&reduced);
    let reversed: Vec<usize> = reduced.iter().rev().copied().collect();
    consider(&reversed);
    Word::new(best.expect("nonempty word has a canonical form"))
}

/// Resource guard for searches and growth counting.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Maximum number of analyzed canonical classes (search) or distinct
    /// group elements (growth) before aborting cleanly.
    pub word_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            word_budget: 10_000_000,
        }
    }
}

/// Outcome of a search: per-degree minima and bookkeeping.
pub struct SearchSummary {
    /// Smallest spectral radius seen for each Salem degree.
    pub minima: BTreeMap<usize, SalemReport>,
    /// Number of words enumerated or sampled.
    pub words_examined: u64,
    /// Number of distinct canonical classes analyzed.
    pub dedup_classes: u64,
    /// Seed used for randomized search.
    pub seed: Option<u64>,
    /// True when the analysis budget aborted the run early.
    pub budget_exhausted: bool,
    /// Words whose residual was neither trivial nor Salem. Empty for
    /// genuine isometry families; kept so that such cases are never
    /// silently dropped.
    pub anomalies: Vec<Word>,
}

/// True when `a` encloses a strictly smaller value than `b`. Enclosures of
/// width 1e-12 around distinct Salem numbers of this scale never overlap;
/// overlapping enclosures are treated as equal.
fn lambda_less(a: &SpectralRadius, b: &SpectralRadius) -> bool {
    a.upper < b.lower
}

struct SearchState {
    minima: BTreeMap<usize, SalemReport>,
    seen: HashSet<Vec<usize>>,
    words_examined: u64,
    dedup_classes: u64,
    budget_exhausted: bool,
    anomalies: Vec<Word>,
}

impl SearchState {
    fn new() -> SearchState {
        SearchState {
            minima: BTreeMap::new(),
            seen: HashSet::new(),
            words_examined: 0,
            dedup_classes: 0,
            budget_exhausted: false,
            anomalies: Vec::new(),
        }
    }

    /// Returns false once the budget is exhausted.
    fn offer(
        &mut self,
        generators: &GeneratorSet,
        word: &Word,
        limits: &SearchLimits,
    ) -> Result<bool> {
        self.words_examined += 1;
        let canon = canonical_form(word);
        if canon.is_empty() || !self.seen.insert(canon.letters().to_vec()) {
            return Ok(true);
        }
        if self.dedup_classes >= limits.word_budget {
            self.budget_exhausted = true;
            return Ok(false);
        }
        self.dedup_classes += 1;
        let report = analyze(generators, &canon)?;
        match report.classification() {
            Classification::Salem => {
                let degree = report.salem_degree;
                debug_assert!(degree % 2 == 0 && degree <= generators.gram.dim());
                let lambda = report.lambda.as_ref().expect("Salem report has lambda");
                let better = match self.minima.get(&degree) {
                    None => true,
                    Some(current) => lambda_less(
                        lambda,
                        current.lambda.as_ref().expect("stored minima are Salem"),
                    ),
                };
                if better {
                    self.minima.insert(degree, report);
                }
            }
            Classification::Anomalous => self.anomalies.push(report.word.clone()),
            Classification::AllCyclotomic => {}
        }
        Ok(true)
    }

    fn finish(self, seed: Option<u64>) -> SearchSummary {
        SearchSummary {
            minima: self.minima,
            words_examined: self.words_examined,
            dedup_classes: self.dedup_classes,
            seed,
            budget_exhausted: self.budget_exhausted,
            anomalies: self.anomalies,
        }
    }
}

/// Enumerate every word up to `max_length` (optionally with pairwise
/// distinct letters), deduplicate by canonical form, analyze one
/// representative per class and keep per-degree minima. Deterministic.
pub fn exhaustive_search(
    generators: &GeneratorSet,
    max_length: usize,
    distinct_letters: bool,
) -> Result<SearchSummary> {
    exhaustive_search_with(
        generators,
        max_length,
        distinct_letters,
        &SearchLimits::default(),
    )
}

pub fn exhaustive_search_with(
    generators: &GeneratorSet,
    max_length: usize,
    distinct_letters: bool,
    limits: &SearchLimits,
) -> Result<SearchSummary> {
    assert!(max_length >= 1, "search length must be at least 1");
    let mut state = SearchState::new();
    let mut prefix: Vec<usize> = Vec::with_capacity(max_length);
    // depth-first enumeration in lexicographic order, shortest words first
    // would reorder; minima do not depend on visit order, and the canonical
    // dedup makes the analyzed set order-independent.
    fn descend(
        generators: &GeneratorSet,
        state: &mut SearchState,
        prefix: &mut Vec<usize>,
        max_length: usize,
        distinct: bool,
        limits: &SearchLimits,
    ) -> Result<bool> {
        for letter in 1..=generators.len() {
            if distinct && prefix.contains(&letter) {
                continue;
            }
            prefix.push(letter);
            let keep_going = state.offer(generators, &Word::new(prefix.clone()), limits)?;
            if !keep_going {
                prefix.pop();
                return Ok(false);
            }
            if prefix.len() < max_length
                && !descend(generators, state, prefix, max_length, distinct, limits)?
            {
                prefix.pop();
                return Ok(false);
            }
            prefix.pop();
        }
        Ok(true)
    }
    descend(
        generators,
        &mut state,
        &mut prefix,
        max_length,
        distinct_letters,
        limits,
    )?;
    Ok(state.finish(None))
}

/// Seeded random sampling of words with the same deduplication and minima
/// bookkeeping as the exhaustive search. Reproducible: identical seeds give
/// identical summaries.
pub fn random_search(
    generators: &GeneratorSet,
    trials: u64,
    max_length: usize,
    seed: u64,
) -> Result<SearchSummary> {
    random_search_with(
        generators,
        trials,
        max_length,
        seed,
        false,
        &SearchLimits::default(),
    )
}

pub fn random_search_with(
    generators: &GeneratorSet,
    trials: u64,
    max_length: usize,
    seed: u64,
    distinct_letters: bool,
    limits: &SearchLimits,
) -> Result<SearchSummary> {
    assert!(trials >= 1, "at least one trial");
    assert!(max_length >= 1, "search length must be at least 1");
    let n = generators.len();
    if distinct_letters && max_length > n {
        return Err(Error::InvalidArgument(format!(
            "distinct-letter words cannot exceed length {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = SearchState::new();
    for _ in 0..trials {
        let length = rng.gen_range(1..=max_length);
        let letters: Vec<usize> = if distinct_letters {
            let mut ids: Vec<usize> = (1..=n).collect();
            let (chosen, _) = ids.partial_shuffle(&mut rng, length);
            chosen.to_vec()
        } else {
            (0..length).map(|_| rng.gen_range(1..=n)).collect()
        };
        if !state.offer(generators, &Word::new(letters), limits)? {
            break;
        }
    }
    Ok(state.finish(Some(seed)))
}

/// Outcome of the orbit-growth count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthSummary {
    /// Number of distinct group elements g with (g(h), h) <= r.
    pub count: u64,
    /// Distinct group elements enumerated in the ball.
    pub elements: u64,
    /// True when the whole radius-`max_length` ball was enumerated; false
    /// when the element budget aborted the walk.
    pub completed: bool,
    /// True when the enumeration closed before reaching `max_length` (the
    /// generated group was exhausted).
    pub group_exhausted: bool,
}

/// Count group elements of degree at most `r` against the polarization `h`:
/// breadth-first enumeration of distinct elements (exact matrix dedup) of
/// word length up to `max_length`, counting those with (g(h), h) <= r.
pub fn growth_count(
    generators: &GeneratorSet,
    h: &RatVector,
    r: &BigRational,
    max_length: usize,
    limits: &SearchLimits,
) -> Result<GrowthSummary> {
    let h_square = crate::lattice::inner(&generators.gram, h, h);
    if !h_square.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "polarization class must have positive square, got {h_square}"
        )));
    }
    let mut visited: HashSet<IntMatrix> = HashSet::new();
    let mut count = 0u64;
    let mut completed = true;
    let mut group_exhausted = false;
    let degree = |m: &IntMatrix| crate::lattice::inner(&generators.gram, &m.apply(h), h);

    let identity = IntMatrix::identity(generators.gram.dim());
    if degree(&identity) <= *r {
        count += 1;
    }
    visited.insert(identity.clone());
    let mut frontier = vec![identity];

    'walk: for _depth in 1..=max_length {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &generators.generators {
                let product = m.mul(&g.matrix);
                if visited.contains(&product) {
                    continue;
                }
                if visited.len() as u64 >= limits.word_budget {
                    completed = false;
                    break 'walk;
                }
                if degree(&product) <= *r {
                    count += 1;
                }
                visited.insert(product.clone());
                next.push(product);
            }
        }
        if next.is_empty() {
            group_exhausted = true;
            break;
        }
        frontier = next;
    }
    Ok(GrowthSummary {
        count,
        elements: visited.len() as u64,
        completed,
        group_exhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;
    use num::traits::One;

    fn hessian_general() -> GeneratorSet {
        GeneratorSet::hessian(&EckardtConfig::None)
    }

    #[test]
    fn empty_word_is_identity() {
        let gens = hessian_general();
        let report = analyze(&gens, &Word::empty()).unwrap();
        // characteristic polynomial (x-1)^10, no Salem factor
        assert_eq!(report.classification(), Classification::AllCyclotomic);
        assert_eq!(report.factorization.cyclotomic_part, vec![(1, 10)]);
        assert_eq!(report.salem_degree, 0);
        assert!(report.lambda.is_none());
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(
            canonical_form(&Word::new(vec![3, 1, 2])),
            Word::new(vec![1, 2, 3])
        );
        assert_eq!(
            canonical_form(&Word::new(vec![1, 2, 2, 3])),
            Word::new(vec![1, 3])
        );
        assert_eq!(canonical_form(&Word::new(vec![5, 5])), Word::empty());
        // rotations and reversal land on the same representative
        let w = canonical_form(&Word::new(vec![2, 6, 1, 3]));
        assert_eq!(w, canonical_form(&Word::new(vec![6, 1, 3, 2])));
        assert_eq!(w, canonical_form(&Word::new(vec![3, 1, 6, 2])));
    }

    #[test]
    fn rotated_and_reversed_words_share_salem_data() {
        let gens = hessian_general();
        let base = Word::new(vec![2, 6, 1, 3]);
        let rotated = Word::new(vec![6, 1, 3, 2]);
        let reversed = Word::new(vec![3, 1, 6, 2]);
        let a = analyze(&gens, &base).unwrap();
        let b = analyze(&gens, &rotated).unwrap();
        let c = analyze(&gens, &reversed).unwrap();
        assert_eq!(a.factorization.residual, b.factorization.residual);
        assert_eq!(a.factorization.residual, c.factorization.residual);
        assert_eq!(a.char_poly, b.char_poly);
        assert_eq!(a.char_poly, c.char_poly);
    }

    #[test]
    fn single_involutions_are_never_hyperbolic() {
        let gens = hessian_general();
        let summary = exhaustive_search(&gens, 1, false).unwrap();
        assert!(summary.minima.is_empty());
        assert_eq!(summary.words_examined, 10);
        assert!(summary.anomalies.is_empty());
    }

    #[test]
    fn single_involution_spectrum_is_plus_minus_one() {
        // eigenvalues of an involution are +/-1, so the characteristic
        // polynomial of each generator is (x-1)^a (x+1)^b with a+b = 10
        let gens = hessian_general();
        for g in &gens.generators {
            let report = strip_cyclotomic(&g.matrix.char_poly());
            assert_eq!(report.classification, Classification::AllCyclotomic);
            let total: u32 = report
                .cyclotomic_part
                .iter()
                .map(|&(n, mult)| {
                    assert!(n == 1 || n == 2);
                    mult
                })
                .sum();
            assert_eq!(total, 10);
        }
    }

    #[test]
    fn composition_c4_factorization_detail() {
        // frozen: c_4 = g_12 g_23 g_34 g_45 over general double planes
        let gens = GeneratorSet::experiment(Experiment::One).unwrap();
        let report = analyze(&gens, &Word::new(vec![1, 2, 3, 4])).unwrap();
        let expect_char =
            IntPolynomial::from_i64(&[1, -18, 61, -56, -62, 148, -62, -56, 61, -18, 1]);
        assert_eq!(report.char_poly, expect_char);
        assert_eq!(report.factorization.cyclotomic_part, vec![(1, 6), (2, 2)]);
        let salem = IntPolynomial::from_i64(&[1, -14, 1]);
        assert_eq!(report.factorization.residual, salem);
        // dividing the characteristic polynomial by the cyclotomic part
        // recovers the Salem factor exactly
        let mut cyclotomic = IntPolynomial::one();
        for &(n, mult) in &report.factorization.cyclotomic_part {
            for _ in 0..mult {
                cyclotomic = &cyclotomic * &crate::salem::cyclotomic(n);
            }
        }
        assert_eq!(report.char_poly.exact_div(&cyclotomic), Some(salem));
    }

    #[test]
    fn word_letter_validation() {
        let gens = hessian_general();
        assert!(matches!(
            analyze(&gens, &Word::new(vec![11])),
            Err(Error::LetterOutOfRange { .. })
        ));
        assert!(matches!(
            analyze(&gens, &Word::new(vec![0])),
            Err(Error::LetterOutOfRange { .. })
        ));
    }

    #[test]
    fn random_search_is_reproducible() {
        let gens = hessian_general();
        let a = random_search(&gens, 50, 4, 7).unwrap();
        let b = random_search(&gens, 50, 4, 7).unwrap();
        assert_eq!(a.words_examined, b.words_examined);
        assert_eq!(a.dedup_classes, b.dedup_classes);
        assert_eq!(
            a.minima.keys().collect::<Vec<_>>(),
            b.minima.keys().collect::<Vec<_>>()
        );
        for (degree, report) in &a.minima {
            let other = &b.minima[degree];
            assert_eq!(report.word, other.word);
            assert_eq!(report.factorization.residual, other.factorization.residual);
        }
        assert_eq!(a.seed, Some(7));
    }

    #[test]
    fn trivial_random_search() {
        let gens = hessian_general();
        let summary = random_search(&gens, 1, 1, 0).unwrap();
        assert_eq!(summary.words_examined, 1);
        assert!(summary.minima.is_empty());
    }

    #[test]
    fn growth_identity_bounds() {
        let gens = hessian_general();
        let model = PetersenModel::build();
        let delta = model.delta().clone();
        let ten = BigRational::from(BigInt::from(10));
        // r below (h, h): not even the identity qualifies
        let below = growth_count(
            &gens,
            &delta,
            &(&ten - BigRational::one()),
            2,
            &SearchLimits::default(),
        )
        .unwrap();
        assert_eq!(below.count, 0);
        // r = (h, h) = 10 counts at least the identity
        let at = growth_count(&gens, &delta, &ten, 2, &SearchLimits::default()).unwrap();
        assert!(at.count >= 1);
        assert!(at.completed);
    }

    #[test]
    fn growth_monotone_in_radius() {
        let gens = hessian_general();
        let model = PetersenModel::build();
        let delta = model.delta().clone();
        let limits = SearchLimits::default();
        let r1 = BigRational::from(BigInt::from(10));
        let r2 = BigRational::from(BigInt::from(40));
        let c1 = growth_count(&gens, &delta, &r1, 3, &limits).unwrap();
        let c2 = growth_count(&gens, &delta, &r2, 3, &limits).unwrap();
        assert!(c1.count <= c2.count);
        assert_eq!(c1.elements, c2.elements);
    }

    #[test]
    fn growth_rejects_negative_square_polarization() {
        let gens = hessian_general();
        // a single U class has square -2
        let u = RatVector::unit(10, 0);
        let r = BigRational::from(BigInt::from(10));
        assert!(matches!(
            growth_count(&gens, &u, &r, 2, &SearchLimits::default()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn budget_aborts_cleanly() {
        let gens = hessian_general();
        let limits = SearchLimits { word_budget: 5 };
        let summary = exhaustive_search_with(&gens, 3, false, &limits).unwrap();
        assert!(summary.budget_exhausted);
        assert_eq!(summary.dedup_classes, 5);
        let model = PetersenModel::build();
        let growth = growth_count(
            &gens,
            model.delta(),
            &BigRational::from(BigInt::from(10)),
            3,
            &limits,
        )
        .unwrap();
        assert!(!growth.completed);
    }
}
