//! Command-line surface: experiment tables, word analysis, search and
//! growth counting, with JSON/CSV/text output and an append-only result
//! cache.
//!
//! Exit codes: 0 on success, 2 on flag or argument errors, 3 when a search
//! or growth run aborts on its word budget.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write as _};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;
use num::rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::dynamics::{
    analyze, canonical_form, exhaustive_search_with, growth_count, random_search_with,
    GeneratorSet, GrowthSummary, SalemReport, SearchLimits, SearchSummary, Word,
};
use crate::error::{Error, Result};
use crate::involutions::{EckardtConfig, Experiment};
use crate::lattice::Pair;
use crate::numeric::RatVector;
use crate::salem::decimal_string;

#[derive(Parser)]
#[command(
    name = "enriques-salem",
    version,
    about = "Exact Salem-number computations for rank-10 lattice automorphisms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Append-only JSON-lines cache of word reports.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Salem data of the prefix compositions c_2..c_10 of general
    /// double-plane involutions.
    Experiment1,
    /// The same compositions with the first m double planes carrying a
    /// nodal class.
    Experiment2 {
        /// Number of nodal double planes, 1..=4.
        #[arg(long)]
        m: u8,
    },
    /// Analyze one word of projection involutions ("hessian" families).
    Hessian {
        /// Comma-separated 1-based indices into the pair order
        /// 12,13,14,15,23,24,25,34,35,45.
        #[arg(long, value_delimiter = ',', required = true)]
        word: Vec<usize>,
        /// Degenerate projections: "none", "table2", or a comma-separated
        /// pair list such as "12,13,34".
        #[arg(long, default_value = "none")]
        eckardt: String,
    },
    /// Search for small Salem numbers per degree.
    Search {
        /// Generator family: exp1 | exp2:<m> | hessian | hessian:table2 |
        /// hessian:<pairs>.
        #[arg(long)]
        family: String,
        #[arg(long, value_enum)]
        mode: SearchMode,
        #[arg(long = "max-len")]
        max_len: usize,
        /// Restrict to words with pairwise distinct letters.
        #[arg(long)]
        distinct: bool,
        /// Number of sampled words (random mode only).
        #[arg(long)]
        trials: Option<u64>,
        /// RNG seed (random mode only; defaults to 0).
        #[arg(long)]
        seed: Option<u64>,
        /// Analyzed-word budget before aborting with exit code 3.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Count group elements g with (g(h), h) <= r up to a word length.
    Growth {
        /// Generator family, as for search.
        #[arg(long)]
        family: String,
        /// Polarization class: "delta" or comma-separated rational
        /// coordinates.
        #[arg(long)]
        h: String,
        /// Degree bound, an exact rational such as "10" or "21/2".
        #[arg(long)]
        r: String,
        #[arg(long = "max-len")]
        max_len: usize,
        /// Element budget before aborting with exit code 3.
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchMode {
    Exhaustive,
    Random,
}

/// JSON schema for one analyzed word. Coefficients are decimal strings in
/// ascending degree order (arbitrary precision); lambda bounds are exact
/// rationals rendered as "p/q".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub word: Vec<usize>,
    pub family: String,
    pub char_poly: Vec<String>,
    pub cyclotomic: Vec<(u32, u32)>,
    pub salem: Option<Vec<String>>,
    pub lambda: Option<LambdaJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaJson {
    pub lower: String,
    pub upper: String,
    pub display: String,
}

impl ReportJson {
    pub fn from_report(report: &SalemReport, family: &str) -> ReportJson {
        ReportJson {
            word: report.word.letters().to_vec(),
            family: family.to_string(),
            char_poly: report
                .char_poly
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            cyclotomic: report.factorization.cyclotomic_part.clone(),
            salem: report
                .salem_factor()
                .map(|p| p.coeffs().iter().map(|c| c.to_string()).collect()),
            lambda: report.lambda.as_ref().map(|sr| LambdaJson {
                lower: sr.lower.to_string(),
                upper: sr.upper.to_string(),
                display: sr.decimal_hint.clone(),
            }),
        }
    }

    fn lambda_rational(&self) -> Option<BigRational> {
        let lambda = self.lambda.as_ref()?;
        let lower = BigRational::from_str(&lambda.lower).ok()?;
        let upper = BigRational::from_str(&lambda.upper).ok()?;
        Some((lower + upper) / BigRational::from(BigInt::from(2)))
    }

    /// The 4-decimal dynamical degree; 1.0000 for non-hyperbolic words.
    pub fn lambda_display_4(&self) -> String {
        match self.lambda_rational() {
            Some(mid) => decimal_string(&mid, 4),
            None => "1.0000".to_string(),
        }
    }

    fn salem_pretty(&self) -> String {
        let Some(coeffs) = &self.salem else {
            return "-".to_string();
        };
        let parsed: Option<Vec<_>> = coeffs.iter().map(|c| c.parse().ok()).collect();
        match parsed {
            Some(parsed) => crate::numeric::IntPolynomial::from_coeffs(parsed).pretty("x"),
            // tolerate hand-edited cache entries
            None => coeffs.join(" "),
        }
    }
}

/// Append-only JSON-lines cache keyed by family label and canonical word.
/// Unparseable lines are skipped (corrupt caches rebuild incrementally).
struct ReportCache {
    path: PathBuf,
    entries: HashMap<(String, Vec<usize>), ReportJson>,
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    family: String,
    word: Vec<usize>,
    report: ReportJson,
}

impl ReportCache {
    fn load(path: &Path) -> ReportCache {
        let mut entries = HashMap::new();
        if let Ok(file) = std::fs::File::open(path) {
            for line in BufReader::new(file).lines().map_while(|l| l.ok()) {
                if let Ok(entry) = serde_json::from_str::<CacheLine>(&line) {
                    entries.insert((entry.family, entry.word), entry.report);
                }
            }
        }
        ReportCache {
            path: path.to_path_buf(),
            entries,
        }
    }

    fn get(&self, family: &str, canonical: &Word) -> Option<&ReportJson> {
        self.entries
            .get(&(family.to_string(), canonical.letters().to_vec()))
    }

    fn put(&mut self, family: &str, canonical: &Word, report: &ReportJson) {
        let key = (family.to_string(), canonical.letters().to_vec());
        if self.entries.contains_key(&key) {
            return;
        }
        self.entries.insert(key, report.clone());
        let line = CacheLine {
            family: family.to_string(),
            word: canonical.letters().to_vec(),
            report: report.clone(),
        };
        if let Ok(mut file) = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
        {
            if let Ok(json) = serde_json::to_string(&line) {
                let _ = writeln!(file, "{json}");
            }
        }
    }
}

/// Analyze a word through the cache: hits are returned verbatim (with the
/// word field rewritten to the requested spelling), misses are computed and
/// appended. Numerical results never depend on the cache state.
fn analyze_cached(
    generators: &GeneratorSet,
    word: &Word,
    cache: &mut Option<ReportCache>,
) -> Result<ReportJson> {
    let canonical = canonical_form(word);
    if let Some(c) = cache {
        if let Some(hit) = c.get(&generators.label, &canonical) {
            let mut report = hit.clone();
            report.word = word.letters().to_vec();
            return Ok(report);
        }
    }
    let report = analyze(generators, word)?;
    let mut json = ReportJson::from_report(&report, &generators.label);
    if let Some(c) = cache {
        let mut stored = json.clone();
        stored.word = canonical.letters().to_vec();
        c.put(&generators.label, &canonical, &stored);
    }
    json.word = word.letters().to_vec();
    Ok(json)
}

pub fn parse_eckardt(spec: &str) -> Result<EckardtConfig> {
    match spec {
        "none" => Ok(EckardtConfig::None),
        "table2" => Ok(EckardtConfig::Standard6),
        other => {
            let mut pairs = BTreeSet::new();
            for part in other.split(',') {
                pairs.insert(Pair::parse(part)?);
            }
            Ok(EckardtConfig::Pairs(pairs))
        }
    }
}

pub fn parse_family(spec: &str) -> Result<GeneratorSet> {
    if spec == "exp1" {
        return GeneratorSet::experiment(Experiment::One);
    }
    if let Some(m) = spec.strip_prefix("exp2:") {
        let m: u8 = m
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad nodal count in {spec:?}")))?;
        return GeneratorSet::experiment(Experiment::Two(m));
    }
    if spec == "hessian" {
        return Ok(GeneratorSet::hessian(&EckardtConfig::None));
    }
    if let Some(rest) = spec.strip_prefix("hessian:") {
        return Ok(GeneratorSet::hessian(&parse_eckardt(rest)?));
    }
    Err(Error::InvalidArgument(format!(
        "unknown family {spec:?}; expected exp1, exp2:<m>, or hessian[:eckardt]"
    )))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim())
        .map_err(|_| Error::InvalidArgument(format!("cannot parse rational {s:?}")))
}

fn parse_h(spec: &str, generators: &GeneratorSet) -> Result<RatVector> {
    if spec == "delta" {
        return Ok(generators.delta.clone());
    }
    let entries: Vec<BigRational> = spec.split(',').map(parse_rational).collect::<Result<_>>()?;
    if entries.len() != generators.gram.dim() {
        return Err(Error::InvalidArgument(format!(
            "polarization needs {} coordinates, got {}",
            generators.gram.dim(),
            entries.len()
        )));
    }
    Ok(RatVector::new(entries))
}

/// Run a parsed invocation, writing to stdout. Returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            if outcome.budget_exhausted {
                3
            } else {
                0
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

pub struct Outcome {
    pub output: String,
    pub budget_exhausted: bool,
}

fn execute(cli: Cli) -> Result<Outcome> {
    let mut cache = cli.cache.as_deref().map(ReportCache::load);
    match cli.command {
        Command::Experiment1 => experiment_rows(Experiment::One, cli.format, &mut cache),
        Command::Experiment2 { m } => {
            if !(1..=4).contains(&m) {
                return Err(Error::InvalidArgument(format!(
                    "m must be in 1..=4, got {m}"
                )));
            }
            experiment_rows(Experiment::Two(m), cli.format, &mut cache)
        }
        Command::Hessian { word, eckardt } => {
            let config = parse_eckardt(&eckardt)?;
            let generators = GeneratorSet::hessian(&config);
            let report = analyze_cached(&generators, &Word::new(word), &mut cache)?;
            Ok(Outcome {
                output: render_reports(&[report], cli.format, false),
                budget_exhausted: false,
            })
        }
        Command::Search {
            family,
            mode,
            max_len,
            distinct,
            trials,
            seed,
            budget,
        } => {
            let generators = parse_family(&family)?;
            if max_len == 0 {
                return Err(Error::InvalidArgument("max-len must be positive".into()));
            }
            let limits = SearchLimits {
                word_budget: budget.unwrap_or(SearchLimits::default().word_budget),
            };
            let summary = match mode {
                SearchMode::Exhaustive => {
                    if trials.is_some() {
                        return Err(Error::InvalidArgument(
                            "--trials applies only to random mode".into(),
                        ));
                    }
                    exhaustive_search_with(&generators, max_len, distinct, &limits)?
                }
                SearchMode::Random => {
                    let trials = trials.ok_or_else(|| {
                        Error::InvalidArgument("random mode requires --trials".into())
                    })?;
                    random_search_with(
                        &generators,
                        trials,
                        max_len,
                        seed.unwrap_or(0),
                        distinct,
                        &limits,
                    )?
                }
            };
            let budget_exhausted = summary.budget_exhausted;
            Ok(Outcome {
                output: render_search(&generators, &summary, mode, max_len, distinct, cli.format),
                budget_exhausted,
            })
        }
        Command::Growth {
            family,
            h,
            r,
            max_len,
            budget,
        } => {
            let generators = parse_family(&family)?;
            let h_vec = parse_h(&h, &generators)?;
            let r_val = parse_rational(&r)?;
            let limits = SearchLimits {
                word_budget: budget.unwrap_or(SearchLimits::default().word_budget),
            };
            let summary = growth_count(&generators, &h_vec, &r_val, max_len, &limits)?;
            Ok(Outcome {
                output: render_growth(&generators, &summary, &h, &r, max_len, cli.format),
                budget_exhausted: !summary.completed,
            })
        }
    }
}

fn experiment_rows(
    experiment: Experiment,
    format: OutputFormat,
    cache: &mut Option<ReportCache>,
) -> Result<Outcome> {
    let generators = GeneratorSet::experiment(experiment)?;
    let mut reports = Vec::new();
    for k in 2..=10 {
        let word = Word::new((1..=k).collect());
        reports.push(analyze_cached(&generators, &word, cache)?);
    }
    Ok(Outcome {
        output: render_reports(&reports, format, true),
        budget_exhausted: false,
    })
}

fn render_reports(reports: &[ReportJson], format: OutputFormat, with_k: bool) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            for report in reports {
                let json = serde_json::to_string(report).expect("reports serialize");
                let _ = writeln!(out, "{json}");
            }
        }
        OutputFormat::Csv => {
            let prefix = if with_k { "k," } else { "" };
            let _ = writeln!(out, "{prefix}family,word,char_poly,cyclotomic,salem,lambda");
            for report in reports {
                let word = join_spaced(&report.word);
                let char_poly = report.char_poly.join(" ");
                let cyc = report
                    .cyclotomic
                    .iter()
                    .map(|(n, m)| format!("{n}^{m}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                let salem = report
                    .salem
                    .as_ref()
                    .map(|c| c.join(" "))
                    .unwrap_or_default();
                if with_k {
                    let _ = write!(out, "{},", report.word.len());
                }
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    report.family,
                    word,
                    char_poly,
                    cyc,
                    salem,
                    report.lambda_display_4()
                );
            }
        }
        OutputFormat::Text => {
            for report in reports {
                let head = if with_k {
                    format!("c_{}", report.word.len())
                } else {
                    format!("word {:?}", report.word)
                };
                match &report.lambda {
                    Some(_) => {
                        let _ = writeln!(
                            out,
                            "{head}: salem degree {} factor {} lambda {}",
                            report.salem.as_ref().map(|s| s.len() - 1).unwrap_or(0),
                            report.salem_pretty(),
                            report.lambda_display_4()
                        );
                    }
                    None => {
                        let _ = writeln!(
                            out,
                            "{head}: not hyperbolic (all eigenvalues on the unit circle)"
                        );
                    }
                }
            }
        }
    }
    out
}

#[derive(Serialize)]
struct SearchJson<'a> {
    family: &'a str,
    mode: &'a str,
    max_len: usize,
    distinct: bool,
    seed: Option<u64>,
    words_examined: u64,
    dedup_classes: u64,
    budget_exhausted: bool,
    minima: Vec<(usize, ReportJson)>,
    anomalies: Vec<Vec<usize>>,
}

fn render_search(
    generators: &GeneratorSet,
    summary: &SearchSummary,
    mode: SearchMode,
    max_len: usize,
    distinct: bool,
    format: OutputFormat,
) -> String {
    let minima: Vec<(usize, ReportJson)> = summary
        .minima
        .iter()
        .map(|(degree, report)| (*degree, ReportJson::from_report(report, &generators.label)))
        .collect();
    let mode_str = match mode {
        SearchMode::Exhaustive => "exhaustive",
        SearchMode::Random => "random",
    };
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            let json = SearchJson {
                family: &generators.label,
                mode: mode_str,
                max_len,
                distinct,
                seed: summary.seed,
                words_examined: summary.words_examined,
                dedup_classes: summary.dedup_classes,
                budget_exhausted: summary.budget_exhausted,
                minima,
                anomalies: summary
                    .anomalies
                    .iter()
                    .map(|w| w.letters().to_vec())
                    .collect(),
            };
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string(&json).expect("summaries serialize")
            );
        }
        OutputFormat::Csv => {
            let _ = writeln!(out, "degree,word,salem,lambda");
            for (degree, report) in &minima {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    degree,
                    join_spaced(&report.word),
                    report
                        .salem
                        .as_ref()
                        .map(|c| c.join(" "))
                        .unwrap_or_default(),
                    report.lambda_display_4()
                );
            }
        }
        OutputFormat::Text => {
            let _ = writeln!(
                out,
                "family {} mode {} max-len {} distinct {} words {} classes {}{}",
                generators.label,
                mode_str,
                max_len,
                distinct,
                summary.words_examined,
                summary.dedup_classes,
                if summary.budget_exhausted {
                    " (budget exhausted)"
                } else {
                    ""
                }
            );
            if minima.is_empty() {
                let _ = writeln!(out, "no hyperbolic words found");
            }
            for (degree, report) in &minima {
                let _ = writeln!(
                    out,
                    "degree {degree}: lambda {} word {:?} factor {}",
                    report.lambda_display_4(),
                    report.word,
                    report.salem_pretty()
                );
            }
        }
    }
    out
}

#[derive(Serialize)]
struct GrowthJson<'a> {
    family: &'a str,
    h: &'a str,
    r: &'a str,
    max_len: usize,
    count: u64,
    elements: u64,
    completed: bool,
    group_exhausted: bool,
}

fn render_growth(
    generators: &GeneratorSet,
    summary: &GrowthSummary,
    h: &str,
    r: &str,
    max_len: usize,
    format: OutputFormat,
) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            let json = GrowthJson {
                family: &generators.label,
                h,
                r,
                max_len,
                count: summary.count,
                elements: summary.elements,
                completed: summary.completed,
                group_exhausted: summary.group_exhausted,
            };
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string(&json).expect("growth serializes")
            );
        }
        OutputFormat::Csv => {
            let _ = writeln!(out, "family,h,r,max_len,count,elements,completed");
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                generators.label, h, r, max_len, summary.count, summary.elements, summary.completed
            );
        }
        OutputFormat::Text => {
            let _ = writeln!(
                out,
                "N(r={r}) = {} over {} elements up to length {max_len}{}{}",
                summary.count,
                summary.elements,
                if summary.group_exhausted {
                    " (group exhausted)"
                } else {
                    ""
                },
                if summary.completed {
                    ""
                } else {
                    " (budget exhausted)"
                }
            );
        }
    }
    out
}

fn join_spaced(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_parsing() {
        assert_eq!(parse_family("exp1").unwrap().label, "exp1");
        assert_eq!(parse_family("exp2:3").unwrap().label, "exp2:3");
        assert_eq!(parse_family("hessian").unwrap().label, "hessian");
        assert_eq!(
            parse_family("hessian:table2").unwrap().label,
            "hessian:table2"
        );
        assert_eq!(
            parse_family("hessian:12,34").unwrap().label,
            "hessian:12,34"
        );
        assert!(parse_family("nope").is_err());
        assert!(parse_family("exp2:9").is_err());
    }

    #[test]
    fn report_json_round_trip_is_identical() {
        let generators = GeneratorSet::hessian(&EckardtConfig::None);
        let report = analyze(&generators, &Word::new(vec![1, 2, 3, 4, 5, 6, 7])).unwrap();
        let json = ReportJson::from_report(&report, &generators.label);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: ReportJson = serde_json::from_str(&text).unwrap();
        let re_serialized = serde_json::to_string(&parsed).unwrap();
        assert_eq!(text, re_serialized);
        assert_eq!(json, parsed);
    }

    #[test]
    fn lambda_display_has_four_places() {
        let generators = GeneratorSet::hessian(&EckardtConfig::None);
        let report = analyze(&generators, &Word::new(vec![1, 2, 3, 4, 5, 6, 7])).unwrap();
        let json = ReportJson::from_report(&report, &generators.label);
        assert_eq!(json.lambda_display_4(), "4.7913");
        let unit = analyze(&generators, &Word::new(vec![1])).unwrap();
        let json = ReportJson::from_report(&unit, &generators.label);
        assert_eq!(json.lambda_display_4(), "1.0000");
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("es-cache-test-{}", std::process::id()));
        let _ = std::fs::remove_file(&dir);
        let generators = GeneratorSet::hessian(&EckardtConfig::None);
        let mut cache = Some(ReportCache::load(&dir));
        let word = Word::new(vec![2, 6, 1, 3]);
        let first = analyze_cached(&generators, &word, &mut cache).unwrap();
        // reload from disk; the rotated word must hit the same entry
        let mut cache = Some(ReportCache::load(&dir));
        let rotated = Word::new(vec![6, 1, 3, 2]);
        let second = analyze_cached(&generators, &rotated, &mut cache).unwrap();
        assert_eq!(first.salem, second.salem);
        assert_eq!(first.lambda, second.lambda);
        assert_eq!(second.word, vec![6, 1, 3, 2]);
        // corrupt the cache; loading must skip the bad line and recompute
        std::fs::write(&dir, "this is not json\n").unwrap();
        let mut cache = Some(ReportCache::load(&dir));
        let third = analyze_cached(&generators, &word, &mut cache).unwrap();
        assert_eq!(first.salem, third.salem);
        let _ = std::fs::remove_file(&dir);
    }
}
