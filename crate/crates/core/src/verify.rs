//! Seeded verification suites over exhaustive and random tableau corpora.
//!
//! Each suite drives the invariants of one part of the library and reports
//! every failing input. Suites draw randomness from their own ChaCha stream
//! derived from the run seed, so `all` reproduces each suite run alone.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classical_rsk::classical_hat;
use crate::error::{Error, Result};
use crate::greene_kleitman::{verify_gk, DEFAULT_PATH_CAP};
use crate::hook_series::{
    check_weight_formula, content_range, rpp_gf, rpp_gf_brute, syt_count_by_hooks, syt_enumerate,
    t_x_value, weighted_rpp_gf, weighted_rpp_gf_brute, whlf_sides, ContentWeights, Rational,
    SeriesCaps,
};
use crate::octahedron::{
    build_all, build_u, check_octahedron, extract_rpp, restriction_mismatches,
};
use crate::partitions::{Cell, Partition, DEFAULT_LINEAR_EXTENSION_CAP};
use crate::tableau::NTableau;
use crate::toggle_rsk::{toggle_rsk, toggle_rsk_inverse};

/// Largest random shape any suite will sample.
pub const MAX_RANDOM_BOXES: usize = 30;
/// Largest truncation degree the series suite accepts.
pub const MAX_SERIES_DEGREE: usize = 24;
/// Shapes up to this size are enumerated exhaustively for the bijection,
/// diagonal/rectangle, transpose, octahedron and series checks.
pub const EXHAUSTIVE_BOXES: usize = 5;
/// Shapes up to this size are used for the hook-length formula checks.
pub const HOOK_FORMULA_BOXES: usize = 6;
/// Entries of exhaustively enumerated tableaux range over `0..=EXHAUSTIVE_ENTRY`.
pub const EXHAUSTIVE_ENTRY: u64 = 2;
/// Entries of random tableaux range over `0..=RANDOM_ENTRY`.
pub const RANDOM_ENTRY: u64 = 3;
/// Linear extensions compared per tableau in the well-definedness suite.
pub const ORDERS_PER_TABLEAU: usize = 5;
/// Integer weightings per shape in the weighted series check.
pub const WEIGHTINGS_PER_SHAPE: usize = 10;
/// Rational weightings per shape in the hook-length formula check.
pub const RATIONAL_WEIGHTINGS_PER_SHAPE: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
    /// Bound on the size of every shape a suite samples or enumerates.
    pub max_boxes: usize,
    /// Truncation degree for the series checks.
    pub max_degree: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 42,
            trials: 100,
            max_boxes: 9,
            max_degree: 12,
        }
    }
}

impl RunConfig {
    fn validate(&self, suite: Suite) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::SizeMismatch("trials must be positive".into()));
        }
        let box_cap = match suite {
            Suite::Gk | Suite::All => DEFAULT_PATH_CAP,
            _ => MAX_RANDOM_BOXES,
        };
        if self.max_boxes > box_cap {
            return Err(Error::CapExceeded {
                what: "max boxes",
                limit: box_cap,
                actual: self.max_boxes,
            });
        }
        if matches!(suite, Suite::Gf | Suite::All) && self.max_degree > MAX_SERIES_DEGREE {
            return Err(Error::CapExceeded {
                what: "max degree",
                limit: MAX_SERIES_DEGREE,
                actual: self.max_degree,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    WellDefined,
    Bijection,
    DiagRect,
    Transpose,
    Oracle,
    Octahedron,
    Gk,
    Gf,
    Whlf,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::WellDefined,
        Suite::Bijection,
        Suite::DiagRect,
        Suite::Transpose,
        Suite::Oracle,
        Suite::Octahedron,
        Suite::Gk,
        Suite::Gf,
        Suite::Whlf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::WellDefined => "welldefined",
            Suite::Bijection => "bijection",
            Suite::DiagRect => "diagrect",
            Suite::Transpose => "transpose",
            Suite::Oracle => "oracle",
            Suite::Octahedron => "octahedron",
            Suite::Gk => "gk",
            Suite::Gf => "gf",
            Suite::Whlf => "whlf",
            Suite::All => "all",
        }
    }

    fn salt(self) -> u64 {
        (self as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub input: Value,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    /// Number of inputs checked, per corpus.
    pub cases: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            cases: BTreeMap::new(),
            violations: Vec::new(),
        }
    }

    fn count(&mut self, corpus: &str, n: usize) {
        *self.cases.entry(corpus.to_string()).or_default() += n;
    }

    fn fail(&mut self, check: &str, input: Value, detail: impl Into<String>) {
        self.violations.push(Violation {
            check: check.to_string(),
            input,
            detail: detail.into(),
        });
    }

    /// Records `outcome` as a violation unless it is `Ok(true)`.
    fn expect(
        &mut self,
        check: &str,
        input: impl FnOnce() -> Value,
        outcome: Result<bool>,
        detail: impl FnOnce() -> String,
    ) {
        match outcome {
            Ok(true) => {}
            Ok(false) => self.fail(check, input(), detail()),
            Err(e) => self.fail(check, input(), format!("error: {e}")),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub max_boxes: usize,
    pub max_degree: usize,
    pub total_violations: usize,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.total_violations == 0
    }
}

/// Runs `suite` (or every suite for [`Suite::All`]). Configuration problems
/// are errors; failed checks are reported as violations.
pub fn run(suite: Suite, config: &RunConfig) -> Result<VerifyReport> {
    config.validate(suite)?;
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        single => vec![single],
    };
    let reports = suites
        .into_iter()
        .map(|s| run_single(s, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        seed: config.seed,
        trials: config.trials,
        max_boxes: config.max_boxes,
        max_degree: config.max_degree,
        total_violations: reports.iter().map(|r| r.violations.len()).sum(),
        suites: reports,
    })
}

pub fn run_single(suite: Suite, config: &RunConfig) -> Result<SuiteReport> {
    config.validate(suite)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ suite.salt());
    let mut report = SuiteReport::new(suite);
    match suite {
        Suite::WellDefined => well_defined(config, &mut rng, &mut report),
        Suite::Bijection => bijection(config, &mut rng, &mut report),
        Suite::DiagRect => diag_rect(config, &mut rng, &mut report),
        Suite::Transpose => transpose(config, &mut rng, &mut report),
        Suite::Oracle => oracle(config, &mut rng, &mut report),
        Suite::Octahedron => octahedron(config, &mut rng, &mut report),
        Suite::Gk => gk(config, &mut rng, &mut report),
        Suite::Gf => gf(config, &mut rng, &mut report),
        Suite::Whlf => whlf(config, &mut rng, &mut report),
        Suite::All => unreachable!("expanded by run"),
    }
    report
        .violations
        .sort_by_cached_key(|v| (v.check.clone(), v.input.to_string(), v.detail.clone()));
    Ok(report)
}

// ---------------------------------------------------------------------------
// corpora

/// Every filling of `shape` with entries in `0..=max_entry`.
pub fn all_fillings(shape: &Partition, max_entry: u64) -> Vec<NTableau> {
    let n = shape.size();
    let base = max_entry + 1;
    let total = base.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let values: Vec<u64> = (0..n)
                .map(|_| {
                    let v = code % base;
                    code /= base;
                    v
                })
                .collect();
            NTableau::from_reading_word(shape.clone(), &values).expect("length matches shape")
        })
        .collect()
}

/// Every tableau of every nonempty shape with at most `max_boxes` boxes and
/// entries in `0..=max_entry`.
pub fn exhaustive_tableaux(max_boxes: usize, max_entry: u64) -> Vec<NTableau> {
    (1..=max_boxes)
        .flat_map(Partition::all_of_size)
        .flat_map(|shape| all_fillings(&shape, max_entry))
        .collect()
}

/// Every `n x n` matrix with entries in `0..=max_entry`.
pub fn exhaustive_squares(n: usize, max_entry: u64) -> Vec<NTableau> {
    all_fillings(&Partition::square(n), max_entry)
}

/// A shape drawn uniformly from the nonempty partitions of size at most
/// `max_boxes`.
pub fn random_shape<R: Rng>(rng: &mut R, max_boxes: usize) -> Partition {
    let shapes: Vec<Partition> = (1..=max_boxes.max(1))
        .flat_map(Partition::all_of_size)
        .collect();
    shapes.choose(rng).expect("at least one shape").clone()
}

/// Entries i.i.d. uniform on `0..=max_entry`.
pub fn random_filling<R: Rng>(rng: &mut R, shape: &Partition, max_entry: u64) -> NTableau {
    let values: Vec<u64> = (0..shape.size())
        .map(|_| rng.gen_range(0..=max_entry))
        .collect();
    NTableau::from_reading_word(shape.clone(), &values).expect("length matches shape")
}

pub fn random_tableau<R: Rng>(rng: &mut R, max_boxes: usize) -> NTableau {
    let shape = random_shape(rng, max_boxes);
    random_filling(rng, &shape, RANDOM_ENTRY)
}

/// A linear extension built by repeatedly adding a uniformly chosen
/// addable box.
pub fn random_linear_extension<R: Rng>(rng: &mut R, shape: &Partition) -> Vec<Cell> {
    let mut filled = vec![0usize; shape.num_rows()];
    let mut order = Vec::with_capacity(shape.size());
    while order.len() < shape.size() {
        let rows: Vec<usize> = (0..filled.len())
            .filter(|&r| filled[r] < shape.parts()[r] && (r == 0 || filled[r - 1] > filled[r]))
            .collect();
        let r = *rows.choose(rng).expect("an addable box exists");
        filled[r] += 1;
        order.push(Cell::new(r + 1, filled[r]));
    }
    order
}

fn random_corpus<R: Rng>(rng: &mut R, config: &RunConfig) -> Vec<NTableau> {
    (0..config.trials)
        .map(|_| random_tableau(rng, config.max_boxes))
        .collect()
}

fn small_corpus(config: &RunConfig) -> Vec<NTableau> {
    exhaustive_tableaux(config.max_boxes.min(EXHAUSTIVE_BOXES), EXHAUSTIVE_ENTRY)
}

fn tab(t: &NTableau) -> Value {
    serde_json::to_value(t).expect("tableaux serialize")
}

// ---------------------------------------------------------------------------
// toggle RSK

fn well_defined<R: Rng>(config: &RunConfig, rng: &mut R, report: &mut SuiteReport) {
    for t in random_corpus(rng, config) {
        report.count("random", 1);
        let reference = match toggle_rsk(&t, None) {
            Ok(r) => r,
            Err(e) => {
                report.fail("toggle_rsk", tab(&t), format!("error: {e}"));
                continue;
            }
        };
        for _ in 0..ORDERS_PER_TABLEAU {
            let order = random_linear_extension(rng, t.shape());
            let outcome = toggle_rsk(&t, Some(&order)).map(|out| out == reference);
            report.expect(
                "order_independence",
                || json!({"tableau": tab(&t), "order": order}),
                outcome,
                || "output depends on the insertion order".into(),
            );
        }
    }
}

fn check_roundtrip(t: &NTableau, report: &mut SuiteReport) {
    let outcome = toggle_rsk(t, None).and_then(|hat| {
        let same_shape = hat.shape() == t.shape() && hat.is_rpp();
        Ok(same_shape && toggle_rsk_inverse(&hat)? == *t)
    });
    report.expect(
        "inverse_after_forward",
        || tab(t),
        outcome,
        || "roundtrip changed the tableau".into(),
    );
}

fn bijection<R: Rng>(config: &RunConfig, rng: &mut R, report: &mut SuiteReport) {
    for t in small_corpus(config) {
        report.count("exhaustive", 1);
        check_roundtrip(&t, report);
        if t.is_rpp() {
            report.count("exhaustive_rpp", 1);
            let outcome = toggle_rsk_inverse(&t).and_then(|pre| Ok(toggle_rsk(&pre, None)? == t));
            report.expect(
                "forward_after_inverse",
                || tab(&t),
                outcome,
                || "roundtrip changed the RPP".into(),
            );
        }
    }
    for t in random_corpus(rng, config) {
        report.count("random", 1);
        check_roundtrip(&t, report);
    }
}

/// `diag_{T̂}(a, b) = rect_T(a, b)` at every border box.
pub fn diag_rect_holds(t: &NTableau) -> Result<bool> {
    let hat = toggle_rsk(t, None)?;
    for cell in t.shape().border_boxes() {
        if hat.diag_sum(cell)? != t.rect_sum(cell)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn diag_rect<R: Rng>(config: &RunConfig, rng: &mut R, report: &mut SuiteReport) {
    let exhaustive = small_corpus(config);
    let random = random_corpus(rng, config);
    report.count("exhaustive", exhaustive.len());
    report.count("random", random.len());
    for t in exhaustive.iter().chain(&random) {
        report.expect(
            "diag_equals_rect",
            || tab(t),
            diag_rect_holds(t),
            || "a border-box diagonal sum differs from the rectangle sum".into(),
        );
    }
}

/// `toggle_rsk(Tᵗ) = toggle_rsk(T)ᵗ`.
pub fn transpose_commutes(t: &NTableau) -> Result<bool> {
    Ok(toggle_rsk(&t.transpose(), None)? == toggle_rsk(t, None)?.transpose())
}

fn transpose<R: Rng>(config: &RunConfig, rng: &mut R, report: &mut SuiteReport) {
    let exhaustive = small_corpus(config);
    let random = random_corpus(rng, config);
    report.count("exhaustive", exhaustive.len());
    report.count("random", random.len());
    for t in exhaustive.iter().chain(&random) {
        report.expect(
            "transpose_equivariance",
            || tab(t),
            transpose_commutes(t),
            || "toggle RSK does not commute with transposition".into(),
        );
    }
}

/// Toggle RSK agrees with classical row insertion on a square matrix.
pub fn oracle_agrees(a: &NTableau) -> Result<bool> {
    Ok(toggle_rsk(a, None)? == classical_hat(a)?)
}

fn random_squares<R: Rng>(rng: &mut R, n: usize, count: usize) -> Vec<NTableau> {
    (0..count)
        .map(|_| random_filling(rng, &Partition::square(n), RANDOM_ENTRY))
        .collect()
}

fn oracle<R: Rng>(config: &RunConfig, rng: &mut R, report: &mut SuiteReport) {
    let corpora = [
        ("exhaustive_2x2", exhaustive_squares(2, EXHAUSTIVE_ENTRY)),
        ("exhaustive_3x3", exhaustive_squares(3, EXHAUSTIVE_ENTRY)),
        ("random_4x4", random_squares(rng, 4, config.trials)),
    ];
    for (name, corpus) in corpora {
        report.count(name, corpus.len());
        for a in &corpus {
            report.expect(
                "toggle_equals_classical",
                || tab(a),
                oracle_agrees(a),
                || "toggle RSK and row insertion disagree".into(),
            );
        }
    }
}

// ---------------------------------------------------------------------------
// arrays

/// Every array-level invariant for one tableau; returns a description of
/// the first failure.
pub fn octahedron_failures(t: &NTableau) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let (u, ubar, utilde) = build_all(t)?;
    let violations = check_octahedron(&utilde, t)?;
    if !violations.is_empty() {
        failures.push(format!(
            "octahedron recurrence: {} violations, first {:?}",
            violations.len(),
            violations[0]
        ));
    }
    if extract_rpp(&u, t.shape())? != toggle_rsk(t, None)? {
        failures.push("U does not reproduce the toggle output".into());
    }
    if u.iter().any(|(_, v)| v < 0) {
        failures.push("U has a negative entry".into());
    }
    let non_monotone = ubar
        .iter()
        .any(|((i, j, k), v)| k > 0 && ubar.get(i, j, k - 1).is_some_and(|prev| prev > v));
    if non_monotone {
        failures.push("Ubar decreases in k".into());
    }
    if let Some(&corner) = t.shape().corner_boxes().last() {
        let smaller = t.without_box(corner)?;
        let mismatches = restriction_mismatches(&build_u(&smaller)?, &u);
        if !mismatches.is_empty() {
            failures.push(format!("restriction changes U at {:?}", mismatches[0]));
        }
    }
    Ok(failures)
}

fn octahedron<R: Rng>(config: &RunConfig, rng: &mut R, report: &mut SuiteReport) {
    let corpora = [
        ("exhaustive_2x2", exhaustive_squares(2, EXHAUSTIVE_ENTRY)),
        ("exhaustive_3x3", exhaustive_squares(3, EXHAUSTIVE_ENTRY)),
        ("random_4x4", random_squares(rng, 4, config.trials)),
        ("exhaustive", small_corpus(config)),
        ("random", random_corpus(rng, config)),
    ];
    for (name, corpus) in corpora {
        report.count(name, corpus.len());
        for t in &corpus {
            match octahedron_failures(t) {
                Ok(failures) => {
                    for f in failures {
                        report.fail("arrays", tab(t), f);
                    }
                }
                Err(e) => report.fail("arrays", tab(t), format!("error: {e}")),
            }
        }
    }
}

fn gk<R: Rng>(config: &RunConfig, rng: &mut R, report: &mut SuiteReport) {
    let corpora = [
        ("exhaustive_2x2", exhaustive_squares(2, EXHAUSTIVE_ENTRY)),
        ("random", random_corpus(rng, config)),
    ];
    for (name, corpus) in corpora {
        report.count(name, corpus.len());
        for t in &corpus {
            match verify_gk(t, DEFAULT_PATH_CAP) {
                Ok(violations) if violations.is_empty() => {}
                Ok(violations) => report.fail(
                    "gk_equals_ubar",
                    tab(t),
                    serde_json::to_string(&violations).expect("violations serialize"),
                ),
                Err(e) => report.fail("gk_equals_ubar", tab(t), format!("error: {e}")),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// hook-length identities

fn random_integer_weights<R: Rng>(rng: &mut R, shape: &Partition) -> ContentWeights {
    let weights = content_range(shape)
        .map(|c| {
            (
                c,
                Rational::from_integer(BigInt::from(rng.gen_range(1..=3))),
            )
        })
        .collect();
    ContentWeights::new(weights).expect("weights are positive")
}

/// Positive rationals `a/b` with `1 <= a <= 5`, `1 <= b <= 4`.
pub fn random_rational_weights<R: Rng>(rng: &mut R, shape: &Partition) -> ContentWeights {
    let weights = content_range(shape)
        .map(|c| {
            let num = BigInt::from(rng.gen_range(1..=5));
            let den = BigInt::from(rng.gen_range(1..=4));
            (c, Rational::new(num, den))
        })
        .collect();
    ContentWeights::new(weights).expect("weights are positive")
}

fn weights_json(w: &ContentWeights) -> Value {
    let map: BTreeMap<String, String> = w
        .weights()
        .iter()
        .map(|(c, v)| (c.to_string(), v.to_string()))
        .collect();
    json!(map)
}

fn gf<R: Rng>(config: &RunConfig, rng: &mut R, report: &mut SuiteReport) {
    let degree = config.max_degree;
    let caps = SeriesCaps {
        max_boxes: EXHAUSTIVE_BOXES,
        max_degree: MAX_SERIES_DEGREE,
    };
    let shapes = Partition::all_up_to(config.max_boxes.min(EXHAUSTIVE_BOXES));
    for shape in &shapes {
        report.count("shapes", 1);
        let outcome = rpp_gf(shape, degree, caps)
            .and_then(|product| Ok(product == rpp_gf_brute(shape, degree, caps)?));
        report.expect(
            "rpp_gf",
            || json!({"shape": shape, "degree": degree}),
            outcome,
            || "hook product and RPP enumeration differ".into(),
        );
        for _ in 0..WEIGHTINGS_PER_SHAPE {
            report.count("weighted", 1);
            let w = random_integer_weights(rng, shape);
            let outcome = weighted_rpp_gf(shape, &w, degree, caps)
                .and_then(|product| Ok(product == weighted_rpp_gf_brute(shape, &w, degree, caps)?));
            report.expect(
                "weighted_rpp_gf",
                || json!({"shape": shape, "weights": weights_json(&w), "degree": degree}),
                outcome,
                || "weighted hook product and enumeration differ".into(),
            );
        }
    }
    for t in random_corpus(rng, config) {
        report.count("weight_formula", 1);
        let w = random_rational_weights(rng, t.shape());
        report.expect(
            "weight_formula",
            || json!({"tableau": tab(&t), "weights": weights_json(&w)}),
            check_weight_formula(&t, &w),
            || "x-weight of the output differs from the hook-weighted input".into(),
        );
    }
}

fn whlf<R: Rng>(config: &RunConfig, rng: &mut R, report: &mut SuiteReport) {
    let cap = DEFAULT_LINEAR_EXTENSION_CAP;
    let shapes = Partition::all_up_to(config.max_boxes.min(HOOK_FORMULA_BOXES));
    for shape in &shapes {
        report.count("shapes", 1);
        let ones = ContentWeights::ones(shape);
        let outcome = syt_enumerate(shape, cap).map(|syts| {
            let count = syts.count();
            BigUint::from(count) == syt_count_by_hooks(shape)
        });
        report.expect(
            "hook_length_count",
            || json!({"shape": shape}),
            outcome,
            || "SYT count differs from n!/prod(hooks)".into(),
        );
        let outcome = whlf_sides(shape, &ones, cap).map(|(lhs, rhs)| lhs == rhs);
        report.expect(
            "whlf_unit_weights",
            || json!({"shape": shape}),
            outcome,
            || "unit-weight hook-length formula fails".into(),
        );
        for _ in 0..RATIONAL_WEIGHTINGS_PER_SHAPE {
            report.count("weighted", 1);
            let w = random_rational_weights(rng, shape);
            let outcome = whlf_sides(shape, &w, cap).map(|(lhs, rhs)| lhs == rhs);
            report.expect(
                "whlf",
                || json!({"shape": shape, "weights": weights_json(&w)}),
                outcome,
                || "content-weighted hook-length formula fails".into(),
            );
        }
    }
    let example = NTableau::from_rows(vec![vec![1, 3, 4], vec![2, 5]]).expect("valid rows");
    let outcome = t_x_value(&example, &ContentWeights::ones(example.shape()))
        .map(|v| v == Rational::one() / Rational::from_integer(BigInt::from(120)));
    report.count("worked_example", 1);
    report.expect(
        "t_x_unit_weights",
        || tab(&example),
        outcome,
        || "T_x is not 1/120".into(),
    );
}
