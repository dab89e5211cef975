//! Verification sweeps: each suite runs one family of regularity statements
//! against the homology engine over exhaustively enumerated (or seeded
//! random) graphs and collects the outcome in a [`VerificationReport`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::even::{brute_colon, colon_generators, colon_regularity_bound_check, cycle_square_criterion_at, EdgeProduct, EvenError};
use crate::graph::{enumerate_graphs, sample_graphs, Graph, GraphClass, GraphError, MAX_EXHAUSTIVE};
use crate::homology::{BettiEngine, EngineConfig, Finding, HomologyError};
use crate::invariants::{
    complete_intersection_power_regularity, cycle_power_regularity, decomposition_check, forest_power_regularity,
    hamiltonian_cycle_report, hamiltonian_path_report, induction_bound_check, oracle_power_regularity, power_lower_bound,
    InvariantError,
};
use crate::monomial::{IdealError, Monomial, MonomialIdeal};

pub const REPORT_SCHEMA: &str = "edgereg.verify/1";

/// Graphs per parallel batch when streaming an enumeration.
const BATCH: usize = 4096;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("{0}")]
    Engine(HomologyError),
    #[error(transparent)]
    Invariant(InvariantError),
    #[error(transparent)]
    Even(EvenError),
}

impl From<HomologyError> for VerifyError {
    fn from(e: HomologyError) -> Self {
        match e {
            e if e.is_budget() => VerifyError::Budget(e.to_string()),
            e => VerifyError::Engine(e),
        }
    }
}

impl From<InvariantError> for VerifyError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Homology(h) => h.into(),
            InvariantError::Graph(g) => g.into(),
            InvariantError::Ideal(i) => i.into(),
            e => VerifyError::Invariant(e),
        }
    }
}

impl From<EvenError> for VerifyError {
    fn from(e: EvenError) -> Self {
        match e {
            EvenError::Homology(h) => h.into(),
            EvenError::Graph(g) => g.into(),
            EvenError::Ideal(i) => i.into(),
            e => VerifyError::Even(e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Forest,
    Cycle,
    LowerBound,
    Hamiltonian,
    Colon,
    Square,
    Ci,
    Decomposition,
    Induction,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Forest,
        Suite::Cycle,
        Suite::LowerBound,
        Suite::Hamiltonian,
        Suite::Colon,
        Suite::Square,
        Suite::Ci,
        Suite::Decomposition,
        Suite::Induction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Forest => "forest",
            Suite::Cycle => "cycle",
            Suite::LowerBound => "lower-bound",
            Suite::Hamiltonian => "hamiltonian",
            Suite::Colon => "colon",
            Suite::Square => "square",
            Suite::Ci => "ci",
            Suite::Decomposition => "decomposition",
            Suite::Induction => "induction",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`; expected one of {}", Suite::ALL.map(Suite::name).join(", ")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordLevel {
    /// Keep a record for every instance.
    All,
    /// Keep only failing records; passing instances are counted in groups.
    Failures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    fn holds(self, oracle: i64, predicted: i64) -> bool {
        match self {
            Relation::Eq => oracle == predicted,
            Relation::Le => oracle <= predicted,
            Relation::Ge => oracle >= predicted,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub max_s: usize,
    pub seed: u64,
    /// Graphs sampled per vertex count above the exhaustive range.
    pub samples: usize,
    pub records: RecordLevel,
    /// Record per-instance wall time. Off by default so reports are
    /// byte-identical across runs.
    pub timings: bool,
    pub engine: EngineConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_n: 6, max_s: 2, seed: 0, samples: 200, records: RecordLevel::All, timings: false, engine: EngineConfig::default() }
    }
}

/// One checked statement: `oracle <relation> predicted`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    pub instance: String,
    pub n: usize,
    pub s: usize,
    pub predicted: i64,
    pub oracle: i64,
    pub relation: Relation,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

impl Record {
    fn new(check: &str, instance: String, n: usize, s: usize, predicted: usize, oracle: usize, relation: Relation) -> Self {
        let (predicted, oracle) = (predicted as i64, oracle as i64);
        Record {
            check: check.to_string(),
            instance,
            n,
            s,
            predicted,
            oracle,
            relation,
            passed: relation.holds(oracle, predicted),
            detail: None,
            elapsed_us: None,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    fn sort_key(&self) -> (&str, usize, usize, &str) {
        (&self.check, self.n, self.s, &self.instance)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub check: String,
    pub n: usize,
    pub s: usize,
    pub instances: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Incomplete,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub tool_version: String,
    pub suite: Suite,
    pub config: SuiteConfig,
    pub instance_count: u64,
    pub failure_count: u64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub incomplete_reason: Option<String>,
    /// The failing record on the fewest vertices, then the shortest instance.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Record>,
    pub groups: Vec<GroupSummary>,
    pub records: Vec<Record>,
    pub findings: Vec<Finding>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// 0 all pass, 1 violation found, 3 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Incomplete => 3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn summary(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Incomplete => "INCOMPLETE",
        };
        let mut out = format!("{verdict} {}: {} instances, {} failures", self.suite, self.instance_count, self.failure_count);
        if let Some(reason) = &self.incomplete_reason {
            out.push_str(&format!(" ({reason})"));
        }
        if let Some(c) = &self.counterexample {
            out.push_str(&format!(
                "\n  counterexample: {} {} s={} oracle={} {} predicted={}",
                c.check,
                c.instance,
                c.s,
                c.oracle,
                serde_json::to_value(c.relation).unwrap().as_str().unwrap(),
                c.predicted
            ));
        }
        out
    }
}

struct Collector {
    level: RecordLevel,
    records: Vec<Record>,
    groups: BTreeMap<(String, usize, usize), (u64, u64)>,
    instances: u64,
    failures: u64,
    counterexample: Option<Record>,
}

impl Collector {
    fn new(level: RecordLevel) -> Self {
        Collector { level, records: Vec::new(), groups: BTreeMap::new(), instances: 0, failures: 0, counterexample: None }
    }

    fn add(&mut self, r: Record) {
        self.instances += 1;
        let group = self.groups.entry((r.check.clone(), r.n, r.s)).or_insert((0, 0));
        group.0 += 1;
        if !r.passed {
            group.1 += 1;
            self.failures += 1;
            let smaller = |c: &Record| (r.n, r.instance.len(), r.s) < (c.n, c.instance.len(), c.s);
            if self.counterexample.as_ref().is_none_or(smaller) {
                self.counterexample = Some(r.clone());
            }
        }
        if self.level == RecordLevel::All || !r.passed {
            self.records.push(r);
        }
    }
}

/// Canonical instance name: `n:u-v,u-v,...` in original labels.
pub fn instance_name(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|e| format!("{}-{}", g.label(e.0), g.label(e.1))).collect();
    format!("{}:{}", g.vertex_count(), edges.join(","))
}

struct Ctx<'a> {
    config: &'a SuiteConfig,
    engine: &'a BettiEngine,
}

impl Ctx<'_> {
    /// Runs `check` on every graph on `n` vertices in `class`: all of them in
    /// the exhaustive range, seeded samples beyond it.
    fn sweep<F>(&self, out: &mut Collector, n: usize, class: GraphClass, check: F) -> Result<(), VerifyError>
    where
        F: Fn(&Graph) -> Result<Vec<Record>, VerifyError> + Sync,
    {
        let timed = |g: &Graph| -> Result<Vec<Record>, VerifyError> {
            let start = Instant::now();
            let mut records = check(g)?;
            if self.config.timings {
                let us = start.elapsed().as_micros() as u64;
                for r in &mut records {
                    r.elapsed_us = Some(us);
                }
            }
            Ok(records)
        };
        let mut run = |batch: &[Graph]| -> Result<(), VerifyError> {
            let results = batch.par_iter().map(timed).collect::<Result<Vec<_>, _>>()?;
            for r in results.into_iter().flatten() {
                out.add(r);
            }
            Ok(())
        };
        if n <= MAX_EXHAUSTIVE {
            let mut graphs = enumerate_graphs(n, class)?;
            loop {
                let batch: Vec<Graph> = graphs.by_ref().take(BATCH).collect();
                if batch.is_empty() {
                    break;
                }
                run(&batch)?;
            }
        } else {
            let seed = self.config.seed ^ (n as u64) << 32;
            run(&sample_graphs(n, self.config.samples, seed, class)?)?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<VerificationReport, VerifyError> {
    run_suite_with(suite, config, None)
}

/// Like [`run_suite`], reusing `engine` (and its memo) when given.
pub fn run_suite_with(suite: Suite, config: &SuiteConfig, engine: Option<&BettiEngine>) -> Result<VerificationReport, VerifyError> {
    if config.max_s == 0 {
        return Err(VerifyError::Usage("--max-s must be at least 1".into()));
    }
    let mut engine_config = config.engine;
    if suite == Suite::Hamiltonian {
        // every instance is a distinct connected graph: nothing to reuse
        engine_config.memoize_ideals = false;
    }
    let owned;
    let engine = match engine {
        Some(e) => e,
        None => {
            owned = BettiEngine::new(engine_config);
            &owned
        }
    };
    let ctx = Ctx { config, engine };
    let mut out = Collector::new(config.records);
    let outcome = match suite {
        Suite::Forest => forest(&ctx, &mut out),
        Suite::Cycle => cycle(&ctx, &mut out),
        Suite::LowerBound => lower_bound(&ctx, &mut out),
        Suite::Hamiltonian => hamiltonian(&ctx, &mut out),
        Suite::Colon => colon(&ctx, &mut out),
        Suite::Square => square(&ctx, &mut out),
        Suite::Ci => ci(&ctx, &mut out),
        Suite::Decomposition => decomposition(&ctx, &mut out),
        Suite::Induction => induction(&ctx, &mut out),
    };
    let incomplete_reason = match outcome {
        Ok(()) => None,
        Err(VerifyError::Budget(reason)) => Some(reason),
        Err(e) => return Err(e),
    };
    let verdict = match (&incomplete_reason, out.failures) {
        (_, f) if f > 0 => Verdict::Fail,
        (Some(_), _) => Verdict::Incomplete,
        _ => Verdict::Pass,
    };
    let mut records = out.records;
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(VerificationReport {
        schema: REPORT_SCHEMA.to_string(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        suite,
        config: config.clone(),
        instance_count: out.instances,
        failure_count: out.failures,
        verdict,
        incomplete_reason,
        counterexample: out.counterexample,
        groups: out
            .groups
            .into_iter()
            .map(|((check, n, s), (instances, failures))| GroupSummary { check, n, s, instances, failures })
            .collect(),
        records,
        findings: engine.findings(),
    })
}

fn forest(ctx: &Ctx, out: &mut Collector) -> Result<(), VerifyError> {
    for n in 2..=ctx.config.max_n {
        ctx.sweep(out, n, GraphClass::Forest, |g| {
            if g.edge_count() == 0 {
                return Ok(Vec::new());
            }
            (1..=ctx.config.max_s)
                .map(|s| {
                    let predicted = forest_power_regularity(g, s)?;
                    let oracle = oracle_power_regularity(ctx.engine, g, s)?;
                    Ok(Record::new("forest-formula", instance_name(g), n, s, predicted, oracle, Relation::Eq))
                })
                .collect()
        })?;
    }
    Ok(())
}

fn cycle(ctx: &Ctx, out: &mut Collector) -> Result<(), VerifyError> {
    for n in 3..=ctx.config.max_n {
        let c = Graph::cycle(n)?;
        for s in 1..=ctx.config.max_s {
            let predicted = cycle_power_regularity(n, s)?;
            let oracle = oracle_power_regularity(ctx.engine, &c, s)?;
            out.add(Record::new("cycle-formula", format!("cycle:{n}"), n, s, predicted, oracle, Relation::Eq));
        }
        // the colon ideals behind the s+1 step
        for s in 1..ctx.config.max_s {
            let report = colon_regularity_bound_check(ctx.engine, n, s)?;
            for r in report.records {
                let detail = format!(
                    "M={} polarized_reg={} hamiltonian_cycle={} chord={}",
                    r.product,
                    r.polarized_regularity,
                    r.hamiltonian_cycle,
                    r.chord.map_or("none".to_string(), |e| e.to_string())
                );
                let mut rec = Record::new("colon-bound", format!("cycle:{n} M={}", r.product), n, s, r.bound, r.regularity, Relation::Le);
                rec.passed = r.passed;
                out.add(rec.with_detail(detail));
            }
        }
    }
    Ok(())
}

fn lower_bound(ctx: &Ctx, out: &mut Collector) -> Result<(), VerifyError> {
    for n in 2..=ctx.config.max_n {
        ctx.sweep(out, n, GraphClass::NonEmpty, |g| {
            (1..=ctx.config.max_s)
                .map(|s| {
                    let predicted = power_lower_bound(g, s)?;
                    let oracle = oracle_power_regularity(ctx.engine, g, s)?;
                    Ok(Record::new("lower-bound", instance_name(g), n, s, predicted, oracle, Relation::Ge))
                })
                .collect()
        })?;
    }
    Ok(())
}

fn hamiltonian(ctx: &Ctx, out: &mut Collector) -> Result<(), VerifyError> {
    for n in 2..=ctx.config.max_n {
        ctx.sweep(out, n, GraphClass::All, |g| {
            let Ok(path) = hamiltonian_path_report(g) else { return Ok(Vec::new()) };
            let reg = oracle_power_regularity(ctx.engine, g, 1)?;
            let name = instance_name(g);
            let mut records =
                vec![Record::new("hamiltonian-path", name.clone(), n, 1, path.bound, reg, Relation::Le).with_detail(path.hypothesis)];
            if let Ok(cycle) = hamiltonian_cycle_report(g) {
                records.push(Record::new("hamiltonian-cycle", name, n, 1, cycle.bound, reg, Relation::Le).with_detail(cycle.hypothesis));
            }
            Ok(records)
        })?;
    }
    Ok(())
}

fn colon(ctx: &Ctx, out: &mut Collector) -> Result<(), VerifyError> {
    for n in 2..=ctx.config.max_n {
        ctx.sweep(out, n, GraphClass::NonEmpty, |g| {
            let mut records = Vec::new();
            for s in 1..=ctx.config.max_s {
                let products = EdgeProduct::all(g, s);
                let mut agree = 0;
                let mut first_bad = None;
                for m in &products {
                    if colon_generators(g, m)? == brute_colon(g, m)? {
                        agree += 1;
                    } else if first_bad.is_none() {
                        first_bad = Some(m.to_string());
                    }
                }
                let mut r = Record::new("colon-generators", instance_name(g), n, s, products.len(), agree, Relation::Eq);
                if let Some(m) = first_bad {
                    r = r.with_detail(format!("first mismatch at M={m}"));
                }
                records.push(r);
            }
            Ok(records)
        })?;
    }
    Ok(())
}

fn square(ctx: &Ctx, out: &mut Collector) -> Result<(), VerifyError> {
    for n in 3..=ctx.config.max_n {
        let c = Graph::cycle(n)?;
        for s in 1..=ctx.config.max_s {
            let records = EdgeProduct::all(&c, s)
                .into_par_iter()
                .map(|m| {
                    let colon = brute_colon(&c, &m)?;
                    let mut agree = 0;
                    let mut bad = Vec::new();
                    for apex in 1..=n {
                        let square = Monomial::from_vars(n, &[apex, apex])?;
                        let criterion = cycle_square_criterion_at(n, &m, apex)?.is_some();
                        if criterion == colon.contains(&square) {
                            agree += 1;
                        } else {
                            bad.push(apex);
                        }
                    }
                    let r = Record::new("square-criterion", format!("cycle:{n} M={m}"), n, s, n, agree, Relation::Eq);
                    Ok(if bad.is_empty() { r } else { r.with_detail(format!("disagreement at apex {bad:?}")) })
                })
                .collect::<Result<Vec<_>, VerifyError>>()?;
            for r in records {
                out.add(r);
            }
        }
    }
    Ok(())
}

fn ci(ctx: &Ctx, out: &mut Collector) -> Result<(), VerifyError> {
    for r in 1..=(ctx.config.max_n / 2).max(1) {
        let g = Graph::matching(r)?;
        for s in 1..=ctx.config.max_s {
            let predicted = complete_intersection_power_regularity(2, r, s)?;
            let oracle = oracle_power_regularity(ctx.engine, &g, s)?;
            out.add(Record::new("complete-intersection", format!("matching:{r}"), 2 * r, s, predicted, oracle, Relation::Eq));
        }
    }
    // two cubics on disjoint supports
    let cubics = MonomialIdeal::parse_text("x1*x2*x3\nx4*x5*x6", Some(6))?;
    for s in 1..=ctx.config.max_s {
        let predicted = complete_intersection_power_regularity(3, 2, s)?;
        let oracle = ctx.engine.regularity(&cubics.power(s)?)?;
        out.add(Record::new("complete-intersection", "x1x2x3,x4x5x6".into(), 6, s, predicted, oracle, Relation::Eq));
    }
    Ok(())
}

fn decomposition(ctx: &Ctx, out: &mut Collector) -> Result<(), VerifyError> {
    for n in 2..=ctx.config.max_n {
        ctx.sweep(out, n, GraphClass::Forest, |k| {
            if k.edge_count() == 0 {
                return Ok(Vec::new());
            }
            (1..=ctx.config.max_s)
                .map(|s| {
                    let bound = 2 * s + crate::invariants::induced_matching_number(k) - 1;
                    let (checked, bad) = decomposition_check(ctx.engine, k, s)?;
                    let worst = bad.iter().map(|b| b.2).max().unwrap_or(bound);
                    let r = Record::new("decomposition", instance_name(k), n, s, bound, worst, Relation::Le);
                    Ok(match bad.first() {
                        Some((h, g, reg, _)) => r.with_detail(format!("{checked} splits; H={h:?} G={g:?} reg={reg}")),
                        None => r,
                    })
                })
                .collect()
        })?;
    }
    Ok(())
}

fn induction(ctx: &Ctx, out: &mut Collector) -> Result<(), VerifyError> {
    for n in 2..=ctx.config.max_n {
        ctx.sweep(out, n, GraphClass::NonEmpty, |g| {
            let report = induction_bound_check(ctx.engine, g)?;
            let r = Record::new("induction", instance_name(g), n, 1, report.checks, report.checks - report.violations.len(), Relation::Eq);
            Ok(vec![match report.violations.first() {
                Some(v) => r.with_detail(serde_json::to_string(v).unwrap()),
                None => r,
            }])
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(max_n: usize, max_s: usize) -> SuiteConfig {
        SuiteConfig { max_n, max_s, ..SuiteConfig::default() }
    }

    #[test]
    fn every_suite_passes_at_small_size() {
        for suite in Suite::ALL {
            let report = run_suite(suite, &small(4, 2)).unwrap();
            assert!(report.passed(), "{}", report.summary());
            assert!(report.instance_count > 0, "{suite}");
            assert_eq!(report.exit_code(), 0);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite(Suite::Forest, &small(5, 2)).unwrap().to_json();
        let b = run_suite(Suite::Forest, &small(5, 2)).unwrap().to_json();
        assert_eq!(a, b);
        let json: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(json["schema"], REPORT_SCHEMA);
        assert_eq!(json["verdict"], "pass");
    }

    #[test]
    fn sampling_beyond_exhaustive_range() {
        let config = SuiteConfig { max_n: 8, max_s: 1, samples: 3, seed: 5, ..SuiteConfig::default() };
        let report = run_suite(Suite::Forest, &config).unwrap();
        assert!(report.passed());
        assert!(report.groups.iter().any(|g| g.n == 8 && g.instances <= 3));
    }

    #[test]
    fn budget_exhaustion_is_incomplete() {
        let mut config = small(5, 2);
        config.engine.max_multidegrees = 4;
        let report = run_suite(Suite::Cycle, &config).unwrap();
        assert_eq!(report.verdict, Verdict::Incomplete);
        assert_eq!(report.exit_code(), 3);
    }

    #[test]
    fn failures_level_keeps_only_failures() {
        let config = SuiteConfig { records: RecordLevel::Failures, ..small(4, 1) };
        let report = run_suite(Suite::LowerBound, &config).unwrap();
        assert!(report.records.is_empty());
        assert!(report.instance_count > 0);
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>(), Ok(suite));
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
