//! The verification battery: one named check per identity, coefficient
//! property, membership or separation result, a JSON report, and a text
//! table.

mod checks;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::{MultiDegree, Polynomial};
use crate::gfp::Prime;
use crate::tspace::{membership, Budget, GeneratorFamily, Semantics, Status};

pub use checks::catalog;

pub const SUITE_VERSION: &str = "1.0.0";
pub const DEFAULT_SEED: u64 = 20_240_501;

/// JSON Schema (draft 2020-12) of the serialized [`Report`].
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckKind {
    Identity,
    Membership,
    NonMembership,
    CoefficientProperty,
}

/// Whether an expected outcome is stated outright or follows from a
/// computation the engine itself performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Stated,
    DerivedExpectation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    SkippedBudget,
}

impl CheckStatus {
    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::SkippedBudget => "skipped-budget",
        }
    }
}

/// Static description of one check.
pub struct CheckDef {
    pub id: &'static str,
    pub section: u8,
    pub kind: CheckKind,
    pub description: &'static str,
    pub anchor: &'static str,
    pub expectation: Expectation,
    pub expected: &'static str,
    /// Primes the check runs at unless overridden.
    pub primes: &'static [u32],
    /// Whether a prime override may replace `primes`.
    pub admits_override: fn(u32) -> bool,
    /// Only run when stretch variants are requested.
    pub stretch: bool,
    pub(crate) run: fn(&mut Run, &[Prime]) -> Result<()>,
}

/// One membership query made by a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipRecord {
    pub target: String,
    pub family: String,
    pub slice: String,
    pub prime: u32,
    pub expected: Status,
    pub verdict: String,
    pub semantics: Semantics,
    pub dimension: usize,
    pub ambient_dimension: usize,
    pub generators_used: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate_terms: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate_verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub remainder: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub section: u8,
    pub kind: CheckKind,
    pub description: String,
    pub anchor: String,
    pub expectation: Expectation,
    pub expected: String,
    pub primes: Vec<u32>,
    pub parameters: BTreeMap<String, String>,
    pub status: CheckStatus,
    pub cases: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub memberships: Vec<MembershipRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped_budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemanticsLabel {
    pub label: Semantics,
    pub meaning: String,
}

/// Wall-clock data, kept apart from the deterministic part of the report.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub total_seconds: f64,
    pub checks: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite_version: String,
    pub seed: u64,
    pub prime_overrides: Vec<u32>,
    pub stretch: bool,
    pub budget: BudgetRecord,
    pub semantics: Vec<SemanticsLabel>,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    pub timing: Timing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetRecord {
    pub max_generators: u64,
    pub max_dimension: u64,
    pub time_limit_seconds: u64,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.skipped_budget == 0
    }

    /// The report without its timing field, as canonical JSON.
    pub fn deterministic_json(&self) -> String {
        let mut r = self.clone();
        r.timing = Timing::default();
        serde_json::to_string_pretty(&r).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Fixed-width table, one line per check.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<6} {:<20} {:<15} {:>6} {:>9}  note", "id", "kind", "status", "cases", "seconds");
        for c in &self.checks {
            let secs = self.timing.checks.get(&c.id).copied().unwrap_or(0.0);
            let mut note = String::new();
            if c.expectation == Expectation::DerivedExpectation {
                note.push_str("derived expectation");
            }
            if c.memberships.iter().any(|m| m.semantics == Semantics::PolarizedSpan) {
                if !note.is_empty() {
                    note.push_str("; ");
                }
                note.push_str(Semantics::PolarizedSpan.label());
            }
            if let Some(f) = c.failures.first() {
                if !note.is_empty() {
                    note.push_str("; ");
                }
                note.push_str(&truncate(f, 100));
            }
            let _ = writeln!(
                out,
                "{:<6} {:<20} {:<15} {:>6} {:>9.3}  {}",
                c.id,
                format!("{:?}", c.kind),
                c.status.label(),
                c.cases,
                secs,
                note
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "total {}  passed {}  failed {}  skipped-budget {}  ({:.2} s)",
            s.total, s.passed, s.failed, s.skipped_budget, self.timing.total_seconds
        );
        out
    }
}

fn truncate(s: &str, n: usize) -> String {
    let first = s.lines().next().unwrap_or("");
    if first.chars().count() <= n && !s.contains('\n') {
        first.to_string()
    } else {
        format!("{}...", first.chars().take(n).collect::<String>())
    }
}

/// Which checks to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
    Section(u8),
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub selection: Selection,
    pub budget: Budget,
    pub prime_override: Option<Prime>,
    pub seed: u64,
    pub stretch: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            selection: Selection::All,
            budget: Budget::default(),
            prime_override: None,
            seed: DEFAULT_SEED,
            stretch: false,
        }
    }
}

/// Resolves a selection to catalog entries, sorted by id.
pub fn select(selection: &Selection, stretch: bool) -> Result<Vec<&'static CheckDef>> {
    let cat = catalog();
    let chosen: Vec<&CheckDef> = match selection {
        Selection::All => cat.iter().filter(|c| stretch || !c.stretch).collect(),
        Selection::Section(s) => {
            let v: Vec<_> = cat.iter().filter(|c| c.section == *s && (stretch || !c.stretch)).collect();
            if v.is_empty() {
                return Err(Error::UnknownCheck(format!("section {s}")));
            }
            v
        }
        Selection::Ids(ids) => {
            if ids.is_empty() {
                return Err(Error::UnknownCheck("empty selection".into()));
            }
            let mut seen = BTreeSet::new();
            let mut v = Vec::new();
            for id in ids {
                let c = cat
                    .iter()
                    .find(|c| c.id.eq_ignore_ascii_case(id))
                    .ok_or_else(|| Error::UnknownCheck(id.clone()))?;
                if seen.insert(c.id) {
                    v.push(c);
                }
            }
            v
        }
    };
    let mut chosen = chosen;
    chosen.sort_by_key(|a| id_key(a.id));
    Ok(chosen)
}

/// Sort key treating the numeric parts of an id as numbers.
fn id_key(id: &str) -> (u32, u32, String) {
    let body = id.trim_start_matches('C');
    let (major, rest) = body.split_once('.').unwrap_or((body, ""));
    let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
    let suffix: String = rest.chars().skip_while(char::is_ascii_digit).collect();
    (major.parse().unwrap_or(0), digits.parse().unwrap_or(0), suffix)
}

/// Runs the selected checks and assembles the report. A failing check never
/// stops the others.
pub fn run_suite(config: &SuiteConfig) -> Result<Report> {
    let chosen = select(&config.selection, config.stretch)?;
    let started = Instant::now();
    let results: Vec<(CheckRecord, f64)> = chosen
        .par_iter()
        .map(|def| run_check(def, config))
        .collect();
    let mut summary = Summary::default();
    let mut timing = Timing::default();
    let mut records = Vec::with_capacity(results.len());
    for (rec, secs) in results {
        summary.total += 1;
        match rec.status {
            CheckStatus::Pass => summary.passed += 1,
            CheckStatus::Fail => summary.failed += 1,
            CheckStatus::SkippedBudget => summary.skipped_budget += 1,
        }
        timing.checks.insert(rec.id.clone(), secs);
        records.push(rec);
    }
    timing.total_seconds = started.elapsed().as_secs_f64();
    Ok(Report {
        suite_version: SUITE_VERSION.into(),
        seed: config.seed,
        prime_overrides: config.prime_override.map(|p| p.value()).into_iter().collect(),
        stretch: config.stretch,
        budget: BudgetRecord {
            max_generators: config.budget.max_generators,
            max_dimension: config.budget.max_dimension,
            time_limit_seconds: config.budget.time_limit.as_secs(),
        },
        semantics: vec![
            SemanticsLabel {
                label: Semantics::SliceSpan,
                meaning: "verdict is exact for the T-space slice over any infinite extension of GF(p); \
                          GF(p)-coefficient targets are members there iff they are members of the GF(p)-span"
                    .into(),
            },
            SemanticsLabel {
                label: Semantics::PolarizedSpan,
                meaning: "span of monomial instances of partial polarizations; positives are sound over any \
                          field, negatives are relative to this span"
                    .into(),
            },
        ],
        checks: records,
        summary,
        timing,
    })
}

fn run_check(def: &CheckDef, config: &SuiteConfig) -> (CheckRecord, f64) {
    let started = Instant::now();
    let mut notes = Vec::new();
    let primes: Vec<u32> = match config.prime_override {
        Some(p) if (def.admits_override)(p.value()) => vec![p.value()],
        Some(p) => {
            notes.push(format!("prime override {} not applicable; pinned primes used", p.value()));
            def.primes.to_vec()
        }
        None => def.primes.to_vec(),
    };
    let primes_typed: Vec<Prime> = primes
        .iter()
        .map(|&p| Prime::new(p as u64).expect("catalog primes are prime"))
        .collect();
    let mut run = Run {
        budget: config.budget,
        seed: config.seed,
        stream: id_stream(def.id),
        cases: 0,
        failures: Vec::new(),
        memberships: Vec::new(),
        parameters: BTreeMap::new(),
        budget_hit: false,
    };
    let outcome = (def.run)(&mut run, &primes_typed);
    if let Err(e) = outcome {
        match e {
            Error::BudgetExceeded(_) | Error::CapExceeded { .. } => {
                run.budget_hit = true;
                notes.push(format!("budget: {e}"));
            }
            other => run.failures.push(format!("error: {other}")),
        }
    }
    let status = if !run.failures.is_empty() {
        CheckStatus::Fail
    } else if run.budget_hit {
        CheckStatus::SkippedBudget
    } else {
        CheckStatus::Pass
    };
    let rec = CheckRecord {
        id: def.id.into(),
        section: def.section,
        kind: def.kind,
        description: def.description.into(),
        anchor: def.anchor.into(),
        expectation: def.expectation,
        expected: def.expected.into(),
        primes,
        parameters: run.parameters,
        status,
        cases: run.cases,
        memberships: run.memberships,
        failures: run.failures,
        notes,
    };
    (rec, started.elapsed().as_secs_f64())
}

fn id_stream(id: &str) -> u64 {
    // FNV-1a, so each check draws from its own reproducible stream
    id.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Mutable state of one running check.
pub(crate) struct Run {
    budget: Budget,
    seed: u64,
    stream: u64,
    cases: u64,
    failures: Vec<String>,
    memberships: Vec<MembershipRecord>,
    parameters: BTreeMap<String, String>,
    budget_hit: bool,
}

impl Run {
    pub(crate) fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.into(), value.to_string());
    }

    pub(crate) fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }

    /// Records an identity case: `lhs - rhs` must vanish.
    pub(crate) fn identity(&mut self, label: impl FnOnce() -> String, lhs: &Polynomial, rhs: &Polynomial) {
        self.cases += 1;
        let residue = lhs - rhs;
        if !residue.is_zero() {
            self.failures.push(format!("{}: residue {}", label(), residue));
        }
    }

    /// Records a scalar case.
    pub(crate) fn equal<T: PartialEq + std::fmt::Display>(&mut self, label: impl FnOnce() -> String, got: T, want: T) {
        self.cases += 1;
        if got != want {
            self.failures.push(format!("{}: got {got}, expected {want}", label()));
        }
    }

    /// Runs one membership query, always asking for a certificate and
    /// re-verifying it on a `Member` verdict.
    pub(crate) fn member(
        &mut self,
        label: impl Into<String>,
        target: &Polynomial,
        family: &GeneratorFamily,
        expected: Status,
    ) -> Result<()> {
        self.cases += 1;
        let label = label.into();
        let v = membership(target, family, &self.budget, true)?;
        let (certificate_terms, certificate_verified) = match &v.certificate {
            Some(c) if v.status == Status::Member => (Some(c.len()), Some(v.verify_certificate(target, family)?)),
            _ => (None, None),
        };
        let slice = match v.slices.as_slice() {
            [one] => one.to_string(),
            many => many.iter().map(MultiDegree::to_string).collect::<Vec<_>>().join(" + "),
        };
        match v.status {
            Status::BudgetExceeded => self.budget_hit = true,
            s if s != expected => self.failures.push(format!(
                "{label}: {} in {family} is {}, expected {expected}{}",
                slice,
                v.status_label(),
                v.remainder
                    .as_ref()
                    .map(|r| format!("; remainder {r}"))
                    .unwrap_or_default()
            )),
            _ => {}
        }
        if certificate_verified == Some(false) {
            self.failures.push(format!("{label}: certificate does not reproduce the target"));
        }
        self.memberships.push(MembershipRecord {
            target: label,
            family: family.to_string(),
            slice,
            prime: target.prime().value(),
            expected,
            verdict: v.status_label(),
            semantics: v.semantics,
            dimension: v.dimension,
            ambient_dimension: v.ambient_dimension,
            generators_used: v.generators_used,
            certificate_terms,
            certificate_verified,
            remainder: v.remainder.as_ref().map(Polynomial::to_string),
        });
        Ok(())
    }
}
