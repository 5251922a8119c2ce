//! Fixture corpus: JSON-lines files of ideals with expected invariants.
//!
//! Each line is `{"name", "ring", "expr", "expect": {...}}`. Every field of
//! `expect` is optional; each one present becomes one check in the report.

use std::collections::BTreeMap;
use std::fmt;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::decomposition::MonomialPrime;
use crate::error::{Error, Result};
use crate::expr::{parse_ideal, parse_prime};
use crate::ideal::MonomialIdeal;
use crate::localization::localize;
use crate::ring::Ring;
use crate::stability::StabilityChecker;

/// The examples shipped with the crate.
pub const BUILTIN: &str = include_str!("../fixtures/corpus.jsonl");

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pd: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cm: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gcm: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unmixed: Option<bool>,
    /// Irreducible components, compared as a set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equidimensional: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ass_eq_min: Option<bool>,
    /// Minimal generators of the evaluated ideal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub associated_includes: Option<Vec<String>>,
    /// Prime (as `(x1, x2)`) to `pd S(p)/I(p)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub localized_pd: Option<BTreeMap<String, usize>>,
    /// Prime to the generators of `I(p)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub localized: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub ring: String,
    pub expr: String,
    #[serde(default)]
    pub expect: Expectations,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub fixture: String,
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub checks: Vec<CheckResult>,
}

impl CorpusReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for CorpusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{verdict} {} {}", c.fixture, c.check)?;
            if c.passed {
                writeln!(f)?;
            } else {
                writeln!(f, ": expected {}, got {}", c.expected, c.actual)?;
            }
        }
        write!(f, "{} passed, {} failed", self.passed(), self.failed())
    }
}

/// Reads fixtures from JSON-lines text. Blank lines are skipped.
pub fn load_corpus(text: &str) -> Result<Vec<Fixture>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::Corpus(format!("line {}: {e}", i + 1))))
        .collect()
}

pub fn load_corpus_file(path: &std::path::Path) -> Result<Vec<Fixture>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
    load_corpus(&text).map_err(|e| match e {
        Error::Corpus(m) => Error::Corpus(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn builtin_corpus() -> Vec<Fixture> {
    load_corpus(BUILTIN).expect("bundled corpus is well formed")
}

/// Runs the bundled corpus.
pub fn run_fixture_corpus() -> CorpusReport {
    run_fixtures(&builtin_corpus())
}

/// Evaluates fixtures in parallel; the report is ordered by fixture name and
/// then by the field order of [`Expectations`].
pub fn run_fixtures(fixtures: &[Fixture]) -> CorpusReport {
    let mut per_fixture: Vec<(String, Vec<CheckResult>)> = thread::scope(|s| {
        let handles: Vec<_> = fixtures
            .iter()
            .map(|fx| s.spawn(move || (fx.name.clone(), evaluate(fx))))
            .collect();
        handles.into_iter().map(|h| h.join().expect("fixture thread panicked")).collect()
    });
    per_fixture.sort_by(|a, b| a.0.cmp(&b.0));
    CorpusReport {
        checks: per_fixture.into_iter().flat_map(|(_, c)| c).collect(),
    }
}

struct Checks<'a> {
    fixture: &'a str,
    out: Vec<CheckResult>,
}

impl Checks<'_> {
    fn push<T: PartialEq + fmt::Debug>(&mut self, check: &str, expected: T, actual: T) {
        self.out.push(CheckResult {
            fixture: self.fixture.to_string(),
            check: check.to_string(),
            passed: expected == actual,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }

    fn error(&mut self, check: &str, err: &Error) {
        self.out.push(CheckResult {
            fixture: self.fixture.to_string(),
            check: check.to_string(),
            expected: "success".into(),
            actual: err.to_string(),
            passed: false,
        });
    }
}

fn evaluate(fx: &Fixture) -> Vec<CheckResult> {
    let mut checks = Checks {
        fixture: &fx.name,
        out: Vec::new(),
    };
    if let Err(e) = evaluate_into(fx, &mut checks) {
        checks.error("evaluate", &e);
    }
    checks.out
}

fn evaluate_into(fx: &Fixture, checks: &mut Checks<'_>) -> Result<()> {
    let ring = Ring::parse_decl(&fx.ring)?;
    let ideal = parse_ideal(&fx.expr, &ring)?;
    let e = &fx.expect;
    let checker = StabilityChecker::new(&ideal)?;
    let report = checker.report(Default::default())?;
    let dec = checker.decomposition();

    if let Some(v) = e.pd {
        checks.push("pd", v, report.pd);
    }
    if let Some(v) = e.depth {
        checks.push("depth", v, report.depth);
    }
    if let Some(v) = e.dim {
        checks.push("dim", v, report.dim);
    }
    if let Some(v) = e.stable {
        checks.push("stable", v, report.stable);
    }
    if let Some(v) = e.cm {
        checks.push("cm", v, report.cm);
    }
    if let Some(v) = e.gcm {
        checks.push("gcm", v, report.gcm);
    }
    if let Some(v) = e.unmixed {
        checks.push("unmixed", v, report.unmixed);
    }
    if let Some(v) = &e.components {
        let mut want = v.clone();
        want.sort();
        let mut got: Vec<String> = dec.components().iter().map(ToString::to_string).collect();
        got.sort();
        checks.push("components", want, got);
    }
    if let Some(v) = e.equidimensional {
        checks.push("equidimensional", v, dec.is_equidimensional());
    }
    if let Some(v) = e.ass_eq_min {
        checks.push("ass_eq_min", v, report.ass_eq_min);
    }
    if let Some(v) = &e.generators {
        checks.push("generators", v.clone(), ideal.to_string());
    }
    if let Some(v) = &e.witness {
        checks.push("witness", Some(v.clone()), report.witness.as_ref().map(ToString::to_string));
    }
    if let Some(v) = &e.associated_includes {
        let ass: Vec<String> = dec.associated_primes().iter().map(ToString::to_string).collect();
        let missing: Vec<&String> = v.iter().filter(|p| !ass.contains(p)).collect();
        checks.push("associated_includes", Vec::<&String>::new(), missing);
    }
    if let Some(map) = &e.localized_pd {
        for (p, &want) in map {
            let prime = prime_from_text(p, &ring)?;
            checks.push(&format!("localized_pd {p}"), want, checker.localized_pd(&prime)?);
        }
    }
    if let Some(map) = &e.localized {
        for (p, want) in map {
            let prime = prime_from_text(p, &ring)?;
            let local: MonomialIdeal = localize(&ideal, &prime)?.into_ideal();
            checks.push(&format!("localized {p}"), want.clone(), local.to_string());
        }
    }
    Ok(())
}

/// Accepts `(x1, x2)` as well as `x1,x2`.
fn prime_from_text(text: &str, ring: &Ring) -> Result<MonomialPrime> {
    let t = text.trim();
    let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
    parse_prime(inner, ring)
}
