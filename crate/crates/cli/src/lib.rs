//! Command implementations behind the `syzygy` binary. Each command returns
//! its rendered output and exit code so it can be driven in-process.

use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::Value;
use syzygy_core::{
    chain::FamilyVerification, classify, dyadic_family, end_chain, parse_ideal, run_census, run_reference_checks,
    syzygy_finite_type_verdict, verify_family, ChainReport, ClassificationReport, NumericalSemigroup, ReferenceChecks,
    RelativeIdeal, Result as CoreResult, SuiteConfig, Verdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Rendered command output plus the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

impl Outcome {
    fn pass(output: String) -> Self {
        Outcome { output, code: 0 }
    }

    fn gated(output: String, passed: bool) -> Self {
        Outcome {
            output,
            code: if passed { 0 } else { 1 },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    #[serde(flatten)]
    pub classification: ClassificationReport,
    pub pseudo_frobenius: Vec<i64>,
    pub end_generators: Vec<i64>,
    pub canonical_offset: i64,
    pub canonical_below_conductor: Vec<i64>,
    pub canonical_conductor: i64,
    pub verdict: Option<Verdict>,
    pub chain_length: usize,
    pub notes: Vec<String>,
}

pub fn analyze_report(h: &NumericalSemigroup) -> Result<AnalyzeReport> {
    let classification = classify(h)?;
    let chain = end_chain(h, h.genus() + 1)?;
    let chain_length = chain.steps.len() - 1;
    if h.is_naturals() {
        return Ok(AnalyzeReport {
            classification,
            pseudo_frobenius: Vec::new(),
            end_generators: vec![1],
            canonical_offset: 0,
            canonical_below_conductor: Vec::new(),
            canonical_conductor: 0,
            verdict: None,
            chain_length,
            notes: vec!["regular ring: almost Gorenstein conditions and verdict do not apply".into()],
        });
    }
    let k = h.canonical_ideal()?;
    Ok(AnalyzeReport {
        classification,
        pseudo_frobenius: h.pseudo_frobenius()?,
        end_generators: h.end_semigroup()?.generators().to_vec(),
        canonical_offset: k.offset(),
        canonical_below_conductor: k.members_below_conductor(),
        canonical_conductor: k.conductor(),
        verdict: Some(syzygy_finite_type_verdict(h)?),
        chain_length,
        notes: vec!["the syzygy-category forms of almost Gorensteinness follow from cond4 and are not computed".into()],
    })
}

pub fn analyze(h: &NumericalSemigroup, format: Format) -> Result<Outcome> {
    Ok(Outcome::pass(render(&analyze_report(h)?, format)?))
}

pub fn chain(h: &NumericalSemigroup, max_steps: usize, format: Format) -> Result<Outcome> {
    let report = end_chain(h, max_steps)?;
    Ok(Outcome::pass(render(&report, format)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub n: u32,
    pub semigroup: NumericalSemigroup,
    pub chain: ChainReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<FamilyVerification>,
}

pub fn family(n: u32, verify: bool, format: Format) -> Result<Outcome> {
    let h = dyadic_family(n)?;
    let chain = end_chain(&h, h.genus() + 1)?;
    let verification = verify.then(|| verify_family(n)).transpose()?;
    let passed = verification.as_ref().is_none_or(FamilyVerification::passed);
    let report = FamilyReport {
        n,
        semigroup: h,
        chain,
        verification,
    };
    Ok(Outcome::gated(render(&report, format)?, passed))
}

#[derive(Serialize)]
struct CsvRow<'a> {
    generators: String,
    genus: usize,
    #[serde(rename = "F")]
    frobenius: i64,
    m: i64,
    edim: usize,
    #[serde(rename = "type")]
    cm_type: usize,
    gorenstein: bool,
    ag: bool,
    minmult: bool,
    fct: bool,
    ci: bool,
    verdict: &'a str,
    failures: String,
}

pub fn census(config: &SuiteConfig, format: Format) -> Result<Outcome> {
    let (records, report) = run_census(config)?;
    let output = match format {
        Format::Json => serde_json::to_string_pretty(&records)? + "\n",
        Format::Text => text_lines(&serde_json::to_value(&report)?),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &records {
                let Some(c) = &r.classification else {
                    bail!("census record {:?} has no classification", r.generators);
                };
                let verdict = r.verdict.map(|v| v.to_string()).unwrap_or_default();
                w.serialize(CsvRow {
                    generators: syzygy_core::census::descriptor(&r.generators),
                    genus: c.genus,
                    frobenius: c.frobenius,
                    m: c.multiplicity,
                    edim: c.edim,
                    cm_type: c.cm_type,
                    gorenstein: c.gorenstein,
                    ag: c.almost_gorenstein,
                    minmult: c.min_multiplicity,
                    fct: c.finite_cm_type,
                    ci: c.complete_intersection,
                    verdict: &verdict,
                    failures: r
                        .equivalence_failures
                        .iter()
                        .map(|f| f.check.as_str())
                        .collect::<Vec<_>>()
                        .join(";"),
                })?;
            }
            String::from_utf8(w.into_inner().context("flushing csv")?)?
        }
    };
    Ok(Outcome::gated(output, report.passed()))
}

/// Replaces the colon with one whose result is off by one, to show that the
/// reference checks catch it.
fn shifted_colon(i: &RelativeIdeal, j: &RelativeIdeal) -> CoreResult<RelativeIdeal> {
    Ok(i.quotient(j)?.shift(1))
}

pub fn verify_examples(suite: Option<SuiteConfig>, inject_fault: bool, format: Format) -> Result<Outcome> {
    let mut checks = ReferenceChecks {
        suite,
        ..ReferenceChecks::default()
    };
    if inject_fault {
        checks.colon = shifted_colon;
    }
    let report = run_reference_checks(&checks)?;
    let output = match format {
        Format::Json | Format::Csv => serde_json::to_string_pretty(&report)? + "\n",
        Format::Text => {
            let mut out = String::new();
            for c in &report.clauses {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{tag}  {}  ({})", c.name, c.detail)?;
            }
            if let Some(s) = &report.suite {
                out.push_str(&suite_text(s));
            }
            let verdict = if report.passed() {
                "all checks passed"
            } else {
                "verification FAILED"
            };
            writeln!(out, "{verdict}")?;
            out
        }
    };
    Ok(Outcome::gated(output, report.passed()))
}

pub fn verify_census(config: &SuiteConfig, format: Format) -> Result<Outcome> {
    let report = syzygy_core::equivalence_suite(config)?;
    let output = match format {
        Format::Json | Format::Csv => serde_json::to_string_pretty(&report)? + "\n",
        Format::Text => suite_text(&report),
    };
    Ok(Outcome::gated(output, report.passed()))
}

fn suite_text(s: &syzygy_core::SuiteReport) -> String {
    let mut out = format!(
        "census genus <= {}, {} ideals each, seed {}: {} semigroups tested, {} failures\n",
        s.config.g_max,
        s.config.ideals_per_semigroup,
        s.config.seed,
        s.semigroups_tested,
        s.failures.len()
    );
    for (name, n) in &s.checks {
        let _ = writeln!(out, "  {name:<40} {n}");
    }
    for f in &s.failures {
        let _ = writeln!(out, "FAIL  <{}> {}: {}", f.generators, f.check, f.detail);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    pub ideal: RelativeIdeal,
    pub minimal_generators: Vec<i64>,
    pub dual: RelativeIdeal,
    pub reflexive: bool,
    pub reflexive_closure: RelativeIdeal,
    pub stable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub other: Option<RelativeIdeal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum: Option<RelativeIdeal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<RelativeIdeal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphic_shift: Option<Option<i64>>,
}

/// Operations on an ideal of `h` given as `"g1,g2"` or `"@z:g1,g2"`; with
/// `other`, also their sum, quotient and isomorphism.
pub fn ideal(h: &NumericalSemigroup, text: &str, other: Option<&str>, format: Format) -> Result<Outcome> {
    let i = parse_ideal(h, text).with_context(|| format!("parsing ideal {text:?}"))?;
    let j = other
        .map(|t| parse_ideal(h, t).with_context(|| format!("parsing ideal {t:?}")))
        .transpose()?;
    let (closure, reflexive) = i.reflexive_closure();
    let report = IdealReport {
        minimal_generators: i.minimal_generators(),
        dual: i.dual(),
        reflexive,
        reflexive_closure: closure,
        stable: i.is_stable(),
        sum: j.as_ref().map(|j| i.sum(j)).transpose()?,
        quotient: j.as_ref().map(|j| i.quotient(j)).transpose()?,
        isomorphic_shift: j.as_ref().map(|j| i.is_isomorphic(j)).transpose()?,
        other: j,
        ideal: i,
    };
    Ok(Outcome::pass(render(&report, format)?))
}

/// JSON, or a `key  value` table flattened from the same JSON so that both
/// renderings carry identical values.
pub fn render<T: Serialize>(value: &T, format: Format) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(match format {
        Format::Json | Format::Csv => serde_json::to_string_pretty(&v)? + "\n",
        Format::Text => text_lines(&v),
    })
}

fn text_lines(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().fold(String::new(), |mut out, (k, val)| {
        let _ = writeln!(out, "{k:<width$}  {val}");
        out
    })
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&key(k), x, rows);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), x, rows);
            }
        }
        Value::Array(items) => {
            let joined = items.iter().map(scalar).collect::<Vec<_>>().join(",");
            rows.push((prefix.to_string(), format!("[{joined}]")));
        }
        _ => rows.push((prefix.to_string(), scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}
