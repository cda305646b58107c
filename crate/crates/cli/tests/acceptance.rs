//! Acceptance suite: one PASS/FAIL line per criterion, written straight to
//! stderr so it shows up without `--nocapture`.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use syzygy_cli::analyze_report;
use syzygy_core::{
    chain::Verdict, classification::finite_cm_type, equivalence_suite, verify_family, NumericalSemigroup,
    RelativeIdeal, SuiteConfig, SuiteReport,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// Median wall time of `runs` calls.
fn median_time(runs: usize, mut f: impl FnMut()) -> Duration {
    let mut times: Vec<Duration> = (0..runs)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .collect();
    times.sort();
    times[runs / 2]
}

fn suite(g_max: usize) -> (SuiteReport, Duration) {
    let t = Instant::now();
    let config = SuiteConfig {
        g_max,
        ideals_per_semigroup: 16,
        ..SuiteConfig::default()
    };
    let report = equivalence_suite(&config).expect("census runs");
    (report, t.elapsed())
}

fn failures_named(report: &SuiteReport, names: &[&str]) -> usize {
    report
        .failures
        .iter()
        .filter(|f| names.contains(&f.check.as_str()))
        .count()
}

fn three_seven_eleven() -> Outcome {
    let analyze = || analyze_report(&"3,7,11".parse::<NumericalSemigroup>().unwrap()).unwrap();
    let r = analyze();
    let ag = r.classification.ag_conditions.unwrap();
    let exact = r.end_generators == [3, 4]
        && r.classification.almost_gorenstein
        && ag.cond1_nari
        && ag.cond2_KmE
        && ag.cond3_mKm
        && ag.cond4_KE_iso_m
        && r.classification.min_multiplicity
        && r.verdict == Some(Verdict::Finite);
    let t = median_time(11, || {
        analyze();
    });
    outcome(
        exact && t < Duration::from_millis(1),
        format!("E = {:?}, ag {ag:?}, verdict {:?}, {t:?}", r.end_generators, r.verdict),
    )
}

fn three_seven_eight() -> Outcome {
    let analyze = || analyze_report(&"3,7,8".parse::<NumericalSemigroup>().unwrap()).unwrap();
    let r = analyze();
    let ag = r.classification.ag_conditions.unwrap();
    let e = NumericalSemigroup::from_generators(&r.end_generators).unwrap();
    let exact = r.end_generators == [3, 4, 5]
        && !r.classification.almost_gorenstein
        && !ag.cond1_nari
        && !ag.cond2_KmE
        && !ag.cond3_mKm
        && !ag.cond4_KE_iso_m
        && finite_cm_type(&e)
        && r.verdict == Some(Verdict::Finite);
    let t = median_time(11, || {
        analyze();
    });
    outcome(
        exact && t < Duration::from_millis(1),
        format!("E = {:?}, ag {ag:?}, verdict {:?}, {t:?}", r.end_generators, r.verdict),
    )
}

fn family() -> Outcome {
    let t = Instant::now();
    let failed: Vec<String> = (1..=6u32)
        .flat_map(|n| {
            let v = verify_family(n).unwrap();
            v.clauses
                .into_iter()
                .filter(|c| !c.passed)
                .map(move |c| format!("n={n} {}: {}", c.name, c.detail))
        })
        .collect();
    let t = t.elapsed();
    outcome(
        failed.is_empty() && t < Duration::from_secs(1),
        format!("{failed:?}, {t:?}"),
    )
}

fn census_suite(report: &SuiteReport, t: Duration) -> Outcome {
    outcome(
        report.passed() && report.semigroups_tested >= 1000 && t < Duration::from_secs(60),
        format!(
            "{} semigroups, {} failures, {t:?}",
            report.semigroups_tested,
            report.failures.len()
        ),
    )
}

fn route_agreement(report: &SuiteReport) -> Outcome {
    let names = ["minimal_multiplicity_routes", "gorenstein_routes", "classification"];
    let bad = failures_named(report, &names);
    let runs = |n: &str| report.checks.get(n).copied().unwrap_or(0);
    let all_ran = names.iter().all(|n| runs(n) == report.semigroups_tested as u64);
    outcome(
        bad == 0 && all_ran,
        format!(
            "{bad} disagreements; minimal multiplicity checked {}, gorenstein checked {}",
            runs("minimal_multiplicity_routes"),
            runs("gorenstein_routes")
        ),
    )
}

fn rank_one_properties() -> Outcome {
    let (report, t) = suite(12);
    let names = [
        "max_and_end_are_reflexive_syzygies",
        "reflexive_with_trivial_endomorphisms_is_principal",
        "reflexive_nonprincipal_is_end_stable",
        "canonical_duality_involution",
        "end_reflexive_is_h_reflexive_syzygy",
    ];
    let evaluated: u64 = names.iter().map(|n| report.checks.get(*n).copied().unwrap_or(0)).sum();
    let bad = failures_named(&report, &names);
    outcome(
        bad == 0 && report.passed() && evaluated > 0 && t < Duration::from_secs(60),
        format!("{evaluated} property evaluations, {bad} failures, {t:?}"),
    )
}

fn enumeration_counts() -> Outcome {
    let got = syzygy_core::census::counts_by_genus(8).unwrap();
    let expected: Vec<usize> = (0..=8).map(|g| oracle::semigroups_of_genus(g).len()).collect();
    outcome(got == expected, format!("census {got:?}, oracle {expected:?}"))
}

fn quotient_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut mismatches = Vec::new();
    for _ in 0..1000 {
        let h = loop {
            let gens: Vec<i64> = (0..rng.random_range(2..5)).map(|_| rng.random_range(2..16)).collect();
            if let Ok(h) = NumericalSemigroup::from_generators(&gens) {
                break h;
            }
        };
        let table = oracle::Table::new(h.generators(), 2000);
        let mut gens = || -> Vec<i64> { (0..rng.random_range(1..4)).map(|_| rng.random_range(-10..20)).collect() };
        let (ig, jg) = (gens(), gens());
        let z = rng.random_range(-40..40);
        let i = RelativeIdeal::from_generators(&h, &ig).unwrap();
        let j = RelativeIdeal::from_generators(&h, &jg).unwrap();
        let q = i.quotient(&j).unwrap();
        let j_limit = (ig.iter().min().unwrap() + h.conductor() - z).max(*jg.iter().min().unwrap());
        if q.contains(z) != table.in_quotient(&ig, &jg, z, j_limit) {
            mismatches.push(format!("{h} I={ig:?} J={jg:?} z={z}"));
        }
    }
    outcome(mismatches.is_empty(), format!("1000 checks, mismatches {mismatches:?}"))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_syzygy"))
            .args(["verify", "census", "--genus", "12", "--workers", "8"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    outcome(
        a.status.success() && a.stdout == b.stdout && !a.stdout.is_empty(),
        format!(
            "exit {:?}/{:?}, {} bytes, identical {}",
            a.status.code(),
            b.status.code(),
            a.stdout.len(),
            a.stdout == b.stdout
        ),
    )
}

#[test]
fn acceptance() {
    let (census15, t15) = suite(15);
    let results = [
        ("1 analyze <3,7,11>", three_seven_eleven()),
        ("2 analyze <3,7,8>", three_seven_eight()),
        ("3 dyadic family n=1..6", family()),
        ("4 census genus 15 equivalence suite", census_suite(&census15, t15)),
        ("5 route agreement", route_agreement(&census15)),
        ("6 rank-one ideal properties, genus 12", rank_one_properties()),
        ("7 enumeration counts vs gap-set oracle", enumeration_counts()),
        ("8 quotient oracle", quotient_oracle()),
        ("9 determinism of verify census", determinism()),
    ];
    let mut err = std::io::stderr().lock();
    for (name, o) in &results {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        writeln!(err, "[acceptance] {tag} criterion {name}: {}", o.detail).unwrap();
    }
    let failed: Vec<&str> = results.iter().filter(|(_, o)| !o.passed).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
