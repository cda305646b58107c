//! Exhaustive enumeration by genus and the batch equivalence suite.
//!
//! Every semigroup of genus `<= g_max` is visited once through the genus
//! tree. For each one the suite evaluates the almost-Gorenstein equivalences,
//! the two-route and three-route cross-checks, and a battery of rank-one
//! module properties on seeded random ideals. Results are sorted by
//! generators before they are returned, so reports do not depend on the
//! worker count.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chain::{chain_semigroups, first_finite_type_index, syzygy_finite_type_verdict, Verdict};
use crate::classification::{classify, finite_cm_type, has_minimal_multiplicity, ClassificationReport};
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

pub const MAX_CENSUS_GENUS: usize = 30;

/// Breadth-first walk of the genus tree: all of genus `g` before genus
/// `g + 1`, children ordered by the removed generator.
#[derive(Clone, Debug)]
pub struct GenusTree {
    g_max: usize,
    genus: usize,
    level: Vec<NumericalSemigroup>,
    pos: usize,
}

impl Iterator for GenusTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        if self.pos == self.level.len() {
            if self.genus >= self.g_max {
                return None;
            }
            self.level = self.level.iter().flat_map(NumericalSemigroup::children).collect();
            self.genus += 1;
            self.pos = 0;
            if self.level.is_empty() {
                return None;
            }
        }
        self.pos += 1;
        Some(self.level[self.pos - 1].clone())
    }
}

pub fn enumerate_by_genus(g_max: usize) -> Result<GenusTree> {
    if g_max > MAX_CENSUS_GENUS {
        return Err(Error::InvalidArgument(format!(
            "genus bound {g_max} exceeds {MAX_CENSUS_GENUS}"
        )));
    }
    Ok(GenusTree {
        g_max,
        genus: 0,
        level: vec![NumericalSemigroup::naturals()],
        pos: 0,
    })
}

/// Number of semigroups of each genus `0..=g_max`.
pub fn counts_by_genus(g_max: usize) -> Result<Vec<usize>> {
    let mut counts = vec![0; g_max + 1];
    for h in enumerate_by_genus(g_max)? {
        counts[h.genus()] += 1;
    }
    Ok(counts)
}

/// Ideal generated by `gen_count` integers drawn from `[0, span)` with a
/// ChaCha8 stream seeded by `seed`.
pub fn random_ideal(h: &NumericalSemigroup, seed: u64, gen_count: usize, span: i64) -> Result<RelativeIdeal> {
    if gen_count == 0 || span < 1 {
        return Err(Error::InvalidArgument(format!(
            "random ideal needs gen_count >= 1 and span >= 1, got {gen_count}, {span}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<i64> = (0..gen_count).map(|_| rng.random_range(0..span)).collect();
    RelativeIdeal::from_generators(h, &gens)
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Seed for the `index`-th random ideal of `h`.
fn ideal_seed(seed: u64, h: &NumericalSemigroup, index: usize) -> u64 {
    let s = h.generators().iter().fold(seed, |acc, &g| splitmix(acc ^ g as u64));
    splitmix(s ^ index as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub g_max: usize,
    pub ideals_per_semigroup: usize,
    pub seed: u64,
    /// Thread count; 0 lets the pool decide.
    #[serde(skip)]
    pub workers: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            g_max: 8,
            ideals_per_semigroup: 16,
            seed: 0,
            workers: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub generators: Vec<i64>,
    /// Absent only when classification itself failed (see `equivalence_failures`).
    pub classification: Option<ClassificationReport>,
    pub equivalence_failures: Vec<Failure>,
    pub first_finite_type_index: Option<usize>,
    pub verdict: Option<Verdict>,
    /// Evaluation count per check.
    #[serde(skip)]
    pub checks: BTreeMap<&'static str, u64>,
}

impl CensusRecord {
    pub fn passed(&self) -> bool {
        self.equivalence_failures.is_empty()
    }
}

struct Recorder {
    checks: BTreeMap<&'static str, u64>,
    failures: Vec<Failure>,
}

impl Recorder {
    fn check(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        *self.checks.entry(name).or_default() += 1;
        if !ok {
            self.failures.push(Failure {
                check: name.to_string(),
                detail: detail(),
            });
        }
    }

    /// Records an `Err` as a failure of `name` and yields the value on success.
    fn ok<T>(&mut self, name: &'static str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => {
                *self.checks.entry(name).or_default() += 1;
                Some(v)
            }
            Err(e) => {
                self.check(name, false, || e.to_string());
                None
            }
        }
    }
}

/// Runs every check on one singular semigroup.
pub fn evaluate(h: &NumericalSemigroup, ideals_per_semigroup: usize, seed: u64) -> CensusRecord {
    let mut rec = Recorder {
        checks: BTreeMap::new(),
        failures: Vec::new(),
    };
    let classification = rec.ok("classification", classify(h));
    if let Some(report) = &classification {
        for v in report.invariant_violations() {
            rec.check(v, false, || format!("{report:?}"));
        }
        rec.check(
            "ag_conditions_agree",
            report.ag_conditions.is_some_and(|c| c.all_agree()),
            || format!("{:?}", report.ag_conditions),
        );
    }
    rec.ok("minimal_multiplicity_routes", has_minimal_multiplicity(h));
    structural_checks(h, &mut rec);
    ideal_checks(h, ideals_per_semigroup, seed, &mut rec);

    let first_finite_type_index = rec.ok("chain", first_finite_type_index(h));
    let verdict = rec.ok("verdict", syzygy_finite_type_verdict(h));
    CensusRecord {
        generators: h.generators().to_vec(),
        classification,
        equivalence_failures: rec.failures,
        first_finite_type_index,
        verdict,
        checks: rec.checks,
    }
}

fn structural_checks(h: &NumericalSemigroup, rec: &mut Recorder) {
    let f = h.frobenius();
    let m = h.multiplicity();

    if let Some(apery) = rec.ok("apery", h.apery_set(m)) {
        let top = apery.iter().max().copied().unwrap_or(0);
        rec.check("apery_frobenius", top - m == f, || {
            format!("max Apéry {top}, m {m}, F {f}")
        });
    }

    // Gorenstein along three routes, with the genus identity as a fourth.
    let Some(symmetric) = rec.ok("symmetry", h.is_symmetric()) else {
        return;
    };
    let type_one = h.semigroup_type() == 1;
    let Some(k) = rec.ok("canonical_ideal", h.canonical_ideal()) else {
        return;
    };
    let principal = RelativeIdeal::principal(h);
    let k_is_h = k == principal;
    let by_genus = 2 * h.genus() as i64 == f + 1;
    rec.check(
        "gorenstein_routes",
        symmetric == type_one && symmetric == k_is_h && symmetric == by_genus,
        || format!("xor {symmetric}, type one {type_one}, K = H {k_is_h}, 2g = F+1 {by_genus}"),
    );
    rec.check("genus_lower_bound", 2 * h.genus() as i64 > f, || {
        format!("genus {}, F {f}", h.genus())
    });
    let t = h.semigroup_type() as i64;
    rec.check("type_bound", t < m, || format!("type {t}, multiplicity {m}"));
    rec.check(
        "canonical_between_h_and_n",
        principal.is_subset(&k) && k.is_subset(&RelativeIdeal::naturals(h)),
        || format!("K = {k}"),
    );

    let Some(e) = rec.ok("end_semigroup", h.end_semigroup()) else {
        return;
    };
    rec.check(
        "end_strictly_larger",
        e.contains(f) && h.generators().iter().all(|&g| e.contains(g)),
        || format!("E = {e}"),
    );
    rec.check(
        "finite_type_passes_to_end",
        !finite_cm_type(h) || finite_cm_type(&e),
        || format!("E = {e}"),
    );

    if let Some((chain, complete)) = rec.ok("chain_terminates", chain_semigroups(h, h.genus() + 1)) {
        let decreasing = chain.windows(2).all(|w| w[1].genus() < w[0].genus());
        rec.check("chain_genus_decreasing", complete && decreasing, || {
            format!("{:?}", chain.iter().map(|s| s.descriptor()).collect::<Vec<_>>())
        });
    }

    // The maximal ideal and End(m) are reflexive and not principal.
    let max = RelativeIdeal::maximal(h);
    let Some(e_ideal) = rec.ok("endomorphism_ideal", h.endomorphism_ideal()) else {
        return;
    };
    for (name, i) in [("maximal", &max), ("endomorphism", &e_ideal)] {
        let iso_h = i.is_isomorphic(&principal).map(|z| z.is_some()).unwrap_or(true);
        rec.check("max_and_end_are_reflexive_syzygies", i.is_reflexive() && !iso_h, || {
            format!("{name} ideal {i}")
        });
    }
}

fn ideal_checks(h: &NumericalSemigroup, count: usize, seed: u64, rec: &mut Recorder) {
    let span = h.frobenius() + 2 * h.multiplicity();
    let principal = RelativeIdeal::principal(h);
    let (Ok(k), Ok(e_ideal), Ok(e)) = (h.canonical_ideal(), h.endomorphism_ideal(), h.end_semigroup()) else {
        return;
    };
    let e_span = e.frobenius() + 2 * e.multiplicity();

    for index in 0..count {
        let s = ideal_seed(seed, h, index);
        let gen_count = 1 + index % 4;
        let Some(i) = rec.ok("random_ideal", random_ideal(h, s, gen_count, span)) else {
            continue;
        };

        let (closure, reflexive) = i.reflexive_closure();
        rec.check("closure_contains_ideal", i.is_subset(&closure), || format!("I = {i}"));
        rec.check("closure_idempotent", closure.is_reflexive(), || format!("I = {i}"));

        let Some(dual) = rec.ok("canonical_dual", k.quotient(&i)) else {
            continue;
        };
        if let Some(back) = rec.ok("canonical_double_dual", k.quotient(&dual)) {
            rec.check("canonical_duality_involution", back == i, || {
                format!("I = {i}, K-(K-I) = {back}")
            });
        }

        let iso_h = i.is_isomorphic(&principal).map(|z| z.is_some()).unwrap_or(false);
        if let Some(endo) = rec.ok("ideal_endomorphisms", i.quotient(&i)) {
            rec.check(
                "reflexive_with_trivial_endomorphisms_is_principal",
                !(reflexive && endo == principal) || iso_h,
                || format!("I = {i}"),
            );
        }
        if reflexive && !iso_h {
            if let Some(ie) = rec.ok("ideal_times_end", i.sum(&e_ideal)) {
                rec.check("reflexive_nonprincipal_is_end_stable", ie == i, || {
                    format!("I = {i}, I+E = {ie}")
                });
            }
        }

        // Reflexive ideals of E are reflexive, non-principal ideals of H.
        let e_seed = splitmix(s ^ 0x5eed);
        if let Some(j) = rec.ok("random_end_ideal", random_ideal(&e, e_seed, gen_count, e_span)) {
            if j.is_reflexive() {
                if let Some(jh) = rec.ok("restrict_scalars", j.restrict_scalars(h)) {
                    let principal_over_h = jh.is_isomorphic(&principal).map(|z| z.is_some()).unwrap_or(true);
                    rec.check(
                        "end_reflexive_is_h_reflexive_syzygy",
                        jh.is_reflexive() && !principal_over_h,
                        || format!("J = {jh}"),
                    );
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    pub generators: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub semigroups_tested: usize,
    /// Counts of all semigroups per genus, `N` included.
    pub counts_by_genus: Vec<usize>,
    pub checks: BTreeMap<String, u64>,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates every singular semigroup of genus `<= g_max`. Records come back
/// sorted by generators.
pub fn run_census(config: &SuiteConfig) -> Result<(Vec<CensusRecord>, SuiteReport)> {
    if config.g_max < 1 {
        return Err(Error::InvalidArgument("census needs genus bound >= 1".into()));
    }
    let all: Vec<NumericalSemigroup> = enumerate_by_genus(config.g_max)?.collect();
    let mut counts_by_genus = vec![0; config.g_max + 1];
    for h in &all {
        counts_by_genus[h.genus()] += 1;
    }
    let singular: Vec<&NumericalSemigroup> = all.iter().filter(|h| !h.is_naturals()).collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
    let mut records: Vec<CensusRecord> = pool.install(|| {
        singular
            .par_iter()
            .map(|h| evaluate(h, config.ideals_per_semigroup, config.seed))
            .collect()
    });
    records.sort_by(|a, b| a.generators.cmp(&b.generators));

    let mut checks = BTreeMap::new();
    let mut failures = Vec::new();
    for r in &records {
        for (name, n) in &r.checks {
            *checks.entry(name.to_string()).or_insert(0) += n;
        }
        let gens = descriptor(&r.generators);
        failures.extend(r.equivalence_failures.iter().map(|f| SuiteFailure {
            generators: gens.clone(),
            check: f.check.clone(),
            detail: f.detail.clone(),
        }));
    }
    let report = SuiteReport {
        config: *config,
        semigroups_tested: records.len(),
        counts_by_genus,
        checks,
        failures,
    };
    Ok((records, report))
}

pub fn equivalence_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    Ok(run_census(config)?.1)
}

pub fn descriptor(gens: &[i64]) -> String {
    gens.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}
