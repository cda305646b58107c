//! One-shot reproduction of the worked examples: `<3,7,11>`,
//! `<3,7,8>`, the dyadic family for `n = 1..=6`, and a census-wide
//! equivalence suite.
//!
//! The colon operation is injectable so that a deliberately broken
//! implementation can be shown to fail the checks.

use serde::Serialize;

use crate::census::{equivalence_suite, SuiteConfig, SuiteReport};
use crate::chain::{verify_family, Clause, Verdict};
use crate::classification::{ag_nari, finite_cm_type};
use crate::error::Result;
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

pub type ColonFn = fn(&RelativeIdeal, &RelativeIdeal) -> Result<RelativeIdeal>;

fn exact_colon(i: &RelativeIdeal, j: &RelativeIdeal) -> Result<RelativeIdeal> {
    i.quotient(j)
}

#[derive(Clone, Debug)]
pub struct ReferenceChecks {
    pub colon: ColonFn,
    pub family: std::ops::RangeInclusive<u32>,
    pub suite: Option<SuiteConfig>,
}

impl Default for ReferenceChecks {
    fn default() -> Self {
        ReferenceChecks {
            colon: exact_colon,
            family: 1..=6,
            suite: Some(SuiteConfig::default()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceReport {
    pub clauses: Vec<Clause>,
    pub suite: Option<SuiteReport>,
}

impl ReferenceReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed) && self.suite.as_ref().is_none_or(|s| s.passed())
    }

    pub fn failed_clauses(&self) -> Vec<&Clause> {
        self.clauses.iter().filter(|c| !c.passed).collect()
    }
}

/// The end semigroup and almost-Gorenstein conditions (2)-(4), all computed
/// through `colon`.
struct ColonView {
    end: Option<NumericalSemigroup>,
    k_minus_m_is_e: bool,
    m_minus_k_is_m: bool,
    k_minus_e_iso_m: bool,
    e_iso_m: bool,
}

impl ColonView {
    fn compute(h: &NumericalSemigroup, colon: ColonFn) -> Result<Self> {
        let m = RelativeIdeal::maximal(h);
        let k = h.canonical_ideal()?;
        let e = colon(&m, &m)?;
        Ok(ColonView {
            end: e.to_semigroup().ok(),
            k_minus_m_is_e: colon(&k, &m)? == e,
            m_minus_k_is_m: colon(&m, &k)? == m,
            k_minus_e_iso_m: colon(&k, &e)?.is_isomorphic(&m)?.is_some(),
            e_iso_m: e.is_isomorphic(&m)? == Some(h.multiplicity()),
        })
    }
}

fn worked_example(
    gens: &[i64],
    end_gens: &[i64],
    almost_gorenstein: bool,
    min_multiplicity: bool,
    colon: ColonFn,
) -> Result<Vec<Clause>> {
    let h = NumericalSemigroup::from_generators(gens)?;
    let expected_end = NumericalSemigroup::from_generators(end_gens)?;
    let v = ColonView::compute(&h, colon)?;
    let tag = h.to_string();
    let end_shown = v.end.as_ref().map_or("not a semigroup".into(), |e| e.to_string());
    let ag = almost_gorenstein;
    let mut clauses = vec![
        Clause::new(
            format!("{tag}: End(m) = {expected_end}"),
            v.end.as_ref() == Some(&expected_end),
            format!("got {end_shown}"),
        ),
        Clause::new(
            format!("{tag}: almost symmetric = {ag}"),
            ag_nari(&h)? == ag,
            "pseudo-Frobenius test",
        ),
        Clause::new(
            format!("{tag}: (K : m = E) = {ag}"),
            v.k_minus_m_is_e == ag,
            format!("got {}", v.k_minus_m_is_e),
        ),
        Clause::new(
            format!("{tag}: (m : K = m) = {ag}"),
            v.m_minus_k_is_m == ag,
            format!("got {}", v.m_minus_k_is_m),
        ),
        Clause::new(
            format!("{tag}: (K : E ≅ m) = {ag}"),
            v.k_minus_e_iso_m == ag,
            format!("got {}", v.k_minus_e_iso_m),
        ),
    ];
    let mm = h.multiplicity() == h.embedding_dimension() as i64;
    clauses.push(Clause::new(
        format!("{tag}: minimal multiplicity = {min_multiplicity}"),
        mm == min_multiplicity && v.e_iso_m == min_multiplicity,
        format!("e = edim {mm}, E ≅ m {}", v.e_iso_m),
    ));
    let end_finite = v.end.as_ref().is_some_and(finite_cm_type);
    clauses.push(Clause::new(
        format!("{tag}: CM(E) has finite type"),
        end_finite,
        end_shown.clone(),
    ));
    let verdict = if end_finite {
        Verdict::Finite
    } else if ag {
        Verdict::Infinite
    } else {
        Verdict::Unknown
    };
    clauses.push(Clause::new(
        format!("{tag}: syzygy category has finite type"),
        verdict == Verdict::Finite,
        format!("verdict {verdict}"),
    ));
    Ok(clauses)
}

pub fn run_reference_checks(checks: &ReferenceChecks) -> Result<ReferenceReport> {
    let mut clauses = worked_example(&[3, 7, 11], &[3, 4], true, true, checks.colon)?;
    clauses.extend(worked_example(&[3, 7, 8], &[3, 4, 5], false, true, checks.colon)?);
    for n in checks.family.clone() {
        let v = verify_family(n)?;
        clauses.extend(v.clauses.into_iter().map(|c| Clause {
            name: format!("family n={n} {}: {}", v.semigroup, c.name),
            ..c
        }));
    }
    let suite = checks.suite.as_ref().map(equivalence_suite).transpose()?;
    Ok(ReferenceReport { clauses, suite })
}
