//! Ring-theoretic properties of `k[[t^H]]` as decidable predicates.
//!
//! Several properties are computed along two independent routes; a
//! disagreement surfaces as [`Error::RouteDisagreement`] rather than being
//! resolved silently.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// Upper limit on embedding dimension for the gluing search.
pub const MAX_GLUING_EDIM: usize = 12;

fn require_singular(h: &NumericalSemigroup, what: &'static str) -> Result<()> {
    if h.is_naturals() {
        Err(Error::RegularRing(what))
    } else {
        Ok(())
    }
}

/// Almost symmetry through pseudo-Frobenius numbers: with
/// `PF = {f_1 < ... < f_t}`, `f_i + f_{t-i} = F` for `1 <= i < t`.
///
/// Cross-checked against `2 genus = F + type`.
pub fn ag_nari(h: &NumericalSemigroup) -> Result<bool> {
    require_singular(h, "almost symmetry")?;
    let pf = h.pseudo_frobenius()?;
    let f = h.frobenius();
    let t = pf.len();
    let symmetric_pf = (1..t).all(|i| pf[i - 1] + pf[t - i - 1] == f);
    let by_genus = 2 * h.genus() as i64 == f + t as i64;
    if symmetric_pf != by_genus {
        return Err(Error::RouteDisagreement {
            check: "ag_nari",
            detail: format!("{h}: PF test {symmetric_pf}, genus identity {by_genus}"),
        });
    }
    Ok(symmetric_pf)
}

/// `K - M = M - M`.
pub fn ag_condition2(h: &NumericalSemigroup) -> Result<bool> {
    require_singular(h, "K : m")?;
    let m = RelativeIdeal::maximal(h);
    let k = h.canonical_ideal()?;
    Ok(k.quotient(&m)? == h.endomorphism_ideal()?)
}

/// `M - K = M`, checked against the product route `M + K ⊆ M`.
pub fn ag_condition3(h: &NumericalSemigroup) -> Result<bool> {
    require_singular(h, "m : K")?;
    let m = RelativeIdeal::maximal(h);
    let k = h.canonical_ideal()?;
    let colon = m.quotient(&k)? == m;
    let product = m.sum(&k)?.is_subset(&m);
    if colon != product {
        return Err(Error::RouteDisagreement {
            check: "ag_condition3",
            detail: format!("{h}: M-K=M is {colon}, M+K⊆M is {product}"),
        });
    }
    Ok(colon)
}

/// `K - E ≅ M`.
pub fn ag_condition4(h: &NumericalSemigroup) -> Result<bool> {
    require_singular(h, "K : E")?;
    let k = h.canonical_ideal()?;
    let ke = k.quotient(&h.endomorphism_ideal()?)?;
    Ok(ke.is_isomorphic(&RelativeIdeal::maximal(h))?.is_some())
}

/// Multiplicity equals embedding dimension, checked against `E ≅ M` (the
/// shift must then be the multiplicity).
pub fn has_minimal_multiplicity(h: &NumericalSemigroup) -> Result<bool> {
    require_singular(h, "minimal multiplicity")?;
    let (m, edim) = h.embedding_data();
    let numeric = m == edim as i64;
    let iso = h.endomorphism_ideal()?.is_isomorphic(&RelativeIdeal::maximal(h))?;
    let structural = iso.is_some();
    if numeric != structural || iso.is_some_and(|z| z != m) {
        return Err(Error::RouteDisagreement {
            check: "minimal_multiplicity",
            detail: format!("{h}: e = edim is {numeric}, E ≅ M gives {iso:?}"),
        });
    }
    Ok(numeric)
}

/// Finite Cohen–Macaulay type: multiplicity at most 3 and at most one gap in
/// `[m, 2m)`.
pub fn finite_cm_type(h: &NumericalSemigroup) -> bool {
    let m = h.multiplicity();
    m <= 3 && (m..2 * m).filter(|&x| !h.contains(x)).count() <= 1
}

/// Complete intersection test by gluing. Returns `(is_ci, edim - 1)`.
pub fn is_complete_intersection(h: &NumericalSemigroup) -> Result<(bool, usize)> {
    let edim = h.embedding_dimension();
    let codim = edim - 1;
    if edim <= 2 {
        return Ok((true, codim));
    }
    // A gluing factor is a non-generator member of the other part, so it is
    // at least twice that part's multiplicity; by induction a complete
    // intersection has multiplicity >= 2^(edim - 1).
    if edim > 63 || h.multiplicity() < 1i64 << codim {
        return Ok((false, codim));
    }
    if edim > MAX_GLUING_EDIM {
        // CI implies symmetric, which settles the large non-symmetric cases.
        if !h.is_symmetric()? {
            return Ok((false, codim));
        }
        return Err(Error::InvalidArgument(format!(
            "gluing search limited to embedding dimension {MAX_GLUING_EDIM}, got {edim}"
        )));
    }
    Ok((is_glued(h.generators())?, codim))
}

fn is_glued(gens: &[i64]) -> Result<bool> {
    let e = gens.len();
    if e <= 2 {
        return Ok(true);
    }
    // The first generator always lands in the first part, so each
    // bipartition is visited once.
    for mask in 0u32..(1 << (e - 1)) - 1 {
        let (mut first, mut second) = (vec![gens[0]], Vec::new());
        for (i, &g) in gens.iter().enumerate().skip(1) {
            if mask & (1 << (i - 1)) != 0 {
                first.push(g);
            } else {
                second.push(g);
            }
        }
        let d1 = first.iter().fold(0, |a, g| a.gcd(g));
        let d2 = second.iter().fold(0, |a, g| a.gcd(g));
        // d = 1 would have to be a non-generator member of N, impossible.
        if d1 == 1 || d2 == 1 || d1.gcd(&d2) != 1 {
            continue;
        }
        let s1 = NumericalSemigroup::from_generators(&first.iter().map(|g| g / d1).collect::<Vec<_>>())?;
        let s2 = NumericalSemigroup::from_generators(&second.iter().map(|g| g / d2).collect::<Vec<_>>())?;
        let fits = |d: i64, s: &NumericalSemigroup| s.contains(d) && !s.generators().contains(&d);
        if fits(d2, &s1) && fits(d1, &s2) && is_glued(s1.generators())? && is_glued(s2.generators())? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct AgConditions {
    pub cond1_nari: bool,
    pub cond2_KmE: bool,
    pub cond3_mKm: bool,
    pub cond4_KE_iso_m: bool,
}

impl AgConditions {
    pub fn evaluate(h: &NumericalSemigroup) -> Result<Self> {
        Ok(AgConditions {
            cond1_nari: ag_nari(h)?,
            cond2_KmE: ag_condition2(h)?,
            cond3_mKm: ag_condition3(h)?,
            cond4_KE_iso_m: ag_condition4(h)?,
        })
    }

    pub fn all_agree(&self) -> bool {
        let v = self.cond1_nari;
        self.cond2_KmE == v && self.cond3_mKm == v && self.cond4_KE_iso_m == v
    }
}

/// Flat summary of one semigroup. The almost-Gorenstein conditions are
/// absent for `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub generators: Vec<i64>,
    pub genus: usize,
    pub frobenius: i64,
    pub multiplicity: i64,
    pub edim: usize,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub min_multiplicity: bool,
    pub finite_cm_type: bool,
    pub complete_intersection: bool,
    #[serde(flatten, default, skip_serializing_if = "Option::is_none")]
    pub ag_conditions: Option<AgConditions>,
}

impl ClassificationReport {
    /// Consistency of the report's own implications.
    pub fn invariant_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.gorenstein && !self.almost_gorenstein {
            out.push("gorenstein_implies_almost_gorenstein");
        }
        if self.complete_intersection && !self.gorenstein {
            out.push("complete_intersection_implies_gorenstein");
        }
        if self.ag_conditions.is_some_and(|c| !c.all_agree()) {
            out.push("ag_conditions_disagree");
        }
        out
    }
}

pub fn classify(h: &NumericalSemigroup) -> Result<ClassificationReport> {
    let (multiplicity, edim) = h.embedding_data();
    let (complete_intersection, _) = is_complete_intersection(h)?;
    let mut report = ClassificationReport {
        generators: h.generators().to_vec(),
        genus: h.genus(),
        frobenius: h.frobenius(),
        multiplicity,
        edim,
        cm_type: h.semigroup_type(),
        gorenstein: true,
        almost_gorenstein: true,
        min_multiplicity: true,
        finite_cm_type: finite_cm_type(h),
        complete_intersection,
        ag_conditions: None,
    };
    if !h.is_naturals() {
        let conditions = AgConditions::evaluate(h)?;
        report.gorenstein = h.is_symmetric()?;
        report.almost_gorenstein = conditions.cond1_nari;
        report.min_multiplicity = has_minimal_multiplicity(h)?;
        report.ag_conditions = Some(conditions);
    }
    Ok(report)
}
