//! The endomorphism chain `R = R_0 ⊂ R_1 ⊂ ... ⊂ k[[t]]` with
//! `R_{n+1} = End(m_n)`, and the bounds on the dimension of the stable
//! category of Cohen–Macaulay modules that it yields.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classification::{classify, finite_cm_type, is_complete_intersection, ClassificationReport};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub index: usize,
    pub semigroup: NumericalSemigroup,
    pub classification: ClassificationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub steps: Vec<ChainStep>,
    /// False when `max_steps` ran out before reaching `N`.
    pub complete: bool,
    pub first_finite_type_index: Option<usize>,
    pub terminates_at_index: Option<usize>,
    pub dim_lower: Option<usize>,
    pub dim_upper: Option<usize>,
    /// Why each bound is present or absent.
    pub bound_notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimBounds {
    pub lower: Option<usize>,
    pub upper: Option<usize>,
}

/// The bare chain `H_0 = H, H_{n+1} = M_n - M_n`, applying the step at most
/// `max_steps` times. The flag is true when the chain reached `N`.
pub fn chain_semigroups(h: &NumericalSemigroup, max_steps: usize) -> Result<(Vec<NumericalSemigroup>, bool)> {
    let mut out = vec![h.clone()];
    while !out.last().unwrap().is_naturals() {
        if out.len() > max_steps {
            return Ok((out, false));
        }
        let next = out.last().unwrap().end_semigroup()?;
        out.push(next);
    }
    Ok((out, true))
}

/// Iterates `H -> M - M` until `N`, applying it at most `max_steps` times.
pub fn end_chain(h: &NumericalSemigroup, max_steps: usize) -> Result<ChainReport> {
    if max_steps == 0 {
        return Err(Error::InvalidArgument("max_steps must be at least 1".into()));
    }
    let (chain, complete) = chain_semigroups(h, max_steps)?;
    let steps = chain
        .iter()
        .enumerate()
        .map(|(index, s)| {
            Ok(ChainStep {
                index,
                semigroup: s.clone(),
                classification: classify(s)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let first_finite_type_index = steps.iter().position(|s| s.classification.finite_cm_type);
    let terminates_at_index = complete.then(|| steps.len() - 1);

    let mut report = ChainReport {
        steps,
        complete,
        first_finite_type_index,
        terminates_at_index,
        dim_lower: None,
        dim_upper: None,
        bound_notes: Vec::new(),
    };
    if h.is_naturals() {
        report
            .bound_notes
            .push("regular ring: no stable category bounds".into());
        return Ok(report);
    }
    let (bounds, notes) = bounds_with_notes(h, &chain, first_finite_type_index)?;
    report.dim_lower = bounds.lower;
    report.dim_upper = bounds.upper;
    report.bound_notes = notes;
    Ok(report)
}

fn bounds_with_notes(
    h: &NumericalSemigroup,
    chain: &[NumericalSemigroup],
    first_finite: Option<usize>,
) -> Result<(DimBounds, Vec<String>)> {
    let mut notes = Vec::new();
    let (ci, codim) = is_complete_intersection(h)?;
    let lower = if ci {
        notes.push(format!("lower: complete intersection of codimension {codim}"));
        Some(codim - 1)
    } else {
        notes.push("lower: absent, not a complete intersection".into());
        None
    };
    let upper = if !h.is_symmetric()? {
        notes.push("upper: absent, not Gorenstein".into());
        None
    } else if let Some(n) = first_finite {
        notes.push(format!("upper: Gorenstein, chain reaches finite CM type at index {n}"));
        Some(n.saturating_sub(1))
    } else {
        notes.push(format!(
            "upper: absent, no finite CM type within {} chain steps",
            chain.len()
        ));
        None
    };
    Ok((DimBounds { lower, upper }, notes))
}

/// `(lower, upper)` bounds on the dimension of the stable category of CM
/// modules.
///
/// The upper bound `n - 1`, with `n` the first chain index of finite CM
/// type (0 if `H` itself is), is only emitted for symmetric `H`. The lower
/// bound `codim - 1` is only emitted for complete intersections.
pub fn stable_dim_bounds(h: &NumericalSemigroup) -> Result<DimBounds> {
    if h.is_naturals() {
        return Err(Error::RegularRing("stable category dimension"));
    }
    // Genus drops at every step, so genus + 1 steps always suffice.
    let (chain, _) = chain_semigroups(h, h.genus() + 1)?;
    let first_finite = chain.iter().position(finite_cm_type);
    Ok(bounds_with_notes(h, &chain, first_finite)?.0)
}

/// Least chain index whose semigroup has finite CM type. `N` has finite
/// type, so this always exists.
pub fn first_finite_type_index(h: &NumericalSemigroup) -> Result<usize> {
    let (chain, _) = chain_semigroups(h, h.genus() + 1)?;
    Ok(chain
        .iter()
        .position(finite_cm_type)
        .expect("every chain ends at N, which has finite type"))
}

/// `<2^{n+1}, 2^{n+1} + 2^i (1 <= i <= n), 2^{n+1} + 3>`: complete
/// intersections of codimension `n + 1` whose stable category has dimension
/// exactly `n`.
pub fn dyadic_family(n: u32) -> Result<NumericalSemigroup> {
    if !(1..=10).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "family index must be in 1..=10, got {n}"
        )));
    }
    let base = 1i64 << (n + 1);
    let mut gens = vec![base];
    gens.extend((1..=n).map(|i| base + (1i64 << i)));
    gens.push(base + 3);
    let h = NumericalSemigroup::from_generators(&gens)?;
    if h.embedding_dimension() != n as usize + 2 {
        return Err(Error::RouteDisagreement {
            check: "dyadic_family",
            detail: format!(
                "{h} has embedding dimension {}, expected {}",
                h.embedding_dimension(),
                n + 2
            ),
        });
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Clause {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Clause {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyVerification {
    pub n: u32,
    pub semigroup: NumericalSemigroup,
    pub clauses: Vec<Clause>,
}

impl FamilyVerification {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

/// Checks the four claims about member `n` of [`dyadic_family`]: complete
/// intersection of codimension `n + 1`, chain index `n + 1` is `<2,3>`,
/// chain index `n + 2` is `N`, and both dimension bounds equal `n`.
pub fn verify_family(n: u32) -> Result<FamilyVerification> {
    let h = dyadic_family(n)?;
    let nn = n as usize;
    let (chain, _) = chain_semigroups(&h, h.genus() + 1)?;
    let cusp = NumericalSemigroup::from_generators(&[2, 3])?;
    let at = |i: usize| chain.get(i).map_or("missing".to_string(), |s| s.to_string());

    let (ci, codim) = is_complete_intersection(&h)?;
    let bounds = stable_dim_bounds(&h)?;
    let clauses = vec![
        Clause::new(
            "complete_intersection",
            ci && codim == nn + 1,
            format!("ci = {ci}, codim = {codim}, expected codim {}", nn + 1),
        ),
        Clause::new(
            "chain_reaches_cusp",
            chain.get(nn + 1) == Some(&cusp),
            format!("index {} is {}", nn + 1, at(nn + 1)),
        ),
        Clause::new(
            "chain_reaches_naturals",
            chain.get(nn + 2).is_some_and(|s| s.is_naturals()) && chain.len() == nn + 3,
            format!("index {} is {}, chain length {}", nn + 2, at(nn + 2), chain.len()),
        ),
        Clause::new(
            "stable_dimension",
            bounds.lower == Some(nn) && bounds.upper == Some(nn),
            format!("bounds ({:?}, {:?}), expected ({nn}, {nn})", bounds.lower, bounds.upper),
        ),
    ];
    Ok(FamilyVerification {
        n,
        semigroup: h,
        clauses,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    Finite,
    Infinite,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Finite => "Finite",
            Verdict::Infinite => "Infinite",
            Verdict::Unknown => "Unknown",
        })
    }
}

/// Finite type of the syzygy category `ΩCM(R)`.
///
/// `Finite` when `CM(E)` has finite type (syzygies without free summands
/// embed into `CM(E)`); `Infinite` when `R` is almost Gorenstein and `CM(E)`
/// does not; `Unknown` otherwise.
pub fn syzygy_finite_type_verdict(h: &NumericalSemigroup) -> Result<Verdict> {
    if h.is_naturals() {
        return Err(Error::RegularRing("syzygy finite type verdict"));
    }
    let e = h.end_semigroup()?;
    Ok(if finite_cm_type(&e) {
        Verdict::Finite
    } else if crate::classification::ag_nari(h)? {
        Verdict::Infinite
    } else {
        Verdict::Unknown
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn chain_of(h: &NumericalSemigroup) -> Vec<String> {
        end_chain(h, 64)
            .unwrap()
            .steps
            .iter()
            .map(|s| s.semigroup.descriptor())
            .collect()
    }

    #[test]
    fn chains() {
        assert_eq!(chain_of(&sg(&[4, 6, 7])), vec!["4,6,7", "4,6,7,9", "2,3", "1"]);
        assert_eq!(chain_of(&sg(&[2, 3])), vec!["2,3", "1"]);
        let r = end_chain(&NumericalSemigroup::naturals(), 1).unwrap();
        assert_eq!(r.steps.len(), 1);
        assert!(r.complete);
        assert_eq!(r.terminates_at_index, Some(0));
        assert_eq!((r.dim_lower, r.dim_upper), (None, None));
    }

    #[test]
    fn truncated_chain_is_flagged() {
        let r = end_chain(&sg(&[4, 6, 7]), 1).unwrap();
        assert!(!r.complete);
        assert_eq!(r.steps.len(), 2);
        assert_eq!(r.terminates_at_index, None);
        assert!(end_chain(&sg(&[4, 6, 7]), 0).is_err());
    }

    #[test]
    fn dimension_bounds() {
        let b = stable_dim_bounds(&sg(&[4, 6, 7])).unwrap();
        assert_eq!((b.lower, b.upper), (Some(1), Some(1)));
        let b = stable_dim_bounds(&sg(&[2, 3])).unwrap();
        assert_eq!((b.lower, b.upper), (Some(0), Some(0)));
        let b = stable_dim_bounds(&sg(&[8, 10, 11, 12])).unwrap();
        assert_eq!((b.lower, b.upper), (Some(2), Some(2)));
        // Not Gorenstein: no upper bound, no lower bound.
        let b = stable_dim_bounds(&sg(&[3, 7, 8])).unwrap();
        assert_eq!((b.lower, b.upper), (None, None));
        assert!(stable_dim_bounds(&NumericalSemigroup::naturals()).is_err());
    }

    #[test]
    fn family_members() {
        assert_eq!(dyadic_family(1).unwrap().generators(), &[4, 6, 7]);
        assert_eq!(dyadic_family(2).unwrap().generators(), &[8, 10, 11, 12]);
        assert_eq!(dyadic_family(3).unwrap().generators(), &[16, 18, 19, 20, 24]);
        assert!(dyadic_family(0).is_err());
        assert!(dyadic_family(11).is_err());
    }

    #[test]
    fn family_verification() {
        for n in [1, 2, 5] {
            let v = verify_family(n).unwrap();
            assert!(v.passed(), "{v:?}");
        }
    }

    #[test]
    fn verdicts() {
        assert_eq!(syzygy_finite_type_verdict(&sg(&[3, 7, 11])).unwrap(), Verdict::Finite);
        assert_eq!(syzygy_finite_type_verdict(&sg(&[3, 7, 8])).unwrap(), Verdict::Finite);
        assert!(syzygy_finite_type_verdict(&NumericalSemigroup::naturals()).is_err());
    }

    #[test]
    fn verdict_for_wide_semigroup_follows_formula() {
        let h = sg(&[5, 6, 7, 8, 9]);
        let e = h.end_semigroup().unwrap();
        let ag = crate::classification::ag_nari(&h).unwrap();
        let expected = if finite_cm_type(&e) {
            Verdict::Finite
        } else if ag {
            Verdict::Infinite
        } else {
            Verdict::Unknown
        };
        assert_eq!(syzygy_finite_type_verdict(&h).unwrap(), expected);
    }
}
