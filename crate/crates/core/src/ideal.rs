//! Relative ideals of a numerical semigroup.
//!
//! A relative ideal `I ⊆ Z` is bounded below and satisfies `I + H ⊆ I`; it is
//! the exponent set of a monomial fractional ideal of `k[[t^H]]`, which is a
//! rank-one Cohen–Macaulay module. The colon `I :_Q J` becomes the set
//! difference `I - J = { z : z + J ⊆ I }` and the product `IJ` becomes the sum
//! set `I + J`, so all the module-level identities we need reduce to exact
//! integer-set arithmetic on finite windows.
//!
//! Every binary operation first bounds the window outside which the result is
//! forced (empty below, everything above), then evaluates membership only
//! inside it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    base: NumericalSemigroup,
    offset: i64,
    /// Membership of `offset + i` for `0 <= i < profile.len()`; everything
    /// from `offset + profile.len()` on is a member. When nonempty, the first
    /// entry is true and the last is false.
    profile: Vec<bool>,
}

impl RelativeIdeal {
    /// Canonical ideal from a membership predicate on `[lo, hi)`. Integers
    /// below `lo` are non-members and integers `>= hi` are members.
    fn from_window(base: &NumericalSemigroup, lo: i64, hi: i64, member: impl Fn(i64) -> bool) -> Self {
        let hi = hi.max(lo);
        let inside: Vec<bool> = (lo..hi).map(member).collect();
        let first = inside.iter().position(|&b| b).unwrap_or(inside.len());
        let last_gap = inside.iter().rposition(|&b| !b);
        let offset = lo + first as i64;
        let profile = match last_gap {
            Some(g) if g > first => inside[first..=g].to_vec(),
            _ => Vec::new(),
        };
        RelativeIdeal {
            base: base.clone(),
            offset,
            profile,
        }
    }

    /// `⋃ (g + H)` over `gens`.
    pub fn from_generators(base: &NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        let (Some(&lo), Some(&hi)) = (gens.iter().min(), gens.iter().max()) else {
            return Err(Error::InvalidArgument("ideal needs at least one generator".into()));
        };
        Ok(Self::from_window(base, lo, hi + base.conductor(), |x| {
            gens.iter().any(|&g| base.contains(x - g))
        }))
    }

    /// `H` viewed as an ideal of itself.
    pub fn principal(base: &NumericalSemigroup) -> Self {
        Self::from_window(base, 0, base.conductor(), |x| base.contains(x))
    }

    /// The maximal ideal `M = H \ {0}`.
    pub fn maximal(base: &NumericalSemigroup) -> Self {
        Self::from_window(base, 1, base.conductor().max(1), |x| base.contains(x))
    }

    /// The integral closure `N` (all nonnegative integers) as an ideal.
    pub fn naturals(base: &NumericalSemigroup) -> Self {
        Self::from_window(base, 0, 0, |_| true)
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    /// Least element.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Number of profile entries: every `x >= offset + conductor_index` is a member.
    pub fn conductor_index(&self) -> usize {
        self.profile.len()
    }

    /// Absolute conductor `offset + conductor_index`.
    pub fn conductor(&self) -> i64 {
        self.offset + self.profile.len() as i64
    }

    pub fn profile(&self) -> &[bool] {
        &self.profile
    }

    pub fn contains(&self, x: i64) -> bool {
        let rel = x - self.offset;
        if rel < 0 {
            false
        } else if rel as usize >= self.profile.len() {
            true
        } else {
            self.profile[rel as usize]
        }
    }

    /// Members below the conductor, ascending.
    pub fn members_below_conductor(&self) -> Vec<i64> {
        (self.offset..self.conductor()).filter(|&x| self.contains(x)).collect()
    }

    fn same_base(&self, other: &Self) -> Result<()> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }

    pub fn shift(&self, z: i64) -> Self {
        RelativeIdeal {
            base: self.base.clone(),
            offset: self.offset + z,
            profile: self.profile.clone(),
        }
    }

    /// Sum set `I + J`, the exponent set of the product ideal.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        let gens = self.minimal_generators();
        let lo = self.offset + other.offset;
        let hi = self.conductor() + other.offset;
        Ok(Self::from_window(&self.base, lo, hi, |x| {
            gens.iter().any(|&a| other.contains(x - a))
        }))
    }

    /// Colon `I - J = { z : z + J ⊆ I }`, tested against the minimal
    /// generators of `J`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        self.same_base(other)?;
        let gens = other.minimal_generators();
        let lo = self.offset - other.offset;
        let hi = self.conductor() - other.offset;
        let out = Self::from_window(&self.base, lo, hi, |z| gens.iter().all(|&g| self.contains(z + g)));
        let largest = *gens.last().expect("ideals are nonzero");
        assert!(
            out.offset >= self.offset - largest,
            "quotient offset below window bound"
        );
        assert!(out.conductor() <= hi, "quotient conductor above window bound");
        Ok(out)
    }

    /// `Hom(I, R)` as the colon `H - I`.
    pub fn dual(&self) -> Self {
        Self::principal(&self.base)
            .quotient(self)
            .expect("dual is taken over the ideal's own base")
    }

    /// `(dual(dual(I)), I is reflexive)`.
    pub fn reflexive_closure(&self) -> (Self, bool) {
        let closure = self.dual().dual();
        let reflexive = closure == *self;
        (closure, reflexive)
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexive_closure().1
    }

    /// The unique minimal monomial generating set `I \ (I + M)`, ascending.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let hgens = self.base.generators();
        let top = self.conductor() + hgens.last().copied().unwrap_or(1);
        (self.offset..top)
            .filter(|&x| self.contains(x) && hgens.iter().all(|&g| !self.contains(x - g)))
            .collect()
    }

    /// Module isomorphism: `Some(z)` when `other = self + z`.
    pub fn is_isomorphic(&self, other: &Self) -> Result<Option<i64>> {
        self.same_base(other)?;
        Ok((self.profile == other.profile).then_some(other.offset - self.offset))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        let top = self.conductor().max(other.conductor());
        self.offset >= other.offset && (self.offset..top).all(|x| !self.contains(x) || other.contains(x))
    }

    /// Same set viewed over a smaller semigroup `sub ⊆ base`.
    pub fn restrict_scalars(&self, sub: &NumericalSemigroup) -> Result<Self> {
        if !sub.generators().iter().all(|&g| self.base.contains(g)) {
            return Err(Error::InvalidArgument(format!(
                "{sub} is not contained in {}",
                self.base
            )));
        }
        Ok(RelativeIdeal {
            base: sub.clone(),
            offset: self.offset,
            profile: self.profile.clone(),
        })
    }

    /// Reads the ideal as a semigroup; needs `0` as least element and
    /// closure under addition.
    pub fn to_semigroup(&self) -> Result<NumericalSemigroup> {
        if self.offset != 0 {
            return Err(Error::InvalidArgument(format!(
                "ideal with least element {} is not a semigroup",
                self.offset
            )));
        }
        NumericalSemigroup::from_membership(self.conductor(), |x| self.contains(x))
    }

    /// Checks stability under `H` on the finite window where it can fail.
    pub fn is_stable(&self) -> bool {
        let gens = self.base.generators();
        (self.offset..self.conductor())
            .filter(|&x| self.contains(x))
            .all(|x| gens.iter().all(|&g| self.contains(x + g)))
    }

    pub fn to_record(&self) -> IdealRecord {
        IdealRecord {
            offset: self.offset,
            members: (0..self.profile.len() as i64)
                .filter(|&i| self.profile[i as usize])
                .collect(),
            conductor: self.profile.len() as i64,
        }
    }

    pub fn from_record(base: &NumericalSemigroup, rec: &IdealRecord) -> Result<Self> {
        if rec.conductor < 0 || rec.members.iter().any(|&m| m < 0 || m >= rec.conductor) {
            return Err(Error::InvalidArgument(
                "ideal record members outside [0, conductor)".into(),
            ));
        }
        let lo = rec.offset;
        let out = Self::from_window(base, lo, lo + rec.conductor, |x| rec.members.contains(&(x - lo)));
        if out.offset != rec.offset || out.profile.len() as i64 != rec.conductor {
            return Err(Error::InvalidArgument("ideal record is not in canonical form".into()));
        }
        if !out.is_stable() {
            return Err(Error::InvalidArgument(
                "ideal record is not closed under the semigroup".into(),
            ));
        }
        Ok(out)
    }
}

/// Report-file form of an ideal: `members` are offsets relative to `offset`
/// inside `[0, conductor)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub offset: i64,
    pub members: Vec<i64>,
    pub conductor: i64,
}

impl Serialize for RelativeIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_record().serialize(serializer)
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for x in self.members_below_conductor() {
            write!(f, "{x}, ")?;
        }
        write!(f, "{}, ...}}", self.conductor())
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelativeIdeal(over {}: {})", self.base, self)
    }
}

impl NumericalSemigroup {
    /// The canonical ideal `K = { x : F - x ∉ H }`, with `H ⊆ K ⊆ N`.
    pub fn canonical_ideal(&self) -> Result<RelativeIdeal> {
        if self.is_naturals() {
            return Err(Error::RegularRing("canonical ideal"));
        }
        let f = self.frobenius();
        Ok(RelativeIdeal::from_window(self, 0, f + 1, |x| !self.contains(f - x)))
    }

    /// `M - M` as an ideal of `H`: the exponent set of `End(m)`.
    pub fn endomorphism_ideal(&self) -> Result<RelativeIdeal> {
        if self.is_naturals() {
            return Err(Error::RegularRing("endomorphism ring of the maximal ideal"));
        }
        let m = RelativeIdeal::maximal(self);
        m.quotient(&m)
    }

    /// `M - M` as a semigroup.
    pub fn end_semigroup(&self) -> Result<NumericalSemigroup> {
        self.endomorphism_ideal()?.to_semigroup()
    }
}

/// Parses `"g1,g2,..."` or `"@z:g1,g2,..."`; with the `@z:` prefix every
/// generator is shifted by `z`.
pub fn parse_ideal(base: &NumericalSemigroup, text: &str) -> Result<RelativeIdeal> {
    let (shift, body) = match text.trim().strip_prefix('@') {
        Some(rest) => {
            let (z, body) = rest
                .split_once(':')
                .ok_or_else(|| Error::InvalidArgument(format!("expected @offset:gens, got {text:?}")))?;
            let z = z
                .trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidArgument(format!("bad offset {z:?}")))?;
            (z, body)
        }
        None => (0, text),
    };
    let gens = body
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map(|g| g + shift)
                .map_err(|_| Error::InvalidArgument(format!("bad ideal generator {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    RelativeIdeal::from_generators(base, &gens)
}
