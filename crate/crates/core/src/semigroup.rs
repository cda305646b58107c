//! Numerical semigroups: cofinite submonoids of the nonnegative integers.
//!
//! A [`NumericalSemigroup`] stands for the monomial ring `k[[t^h : h in H]]`.
//! The value is canonical: the generators stored are always the unique minimal
//! system, sorted, so two semigroups compare equal exactly when they are the
//! same set.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest Frobenius number for which a membership table is built.
pub const MAX_FROBENIUS: i64 = 1 << 24;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    /// `gaps[x]` is true iff `x` is not a member, for `0 <= x <= frobenius`.
    gaps: Vec<bool>,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, reduced to its minimal generating
    /// system.
    ///
    /// The Frobenius number comes from the Apéry set with respect to the
    /// smallest generator, computed as shortest paths over the residues.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let d = gens.iter().fold(0i64, |acc, g| acc.gcd(g));
        if d != 1 {
            return Err(Error::NotNumericalSemigroup(d));
        }

        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let apery = shortest_residue_paths(&sorted);
        let m = sorted[0];
        let frobenius = apery.iter().copied().max().unwrap_or(0) - m;
        if frobenius > MAX_FROBENIUS {
            return Err(Error::TooLarge(frobenius));
        }

        let gaps: Vec<bool> = (0..=frobenius).map(|x| x < apery[x.rem_euclid(m) as usize]).collect();

        let mut sg = NumericalSemigroup {
            generators: Vec::new(),
            frobenius,
            gaps,
        };
        // A minimal generator is a nonzero member that is not a sum of two
        // nonzero members; anything above max(F + m, m) never qualifies.
        let generators = sorted
            .into_iter()
            .filter(|&g| g <= (frobenius + m).max(m) && !(1..g).any(|x| sg.contains(x) && sg.contains(g - x)))
            .collect();
        sg.generators = generators;
        Ok(sg)
    }

    /// The semigroup of all nonnegative integers (the regular ring `k[[t]]`).
    pub fn naturals() -> Self {
        NumericalSemigroup {
            generators: vec![1],
            frobenius: -1,
            gaps: Vec::new(),
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x > self.frobenius {
            true
        } else {
            !self.gaps[x as usize]
        }
    }

    /// Sorted minimal generators.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Largest integer outside the semigroup; `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Least conductor: every integer `>= conductor()` is a member.
    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// `(multiplicity, embedding dimension)`.
    pub fn embedding_data(&self) -> (i64, usize) {
        (self.multiplicity(), self.embedding_dimension())
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius < 0
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..=self.frobenius).filter(|&x| !self.contains(x)).collect()
    }

    pub fn genus(&self) -> usize {
        self.gaps.iter().filter(|&&g| g).count()
    }

    /// `(gaps, genus)`.
    pub fn gaps_and_genus(&self) -> (Vec<i64>, usize) {
        let gaps = self.gaps();
        let genus = gaps.len();
        (gaps, genus)
    }

    /// Least member of each residue class modulo `n`, indexed by residue.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::InvalidArgument(format!(
                "Apéry set needs a positive member, got {n}"
            )));
        }
        let mut out = vec![-1i64; n as usize];
        let mut missing = n;
        let mut x = 0;
        while missing > 0 {
            let r = (x % n) as usize;
            if out[r] < 0 && self.contains(x) {
                out[r] = x;
                missing -= 1;
            }
            x += 1;
        }
        Ok(out)
    }

    /// Gaps `x` with `x + (H \ {0}) ⊆ H`, ascending. The count is the type.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>> {
        if self.is_naturals() {
            return Err(Error::RegularRing("pseudo-Frobenius numbers"));
        }
        Ok(self
            .gaps()
            .into_iter()
            .filter(|&x| self.generators.iter().all(|&g| self.contains(x + g)))
            .collect())
    }

    /// Cohen–Macaulay type. `N` has type 1.
    pub fn semigroup_type(&self) -> usize {
        match self.pseudo_frobenius() {
            Ok(pf) => pf.len(),
            Err(_) => 1,
        }
    }

    /// `x ∈ H` xor `F - x ∈ H` for every integer `x` (Gorenstein).
    pub fn is_symmetric(&self) -> Result<bool> {
        if self.is_naturals() {
            return Err(Error::RegularRing("symmetry"));
        }
        let f = self.frobenius;
        Ok((0..=f).all(|x| self.contains(x) != self.contains(f - x)))
    }

    /// The comma-separated minimal generators, e.g. `"3,7,11"`.
    pub fn descriptor(&self) -> String {
        self.generators.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
    }

    /// Children in the genus tree: remove one minimal generator exceeding
    /// the Frobenius number. Ascending by the removed generator.
    pub fn children(&self) -> Vec<NumericalSemigroup> {
        self.generators
            .iter()
            .filter(|&&g| g > self.frobenius)
            .map(|&g| {
                // S \ {g} is generated by the other generators, g + each
                // generator, and 2g, 3g.
                let mut cand: Vec<i64> = self.generators.iter().copied().filter(|&a| a != g).collect();
                cand.extend(self.generators.iter().map(|&a| g + a));
                cand.push(3 * g);
                NumericalSemigroup::from_generators(&cand)
                    .expect("removing a generator above F keeps the semigroup cofinite")
            })
            .collect()
    }

    /// Builds a semigroup from a membership predicate that is known to hold
    /// for every `x >= conductor`.
    pub(crate) fn from_membership(conductor: i64, member: impl Fn(i64) -> bool) -> Result<Self> {
        if !member(0) {
            return Err(Error::InvalidArgument("0 is not a member".into()));
        }
        let conductor = conductor.max(1);
        let m = (1..=conductor).find(|&x| member(x)).unwrap_or(conductor);
        let cand: Vec<i64> = (1..conductor + m).filter(|&x| x >= conductor || member(x)).collect();
        let sg = NumericalSemigroup::from_generators(&cand)?;
        if (0..conductor).any(|x| sg.contains(x) != member(x)) {
            return Err(Error::InvalidArgument("set is not closed under addition".into()));
        }
        Ok(sg)
    }
}

/// Dijkstra over residues mod the smallest generator: entry `r` is the least
/// member congruent to `r`.
fn shortest_residue_paths(sorted_gens: &[i64]) -> Vec<i64> {
    let m = sorted_gens[0];
    let n = m as usize;
    let mut dist = vec![i64::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0i64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &sorted_gens[1..] {
            let next = (r + (g % m) as usize) % n;
            let nd = d + g;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.generators.cmp(&other.generators)
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<i64>> for NumericalSemigroup {
    type Error = Error;

    fn try_from(gens: Vec<i64>) -> Result<Self> {
        NumericalSemigroup::from_generators(&gens)
    }
}

impl From<NumericalSemigroup> for Vec<i64> {
    fn from(sg: NumericalSemigroup) -> Self {
        sg.generators
    }
}

impl std::str::FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let gens = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad generator {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        NumericalSemigroup::from_generators(&gens)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.descriptor())
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup<{}>", self.descriptor())
    }
}
