//! Brute-force reference implementations that share no code with the
//! library: membership by dynamic programming, semigroups by gap-set
//! enumeration, ideal quotients straight from the definition.
#![allow(dead_code)]

/// `member[x]` for `0 <= x < limit`, by the recurrence `x in H` iff
/// `x - g in H` for some generator `g`.
pub fn membership(gens: &[i64], limit: usize) -> Vec<bool> {
    let mut member = vec![false; limit];
    if limit > 0 {
        member[0] = true;
    }
    for x in 1..limit {
        member[x] = gens
            .iter()
            .any(|&g| g > 0 && (g as usize) <= x && member[x - g as usize]);
    }
    member
}

/// Minimal generators of the semigroup `{0} ∪ {x >= 1 : x not a gap}`.
pub fn minimal_generators_from_gaps(gaps: &[i64]) -> Vec<i64> {
    let bound = gaps.iter().max().copied().unwrap_or(0) * 2 + 2;
    let member = |x: i64| x >= 0 && !gaps.contains(&x);
    (1..=bound)
        .filter(|&x| member(x) && !(1..x).any(|a| member(a) && member(x - a)))
        .collect()
}

/// Every numerical semigroup of genus exactly `g`, as sorted minimal
/// generator lists. Gaps of a genus-`g` semigroup lie in `[1, 2g - 1]`, so
/// this checks every `g`-subset of that interval for closure of the
/// complement.
pub fn semigroups_of_genus(g: usize) -> Vec<Vec<i64>> {
    if g == 0 {
        return vec![vec![1]];
    }
    let universe: Vec<i64> = (1..2 * g as i64).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(g);
    subsets(&universe, g, 0, &mut chosen, &mut out);
    out.sort();
    out
}

fn subsets(universe: &[i64], k: usize, start: usize, chosen: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if chosen.len() == k {
        if closed_complement(chosen) {
            out.push(minimal_generators_from_gaps(chosen));
        }
        return;
    }
    for i in start..universe.len() {
        if universe.len() - i < k - chosen.len() {
            break;
        }
        chosen.push(universe[i]);
        subsets(universe, k, i + 1, chosen, out);
        chosen.pop();
    }
}

fn closed_complement(gaps: &[i64]) -> bool {
    let top = *gaps.last().unwrap();
    let member = |x: i64| !gaps.contains(&x);
    (1..=top).all(|a| !member(a) || (1..=top - a).all(|b| !member(b) || member(a + b)))
}

/// A semigroup together with a membership table long enough for the
/// windows used below.
pub struct Table {
    pub gens: Vec<i64>,
    member: Vec<bool>,
}

impl Table {
    pub fn new(gens: &[i64], limit: usize) -> Self {
        Table {
            gens: gens.to_vec(),
            member: membership(gens, limit),
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as usize;
        assert!(x < self.member.len(), "membership table too short for {x}");
        self.member[x]
    }

    /// `x ∈ ⋃ (a + H)` over `ideal_gens`.
    pub fn in_ideal(&self, ideal_gens: &[i64], x: i64) -> bool {
        ideal_gens.iter().any(|&a| self.contains(x - a))
    }

    /// `x ∈ I - J` straight from the definition: `x + j ∈ I` for every
    /// `j ∈ J`. Elements of `J` are scanned up to `j_limit`; callers pick it
    /// so that `x + j` is past the conductor of `I` from there on.
    pub fn in_quotient(&self, i_gens: &[i64], j_gens: &[i64], x: i64, j_limit: i64) -> bool {
        let j_min = *j_gens.iter().min().unwrap();
        (j_min..=j_limit)
            .filter(|&j| self.in_ideal(j_gens, j))
            .all(|j| self.in_ideal(i_gens, x + j))
    }
}
