//! B-stable subspaces of the nilradical of `gl(n)` encoded by intervals.
//!
//! The positive root `α_a + … + α_b = e_a − e_{b+1}` is written `[a, b]`, with
//! `1 ≤ a ≤ b ≤ n−1`. The root order is `[a, b] ⪯ [a', b']` iff `a' ≤ a` and
//! `b ≤ b'`, so a B-stable subspace is an up-closed set of intervals and is determined
//! by its minimal members. Distinct minimal members `[a, b]`, `[a', b']` with `a < a'`
//! always have `b < b'`.

mod lemmas;
mod moves;
mod replay;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::weights::{block_decomposition, check_p, DominantWeight};

pub use lemmas::{lemma1_expand, lemma2_expand, lemma2_expand_reverse, Lemma2Spec};
pub use moves::{
    basic_move, check_certificate, CertificateFile, CheckFailure, CheckReport, Direction,
    MoveCertificate, MoveKind, MoveStep, Side, StepRecord,
};
pub use replay::{canonical_form, replay_theorem};

/// The positive root `[a, b] = α_a + … + α_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Interval {
    pub a: usize,
    pub b: usize,
}

impl Interval {
    pub fn new(a: usize, b: usize) -> Self {
        Interval { a, b }
    }

    /// `[i, j]` if it names a positive root of `GL(n)`.
    pub fn checked(a: i64, b: i64, n: usize) -> Option<Self> {
        (1 <= a && a <= b && b < n as i64).then(|| Interval::new(a as usize, b as usize))
    }

    /// `self ⪯ other` in the root order, i.e. `self ⊆ other` as intervals.
    pub fn precedes(&self, other: &Interval) -> bool {
        other.a <= self.a && self.b <= other.b
    }

    /// The root as a vector `e_a − e_{b+1}` in `Z^n`.
    pub fn root_vector(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        v[self.a - 1] += 1;
        v[self.b] -= 1;
        v
    }
}

impl From<[usize; 2]> for Interval {
    fn from([a, b]: [usize; 2]) -> Self {
        Interval { a, b }
    }
}

impl From<Interval> for [usize; 2] {
    fn from(iv: Interval) -> Self {
        [iv.a, iv.b]
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// A B-stable subspace `U` of the nilradical of `gl(n)`, stored as its minimal roots
/// sorted by left endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    n: usize,
    minimal: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty(n: usize) -> Self {
        IntervalSet {
            n,
            minimal: Vec::new(),
        }
    }

    /// The whole nilradical: all simple roots are minimal.
    pub fn full(n: usize) -> Self {
        IntervalSet {
            n,
            minimal: (1..n).map(|i| Interval::new(i, i)).collect(),
        }
    }

    /// Accepts only a list that is already a valid antichain of roots of `GL(n)`.
    pub fn from_minimal(n: usize, mut minimal: Vec<Interval>) -> Result<Self> {
        minimal.sort();
        for iv in &minimal {
            if iv.a < 1 || iv.a > iv.b || iv.b >= n {
                return Err(Error::InvalidIntervalSet(format!(
                    "{iv} is not a root of GL({n})"
                )));
            }
        }
        for pair in minimal.windows(2) {
            if !(pair[0].a < pair[1].a && pair[0].b < pair[1].b) {
                return Err(Error::InvalidIntervalSet(format!(
                    "{} and {} are not an antichain",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(IntervalSet { n, minimal })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn minimal(&self) -> &[Interval] {
        &self.minimal
    }

    pub fn is_empty(&self) -> bool {
        self.minimal.is_empty()
    }

    pub fn is_minimal(&self, iv: &Interval) -> bool {
        self.minimal.binary_search(iv).is_ok()
    }

    /// Whether the root `[x, y]` spans a root space of `U`. Out-of-range pairs are never roots.
    pub fn contains_root(&self, x: i64, y: i64) -> bool {
        if x < 1 || x > y || y >= self.n as i64 {
            return false;
        }
        self.minimal
            .iter()
            .any(|m| x <= m.a as i64 && m.b as i64 <= y)
    }

    pub fn dimension(&self) -> usize {
        roots_of(self).len()
    }

    /// Drops the minimal member `target` and adds `[a-1, b]`, `[a, b+1]`: the subspace
    /// with exactly the root `target` removed.
    pub(crate) fn without_root(&self, target: Interval) -> IntervalSet {
        let (a, b) = (target.a as i64, target.b as i64);
        let generators = self
            .minimal
            .iter()
            .filter(|iv| **iv != target)
            .map(|iv| (iv.a as i64, iv.b as i64))
            .chain([(a - 1, b), (a, b + 1)]);
        normalize(generators, self.n)
    }

    /// Adds `target` as a generator.
    pub(crate) fn with_root(&self, target: Interval) -> IntervalSet {
        let generators = self
            .minimal
            .iter()
            .chain([&target])
            .map(|iv| (iv.a as i64, iv.b as i64));
        normalize(generators, self.n)
    }

    /// Replaces minimal members by new generators and re-normalizes.
    pub(crate) fn replace(&self, remove: &[Interval], add: &[(i64, i64)]) -> IntervalSet {
        let generators = self
            .minimal
            .iter()
            .filter(|iv| !remove.contains(iv))
            .map(|iv| (iv.a as i64, iv.b as i64))
            .chain(add.iter().copied());
        normalize(generators, self.n)
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, iv) in self.minimal.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{iv}")?;
        }
        write!(f, "}}")
    }
}

/// The subspace generated by the given intervals.
///
/// Pairs that do not name a root of `GL(n)` (`a < 1`, `b > n−1` or `a > b`) are dropped;
/// members containing another member are removed.
pub fn normalize(generators: impl IntoIterator<Item = (i64, i64)>, n: usize) -> IntervalSet {
    let candidates: BTreeSet<Interval> = generators
        .into_iter()
        .filter_map(|(a, b)| Interval::checked(a, b, n))
        .collect();
    let minimal = candidates
        .iter()
        .filter(|iv| {
            !candidates
                .iter()
                .any(|other| other != *iv && other.precedes(iv))
        })
        .copied()
        .collect();
    IntervalSet { n, minimal }
}

/// All roots of `U`: the up-closure of its minimal members.
pub fn roots_of(u: &IntervalSet) -> BTreeSet<Interval> {
    let mut out = BTreeSet::new();
    for m in &u.minimal {
        for x in 1..=m.a {
            for y in m.b..u.n {
                out.insert(Interval::new(x, y));
            }
        }
    }
    out
}

/// `n_λ`: the span of the root spaces `[i, j]` with `λ_i − λ_{j+1} ≥ 2`.
pub fn n_from_weight(weight: &DominantWeight) -> IntervalSet {
    let w = weight.coords();
    let n = w.len();
    let generators = (1..n).flat_map(|i| {
        (i..n)
            .filter(move |&j| w[i - 1] - w[j] >= 2)
            .map(move |j| (i as i64, j as i64))
    });
    normalize(generators, n)
}

/// `n_{d,p}` built from block data: the intervals
/// `I_i = [s_{i+1} + p·m_i, s_i + p·m_{i−1}]` for `k ≥ i ≥ −k+1`.
pub fn n_dp(d: &Partition, p: i64) -> Result<IntervalSet> {
    let p = check_p(d, p)? as i64;
    let blocks = block_decomposition(d);
    let m = |a: i64| blocks.m(a) as i64;
    let s = |i: i64| blocks.s(i) as i64;
    let k = blocks.k as i64;
    Ok(normalize(
        (-k + 1..=k)
            .rev()
            .map(|i| (s(i + 1) + p * m(i), s(i) + p * m(i - 1))),
        blocks.n,
    ))
}

/// Whether `U` is stable under the minimal parabolic `P_{α_i}`: `[i, i] ∉ U`, and
/// lowering by `α_i` keeps every root of `U` inside `U`.
pub fn is_i_stable(u: &IntervalSet, i: usize) -> Result<bool> {
    if i < 1 || i >= u.n {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            max: u.n.saturating_sub(1),
        });
    }
    let ii = i as i64;
    if u.contains_root(ii, ii) {
        return Ok(false);
    }
    // Roots [i, y]: lowering gives [i+1, y]. Roots [x, i]: lowering gives [x, i-1].
    let left_ok = (i + 1..u.n).all(|y| {
        let y = y as i64;
        !u.contains_root(ii, y) || u.contains_root(ii + 1, y)
    });
    let right_ok = (1..i).all(|x| {
        let x = x as i64;
        !u.contains_root(x, ii) || u.contains_root(x, ii - 1)
    });
    Ok(left_ok && right_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::omega;

    fn set(n: usize, ivs: &[(usize, usize)]) -> IntervalSet {
        IntervalSet::from_minimal(n, ivs.iter().map(|&(a, b)| Interval::new(a, b)).collect())
            .unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize([(0, 3), (3, 3), (3, 9), (9, 9)], 12),
            set(12, &[(3, 3), (9, 9)])
        );
        assert!(normalize([], 5).is_empty());
        assert_eq!(normalize([(1, 2), (1, 3)], 4), set(4, &[(1, 2)]));
        assert_eq!(normalize([(2, 1), (1, 4)], 4), IntervalSet::empty(4));
    }

    #[test]
    fn from_minimal_rejects_chains() {
        let bad = vec![Interval::new(1, 2), Interval::new(1, 3)];
        assert!(IntervalSet::from_minimal(4, bad).is_err());
        // a < a' with b > b' means [2,2] ⊂ [1,3]
        let nested = vec![Interval::new(1, 3), Interval::new(2, 2)];
        assert!(IntervalSet::from_minimal(4, nested).is_err());
        assert!(IntervalSet::from_minimal(4, vec![Interval::new(1, 4)]).is_err());
    }

    #[test]
    fn roots_examples() {
        let r = roots_of(&set(4, &[(1, 2)]));
        assert_eq!(
            r.into_iter().collect::<Vec<_>>(),
            vec![Interval::new(1, 2), Interval::new(1, 3)]
        );
        assert!(roots_of(&IntervalSet::empty(6)).is_empty());
        assert_eq!(IntervalSet::full(3).dimension(), 3);
        assert_eq!(IntervalSet::full(5).dimension(), 10);
    }

    #[test]
    fn weight_examples() {
        let d = p(&[6, 3, 3]);
        assert_eq!(
            n_from_weight(&omega(&d, 1).unwrap()),
            set(12, &[(1, 3), (3, 5), (5, 9), (9, 10)])
        );
        assert_eq!(
            n_from_weight(&DominantWeight::new(vec![1, -1]).unwrap()),
            set(2, &[(1, 1)])
        );
        assert!(n_from_weight(&DominantWeight::zero(5)).is_empty());
    }

    #[test]
    fn n_dp_examples() {
        let d = p(&[6, 3, 3]);
        assert_eq!(
            n_dp(&d, 1).unwrap(),
            set(12, &[(1, 3), (3, 5), (5, 9), (9, 10)])
        );
        assert_eq!(n_dp(&d, 0).unwrap(), set(12, &[(3, 3), (9, 9)]));
        assert_eq!(n_dp(&p(&[1, 1]), 0).unwrap(), set(2, &[(1, 1)]));
        assert!(n_dp(&d, 3).is_err());
    }

    #[test]
    fn stability_examples() {
        assert!(!is_i_stable(&IntervalSet::full(4), 1).unwrap());
        let u = set(4, &[(1, 2)]);
        assert!(is_i_stable(&u, 3).unwrap());
        assert!(!is_i_stable(&u, 1).unwrap());
        assert!(is_i_stable(&u, 4).is_err());
        assert!(is_i_stable(&u, 0).is_err());
        assert!(is_i_stable(&set(12, &[(3, 3), (9, 9)]), 4).unwrap());
    }

    #[test]
    fn stable_subspace_of_dominant_weight() {
        // n_λ is P_{α_i}-stable wherever λ_i = λ_{i+1}, and never where λ_i − λ_{i+1} ≥ 2.
        let w = omega(&p(&[6, 3, 3]), 2).unwrap();
        let u = n_from_weight(&w);
        for i in 1..12 {
            let gap = w.coords()[i - 1] - w.coords()[i];
            let stable = is_i_stable(&u, i).unwrap();
            match gap {
                0 => assert!(stable, "i = {i}"),
                g if g >= 2 => assert!(!stable, "i = {i}"),
                _ => {}
            }
        }
    }
}
