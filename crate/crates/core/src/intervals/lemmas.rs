//! Two composite rewrites, each expanded into checked basic moves.
//!
//! The *shift* rewrite replaces a minimal interval `[a, b]` by the staircase
//! `[a−j+1, d−j]`, `1 ≤ j ≤ d−b`, using right-side shrinks only. The *chain* rewrite
//! trades `[b_0, b_1]` for `[b_0, b_1−1]` and `[b_l+1, b_{l+1}]` for `[b_l, b_{l+1}]`
//! across a ladder of intermediate intervals, by growing the middles, moving the ends and
//! shrinking the middles back.

use super::moves::{Direction, MoveCertificate, Side};
use super::{Interval, IntervalSet};
use crate::error::{Error, Result};

const SHIFT: &str = "shift lemma";
const CHAIN: &str = "chain lemma";

fn hypothesis(lemma: &'static str, text: impl Into<String>) -> Error {
    Error::Hypothesis {
        lemma,
        hypothesis: text.into(),
    }
}

fn interval(lemma: &'static str, a: i64, b: i64, n: usize) -> Result<Interval> {
    Interval::checked(a, b, n)
        .ok_or_else(|| hypothesis(lemma, format!("[{a},{b}] is not a root of GL({n})")))
}

/// Applies a move inside a lemma, attaching the move index to any error.
fn step(
    cert: &mut MoveCertificate,
    lemma: &'static str,
    target: Interval,
    side: Side,
    direction: Direction,
) -> Result<()> {
    let index = cert.len();
    cert.apply(target, side, direction)
        .map_err(|e| Error::Expansion {
            lemma,
            index,
            source: Box::new(e),
        })
}

/// Expands the shift rewrite of the minimal interval `target = [a, b]` up to `d > b`.
///
/// Requires `U` to be `i`-stable for `b < i < d`. Level `t` pushes the residual
/// `[a−t+1, b]` right to `[a−t+1, d−t]`; once the residual leaves the range of roots or
/// is no longer minimal, every remaining staircase interval is already a root and the
/// expansion stops. The final state is checked against
/// `normalize(U − [a, b] + {[a−j+1, d−j]})`.
pub fn lemma1_expand(u: &IntervalSet, target: Interval, d: usize) -> Result<MoveCertificate> {
    let n = u.n();
    let (a, b) = (target.a, target.b);
    if !u.is_minimal(&target) {
        return Err(hypothesis(SHIFT, format!("{target} is not minimal in {u}")));
    }
    if d <= b || d > n {
        return Err(hypothesis(SHIFT, format!("need {b} < d = {d} <= {n}")));
    }
    for i in b + 1..d {
        if !super::is_i_stable(u, i)? {
            return Err(hypothesis(SHIFT, format!("{u} is not {i}-stable")));
        }
    }

    let mut cert = MoveCertificate::empty(u.clone());
    let mut t = 1;
    while d - t > b {
        let left = a as i64 - t as i64 + 1;
        let residual = match Interval::checked(left, b as i64, n) {
            Some(r) if cert.final_state.is_minimal(&r) => r,
            _ => break,
        };
        let mut cur = residual;
        for _ in b + 1..=d - t {
            step(&mut cert, SHIFT, cur, Side::Right, Direction::Shrink)?;
            cur.b += 1;
        }
        t += 1;
    }

    let staircase = (1..=(d - b) as i64).map(|j| (a as i64 - j + 1, d as i64 - j));
    let claimed = u.replace(&[target], &staircase.collect::<Vec<_>>());
    if cert.final_state != claimed {
        return Err(hypothesis(
            SHIFT,
            format!(
                "expansion ends at {} instead of {claimed}",
                cert.final_state
            ),
        ));
    }
    Ok(cert)
}

/// Break points of a chain rewrite.
///
/// `breaks = [b_1, …, b_{l+1}]` with `l ≥ 1`. `first_left = Some(b_0)` includes the
/// trade `[b_0, b_1] → [b_0, b_1−1]`; `include_last` includes
/// `[b_l+1, b_{l+1}] → [b_l, b_{l+1}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma2Spec {
    pub first_left: Option<usize>,
    pub breaks: Vec<usize>,
    pub include_last: bool,
}

impl Lemma2Spec {
    fn l(&self) -> usize {
        self.breaks.len() - 1
    }

    /// `b_j` for `1 ≤ j ≤ l+1`.
    fn b(&self, j: usize) -> i64 {
        self.breaks[j - 1] as i64
    }

    /// The minimal members traded away (`before`) and gained (`after`) in the forward
    /// direction.
    fn trades(&self, n: usize) -> Result<(Vec<Interval>, Vec<Interval>)> {
        let l = self.l();
        let (mut before, mut after) = (Vec::new(), Vec::new());
        if let Some(b0) = self.first_left {
            before.push(interval(CHAIN, b0 as i64, self.b(1), n)?);
            after.push(interval(CHAIN, b0 as i64, self.b(1) - 1, n)?);
        }
        if self.include_last {
            before.push(interval(CHAIN, self.b(l) + 1, self.b(l + 1), n)?);
            after.push(interval(CHAIN, self.b(l), self.b(l + 1), n)?);
        }
        Ok((before, after))
    }
}

/// Whether `[x, y]` is a root of `u` through some minimal member other than `skip`.
fn root_apart_from(u: &IntervalSet, skip: Interval, x: i64, y: i64) -> bool {
    u.minimal()
        .iter()
        .any(|m| *m != skip && (m.a as i64) >= x && (m.b as i64) <= y)
}

fn check_chain(u: &IntervalSet, spec: &Lemma2Spec) -> Result<()> {
    let n = u.n();
    if spec.breaks.len() < 2 {
        return Err(hypothesis(CHAIN, "need at least two break points"));
    }
    let l = spec.l();
    let b = |j| spec.b(j);
    let minimal = |a: i64, bb: i64, what: &str| -> Result<()> {
        let iv = interval(CHAIN, a, bb, n)?;
        if u.is_minimal(&iv) {
            Ok(())
        } else {
            Err(hypothesis(
                CHAIN,
                format!("{what} {iv} is not minimal in {u}"),
            ))
        }
    };
    for j in 1..l {
        if b(j) > b(j + 1) - 2 {
            return Err(hypothesis(
                CHAIN,
                format!(
                    "break points b_{j} = {}, b_{} = {} too close",
                    b(j),
                    j + 1,
                    b(j + 1)
                ),
            ));
        }
        minimal(b(j) + 1, b(j + 1), "lower interval")?;
        minimal(b(j), b(j + 1) - 1, "upper interval")?;
    }
    if let Some(iv) = u.minimal().iter().find(|iv| iv.a as i64 == b(l)) {
        return Err(hypothesis(
            CHAIN,
            format!("minimal interval {iv} starts at b_l = {}", b(l)),
        ));
    }
    if let Some(b0) = spec.first_left {
        let b0 = b0 as i64;
        minimal(b0, b(1), "first interval")?;
        let first = interval(CHAIN, b0, b(1), n)?;
        if b0 >= 2 && !root_apart_from(u, first, b0 - 1, b(1) - 1) {
            return Err(hypothesis(
                CHAIN,
                format!(
                    "no interval of {u} besides {first} lies in [{},{}]",
                    b0 - 1,
                    b(1) - 1
                ),
            ));
        }
    }
    if spec.include_last {
        minimal(b(l) + 1, b(l + 1), "last interval")?;
        let last = interval(CHAIN, b(l) + 1, b(l + 1), n)?;
        if b(l + 1) <= n as i64 - 2 && !root_apart_from(u, last, b(l) + 1, b(l + 1) + 1) {
            return Err(hypothesis(
                CHAIN,
                format!(
                    "no interval of {u} besides {last} lies in [{},{}]",
                    b(l) + 1,
                    b(l + 1) + 1
                ),
            ));
        }
    }
    Ok(())
}

/// Expands the chain rewrite forwards from `u`.
///
/// Move order: grow each middle `[b_j+1, b_{j+1}−1]` on the right; grow the first trade;
/// shrink the last trade on the left; shrink the middles on the left. Growing the first
/// end before shrinking the last one matters when `l = 1`, where the two ends share a
/// stabilizing index.
pub fn lemma2_expand(u: &IntervalSet, spec: &Lemma2Spec) -> Result<MoveCertificate> {
    check_chain(u, spec)?;
    let n = u.n();
    let l = spec.l();
    let b = |j| spec.b(j);
    let middles = (1..l)
        .map(|j| interval(CHAIN, b(j) + 1, b(j + 1) - 1, n))
        .collect::<Result<Vec<_>>>()?;

    let mut cert = MoveCertificate::empty(u.clone());
    for &m in &middles {
        step(&mut cert, CHAIN, m, Side::Right, Direction::Grow)?;
    }
    if let Some(b0) = spec.first_left {
        let first = interval(CHAIN, b0 as i64, b(1) - 1, n)?;
        step(&mut cert, CHAIN, first, Side::Right, Direction::Grow)?;
    }
    if spec.include_last {
        let last = interval(CHAIN, b(l) + 1, b(l + 1), n)?;
        step(&mut cert, CHAIN, last, Side::Left, Direction::Shrink)?;
    }
    for &m in &middles {
        step(&mut cert, CHAIN, m, Side::Left, Direction::Shrink)?;
    }

    let (before, after) = spec.trades(n)?;
    let add: Vec<_> = after.iter().map(|iv| (iv.a as i64, iv.b as i64)).collect();
    let claimed = u.replace(&before, &add);
    if cert.final_state != claimed {
        return Err(hypothesis(
            CHAIN,
            format!(
                "expansion ends at {} instead of {claimed}",
                cert.final_state
            ),
        ));
    }
    Ok(cert)
}

/// The chain rewrite applied backwards: starting from the rewritten subspace `u_prime`,
/// rebuild the original, expand forwards, and invert.
pub fn lemma2_expand_reverse(u_prime: &IntervalSet, spec: &Lemma2Spec) -> Result<MoveCertificate> {
    if spec.breaks.len() < 2 {
        return Err(hypothesis(CHAIN, "need at least two break points"));
    }
    let (before, after) = spec.trades(u_prime.n())?;
    for iv in &after {
        if !u_prime.is_minimal(iv) {
            return Err(hypothesis(
                CHAIN,
                format!("{iv} is not minimal in {u_prime}"),
            ));
        }
    }
    let add: Vec<_> = before.iter().map(|iv| (iv.a as i64, iv.b as i64)).collect();
    let original = u_prime.replace(&after, &add);
    let forward = lemma2_expand(&original, spec)?;
    if &forward.final_state != u_prime {
        return Err(hypothesis(
            CHAIN,
            format!(
                "reverse expansion ends at {} instead of {u_prime}",
                forward.final_state
            ),
        ));
    }
    Ok(forward.inverse())
}
