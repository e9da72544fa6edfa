//! The basic move and machine-checkable certificates built from it.
//!
//! A basic move removes (shrink) or adds (grow) a single root `[a, b]` that is minimal in
//! the larger of the two subspaces. It is admissible when the larger subspace is
//! `(a−1)`-stable (left side) or `(b+1)`-stable (right side); the root `[a, b]` then pairs
//! to `−1` with the corresponding simple coroot and the two subspaces are
//! `G/B`-equivalent. Every other rewrite in this crate expands into basic moves, so
//! [`check_certificate`] only has to re-run this one rule.

use serde::{Deserialize, Serialize};

use super::{is_i_stable, Interval, IntervalSet};
use crate::error::{Error, MoveViolation, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Basic,
}

/// Which simple root stabilizes the larger subspace: `α_{a−1}` or `α_{b+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Remove the target root.
    Shrink,
    /// Add the target root.
    Grow,
}

impl Direction {
    pub fn flipped(self) -> Self {
        match self {
            Direction::Shrink => Direction::Grow,
            Direction::Grow => Direction::Shrink,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveStep {
    pub kind: MoveKind,
    pub target: Interval,
    pub side: Side,
    pub direction: Direction,
    pub before: IntervalSet,
    pub after: IntervalSet,
}

impl MoveStep {
    /// The same move read backwards.
    pub fn inverse(&self) -> MoveStep {
        MoveStep {
            kind: self.kind,
            target: self.target,
            side: self.side,
            direction: self.direction.flipped(),
            before: self.after.clone(),
            after: self.before.clone(),
        }
    }

    /// Simple-root index whose parabolic must stabilize the larger subspace.
    pub fn stabilizer(&self) -> i64 {
        stabilizer(self.target, self.side)
    }
}

fn stabilizer(target: Interval, side: Side) -> i64 {
    match side {
        Side::Left => target.a as i64 - 1,
        Side::Right => target.b as i64 + 1,
    }
}

fn violation(target: Interval, violation: MoveViolation) -> Error {
    Error::Move { target, violation }
}

/// Validates the shrink of `larger` at `target` and returns the smaller subspace.
fn shrink_from(larger: &IntervalSet, target: Interval, side: Side) -> Result<IntervalSet> {
    let n = larger.n();
    if target.a < 1 || target.a > target.b || target.b >= n {
        return Err(violation(target, MoveViolation::TargetOutOfRange { n }));
    }
    if !larger.is_minimal(&target) {
        return Err(violation(target, MoveViolation::NotMinimal));
    }
    let index = stabilizer(target, side);
    if index < 1 || index >= n as i64 {
        return Err(violation(target, MoveViolation::SideOutOfRange { index }));
    }
    if !is_i_stable(larger, index as usize)? {
        return Err(violation(
            target,
            MoveViolation::NotStable {
                index: index as usize,
            },
        ));
    }
    Ok(larger.without_root(target))
}

/// Applies one basic move to `u`, checking every precondition.
///
/// Shrink: `target` must be minimal in `u` and `u` stable at the chosen side.
/// Grow: `target` must not be a root of `u`, adding it must add exactly that root, and
/// the result must be stable at the chosen side.
pub fn basic_move(
    u: &IntervalSet,
    target: Interval,
    side: Side,
    direction: Direction,
) -> Result<MoveStep> {
    let after = match direction {
        Direction::Shrink => shrink_from(u, target, side)?,
        Direction::Grow => {
            let n = u.n();
            if target.a < 1 || target.a > target.b || target.b >= n {
                return Err(violation(target, MoveViolation::TargetOutOfRange { n }));
            }
            if u.contains_root(target.a as i64, target.b as i64) {
                return Err(violation(target, MoveViolation::AlreadyPresent));
            }
            let larger = u.with_root(target);
            let back = shrink_from(&larger, target, side)?;
            if &back != u {
                return Err(violation(target, MoveViolation::NotSingleRoot));
            }
            larger
        }
    };
    Ok(MoveStep {
        kind: MoveKind::Basic,
        target,
        side,
        direction,
        before: u.clone(),
        after,
    })
}

/// A chain of basic moves from `initial` to `final_state`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveCertificate {
    pub initial: IntervalSet,
    pub final_state: IntervalSet,
    pub steps: Vec<MoveStep>,
}

impl MoveCertificate {
    pub fn empty(initial: IntervalSet) -> Self {
        MoveCertificate {
            final_state: initial.clone(),
            initial,
            steps: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.initial.n()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies a checked basic move to the current final state.
    pub fn apply(&mut self, target: Interval, side: Side, direction: Direction) -> Result<()> {
        let step = basic_move(&self.final_state, target, side, direction)?;
        self.final_state = step.after.clone();
        self.steps.push(step);
        Ok(())
    }

    /// Concatenates `other`, which must start where `self` ends.
    pub fn append(&mut self, other: MoveCertificate) {
        assert_eq!(
            self.final_state, other.initial,
            "appended certificate does not continue the chain"
        );
        self.final_state = other.final_state;
        self.steps.extend(other.steps);
    }

    /// The certificate read backwards, from `final_state` to `initial`.
    pub fn inverse(&self) -> MoveCertificate {
        MoveCertificate {
            initial: self.final_state.clone(),
            final_state: self.initial.clone(),
            steps: self.steps.iter().rev().map(MoveStep::inverse).collect(),
        }
    }

    pub fn to_file(&self) -> CertificateFile {
        let ivs = |s: &IntervalSet| s.minimal().to_vec();
        CertificateFile {
            n: self.n(),
            initial: ivs(&self.initial),
            final_state: ivs(&self.final_state),
            steps: self
                .steps
                .iter()
                .map(|s| StepRecord {
                    kind: s.kind,
                    target: s.target,
                    side: s.side,
                    direction: s.direction,
                    before: ivs(&s.before),
                    after: ivs(&s.after),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("certificate serializes")
    }
}

/// On-disk form of a certificate. Interval sets are lists of `[a, b]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub n: usize,
    pub initial: Vec<Interval>,
    #[serde(rename = "final")]
    pub final_state: Vec<Interval>,
    pub steps: Vec<StepRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub kind: MoveKind,
    pub target: Interval,
    pub side: Side,
    pub direction: Direction,
    pub before: Vec<Interval>,
    pub after: Vec<Interval>,
}

impl CertificateFile {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Rebuilds the certificate; fails if any recorded set is not a valid antichain.
    pub fn into_certificate(self) -> Result<MoveCertificate> {
        let n = self.n;
        let set = |ivs: Vec<Interval>, what: String| {
            IntervalSet::from_minimal(n, ivs)
                .map_err(|e| Error::InvalidIntervalSet(format!("{what}: {e}")))
        };
        let steps = self
            .steps
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                Ok(MoveStep {
                    kind: s.kind,
                    target: s.target,
                    side: s.side,
                    direction: s.direction,
                    before: set(s.before, format!("step {i} before"))?,
                    after: set(s.after, format!("step {i} after"))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MoveCertificate {
            initial: set(self.initial, "initial".into())?,
            final_state: set(self.final_state, "final".into())?,
            steps,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    /// Index of the first bad step, or `None` when the chain endpoints are wrong.
    pub step: Option<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub passed: bool,
    pub steps_checked: usize,
    pub failure: Option<CheckFailure>,
}

/// Re-runs every step from its recorded `before` state and compares with the record.
pub fn check_certificate(cert: &MoveCertificate) -> CheckReport {
    let fail = |step: Option<usize>, checked: usize, reason: String| CheckReport {
        passed: false,
        steps_checked: checked,
        failure: Some(CheckFailure { step, reason }),
    };
    let mut current = &cert.initial;
    for (i, step) in cert.steps.iter().enumerate() {
        if step.before.n() != cert.n() || step.after.n() != cert.n() {
            return fail(Some(i), i, "rank differs from the certificate".into());
        }
        if &step.before != current {
            return fail(
                Some(i),
                i,
                format!(
                    "recorded before {} does not continue the chain {}",
                    step.before, current
                ),
            );
        }
        match basic_move(&step.before, step.target, step.side, step.direction) {
            Err(e) => return fail(Some(i), i, e.to_string()),
            Ok(replayed) if replayed.after != step.after => {
                return fail(
                    Some(i),
                    i,
                    format!(
                        "recorded after {} but the move gives {}",
                        step.after, replayed.after
                    ),
                )
            }
            Ok(_) => {}
        }
        current = &step.after;
    }
    if &cert.final_state != current {
        return fail(
            None,
            cert.steps.len(),
            format!(
                "final {} differs from the last state {}",
                cert.final_state, current
            ),
        );
    }
    CheckReport {
        passed: true,
        steps_checked: cert.steps.len(),
        failure: None,
    }
}
