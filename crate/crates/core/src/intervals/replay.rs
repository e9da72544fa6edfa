//! Scripted replay: a chain of basic moves from `n_{d,p}` to a subspace that does not
//! depend on `p`.
//!
//! With block data `m`, `s`, `c`, `k` of `d` write
//!
//! * `I_i = [s_{i+1} + p·m_i, s_i + p·m_{i−1}]`,
//! * `I_{i,j} = [s_{i+1} + p·m_i − j + 1, s_{i−1} + p·m_{i−2} − j]`,
//! * `J_{i,l} = [s_{i+1} − l + 1, s_{i−1} − l]`,
//! * `Δ_i = (c−p)·m_{i+1} + p·m_i`.
//!
//! Step 1 shifts every `I_i` into the staircase `I_{i,j}`. Step 2 runs chain rewrites
//! downwards in `r` to carve the `J` intervals out of the staircases, and Step 3 runs chain
//! rewrites backwards upwards in `r` to absorb what is left of the `I_{i,j}`. The state is
//! checked against its closed form after each step.

use super::lemmas::{lemma1_expand, lemma2_expand, lemma2_expand_reverse, Lemma2Spec};
use super::moves::MoveCertificate;
use super::{n_dp, n_from_weight, normalize, Interval, IntervalSet};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::weights::{block_decomposition, check_p, omega, BlockDecomposition};

struct Script {
    n: usize,
    c: i64,
    k: i64,
    p: i64,
    blocks: BlockDecomposition,
}

impl Script {
    fn m(&self, a: i64) -> i64 {
        self.blocks.m(a) as i64
    }
    fn s(&self, i: i64) -> i64 {
        self.blocks.s(i) as i64
    }
    fn big_i(&self, i: i64) -> (i64, i64) {
        let p = self.p;
        (self.s(i + 1) + p * self.m(i), self.s(i) + p * self.m(i - 1))
    }
    fn i_ij(&self, i: i64, j: i64) -> (i64, i64) {
        let p = self.p;
        (
            self.s(i + 1) + p * self.m(i) - j + 1,
            self.s(i - 1) + p * self.m(i - 2) - j,
        )
    }
    fn j_il(&self, i: i64, l: i64) -> (i64, i64) {
        (self.s(i + 1) - l + 1, self.s(i - 1) - l)
    }
    fn delta(&self, i: i64) -> i64 {
        (self.c - self.p) * self.m(i + 1) + self.p * self.m(i)
    }

    /// `J_{i,l}` for `l ≤ f(i)·(c−p)`-style bounds: the `J` part of a closed form.
    fn j_part(&self, mult: i64) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for i in (-self.k..=self.k + 1).rev() {
            let len = if i >= 1 { self.m(i + 1) } else { self.m(i - 1) };
            out.extend((1..=mult * len).map(|l| self.j_il(i, l)));
        }
        out
    }

    /// State after Step 1.
    fn after_step1(&self) -> IntervalSet {
        let gens = (-self.k + 1..=self.k).rev().flat_map(|i| {
            let len = if i >= 1 {
                self.delta(i)
            } else {
                self.delta(i - 2)
            };
            (1..=len).map(move |j| self.i_ij(i, j))
        });
        normalize(gens, self.n)
    }

    /// State after Step 2: the `J` intervals at multiplicity `c−p` plus the untouched
    /// `I_{i,j}`.
    fn after_step2(&self) -> IntervalSet {
        let mut gens = self.j_part(self.c - self.p);
        for i in (-self.k + 1..=self.k).rev() {
            let len = if i >= 1 { self.m(i) } else { self.m(i - 2) };
            gens.extend((1..=self.p * len).map(|j| self.i_ij(i, j)));
        }
        normalize(gens, self.n)
    }
}

fn as_usize(v: i64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Overflow("negative break point"))
}

fn at(locus: impl Into<String>) -> impl FnOnce(Error) -> Error {
    let locus = locus.into();
    move |e| Error::Replay {
        locus,
        source: Box::new(e),
    }
}

fn expect_state(state: &IntervalSet, expected: &IntervalSet, locus: &str) -> Result<()> {
    if state == expected {
        return Ok(());
    }
    Err(Error::Replay {
        locus: locus.into(),
        source: Box::new(Error::Hypothesis {
            lemma: "closed form",
            hypothesis: format!("reached {state}, expected {expected}"),
        }),
    })
}

/// The `p`-independent endpoint: `J_{i,l}` for `l ≤ c·m_{i+1}` (`i ≥ 1`) and
/// `l ≤ c·m_{i−1}` (`i ≤ 0`).
pub fn canonical_form(d: &Partition) -> IntervalSet {
    let blocks = block_decomposition(d);
    let script = Script {
        n: blocks.n,
        c: blocks.c as i64,
        k: blocks.k as i64,
        p: 0,
        blocks,
    };
    normalize(script.j_part(script.c), script.n)
}

/// Builds and self-checks the certificate `n_{d,p} → canonical_form(d)`.
pub fn replay_theorem(d: &Partition, p: i64) -> Result<MoveCertificate> {
    let p = check_p(d, p)? as i64;
    let blocks = block_decomposition(d);
    let sc = Script {
        n: blocks.n,
        c: blocks.c as i64,
        k: blocks.k as i64,
        p,
        blocks,
    };
    let (n, k, c) = (sc.n, sc.k, sc.c);

    let start = n_dp(d, p)?;
    expect_state(&start, &n_from_weight(&omega(d, p)?), "initial subspace")?;
    let mut cert = MoveCertificate::empty(start);

    // Step 1: shift each I_i.
    for i in (-k + 1..=k).rev() {
        let (a, b) = sc.big_i(i);
        let Some(target) = Interval::checked(a, b, n) else {
            continue;
        };
        if !cert.final_state.is_minimal(&target) {
            continue;
        }
        let top = sc.s(i - 1) + p * sc.m(i - 2);
        if top <= b {
            continue;
        }
        let piece = lemma1_expand(&cert.final_state, target, as_usize(top)?)
            .map_err(at(format!("step 1, i={i}")))?;
        cert.append(piece);
    }
    expect_state(&cert.final_state, &sc.after_step1(), "end of step 1")?;

    // Step 2: chain rewrites, r descending.
    for r in (1..=k).rev() {
        let reps = sc.delta(r - 1) - sc.delta(-r - 1);
        let chain =
            |j: i64| -> Vec<(i64, i64)> { (0..r - 1).map(|q| sc.i_ij(r - 1 - 2 * q, j)).collect() };
        for j in (sc.delta(r + 1) + 1..=sc.delta(-r - 1)).rev() {
            for t in 1..=reps {
                let links = chain(j + t - 1);
                let (ta, tb) = sc.i_ij(-r + 1, j);
                let target = (ta - (t - 1), tb);
                let head = links.first().copied().unwrap_or(target).0 - 1;
                let mut breaks = vec![as_usize(head)?];
                for &(_, b) in links.iter().chain([&target]) {
                    breaks.push(as_usize(b)?);
                }
                let spec = Lemma2Spec {
                    first_left: None,
                    breaks,
                    include_last: true,
                };
                let piece = lemma2_expand(&cert.final_state, &spec)
                    .map_err(at(format!("step 2 (open chain), r={r}, j={j}, t={t}")))?;
                cert.append(piece);
            }
        }
        for j in (p * sc.m(r + 1) + 1..=sc.delta(r + 1)).rev() {
            for t in 1..=reps {
                let (fa, fb) = sc.i_ij(r + 1, j);
                let first = (fa, fb - (t - 1));
                let links = chain(j + t - 1);
                let (la, lb) = sc.i_ij(-r + 1, j);
                let last = (la - (t - 1), lb);
                let mut breaks = vec![as_usize(first.1)?];
                for &(_, b) in links.iter().chain([&last]) {
                    breaks.push(as_usize(b)?);
                }
                let spec = Lemma2Spec {
                    first_left: Some(as_usize(first.0)?),
                    breaks,
                    include_last: true,
                };
                let piece = lemma2_expand(&cert.final_state, &spec)
                    .map_err(at(format!("step 2 (closed chain), r={r}, j={j}, t={t}")))?;
                cert.append(piece);
            }
        }
    }
    expect_state(&cert.final_state, &sc.after_step2(), "end of step 2")?;

    // Step 3: reverse chain rewrites, r ascending.
    for r in 1..k {
        let reps = (c - p) * (sc.m(r - 1) - sc.m(r + 1));
        for j in 1..=p * sc.m(r + 1) {
            for t in 1..=reps {
                let (fa, fb) = sc.i_ij(r + 1, j);
                let lcur = j + (c - p) * sc.m(r - 1) - (t - 1);
                let links: Vec<_> = (0..r - 1).map(|q| sc.j_il(r - 2 - 2 * q, lcur)).collect();
                let (_, gb) = sc.i_ij(-r + 1, j);
                let mut breaks = vec![as_usize(fb + t)?];
                for &(_, b) in &links {
                    breaks.push(as_usize(b + 1)?);
                }
                breaks.push(as_usize(gb)?);
                let spec = Lemma2Spec {
                    first_left: Some(as_usize(fa)?),
                    breaks,
                    include_last: true,
                };
                let piece = lemma2_expand_reverse(&cert.final_state, &spec)
                    .map_err(at(format!("step 3, r={r}, j={j}, t={t}")))?;
                cert.append(piece);
            }
        }
    }
    expect_state(&cert.final_state, &canonical_form(d), "final state")?;
    Ok(cert)
}
