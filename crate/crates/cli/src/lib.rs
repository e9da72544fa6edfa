//! Command-line front end for `nilorbit`. Every run writes a single JSON object.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use nilorbit::component_groups::{
    abar_elements, h_c, m_set, simple_reflections, ClassicalOrbit, ClassicalType,
};
use nilorbit::euler::{chi, VirtualCharacter};
use nilorbit::intervals::{
    canonical_form, check_certificate, n_dp, n_from_weight, replay_theorem, CertificateFile,
    IntervalSet,
};
use nilorbit::partitions::{enumerate_partitions, gcd_parts};
use nilorbit::weights::{dynkin_weight_a, omega};
use nilorbit::{Error, Partition};

#[derive(Debug, Parser)]
#[command(
    name = "nilorbit",
    version,
    about = "Weights, canonical quotients and certified interval rewrites for nilpotent orbits"
)]
pub struct Cli {
    /// Progress and diagnostics on stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,

    /// Write the JSON result here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The dominant weight ω_p of (O_d, det^{p/c}).
    Omega {
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<usize>,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
    },
    /// The Dynkin weight of the orbit with partition q.
    Dynkin {
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<usize>,
    },
    /// Canonical quotient data for a classical orbit.
    Abar {
        #[arg(long = "type")]
        kind: ClassicalType,
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<usize>,
    },
    /// Minimal intervals of n_{d,p}.
    Nsub {
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<usize>,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
    },
    /// Build and check the move certificate n_{d,p} → canonical form.
    Replay {
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<usize>,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        /// Write the certificate as JSON.
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
    },
    /// Re-check a certificate file.
    Check {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Euler characteristic of S^j(n_{d,p}*) as a virtual character.
    Chi {
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<usize>,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long)]
        j: usize,
    },
    /// Replay, check and χ-invariance over every partition of n ≤ max-n.
    VerifySweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_j: usize,
    },
}

/// Outcome of a run that did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad input: exit status 2.
    Usage(String),
    /// A falsified invariant, with locus: exit status 1. The report is still printed.
    Verification { report: Value, message: String },
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification { .. } => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn partition(parts: &[usize]) -> Result<Partition, Failure> {
    Ok(Partition::new(parts.to_vec())?)
}

fn set_json(u: &IntervalSet) -> Value {
    json!(u.minimal())
}

fn character_json(v: &VirtualCharacter) -> Result<Value, Failure> {
    Ok(json!({
        "terms": v.to_terms(),
        "dimension": v.dimension()?.to_string(),
        "display": v.to_string(),
    }))
}

/// Executes a command and returns its JSON result.
pub fn execute(command: &Command, verbose: bool) -> Result<Value, Failure> {
    match command {
        Command::Omega {
            partition: parts,
            p,
        } => {
            let d = partition(parts)?;
            let w = omega(&d, *p)?;
            Ok(json!({
                "partition": d.parts(),
                "p": p,
                "c": gcd_parts(&d),
                "omega": w.coords(),
                "display": w.to_string(),
            }))
        }
        Command::Dynkin { partition: parts } => {
            let q = partition(parts)?;
            let w = dynkin_weight_a(&q);
            Ok(json!({
                "partition": q.parts(),
                "weight": w.coords(),
                "display": w.to_string(),
            }))
        }
        Command::Abar {
            kind,
            partition: parts,
        } => {
            let o = ClassicalOrbit::new(*kind, partition(parts)?)?;
            let elements = abar_elements(&o);
            let table = elements
                .iter()
                .map(|w| {
                    let h = h_c(&o, w)?;
                    Ok(json!({
                        "element": w.0,
                        "generators": h.generators.iter().map(|g| &g.0).collect::<Vec<_>>(),
                        "order": h.order(),
                    }))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(json!({
                "type": kind.to_string(),
                "partition": o.partition().parts(),
                "m": m_set(&o).0,
                "elements": elements.iter().map(|w| &w.0).collect::<Vec<_>>(),
                "simple_reflections": simple_reflections(&o).iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
                "h_c": table,
            }))
        }
        Command::Nsub {
            partition: parts,
            p,
        } => {
            let d = partition(parts)?;
            let u = n_dp(&d, *p)?;
            Ok(json!({
                "partition": d.parts(),
                "p": p,
                "n": u.n(),
                "minimal": set_json(&u),
                "dimension": u.dimension(),
            }))
        }
        Command::Replay {
            partition: parts,
            p,
            emit_certificate,
        } => {
            let d = partition(parts)?;
            // range errors are usage errors; anything later is a verification failure
            omega(&d, *p)?;
            let cert = replay_theorem(&d, *p).map_err(|e| Failure::Verification {
                report: json!({ "partition": d.parts(), "p": p, "passed": false, "error": e.to_string() }),
                message: e.to_string(),
            })?;
            let report = check_certificate(&cert);
            if let Some(path) = emit_certificate {
                fs::write(path, cert.to_json())
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                if verbose {
                    eprintln!("wrote {} steps to {}", cert.len(), path.display());
                }
            }
            let out = json!({
                "partition": d.parts(),
                "p": p,
                "n": cert.n(),
                "steps": cert.len(),
                "initial": set_json(&cert.initial),
                "final": set_json(&cert.final_state),
                "canonical": cert.final_state == canonical_form(&d),
                "check": report,
            });
            if report.passed {
                Ok(out)
            } else {
                Err(Failure::Verification {
                    report: out,
                    message: "emitted certificate fails its own check".into(),
                })
            }
        }
        Command::Check { certificate } => {
            let text = fs::read_to_string(certificate).map_err(|e| {
                Failure::Usage(format!("cannot read {}: {e}", certificate.display()))
            })?;
            let file = CertificateFile::from_json(&text)
                .map_err(|e| Failure::Usage(format!("malformed certificate: {e}")))?;
            let cert = file.into_certificate().map_err(|e| Failure::Verification {
                report: json!({ "passed": false, "error": e.to_string() }),
                message: e.to_string(),
            })?;
            let report = check_certificate(&cert);
            let out = json!({ "n": cert.n(), "check": report });
            match &report.failure {
                None => Ok(out),
                Some(f) => Err(Failure::Verification {
                    report: out.clone(),
                    message: match f.step {
                        Some(i) => format!("step {i}: {}", f.reason),
                        None => f.reason.clone(),
                    },
                }),
            }
        }
        Command::Chi {
            partition: parts,
            p,
            j,
        } => {
            let d = partition(parts)?;
            let u = n_dp(&d, *p)?;
            let v = chi(&u, *j)?;
            Ok(json!({
                "partition": d.parts(),
                "p": p,
                "j": j,
                "character": character_json(&v)?,
            }))
        }
        Command::VerifySweep { max_n, max_j } => {
            let summary = sweep(*max_n, *max_j, verbose);
            let failures = summary.failures.len();
            let out = serde_json::to_value(&summary).expect("summary serializes");
            if failures == 0 {
                Ok(out)
            } else {
                Err(Failure::Verification {
                    report: out,
                    message: format!("{failures} failure(s)"),
                })
            }
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub partitions: usize,
    pub instances: usize,
    pub steps: usize,
    pub chi_evaluations: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepFailure {
    pub partition: Vec<usize>,
    pub p: Option<usize>,
    pub locus: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub max_n: usize,
    pub max_j: usize,
    pub rows: Vec<SweepRow>,
    pub failures: Vec<SweepFailure>,
}

struct Outcome {
    steps: usize,
    chi_evaluations: usize,
    instances: usize,
    failures: Vec<SweepFailure>,
}

/// All checks for one partition: every p, and agreement across p.
fn verify_partition(d: &Partition, max_j: usize) -> Outcome {
    let c = gcd_parts(d);
    let mut out = Outcome {
        steps: 0,
        chi_evaluations: 0,
        instances: c,
        failures: Vec::new(),
    };
    let mut fail = |p: Option<usize>, locus: String| {
        out.failures.push(SweepFailure {
            partition: d.parts().to_vec(),
            p,
            locus,
        })
    };
    let canonical = canonical_form(d);
    let mut start_chis: Vec<Vec<VirtualCharacter>> = Vec::new();
    for p in 0..c {
        let cert = match replay_theorem(d, p as i64) {
            Ok(cert) => cert,
            Err(e) => {
                fail(Some(p), e.to_string());
                continue;
            }
        };
        out.steps += cert.len();
        let weight = omega(d, p as i64).expect("p in range");
        if cert.initial != n_from_weight(&weight) {
            fail(Some(p), "initial state differs from n_omega".into());
        }
        if cert.final_state != canonical {
            fail(
                Some(p),
                "final state differs from the canonical form".into(),
            );
        }
        let report = check_certificate(&cert);
        if let Some(f) = report.failure {
            fail(
                Some(p),
                format!("certificate check at step {:?}: {}", f.step, f.reason),
            );
        }
        // χ along the chain: consecutive steps share states, so evaluate each once.
        let states = std::iter::once(&cert.initial).chain(cert.steps.iter().map(|s| &s.after));
        let mut starts = Vec::new();
        for j in 0..=max_j {
            let mut previous: Option<VirtualCharacter> = None;
            for (i, state) in states.clone().enumerate() {
                let value = match chi(state, j) {
                    Ok(v) => v,
                    Err(e) => {
                        fail(Some(p), format!("chi, j={j}, state {i}: {e}"));
                        break;
                    }
                };
                out.chi_evaluations += 1;
                if let Some(prev) = &previous {
                    if *prev != value {
                        fail(Some(p), format!("chi changes at step {}, j={j}", i - 1));
                    }
                } else {
                    starts.push(value.clone());
                }
                previous = Some(value);
            }
        }
        start_chis.push(starts);
    }
    if start_chis.windows(2).any(|w| w[0] != w[1]) {
        fail(None, "chi of n_{d,p} depends on p".into());
    }
    out
}

/// Runs [`verify_partition`] over every partition of every `n ≤ max_n`, in parallel, and
/// reports in deterministic order.
pub fn sweep(max_n: usize, max_j: usize, verbose: bool) -> SweepSummary {
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let parts = enumerate_partitions(n);
        let outcomes: Vec<Outcome> = parts
            .par_iter()
            .map(|d| verify_partition(d, max_j))
            .collect();
        let mut row = SweepRow {
            n,
            partitions: parts.len(),
            ..SweepRow::default()
        };
        for o in outcomes {
            row.instances += o.instances;
            row.steps += o.steps;
            row.chi_evaluations += o.chi_evaluations;
            row.failures += o.failures.len();
            failures.extend(o.failures);
        }
        if verbose {
            eprintln!(
                "n={n}: {} partitions, {} instances, {} steps, {} failures",
                row.partitions, row.instances, row.steps, row.failures
            );
        }
        rows.push(row);
    }
    SweepSummary {
        max_n,
        max_j,
        rows,
        failures,
    }
}

/// Runs the command, writes its JSON and returns the exit status.
pub fn run(cli: &Cli) -> i32 {
    let result = execute(&cli.command, cli.verbose);
    let (value, code) = match result {
        Ok(v) => (Some(v), 0),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            (None, 2)
        }
        Err(Failure::Verification { report, message }) => {
            eprintln!("verification failed: {message}");
            (Some(report), 1)
        }
    };
    if let Some(v) = value {
        let text = serde_json::to_string_pretty(&v).expect("json output");
        let written = match &cli.output {
            Some(path) => fs::write(path, text + "\n"),
            None => writeln!(std::io::stdout(), "{text}"),
        };
        if let Err(e) = written {
            eprintln!("error: cannot write output: {e}");
            return 2;
        }
    }
    code
}
