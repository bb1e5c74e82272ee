use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use corank::ranklab::{
    corank1_pipeline, lemma_sweep, sl2_scan, wedge_kernel_compare, LemmaBounds,
};
use corank::tensor::decompose;
use corank::{Error, HomModule, Lab, LabConfig, RootSystemSpec, Weight};

/// Exact rank profiles of equivariant spaces of matrices.
#[derive(Debug, Parser)]
#[command(name = "corank", version)]
struct Cli {
    /// Seed for all random sampling.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Number of random points per matrix space.
    #[arg(long, global = true, default_value_t = 5)]
    samples: usize,
    /// Sample coordinates lie in [-bound, bound].
    #[arg(long, global = true, default_value_t = 10)]
    bound: i64,
    /// Largest module dimension that will be built.
    #[arg(long, global = true, default_value_t = 2000)]
    guard: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose Hom(V(mu), V(lambda)) into irreducibles.
    Decompose {
        root_system: RootSystemSpec,
        #[arg(allow_hyphen_values = true)]
        mu: Weight,
        #[arg(allow_hyphen_values = true)]
        lambda: Weight,
    },
    /// Classify the rank profile of V(nu) inside Hom(V(mu), V(lambda)).
    Verify {
        root_system: RootSystemSpec,
        #[arg(allow_hyphen_values = true)]
        nu: Weight,
        #[arg(allow_hyphen_values = true)]
        mu: Weight,
        #[arg(allow_hyphen_values = true)]
        lambda: Weight,
    },
    /// Classify every summand of Hom(V(m), V(n)) for sl2, m <= n <= MAX_N.
    ScanSl2 {
        max_n: usize,
        /// Wall-clock budget in seconds.
        #[arg(long, default_value_t = 600)]
        budget: u64,
    },
    /// Compare kernels of e_{0..k} and e_{0..k} + e_{n-k..n} acting on r-forms.
    Wedge { n: usize, r: usize, k: usize },
    /// Sweep the symmetric-power and generation lemmas.
    Lemmas {
        root_system: RootSystemSpec,
        /// Largest coordinate of nu in the symmetric-power sweep.
        #[arg(long, default_value_t = 1)]
        max_coord: i64,
        /// Only fundamental weights in the symmetric-power sweep.
        #[arg(long)]
        fundamental_only: bool,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        /// Largest module dimension in the generation sweep.
        #[arg(long, default_value_t = 200)]
        max_dim: usize,
    },
}

/// A finished command: its report and whether the mathematics checked out.
struct Outcome {
    text: String,
    consistent: bool,
}

fn csv_text<R: Serialize>(headers: Option<&[&str]>, rows: impl IntoIterator<Item = R>) -> anyhow::Result<String> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(headers.is_none())
        .from_writer(Vec::new());
    if let Some(h) = headers {
        w.write_record(h)?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn json_text<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn coords(w: &Weight) -> String {
    w.to_string().trim_matches(|c| c == '(' || c == ')').to_string()
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let config = LabConfig {
        seed: cli.seed,
        samples: cli.samples,
        coeff_bound: cli.bound,
        dim_guard: cli.guard,
        ..LabConfig::default()
    };
    let csv = cli.format == Format::Csv;
    match &cli.command {
        Command::Decompose {
            root_system,
            mu,
            lambda,
        } => {
            let lab = Lab::new(config);
            let hom = HomModule::new(lab.irrep(*root_system, mu)?, lab.irrep(*root_system, lambda)?)?;
            let summands = decompose(&hom)?;
            let text = if csv {
                #[derive(Serialize)]
                struct Row {
                    weight: String,
                    multiplicity: usize,
                    dim: usize,
                }
                csv_text(
                    None,
                    summands.iter().map(|s| Row {
                        weight: coords(&s.weight),
                        multiplicity: s.multiplicity,
                        dim: s.dim,
                    }),
                )?
            } else {
                json_text(&summands)?
            };
            Ok(Outcome {
                text,
                consistent: true,
            })
        }
        Command::Verify {
            root_system,
            nu,
            mu,
            lambda,
        } => {
            let lab = Lab::new(config);
            let report = corank1_pipeline(&lab, *root_system, nu, mu, lambda)?;
            for issue in &report.issues {
                eprintln!("inconsistent: {issue}");
            }
            let text = if csv {
                #[derive(Serialize)]
                struct Row<'a> {
                    candidate: &'a str,
                    mult: usize,
                    verdict: String,
                    rank_closed_orbit: usize,
                    rank_generic: usize,
                    mu_dim: usize,
                    conditions: bool,
                    i: Option<usize>,
                    d: Option<i64>,
                    seed: u64,
                }
                let c = report.conditions;
                let rows: Vec<Row> = if report.candidates.is_empty() {
                    vec![Row {
                        candidate: "none",
                        mult: 0,
                        verdict: "NotASummand".into(),
                        rank_closed_orbit: 0,
                        rank_generic: 0,
                        mu_dim: report.mu_dim,
                        conditions: c.holds,
                        i: c.i,
                        d: c.d,
                        seed: cli.seed,
                    }]
                } else {
                    report
                        .candidates
                        .iter()
                        .map(|cand| Row {
                            candidate: &cand.label,
                            mult: report.multiplicity,
                            verdict: cand.verdict.kind.to_string(),
                            rank_closed_orbit: cand.verdict.rank_closed_orbit(),
                            rank_generic: cand.verdict.rank_generic(),
                            mu_dim: report.mu_dim,
                            conditions: c.holds,
                            i: c.i,
                            d: c.d,
                            seed: cand.verdict.seed,
                        })
                        .collect()
                };
                csv_text(None, rows)?
            } else {
                json_text(&report)?
            };
            Ok(Outcome {
                text,
                consistent: report.is_consistent(),
            })
        }
        Command::ScanSl2 { max_n, budget } => {
            let lab = Lab::new(LabConfig {
                scan_budget: Duration::from_secs(*budget),
                ..config
            });
            let report = sl2_scan(&lab, *max_n)?;
            for (m, n) in &report.truncated {
                eprintln!("budget exhausted: row m={m} n={n} incomplete");
            }
            for (m, n, k) in &report.flagged {
                eprintln!("flagged: m={m} n={n} k={k} looks constant of corank >= 2");
            }
            let text = if csv {
                let rows = report.rows.iter().map(|r| {
                    (
                        r.m,
                        r.n,
                        r.k,
                        r.nu,
                        r.mult,
                        r.rank_closed_orbit,
                        r.rank_generic,
                        r.verdict.to_string(),
                        r.seed,
                    )
                });
                csv_text(
                    Some(&[
                        "m",
                        "n",
                        "k",
                        "nu",
                        "mult",
                        "rank_closed_orbit",
                        "rank_generic",
                        "verdict",
                        "seed",
                    ]),
                    rows,
                )?
            } else {
                json_text(&report)?
            };
            Ok(Outcome {
                text,
                consistent: report.flagged.is_empty(),
            })
        }
        Command::Wedge { n, r, k } => {
            let (ker_e, ker_sum) = wedge_kernel_compare(*n, *r, *k)?;
            let expected = if *k == 1 { ker_e == ker_sum } else { ker_e > ker_sum };
            #[derive(Serialize)]
            struct Row {
                n: usize,
                r: usize,
                k: usize,
                ker_e: usize,
                ker_sum: usize,
                strict: bool,
            }
            let row = Row {
                n: *n,
                r: *r,
                k: *k,
                ker_e,
                ker_sum,
                strict: ker_e > ker_sum,
            };
            let text = if csv {
                csv_text(None, [row])?
            } else {
                json_text(&row)?
            };
            Ok(Outcome {
                text,
                consistent: expected,
            })
        }
        Command::Lemmas {
            root_system,
            max_coord,
            fundamental_only,
            max_r,
            max_dim,
        } => {
            let lab = Lab::new(config);
            let bounds = LemmaBounds {
                max_coord: *max_coord,
                fundamental_only: *fundamental_only,
                max_r: *max_r,
                max_dim: *max_dim,
            };
            let report = lemma_sweep(&lab, *root_system, &bounds)?;
            if report.skipped > 0 {
                eprintln!("{} parameter choices skipped by the dimension guard", report.skipped);
            }
            let text = if csv {
                let rows = report.checks.iter().map(|c| {
                    (
                        c.lemma,
                        coords(&c.weight),
                        c.r,
                        c.i,
                        c.passed,
                    )
                });
                csv_text(Some(&["lemma", "weight", "r", "i", "passed"]), rows)?
            } else {
                json_text(&report)?
            };
            Ok(Outcome {
                text,
                consistent: report.all_passed(),
            })
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => Ok(io::stdout().lock().write_all(text.as_bytes())?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = run(&cli).and_then(|outcome| {
        emit(&cli.out, &outcome.text)?;
        Ok(outcome.consistent)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            let mathematical = matches!(
                e.downcast_ref::<Error>(),
                Some(Error::Inconsistent(_) | Error::NotPrimitive { .. })
            );
            ExitCode::from(if mathematical { 2 } else { 1 })
        }
    }
}
