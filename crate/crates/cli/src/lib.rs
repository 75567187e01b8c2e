//! Command-line front end for `moduli-core`.
//!
//! [`run`] parses arguments, builds a [`report::Report`], renders it and
//! returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success (also `--help` / `--version`) |
//! | 1 | the report could not be written |
//! | 2 | usage error |
//! | 3 | a precondition failed in the core library |
//! | 4 | `verify` ran but at least one majority vote disagreed |

pub mod args;
pub mod render;
pub mod report;

use args::{Cli, Command, ConstructArgs, CurveArgs, NaturalArgs, SurfaceArgs, VerifyArgs};
use clap::Parser;
use moduli_core::moduli::{all_intervals, certificate, optimal_parameters, threshold_table};
use moduli_core::oracle::{vote_h0_ideal, vote_h0_ideal_square, OracleVote};
use moduli_core::surfaces::chi_ox_by_restriction;
use moduli_core::{
    beta_for_hypersurface, curve_invariants, determinantal_curve, gamma, hilbert_profile,
    hypersurface, thm_a1_threshold,
};
use rayon::prelude::*;
use report::{
    ChiRow, ConstructReport, CurveReport, CurveRow, IntervalsReport, Payload, Report,
    SurfaceReport, ThresholdsReport, VerifyReport,
};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .try_init();

    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };

    let report = match build_report(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PRECONDITION;
        }
    };

    let bytes = render::render(&report, cli.format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &bytes),
        None => std::io::stdout().lock().write_all(bytes.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return EXIT_IO;
    }

    match &report.result {
        Payload::Verify(v) if !v.all_agree => EXIT_DISAGREEMENT,
        _ => 0,
    }
}

fn input(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

pub fn build_report(command: &Command) -> moduli_core::Result<Report> {
    Ok(match command {
        Command::Surface(a) => surface(a)?,
        Command::Curve(a) => curve(a)?,
        Command::Construct(a) => construct(a)?,
        Command::Intervals(a) => {
            let intervals = all_intervals(a.delta)?
                .into_iter()
                .map(Into::into)
                .collect();
            Report::new(
                "intervals",
                input(&[("delta", a.delta.to_string())]),
                Payload::Intervals(IntervalsReport {
                    delta: a.delta,
                    intervals,
                }),
            )
        }
        Command::Thresholds => Report::new(
            "thresholds",
            BTreeMap::new(),
            Payload::Thresholds(ThresholdsReport {
                rows: threshold_table()?,
            }),
        ),
        Command::Natural(a) => natural(a)?,
        Command::Verify(a) => verify(a)?,
    })
}

fn surface(a: &SurfaceArgs) -> moduli_core::Result<Report> {
    let surface = hypersurface(a.delta)?;
    let beta = beta_for_hypersurface(a.delta)?;
    let gamma = gamma(&surface, beta)?;
    let natural_threshold = thm_a1_threshold(a.delta)?;
    let n_min = a.n_min.unwrap_or(0);
    let n_max = a.n_max.unwrap_or(a.delta);
    if n_min > n_max {
        return Err(moduli_core::Error::EmptyRange { n_min, n_max });
    }
    let rows = (n_min..=n_max)
        .map(|n| ChiRow {
            n,
            chi_ox: surface.chi_ox(n),
            chi_restriction: chi_ox_by_restriction(a.delta, n),
        })
        .collect();
    Ok(Report::new(
        "surface",
        input(&[
            ("delta", a.delta.to_string()),
            ("n_min", n_min.to_string()),
            ("n_max", n_max.to_string()),
        ]),
        Payload::Surface(SurfaceReport {
            surface,
            beta,
            gamma,
            natural_threshold,
            rows,
        }),
    ))
}

fn curve(a: &CurveArgs) -> moduli_core::Result<Report> {
    let curve = determinantal_curve(a.s)?;
    let invariants = curve_invariants(&curve);
    let n_min = a.n_min.unwrap_or(-5);
    let n_max = a.n_max.unwrap_or(3 * a.s);
    if n_min > n_max {
        return Err(moduli_core::Error::EmptyRange { n_min, n_max });
    }
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        rows.push(CurveRow {
            n,
            h_ideal: [
                curve.h_ideal(0, n)?,
                curve.h_ideal(1, n)?,
                curve.h_ideal(2, n)?,
                curve.h_ideal(3, n)?,
            ],
            h_curve: [curve.h_structure(0, n)?, curve.h_structure(1, n)?],
        });
    }
    Ok(Report::new(
        "curve",
        input(&[
            ("s", a.s.to_string()),
            ("n_min", n_min.to_string()),
            ("n_max", n_max.to_string()),
        ]),
        Payload::Curve(CurveReport {
            curve,
            invariants,
            rows,
        }),
    ))
}

fn construct(a: &ConstructArgs) -> moduli_core::Result<Report> {
    let (certificate, optimal) = match (a.s, a.sigma) {
        (Some(s), Some(sigma)) => (certificate(a.delta, s, sigma)?, None),
        _ => {
            let opt = optimal_parameters(a.delta)?;
            (certificate(a.delta, opt.s, opt.sigma)?, Some(opt))
        }
    };
    let mut pairs = vec![("delta", a.delta.to_string())];
    if let (Some(s), Some(sigma)) = (a.s, a.sigma) {
        pairs.push(("s", s.to_string()));
        pairs.push(("sigma", sigma.to_string()));
    }
    Ok(Report::new(
        "construct",
        input(&pairs),
        Payload::Construct(ConstructReport {
            certificate,
            optimal,
        }),
    ))
}

fn natural(a: &NaturalArgs) -> moduli_core::Result<Report> {
    let surface = hypersurface(a.delta)?;
    let profile = hilbert_profile(&surface, &a.c2, a.n_min, a.n_max)?;
    Ok(Report::new(
        "natural",
        input(&[
            ("delta", a.delta.to_string()),
            ("c2", a.c2.to_string()),
            ("n_min", a.n_min.to_string()),
            ("n_max", a.n_max.to_string()),
        ]),
        Payload::Natural(profile),
    ))
}

fn verify(a: &VerifyArgs) -> moduli_core::Result<Report> {
    if a.max_s < 1 {
        return Err(moduli_core::Error::InvalidS(a.max_s));
    }
    let seeds = vec![a.seed, a.seed.wrapping_add(1), a.seed.wrapping_add(2)];
    let mut jobs = Vec::new();
    for s in 1..=a.max_s {
        let top = a.max_n.unwrap_or(3 * s);
        for n in 0..=top {
            jobs.push((false, s, n));
        }
        for n in 0..(2 * s).min(top + 1) {
            jobs.push((true, s, n));
        }
    }
    let mut votes: Vec<OracleVote> = jobs
        .into_par_iter()
        .map(|(square, s, n)| {
            if square {
                vote_h0_ideal_square(s, n, a.prime, &seeds)
            } else {
                vote_h0_ideal(s, n, a.prime, &seeds)
            }
        })
        .collect::<moduli_core::Result<_>>()?;
    votes.sort_by(|x, y| (&x.quantity, x.s, x.n).cmp(&(&y.quantity, y.s, y.n)));
    let all_agree = votes.iter().all(|v| v.agrees);
    Ok(Report::new(
        "verify",
        input(&[
            ("max_s", a.max_s.to_string()),
            (
                "max_n",
                a.max_n.map_or_else(|| "3s".to_string(), |n| n.to_string()),
            ),
            ("prime", a.prime.to_string()),
            ("seed", a.seed.to_string()),
        ]),
        Payload::Verify(VerifyReport {
            prime: a.prime,
            seeds,
            votes,
            all_agree,
        }),
    ))
}
