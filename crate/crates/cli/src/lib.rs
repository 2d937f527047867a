//! Library side of the `monopole` binary: argument types, job parsing and
//! the rendering of every subcommand.

pub mod args;
pub mod commands;
pub mod error;
pub mod job;
pub mod numfmt;

use args::{Cli, Command};
use commands::DefectPoints;
use error::{CliError, CliResult};
use job::{JobInput, JobSpec};
use numfmt::parse_rational;

pub fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Dim(a) => {
            let input = JobInput {
                name: None,
                group: Some(a.group),
                mass: a.mass,
                charge: a.charge,
                mass_diag: a.mass_diag,
                charge_diag: a.charge_diag,
                tiebreak: a.tiebreak,
            };
            let report = commands::dim(&JobSpec::from_input(&input)?)?;
            Ok(if a.json {
                commands::dim_json(&report)
            } else {
                commands::dim_table(&report)
            })
        }
        Command::Bspec(a) => {
            let t = parse_rational("t", &a.t, 0)?;
            let max = parse_rational("max", &a.max, 0)?;
            commands::bspec_csv(a.d, &t, &max)
        }
        Command::Defect(a) => {
            let points = match (a.t, a.delta, a.t_steps, a.delta_steps) {
                (Some(t), Some(delta), None, None) => DefectPoints::Single {
                    t: parse_rational("t", &t, 0)?,
                    delta: parse_rational("delta", &delta, 0)?,
                },
                (None, None, Some(t_steps), Some(delta_steps)) => DefectPoints::Grid {
                    t_steps,
                    delta_steps,
                },
                _ => {
                    return Err(CliError::Input(
                        "give --t and --delta, or --t-steps and --delta-steps".into(),
                    ))
                }
            };
            commands::defect_csv(a.d, &points)
        }
        Command::Model(a) => {
            let report = commands::model(&commands::ModelArgs {
                d: a.d,
                m: a.m,
                n: a.n,
                n_theta: a.n_theta,
                r_min: a.r_min,
                r_max: a.r_max,
            })?;
            Ok(if a.json {
                commands::model_json(&report)
            } else {
                commands::model_text(&report)
            })
        }
        Command::Profile(a) => commands::profile_csv(a.d, a.m, a.r_min, a.r_max, a.n_r, a.n_theta),
        Command::Batch(a) => {
            let text = std::fs::read_to_string(&a.file)?;
            let mut reports = Vec::new();
            for input in job::parse_batch(&text)? {
                let report = JobSpec::from_input(&input).and_then(|spec| commands::dim(&spec));
                reports.push(report.map_err(|e| with_job(e, &input))?);
            }
            if a.json {
                Ok(serde_json::to_string_pretty(&reports).expect("plain data serialises") + "\n")
            } else {
                Ok(reports
                    .iter()
                    .map(commands::dim_table)
                    .collect::<Vec<_>>()
                    .join("\n"))
            }
        }
    }
}

fn with_job(e: CliError, input: &JobInput) -> CliError {
    let label = input
        .name
        .clone()
        .or_else(|| input.group.clone())
        .unwrap_or_default();
    match e {
        CliError::Input(m) => CliError::Input(format!("job '{label}': {m}")),
        CliError::Integrality(m) => CliError::Integrality(format!("job '{label}': {m}")),
        other => other,
    }
}
