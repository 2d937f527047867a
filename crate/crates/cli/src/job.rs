//! Job specifications from flags, batch files and emitted JSON.

use monopole_core::rootsys::{Basis, CartanElement, RootSystem};
use monopole_core::{ExactScalar, Rational};
use serde::Deserialize;

use crate::error::{CliError, CliResult};
use crate::numfmt::{parse_charge_vec, parse_rational, parse_rational_vec};

/// Raw, unvalidated inputs for one `dim` job.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JobInput {
    pub name: Option<String>,
    pub group: Option<String>,
    pub mass: Option<String>,
    pub charge: Option<String>,
    pub mass_diag: Option<String>,
    pub charge_diag: Option<String>,
    pub tiebreak: Option<String>,
}

/// A validated job: mass in coweight coordinates `iα_j(μ)`, charge in
/// simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub name: Option<String>,
    pub group: String,
    pub mass: Vec<Rational>,
    pub charge: Vec<i64>,
    pub tiebreak: Option<Vec<Rational>>,
}

impl JobSpec {
    pub fn from_input(input: &JobInput) -> CliResult<JobSpec> {
        let group = input
            .group
            .as_deref()
            .ok_or_else(|| CliError::Input("missing group".into()))?;
        let rs = RootSystem::parse(group)?;
        let n = rs.rank();

        let mass = match (&input.mass, &input.mass_diag) {
            (Some(m), None) => parse_rational_vec("mass", m)?,
            (None, Some(m)) => {
                let entries = parse_rational_vec("mass-diag", m)?;
                rs.from_su_diagonal(&entries, Basis::Coweight)?.coeffs
            }
            (None, None) => vec![Rational::from_int(0); n],
            (Some(_), Some(_)) => {
                return Err(CliError::Input(
                    "give either mass or mass-diag, not both".into(),
                ))
            }
        };
        check_len("mass", n, mass.len())?;

        let charge = match (&input.charge, &input.charge_diag) {
            (Some(k), None) => parse_charge_vec("charge", k)?,
            (None, Some(k)) => {
                let entries = parse_rational_vec("charge-diag", k)?;
                let coroot = rs.from_su_diagonal(&entries, Basis::Coroot)?;
                coroot
                    .coeffs
                    .iter()
                    .map(|c| c.to_int())
                    .collect::<Option<Vec<i64>>>()
                    .ok_or_else(|| {
                        CliError::Integrality("charge-diag is not on the coroot lattice".into())
                    })?
            }
            (None, None) => return Err(CliError::Input("missing charge".into())),
            (Some(_), Some(_)) => {
                return Err(CliError::Input(
                    "give either charge or charge-diag, not both".into(),
                ))
            }
        };
        check_len("charge", n, charge.len())?;

        let tiebreak = match &input.tiebreak {
            Some(t) => {
                let v = parse_rational_vec("tiebreak", t)?;
                check_len("tiebreak", n, v.len())?;
                Some(v)
            }
            None => None,
        };
        Ok(JobSpec {
            name: input.name.clone(),
            group: rs.name(),
            mass,
            charge,
            tiebreak,
        })
    }

    pub fn root_system(&self) -> CliResult<RootSystem> {
        Ok(RootSystem::parse(&self.group)?)
    }

    pub fn mass_element(&self) -> CartanElement<Rational> {
        CartanElement::coweight(self.mass.clone())
    }

    pub fn charge_element(&self) -> CartanElement<Rational> {
        CartanElement::coroot_int(&self.charge)
    }

    /// Reads back the job fields of a `dim --json` object.
    pub fn from_json(text: &str) -> CliResult<JobSpec> {
        #[derive(Deserialize)]
        struct Fields {
            name: Option<String>,
            group: String,
            mass: Vec<String>,
            charge: Vec<i64>,
            tiebreak: Option<Vec<String>>,
        }
        let f: Fields = serde_json::from_str(text)
            .map_err(|e| CliError::parse("json", e.column(), e.to_string()))?;
        let parse_all = |field: &str, v: &[String]| -> CliResult<Vec<Rational>> {
            v.iter().map(|s| parse_rational(field, s, 0)).collect()
        };
        Ok(JobSpec {
            name: f.name,
            group: f.group,
            mass: parse_all("mass", &f.mass)?,
            charge: f.charge,
            tiebreak: f
                .tiebreak
                .as_deref()
                .map(|t| parse_all("tiebreak", t))
                .transpose()?,
        })
    }
}

fn check_len(what: &str, expected: usize, found: usize) -> CliResult<()> {
    if expected != found {
        return Err(CliError::Input(format!(
            "{what} has {found} entries but the group has rank {expected}"
        )));
    }
    Ok(())
}

/// Parses a batch file: `key = value` lines, jobs separated by blank lines,
/// `#` starts a comment.
pub fn parse_batch(text: &str) -> CliResult<Vec<JobInput>> {
    let mut jobs = Vec::new();
    let mut current: Option<JobInput> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            if raw.trim().is_empty() {
                jobs.extend(current.take());
            }
            continue;
        }
        let field = format!("batch line {}", lineno + 1);
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::parse(&field, 0, "expected 'key = value'"))?;
        let job = current.get_or_insert_with(JobInput::default);
        let slot = match key.trim() {
            "name" => &mut job.name,
            "group" => &mut job.group,
            "mass" => &mut job.mass,
            "charge" => &mut job.charge,
            "mass_diag" | "mass-diag" => &mut job.mass_diag,
            "charge_diag" | "charge-diag" => &mut job.charge_diag,
            "tiebreak" => &mut job.tiebreak,
            other => {
                let at = key.len() - key.trim_start().len();
                return Err(CliError::parse(
                    &field,
                    at,
                    format!("unknown key '{other}'"),
                ));
            }
        };
        if slot.is_some() {
            return Err(CliError::parse(
                &field,
                0,
                format!("duplicate key '{}'", key.trim()),
            ));
        }
        *slot = Some(value.trim().to_string());
    }
    jobs.extend(current);
    Ok(jobs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn batch_file_structure() {
        let text = "# header\nname = one\ngroup = A1\nmass = 1\ncharge = 2\n\n\n# second\ngroup = A2 # trailing\nmass_diag = -1,-1,2\ncharge-diag = 0,-2,2\n";
        let jobs = parse_batch(text).unwrap();
        assert_eq!(jobs.len(), 2);
        assert_eq!(jobs[0].name.as_deref(), Some("one"));
        assert_eq!(jobs[1].group.as_deref(), Some("A2"));
        let spec = JobSpec::from_input(&jobs[1]).unwrap();
        assert_eq!(spec.charge, vec![0, 2]);
        assert_eq!(
            spec.mass,
            vec![Rational::from_int(0), Rational::from_int(3)]
        );
    }

    #[test]
    fn batch_errors_carry_line() {
        let err = parse_batch("group = A1\ncolour = red\n")
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 2"), "{err}");
        assert!(parse_batch("group = A1\ngroup = A2\n").is_err());
        assert!(parse_batch("just words\n").is_err());
    }

    #[test]
    fn validation_exit_codes() {
        let input = |mass: &str, charge: &str| JobInput {
            group: Some("A2".into()),
            mass: Some(mass.into()),
            charge: Some(charge.into()),
            ..JobInput::default()
        };
        assert_eq!(
            JobSpec::from_input(&input("1", "1,1"))
                .unwrap_err()
                .exit_code(),
            2
        );
        assert_eq!(
            JobSpec::from_input(&input("1,1", "1/2,1"))
                .unwrap_err()
                .exit_code(),
            3
        );
        assert_eq!(
            JobSpec::from_input(&input("1,x", "1,1"))
                .unwrap_err()
                .exit_code(),
            2
        );
        let diag = JobInput {
            group: Some("A2".into()),
            mass_diag: Some("-1,-1,2".into()),
            charge_diag: Some("1/3,1/3,-2/3".into()),
            ..JobInput::default()
        };
        assert_eq!(JobSpec::from_input(&diag).unwrap_err().exit_code(), 3);
    }
}
