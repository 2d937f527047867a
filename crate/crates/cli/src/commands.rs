//! The computations behind each subcommand, returning rendered output.

use monopole_core::abelian_model::{
    bogomolny_residual, chern_number, model_fields, GridSpec, Patch,
};
use monopole_core::index::{dimension_and_charges, stratum_dimension};
use monopole_core::indicial::{bspec, defect_region, nullity_line};
use monopole_core::masscharge::{breaking_report, MassChargePair};
use monopole_core::rootsys::Tiebreak;
use monopole_core::{ExactScalar, Rational};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::job::JobSpec;
use crate::numfmt::format_rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargeJson {
    pub index: usize,
    pub value: i64,
    pub kind: String,
}

/// The `dim --json` object. Field order is the output order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub group: String,
    pub mass: Vec<String>,
    pub charge: Vec<i64>,
    pub tiebreak: Vec<String>,
    pub dimension: i64,
    pub scattering: i64,
    pub defect: i64,
    pub charges: Vec<ChargeJson>,
    pub stratum_dim: i64,
    pub base_dim: usize,
    pub empty_flag: bool,
    #[serde(skip)]
    pub extra: DimExtra,
}

/// Table-only details.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DimExtra {
    pub adapted_base: Vec<String>,
    pub centralizer_dim: usize,
    pub stabilizer_dim: usize,
    pub mass_positive: usize,
    pub mass_zero: usize,
}

pub fn dim(job: &JobSpec) -> CliResult<DimReport> {
    let rs = job.root_system()?;
    let pair = MassChargePair::new(&rs, &job.mass_element(), &job.charge_element())?;
    let tiebreak = match &job.tiebreak {
        Some(t) => Tiebreak(t.clone()),
        None => Tiebreak::standard(rs.rank()),
    };
    let (b, charges) = dimension_and_charges(&pair, &tiebreak)?;
    let br = breaking_report(&pair);
    let stratum_dim = stratum_dimension(&pair)?;
    Ok(DimReport {
        name: job.name.clone(),
        group: job.group.clone(),
        mass: job.mass.iter().map(format_rational).collect(),
        charge: job.charge.clone(),
        tiebreak: tiebreak.0.iter().map(format_rational).collect(),
        dimension: b.total,
        scattering: b.scattering,
        defect: b.defect,
        charges: charges
            .entries
            .iter()
            .map(|e| ChargeJson {
                index: e.index,
                value: e.charge,
                kind: e.kind.to_string(),
            })
            .collect(),
        stratum_dim,
        base_dim: br.base_dim,
        empty_flag: b.empty_flag,
        extra: DimExtra {
            adapted_base: charges.adapted_base.iter().map(|r| r.to_string()).collect(),
            centralizer_dim: br.centralizer_mu_dim,
            stabilizer_dim: br.stabilizer_mu_kappa_dim,
            mass_positive: br.root_counts.mass_positive,
            mass_zero: br.root_counts.mass_zero,
        },
    })
}

pub fn dim_json(report: &DimReport) -> String {
    serde_json::to_string_pretty(report).expect("plain data serialises") + "\n"
}

fn key_values(rows: &[(&str, String)]) -> String {
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0)
        + 2;
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}{v}\n"))
        .collect()
}

fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn dim_table(r: &DimReport) -> String {
    let mut rows = Vec::new();
    if let Some(name) = &r.name {
        rows.push(("job", name.clone()));
    }
    rows.extend([
        ("group", r.group.clone()),
        ("mass (coweight)", r.mass.join(",")),
        (
            "charge (coroot)",
            r.charge
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(","),
        ),
        ("tiebreak", r.tiebreak.join(",")),
        ("dimension", r.dimension.to_string()),
        ("  scattering", r.scattering.to_string()),
        ("  defect", r.defect.to_string()),
        ("stratum_dim", r.stratum_dim.to_string()),
        ("base_dim", r.base_dim.to_string()),
        ("centraliser_dim", r.extra.centralizer_dim.to_string()),
        ("stabiliser_dim", r.extra.stabilizer_dim.to_string()),
        ("massive roots", r.extra.mass_positive.to_string()),
        ("massless roots", r.extra.mass_zero.to_string()),
        ("empty_flag", r.empty_flag.to_string()),
    ]);
    let charge_rows: Vec<Vec<String>> = r
        .charges
        .iter()
        .zip(&r.extra.adapted_base)
        .map(|(c, root)| {
            vec![
                c.index.to_string(),
                root.clone(),
                c.value.to_string(),
                c.kind.clone(),
            ]
        })
        .collect();
    key_values(&rows) + "\n" + &columns(&["index", "base root", "charge", "kind"], &charge_rows)
}

/// CSV `d,t,j,sign,lambda`, sorted by `λ` then `j`.
pub fn bspec_csv(d: i64, t: &Rational, lambda_max: &Rational) -> CliResult<String> {
    let mut out = String::from("d,t,j,sign,lambda\n");
    for point in bspec(d, t, lambda_max)? {
        let lambda = match point.value.exact() {
            Some(q) => format_rational(&q),
            None => format!("{:.15}", point.value.to_f64()),
        };
        let mut roots = point.roots.clone();
        roots.sort_by_key(|r| (r.j, r.sign));
        for root in roots {
            out += &format!(
                "{d},{},{},{},{lambda}\n",
                format_rational(t),
                root.j,
                root.sign
            );
        }
    }
    Ok(out)
}

/// Where to evaluate the defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DefectPoints {
    Single {
        t: Rational,
        delta: Rational,
    },
    /// `t = k/t_steps` for `k = 0..=t_steps`, `δ = −1 + 2l/delta_steps` for
    /// `0 < l < delta_steps`
    Grid {
        t_steps: u32,
        delta_steps: u32,
    },
}

/// CSV `d,t,delta,defect`. Grid points on the indicial line are skipped; a
/// single point on it is an error.
pub fn defect_csv(d: i64, points: &DefectPoints) -> CliResult<String> {
    let mut out = String::from("d,t,delta,defect\n");
    let mut row = |t: &Rational, delta: &Rational, value: &Rational| {
        out += &format!(
            "{d},{},{},{}\n",
            format_rational(t),
            format_rational(delta),
            format_rational(value)
        );
    };
    match points {
        DefectPoints::Single { t, delta } => row(t, delta, &defect_region(d, t, delta)?),
        DefectPoints::Grid {
            t_steps,
            delta_steps,
        } => {
            if *t_steps == 0 || *delta_steps < 2 {
                return Err(CliError::Input(
                    "need t-steps >= 1 and delta-steps >= 2".into(),
                ));
            }
            for k in 0..=*t_steps {
                let t = Rational::from_ratio(k as i64, *t_steps as i64);
                for l in 1..*delta_steps {
                    let delta = Rational::from_ratio(
                        2 * l as i64 - *delta_steps as i64,
                        *delta_steps as i64,
                    );
                    if d != 0 && delta == nullity_line(d, &t) {
                        continue;
                    }
                    row(&t, &delta, &defect_region(d, &t, &delta)?);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModelReport {
    pub d: i64,
    pub m: f64,
    pub n: usize,
    pub n_theta: usize,
    pub chern: f64,
    pub residual: f64,
    pub residual_refined: f64,
    /// `None` when the refined residual vanishes
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelArgs {
    pub d: i64,
    pub m: f64,
    pub n: usize,
    pub n_theta: usize,
    pub r_min: f64,
    pub r_max: f64,
}

pub fn model(a: &ModelArgs) -> CliResult<ModelReport> {
    let grid = GridSpec {
        r_min: a.r_min,
        r_max: a.r_max,
        n_r: a.n,
        n_theta: a.n,
        n_phi: a.n,
    };
    let fine = grid.refined();
    let residual = bogomolny_residual(a.d, a.m, &grid)?;
    let residual_refined = bogomolny_residual(a.d, a.m, &fine)?;
    let chern = chern_number::<f64>(a.d, a.n_theta, a.n_theta)?;
    let ratio = (residual_refined > 0.0).then(|| residual / residual_refined);
    Ok(ModelReport {
        d: a.d,
        m: a.m,
        n: a.n,
        n_theta: a.n_theta,
        chern,
        residual,
        residual_refined,
        ratio,
    })
}

pub fn model_text(r: &ModelReport) -> String {
    key_values(&[
        ("d", r.d.to_string()),
        ("m", r.m.to_string()),
        ("chern", format!("{:.12}", r.chern)),
        (
            &format!("residual n={}", r.n),
            format!("{:.6e}", r.residual),
        ),
        (
            &format!("residual n={}", 2 * r.n),
            format!("{:.6e}", r.residual_refined),
        ),
        (
            "ratio",
            r.ratio
                .map_or("undefined".to_string(), |x| format!("{x:.4}")),
        ),
    ])
}

pub fn model_json(r: &ModelReport) -> String {
    serde_json::to_string_pretty(r).expect("plain data serialises") + "\n"
}

/// CSV `r,theta,A_phi,F_thetaphi,Phi` on cell-centred θ, each in its own patch.
pub fn profile_csv(
    d: i64,
    m: f64,
    r_min: f64,
    r_max: f64,
    n_r: usize,
    n_theta: usize,
) -> CliResult<String> {
    if n_r < 2 || n_theta < 1 || r_min <= 0.0 || r_max <= r_min {
        return Err(CliError::Input(
            "profile needs n-r >= 2, n-theta >= 1, 0 < r-min < r-max".into(),
        ));
    }
    let mut out = String::from("r,theta,A_phi,F_thetaphi,Phi\n");
    for i in 0..n_r {
        let r = r_min + (r_max - r_min) * i as f64 / (n_r - 1) as f64;
        for k in 0..n_theta {
            let theta = std::f64::consts::PI * (k as f64 + 0.5) / n_theta as f64;
            let s = model_fields(d, m, Patch::for_theta(theta), (r, theta, 0.0))?;
            out += &format!("{r},{theta},{},{},{}\n", s.a_phi, s.f_theta_phi, s.phi);
        }
    }
    Ok(out)
}
