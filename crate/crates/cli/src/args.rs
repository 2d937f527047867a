use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "monopole",
    version,
    about = "Framed monopole moduli dimensions, indicial roots and the abelian model"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Moduli dimension, charges and symmetry breaking for one (group, mass, charge)
    Dim(DimArgs),
    /// Indicial roots of one root line bundle as CSV
    Bspec(BspecArgs),
    /// Defect of one root line bundle at a point or over a (t, delta) grid, as CSV
    Defect(DefectArgs),
    /// Chern number and Bogomolny residual of the abelian model pair
    Model(ModelCmdArgs),
    /// Abelian model fields on a (r, theta) grid as CSV
    Profile(ProfileArgs),
    /// Run `dim` for every job in a key = value file
    Batch(BatchArgs),
}

#[derive(Debug, Args)]
pub struct DimArgs {
    /// Group, e.g. `A2` or `B3,G2`
    #[arg(long, short = 'g')]
    pub group: String,
    /// Mass as iα_j(μ) over the simple roots, comma separated; `p/q` allowed
    #[arg(long, allow_hyphen_values = true, conflicts_with = "mass_diag")]
    pub mass: Option<String>,
    /// Charge in simple-coroot coordinates, comma separated integers
    #[arg(long, allow_hyphen_values = true, conflicts_with = "charge_diag")]
    pub charge: Option<String>,
    /// For A_n: imaginary parts c of the mass i·diag(c)
    #[arg(long, allow_hyphen_values = true)]
    pub mass_diag: Option<String>,
    /// For A_n: imaginary parts c of the charge i·diag(c)
    #[arg(long, allow_hyphen_values = true)]
    pub charge_diag: Option<String>,
    /// Positive-system tiebreak functional on simple-root coordinates
    #[arg(long, allow_hyphen_values = true)]
    pub tiebreak: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BspecArgs {
    /// Degree iα(κ) of the line bundle
    #[arg(short = 'd', long = "degree", allow_hyphen_values = true)]
    pub d: i64,
    /// Deformation parameter in [0, 1]
    #[arg(short = 't', long = "t", default_value = "1")]
    pub t: String,
    /// Largest |λ| to list
    #[arg(long = "max", default_value = "3")]
    pub max: String,
}

#[derive(Debug, Args)]
pub struct DefectArgs {
    #[arg(short = 'd', long = "degree", allow_hyphen_values = true)]
    pub d: i64,
    #[arg(short = 't', long = "t", requires = "delta", conflicts_with_all = ["t_steps", "delta_steps"])]
    pub t: Option<String>,
    /// Weight, strictly inside (-1, 1)
    #[arg(long, allow_hyphen_values = true, requires = "t")]
    pub delta: Option<String>,
    #[arg(long, requires = "delta_steps")]
    pub t_steps: Option<u32>,
    #[arg(long, requires = "t_steps")]
    pub delta_steps: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ModelCmdArgs {
    #[arg(short = 'd', long = "degree", allow_hyphen_values = true)]
    pub d: i64,
    /// Asymptotic Higgs value
    #[arg(
        short = 'm',
        long = "mass",
        default_value_t = 1.0,
        allow_hyphen_values = true
    )]
    pub m: f64,
    /// Points per direction of the residual grid; it is also run at 2n
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    /// Quadrature points per angle for the Chern number
    #[arg(long, default_value_t = 256)]
    pub n_theta: usize,
    #[arg(long, default_value_t = 1.0)]
    pub r_min: f64,
    #[arg(long, default_value_t = 10.0)]
    pub r_max: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(short = 'd', long = "degree", allow_hyphen_values = true)]
    pub d: i64,
    #[arg(
        short = 'm',
        long = "mass",
        default_value_t = 1.0,
        allow_hyphen_values = true
    )]
    pub m: f64,
    #[arg(long, default_value_t = 1.0)]
    pub r_min: f64,
    #[arg(long, default_value_t = 10.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 10)]
    pub n_r: usize,
    #[arg(long, default_value_t = 8)]
    pub n_theta: usize,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub json: bool,
}
