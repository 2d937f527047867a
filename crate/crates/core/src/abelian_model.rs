//! The abelian model pair on one root line bundle, checked numerically.
//!
//! In spherical coordinates `(r, θ, φ)` the degree-`d` Dirac monopole is
//! written in two patches:
//!
//! ```text
//! North (θ < π):  A = (d/2)(+1 − cos θ) dφ
//! South (θ > 0):  A = (d/2)(−1 − cos θ) dφ
//! ```
//!
//! with curvature `F = (d/2) sin θ dθ∧dφ` and Higgs field `Φ = m − d/(2r)`.
//! The two connections differ by the pure gauge `d·dφ`, and away from the
//! origin `⋆F = dΦ`. This is the only module that uses floating point.

use num_traits::{Float, FloatConst};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Patch {
    North,
    South,
}

impl Patch {
    /// The patch whose coordinate chart comfortably contains `θ`.
    pub fn for_theta<F: Float + FloatConst>(theta: F) -> Patch {
        if theta < F::FRAC_PI_2() {
            Patch::North
        } else {
            Patch::South
        }
    }

    fn offset<F: Float>(self) -> F {
        match self {
            Patch::North => F::one(),
            Patch::South => -F::one(),
        }
    }
}

/// Field values at one point, in patch coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample<F> {
    pub a_phi: F,
    pub phi: F,
    pub f_theta_phi: F,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelField<F> {
    /// degree of the line bundle, `iα(κ)`
    pub d: i64,
    /// mass pairing `iα(μ)`
    pub m: F,
    pub patch: Patch,
}

fn float<F: Float>(x: i64) -> F {
    F::from(x).expect("small integer fits in a float")
}

impl<F: Float + FloatConst> ModelField<F> {
    pub fn new(d: i64, m: F, patch: Patch) -> Self {
        ModelField { d, m, patch }
    }

    fn half_d(&self) -> F {
        float::<F>(self.d) / float(2)
    }

    fn check_point(&self, r: F, theta: F) -> Result<()> {
        if !(r > F::zero()) {
            return Err(Error::OutOfRange("r must be positive".into()));
        }
        if theta < F::zero() || theta > F::PI() {
            return Err(Error::OutOfRange("theta must lie in [0, π]".into()));
        }
        let excluded = match self.patch {
            Patch::North => theta == F::PI(),
            Patch::South => theta == F::zero(),
        };
        if excluded {
            return Err(Error::OutOfRange(format!(
                "theta is the excluded pole of the {:?} patch",
                self.patch
            )));
        }
        Ok(())
    }

    /// `A_φ(θ) = (d/2)(±1 − cos θ)`; no range checks.
    pub fn a_phi(&self, theta: F) -> F {
        self.half_d() * (self.patch.offset::<F>() - theta.cos())
    }

    pub fn higgs(&self, r: F) -> F {
        self.m - self.half_d() / r
    }

    /// Closed-form `∂Φ/∂r = d/(2r²)`.
    pub fn higgs_dr(&self, r: F) -> F {
        self.half_d() / (r * r)
    }

    pub fn curvature(&self, theta: F) -> F {
        self.half_d() * theta.sin()
    }

    /// `(A_φ, Φ, F_θφ)` at `(r, θ, φ)`; the fields are independent of `φ`.
    pub fn sample(&self, r: F, theta: F, _phi: F) -> Result<FieldSample<F>> {
        self.check_point(r, theta)?;
        Ok(FieldSample {
            a_phi: self.a_phi(theta),
            phi: self.higgs(r),
            f_theta_phi: self.curvature(theta),
        })
    }
}

/// Free-function form of [`ModelField::sample`].
pub fn model_fields<F: Float + FloatConst>(
    d: i64,
    m: F,
    patch: Patch,
    point: (F, F, F),
) -> Result<FieldSample<F>> {
    ModelField::new(d, m, patch).sample(point.0, point.1, point.2)
}

/// Plain composite-midpoint estimate of `(1/2π) ∫_{S²} F` on an
/// `n_theta × n_phi` grid. Converges to `d` at second order.
pub fn midpoint_flux<F: Float + FloatConst>(d: i64, n_theta: usize, n_phi: usize) -> Result<F> {
    if n_theta < 8 || n_phi < 8 {
        return Err(Error::DegenerateGrid(
            "chern quadrature needs at least 8 cells per direction".into(),
        ));
    }
    let field = ModelField::new(d, F::zero(), Patch::North);
    let h_theta = F::PI() / float(n_theta as i64);
    let h_phi = F::TAU() / float(n_phi as i64);
    let half = float::<F>(1) / float(2);
    let mut total = F::zero();
    for i in 0..n_theta {
        let theta = (float::<F>(i as i64) + half) * h_theta;
        let f = field.curvature(theta);
        // the integrand is φ-independent, but we integrate the full grid
        let mut row = F::zero();
        for _ in 0..n_phi {
            row = row + f * h_phi;
        }
        total = total + row * h_theta;
    }
    Ok(total / F::TAU())
}

/// Degree of the line bundle recovered by quadrature of the curvature.
///
/// One Richardson step on the composite midpoint rule, `(4 M(2n) − M(n)) / 3`,
/// which cancels the `O(h²)` term and leaves a fourth-order error.
pub fn chern_number<F: Float + FloatConst>(d: i64, n_theta: usize, n_phi: usize) -> Result<F> {
    let coarse = midpoint_flux::<F>(d, n_theta, n_phi)?;
    let fine = midpoint_flux::<F>(d, 2 * n_theta, n_phi)?;
    Ok((float::<F>(4) * fine - coarse) / float(3))
}

/// Sampling grid on the shell `r_min ≤ r ≤ r_max`, full sphere in `(θ, φ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec<F> {
    pub r_min: F,
    pub r_max: F,
    pub n_r: usize,
    pub n_theta: usize,
    pub n_phi: usize,
}

impl<F: Float + FloatConst> GridSpec<F> {
    pub fn cube(r_min: F, r_max: F, n: usize) -> Self {
        GridSpec {
            r_min,
            r_max,
            n_r: n,
            n_theta: n,
            n_phi: n,
        }
    }

    /// Same box with every spacing halved.
    pub fn refined(&self) -> Self {
        GridSpec {
            n_r: 2 * self.n_r,
            n_theta: 2 * self.n_theta,
            n_phi: 2 * self.n_phi,
            ..*self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_r < 3 || self.n_theta < 3 || self.n_phi < 3 {
            return Err(Error::DegenerateGrid(
                "need at least 3 cells per direction".into(),
            ));
        }
        if !(self.r_min >= F::one()) {
            return Err(Error::OutOfRange("r_min must be at least 1".into()));
        }
        if !(self.r_max > self.r_min) || !self.r_max.is_finite() {
            return Err(Error::DegenerateGrid("r_max must exceed r_min".into()));
        }
        Ok(())
    }

    /// `(h_r, h_θ, h_φ)`.
    pub fn spacings(&self) -> (F, F, F) {
        (
            (self.r_max - self.r_min) / float(self.n_r as i64),
            F::PI() / float(self.n_theta as i64),
            F::TAU() / float(self.n_phi as i64),
        )
    }
}

/// Orthonormal-frame components `(B_r, B_θ, B_φ)` of `⋆dA` at a point, for a
/// 1-form `A = A_r dr + A_θ dθ + A_φ dφ` given in coordinates.
///
/// Each partial derivative is a central difference with half-steps
/// `h/2`, so a point at a cell centre only touches the cell's faces.
pub fn star_curl<F: Float, A>(a: A, r: F, theta: F, phi: F, h: (F, F, F)) -> [F; 3]
where
    A: Fn(F, F, F) -> [F; 3],
{
    let two = float::<F>(2);
    let (hr, ht, hp) = (h.0 / two, h.1 / two, h.2 / two);
    let d_r = |k: usize| (a(r + hr, theta, phi)[k] - a(r - hr, theta, phi)[k]) / h.0;
    let d_t = |k: usize| (a(r, theta + ht, phi)[k] - a(r, theta - ht, phi)[k]) / h.1;
    let d_p = |k: usize| (a(r, theta, phi + hp)[k] - a(r, theta, phi - hp)[k]) / h.2;

    let f_r_theta = d_r(1) - d_t(0);
    let f_r_phi = d_r(2) - d_p(0);
    let f_theta_phi = d_t(2) - d_p(1);
    let s = theta.sin();
    [f_theta_phi / (r * r * s), -f_r_phi / (r * s), f_r_theta / r]
}

/// Maximum over cell centres of `|⋆F − dΦ|` (orthonormal frame), with `⋆F`
/// from finite differences of the patch connection and `dΦ` in closed form.
pub fn bogomolny_residual<F: Float + FloatConst>(d: i64, m: F, grid: &GridSpec<F>) -> Result<F> {
    grid.validate()?;
    let h = grid.spacings();
    let half = float::<F>(1) / float(2);
    let mut worst = F::zero();
    for it in 0..grid.n_theta {
        let theta = (float::<F>(it as i64) + half) * h.1;
        let field = ModelField::new(d, m, Patch::for_theta(theta));
        let a = |_r: F, th: F, _p: F| [F::zero(), F::zero(), field.a_phi(th)];
        for ir in 0..grid.n_r {
            let r = grid.r_min + (float::<F>(ir as i64) + half) * h.0;
            let grad = [field.higgs_dr(r), F::zero(), F::zero()];
            for ip in 0..grid.n_phi {
                let phi = (float::<F>(ip as i64) + half) * h.2;
                let b = star_curl(a, r, theta, phi, h);
                for k in 0..3 {
                    worst = worst.max((b[k] - grad[k]).abs());
                }
            }
        }
    }
    Ok(worst)
}

/// Rows `(r, θ, A_φ, F_θφ, Φ)` on a tensor grid, for plotting.
pub fn field_profile<F: Float + FloatConst>(
    field: &ModelField<F>,
    radii: &[F],
    thetas: &[F],
) -> Result<Vec<[F; 5]>> {
    let mut rows = Vec::with_capacity(radii.len() * thetas.len());
    for &r in radii {
        for &theta in thetas {
            let s = field.sample(r, theta, F::zero())?;
            rows.push([r, theta, s.a_phi, s.f_theta_phi, s.phi]);
        }
    }
    Ok(rows)
}
