//! Indicial roots and defect of the linearised operator on one root line bundle.
//!
//! For the line bundle of degree `d` and deformation parameter `t ∈ [0, 1]`
//! the b-spectrum is `λ = ±√(j² + j|d| + (t d / 2)²)`, `j ≥ 0`, with `j = 0`
//! present only for `d ≠ 0`. Only the `j = 0` roots enter the weight window
//! `|δ| < 1`; every `j ≥ 1` root has `|λ| ≥ 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}

/// One indicial root `λ = sign·√lambda_sq`, kept algebraically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicialRoot<S> {
    pub j: u64,
    pub d: i64,
    pub t: S,
    pub sign: Sign,
    pub lambda_sq: S,
}

impl<S: ExactScalar> IndicialRoot<S> {
    pub fn new(j: u64, d: i64, t: S, sign: Sign) -> Self {
        let jj = S::from_int(j as i64);
        let half_td = t.clone() * S::from_int(d) / S::from_int(2);
        let lambda_sq =
            jj.clone() * jj.clone() + jj * S::from_int(d.abs()) + half_td.clone() * half_td;
        IndicialRoot {
            j,
            d,
            t,
            sign,
            lambda_sq,
        }
    }

    pub fn value(&self) -> Lambda<S> {
        Lambda::new(self.sign, self.lambda_sq.clone())
    }
}

/// An exact real number of the form `±√q`, `q ≥ 0` rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lambda<S> {
    sign: i8,
    square: S,
}

impl<S: ExactScalar> Lambda<S> {
    pub fn new(sign: Sign, square: S) -> Self {
        let sign = if square.is_zero() {
            0
        } else {
            sign.as_i64() as i8
        };
        Lambda { sign, square }
    }

    pub fn square(&self) -> &S {
        &self.square
    }

    pub fn signum(&self) -> i8 {
        self.sign
    }

    /// The exact rational value, when `square` is a rational square.
    pub fn exact(&self) -> Option<S> {
        let r = self.square.exact_sqrt()?;
        Some(if self.sign < 0 { -r } else { r })
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.square.to_f64().unwrap_or(f64::NAN).sqrt();
        if self.sign < 0 {
            -r
        } else {
            r
        }
    }
}

impl<S: ExactScalar> PartialOrd for Lambda<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: ExactScalar> Ord for Lambda<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sign.cmp(&other.sign).then_with(|| match self.sign {
            1 => self.square.cmp(&other.square),
            -1 => other.square.cmp(&self.square),
            _ => Ordering::Equal,
        })
    }
}

/// A point of the b-spectrum with every `(j, sign)` that produces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralPoint<S> {
    pub value: Lambda<S>,
    pub roots: Vec<IndicialRoot<S>>,
}

fn check_t<S: ExactScalar>(t: &S) -> Result<()> {
    if *t < S::zero() || *t > S::one() {
        return Err(Error::OutOfRange(format!("t = {t} is outside [0, 1]")));
    }
    Ok(())
}

/// All indicial roots with `|λ| ≤ lambda_max`, sorted by `λ`.
pub fn bspec<S: ExactScalar>(d: i64, t: &S, lambda_max: &S) -> Result<Vec<SpectralPoint<S>>> {
    check_t(t)?;
    if !lambda_max.is_positive() {
        return Err(Error::OutOfRange(format!(
            "lambda_max = {lambda_max} must be positive"
        )));
    }
    let bound = lambda_max.clone() * lambda_max.clone();
    let mut roots = Vec::new();
    let first_j = if d == 0 { 1 } else { 0 };
    for j in first_j.. {
        let probe = IndicialRoot::new(j, d, t.clone(), Sign::Plus);
        if probe.lambda_sq > bound {
            break;
        }
        roots.push(IndicialRoot::new(j, d, t.clone(), Sign::Minus));
        roots.push(probe);
    }
    roots.sort_by(|a, b| a.value().cmp(&b.value()).then(a.sign.cmp(&b.sign)));

    let mut points: Vec<SpectralPoint<S>> = Vec::new();
    for r in roots {
        match points.last_mut() {
            Some(p) if p.value == r.value() => p.roots.push(r),
            _ => points.push(SpectralPoint {
                value: r.value(),
                roots: vec![r],
            }),
        }
    }
    Ok(points)
}

/// Kernel dimension of the indicial operator at the `j = 0` root selected by `sign`:
/// `|d|` at `λ = −t|d|/2`, zero at `λ = +t|d|/2`.
///
/// `t = 0` is rejected because the two `j = 0` roots coincide there.
pub fn j0_nullity<S: ExactScalar>(d: i64, t: &S, sign: Sign) -> Result<u64> {
    check_t(t)?;
    if t.is_zero() {
        return Err(Error::OutOfRange("t = 0 merges both j = 0 roots".into()));
    }
    Ok(match sign {
        Sign::Minus => d.unsigned_abs(),
        Sign::Plus => 0,
    })
}

/// The δ-position of the `j = 0` line carrying a nontrivial kernel.
pub fn nullity_line<S: ExactScalar>(d: i64, t: &S) -> S {
    -(t.clone() * S::from_int(d.abs()) / S::from_int(2))
}

/// Defect contribution of one copy of the degree-`d` line bundle at `(t, δ)`.
///
/// Returns `−|d|/2` to the right of the line `δ = −t|d|/2` and `+|d|/2` to
/// its left. Valid for `|δ| < 1`, where no `j ≥ 1` root interferes.
pub fn defect_region<S: ExactScalar>(d: i64, t: &S, delta: &S) -> Result<S> {
    check_t(t)?;
    if delta.abs() >= S::one() {
        return Err(Error::OutOfRange(format!(
            "delta = {delta} is outside (-1, 1)"
        )));
    }
    if d == 0 {
        return Ok(S::zero());
    }
    let line = nullity_line(d, t);
    let half = S::from_int(d.abs()) / S::from_int(2);
    match delta.cmp(&line) {
        Ordering::Greater => Ok(-half),
        Ordering::Less => Ok(half),
        Ordering::Equal => Err(Error::OnIndicialLine(format!(
            "delta = {delta} is the indicial root -t|d|/2 for d = {d}, t = {t}"
        ))),
    }
}

/// Eigenvalues `j(j + |d|)` of the twisted sphere Laplacian `D⁻D⁺` for
/// `j = 0..=jmax`; `j = 0` only occurs for `d > 0`.
pub fn dirac_sphere_specsq(d: i64, jmax: u64) -> Vec<(u64, i64)> {
    let start = if d > 0 { 0 } else { 1 };
    (start..=jmax)
        .map(|j| (j, (j as i64) * (j as i64 + d.abs())))
        .collect()
}
