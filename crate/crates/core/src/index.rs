//! Moduli-space dimension, computed three ways.
//!
//! 1. scattering + defect: `2 Σ_{iα(μ)>0} iα(κ) − 2 Σ_{α(μ)=0, iα(κ)>0} iα(κ)`;
//! 2. positive system: `2 Σ_{α∈R⁺} iα(κ)`;
//! 3. fundamental weights: `4 Σ_j iw_j(κ)` over the adapted base.
//!
//! The defect is additionally rebuilt from the per-line-bundle defect of
//! [`crate::indicial`] at `(t, δ) = (1, 1/2)`. All four must agree.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::indicial::defect_region;
use crate::masscharge::{breaking_report, charge_report, ChargeReport, MassChargePair};
use crate::rootsys::{positive_system, PositiveSystem, Tiebreak};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexBreakdown {
    pub scattering: i64,
    pub defect: i64,
    pub total: i64,
    pub via_positive_system: i64,
    pub via_weights: i64,
    /// set only when `total < 0`, in which case the moduli space is empty
    pub empty_flag: bool,
}

/// `2 Σ_{iα(μ) > 0} iα(κ)`.
pub fn scattering_index<S: ExactScalar>(pair: &MassChargePair<'_, S>) -> i64 {
    2 * pair
        .roots_with_data()
        .filter(|(_, mass, _)| *mass == Ordering::Greater)
        .map(|(_, _, d)| d)
        .sum::<i64>()
}

/// `−2 Σ_{α(μ) = 0, iα(κ) > 0} iα(κ)`.
pub fn defect_total<S: ExactScalar>(pair: &MassChargePair<'_, S>) -> i64 {
    -2 * pair
        .roots_with_data()
        .filter(|&(_, mass, d)| mass == Ordering::Equal && d > 0)
        .map(|(_, _, d)| d)
        .sum::<i64>()
}

/// The defect assembled from two copies of each massless root line bundle,
/// each evaluated at `t = 1`, `δ = 1/2`.
pub fn defect_from_line_bundles<S: ExactScalar>(pair: &MassChargePair<'_, S>) -> Result<S> {
    let one = S::one();
    let half = S::from_ratio(1, 2);
    let mut sum = S::zero();
    for (_, mass, d) in pair.roots_with_data() {
        if mass == Ordering::Equal {
            let per_copy = defect_region(d, &one, &half)?;
            sum = sum + S::from_int(2) * per_copy;
        }
    }
    Ok(sum)
}

/// `2 Σ_{α∈R⁺} iα(κ)`.
pub fn positive_system_sum<S: ExactScalar>(
    pair: &MassChargePair<'_, S>,
    ps: &PositiveSystem,
) -> i64 {
    2 * ps
        .positive_roots()
        .iter()
        .map(|a| pair.charge_pairing(a))
        .sum::<i64>()
}

/// Full breakdown with the standard tiebreak.
pub fn moduli_dimension<S: ExactScalar>(pair: &MassChargePair<'_, S>) -> Result<IndexBreakdown> {
    moduli_dimension_with(pair, &Tiebreak::standard(pair.root_system().rank()))
}

pub fn moduli_dimension_with<S: ExactScalar>(
    pair: &MassChargePair<'_, S>,
    tiebreak: &Tiebreak<S>,
) -> Result<IndexBreakdown> {
    Ok(dimension_and_charges(pair, tiebreak)?.0)
}

/// Breakdown together with the charge report it was checked against.
pub fn dimension_and_charges<S: ExactScalar>(
    pair: &MassChargePair<'_, S>,
    tiebreak: &Tiebreak<S>,
) -> Result<(IndexBreakdown, ChargeReport)> {
    let rs = pair.root_system();
    let ps = positive_system(rs, pair.mass(), pair.charge(), tiebreak)?;
    let charges = charge_report(pair, &ps)?;

    let scattering = scattering_index(pair);
    let defect = defect_total(pair);
    let total = scattering + defect;
    let via_positive_system = positive_system_sum(pair, &ps);
    let via_weights = 4 * charges.total();

    let bundles = defect_from_line_bundles(pair)?;
    if bundles != S::from_int(defect) {
        return Err(Error::RouteMismatch(format!(
            "defect formula {defect} vs line-bundle sum {bundles}"
        )));
    }
    if total != via_positive_system || total != via_weights {
        return Err(Error::RouteMismatch(format!(
            "scattering+defect = {total}, positive system = {via_positive_system}, weights = {via_weights}"
        )));
    }
    if total % 4 != 0 {
        return Err(Error::RouteMismatch(format!(
            "dimension {total} is not a multiple of 4"
        )));
    }
    let breakdown = IndexBreakdown {
        scattering,
        defect,
        total,
        via_positive_system,
        via_weights,
        empty_flag: total < 0,
    };
    Ok((breakdown, charges))
}

/// Fibre dimension plus the dimension of the framing flag manifold.
pub fn stratum_dimension<S: ExactScalar>(pair: &MassChargePair<'_, S>) -> Result<i64> {
    let total = moduli_dimension(pair)?.total;
    Ok(total + breaking_report(pair).base_dim as i64)
}
