//! Exact dimension and stratification data for framed monopole moduli spaces.
//!
//! The crate is organised bottom-up:
//!
//! - [`rootsys`]: root systems, pairings, positive systems and adapted bases;
//! - [`masscharge`]: mass/charge validation, charge labels, symmetry breaking;
//! - [`index`]: the moduli-space dimension by three independent routes;
//! - [`indicial`]: b-spectrum, `j = 0` nullities and the per-line-bundle defect;
//! - [`abelian_model`]: floating-point checks of the abelian Dirac monopole.
//!
//! Everything except [`abelian_model`] is generic over an [`ExactScalar`];
//! the aliases below pick arbitrary-precision rationals.

pub mod abelian_model;
pub mod error;
pub mod index;
pub mod indicial;
pub mod linalg;
pub mod masscharge;
pub mod rootsys;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::ExactScalar;

/// Arbitrary-precision rational, the default exact scalar.
pub type Rational = num_rational::BigRational;

pub type CartanElementQ = rootsys::CartanElement<Rational>;
pub type TiebreakQ = rootsys::Tiebreak<Rational>;
pub type MassChargePairQ<'a> = masscharge::MassChargePair<'a, Rational>;
pub type IndicialRootQ = indicial::IndicialRoot<Rational>;
pub type ModelField64 = abelian_model::ModelField<f64>;
pub type GridSpec64 = abelian_model::GridSpec<f64>;
