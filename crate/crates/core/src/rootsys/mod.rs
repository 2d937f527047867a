//! Root systems of semisimple Lie algebras in exact coordinates.
//!
//! Conventions:
//! - roots are integer vectors in the simple-root basis;
//! - `cartan[i][j] = ⟨α_j, α_i^∨⟩`;
//! - masses use fundamental-coweight coordinates (`⟨α_j, ω_i^∨⟩ = δ_ij`),
//!   charges use simple-coroot coordinates.

mod positive;
mod simple;
mod system;

pub use positive::{positive_system, PositiveSystem, Tiebreak};
pub use simple::{format_group, parse_group, Series, SimpleType};
pub use system::{Basis, CartanElement, Root, RootSystem};
