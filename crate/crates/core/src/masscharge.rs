//! Mass/charge pairs, charge labels and symmetry-breaking bookkeeping.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, RootFunctional};
use crate::rootsys::{CartanElement, PositiveSystem, Root, RootSystem};
use crate::scalar::ExactScalar;

/// Membership of the charge in the coroot lattice, i.e. `exp(2πκ) = 1` for a
/// simply connected group.
pub fn check_integrality<S: ExactScalar>(rs: &RootSystem, kappa: &CartanElement<S>) -> bool {
    match rs.to_coroot(kappa) {
        Ok(k) => k.coeffs.iter().all(|c| c.is_integral()),
        Err(_) => false,
    }
}

/// A validated mass (coweight coordinates) and integral charge (coroot coordinates).
#[derive(Debug, Clone)]
pub struct MassChargePair<'a, S> {
    rs: &'a RootSystem,
    mu: CartanElement<S>,
    kappa: CartanElement<S>,
    kappa_int: Vec<i64>,
    /// per root of `rs.roots()`: sign of `iα(μ)` and the degree `iα(κ)`
    root_data: Vec<(Ordering, i64)>,
}

impl<'a, S: ExactScalar> MassChargePair<'a, S> {
    /// Inputs may be given in either basis; they are normalised to coweight
    /// coordinates for the mass and coroot coordinates for the charge.
    pub fn new(
        rs: &'a RootSystem,
        mu: &CartanElement<S>,
        kappa: &CartanElement<S>,
    ) -> Result<Self> {
        let mu = rs.to_coweight(mu)?;
        let kappa = rs.to_coroot(kappa)?;
        let kappa_int = kappa
            .coeffs
            .iter()
            .map(|c| c.to_int())
            .collect::<Option<Vec<i64>>>()
            .ok_or(Error::NotIntegral)?;
        Ok(Self::assemble(rs, mu, kappa, kappa_int))
    }

    fn assemble(
        rs: &'a RootSystem,
        mu: CartanElement<S>,
        kappa: CartanElement<S>,
        kappa_int: Vec<i64>,
    ) -> Self {
        let mass = RootFunctional::new(&mu.coeffs);
        let root_data = rs
            .roots()
            .iter()
            .map(|a| (mass.sign(a.coords()), degree(rs, &kappa_int, a)))
            .collect();
        MassChargePair {
            rs,
            mu,
            kappa,
            kappa_int,
            root_data,
        }
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn mass(&self) -> &CartanElement<S> {
        &self.mu
    }

    pub fn charge(&self) -> &CartanElement<S> {
        &self.kappa
    }

    /// Integer charge coordinates in the standard simple-coroot basis.
    pub fn charge_coords(&self) -> &[i64] {
        &self.kappa_int
    }

    pub fn mass_pairing(&self, alpha: &Root) -> S {
        self.rs.pairing(alpha, &self.mu)
    }

    /// `iα(κ)`, always an integer (the degree of the root line bundle).
    pub fn charge_pairing(&self, alpha: &Root) -> i64 {
        degree(self.rs, &self.kappa_int, alpha)
    }

    /// Every root with the sign of its mass pairing and its degree.
    pub fn roots_with_data(&self) -> impl Iterator<Item = (&'a Root, Ordering, i64)> + '_ {
        self.rs
            .roots()
            .iter()
            .zip(&self.root_data)
            .map(|(a, &(s, d))| (a, s, d))
    }

    /// The pair after the simple reflection `s_i` acts on both entries.
    pub fn reflected(&self, i: usize) -> Self {
        let mu = self.rs.reflect_element(i, &self.mu);
        let kappa = self.rs.reflect_element(i, &self.kappa);
        let kappa_int = kappa.coeffs.iter().map(|c| c.to_int().unwrap()).collect();
        Self::assemble(self.rs, mu, kappa, kappa_int)
    }

    /// `(μ, κ) ↦ (−μ, −κ)`.
    pub fn negated(&self) -> Self {
        MassChargePair {
            rs: self.rs,
            mu: self.mu.neg(),
            kappa: self.kappa.neg(),
            kappa_int: self.kappa_int.iter().map(|k| -k).collect(),
            root_data: self
                .root_data
                .iter()
                .map(|&(s, d)| (s.reverse(), -d))
                .collect(),
        }
    }

    pub fn with_charge(&self, kappa: &CartanElement<S>) -> Result<Self> {
        Self::new(self.rs, &self.mu, kappa)
    }
}

fn degree(rs: &RootSystem, kappa: &[i64], alpha: &Root) -> i64 {
    (0..rs.rank())
        .filter(|&i| kappa[i] != 0)
        .map(|i| kappa[i] * rs.coroot_pairing(alpha.coords(), i))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChargeKind {
    Magnetic,
    Holomorphic,
}

impl fmt::Display for ChargeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChargeKind::Magnetic => "magnetic",
            ChargeKind::Holomorphic => "holomorphic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeEntry {
    /// position in the adapted base
    pub index: usize,
    pub root: Root,
    pub charge: i64,
    pub kind: ChargeKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeReport {
    pub entries: Vec<ChargeEntry>,
    pub adapted_base: Vec<Root>,
    /// charge coordinates in the standard simple-coroot basis
    pub standard_charges: Vec<i64>,
}

impl ChargeReport {
    pub fn total(&self) -> i64 {
        self.entries.iter().map(|e| e.charge).sum()
    }
}

/// Charges `iw_j(κ)` for the fundamental weights `w_j` of the adapted base.
///
/// These are the coefficients of `κ` in the adapted simple-coroot basis.
/// Negative values are reported as-is.
pub fn charge_report<S: ExactScalar>(
    pair: &MassChargePair<'_, S>,
    ps: &PositiveSystem,
) -> Result<ChargeReport> {
    let rs = pair.root_system();
    if !check_integrality(rs, pair.charge()) {
        return Err(Error::NotIntegral);
    }
    let columns: Vec<Vec<S>> = ps
        .base()
        .iter()
        .map(|b| linalg::to_scalars(&rs.coroot_of(b)))
        .collect();
    let rhs: Vec<S> = linalg::to_scalars(pair.charge_coords());
    let coeffs = linalg::solve_columns(&columns, &rhs)
        .ok_or_else(|| Error::RouteMismatch("adapted coroots are linearly dependent".into()))?;

    let mut entries = Vec::with_capacity(coeffs.len());
    for (index, (root, c)) in ps.base().iter().zip(coeffs).enumerate() {
        let charge = c.to_int().ok_or_else(|| {
            Error::RouteMismatch(format!(
                "non-integral adapted charge {c} for base root {root}"
            ))
        })?;
        let kind = if pair.mass_pairing(root).is_zero() {
            ChargeKind::Holomorphic
        } else {
            ChargeKind::Magnetic
        };
        entries.push(ChargeEntry {
            index,
            root: root.clone(),
            charge,
            kind,
        });
    }
    Ok(ChargeReport {
        entries,
        adapted_base: ps.base().to_vec(),
        standard_charges: pair.charge_coords().to_vec(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootCounts {
    /// `#{α : iα(μ) > 0}`
    pub mass_positive: usize,
    /// `#{α : iα(μ) = 0}`
    pub mass_zero: usize,
    /// `#{α : iα(μ) = 0, iα(κ) ≠ 0}`
    pub mass_zero_charge_nonzero: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BreakingReport {
    pub centralizer_mu_dim: usize,
    pub stabilizer_mu_kappa_dim: usize,
    /// dimension of the flag manifold `Stab(μ)/Stab(μ, κ)`
    pub base_dim: usize,
    pub root_counts: RootCounts,
}

pub fn breaking_report<S: ExactScalar>(pair: &MassChargePair<'_, S>) -> BreakingReport {
    let rs = pair.root_system();
    let mut counts = RootCounts {
        mass_positive: 0,
        mass_zero: 0,
        mass_zero_charge_nonzero: 0,
    };
    for (_, mass, degree) in pair.roots_with_data() {
        match mass {
            Ordering::Greater => counts.mass_positive += 1,
            Ordering::Equal => {
                counts.mass_zero += 1;
                if degree != 0 {
                    counts.mass_zero_charge_nonzero += 1;
                }
            }
            Ordering::Less => {}
        }
    }
    let centralizer = rs.rank() + counts.mass_zero;
    let stabilizer = rs.rank() + counts.mass_zero - counts.mass_zero_charge_nonzero;
    BreakingReport {
        centralizer_mu_dim: centralizer,
        stabilizer_mu_kappa_dim: stabilizer,
        base_dim: centralizer - stabilizer,
        root_counts: counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{positive_system, Tiebreak};
    use crate::Rational as Q;
    use num_traits::Zero;

    fn q(v: &[i64]) -> Vec<Q> {
        linalg::to_scalars(v)
    }

    fn report(spec: &str, mu: &[i64], kappa: &[i64]) -> (ChargeReport, BreakingReport) {
        let rs = RootSystem::parse(spec).unwrap();
        let pair = MassChargePair::new(
            &rs,
            &CartanElement::coweight(q(mu)),
            &CartanElement::coroot(q(kappa)),
        )
        .unwrap();
        let ps = positive_system(
            &rs,
            pair.mass(),
            pair.charge(),
            &Tiebreak::standard(rs.rank()),
        )
        .unwrap();
        (charge_report(&pair, &ps).unwrap(), breaking_report(&pair))
    }

    #[test]
    fn integrality_examples() {
        let a1 = RootSystem::parse("A1").unwrap();
        assert!(check_integrality(&a1, &CartanElement::coroot(q(&[1]))));
        assert!(!check_integrality(
            &a1,
            &CartanElement::coroot(vec![Q::from_ratio(1, 2)])
        ));
        let a2 = RootSystem::parse("A2").unwrap();
        assert!(check_integrality(&a2, &CartanElement::coroot(q(&[2, 1]))));
        // the fundamental coweight ω_1^∨ of A2 is (2/3, 1/3) in coroots
        assert!(!check_integrality(
            &a2,
            &CartanElement::coweight(q(&[1, 0]))
        ));
        assert!(!check_integrality(&a2, &CartanElement::coroot(q(&[1]))));
    }

    #[test]
    fn fractional_charge_rejected_by_pair() {
        let a1 = RootSystem::parse("A1").unwrap();
        let r = MassChargePair::new(
            &a1,
            &CartanElement::coweight(q(&[1])),
            &CartanElement::coroot(vec![Q::from_ratio(1, 2)]),
        );
        assert!(matches!(r, Err(Error::NotIntegral)));
    }

    #[test]
    fn su3_case_one_charges() {
        let (c, b) = report("A2", &[0, 3], &[1, 2]);
        let got: Vec<(i64, ChargeKind)> = c.entries.iter().map(|e| (e.charge, e.kind)).collect();
        assert_eq!(
            got,
            vec![(1, ChargeKind::Holomorphic), (2, ChargeKind::Magnetic)]
        );
        assert_eq!(b.base_dim, 0);
        assert_eq!(b.centralizer_mu_dim, 4);
    }

    #[test]
    fn su3_case_two_charges_and_breaking() {
        let (c, b) = report("A2", &[0, 3], &[0, 2]);
        let got: Vec<(i64, ChargeKind)> = c.entries.iter().map(|e| (e.charge, e.kind)).collect();
        assert_eq!(
            got,
            vec![(0, ChargeKind::Holomorphic), (2, ChargeKind::Magnetic)]
        );
        assert_eq!(b.centralizer_mu_dim, 4);
        assert_eq!(b.stabilizer_mu_kappa_dim, 2);
        assert_eq!(b.base_dim, 2);
        assert_eq!(
            b.root_counts,
            RootCounts {
                mass_positive: 2,
                mass_zero: 2,
                mass_zero_charge_nonzero: 2
            }
        );
    }

    #[test]
    fn su2_single_magnetic_charge() {
        for k in -3..=5 {
            let (c, _) = report("A1", &[1], &[k]);
            assert_eq!(c.entries.len(), 1);
            assert_eq!(c.entries[0].charge, k);
            assert_eq!(c.entries[0].kind, ChargeKind::Magnetic);
        }
    }

    #[test]
    fn generic_mass_breaks_maximally() {
        let (_, b) = report("B3", &[1, 2, 3], &[4, -1, 2]);
        assert_eq!(b.centralizer_mu_dim, 3);
        assert_eq!(b.stabilizer_mu_kappa_dim, 3);
        assert_eq!(b.base_dim, 0);
    }

    #[test]
    fn zero_mass_unbroken() {
        let rs = RootSystem::parse("G2").unwrap();
        // κ = (2, 1) in coroots pairs nonzero with every G2 root
        let (_, b) = report("G2", &[0, 0], &[2, 1]);
        assert_eq!(b.centralizer_mu_dim, rs.dim());
        assert_eq!(b.base_dim, rs.roots().len());
    }

    #[test]
    fn holomorphic_entries_have_zero_mass_pairing() {
        let rs = RootSystem::parse("A4").unwrap();
        let pair = MassChargePair::new(
            &rs,
            &CartanElement::coweight(q(&[0, 2, 0, 0])),
            &CartanElement::coroot(q(&[1, -3, 2, 0])),
        )
        .unwrap();
        let ps = positive_system(&rs, pair.mass(), pair.charge(), &Tiebreak::standard(4)).unwrap();
        let c = charge_report(&pair, &ps).unwrap();
        for e in &c.entries {
            let zero = pair.mass_pairing(&e.root).is_zero();
            assert_eq!(zero, e.kind == ChargeKind::Holomorphic);
        }
        assert_eq!(
            c.entries
                .iter()
                .filter(|e| e.kind == ChargeKind::Magnetic)
                .count(),
            1
        );
    }
}
