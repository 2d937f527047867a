use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::linalg::{self, RootFunctional};
use crate::scalar::ExactScalar;

use super::system::{Basis, CartanElement, Root, RootSystem};

/// Generic linear functional on root coordinates used to order roots that
/// pair to zero with both the mass and the charge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiebreak<S>(pub Vec<S>);

impl<S: ExactScalar> Tiebreak<S> {
    /// `(1, 1/2, 1/4, …, 2^{1−n})`.
    pub fn standard(rank: usize) -> Self {
        let mut v = Vec::with_capacity(rank);
        let mut x = S::one();
        for _ in 0..rank {
            v.push(x.clone());
            x = x / S::from_int(2);
        }
        Tiebreak(v)
    }

    pub fn eval(&self, alpha: &Root) -> S {
        alpha
            .coords()
            .iter()
            .zip(&self.0)
            .fold(S::zero(), |acc, (&n, t)| acc + S::from_int(n) * t.clone())
    }
}

/// A positive system `R⁺` together with its simple roots (the adapted base).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveSystem {
    positive_roots: Vec<Root>,
    base: Vec<Root>,
}

impl PositiveSystem {
    /// Sorted lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Adapted simple roots, in descending lexicographic order of coordinates
    /// (so an unchanged base comes out as `α_1, …, α_n`).
    pub fn base(&self) -> &[Root] {
        &self.base
    }

    pub fn is_positive(&self, alpha: &Root) -> bool {
        self.positive_roots.binary_search(alpha).is_ok()
    }

    /// Coefficients of `alpha` in the adapted base, by exact linear solve.
    pub fn express_in_base<S: ExactScalar>(&self, alpha: &Root) -> Vec<S> {
        let columns: Vec<Vec<S>> = self
            .base
            .iter()
            .map(|b| linalg::to_scalars(b.coords()))
            .collect();
        linalg::solve_columns(&columns, &linalg::to_scalars(alpha.coords()))
            .expect("adapted base spans the root lattice")
    }
}

/// Orders roots by `(iα(μ), −iα(κ), ⟨α, tiebreak⟩)` and keeps the
/// lexicographically positive half.
pub fn positive_system<S: ExactScalar>(
    rs: &RootSystem,
    mu: &CartanElement<S>,
    kappa: &CartanElement<S>,
    tiebreak: &Tiebreak<S>,
) -> Result<PositiveSystem> {
    if mu.basis != Basis::Coweight {
        return Err(Error::WrongBasis {
            what: "mass",
            expected: Basis::Coweight.name(),
        });
    }
    if kappa.basis != Basis::Coroot {
        return Err(Error::WrongBasis {
            what: "charge",
            expected: Basis::Coroot.name(),
        });
    }
    for v in [mu.coeffs.len(), kappa.coeffs.len(), tiebreak.0.len()] {
        if v != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                found: v,
            });
        }
    }

    // each key is a functional Σ_j n_j w_j on root coordinates
    let kappa_weights = rs.to_coweight(kappa)?.coeffs;
    let keys = [
        RootFunctional::new(&mu.coeffs),
        RootFunctional::new(&kappa_weights),
        RootFunctional::new(&tiebreak.0),
    ];
    let mut positive_roots = Vec::with_capacity(rs.roots().len() / 2);
    for alpha in rs.roots() {
        let key = [
            keys[0].sign(alpha.coords()),
            keys[1].sign(alpha.coords()).reverse(),
            keys[2].sign(alpha.coords()),
        ];
        match key.into_iter().find(|o| *o != Ordering::Equal) {
            Some(Ordering::Greater) => positive_roots.push(alpha.clone()),
            Some(_) => {}
            None => return Err(Error::NonGenericTiebreak(alpha.coords().to_vec())),
        }
    }

    let set: HashSet<&[i64]> = positive_roots.iter().map(|r| r.coords()).collect();
    let mut diff = vec![0i64; rs.rank()];
    let mut base: Vec<Root> = Vec::with_capacity(rs.rank());
    for beta in &positive_roots {
        let decomposable = positive_roots.iter().any(|gamma| {
            for ((d, b), g) in diff.iter_mut().zip(beta.coords()).zip(gamma.coords()) {
                *d = b - g;
            }
            set.contains(diff.as_slice())
        });
        if !decomposable {
            base.push(beta.clone());
        }
    }
    base.sort_by(|a, b| b.cmp(a));
    debug_assert_eq!(base.len(), rs.rank());
    Ok(PositiveSystem {
        positive_roots,
        base,
    })
}
