use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, dot_int};
use crate::scalar::ExactScalar;

use super::simple::{format_group, parse_group, SimpleType};

/// A root written in the simple-root basis, `α = Σ n_j α_j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }

    pub fn plus(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Fundamental coweights `ω_i^∨`, dual to the simple roots. Masses live here.
    Coweight,
    /// Simple coroots `α_i^∨`. Charges live here.
    Coroot,
}

impl Basis {
    pub fn name(&self) -> &'static str {
        match self {
            Basis::Coweight => "fundamental-coweight",
            Basis::Coroot => "simple-coroot",
        }
    }
}

/// An element of the compact Cartan subalgebra in exact coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanElement<S> {
    pub basis: Basis,
    pub coeffs: Vec<S>,
}

impl<S: ExactScalar> CartanElement<S> {
    pub fn coweight(coeffs: Vec<S>) -> Self {
        CartanElement {
            basis: Basis::Coweight,
            coeffs,
        }
    }

    pub fn coroot(coeffs: Vec<S>) -> Self {
        CartanElement {
            basis: Basis::Coroot,
            coeffs,
        }
    }

    pub fn coroot_int(coeffs: &[i64]) -> Self {
        Self::coroot(linalg::to_scalars(coeffs))
    }

    pub fn zero(basis: Basis, rank: usize) -> Self {
        CartanElement {
            basis,
            coeffs: vec![S::zero(); rank],
        }
    }

    pub fn neg(&self) -> Self {
        CartanElement {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Coordinate-wise sum; both summands must share a basis.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::WrongBasis {
                what: "summand",
                expected: self.basis.name(),
            });
        }
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                found: other.coeffs.len(),
            });
        }
        Ok(CartanElement {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// A semisimple root datum: simple components, Cartan matrix and all roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    components: Vec<SimpleType>,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩`
    cartan: Vec<Vec<i64>>,
    /// block-diagonal Gram matrix of the simple roots (per-component scale)
    gram: Vec<Vec<i64>>,
    /// index of the simple component owning each simple root
    component_of: Vec<usize>,
    /// sorted lexicographically
    roots: Vec<Root>,
}

impl RootSystem {
    pub fn new(components: &[SimpleType]) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidGroup {
                position: 0,
                message: "at least one simple component is required".into(),
            });
        }
        let n: usize = components.iter().map(|t| t.rank()).sum();
        let mut gram = vec![vec![0i64; n]; n];
        let mut component_of = Vec::with_capacity(n);
        let mut offset = 0;
        for (c, t) in components.iter().enumerate() {
            let g = t.gram();
            for (i, row) in g.iter().enumerate() {
                gram[offset + i][offset..offset + t.rank()].copy_from_slice(row);
                component_of.push(c);
            }
            offset += t.rank();
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();

        let mut roots = Vec::new();
        let mut offset = 0;
        for t in components {
            let r = t.rank();
            let block: Vec<Vec<i64>> = (0..r)
                .map(|i| cartan[offset + i][offset..offset + r].to_vec())
                .collect();
            for local in positive_roots_by_strings(&block) {
                let mut coords = vec![0; n];
                coords[offset..offset + r].copy_from_slice(&local);
                let root = Root(coords);
                roots.push(root.neg());
                roots.push(root);
            }
            offset += r;
        }
        roots.sort();
        Ok(RootSystem {
            components: components.to_vec(),
            cartan,
            gram,
            component_of,
            roots,
        })
    }

    pub fn parse(spec: &str) -> Result<Self> {
        Self::new(&parse_group(spec)?)
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    pub fn name(&self) -> String {
        format_group(&self.components)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Real dimension of the compact Lie algebra.
    pub fn dim(&self) -> usize {
        self.rank() + self.roots.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn component_of(&self, simple_index: usize) -> usize {
        self.component_of[simple_index]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Root(v)
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.roots.binary_search(root).is_ok()
    }

    fn check_len<T>(&self, v: &[T]) -> Result<()> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: v.len(),
            })
        }
    }

    /// `⟨β, α_i^∨⟩` for a root-lattice vector `β`.
    pub fn coroot_pairing(&self, beta: &[i64], i: usize) -> i64 {
        dot_int(&self.cartan[i], beta)
    }

    /// The real pairing `iα(h)` of a root with a Cartan element, computed exactly.
    pub fn pairing<S: ExactScalar>(&self, alpha: &Root, h: &CartanElement<S>) -> S {
        let n = alpha.coords();
        match h.basis {
            Basis::Coweight => n
                .iter()
                .zip(&h.coeffs)
                .filter(|(nj, _)| **nj != 0)
                .fold(S::zero(), |acc, (&nj, m)| acc + S::from_int(nj) * m.clone()),
            Basis::Coroot => h
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, k)| !k.is_zero())
                .fold(S::zero(), |acc, (i, k)| {
                    acc + k.clone() * S::from_int(self.coroot_pairing(n, i))
                }),
        }
    }

    /// Checked variant of [`RootSystem::pairing`].
    pub fn try_pairing<S: ExactScalar>(&self, alpha: &Root, h: &CartanElement<S>) -> Result<S> {
        self.check_len(&h.coeffs)?;
        if !self.contains(alpha) {
            return Err(Error::NotARoot(alpha.coords().to_vec()));
        }
        Ok(self.pairing(alpha, h))
    }

    /// Rewrites `h` in the fundamental-coweight basis (`m_j = iα_j(h)`).
    pub fn to_coweight<S: ExactScalar>(&self, h: &CartanElement<S>) -> Result<CartanElement<S>> {
        self.check_len(&h.coeffs)?;
        Ok(match h.basis {
            Basis::Coweight => h.clone(),
            Basis::Coroot => CartanElement::coweight(
                (0..self.rank())
                    .map(|j| self.pairing(&self.simple_root(j), h))
                    .collect(),
            ),
        })
    }

    /// Rewrites `h` in the simple-coroot basis.
    pub fn to_coroot<S: ExactScalar>(&self, h: &CartanElement<S>) -> Result<CartanElement<S>> {
        self.check_len(&h.coeffs)?;
        Ok(match h.basis {
            Basis::Coroot => h.clone(),
            Basis::Coweight => {
                // m_j = Σ_i k_i cartan[i][j], so column i of the system is row i of the Cartan matrix
                let columns: Vec<Vec<S>> = self
                    .cartan
                    .iter()
                    .map(|row| linalg::to_scalars(row))
                    .collect();
                let k = linalg::solve_columns(&columns, &h.coeffs)
                    .expect("Cartan matrix of a semisimple algebra is invertible");
                CartanElement::coroot(k)
            }
        })
    }

    /// Squared length `(β, β)` in the component's Gram normalisation.
    fn norm_sq(&self, beta: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in (0..n).filter(|&i| beta[i] != 0) {
            for j in (0..n).filter(|&j| beta[j] != 0) {
                s += beta[i] * self.gram[i][j] * beta[j];
            }
        }
        s
    }

    /// Coordinates of the coroot `β^∨ = 2β/(β,β)` in the simple-coroot basis.
    pub fn coroot_of(&self, beta: &Root) -> Vec<i64> {
        let norm = self.norm_sq(beta.coords());
        beta.coords()
            .iter()
            .enumerate()
            .map(|(j, &nj)| {
                let num = nj * self.gram[j][j];
                debug_assert_eq!(num % norm, 0, "coroot coordinates are integral");
                num / norm
            })
            .collect()
    }

    /// Simple reflection `s_i` acting on the root lattice.
    pub fn reflect_root(&self, i: usize, beta: &Root) -> Root {
        let c = self.coroot_pairing(beta.coords(), i);
        let mut v = beta.coords().to_vec();
        v[i] -= c;
        Root(v)
    }

    /// Simple reflection `s_i` acting on the Cartan subalgebra.
    pub fn reflect_element<S: ExactScalar>(
        &self,
        i: usize,
        h: &CartanElement<S>,
    ) -> CartanElement<S> {
        let mut coeffs = h.coeffs.clone();
        match h.basis {
            Basis::Coweight => {
                let mi = h.coeffs[i].clone();
                for (j, c) in coeffs.iter_mut().enumerate() {
                    *c = c.clone() - S::from_int(self.cartan[i][j]) * mi.clone();
                }
            }
            Basis::Coroot => {
                let alpha_i = self.pairing(&self.simple_root(i), h);
                coeffs[i] = coeffs[i].clone() - alpha_i;
            }
        }
        CartanElement {
            basis: h.basis,
            coeffs,
        }
    }

    /// Cartan element of `su(n)` from the imaginary parts `c` of a traceless
    /// diagonal matrix `i·diag(c)`.
    ///
    /// Uses `α_j = e_j − e_{j+1}` and the literal reading `iα_j(h) = c_{j+1} − c_j`.
    /// Requires a single `A_{n-1}` component.
    pub fn from_su_diagonal<S: ExactScalar>(
        &self,
        entries: &[S],
        basis: Basis,
    ) -> Result<CartanElement<S>> {
        let single_a =
            self.components.len() == 1 && self.components[0].series() == super::simple::Series::A;
        if !single_a {
            return Err(Error::InvalidGroup {
                position: 0,
                message: "diagonal matrix input needs a single A-type component".into(),
            });
        }
        if entries.len() != self.rank() + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.rank() + 1,
                found: entries.len(),
            });
        }
        let trace = entries.iter().fold(S::zero(), |a, b| a + b.clone());
        if !trace.is_zero() {
            return Err(Error::OutOfRange(
                "diagonal entries must sum to zero".into(),
            ));
        }
        let m: Vec<S> = entries
            .windows(2)
            .map(|w| w[1].clone() - w[0].clone())
            .collect();
        let h = CartanElement::coweight(m);
        match basis {
            Basis::Coweight => Ok(h),
            Basis::Coroot => self.to_coroot(&h),
        }
    }
}

/// Positive roots of an indecomposable system from its Cartan matrix, via
/// α-strings: `β + α_i` is a root iff `p − ⟨β, α_i^∨⟩ > 0`, where `p` is the
/// length of the downward `α_i`-string through `β`.
fn positive_roots_by_strings(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone());
        }
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - dot_int(&cartan[i], beta) > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all
}
