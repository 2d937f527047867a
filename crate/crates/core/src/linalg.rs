//! Small dense exact linear algebra.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::scalar::ExactScalar;

/// Solves `columns · x = rhs`, where `columns[k]` is the k-th column.
///
/// Returns `None` when the square system is singular.
pub fn solve_columns<S: ExactScalar>(columns: &[Vec<S>], rhs: &[S]) -> Option<Vec<S>> {
    let n = rhs.len();
    if columns.len() != n || columns.iter().any(|c| c.len() != n) {
        return None;
    }
    // augmented row-major matrix
    let mut m: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let mut row: Vec<S> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for v in m[col].iter_mut().skip(col) {
            *v = v.clone() / p.clone();
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for k in col..=n {
                let delta = f.clone() * m[col][k].clone();
                m[r][k] = m[r][k].clone() - delta;
            }
        }
    }
    Some(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

pub fn to_scalars<S: ExactScalar>(v: &[i64]) -> Vec<S> {
    v.iter().map(|&x| S::from_int(x)).collect()
}

pub fn dot_int(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `α ↦ Σ_j n_j w_j`, evaluated in `i128` after clearing denominators when
/// the scaled weights are small enough, exactly otherwise.
pub(crate) enum RootFunctional<'a, S> {
    Scaled(Vec<i128>),
    Exact(&'a [S]),
}

impl<'a, S: ExactScalar> RootFunctional<'a, S> {
    pub(crate) fn new(weights: &'a [S]) -> Self {
        let parts: Vec<(BigInt, BigInt)> = weights.iter().map(|w| w.numer_denom()).collect();
        let lcm = parts.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
        // roots have coordinates below 7 and rank at most a few dozen
        let bound = BigInt::one() << 96;
        let scaled: Option<Vec<i128>> = parts
            .iter()
            .map(|(n, d)| {
                let v = n * (&lcm / d);
                if v.abs() < bound {
                    v.to_i128()
                } else {
                    None
                }
            })
            .collect();
        match scaled {
            Some(v) => RootFunctional::Scaled(v),
            None => RootFunctional::Exact(weights),
        }
    }

    pub(crate) fn sign(&self, coords: &[i64]) -> Ordering {
        match self {
            RootFunctional::Scaled(w) => coords
                .iter()
                .zip(w)
                .map(|(&n, &x)| n as i128 * x)
                .sum::<i128>()
                .cmp(&0),
            RootFunctional::Exact(w) => coords
                .iter()
                .zip(w.iter())
                .fold(S::zero(), |acc, (&n, x)| acc + S::from_int(n) * x.clone())
                .cmp(&S::zero()),
        }
    }
}
