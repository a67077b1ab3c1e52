//! Weights, the invariant bilinear form, isotropic roots, and the geometry of
//! superalgebraic sets.
//!
//! Coordinates of a weight `lambda = sum a_i eps_i + sum b_j delta_j` are
//! `(a_1..a_m, b_1..b_n)`. The form is `(eps_i, eps_k) = delta_ik`,
//! `(delta_j, delta_l) = -delta_jl`, mixed pairings zero, so
//! `(lambda, eps_i - delta_j) = a_i + b_j`.

mod closure;
mod ideal;
mod subspace;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactmath::Scalar;
use crate::poly::Signature;

pub use closure::{closure, is_superalgebraic, member, ClosureOptions, SuperalgebraicSet};
pub use ideal::{
    m_lambda_basis, nullstellensatz_check, supersymmetric_basis_upto, vanishing_basis, GridEntry, NullstellensatzReport,
};
pub use subspace::AffineSubspace;

/// A weight, given by its coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub coords: Vec<Scalar>,
}

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Point {
            coords: coords.iter().map(|&c| Scalar::from(c)).collect(),
        }
    }

    pub fn check(&self, sig: Signature) -> Result<(), Error> {
        check_len(sig, &self.coords)
    }
}

pub(crate) fn check_len(sig: Signature, v: &[Scalar]) -> Result<(), Error> {
    if v.len() != sig.dim() {
        return Err(Error::LengthMismatch {
            expected: sig.dim(),
            found: v.len(),
        });
    }
    Ok(())
}

/// The invariant form `sum_{i<=m} a_i b_i - sum_{j<=n} a_{m+j} b_{m+j}`.
pub fn pairing(sig: Signature, a: &[Scalar], b: &[Scalar]) -> Result<Scalar, Error> {
    check_len(sig, a)?;
    check_len(sig, b)?;
    Ok(a.iter()
        .zip(b)
        .enumerate()
        .map(|(k, (x, y))| if k < sig.m { x * y } else { -(x * y) })
        .sum())
}

/// The covector `c` with `c . p = (p, v)` for every `p`.
pub(crate) fn pairing_covector(sig: Signature, v: &[Scalar]) -> Vec<Scalar> {
    v.iter()
        .enumerate()
        .map(|(k, x)| if k < sig.m { x.clone() } else { -x })
        .collect()
}

/// `sign * (eps_i - delta_j)`, with 1-based `i` and `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IsotropicRoot {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

impl IsotropicRoot {
    pub fn positive(i: usize, j: usize) -> Self {
        IsotropicRoot { i, j, sign: 1 }
    }

    pub fn negate(self) -> Self {
        IsotropicRoot {
            sign: -self.sign,
            ..self
        }
    }

    /// Coordinates in `(eps_1..eps_m, delta_1..delta_n)`.
    pub fn vector(&self, sig: Signature) -> Result<Vec<Scalar>, Error> {
        if !(1..=sig.m).contains(&self.i) {
            return Err(Error::IndexOutOfRange {
                what: "root index i",
                index: self.i,
                max: sig.m,
            });
        }
        if !(1..=sig.n).contains(&self.j) {
            return Err(Error::IndexOutOfRange {
                what: "root index j",
                index: self.j,
                max: sig.n,
            });
        }
        let s = i64::from(self.sign);
        let mut v = vec![Scalar::zero(); sig.dim()];
        v[self.i - 1] = Scalar::from(s);
        v[sig.m + self.j - 1] = Scalar::from(-s);
        Ok(v)
    }
}

impl fmt::Display for IsotropicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-(eps{} - delta{})", self.i, self.j)
        } else {
            write!(f, "eps{} - delta{}", self.i, self.j)
        }
    }
}

/// All `±(eps_i - delta_j)`: `2mn` roots, each positive root followed by its negative.
pub fn isotropic_roots(sig: Signature) -> Vec<IsotropicRoot> {
    sig.root_pairs()
        .flat_map(|(i, j)| {
            let r = IsotropicRoot::positive(i, j);
            [r, r.negate()]
        })
        .collect()
}

pub fn positive_roots(sig: Signature) -> Vec<IsotropicRoot> {
    sig.root_pairs().map(|(i, j)| IsotropicRoot::positive(i, j)).collect()
}

/// The hyperplane of weights orthogonal to `alpha`.
pub fn hyperplane(sig: Signature, alpha: IsotropicRoot) -> Result<AffineSubspace, Error> {
    let whole = AffineSubspace::whole_space(sig.dim());
    let covector = pairing_covector(sig, &alpha.vector(sig)?);
    Ok(whole
        .restrict(&covector)
        .expect("the origin lies on every root hyperplane"))
}

/// Positive roots `alpha` with `(p, alpha) = 0`, in canonical order.
pub fn atypical_roots(sig: Signature, p: &Point) -> Result<Vec<IsotropicRoot>, Error> {
    p.check(sig)?;
    let m = sig.m;
    Ok(sig
        .root_pairs()
        .filter(|&(i, j)| (&p.coords[i - 1] + &p.coords[m + j - 1]).is_zero())
        .map(|(i, j)| IsotropicRoot::positive(i, j))
        .collect())
}
