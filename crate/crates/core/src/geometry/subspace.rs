use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::exactmath::{Matrix, Scalar};
use crate::symmetry::WeylElement;

/// An affine subspace `base + span(dirs)` of rational coordinate space.
///
/// Stored canonically: direction rows in reduced row echelon form and the
/// base point reduced so that its coordinates at the pivot columns are zero.
/// Two subspaces are equal as point sets iff they are equal as values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSubspace {
    base: Vec<Scalar>,
    dirs: Matrix,
    pivots: Vec<usize>,
}

impl AffineSubspace {
    pub fn new(base: Vec<Scalar>, dirs: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let ambient = base.len();
        let dirs = Matrix::from_rows(dirs, ambient)?;
        Ok(AffineSubspace::canonical(base, &dirs))
    }

    pub fn point(p: Vec<Scalar>) -> Self {
        let ambient = p.len();
        AffineSubspace {
            base: p,
            dirs: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn whole_space(ambient: usize) -> Self {
        AffineSubspace::canonical(vec![Scalar::zero(); ambient], &Matrix::identity(ambient))
    }

    fn canonical(base: Vec<Scalar>, dirs: &Matrix) -> Self {
        let dirs = dirs.row_space_basis();
        let (_, pivots) = dirs.rref();
        let mut out = AffineSubspace {
            base: Vec::new(),
            dirs,
            pivots,
        };
        out.base = out.reduce(&base);
        out
    }

    pub fn ambient(&self) -> usize {
        self.base.len()
    }

    pub fn dim(&self) -> usize {
        self.dirs.rows()
    }

    pub fn base(&self) -> &[Scalar] {
        &self.base
    }

    pub fn directions(&self) -> &Matrix {
        &self.dirs
    }

    /// Subtracts direction rows to clear the pivot coordinates of `v`.
    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (o, d) in out.iter_mut().zip(self.dirs.row(row)) {
                *o -= &(&factor * d);
            }
        }
        out
    }

    fn in_direction_span(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_point(&self, p: &[Scalar]) -> bool {
        p.len() == self.ambient() && self.reduce(p) == self.base
    }

    /// Point-set containment `other ⊆ self`.
    pub fn contains(&self, other: &AffineSubspace) -> bool {
        other.ambient() == self.ambient()
            && other.dim() <= self.dim()
            && self.contains_point(&other.base)
            && (0..other.dim()).all(|r| self.in_direction_span(other.dirs.row(r)))
    }

    /// The point `base + sum coeffs[k] * dirs[k]`.
    pub fn at(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut p = self.base.clone();
        for (k, c) in coeffs.iter().enumerate() {
            for (x, d) in p.iter_mut().zip(self.dirs.row(k)) {
                *x += &(c * d);
            }
        }
        p
    }

    /// The locus `{p in self : covector . p = 0}`: all of `self`, a
    /// hyperplane in it, or `None` when empty.
    pub fn restrict(&self, covector: &[Scalar]) -> Option<AffineSubspace> {
        let dot = |v: &[Scalar]| -> Scalar { v.iter().zip(covector).map(|(a, b)| a * b).sum() };
        let at_base = dot(&self.base);
        let slopes: Vec<Scalar> = (0..self.dim()).map(|r| dot(self.dirs.row(r))).collect();
        let Some(k0) = slopes.iter().position(|s| !s.is_zero()) else {
            return at_base.is_zero().then(|| self.clone());
        };
        let inv = slopes[k0].recip().expect("nonzero slope");
        let pivot_dir = self.dirs.row(k0);
        let shift = |v: &[Scalar], amount: &Scalar| -> Vec<Scalar> {
            v.iter().zip(pivot_dir).map(|(x, d)| x - &(amount * d)).collect()
        };
        let base = shift(&self.base, &(&at_base * &inv));
        let dirs: Vec<Vec<Scalar>> = (0..self.dim())
            .filter(|&r| r != k0)
            .map(|r| shift(self.dirs.row(r), &(&slopes[r] * &inv)))
            .collect();
        Some(AffineSubspace::new(base, dirs).expect("consistent lengths"))
    }

    /// `self + span(v)`.
    pub fn extend(&self, v: &[Scalar]) -> AffineSubspace {
        let mut dirs = self.dirs.row_vecs();
        dirs.push(v.to_vec());
        AffineSubspace::new(self.base.clone(), dirs).expect("consistent lengths")
    }

    pub fn apply_weyl(&self, w: &WeylElement) -> Result<AffineSubspace, Error> {
        let base = w.apply_point(&self.base)?;
        let dirs = (0..self.dim())
            .map(|r| w.apply_point(self.dirs.row(r)))
            .collect::<Result<Vec<_>, _>>()?;
        AffineSubspace::new(base, dirs)
    }

    /// The `(d + 1)^dim` points with direction coefficients in `{0, .., d}`.
    pub fn grid(&self, d: usize) -> Vec<Vec<Scalar>> {
        let k = self.dim();
        let mut out = Vec::new();
        let mut idx = vec![0usize; k];
        loop {
            let coeffs: Vec<Scalar> = idx
                .iter()
                .map(|&c| Scalar::from(i64::try_from(c).expect("small grid")))
                .collect();
            out.push(self.at(&coeffs));
            // odometer increment
            let mut pos = 0;
            while pos < k {
                idx[pos] += 1;
                if idx[pos] <= d {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == k {
                return out;
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceRecord {
    base: Vec<Scalar>,
    dirs: Vec<Vec<Scalar>>,
}

impl Serialize for AffineSubspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SubspaceRecord {
            base: self.base.clone(),
            dirs: self.dirs.row_vecs(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AffineSubspace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rec = SubspaceRecord::deserialize(deserializer)?;
        AffineSubspace::new(rec.base, rec.dirs).map_err(serde::de::Error::custom)
    }
}
