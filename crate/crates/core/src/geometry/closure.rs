use std::collections::VecDeque;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::Error;
use crate::exactmath::Scalar;
use crate::geometry::{check_len, pairing_covector, positive_roots, AffineSubspace, Point};
use crate::poly::Signature;
use crate::symmetry::WeylElement;

/// A finite, irredundant union of affine subspaces.
///
/// Members are sorted by `(dimension, JSON form)` and none contains another,
/// so equal sets compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperalgebraicSet {
    signature: Signature,
    subspaces: Vec<AffineSubspace>,
}

#[derive(Deserialize)]
struct SetRecord {
    signature: Signature,
    subspaces: Vec<AffineSubspace>,
}

impl<'de> Deserialize<'de> for SuperalgebraicSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rec = SetRecord::deserialize(deserializer)?;
        SuperalgebraicSet::new(rec.signature, rec.subspaces).map_err(serde::de::Error::custom)
    }
}

fn sort_key(a: &AffineSubspace) -> (usize, String) {
    (a.dim(), serde_json::to_string(a).expect("subspaces serialize"))
}

impl SuperalgebraicSet {
    pub fn new(signature: Signature, subspaces: Vec<AffineSubspace>) -> Result<Self, Error> {
        for s in &subspaces {
            if s.ambient() != signature.dim() {
                return Err(Error::LengthMismatch {
                    expected: signature.dim(),
                    found: s.ambient(),
                });
            }
        }
        let mut kept: Vec<AffineSubspace> = Vec::new();
        for s in subspaces {
            insert_irredundant(&mut kept, s);
        }
        Ok(SuperalgebraicSet::sorted(signature, kept))
    }

    pub fn empty(signature: Signature) -> Self {
        SuperalgebraicSet {
            signature,
            subspaces: Vec::new(),
        }
    }

    pub fn from_points(signature: Signature, points: &[Point]) -> Result<Self, Error> {
        let subspaces = points
            .iter()
            .map(|p| {
                p.check(signature)?;
                Ok(AffineSubspace::point(p.coords.clone()))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        SuperalgebraicSet::new(signature, subspaces)
    }

    fn sorted(signature: Signature, mut subspaces: Vec<AffineSubspace>) -> Self {
        subspaces.sort_by_cached_key(sort_key);
        SuperalgebraicSet { signature, subspaces }
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn subspaces(&self) -> &[AffineSubspace] {
        &self.subspaces
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    pub fn contains_point(&self, p: &[Scalar]) -> bool {
        self.subspaces.iter().any(|s| s.contains_point(p))
    }

    /// Point-set containment of an affine subspace. Over an infinite field a
    /// subspace inside a finite union lies inside one member.
    pub fn contains_subspace(&self, a: &AffineSubspace) -> bool {
        self.subspaces.iter().any(|s| s.contains(a))
    }

    /// Point-set containment `other ⊆ self`.
    pub fn contains_set(&self, other: &SuperalgebraicSet) -> bool {
        other.subspaces.iter().all(|a| self.contains_subspace(a))
    }
}

/// Adds `s` unless an existing member contains it; drops members it contains.
/// Returns whether `s` was added.
fn insert_irredundant(members: &mut Vec<AffineSubspace>, s: AffineSubspace) -> bool {
    if members.iter().any(|m| m.contains(&s)) {
        return false;
    }
    members.retain(|m| !s.contains(m));
    members.push(s);
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureOptions {
    /// Also saturate under the Weyl group generators.
    pub include_weyl: bool,
    /// Upper bound on the number of member subspaces during saturation.
    pub max_subspaces: usize,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions {
            include_weyl: true,
            max_subspaces: 1000,
        }
    }
}

/// One application of the saturation rule to `a`.
///
/// For each positive isotropic root `alpha`, the part of `a` orthogonal to
/// `alpha` is swept along `alpha`. With `include_weyl`, the images of `a`
/// under the adjacent transpositions are added as well.
fn saturation_step(sig: Signature, a: &AffineSubspace, include_weyl: bool) -> Vec<AffineSubspace> {
    let mut out = Vec::new();
    for alpha in positive_roots(sig) {
        let v = alpha.vector(sig).expect("root of this signature");
        if let Some(locus) = a.restrict(&pairing_covector(sig, &v)) {
            out.push(locus.extend(&v));
        }
    }
    if include_weyl {
        for w in WeylElement::generators(sig) {
            out.push(a.apply_weyl(&w).expect("generator of this signature"));
        }
    }
    out
}

/// The smallest set containing `s` that is stable under the saturation
/// rule, computed by worklist iteration.
///
/// Fails with [`Error::NonConvergence`] rather than truncating when the
/// member count exceeds `opts.max_subspaces`.
pub fn closure(s: &SuperalgebraicSet, opts: ClosureOptions) -> Result<SuperalgebraicSet, Error> {
    if opts.max_subspaces < s.len() {
        return Err(Error::CapTooSmall {
            limit: opts.max_subspaces,
            size: s.len(),
        });
    }
    let sig = s.signature;
    let mut members = s.subspaces.clone();
    let mut queue: VecDeque<AffineSubspace> = members.iter().cloned().collect();
    // Each insertion either grows the member list or replaces members by a
    // strictly larger subspace, so this bounds the work of a convergent run.
    let insertion_budget = opts.max_subspaces.saturating_mul(sig.dim() + 1);
    let mut insertions = 0usize;
    while let Some(a) = queue.pop_front() {
        for b in saturation_step(sig, &a, opts.include_weyl) {
            if insert_irredundant(&mut members, b.clone()) {
                insertions += 1;
                if members.len() > opts.max_subspaces || insertions > insertion_budget {
                    return Err(Error::NonConvergence {
                        limit: opts.max_subspaces,
                    });
                }
                queue.push_back(b);
            }
        }
    }
    Ok(SuperalgebraicSet::sorted(sig, members))
}

/// Whether one saturation pass adds nothing.
pub fn is_superalgebraic(s: &SuperalgebraicSet, include_weyl: bool) -> bool {
    s.subspaces.iter().all(|a| {
        saturation_step(s.signature, a, include_weyl)
            .iter()
            .all(|b| s.contains_subspace(b))
    })
}

pub fn member(s: &SuperalgebraicSet, p: &Point) -> Result<bool, Error> {
    check_len(s.signature, &p.coords)?;
    Ok(s.contains_point(&p.coords))
}
