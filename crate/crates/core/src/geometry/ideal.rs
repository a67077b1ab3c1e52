use serde::Serialize;

use crate::error::Error;
use crate::exactmath::{Matrix, Scalar};
use crate::geometry::{closure, ClosureOptions, Point, SuperalgebraicSet};
use crate::membership::{combine, graded_basis};
use crate::poly::{LaurentPoly, Signature};

/// Supersymmetric polynomials of degree `<= d`: the graded bases for
/// degrees `0..=d`, concatenated.
pub fn supersymmetric_basis_upto(sig: Signature, d: usize) -> Vec<LaurentPoly> {
    (0..=d).flat_map(|k| graded_basis(sig, k)).collect()
}

/// Basis of the supersymmetric polynomials of degree `<= d` that vanish on
/// every member of `s`.
///
/// Vanishing on a `k`-dimensional member is imposed on its `(d + 1)^k`
/// integer grid, which forces a polynomial of degree `<= d` to vanish on the
/// whole subspace.
pub fn vanishing_basis(s: &SuperalgebraicSet, d: usize) -> Vec<LaurentPoly> {
    let candidates = supersymmetric_basis_upto(s.signature(), d);
    let mut rows = Vec::new();
    for sub in s.subspaces() {
        for q in sub.grid(d) {
            rows.push(
                candidates
                    .iter()
                    .map(|f| f.evaluate(&q).expect("polynomials evaluate everywhere"))
                    .collect(),
            );
        }
    }
    let system = Matrix::from_rows(rows, candidates.len()).expect("uniform rows");
    system
        .kernel_basis()
        .into_iter()
        .map(|v| combine(&candidates, &v))
        .collect()
}

/// Basis of the degree-`<= d` part of the maximal ideal of supersymmetric
/// polynomials vanishing at `p`.
pub fn m_lambda_basis(sig: Signature, p: &Point, d: usize) -> Result<Vec<LaurentPoly>, Error> {
    let s = SuperalgebraicSet::from_points(sig, std::slice::from_ref(p))?;
    Ok(vanishing_basis(&s, d))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridEntry {
    pub point: Point,
    /// Every element of the truncated maximal ideal vanishes here.
    pub vanishes: bool,
    pub in_closure: bool,
}

impl GridEntry {
    /// In the closure but not a common zero: contradicts the Nullstellensatz.
    pub fn is_violation(&self) -> bool {
        self.in_closure && !self.vanishes
    }

    /// A common zero outside the closure. Expected at small `d`; the
    /// truncated ideal does not yet cut out the closure.
    pub fn is_mismatch(&self) -> bool {
        self.vanishes && !self.in_closure
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NullstellensatzReport {
    pub point: Point,
    pub degree: usize,
    pub basis: Vec<String>,
    pub closure: SuperalgebraicSet,
    pub entries: Vec<GridEntry>,
    pub violations: usize,
    pub mismatches: usize,
}

/// Compares the common zeros of the truncated maximal ideal at `p` with the
/// closure of `p`, point by point over `grid`.
pub fn nullstellensatz_check(
    sig: Signature,
    p: &Point,
    d: usize,
    grid: &[Point],
    opts: ClosureOptions,
) -> Result<NullstellensatzReport, Error> {
    let basis = m_lambda_basis(sig, p, d)?;
    let single = SuperalgebraicSet::from_points(sig, std::slice::from_ref(p))?;
    let orbit = closure(&single, opts)?;
    let entries = grid
        .iter()
        .map(|q| {
            q.check(sig)?;
            let vanishes = basis
                .iter()
                .map(|f| f.evaluate(&q.coords))
                .collect::<Result<Vec<Scalar>, Error>>()?
                .iter()
                .all(Scalar::is_zero);
            Ok(GridEntry {
                point: q.clone(),
                vanishes,
                in_closure: orbit.contains_point(&q.coords),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(NullstellensatzReport {
        point: p.clone(),
        degree: d,
        basis: basis.iter().map(LaurentPoly::render).collect(),
        violations: entries.iter().filter(|e| e.is_violation()).count(),
        mismatches: entries.iter().filter(|e| e.is_mismatch()).count(),
        closure: orbit,
        entries,
    })
}
