//! The Weyl group `W = S_m x S_n`, permuting the x-block and the y-block separately.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactmath::Scalar;
use crate::poly::{LaurentPoly, Signature};

/// A pair of permutations in one-line notation (1-based): `sigma` acts on
/// `x1..xm`, `tau` on `y1..yn`, by `x_i -> x_sigma(i)` and `y_j -> y_tau(j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
}

fn check_perm(p: &[usize]) -> Result<(), Error> {
    let mut seen = vec![false; p.len()];
    for &v in p {
        if v == 0 || v > p.len() || seen[v - 1] {
            return Err(Error::NotAPermutation(p.to_vec()));
        }
        seen[v - 1] = true;
    }
    Ok(())
}

/// All permutations of `1..=k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

fn transposition(k: usize, a: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=k).collect();
    p.swap(a, a + 1);
    p
}

impl WeylElement {
    pub fn new(sig: Signature, sigma: Vec<usize>, tau: Vec<usize>) -> Result<Self, Error> {
        if sigma.len() != sig.m {
            return Err(Error::PermutationSize {
                expected: sig.m,
                found: sigma.len(),
            });
        }
        if tau.len() != sig.n {
            return Err(Error::PermutationSize {
                expected: sig.n,
                found: tau.len(),
            });
        }
        check_perm(&sigma)?;
        check_perm(&tau)?;
        Ok(WeylElement { sigma, tau })
    }

    pub fn identity(sig: Signature) -> Self {
        WeylElement {
            sigma: (1..=sig.m).collect(),
            tau: (1..=sig.n).collect(),
        }
    }

    pub fn signature(&self) -> Signature {
        Signature::new(self.sigma.len(), self.tau.len())
    }

    /// Adjacent transpositions of both blocks: `(m - 1) + (n - 1)` generators.
    pub fn generators(sig: Signature) -> Vec<WeylElement> {
        let id = WeylElement::identity(sig);
        let xs = (0..sig.m.saturating_sub(1)).map(|a| WeylElement {
            sigma: transposition(sig.m, a),
            tau: id.tau.clone(),
        });
        let ys = (0..sig.n.saturating_sub(1)).map(|b| WeylElement {
            sigma: id.sigma.clone(),
            tau: transposition(sig.n, b),
        });
        xs.chain(ys).collect()
    }

    /// Every element of `S_m x S_n`, `m! * n!` in total.
    pub fn all(sig: Signature) -> Vec<WeylElement> {
        let taus = permutations(sig.n);
        permutations(sig.m)
            .into_iter()
            .flat_map(|sigma| {
                taus.iter().map(move |tau| WeylElement {
                    sigma: sigma.clone(),
                    tau: tau.clone(),
                })
            })
            .collect()
    }

    fn check_sig(&self, sig: Signature) -> Result<(), Error> {
        if self.signature() != sig {
            return Err(Error::SignatureMismatch {
                left: self.signature(),
                right: sig,
            });
        }
        Ok(())
    }

    /// Position that coordinate `idx` (0-based over `m + n`) moves to.
    fn image_index(&self, idx: usize) -> usize {
        let m = self.sigma.len();
        if idx < m {
            self.sigma[idx] - 1
        } else {
            m + self.tau[idx - m] - 1
        }
    }

    /// Relabels variables; parameter variables are left alone.
    pub fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.check_sig(f.signature())?;
        let dim = f.signature().dim();
        Ok(f.map_monomials(|e| {
            let mut out = e.to_vec();
            for (idx, &v) in e[..dim].iter().enumerate() {
                out[self.image_index(idx)] = v;
            }
            out
        }))
    }

    /// Moves coordinate `i` of a point to position `w(i)`.
    pub fn apply_point(&self, coords: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        let dim = self.signature().dim();
        if coords.len() != dim {
            return Err(Error::LengthMismatch {
                expected: dim,
                found: coords.len(),
            });
        }
        let mut out = coords.to_vec();
        for (idx, c) in coords.iter().enumerate() {
            out[self.image_index(idx)] = c.clone();
        }
        Ok(out)
    }
}

/// Invariance under the adjacent-transposition generators.
pub fn is_w_invariant(f: &LaurentPoly) -> bool {
    WeylElement::generators(f.signature())
        .iter()
        .all(|w| w.apply(f).as_ref() == Ok(f))
}

/// Invariance checked against every group element. Slow; kept as an oracle
/// for [`is_w_invariant`].
pub fn is_w_invariant_full_group(f: &LaurentPoly) -> bool {
    WeylElement::all(f.signature())
        .iter()
        .all(|w| w.apply(f).as_ref() == Ok(f))
}

/// Orbit average `(1/|W|) * sum_w w.f`, the projection onto W-invariants.
pub fn symmetrize(f: &LaurentPoly) -> LaurentPoly {
    let group = WeylElement::all(f.signature());
    let mut acc = f.zero_like();
    for w in &group {
        acc = &acc + &w.apply(f).expect("group element matches signature");
    }
    let order = i64::try_from(group.len()).expect("group order fits in i64");
    acc.scale(&Scalar::new(1, order).expect("nonzero group order"))
}
