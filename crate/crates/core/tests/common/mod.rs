//! Test-only oracles, independent of the subspace and closure code.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use supersym::{Matrix, Point, Scalar, Signature};

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from(x)).collect()
}

pub fn steps() -> Vec<Scalar> {
    [(1, 1), (-1, 1), (1, 2), (-1, 2), (2, 1), (-2, 1)]
        .iter()
        .map(|&(p, q)| Scalar::new(p, q).unwrap())
        .collect()
}

/// Brute-force orbit sampling: from `p`, repeatedly translate by `t * (eps_i - delta_j)`
/// whenever `q_i + q_{m+j} = 0`, with `t` from a fixed step list, and (optionally) swap
/// adjacent coordinates inside a block. Returns every point reached within `depth` moves.
pub fn orbit_bfs(sig: Signature, p: &[Scalar], depth: usize, weyl: bool) -> Vec<Vec<Scalar>> {
    let m = sig.m;
    let steps = steps();
    let mut seen: HashSet<Vec<Scalar>> = HashSet::from([p.to_vec()]);
    let mut frontier = vec![p.to_vec()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for q in &frontier {
            let mut moves = Vec::new();
            for i in 0..m {
                for j in 0..sig.n {
                    if (&q[i] + &q[m + j]).is_zero() {
                        for t in &steps {
                            let mut r = q.clone();
                            r[i] = &r[i] + t;
                            r[m + j] = &r[m + j] - t;
                            moves.push(r);
                        }
                    }
                }
            }
            if weyl {
                for a in (0..m.saturating_sub(1)).chain((m..m + sig.n).skip(1).map(|k| k - 1)) {
                    let mut r = q.clone();
                    r.swap(a, a + 1);
                    moves.push(r);
                }
            }
            for r in moves {
                if seen.insert(r.clone()) {
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// Rank of the differences `q - q0`: the affine dimension of a point cloud.
pub fn affine_rank(points: &[Vec<Scalar>]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let rows = points
        .iter()
        .map(|q| q.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Matrix::from_rows(rows, first.len()).unwrap().rank()
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(rng.gen_range(-3..=3), rng.gen_range(1..=3)).unwrap()
}

/// A random point with coordinate heights at most 3; about half are forced
/// to be atypical for some root.
pub fn random_point(sig: Signature, rng: &mut ChaCha8Rng) -> Point {
    let mut coords: Vec<Scalar> = (0..sig.dim()).map(|_| small_rational(rng)).collect();
    if sig.m > 0 && sig.n > 0 && rng.gen_bool(0.5) {
        let i = rng.gen_range(0..sig.m);
        let j = rng.gen_range(0..sig.n);
        coords[sig.m + j] = -&coords[i];
    }
    Point::new(coords)
}

pub fn small_signatures() -> Vec<Signature> {
    let mut out = Vec::new();
    for m in 0..=2 {
        for n in 0..=2 {
            out.push(Signature::new(m, n));
        }
    }
    out
}
