//! Membership in the algebra of supersymmetric polynomials (additive
//! coordinates) and of Laurent supersymmetric polynomials (the supercharacter
//! ring), together with their standard generators and graded bases.
//!
//! Every test first requires W-invariance; only then are the per-root
//! conditions examined, in canonical `(i, j)` order, and the first failing
//! root is reported.
//!
//! Root conditions, for `alpha = eps_i - delta_j` and the form with
//! `(eps, eps) = 1`, `(delta, delta) = -1`:
//! - additive: `f` restricted to `x_i = s, y_j = -s` does not depend on `s`
//!   (the lines `lambda + t*alpha` through the hyperplane `(lambda, alpha) = 0`);
//! - Laurent: `D_alpha f` lies in the ideal `(e^alpha - 1)`;
//! - Laurent, equivalently for invariant `f`: `f` restricted to
//!   `x_i = y_j = t` does not depend on `t`.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::exactmath::{Matrix, Scalar};
use crate::poly::{LaurentPoly, Mode, Monomial, Signature, Var};
use crate::symmetry::is_w_invariant;

/// Outcome of a membership test, with a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    /// Root `(i, j)` of `eps_i - delta_j` at which the root condition failed.
    pub failing_root: Option<(usize, usize)>,
    /// The parameter-dependent (or nonzero) remainder at the failing root.
    pub residual: Option<LaurentPoly>,
    pub failed_invariance: bool,
}

impl Verdict {
    pub fn member() -> Self {
        Verdict {
            member: true,
            failing_root: None,
            residual: None,
            failed_invariance: false,
        }
    }

    fn not_invariant() -> Self {
        Verdict {
            member: false,
            failing_root: None,
            residual: None,
            failed_invariance: true,
        }
    }

    fn failed_at(root: (usize, usize), residual: LaurentPoly) -> Self {
        Verdict {
            member: false,
            failing_root: Some(root),
            residual: Some(residual),
            failed_invariance: false,
        }
    }
}

#[derive(Serialize)]
struct VerdictRecord {
    member: bool,
    failed_invariance: bool,
    failing_root: Option<[usize; 2]>,
    residual: Option<String>,
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        VerdictRecord {
            member: self.member,
            failed_invariance: self.failed_invariance,
            failing_root: self.failing_root.map(|(i, j)| [i, j]),
            residual: self.residual.as_ref().map(LaurentPoly::render),
        }
        .serialize(serializer)
    }
}

fn require_mode(f: &LaurentPoly, mode: Mode) -> Result<(), Error> {
    if f.mode() != mode {
        return Err(Error::WrongMode {
            expected: mode,
            found: f.mode(),
        });
    }
    Ok(())
}

/// Restricts `f` to `x_i = t, y_j = sign * t` for a fresh parameter `t` and
/// returns the `t`-dependent part.
fn cancellation_residual(f: &LaurentPoly, (i, j): (usize, usize), y_sign: i64) -> Result<LaurentPoly, Error> {
    let k = f.params() + 1;
    let t = f.with_params(k).var_like(Var::Param(k))?;
    let assignments = BTreeMap::from([(Var::X(i), t.clone()), (Var::Y(j), t.scale(&Scalar::from(y_sign)))]);
    f.substitute(&assignments)?.part_depending_on(Var::Param(k))
}

fn cancellation_verdict(f: &LaurentPoly, y_sign: i64) -> Result<Verdict, Error> {
    if !is_w_invariant(f) {
        return Ok(Verdict::not_invariant());
    }
    for root in f.signature().root_pairs() {
        let residual = cancellation_residual(f, root, y_sign)?;
        if !residual.is_zero() {
            return Ok(Verdict::failed_at(root, residual));
        }
    }
    Ok(Verdict::member())
}

/// Membership in the supersymmetric polynomial algebra: W-invariance plus
/// `f(lambda) = f(lambda + t*alpha)` for every isotropic `alpha` and every
/// `lambda` orthogonal to it, realized as `x_i := s, y_j := -s`.
pub fn is_supersymmetric_additive(f: &LaurentPoly) -> Result<Verdict, Error> {
    require_mode(f, Mode::Polynomial)?;
    cancellation_verdict(f, -1)
}

/// Membership in the Laurent supersymmetric algebra through the derivation
/// condition `D_alpha f in (e^alpha - 1)`.
pub fn is_supersymmetric_laurent(f: &LaurentPoly) -> Result<Verdict, Error> {
    require_mode(f, Mode::Laurent)?;
    if !is_w_invariant(f) {
        return Ok(Verdict::not_invariant());
    }
    for (i, j) in f.signature().root_pairs() {
        let d = f.d_alpha(i, j)?;
        if let (false, Some(residual)) = d.divisible_by_root_binomial(i, j)? {
            return Ok(Verdict::failed_at((i, j), residual));
        }
    }
    Ok(Verdict::member())
}

/// Membership in the Laurent supersymmetric algebra through the cancellation
/// condition: `f` restricted to `x_i = y_j = t` is independent of `t`.
pub fn laurent_cancellation_test(f: &LaurentPoly) -> Result<Verdict, Error> {
    require_mode(f, Mode::Laurent)?;
    cancellation_verdict(f, 1)
}

/// The `(t, t)` cancellation condition in either mode. On polynomial-mode
/// input this is the classical supersymmetry condition, the image of the
/// additive one under [`convert_convention`].
pub fn classical_cancellation_test(f: &LaurentPoly) -> Result<Verdict, Error> {
    cancellation_verdict(f, 1)
}

/// Power sum `p_r`.
///
/// Polynomial mode (`r >= 1`): `sum x_i^r + (-1)^(r+1) sum y_j^r`.
/// Laurent mode (`r != 0`): `sum x_i^r - sum y_j^r`.
pub fn power_sum(r: i64, sig: Signature, mode: Mode) -> Result<LaurentPoly, Error> {
    if r == 0 || (mode == Mode::Polynomial && r < 0) {
        return Err(Error::InvalidPowerSum(r));
    }
    let y_coeff = match mode {
        Mode::Polynomial if r % 2 == 0 => -1,
        Mode::Polynomial => 1,
        Mode::Laurent => -1,
    };
    let dim = sig.dim();
    let terms = (0..dim).map(|idx| {
        let mut e = vec![0; dim];
        e[idx] = r;
        let c = if idx < sig.m { 1 } else { y_coeff };
        (e, Scalar::from(c))
    });
    LaurentPoly::from_terms(sig, mode, terms)
}

/// The Berezinian `x1 * .. * xm * y1^-1 * .. * yn^-1`.
pub fn berezinian(sig: Signature) -> LaurentPoly {
    let e = (0..sig.dim()).map(|idx| if idx < sig.m { 1 } else { -1 }).collect();
    LaurentPoly::monomial(sig, Mode::Laurent, e, Scalar::one()).expect("Laurent mode accepts any exponents")
}

/// Negates every `y_j`. An involution relating the additive cancellation
/// locus `(s, -s)` to the classical locus `(t, t)`.
pub fn convert_convention(f: &LaurentPoly) -> LaurentPoly {
    let assignments = (1..=f.signature().n)
        .map(|j| {
            let y = f.var_like(Var::Y(j)).expect("index in range");
            (Var::Y(j), -&y)
        })
        .collect();
    f.substitute(&assignments).expect("negated variables are units")
}

/// Weak compositions of `total` into `parts` nonnegative parts, in lexicographic order.
pub(crate) fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    fn go(rest: i64, parts: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if parts == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in 0..=rest {
            prefix.push(k);
            go(rest - k, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if total >= 0 {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Orbit sums of the degree-`d` monomials under `S_m x S_n`, ordered by
/// the sorted exponent pattern of each orbit.
pub fn orbit_sums(sig: Signature, d: usize) -> Vec<LaurentPoly> {
    // sorted x-exponents and sorted y-exponents identify an orbit
    type Pattern = (Vec<i64>, Vec<i64>);
    let d = i64::try_from(d).expect("degree fits in i64");
    let mut orbits: BTreeMap<Pattern, Vec<Vec<i64>>> = BTreeMap::new();
    for e in compositions(d, sig.dim()) {
        let mut xs = e[..sig.m].to_vec();
        let mut ys = e[sig.m..].to_vec();
        xs.sort_unstable_by(|a, b| b.cmp(a));
        ys.sort_unstable_by(|a, b| b.cmp(a));
        orbits.entry((xs, ys)).or_default().push(e);
    }
    orbits
        .into_values()
        .map(|members| {
            LaurentPoly::from_terms(sig, Mode::Polynomial, members.into_iter().map(|e| (e, Scalar::one())))
                .expect("nonnegative exponents")
        })
        .collect()
}

/// Basis of the supersymmetric polynomials homogeneous of degree exactly `d`.
///
/// Candidates are the orbit sums of degree-`d` monomials; the cancellation
/// condition at every isotropic root is linear in their coefficients, and
/// the basis is read off the kernel of that system.
pub fn graded_basis(sig: Signature, d: usize) -> Vec<LaurentPoly> {
    let candidates = orbit_sums(sig, d);
    if candidates.is_empty() {
        return Vec::new();
    }
    let ncols = candidates.len();
    let mut rows: BTreeMap<((usize, usize), Monomial), Vec<Scalar>> = BTreeMap::new();
    for root in sig.root_pairs() {
        for (col, g) in candidates.iter().enumerate() {
            let residual = cancellation_residual(g, root, -1).expect("valid root");
            for (mono, c) in residual.terms() {
                rows.entry((root, mono.clone()))
                    .or_insert_with(|| vec![Scalar::zero(); ncols])[col] = c.clone();
            }
        }
    }
    let system = Matrix::from_rows(rows.into_values().collect(), ncols).expect("uniform rows");
    system
        .kernel_basis()
        .into_iter()
        .map(|v| combine(&candidates, &v))
        .collect()
}

/// `sum_k coeffs[k] * polys[k]`.
pub(crate) fn combine(polys: &[LaurentPoly], coeffs: &[Scalar]) -> LaurentPoly {
    let mut acc = polys[0].zero_like();
    for (p, c) in polys.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = &acc + &p.scale(c);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    const S11: Signature = Signature { m: 1, n: 1 };

    fn poly(sig: Signature, mode: Mode, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(sig, mode, terms.iter().map(|(e, c)| (e.to_vec(), Scalar::from(*c)))).unwrap()
    }

    fn param_poly(f_sig: Signature, mode: Mode, terms: &[(&[i64], i64)]) -> LaurentPoly {
        let base = LaurentPoly::zero(f_sig, mode).with_params(1);
        let mut acc = base.zero_like();
        for (e, c) in terms {
            let mut mono = base.constant_like(Scalar::from(*c));
            for (idx, &k) in e.iter().enumerate() {
                if k != 0 {
                    let v = base.var_like(base.var_at(idx)).unwrap();
                    mono = &mono * &v.pow_i(k).unwrap();
                }
            }
            acc = &acc + &mono;
        }
        acc
    }

    #[test]
    fn additive_examples() {
        let p = Mode::Polynomial;
        assert!(
            is_supersymmetric_additive(&poly(S11, p, &[(&[1, 0], 1), (&[0, 1], 1)]))
                .unwrap()
                .member
        );
        let v = is_supersymmetric_additive(&poly(S11, p, &[(&[1, 0], 1)])).unwrap();
        assert!(!v.member);
        assert_eq!(v.failing_root, Some((1, 1)));
        // residual s, the parameter variable
        assert_eq!(v.residual.unwrap(), param_poly(S11, p, &[(&[0, 0, 1], 1)]));
        assert!(
            is_supersymmetric_additive(&poly(S11, p, &[(&[2, 0], 1), (&[0, 2], -1)]))
                .unwrap()
                .member
        );
        assert!(is_supersymmetric_additive(&poly(S11, Mode::Laurent, &[])).is_err());
    }

    #[test]
    fn laurent_examples() {
        let l = Mode::Laurent;
        assert!(
            is_supersymmetric_laurent(&poly(S11, l, &[(&[1, 0], 1), (&[0, 1], -1)]))
                .unwrap()
                .member
        );
        assert!(
            is_supersymmetric_laurent(&poly(S11, l, &[(&[1, -1], 1)]))
                .unwrap()
                .member
        );
        let v = is_supersymmetric_laurent(&poly(S11, l, &[(&[1, 0], 1), (&[0, 1], 1)])).unwrap();
        assert!(!v.member);
        assert_eq!(v.residual.unwrap(), poly(S11, l, &[(&[0, 1], 2)]));
        assert!(is_supersymmetric_laurent(&poly(S11, Mode::Polynomial, &[])).is_err());
    }

    #[test]
    fn cancellation_examples() {
        let l = Mode::Laurent;
        assert!(
            laurent_cancellation_test(&poly(S11, l, &[(&[1, 0], 1), (&[0, 1], -1)]))
                .unwrap()
                .member
        );
        assert!(
            laurent_cancellation_test(&poly(S11, l, &[(&[1, -1], 1)]))
                .unwrap()
                .member
        );
        let v = laurent_cancellation_test(&poly(S11, l, &[(&[1, 1], 1)])).unwrap();
        assert!(!v.member);
        assert_eq!(v.residual.unwrap(), param_poly(S11, l, &[(&[0, 0, 2], 1)]));
        assert!(laurent_cancellation_test(&poly(S11, Mode::Polynomial, &[])).is_err());
    }

    #[test]
    fn invariance_is_checked_first() {
        let s21 = Signature::new(2, 1);
        let f = poly(s21, Mode::Laurent, &[(&[1, 0, 0], 1)]);
        for v in [
            is_supersymmetric_laurent(&f).unwrap(),
            laurent_cancellation_test(&f).unwrap(),
        ] {
            assert!(!v.member && v.failed_invariance);
            assert!(v.failing_root.is_none() && v.residual.is_none());
        }
    }

    #[test]
    fn degenerate_signatures_reduce_to_invariance() {
        let s30 = Signature::new(3, 0);
        let e1 = poly(
            s30,
            Mode::Polynomial,
            &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)],
        );
        assert!(is_supersymmetric_additive(&e1).unwrap().member);
        let s02 = Signature::new(0, 2);
        let f = poly(s02, Mode::Laurent, &[(&[1, 1], 1), (&[0, -3], 2), (&[-3, 0], 2)]);
        assert!(is_supersymmetric_laurent(&f).unwrap().member);
        assert!(laurent_cancellation_test(&f).unwrap().member);
    }

    #[test]
    fn power_sum_examples() {
        let p = Mode::Polynomial;
        assert_eq!(
            power_sum(1, S11, p).unwrap(),
            poly(S11, p, &[(&[1, 0], 1), (&[0, 1], 1)])
        );
        assert_eq!(
            power_sum(2, S11, p).unwrap(),
            poly(S11, p, &[(&[2, 0], 1), (&[0, 2], -1)])
        );
        let l = Mode::Laurent;
        assert_eq!(
            power_sum(-1, S11, l).unwrap(),
            poly(S11, l, &[(&[-1, 0], 1), (&[0, -1], -1)])
        );
        assert!(matches!(power_sum(0, S11, l), Err(Error::InvalidPowerSum(0))));
        assert!(power_sum(-2, S11, p).is_err());
    }

    #[test]
    fn berezinian_examples() {
        let l = Mode::Laurent;
        assert_eq!(berezinian(S11), poly(S11, l, &[(&[1, -1], 1)]));
        assert_eq!(berezinian(Signature::new(2, 1)).to_string(), "x1*x2*y1^-1");
        let inv = berezinian(S11).inverse_unit().unwrap();
        assert_eq!(inv, poly(S11, l, &[(&[-1, 1], 1)]));
        assert!(is_supersymmetric_laurent(&inv).unwrap().member);
    }

    #[test]
    fn convert_examples() {
        let p = Mode::Polynomial;
        let p1 = power_sum(1, S11, p).unwrap();
        assert_eq!(convert_convention(&p1), poly(S11, p, &[(&[1, 0], 1), (&[0, 1], -1)]));
        let p2 = power_sum(2, S11, p).unwrap();
        assert_eq!(convert_convention(&p2), p2);
        let f = poly(
            Signature::new(2, 2),
            p,
            &[(&[1, 2, 3, 1], 5), (&[0, 0, 1, 0], -1), (&[0, 0, 0, 0], 7)],
        );
        assert_eq!(convert_convention(&convert_convention(&f)), f);
    }

    #[test]
    fn graded_basis_examples() {
        assert_eq!(graded_basis(S11, 1).len(), 1);
        assert_eq!(graded_basis(S11, 2).len(), 2);
        // (m|0): partitions of d into at most m parts; p(6, <=2 parts) = 4.
        assert_eq!(graded_basis(Signature::new(2, 0), 6).len(), 4);
        assert_eq!(graded_basis(Signature::new(0, 0), 0).len(), 1);
        assert!(graded_basis(Signature::new(0, 0), 2).is_empty());
        for d in 0..4 {
            for f in graded_basis(Signature::new(2, 1), d) {
                assert!(f.is_homogeneous());
                assert!(is_supersymmetric_additive(&f).unwrap().member, "{f}");
            }
        }
    }

    #[test]
    fn graded_basis_degree_one_is_p1() {
        let b = graded_basis(S11, 1);
        assert_eq!(b, vec![power_sum(1, S11, Mode::Polynomial).unwrap()]);
    }

    #[test]
    fn verdict_json() {
        let v = is_supersymmetric_laurent(&poly(S11, Mode::Laurent, &[(&[1, 0], 1), (&[0, 1], 1)])).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"member":false,"failed_invariance":false,"failing_root":[1,1],"residual":"2*y1"}"#
        );
        assert_eq!(
            serde_json::to_string(&Verdict::member()).unwrap(),
            r#"{"member":true,"failed_invariance":false,"failing_root":null,"residual":null}"#
        );
    }

    #[test]
    fn compositions_count() {
        // C(d + k - 1, k - 1)
        assert_eq!(compositions(6, 4).len(), 84);
        assert_eq!(compositions(0, 0).len(), 1);
        assert!(compositions(3, 0).is_empty());
    }
}
