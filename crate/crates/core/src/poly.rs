//! Sparse multivariate (Laurent) polynomials over [`Scalar`].
//!
//! Variables are `x1..xm` (the even block), `y1..yn` (the odd block) and,
//! optionally, internal parameter variables `t1..tk` appended after the
//! y-block. Parameters are introduced by substitutions such as the
//! cancellation tests and never appear in a user-facing [`Signature`].
//!
//! A monomial `x^a y^b` doubles as the character `e^beta` with weight
//! `beta = sum a_i eps_i + sum b_j delta_j`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactmath::Scalar;

/// The shape `(m|n)` of `gl(m|n)`: `m` even variables and `n` odd variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub m: usize,
    pub n: usize,
}

impl Signature {
    pub fn new(m: usize, n: usize) -> Self {
        Signature { m, n }
    }

    /// Number of coordinates, `m + n`.
    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Positions `(i, j)`, 1-based, of the positive isotropic roots `eps_i - delta_j`,
    /// in canonical order.
    pub fn root_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.m).flat_map(move |i| (1..=self.n).map(move |j| (i, j)))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.m, self.n)
    }
}

/// Whether negative exponents are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Ordinary polynomials: the symmetric algebra in additive coordinates.
    Polynomial,
    /// Laurent polynomials: the group algebra of the character lattice.
    Laurent,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Polynomial => f.write_str("polynomial"),
            Mode::Laurent => f.write_str("laurent"),
        }
    }
}

/// A variable, 1-based within its block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
    Param(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(j) => write!(f, "y{j}"),
            Var::Param(k) => write!(f, "t{k}"),
        }
    }
}

/// Exponent vector `[x1..xm, y1..yn, t1..tk]`.
///
/// Ordered graded-lexicographically: total degree first, then lexicographic
/// with the x-block before the y-block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial or Laurent polynomial.
///
/// No stored coefficient is zero, and in [`Mode::Polynomial`] no exponent is
/// negative. Terms are kept in graded-lex order, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    sig: Signature,
    params: usize,
    mode: Mode,
    terms: BTreeMap<Monomial, Scalar>,
}

impl LaurentPoly {
    pub fn zero(sig: Signature, mode: Mode) -> Self {
        LaurentPoly {
            sig,
            params: 0,
            mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(sig: Signature, mode: Mode, c: Scalar) -> Self {
        let mut p = LaurentPoly::zero(sig, mode);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(sig.dim()), c);
        }
        p
    }

    pub fn one(sig: Signature, mode: Mode) -> Self {
        LaurentPoly::constant(sig, mode, Scalar::one())
    }

    /// The single variable `x_i` or `y_j`.
    pub fn var(sig: Signature, mode: Mode, var: Var) -> Result<Self, Error> {
        LaurentPoly::zero(sig, mode).var_like(var)
    }

    pub fn x(sig: Signature, mode: Mode, i: usize) -> Result<Self, Error> {
        LaurentPoly::var(sig, mode, Var::X(i))
    }

    pub fn y(sig: Signature, mode: Mode, j: usize) -> Result<Self, Error> {
        LaurentPoly::var(sig, mode, Var::Y(j))
    }

    /// `coeff * x^exponents` with no parameter variables.
    pub fn monomial(sig: Signature, mode: Mode, exponents: Vec<i64>, coeff: Scalar) -> Result<Self, Error> {
        let mut p = LaurentPoly::zero(sig, mode);
        p.check_exponents(&exponents)?;
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exponents), coeff);
        }
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining repeats.
    pub fn from_terms<I>(sig: Signature, mode: Mode, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Vec<i64>, Scalar)>,
    {
        let mut p = LaurentPoly::zero(sig, mode);
        for (e, c) in terms {
            p.check_exponents(&e)?;
            p.add_term(Monomial(e), &c);
        }
        Ok(p)
    }

    /// A variable in the same ambient ring (signature, mode, parameters) as `self`.
    pub fn var_like(&self, var: Var) -> Result<Self, Error> {
        let idx = self.var_index(var)?;
        let mut e = vec![0; self.nvars()];
        e[idx] = 1;
        let mut p = self.zero_like();
        p.terms.insert(Monomial(e), Scalar::one());
        Ok(p)
    }

    pub fn zero_like(&self) -> Self {
        LaurentPoly {
            sig: self.sig,
            params: self.params,
            mode: self.mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_like(&self, c: Scalar) -> Self {
        let mut p = self.zero_like();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(self.nvars()), c);
        }
        p
    }

    /// Embeds into the ring with `params` parameter variables appended.
    ///
    /// Panics if `params` is smaller than the current count.
    pub fn with_params(&self, params: usize) -> Self {
        assert!(params >= self.params, "cannot drop parameter variables");
        let extra = params - self.params;
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| {
                let mut e = mono.0.clone();
                e.extend(std::iter::repeat_n(0, extra));
                (Monomial(e), c.clone())
            })
            .collect();
        LaurentPoly {
            sig: self.sig,
            params,
            mode: self.mode,
            terms,
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn params(&self) -> usize {
        self.params
    }

    pub fn nvars(&self) -> usize {
        self.sig.dim() + self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[i64]) -> Scalar {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Maximum total degree of any term, or `None` for zero.
    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// If `self` is `c * x^e` with `c != 0`, returns it.
    pub fn as_monomial(&self) -> Option<(&Monomial, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub(crate) fn var_index(&self, var: Var) -> Result<usize, Error> {
        let (m, n, k) = (self.sig.m, self.sig.n, self.params);
        match var {
            Var::X(i) if (1..=m).contains(&i) => Ok(i - 1),
            Var::Y(j) if (1..=n).contains(&j) => Ok(m + j - 1),
            Var::Param(p) if (1..=k).contains(&p) => Ok(m + n + p - 1),
            Var::X(i) => Err(Error::IndexOutOfRange {
                what: "x index",
                index: i,
                max: m,
            }),
            Var::Y(j) => Err(Error::IndexOutOfRange {
                what: "y index",
                index: j,
                max: n,
            }),
            Var::Param(p) => Err(Error::IndexOutOfRange {
                what: "parameter index",
                index: p,
                max: k,
            }),
        }
    }

    pub(crate) fn var_at(&self, idx: usize) -> Var {
        let (m, n) = (self.sig.m, self.sig.n);
        if idx < m {
            Var::X(idx + 1)
        } else if idx < m + n {
            Var::Y(idx - m + 1)
        } else {
            Var::Param(idx - m - n + 1)
        }
    }

    fn check_exponents(&self, e: &[i64]) -> Result<(), Error> {
        if e.len() != self.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.nvars(),
                found: e.len(),
            });
        }
        if self.mode == Mode::Polynomial {
            if let Some(idx) = e.iter().position(|&x| x < 0) {
                return Err(Error::NegativeExponent {
                    var: self.var_at(idx).to_string(),
                    exponent: e[idx],
                });
            }
        }
        Ok(())
    }

    fn add_term(&mut self, mono: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &LaurentPoly) -> Result<(), Error> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        if self.mode != other.mode {
            return Err(Error::ModeMismatch {
                left: self.mode,
                right: other.mode,
            });
        }
        if self.params != other.params {
            return Err(Error::ParamMismatch {
                left: self.params,
                right: other.params,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.check_compatible(other)?;
        let mut out = self.zero_like();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return self.zero_like();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Nonnegative integer power.
    pub fn pow(&self, exp: u32) -> LaurentPoly {
        let mut acc = self.constant_like(Scalar::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a unit: a single term with nonzero coefficient, in Laurent mode
    /// (or a nonzero constant in either mode).
    pub fn inverse_unit(&self) -> Option<LaurentPoly> {
        let (mono, c) = self.as_monomial()?;
        if self.mode == Mode::Polynomial && !mono.is_one() {
            return None;
        }
        let mut out = self.zero_like();
        out.terms.insert(mono.inverse(), c.recip()?);
        Some(out)
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow_i(&self, exp: i64) -> Option<LaurentPoly> {
        if exp >= 0 {
            Some(self.pow(u32::try_from(exp).ok()?))
        } else {
            Some(self.inverse_unit()?.pow(u32::try_from(-exp).ok()?))
        }
    }

    /// Applies `f` to every exponent vector. The caller guarantees the map is
    /// injective or that coefficient merging is intended.
    pub(crate) fn map_monomials<F>(&self, mut f: F) -> LaurentPoly
    where
        F: FnMut(&[i64]) -> Vec<i64>,
    {
        let mut out = self.zero_like();
        for (mono, c) in &self.terms {
            out.add_term(Monomial(f(&mono.0)), c);
        }
        out
    }

    /// Replaces variables by polynomials.
    ///
    /// All images must live in one ring with this polynomial's signature and
    /// mode and at least as many parameter variables; unassigned variables map
    /// to themselves there. A variable occurring with a negative exponent may
    /// only receive a single-term image with nonzero coefficient.
    pub fn substitute(&self, assignments: &BTreeMap<Var, LaurentPoly>) -> Result<LaurentPoly, Error> {
        let Some(first) = assignments.values().next() else {
            return Ok(self.clone());
        };
        let target = first.zero_like();
        for img in assignments.values() {
            target.check_compatible(img)?;
        }
        if target.sig != self.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig,
                right: target.sig,
            });
        }
        if target.mode != self.mode {
            return Err(Error::ModeMismatch {
                left: self.mode,
                right: target.mode,
            });
        }
        if target.params < self.params {
            return Err(Error::ParamMismatch {
                left: self.params,
                right: target.params,
            });
        }

        let mut images: Vec<Option<&LaurentPoly>> = vec![None; self.nvars()];
        for (&var, img) in assignments {
            let idx = self.var_index(var)?;
            images[idx] = Some(img);
        }

        let mut power_cache: HashMap<(usize, i64), LaurentPoly> = HashMap::new();
        let mut out = target.zero_like();
        for (mono, c) in &self.terms {
            // Unassigned variables pass through as a monomial factor.
            let mut passthrough = vec![0i64; target.nvars()];
            let mut acc = target.constant_like(c.clone());
            for (idx, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match images[idx] {
                    None => passthrough[idx] = e,
                    Some(img) => {
                        let factor = match power_cache.get(&(idx, e)) {
                            Some(p) => p,
                            None => {
                                let p = img.pow_i(e).ok_or_else(|| Error::NonInvertibleSubstitution {
                                    var: self.var_at(idx).to_string(),
                                })?;
                                power_cache.entry((idx, e)).or_insert(p)
                            }
                        };
                        acc = &acc * factor;
                    }
                }
            }
            let shift = Monomial(passthrough);
            for (m2, c2) in acc.terms {
                out.add_term(m2.mul(&shift), &c2);
            }
        }
        Ok(out)
    }

    /// The derivation `D_alpha` for `alpha = eps_i - delta_j`: scales `x^a y^b`
    /// by the pairing `(alpha, beta) = a_i + b_j`.
    pub fn d_alpha(&self, i: usize, j: usize) -> Result<LaurentPoly, Error> {
        let xi = self.var_index(Var::X(i))?;
        let yj = self.var_index(Var::Y(j))?;
        let mut out = self.zero_like();
        for (mono, c) in &self.terms {
            let w = mono.0[xi] + mono.0[yj];
            out.add_term(mono.clone(), &(c * Scalar::from(w)));
        }
        Ok(out)
    }

    /// Membership of `self` in the ideal generated by `e^alpha - 1`,
    /// `alpha = eps_i - delta_j`.
    ///
    /// In the Laurent ring `e^alpha - 1 = (x_i - y_j) * y_j^-1`, so this is the
    /// vanishing of `self` under `x_i := y_j`. Returns the nonzero residual
    /// when the test fails.
    pub fn divisible_by_root_binomial(&self, i: usize, j: usize) -> Result<(bool, Option<LaurentPoly>), Error> {
        self.var_index(Var::X(i))?;
        let yj = self.var_like(Var::Y(j))?;
        let residual = self.substitute(&BTreeMap::from([(Var::X(i), yj)]))?;
        if residual.is_zero() {
            Ok((true, None))
        } else {
            Ok((false, Some(residual)))
        }
    }

    /// Evaluates at a point with one coordinate per variable (parameters included).
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar, Error> {
        if point.len() != self.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        let mut total = Scalar::zero();
        for (mono, c) in &self.terms {
            let mut v = c.clone();
            for (idx, (&e, x)) in mono.0.iter().zip(point).enumerate() {
                if e != 0 {
                    let p = x.pow(e).ok_or_else(|| Error::EvaluationAtZero {
                        var: self.var_at(idx).to_string(),
                    })?;
                    v *= &p;
                }
            }
            total += &v;
        }
        Ok(total)
    }

    /// The terms in which `var` occurs with a nonzero exponent.
    pub fn part_depending_on(&self, var: Var) -> Result<LaurentPoly, Error> {
        let idx = self.var_index(var)?;
        let mut out = self.zero_like();
        for (mono, c) in &self.terms {
            if mono.0[idx] != 0 {
                out.terms.insert(mono.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Canonical text: terms in descending graded-lex order.
    pub fn render(&self) -> String {
        self.to_string()
    }

    fn fmt_factors(&self, mono: &Monomial) -> Vec<String> {
        mono.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(idx, &e)| {
                let v = self.var_at(idx);
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect()
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders like `x1^2 - y1^2` or `-1/2*x1*y1^-1 + 3`.
    ///
    /// Unary minus binds tighter than `^` in the expression grammar, so a
    /// leading negative term whose first factor carries an exponent is
    /// written with an explicit `1*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (mono, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            let factors = self.fmt_factors(mono);
            if factors.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            let needs_coeff = !mag.is_one() || (k == 0 && neg && factors[0].contains('^'));
            if needs_coeff {
                write!(f, "{mag}*")?;
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{} {}", self, self.sig, self.mode)?;
        if self.params > 0 {
            write!(f, " +{} params", self.params)?;
        }
        f.write_str("]")
    }
}

// Operator forms panic on mismatched rings; use the `try_*` methods to get an error instead.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("adding polynomials from different rings")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("subtracting polynomials from different rings")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("multiplying polynomials from different rings")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&Scalar::from(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const S11: Signature = Signature { m: 1, n: 1 };

    fn x(sig: Signature, mode: Mode, i: usize) -> LaurentPoly {
        LaurentPoly::x(sig, mode, i).unwrap()
    }

    fn y(sig: Signature, mode: Mode, j: usize) -> LaurentPoly {
        LaurentPoly::y(sig, mode, j).unwrap()
    }

    fn mono(sig: Signature, mode: Mode, e: &[i64], c: i64) -> LaurentPoly {
        LaurentPoly::monomial(sig, mode, e.to_vec(), Scalar::from(c)).unwrap()
    }

    #[test]
    fn ring_examples() {
        let p = Mode::Polynomial;
        let (x1, y1) = (x(S11, p, 1), y(S11, p, 1));
        assert_eq!(&(&x1 + &y1) + &(&x1 - &y1), x1.scale(&Scalar::from(2)));
        assert_eq!((&x1 - &y1).try_mul(&(&x1 + &y1)).unwrap().to_string(), "x1^2 - y1^2");
        let f = &x1 + &y1;
        assert!((&f + &f.scale(&Scalar::from(-1))).is_zero());
    }

    #[test]
    fn mismatches_are_errors() {
        let a = x(S11, Mode::Polynomial, 1);
        let b = x(Signature::new(2, 1), Mode::Polynomial, 1);
        assert!(matches!(a.try_add(&b), Err(Error::SignatureMismatch { .. })));
        let c = x(S11, Mode::Laurent, 1);
        assert!(matches!(a.try_mul(&c), Err(Error::ModeMismatch { .. })));
        assert!(LaurentPoly::x(S11, Mode::Polynomial, 2).is_err());
        assert!(LaurentPoly::monomial(S11, Mode::Polynomial, vec![-1, 0], Scalar::one()).is_err());
    }

    #[test]
    fn substitute_examples() {
        let p = Mode::Polynomial;
        // x1^2 with x1 := t
        let f = mono(S11, p, &[2, 0], 1);
        let t = f.zero_like().with_params(1).var_like(Var::Param(1)).unwrap();
        let g = f.substitute(&BTreeMap::from([(Var::X(1), t.clone())])).unwrap();
        assert_eq!(g, t.pow(2));

        // x1 + y1 with x1 := s, y1 := -s
        let f = &x(S11, p, 1) + &y(S11, p, 1);
        let s = t;
        let g = f
            .substitute(&BTreeMap::from([(Var::X(1), s.clone()), (Var::Y(1), -&s)]))
            .unwrap();
        assert!(g.is_zero());

        // x1*y1^-1 with x1, y1 := t
        let l = Mode::Laurent;
        let f = mono(S11, l, &[1, -1], 1);
        let t = f.with_params(1).var_like(Var::Param(1)).unwrap();
        let g = f
            .substitute(&BTreeMap::from([(Var::X(1), t.clone()), (Var::Y(1), t)]))
            .unwrap();
        assert_eq!(g, g.constant_like(Scalar::one()));
    }

    #[test]
    fn substitute_rejects_non_unit_into_negative_power() {
        let l = Mode::Laurent;
        let f = mono(S11, l, &[0, -1], 1);
        let img = &x(S11, l, 1) + &y(S11, l, 1);
        let err = f.substitute(&BTreeMap::from([(Var::Y(1), img)])).unwrap_err();
        assert!(matches!(err, Error::NonInvertibleSubstitution { .. }));
        // A scaled monomial is a unit and is accepted.
        let img = mono(S11, l, &[1, 0], 2);
        let g = f.substitute(&BTreeMap::from([(Var::Y(1), img)])).unwrap();
        assert_eq!(
            g,
            LaurentPoly::monomial(S11, l, vec![-1, 0], Scalar::new(1, 2).unwrap()).unwrap()
        );
    }

    #[test]
    fn d_alpha_examples() {
        let l = Mode::Laurent;
        assert_eq!(
            mono(S11, l, &[1, 1], 1).d_alpha(1, 1).unwrap(),
            mono(S11, l, &[1, 1], 2)
        );
        assert!(mono(S11, l, &[1, -1], 1).d_alpha(1, 1).unwrap().is_zero());
        let f = &x(S11, l, 1) - &y(S11, l, 1);
        assert_eq!(f.d_alpha(1, 1).unwrap(), f);
        assert!(f.d_alpha(2, 1).is_err());
        assert!(f.d_alpha(1, 0).is_err());
    }

    #[test]
    fn root_binomial_examples() {
        let l = Mode::Laurent;
        let f = &x(S11, l, 1) - &y(S11, l, 1);
        assert_eq!(f.divisible_by_root_binomial(1, 1).unwrap(), (true, None));
        let f = &x(S11, l, 1) + &y(S11, l, 1);
        let (ok, res) = f.divisible_by_root_binomial(1, 1).unwrap();
        assert!(!ok);
        assert_eq!(res.unwrap(), mono(S11, l, &[0, 1], 2));
        assert_eq!(f.zero_like().divisible_by_root_binomial(1, 1).unwrap(), (true, None));
        assert!(f.divisible_by_root_binomial(1, 2).is_err());
    }

    #[test]
    fn rendering() {
        let l = Mode::Laurent;
        let s21 = Signature::new(2, 1);
        assert_eq!(mono(s21, l, &[1, 1, -1], 1).to_string(), "x1*x2*y1^-1");
        assert_eq!(mono(S11, l, &[2, 0], -1).to_string(), "-1*x1^2");
        assert_eq!(mono(S11, l, &[1, 2], -1).to_string(), "-x1*y1^2");
        let f = LaurentPoly::from_terms(
            S11,
            l,
            [
                (vec![0, 0], Scalar::new(-3, 2).unwrap()),
                (vec![1, 0], Scalar::new(1, 2).unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "1/2*x1 - 3/2");
        assert_eq!(f.zero_like().to_string(), "0");
    }

    #[test]
    fn evaluation() {
        let l = Mode::Laurent;
        let f = mono(S11, l, &[1, -1], 3);
        let v = f.evaluate(&[Scalar::from(2), Scalar::from(4)]).unwrap();
        assert_eq!(v, Scalar::new(3, 2).unwrap());
        assert!(f.evaluate(&[Scalar::from(2), Scalar::zero()]).is_err());
        assert!(f.evaluate(&[Scalar::from(2)]).is_err());
    }

    fn sig_strategy() -> impl Strategy<Value = Signature> {
        (1usize..3, 1usize..3).prop_map(|(m, n)| Signature::new(m, n))
    }

    fn poly_in(sig: Signature, mode: Mode) -> impl Strategy<Value = LaurentPoly> {
        let lo = if mode == Mode::Laurent { -2 } else { 0 };
        let term = (prop::collection::vec(lo..3i64, sig.dim()), -4i64..5);
        prop::collection::vec(term, 0..5).prop_map(move |ts| {
            LaurentPoly::from_terms(sig, mode, ts.into_iter().map(|(e, c)| (e, Scalar::from(c)))).unwrap()
        })
    }

    fn poly_pair(mode: Mode) -> impl Strategy<Value = (LaurentPoly, LaurentPoly)> {
        sig_strategy().prop_flat_map(move |s| (poly_in(s, mode), poly_in(s, mode)))
    }

    proptest! {
        #[test]
        fn d_alpha_is_a_derivation((f, g) in poly_pair(Mode::Laurent)) {
            let fg = &f * &g;
            let lhs = fg.d_alpha(1, 1).unwrap();
            let rhs = &(&f * &g.d_alpha(1, 1).unwrap()) + &(&g * &f.d_alpha(1, 1).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn d_alpha_squared_on_monomials(e in prop::collection::vec(-3i64..4, 2), c in 1i64..5) {
            let f = mono(S11, Mode::Laurent, &e, c);
            let w = e[0] + e[1];
            let twice = f.d_alpha(1, 1).unwrap().d_alpha(1, 1).unwrap();
            prop_assert_eq!(twice, f.scale(&Scalar::from(w * w)));
        }

        #[test]
        fn divisibility_closed_under_ring_ops((f, g) in poly_pair(Mode::Laurent)) {
            // Multiplying by x1 - y1 forces divisibility.
            let sig = f.signature();
            let b = &x(sig, Mode::Laurent, 1) - &y(sig, Mode::Laurent, 1);
            let (fd, gd) = (&f * &b, &g * &b);
            prop_assert!(fd.divisible_by_root_binomial(1, 1).unwrap().0);
            prop_assert!(gd.divisible_by_root_binomial(1, 1).unwrap().0);
            prop_assert!((&fd + &gd).divisible_by_root_binomial(1, 1).unwrap().0);
            prop_assert!((&fd * &gd).divisible_by_root_binomial(1, 1).unwrap().0);
        }

        #[test]
        fn identity_substitution((f, _g) in poly_pair(Mode::Laurent)) {
            let sig = f.signature();
            let mut a = BTreeMap::new();
            for i in 1..=sig.m { a.insert(Var::X(i), f.var_like(Var::X(i)).unwrap()); }
            for j in 1..=sig.n { a.insert(Var::Y(j), f.var_like(Var::Y(j)).unwrap()); }
            prop_assert_eq!(f.substitute(&a).unwrap(), f.clone());
        }

        #[test]
        fn substitution_agrees_with_evaluation((f, g) in poly_pair(Mode::Polynomial), pt in prop::collection::vec(-3i64..4, 4)) {
            // f(x1 := g) evaluated at a point = f evaluated at (g(pt), rest of pt)
            let sig = f.signature();
            let pt: Vec<Scalar> = pt.into_iter().take(sig.dim()).map(Scalar::from).collect();
            prop_assume!(pt.len() == sig.dim());
            let sub = f.substitute(&BTreeMap::from([(Var::X(1), g.clone())])).unwrap();
            let mut moved = pt.clone();
            moved[0] = g.evaluate(&pt).unwrap();
            prop_assert_eq!(sub.evaluate(&pt).unwrap(), f.evaluate(&moved).unwrap());
        }
    }
}
