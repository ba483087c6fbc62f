//! Sparse multivariate polynomials with exact coefficients.
//!
//! A [`Ring`] fixes the coefficient ring (ℤ or ℤ/m) together with a named,
//! weighted variable set. Polynomials only combine when their rings agree.
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded-lexicographic with variable 0 as the most significant variable.

mod basis;
mod parse;

pub use basis::{monomial_basis, GradedBasis};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("coefficient ring or variable set mismatch: {0}")]
    RingMismatch(String),
    #[error("variable index {index} out of range for {count} variables")]
    VariableOutOfRange { index: usize, count: usize },
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
}

/// Coefficient ring of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    Integer,
    /// ℤ/m with m ≥ 2.
    Modular(u64),
}

impl CoeffRing {
    pub fn modular(m: u64) -> Result<Self, PolyError> {
        if m < 2 {
            return Err(PolyError::BadModulus(m));
        }
        Ok(CoeffRing::Modular(m))
    }

    /// Canonical representative; `None` when the value is zero in the ring.
    fn normalize(&self, c: BigInt) -> Option<BigInt> {
        let c = match self {
            CoeffRing::Integer => c,
            CoeffRing::Modular(m) => c.mod_floor(&BigInt::from(*m)),
        };
        if c.is_zero() {
            None
        } else {
            Some(c)
        }
    }

    /// Whether coefficients of `self` can be pushed into `target`.
    fn maps_into(&self, target: &CoeffRing) -> bool {
        match (self, target) {
            (CoeffRing::Integer, _) => true,
            (CoeffRing::Modular(a), CoeffRing::Modular(b)) => a % b == 0,
            (CoeffRing::Modular(_), CoeffRing::Integer) => false,
        }
    }
}

/// Named variables with positive integer weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VarSet {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Self {
        let (names, weights) = vars.into_iter().map(|(n, w)| (n.into(), w)).unzip();
        VarSet { names, weights }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A polynomial ring: coefficients plus a shared variable set.
#[derive(Debug, Clone)]
pub struct Ring {
    coeffs: CoeffRing,
    vars: Arc<VarSet>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
            && (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(coeffs: CoeffRing, vars: VarSet) -> Self {
        Ring {
            coeffs,
            vars: Arc::new(vars),
        }
    }

    /// Convenience constructor from `(name, weight)` pairs.
    pub fn with_vars<S: Into<String>>(
        coeffs: CoeffRing,
        vars: impl IntoIterator<Item = (S, u32)>,
    ) -> Self {
        Ring::new(coeffs, VarSet::new(vars))
    }

    /// Same variables, different coefficients.
    pub fn with_coeffs(&self, coeffs: CoeffRing) -> Self {
        Ring {
            coeffs,
            vars: Arc::clone(&self.vars),
        }
    }

    pub fn coeffs(&self) -> CoeffRing {
        self.coeffs
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(BigInt::one())
    }

    pub fn constant(&self, c: impl Into<BigInt>) -> Polynomial {
        self.term(c, self.unit_monomial())
    }

    /// The variable with index `i`, as a polynomial.
    pub fn var(&self, i: usize) -> Result<Polynomial, PolyError> {
        if i >= self.nvars() {
            return Err(PolyError::VariableOutOfRange {
                index: i,
                count: self.nvars(),
            });
        }
        let mut exps = vec![0; self.nvars()];
        exps[i] = 1;
        Ok(self.term(BigInt::one(), self.monomial(exps)))
    }

    /// The variable called `name`.
    pub fn var_named(&self, name: &str) -> Result<Polynomial, PolyError> {
        let i = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        self.var(i)
    }

    pub fn unit_monomial(&self) -> Monomial {
        Monomial {
            exps: vec![0; self.nvars()],
            degree: 0,
        }
    }

    /// Build a monomial, computing its weighted degree from this ring's weights.
    ///
    /// Panics if the exponent vector has the wrong length.
    pub fn monomial(&self, exps: Vec<u32>) -> Monomial {
        assert_eq!(exps.len(), self.nvars(), "exponent vector length");
        let degree = exps
            .iter()
            .zip(self.vars.weights())
            .map(|(e, w)| e * w)
            .sum();
        Monomial { exps, degree }
    }

    pub fn term(&self, c: impl Into<BigInt>, m: Monomial) -> Polynomial {
        let mut p = self.zero();
        p.add_term(m, c.into());
        p
    }

    /// Parse the text syntax `8*s2 - 3*s1^2` against this ring's variable names.
    pub fn parse(&self, text: &str) -> Result<Polynomial, PolyError> {
        parse::parse(self, text)
    }
}

/// An exponent vector together with its weighted degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial, ring: &Ring) -> Monomial {
        ring.monomial(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
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

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest monomial in the canonical graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Highest weighted degree of any term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common weighted degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Degree-`d` part.
    pub fn component(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if let Some(c) = self.ring.coeffs.normalize(c) {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = std::mem::take(o.get_mut()) + c;
                match self.ring.coeffs.normalize(sum) {
                    Some(s) => *o.get_mut() = s,
                    None => {
                        o.remove();
                    }
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch(format!(
                "{:?}{:?} vs {:?}{:?}",
                self.ring.coeffs,
                self.ring.vars.names(),
                other.ring.coeffs,
                other.ring.vars.names()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_ring(other)?;
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Polynomial {
        let c = c.into();
        let mut out = self.ring.zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * &c);
        }
        out
    }

    /// Multiply by a monomial and a coefficient.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        let mut out = self.ring.zero();
        for (a, ca) in &self.terms {
            out.add_term(a.mul(m), ca * c);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
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

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial, PolyError> {
        if i >= self.ring.nvars() {
            return Err(PolyError::VariableOutOfRange {
                index: i,
                count: self.ring.nvars(),
            });
        }
        let w = self.ring.vars.weights()[i];
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[i] -= 1;
            out.add_term(
                Monomial {
                    exps,
                    degree: m.degree - w,
                },
                c * e,
            );
        }
        Ok(out)
    }

    /// Evaluate the algebra homomorphism sending variable `i` to `images[i]`.
    ///
    /// Variables that do not occur in `self` may be left as `None`.
    pub fn substitute(
        &self,
        target: &Ring,
        images: &[Option<Polynomial>],
    ) -> Result<Polynomial, PolyError> {
        if !self.ring.coeffs.maps_into(&target.coeffs) {
            return Err(PolyError::RingMismatch(format!(
                "cannot map {:?} coefficients into {:?}",
                self.ring.coeffs, target.coeffs
            )));
        }
        for img in images.iter().flatten() {
            if img.ring != *target {
                return Err(PolyError::RingMismatch(
                    "substitution image lives in a different ring".into(),
                ));
            }
        }
        let n = self.ring.nvars();
        // powers[i][e] = images[i]^e, built on demand
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); n];
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images
                    .get(i)
                    .and_then(Option::as_ref)
                    .ok_or_else(|| PolyError::MissingImage(self.ring.vars.names()[i].clone()))?;
                let pw = &mut powers[i];
                if pw.is_empty() {
                    pw.push(target.one());
                }
                while pw.len() <= e as usize {
                    let next = &pw[pw.len() - 1] * img;
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
                if t.is_zero() {
                    break;
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Convenience wrapper for [`Polynomial::substitute`] with every image given.
    pub fn substitute_all(
        &self,
        target: &Ring,
        images: &[Polynomial],
    ) -> Result<Polynomial, PolyError> {
        let imgs: Vec<Option<Polynomial>> = images.iter().cloned().map(Some).collect();
        self.substitute(target, &imgs)
    }

    /// Reduce an integral polynomial's coefficients modulo `m`.
    pub fn reduce_coefficients(&self, m: u64) -> Result<Polynomial, PolyError> {
        let target = self.ring.with_coeffs(CoeffRing::modular(m)?);
        if !self.ring.coeffs.maps_into(&target.coeffs) {
            return Err(PolyError::RingMismatch(format!(
                "cannot reduce {:?} coefficients modulo {m}",
                self.ring.coeffs
            )));
        }
        let mut out = target.zero();
        for (mono, c) in &self.terms {
            out.add_term(mono.clone(), c.clone());
        }
        Ok(out)
    }

    /// View the same terms in a ring with identical variables and coefficients.
    ///
    /// Used when two rings were built independently from the same description.
    pub fn rehome(&self, ring: &Ring) -> Result<Polynomial, PolyError> {
        if *ring != self.ring {
            return Err(PolyError::RingMismatch("rehome into a different ring".into()));
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Coefficients as `i64`, for small-number assertions in tests and reports.
    pub fn coeff_i64(&self, m: &Monomial) -> Option<i64> {
        self.terms.get(m).map_or(Some(0), |c| c.to_i64())
    }

    /// Content check: every coefficient divisible by `k`.
    pub fn divisible_by(&self, k: &BigInt) -> bool {
        self.terms.values().all(|c| (c % k).is_zero())
    }

    /// Exact division of every coefficient by `k` (integral rings only).
    pub fn exact_div(&self, k: &BigInt) -> Option<Polynomial> {
        if self.ring.coeffs != CoeffRing::Integer || !self.divisible_by(k) {
            return None;
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / k)).collect(),
        })
    }

    /// Sign of the coefficient of the largest monomial under plain lex order.
    pub fn lex_leading_sign(&self) -> Option<bool> {
        self.terms
            .iter()
            .max_by(|a, b| a.0.exps.cmp(&b.0.exps))
            .map(|(_, c)| c.is_positive())
    }
}

macro_rules! impl_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_op!(Add, add, try_add);
impl_op!(Sub, sub, try_sub);
impl_op!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::write_poly(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v4() -> Ring {
        Ring::with_vars(
            CoeffRing::Integer,
            [("v1", 1), ("v2", 1), ("v3", 1), ("v4", 1)],
        )
    }

    #[test]
    fn add_cancels() {
        let r = v4();
        let a = r.parse("v1 + v2").unwrap();
        let b = r.parse("v1 - v2").unwrap();
        assert_eq!(&a + &b, r.parse("2*v1").unwrap());
        assert_eq!(&a + &r.zero(), a);
    }

    #[test]
    fn modular_wraparound() {
        let r = v4().with_coeffs(CoeffRing::Modular(4));
        let a = r.parse("3*v1").unwrap();
        let b = r.parse("v1").unwrap();
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = v4().parse("v1").unwrap();
        let b = v4().with_coeffs(CoeffRing::Modular(2)).parse("v1").unwrap();
        assert!(matches!(a.try_add(&b), Err(PolyError::RingMismatch(_))));
        assert!(matches!(a.try_mul(&b), Err(PolyError::RingMismatch(_))));
    }

    #[test]
    fn squares() {
        let r = v4();
        let s = r.parse("v1 + v2").unwrap();
        assert_eq!(s.pow(2), r.parse("v1^2 + 2*v1*v2 + v2^2").unwrap());
        assert_eq!(&s * &r.one(), s);
        let r2 = r.with_coeffs(CoeffRing::Modular(2));
        let s2 = r2.parse("v1 + v2").unwrap();
        assert_eq!(&s2 * &s2, r2.parse("v1^2 + v2^2").unwrap());
    }

    #[test]
    fn derivatives() {
        let r = v4();
        let p = r.parse("v1^2*v2").unwrap();
        assert_eq!(p.partial_derivative(0).unwrap(), r.parse("2*v1*v2").unwrap());
        assert!(r.parse("v2^3").unwrap().partial_derivative(0).unwrap().is_zero());
        assert_eq!(
            r.parse("v1*v2*v3*v4").unwrap().partial_derivative(0).unwrap(),
            r.parse("v2*v3*v4").unwrap()
        );
        assert!(matches!(
            p.partial_derivative(4),
            Err(PolyError::VariableOutOfRange { index: 4, count: 4 })
        ));
    }

    #[test]
    fn substitution_swap_and_errors() {
        let r = v4();
        let p = r.parse("v1^2*v2").unwrap();
        let imgs = vec![
            Some(r.var(1).unwrap()),
            Some(r.var(0).unwrap()),
            None,
            None,
        ];
        assert_eq!(p.substitute(&r, &imgs).unwrap(), r.parse("v1*v2^2").unwrap());
        let missing = vec![Some(r.var(1).unwrap())];
        assert!(matches!(
            p.substitute(&r, &missing),
            Err(PolyError::MissingImage(name)) if name == "v2"
        ));
        let other = r.with_coeffs(CoeffRing::Modular(3));
        let bad = vec![Some(other.var(0).unwrap()), Some(r.var(0).unwrap())];
        assert!(matches!(p.substitute(&r, &bad), Err(PolyError::RingMismatch(_))));
    }

    #[test]
    fn sigma2_under_index_substitution() {
        // σ₂ in four variables, v_i ↦ iη, then reduce η-coefficients mod 4
        let r = v4();
        let s2 = r.parse("v1*v2 + v1*v3 + v1*v4 + v2*v3 + v2*v4 + v3*v4").unwrap();
        let eta = Ring::with_vars(CoeffRing::Integer, [("eta", 1)]);
        let e = eta.var(0).unwrap();
        let imgs: Vec<Polynomial> = (1..=4).map(|i| e.scale(i)).collect();
        let img = s2.substitute_all(&eta, &imgs).unwrap();
        assert_eq!(img, eta.parse("35*eta^2").unwrap());
        assert_eq!(
            img.reduce_coefficients(4).unwrap(),
            eta.with_coeffs(CoeffRing::Modular(4)).parse("3*eta^2").unwrap()
        );
    }

    #[test]
    fn substitute_zero_kills_homogeneous() {
        let s = Ring::with_vars(
            CoeffRing::Integer,
            [("s1", 1), ("s2", 2), ("s3", 3), ("s4", 4)],
        );
        let a2 = s.parse("8*s2 - 3*s1^2").unwrap();
        let zeros = vec![s.zero(); 4];
        assert!(a2.substitute_all(&s, &zeros).unwrap().is_zero());
    }

    #[test]
    fn coefficient_reduction() {
        let s = Ring::with_vars(
            CoeffRing::Integer,
            [("s1", 1), ("s2", 2), ("s3", 3), ("s4", 4)],
        );
        let s2 = s.with_coeffs(CoeffRing::Modular(2));
        let a4 = s.parse("12*s4 - 3*s1*s3 + s2^2").unwrap();
        assert_eq!(
            a4.reduce_coefficients(2).unwrap(),
            s2.parse("s1*s3 + s2^2").unwrap()
        );
        assert!(a4.scale(2).reduce_coefficients(2).unwrap().is_zero());
        assert!(matches!(a4.reduce_coefficients(1), Err(PolyError::BadModulus(1))));
    }

    #[test]
    fn degrees() {
        let s = Ring::with_vars(CoeffRing::Integer, [("s1", 1), ("s2", 2)]);
        assert_eq!(s.zero().degree(), None);
        assert_eq!(s.zero().homogeneous_degree(), None);
        assert_eq!(s.parse("s2 + s1^2").unwrap().homogeneous_degree(), Some(2));
        assert_eq!(s.parse("s2 + s1").unwrap().homogeneous_degree(), None);
        assert_eq!(s.parse("s2 + s1").unwrap().degree(), Some(2));
    }

    #[test]
    fn modular_coefficients_are_canonical() {
        let r = v4().with_coeffs(CoeffRing::Modular(5));
        let p = r.parse("-v1 + 7*v2").unwrap();
        let coeffs: Vec<i64> = p.terms().map(|(_, c)| c.to_i64().unwrap()).collect();
        assert!(coeffs.iter().all(|c| (0..5).contains(c)));
        assert_eq!(p, r.parse("4*v1 + 2*v2").unwrap());
    }
}
