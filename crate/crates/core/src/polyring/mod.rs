//! Exact sparse multivariate polynomials over ℚ on a weighted variable set.
//!
//! Every polynomial carries a shared [`WeightedRing`]. Terms are stored in
//! descending order for the ring's weighted degree reverse lexicographic
//! order, so iteration, printing and serialization are reproducible.

mod monomial;
mod parse;
mod serial;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use monomial::{ExponentVector, MAX_VARS};
pub(crate) use monomial::revlex as monomial_revlex;
pub use serial::{PolynomialJson, RingDescriptor, TermJson};

use crate::error::{Error, Result};

/// Exact rational coefficient, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        offset: 0,
        message: format!("not a rational number: `{s}`"),
    };
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Ordered variable names with strictly positive integer weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedRing {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl WeightedRing {
    pub fn new<S: Into<String>>(names: Vec<S>, weights: Vec<u32>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != weights.len() {
            return Err(Error::InvalidRing(format!(
                "{} names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "at most {MAX_VARS} variables are supported"
            )));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidRing(format!(
                "weight of `{}` must be positive",
                names[i]
            )));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!("`{n}` is not a valid identifier")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(Self { names, weights }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn weight(&self, var: usize) -> u32 {
        self.weights[var]
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn degree(&self, m: &ExponentVector) -> u32 {
        m.weighted_degree(&self.weights)
    }

    /// Weighted degree first, ties broken reverse lexicographically.
    pub fn cmp_monomials(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        self.degree(a)
            .cmp(&self.degree(b))
            .then_with(|| monomial::revlex(a, b, self.nvars()))
    }

    /// All monomials of the given weighted degree, in descending ring order.
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        let mut cur = ExponentVector::one();
        enumerate(&self.weights, 0, degree, &mut cur, &mut out);
        out.sort_by(|a, b| self.cmp_monomials(b, a));
        out
    }
}

fn enumerate(
    weights: &[u32],
    var: usize,
    remaining: u32,
    cur: &mut ExponentVector,
    out: &mut Vec<ExponentVector>,
) {
    if var == weights.len() {
        if remaining == 0 {
            out.push(*cur);
        }
        return;
    }
    let w = weights[var];
    let mut e = 0u32;
    while e * w <= remaining {
        cur.set(var, e as u16);
        enumerate(weights, var + 1, remaining - e * w, cur, out);
        e += 1;
    }
    cur.set(var, 0);
}

pub(crate) fn same_ring(a: &Arc<WeightedRing>, b: &Arc<WeightedRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Result of [`Polynomial::weighted_degree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightedDegree {
    /// The zero polynomial.
    Bottom,
    Homogeneous(u32),
    Inhomogeneous,
}

impl WeightedDegree {
    pub fn value(self) -> Option<u32> {
        match self {
            WeightedDegree::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<WeightedRing>,
    terms: Vec<(ExponentVector, Rational)>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<WeightedRing>) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<WeightedRing>, c: Rational) -> Self {
        Self::monomial(ring, ExponentVector::one(), c)
    }

    pub fn one(ring: &Arc<WeightedRing>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn monomial(ring: &Arc<WeightedRing>, m: ExponentVector, c: Rational) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<WeightedRing>, var: usize) -> Self {
        Self::monomial(ring, ExponentVector::var(var, 1), Rational::one())
    }

    pub fn var_named(ring: &Arc<WeightedRing>, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.var_index(name)?))
    }

    /// Builds a polynomial from arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(
        ring: &Arc<WeightedRing>,
        terms: impl IntoIterator<Item = (ExponentVector, Rational)>,
    ) -> Self {
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Caller guarantees the terms are nonzero, distinct and sorted descending.
    pub(crate) fn from_sorted_terms(
        ring: &Arc<WeightedRing>,
        terms: Vec<(ExponentVector, Rational)>,
    ) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<WeightedRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(ExponentVector, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(ExponentVector, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, m: &ExponentVector) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<&(ExponentVector, Rational)> {
        self.terms.first()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let ring = &self.ring;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (*m, if negate { -c } else { c.clone() })));
        Ok(Self {
            ring: ring.clone(),
            terms: out,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return Ok(self.mul_term(m, c));
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Ok(other.mul_term(m, c));
        }
        let mut acc: HashMap<ExponentVector, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|v| *v += &c)
                    .or_insert(c);
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| self.ring.cmp_monomials(&b.0, &a.0));
        Ok(Self {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Multiplication by a single term; the order is preserved so no sort is needed.
    pub fn mul_term(&self, m: &ExponentVector, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.mul_term(&ExponentVector::one(), c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.get(var);
            (e > 0).then(|| {
                let mut m = *m;
                m.set(var, e - 1);
                (m, c * int(e as i64))
            })
        });
        Self::from_terms(&self.ring, terms)
    }

    pub fn partial_derivative_named(&self, name: &str) -> Result<Self> {
        Ok(self.partial_derivative(self.ring.var_index(name)?))
    }

    /// Antiderivative in `var` with no constant term.
    pub fn integrate_from_zero(&self, var: usize) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.get(var) + 1;
            let mut m = *m;
            m.set(var, e);
            (m, c / int(e as i64))
        });
        Self::from_terms(&self.ring, terms)
    }

    pub fn integrate_from_zero_named(&self, name: &str) -> Result<Self> {
        Ok(self.integrate_from_zero(self.ring.var_index(name)?))
    }

    pub fn weighted_degree(&self) -> WeightedDegree {
        let mut degs = self.terms.iter().map(|(m, _)| self.ring.degree(m));
        match degs.next() {
            None => WeightedDegree::Bottom,
            Some(d) => {
                if degs.all(|e| e == d) {
                    WeightedDegree::Homogeneous(d)
                } else {
                    WeightedDegree::Inhomogeneous
                }
            }
        }
    }

    pub fn is_quasihomogeneous(&self) -> bool {
        self.weighted_degree() != WeightedDegree::Inhomogeneous
    }

    /// Weighted-homogeneous component of the given degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ring.degree(m) == degree)
                .cloned()
                .collect(),
        }
    }

    /// Substitutes `images[i]` for the i-th variable. All images share one ring.
    pub fn substitute(&self, target: &Arc<WeightedRing>, images: &[Polynomial]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Shape(format!(
                "substitution needs {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        if images.iter().any(|p| !same_ring(p.ring(), target)) {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target), p.clone()])
            .collect();
        let mut result = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (v, pw) in powers.iter_mut().enumerate() {
                let e = m.get(v) as usize;
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &pw[1];
                    pw.push(next);
                }
                if e > 0 {
                    t = &t * &pw[e];
                }
            }
            result = &result + &t;
        }
        Ok(result)
    }

    /// Re-expresses the polynomial in another ring by variable name.
    pub fn map_to_ring(&self, target: &Arc<WeightedRing>) -> Result<Self> {
        let idx: Vec<usize> = self
            .ring
            .names()
            .iter()
            .map(|n| target.var_index(n))
            .collect::<Result<_>>()?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut t = ExponentVector::one();
            for (v, &j) in idx.iter().enumerate() {
                t.set(j, m.get(v));
            }
            (t, c.clone())
        });
        Ok(Self::from_terms(target, terms))
    }

    /// Like [`Self::map_to_ring`] but variables missing from `target` must not occur.
    pub fn restrict_to_ring(&self, target: &Arc<WeightedRing>) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut t = ExponentVector::one();
            for v in 0..self.ring.nvars() {
                let e = m.get(v);
                if e > 0 {
                    t.set(target.var_index(self.ring.name(v))?, e);
                }
            }
            terms.push((t, c.clone()));
        }
        Ok(Self::from_terms(target, terms))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in point.iter().enumerate() {
                let e = m.get(v);
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.get(var) > 0)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn parse(ring: &Arc<WeightedRing>, text: &str) -> Result<Self> {
        parse::parse_polynomial(ring, text)
    }

    pub fn to_json(&self) -> PolynomialJson {
        serial::to_json(self)
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Self> {
        serial::from_json(json)
    }
}

pub(crate) fn format_monomial(ring: &WeightedRing, m: &ExponentVector) -> String {
    let mut parts = Vec::new();
    for v in 0..ring.nvars() {
        match m.get(v) {
            0 => {}
            1 => parts.push(ring.name(v).to_string()),
            e => parts.push(format!("{}^{}", ring.name(v), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", format_rational(&a))?;
                }
                write!(f, "{}", format_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$checked(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_xq() -> Arc<WeightedRing> {
        WeightedRing::new(vec!["x", "q1", "q2"], vec![1, 2, 3]).unwrap()
    }

    fn p(r: &Arc<WeightedRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn ring_ops_examples() {
        let r = WeightedRing::new(vec!["x", "y"], vec![1, 1]).unwrap();
        assert_eq!(&p(&r, "x + y") + &p(&r, "x - y"), p(&r, "2*x"));
        assert!((&p(&r, "x + y") * &Polynomial::zero(&r)).is_zero());
        assert_eq!(&p(&r, "x + 1") * &p(&r, "x - 1"), p(&r, "x^2 - 1"));
        assert_eq!(p(&r, "x").scale(&rat(-3, 2)), p(&r, "-3/2*x"));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = WeightedRing::new(vec!["x"], vec![1]).unwrap();
        let b = WeightedRing::new(vec!["y"], vec![1]).unwrap();
        let err = Polynomial::var(&a, 0).checked_add(&Polynomial::var(&b, 0));
        assert!(matches!(err, Err(Error::RingMismatch)));
    }

    #[test]
    fn derivative_examples() {
        let r = ring_xq();
        let g = p(&r, "x^3 + q1*x + q2");
        assert_eq!(g.partial_derivative_named("x").unwrap(), p(&r, "3*x^2 + q1"));
        assert!(p(&r, "q2").partial_derivative_named("x").unwrap().is_zero());
        assert_eq!(
            p(&r, "q1^2*x").partial_derivative_named("q1").unwrap(),
            p(&r, "2*q1*x")
        );
        assert!(matches!(
            g.partial_derivative_named("z"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn integration_examples() {
        let r = ring_xq();
        assert_eq!(
            p(&r, "x^2 + q1").integrate_from_zero_named("x").unwrap(),
            p(&r, "1/3*x^3 + q1*x")
        );
        assert!(Polynomial::zero(&r).integrate_from_zero(0).is_zero());
        let g = p(&r, "x^3 + q1*x + q2");
        assert_eq!(
            (&g * &g).integrate_from_zero(0),
            p(
                &r,
                "1/7*x^7 + 2/5*q1*x^5 + 1/2*q2*x^4 + 1/3*q1^2*x^3 + q1*q2*x^2 + q2^2*x"
            )
        );
    }

    #[test]
    fn weighted_degree_examples() {
        let r = ring_xq();
        assert_eq!(
            p(&r, "x^3 + q1*x + q2").weighted_degree(),
            WeightedDegree::Homogeneous(3)
        );
        assert_eq!(Polynomial::zero(&r).weighted_degree(), WeightedDegree::Bottom);
        assert_eq!(p(&r, "x + q1").weighted_degree(), WeightedDegree::Inhomogeneous);
    }

    #[test]
    fn display_is_canonical() {
        let r = WeightedRing::new(vec!["x", "q1", "p2"], vec![1, 2, 3]).unwrap();
        let f = p(&r, "- p2 + 3/7*x^2*q1");
        assert_eq!(f.to_string(), "3/7*x^2*q1 - p2");
        assert_eq!(p(&r, "0").to_string(), "0");
        assert_eq!(p(&r, "-x + 1").to_string(), "-x + 1");
    }

    #[test]
    fn invalid_rings_are_rejected() {
        assert!(WeightedRing::new(vec!["x", "x"], vec![1, 1]).is_err());
        assert!(WeightedRing::new(vec!["x"], vec![0]).is_err());
        assert!(WeightedRing::new(vec!["1x"], vec![1]).is_err());
    }

    #[test]
    fn substitution_and_evaluation() {
        let src = WeightedRing::new(vec!["t"], vec![1]).unwrap();
        let tgt = WeightedRing::new(vec!["q", "p"], vec![2, 3]).unwrap();
        let cusp = p(&tgt, "p^2 - q^3");
        let images = vec![p(&src, "t^2"), p(&src, "t^3")];
        assert!(cusp.substitute(&src, &images).unwrap().is_zero());
        assert_eq!(cusp.evaluate(&[int(1), int(2)]), int(3));
    }

    #[test]
    fn monomials_of_degree_are_complete() {
        let r = WeightedRing::new(vec!["q", "p"], vec![2, 3]).unwrap();
        let ms = r.monomials_of_degree(6);
        assert_eq!(ms.len(), 2);
        assert!(r.monomials_of_degree(1).is_empty());
        assert_eq!(r.monomials_of_degree(0), vec![ExponentVector::one()]);
    }
}
