//! Sparse polynomials in the flow variables `t1, t2, ...` with exact rational
//! coefficients, truncated at a weighted degree (the weight of `t_i` is `i`).
//!
//! Text rendering lists terms by descending weight, then descending
//! lexicographic exponent vector, e.g.
//! `(1/144)*t1^6 - (1/6)*t1^3*t3 + t3^2`. [`GradedPoly`]'s `FromStr` parses
//! that form back exactly.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q`, or just `p` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::PolyParse(format!("bad rational {s:?}"));
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

/// Exponent vector; entry `i` is the exponent of `t_{i+1}`. Trailing zeros
/// are trimmed so equal monomials have equal representations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `t_index`, for `index >= 1`.
    pub fn var(index: usize) -> Self {
        assert!(index >= 1, "flow variables are indexed from 1");
        let mut e = vec![0; index];
        e[index - 1] = 1;
        Monomial(e)
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// Exponent of `t_index`.
    pub fn exponent(&self, index: usize) -> u32 {
        index.checked_sub(1).and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum()
    }

    /// Total number of variable factors.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn has_even_variable(&self) -> bool {
        self.0.iter().skip(1).step_by(2).any(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut e = long.clone();
        for (a, b) in e.iter_mut().zip(short) {
            *a += b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    /// Printing order: heavier first, then larger exponent vectors first.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .weight()
            .cmp(&self.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "t{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

fn min_cutoff(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// A polynomial in `t1, t2, ...` truncated at weight `cutoff` (`None` for no
/// truncation). Zero coefficients and monomials heavier than the cutoff are
/// never stored.
///
/// Equality compares terms only; the cutoff is a truncation marker.
#[derive(Clone, Debug, Default)]
pub struct GradedPoly {
    terms: BTreeMap<Monomial, Rational>,
    cutoff: Option<u32>,
}

impl PartialEq for GradedPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for GradedPoly {}

impl GradedPoly {
    pub fn zero() -> Self {
        GradedPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([(Monomial::one(), c)], None)
    }

    /// `t_index` at the given cutoff.
    pub fn var(index: usize, cutoff: Option<u32>) -> Self {
        Self::from_terms([(Monomial::var(index), Rational::one())], cutoff)
    }

    pub fn from_terms<I>(terms: I, cutoff: Option<u32>) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = GradedPoly {
            terms: BTreeMap::new(),
            cutoff,
        };
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || self.cutoff.is_some_and(|w| m.weight() > w) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn cutoff(&self) -> Option<u32> {
        self.cutoff
    }

    /// Truncates to `min(cutoff, w)`.
    pub fn truncate(&self, w: u32) -> Self {
        let cutoff = min_cutoff(self.cutoff, Some(w));
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() <= w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            cutoff,
        }
    }

    /// Same terms, relabelled cutoff. Terms above the new cutoff are dropped.
    pub fn with_cutoff(&self, cutoff: Option<u32>) -> Self {
        match cutoff {
            Some(w) => {
                let mut p = self.truncate(w);
                p.cutoff = Some(w);
                p
            }
            None => GradedPoly {
                terms: self.terms.clone(),
                cutoff: None,
            },
        }
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

    /// Terms in printing order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return GradedPoly {
                terms: BTreeMap::new(),
                cutoff: self.cutoff,
            };
        }
        GradedPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
            cutoff: self.cutoff,
        }
    }

    /// The weight-`k` component.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            cutoff: self.cutoff,
        }
    }

    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == k)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::weight).max()
    }

    pub fn uses_even_variables(&self) -> bool {
        self.terms.keys().any(Monomial::has_even_variable)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = GradedPoly::one().with_cutoff(self.cutoff);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `sum_k a^k / k!`, truncated at the cutoff.
    pub fn exp_truncated(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if self.is_zero() {
            return Ok(GradedPoly::one().with_cutoff(self.cutoff));
        }
        if self.cutoff.is_none() {
            return Err(Error::UnboundedExp);
        }
        let mut sum = GradedPoly::one().with_cutoff(self.cutoff);
        let mut term = sum.clone();
        let mut k = 1i64;
        loop {
            term = (&term * self).scale(&rat(1, k));
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
            k += 1;
        }
        Ok(sum)
    }

    /// Sets every even-indexed variable to zero.
    pub fn restrict_to_odd(&self) -> Self {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.has_even_variable())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            cutoff: self.cutoff,
        }
    }

    /// Substitutes `t_i -> c * t_i` for every `i`.
    pub fn scale_vars(&self, c: &Rational) -> Self {
        GradedPoly::from_terms(
            self.terms.iter().map(|(m, x)| {
                let f = num_traits::pow(c.clone(), m.degree() as usize);
                (m.clone(), x * f)
            }),
            self.cutoff,
        )
    }

    /// Evaluates at `t_i = (1/i) sum_a x_a^i`.
    pub fn eval_power_sums(&self, x: &[Rational]) -> Rational {
        let nvars = self.terms.keys().map(|m| m.exponents().len()).max().unwrap_or(0);
        let t: Vec<Rational> = (1..=nvars)
            .map(|i| {
                let p: Rational = x.iter().map(|xa| num_traits::pow(xa.clone(), i)).sum();
                p / int(i as i64)
            })
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exponents()
                    .iter()
                    .zip(&t)
                    .fold(c.clone(), |acc, (&e, ti)| acc * num_traits::pow(ti.clone(), e as usize))
            })
            .sum()
    }
}

impl<'a> Add<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        let cutoff = min_cutoff(self.cutoff, rhs.cutoff);
        let mut out = self.with_cutoff(cutoff);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        let cutoff = min_cutoff(self.cutoff, rhs.cutoff);
        let mut out = self.with_cutoff(cutoff);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        let cutoff = min_cutoff(self.cutoff, rhs.cutoff);
        let mut out = GradedPoly {
            terms: BTreeMap::new(),
            cutoff,
        };
        let right: Vec<(u32, &Monomial, &Rational)> =
            rhs.terms.iter().map(|(m, c)| (m.weight(), m, c)).collect();
        for (ma, ca) in &self.terms {
            let wa = ma.weight();
            for &(wb, mb, cb) in &right {
                if cutoff.is_some_and(|w| wa + wb > w) {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        GradedPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
            cutoff: self.cutoff,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<GradedPoly> for GradedPoly {
            type Output = GradedPoly;
            fn $method(self, rhs: GradedPoly) -> GradedPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        -&self
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                f.write_str(&format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else if a.is_integer() {
                write!(f, "{}*{m}", a.numer())?;
            } else {
                write!(f, "({})*{m}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::PolyParse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn small_uint(&mut self) -> Result<u32> {
        let n = self.uint()?;
        u32::try_from(n).map_err(|_| self.err("index too large"))
    }

    fn ratio(&mut self) -> Result<Rational> {
        let negative = self.eat(b'-');
        let n = self.uint()?;
        let d = if self.eat(b'/') { self.uint()? } else { BigInt::one() };
        if d.is_zero() {
            return Err(self.err("zero denominator"));
        }
        let q = Rational::new(n, d);
        Ok(if negative { -q } else { q })
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let mut exps: Vec<u32> = Vec::new();
        loop {
            if !self.eat(b't') {
                return Err(self.err("expected variable"));
            }
            let idx = self.small_uint()? as usize;
            if idx == 0 {
                return Err(self.err("variable t0"));
            }
            let e = if self.eat(b'^') { self.small_uint()? } else { 1 };
            if exps.len() < idx {
                exps.resize(idx, 0);
            }
            exps[idx - 1] += e;
            if !(self.peek() == Some(b'*') && self.s.get(self.pos + 1..).is_some_and(|r| {
                r.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b't')
            })) {
                break;
            }
            self.eat(b'*');
        }
        Ok(Monomial::from_exponents(exps))
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        match self.peek() {
            Some(b't') => Ok((self.monomial()?, Rational::one())),
            Some(b'(') => {
                self.pos += 1;
                let c = self.ratio()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.term_tail(c)
            }
            Some(b) if b.is_ascii_digit() => {
                let c = self.ratio()?;
                self.term_tail(c)
            }
            _ => Err(self.err("expected term")),
        }
    }

    fn term_tail(&mut self, c: Rational) -> Result<(Monomial, Rational)> {
        if self.eat(b'*') {
            Ok((self.monomial()?, c))
        } else {
            Ok((Monomial::one(), c))
        }
    }
}

impl FromStr for GradedPoly {
    type Err = Error;

    /// Parses the canonical rendering; the result has no cutoff.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let mut out = GradedPoly::zero();
        let mut negative = p.eat(b'-');
        if !negative {
            p.eat(b'+');
        }
        loop {
            let (m, c) = p.term()?;
            out.add_term(m, if negative { -c } else { c });
            match p.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(p.err("expected '+' or '-'")),
            }
            p.pos += 1;
        }
        Ok(out)
    }
}
