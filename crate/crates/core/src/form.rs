//! Homogeneous polynomials ("forms") with exact rational coefficients.
//!
//! A [`Form`] stores only nonzero coefficients, keyed by [`ExponentVector`],
//! and every key has the same total degree. Terms iterate in descending
//! graded lexicographic order, so `x1^2` comes before `x1*x2` before `x2^2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("variable index must be at least 1 (position {position})")]
    IndexZero { position: usize },
    #[error("inhomogeneous input: `{first}` has degree {first_degree} but `{second}` has degree {second_degree}")]
    Inhomogeneous {
        first: String,
        first_degree: u32,
        second: String,
        second_degree: u32,
    },
    #[error("a form needs at least one variable")]
    NoVariables,
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("term has degree {found}, form has degree {expected}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("point coordinate {index} is negative")]
    NegativeCoordinate { index: usize },
}

/// Multidegree of a monomial `x1^a1 * ... * xn^an`, with its total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    entries: Vec<u32>,
    degree: u32,
}

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        let degree = entries.iter().sum();
        ExponentVector { entries, degree }
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector::new(vec![0; n])
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Value of the monomial at `point` (no sign checks).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.entries
            .iter()
            .zip(point)
            .filter(|(e, _)| **e > 0)
            .fold(Rational::one(), |acc, (e, x)| acc * rational::pow(x, *e))
    }

    /// Renders `x1^3*x2*x3^2`; the constant monomial renders as `1`.
    pub fn monomial_string(&self) -> String {
        let factors: Vec<String> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| match e {
                1 => format!("x{}", i + 1),
                _ => format!("x{}^{}", i + 1, e),
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(entries: Vec<u32>) -> Self {
        ExponentVector::new(entries)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(entries: [u32; N]) -> Self {
        ExponentVector::new(entries.to_vec())
    }
}

/// Graded lexicographic: total degree first, then the entries left to right.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A point of the closed nonnegative orthant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Result<Self, FormError> {
        if let Some(index) = coords.iter().position(|c| c.is_negative()) {
            return Err(FormError::NegativeCoordinate { index });
        }
        Ok(Point { coords })
    }

    pub fn ones(n: usize) -> Self {
        Point {
            coords: vec![Rational::one(); n],
        }
    }

    pub fn from_integers(values: &[u64]) -> Self {
        Point {
            coords: values
                .iter()
                .map(|v| Rational::from_integer(BigInt::from(*v)))
                .collect(),
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A homogeneous polynomial of degree `d` in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form {
    n: usize,
    degree: u32,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Form {
    pub fn zero(n: usize, degree: u32) -> Self {
        Form {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    ///
    /// The degree is taken from the first term; an empty iterator gives the
    /// zero form of degree 0.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self, FormError>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        if n == 0 {
            return Err(FormError::NoVariables);
        }
        let mut degree = None;
        let mut map: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for (exp, coeff) in terms {
            if exp.len() != n {
                return Err(FormError::DimensionMismatch {
                    expected: n,
                    found: exp.len(),
                });
            }
            let d = *degree.get_or_insert(exp.degree());
            if exp.degree() != d {
                return Err(FormError::DegreeMismatch {
                    expected: d,
                    found: exp.degree(),
                });
            }
            *map.entry(exp).or_insert_with(Rational::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Form {
            n,
            degree: degree.unwrap_or(0),
            terms: map,
        })
    }

    pub fn monomial(exp: ExponentVector, coeff: Rational) -> Self {
        let n = exp.len();
        let degree = exp.degree();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Form { n, degree, terms }
    }

    /// The linear form `c1*x1 + ... + cn*xn`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut terms = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                terms.insert(ExponentVector::new(e), c.clone());
            }
        }
        Form {
            n,
            degree: 1,
            terms,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`Form::is_zero`]: a form without terms.
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> Option<&Rational> {
        self.terms.get(exp)
    }

    pub fn positive_terms(&self) -> impl Iterator<Item = &ExponentVector> + '_ {
        self.terms()
            .filter(|(_, c)| c.is_positive())
            .map(|(e, _)| e)
    }

    pub fn negative_terms(&self) -> impl Iterator<Item = &ExponentVector> + '_ {
        self.terms()
            .filter(|(_, c)| c.is_negative())
            .map(|(e, _)| e)
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn evaluate(&self, point: &Point) -> Result<Rational, FormError> {
        self.evaluate_at(point.coords())
    }

    /// Evaluates at arbitrary rational coordinates, signs unrestricted.
    pub fn evaluate_at(&self, coords: &[Rational]) -> Result<Rational, FormError> {
        if coords.len() != self.n {
            return Err(FormError::DimensionMismatch {
                expected: self.n,
                found: coords.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .fold(Rational::zero(), |acc, (e, c)| acc + c * e.eval(coords)))
    }

    /// Every coefficient is nonnegative (vacuously true for the zero form).
    pub fn is_trivially_positive(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The value at `(1, ..., 1)`, i.e. the coefficient sum, is negative.
    pub fn is_trivially_negative(&self) -> bool {
        self.coefficient_sum().is_negative()
    }

    /// Divides by the positive content so the coefficients become coprime
    /// integers. The zero form is returned unchanged.
    pub fn content_normalize(&self) -> Form {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd = self
            .terms
            .values()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .fold(BigInt::zero(), |acc, num| acc.gcd(&num));
        let scale = Rational::new(lcm, gcd);
        self.scale(&scale)
    }

    pub fn scale(&self, factor: &Rational) -> Form {
        if factor.is_zero() {
            return Form::zero(self.n, self.degree);
        }
        Form {
            n: self.n,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    pub fn add(&self, other: &Form) -> Form {
        assert_eq!(self.n, other.n, "forms live in different rings");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(
            self.degree, other.degree,
            "sum of forms of different degree"
        );
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Form {
            n: self.n,
            degree: self.degree,
            terms,
        }
    }

    pub fn mul(&self, other: &Form) -> Form {
        assert_eq!(self.n, other.n, "forms live in different rings");
        let mut terms: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *terms.entry(ea.add(eb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Form {
            n: self.n,
            degree: self.degree + other.degree,
            terms,
        }
    }

    pub fn one(n: usize) -> Form {
        Form::monomial(ExponentVector::zeros(n), Rational::one())
    }

    pub fn pow(&self, exp: u32) -> Form {
        let mut result = Form::one(self.n);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

impl fmt::Display for Form {
    /// Canonical text accepted by [`parse_form`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.terms().enumerate() {
            let magnitude = coeff.abs();
            match (i, coeff.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = exp.degree() == 0;
            if constant {
                write!(f, "{}", magnitude)?;
            } else if magnitude.is_one() {
                write!(f, "{}", exp.monomial_string())?;
            } else {
                write!(f, "{}*{}", magnitude, exp.monomial_string())?;
            }
        }
        Ok(())
    }
}

struct ParsedTerm {
    text: String,
    coeff: Rational,
    powers: Vec<(usize, u32)>,
    degree: u32,
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    source: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(source: &'a str) -> Self {
        Cursor {
            chars: source.char_indices().collect(),
            pos: 0,
            source,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    /// Character offset of the next significant character.
    fn position(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn byte_offset(&self, pos: usize) -> usize {
        self.chars
            .get(pos)
            .map(|(b, _)| *b)
            .unwrap_or(self.source.len())
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn error<T>(&mut self, message: impl Into<String>) -> Result<T, FormError> {
        Err(FormError::Syntax {
            position: self.position(),
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|(_, c)| c).collect())
    }
}

fn parse_u32(cur: &mut Cursor<'_>, what: &str) -> Result<u32, FormError> {
    let pos = cur.position();
    match cur.digits() {
        Some(d) => d.parse().map_err(|_| FormError::Syntax {
            position: pos,
            message: format!("{what} out of range"),
        }),
        None => cur.error(format!("expected {what}")),
    }
}

fn parse_coefficient(cur: &mut Cursor<'_>) -> Result<Rational, FormError> {
    let num: BigInt = cur
        .digits()
        .expect("caller checked for a digit")
        .parse()
        .unwrap();
    if cur.peek() == Some('/') {
        cur.bump();
        let pos = cur.position();
        let den: BigInt = match cur.digits() {
            Some(d) => d.parse().unwrap(),
            None => return cur.error("expected denominator"),
        };
        if den.is_zero() {
            return Err(FormError::Syntax {
                position: pos,
                message: "zero denominator".into(),
            });
        }
        Ok(Rational::new(num, den))
    } else {
        Ok(Rational::from_integer(num))
    }
}

fn parse_factor(cur: &mut Cursor<'_>) -> Result<(usize, u32), FormError> {
    if cur.peek() != Some('x') {
        return cur.error("expected variable `x<index>`");
    }
    cur.bump();
    let pos = cur.position();
    let index = parse_u32(cur, "variable index")?;
    if index == 0 {
        return Err(FormError::IndexZero { position: pos });
    }
    let exp = if cur.peek() == Some('^') {
        cur.bump();
        parse_u32(cur, "exponent")?
    } else {
        1
    };
    Ok((index as usize, exp))
}

fn parse_term(cur: &mut Cursor<'_>, negative: bool) -> Result<ParsedTerm, FormError> {
    let start = cur.position();
    let mut coeff = Rational::one();
    let mut powers = Vec::new();
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            coeff = parse_coefficient(cur)?;
            if cur.peek() == Some('*') {
                cur.bump();
                powers.push(parse_factor(cur)?);
            }
        }
        Some('x') => powers.push(parse_factor(cur)?),
        Some(c) => return cur.error(format!("unexpected `{c}`")),
        None => return cur.error("unexpected end of input"),
    }
    while cur.peek() == Some('*') {
        cur.bump();
        powers.push(parse_factor(cur)?);
    }
    let end = cur.position();
    let text = cur.source[cur.byte_offset(start)..cur.byte_offset(end)]
        .trim()
        .to_string();
    if negative {
        coeff = -coeff;
    }
    let degree = powers.iter().map(|(_, e)| e).sum();
    Ok(ParsedTerm {
        text,
        coeff,
        powers,
        degree,
    })
}

/// Parses a form such as `3/2*x1^2*x3 - x2^3`.
///
/// Variables are `x1, x2, ...`; the variable count is the largest index seen,
/// or `n_hint` when that is larger. Repeated terms are combined and zero
/// coefficients dropped.
pub fn parse_form(text: &str, n_hint: Option<usize>) -> Result<Form, FormError> {
    let mut cur = Cursor::new(text);
    let mut parsed = Vec::new();
    let mut negative = match cur.peek() {
        Some('-') => {
            cur.bump();
            true
        }
        Some('+') => {
            cur.bump();
            false
        }
        _ => false,
    };
    loop {
        parsed.push(parse_term(&mut cur, negative)?);
        match cur.peek() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(c) => return cur.error(format!("unexpected `{c}`")),
        }
        cur.bump();
    }

    let first = &parsed[0];
    if let Some(other) = parsed.iter().find(|t| t.degree != first.degree) {
        return Err(FormError::Inhomogeneous {
            first: first.text.clone(),
            first_degree: first.degree,
            second: other.text.clone(),
            second_degree: other.degree,
        });
    }

    let max_index = parsed
        .iter()
        .flat_map(|t| t.powers.iter().map(|(i, _)| *i))
        .max()
        .unwrap_or(1);
    let n = max_index.max(n_hint.unwrap_or(0));
    let degree = first.degree;
    let terms = parsed.into_iter().map(|t| {
        let mut entries = vec![0u32; n];
        for (i, e) in t.powers {
            entries[i - 1] += e;
        }
        (ExponentVector::new(entries), t.coeff)
    });
    let form = Form::from_terms(n, terms)?;
    if form.is_zero() {
        return Ok(Form::zero(n, degree));
    }
    Ok(form)
}
