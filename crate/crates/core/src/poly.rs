//! Sparse multivariate polynomials over the integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};

/// Exponent vector `(k_1, ..., k_m)` of `x1^k_1 * ... * xm^k_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `(variable, exponent)` pairs of the factors actually present.
    fn factors(&self) -> Vec<(usize, u32)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
            .collect()
    }

    /// Print order: total degree, then the factor list lexicographically.
    fn display_key(&self) -> (u32, Vec<(usize, u32)>) {
        (self.degree(), self.factors())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.factors();
        if factors.is_empty() {
            return write!(f, "1");
        }
        for (n, (i, e)) in factors.into_iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial in `nvars` variables with arbitrary-precision coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c.into());
        p
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, index), BigInt::one());
        p
    }

    /// `sum_i coeffs[i] * x_{i+1}`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(nvars);
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(nvars, i), BigInt::from(c));
        }
        p
    }

    pub fn monomial(mono: Monomial, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(mono.0.len());
        p.add_term(mono, coeff.into());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        debug_assert_eq!(mono.0.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn homogeneous_component(&self, degree: u32) -> IntPolynomial {
        IntPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficients of `x1..xm` if the polynomial is a linear form.
    pub fn linear_coefficients(&self) -> Option<Vec<BigInt>> {
        if self.terms.keys().any(|m| m.degree() != 1) {
            return None;
        }
        Some(
            (0..self.nvars)
                .map(|i| self.coefficient(&Monomial::var(self.nvars, i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        IntPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> IntPolynomial {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Ring map `x_i -> images[i]`.
    pub fn substitute(&self, images: &[IntPolynomial]) -> IntPolynomial {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target_vars = images.first().map_or(0, |p| p.nvars);
        let mut out = Self::zero(target_vars);
        for (mono, coeff) in &self.terms {
            let mut term = Self::constant(target_vars, coeff.clone());
            for (img, &e) in images.iter().zip(&mono.0) {
                for _ in 0..e {
                    term = &term * img;
                }
            }
            out = &out + &term;
        }
        out
    }

    pub(crate) fn from_terms(nvars: usize, terms: BTreeMap<Monomial, BigInt>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Self { nvars, terms }
    }

    /// Parses the printed form (`2*x1*x2^2 - x1^2*x2`, `1 + 2*x1`, `0`).
    pub fn parse(text: &str, nvars: usize) -> Result<IntPolynomial> {
        let mut parser = PolyParser {
            bytes: text.as_bytes(),
            pos: 0,
            nvars,
        };
        let p = parser.expression()?;
        parser.skip_ws();
        if parser.pos < parser.bytes.len() {
            return Err(parser.error("unexpected trailing input").into());
        }
        Ok(p)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_cached_key(|(m, _)| m.display_key());
        for (n, (mono, coeff)) in terms.into_iter().enumerate() {
            let magnitude = coeff.abs();
            match (n, coeff.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.degree() == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{magnitude}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn merge(lhs: &IntPolynomial, rhs: &IntPolynomial, negate: bool) -> IntPolynomial {
    assert_eq!(lhs.nvars, rhs.nvars, "variable count mismatch");
    let mut out = lhs.clone();
    for (m, c) in &rhs.terms {
        out.add_term(m.clone(), if negate { -c } else { c.clone() });
    }
    out
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        merge(self, rhs, false)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        merge(self, rhs, true)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = IntPolynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

struct PolyParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl PolyParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn location(&self) -> (usize, usize) {
        let before = &self.bytes[..self.pos];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = self.pos - before.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1) + 1;
        (line, column)
    }

    fn error(&self, message: &str) -> ParseError {
        let (line, column) = self.location();
        let found = match self.peek() {
            Some(b) => format!("'{}'", b as char),
            None => "end of input".to_string(),
        };
        ParseError {
            line,
            column,
            message: format!("{message}, found {found}"),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn expression(&mut self) -> Result<IntPolynomial> {
        let mut acc = IntPolynomial::zero(self.nvars);
        self.skip_ws();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let term = self.term()?;
            acc = if negative { &acc - &term } else { &acc + &term };
            self.skip_ws();
            negative = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<IntPolynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() != Some(b'*') {
                return Ok(acc);
            }
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
    }

    fn factor(&mut self) -> Result<IntPolynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let digits = self.digits();
                let index: usize = digits
                    .ok_or_else(|| self.error("expected a variable index"))?
                    .parse()
                    .map_err(|_| self.error("variable index out of range"))?;
                if index == 0 || index > self.nvars {
                    return Err(Error::VariableCount {
                        index,
                        nvars: self.nvars,
                    });
                }
                let mut exponent = 1u32;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let digits = self.digits();
                    exponent = digits
                        .ok_or_else(|| self.error("expected an exponent"))?
                        .parse()
                        .map_err(|_| self.error("exponent out of range"))?;
                }
                let mut exps = vec![0; self.nvars];
                exps[index - 1] = exponent;
                Ok(IntPolynomial::monomial(Monomial::new(exps), 1))
            }
            Some(b) if b.is_ascii_digit() => {
                let value: BigInt = self.digits().unwrap().parse().expect("ascii digits");
                Ok(IntPolynomial::constant(self.nvars, value))
            }
            _ => Err(self.error("expected a coefficient or variable").into()),
        }
    }
}
