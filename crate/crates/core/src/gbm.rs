//! Integer data of generalized Bott towers.
//!
//! Stage indices in the API are zero-based; the text and JSON formats use the
//! one-based convention (`x1`, `a_(2,1)`, `"i": 2`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

/// Fiber dimensions `n_1..n_m` and line-bundle exponents `a_(i,j)` of an
/// `m`-stage generalized Bott tower.
///
/// `block(i, j)` for `j < i` is the vector `a_(i,j)` of length `n_i`; it is
/// the block-`i` part of the ray `v_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct GeneralizedBottMatrix {
    fiber_dims: Vec<usize>,
    coeffs: Vec<Vec<Vec<i64>>>,
}

impl GeneralizedBottMatrix {
    /// `coeffs[i]` holds the blocks `a_(i,0)..a_(i,i-1)`; `coeffs[0]` is empty.
    pub fn new(fiber_dims: Vec<usize>, coeffs: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let gbm = Self { fiber_dims, coeffs };
        gbm.validate()?;
        Ok(gbm)
    }

    /// The trivial tower over a point: `CP^n`.
    pub fn projective_space(n: usize) -> Result<Self> {
        Self::new(vec![n], vec![vec![]])
    }

    /// Product `CP^{n_1} x ... x CP^{n_m}` (all exponents zero).
    pub fn product(fiber_dims: &[usize]) -> Result<Self> {
        let coeffs = (0..fiber_dims.len())
            .map(|i| (0..i).map(|_| vec![0; fiber_dims[i]]).collect())
            .collect();
        Self::new(fiber_dims.to_vec(), coeffs)
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.fiber_dims.len();
        if m == 0 {
            return Err(Error::EmptyTower);
        }
        if let Some(stage) = self.fiber_dims.iter().position(|&n| n == 0) {
            return Err(Error::ZeroFiberDim { stage: stage + 1 });
        }
        if self.coeffs.len() != m {
            return Err(Error::BlockCount {
                i: m,
                expected: m,
                found: self.coeffs.len(),
            });
        }
        for (i, row) in self.coeffs.iter().enumerate() {
            if row.len() != i {
                return Err(Error::BlockCount {
                    i: i + 1,
                    expected: i,
                    found: row.len(),
                });
            }
            for (j, block) in row.iter().enumerate() {
                if block.len() != self.fiber_dims[i] {
                    return Err(Error::DimensionMismatch {
                        i: i + 1,
                        j: j + 1,
                        expected: self.fiber_dims[i],
                        found: block.len(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Number of stages `m` (the Picard number).
    pub fn height(&self) -> usize {
        self.fiber_dims.len()
    }

    pub fn fiber_dims(&self) -> &[usize] {
        &self.fiber_dims
    }

    /// Complex dimension `n = sum n_i`.
    pub fn dim(&self) -> usize {
        self.fiber_dims.iter().sum()
    }

    /// `a_(i,j)` for zero-based `j < i`.
    pub fn block(&self, i: usize, j: usize) -> &[i64] {
        &self.coeffs[i][j]
    }

    pub fn is_product(&self) -> bool {
        self.coeffs.iter().flatten().flatten().all(|&c| c == 0)
    }

    /// Offset of stage `i` inside `Z^n`.
    pub fn block_offset(&self, i: usize) -> usize {
        self.fiber_dims[..i].iter().sum()
    }

    /// Euler characteristic `prod (n_i + 1)`.
    pub fn euler_characteristic(&self) -> usize {
        self.fiber_dims.iter().map(|n| n + 1).product()
    }
}

impl fmt::Display for GeneralizedBottMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Ok(spec) = TwoStageSpec::try_from(self) {
            return write!(f, "{spec}");
        }
        let dims: Vec<String> = self.fiber_dims.iter().map(|n| n.to_string()).collect();
        write!(f, "GBM(type ({})", dims.join(","))?;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, block) in row.iter().enumerate() {
                let entries: Vec<String> = block.iter().map(|c| c.to_string()).collect();
                write!(f, "; a{},{}=({})", i + 1, j + 1, entries.join(","))?;
            }
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct RawBlock {
    i: usize,
    j: usize,
    vec: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    fiber_dims: Vec<usize>,
    coeffs: Vec<RawBlock>,
}

impl TryFrom<RawMatrix> for GeneralizedBottMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        let m = raw.fiber_dims.len();
        let mut slots: Vec<Vec<Option<Vec<i64>>>> =
            (0..m).map(|i| vec![None; i]).collect();
        for block in raw.coeffs {
            let (i, j) = (block.i, block.j);
            if j == 0 || j >= i || i > m {
                return Err(Error::BlockOutOfRange { i, j, m });
            }
            let slot = &mut slots[i - 1][j - 1];
            if slot.is_some() {
                return Err(Error::DuplicateBlock { i, j });
            }
            *slot = Some(block.vec);
        }
        let mut coeffs = Vec::with_capacity(m);
        for (i, row) in slots.into_iter().enumerate() {
            let mut blocks = Vec::with_capacity(i);
            for (j, slot) in row.into_iter().enumerate() {
                blocks.push(slot.ok_or(Error::MissingBlock { i: i + 1, j: j + 1 })?);
            }
            coeffs.push(blocks);
        }
        Self::new(raw.fiber_dims, coeffs)
    }
}

impl From<GeneralizedBottMatrix> for RawMatrix {
    fn from(gbm: GeneralizedBottMatrix) -> Self {
        let mut coeffs = Vec::new();
        for (i, row) in gbm.coeffs.into_iter().enumerate() {
            for (j, vec) in row.into_iter().enumerate() {
                coeffs.push(RawBlock {
                    i: i + 1,
                    j: j + 1,
                    vec,
                });
            }
        }
        RawMatrix {
            fiber_dims: gbm.fiber_dims,
            coeffs,
        }
    }
}

/// Two-stage tower `P(C + gamma^{a_1} + ... + gamma^{a_{n2}})` over `CP^{n1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoStageSpec {
    n1: usize,
    a: Vec<i64>,
}

impl Serialize for TwoStageSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl TwoStageSpec {
    pub fn new(n1: usize, a: Vec<i64>) -> Result<Self> {
        if n1 == 0 || a.is_empty() {
            return Err(Error::EmptyTwoStage);
        }
        Ok(Self { n1, a })
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.a.len()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.a
    }

    pub fn dim(&self) -> usize {
        self.n1 + self.n2()
    }

    pub fn is_normalized(&self) -> bool {
        self.a.iter().all(|&a| a >= 0)
    }

    pub fn is_product(&self) -> bool {
        self.a.iter().all(|&a| a == 0)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.a.iter().sum()
    }

    pub fn to_matrix(&self) -> GeneralizedBottMatrix {
        GeneralizedBottMatrix {
            fiber_dims: vec![self.n1, self.n2()],
            coeffs: vec![vec![], vec![self.a.clone()]],
        }
    }

    /// Twists the bundle so that the exponent multiset `{0, a_1, ..., a_n2}`
    /// has minimum zero, then drops one zero for the trivial summand.
    ///
    /// The shifted trivial summand comes first, followed by the remaining
    /// exponents in input order; an already normalized spec is returned as is.
    pub fn normalize(&self) -> TwoStageSpec {
        let shift = self.a.iter().copied().min().unwrap_or(0).min(0);
        if shift == 0 {
            return self.clone();
        }
        let mut full: Vec<i64> = std::iter::once(0)
            .chain(self.a.iter().copied())
            .map(|a| a - shift)
            .collect();
        let zero = full.iter().position(|&a| a == 0).expect("shifted minimum is zero");
        full.remove(zero);
        TwoStageSpec {
            n1: self.n1,
            a: full,
        }
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let mut sorted_a = self.normalize().a;
        sorted_a.sort_unstable();
        let is_product = sorted_a.iter().all(|&a| a == 0);
        let (mut n1, mut n2) = (self.n1, self.n2());
        if is_product && n1 > n2 {
            std::mem::swap(&mut n1, &mut n2);
            sorted_a = vec![0; n2];
        }
        CanonicalForm {
            type_pair: (n1, n2),
            sorted_a,
            is_product,
        }
    }
}

impl TryFrom<&GeneralizedBottMatrix> for TwoStageSpec {
    type Error = Error;

    fn try_from(gbm: &GeneralizedBottMatrix) -> Result<Self> {
        if gbm.height() != 2 {
            return Err(Error::NotTwoStage(gbm.height()));
        }
        TwoStageSpec::new(gbm.fiber_dims[0], gbm.coeffs[1][0].clone())
    }
}

impl fmt::Display for TwoStageSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(|a| a.to_string()).collect();
        write!(f, "B({};{})", self.n1, a.join(","))
    }
}

impl FromStr for TwoStageSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        cur.skip_ws();
        cur.expect('B')?;
        cur.skip_ws();
        cur.expect('(')?;
        cur.skip_ws();
        let (line, column) = cur.position();
        let n1 = cur.integer()?;
        if n1 < 1 {
            return Err(ParseError {
                line,
                column,
                message: format!("base dimension must be positive, found {n1}"),
            });
        }
        cur.skip_ws();
        cur.expect(';')?;
        let mut a = Vec::new();
        loop {
            cur.skip_ws();
            a.push(cur.integer()?);
            cur.skip_ws();
            match cur.peek() {
                Some(',') => cur.bump(),
                Some(')') => {
                    cur.bump();
                    break;
                }
                _ => return Err(cur.error("expected ',' or ')'")),
            }
        }
        cur.skip_ws();
        if cur.peek().is_some() {
            return Err(cur.error("unexpected trailing input"));
        }
        Ok(TwoStageSpec { n1: n1 as usize, a })
    }
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            chars: s.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn position(&self) -> (usize, usize) {
        (self.line, self.column)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) {
        if let Some(c) = self.chars.next() {
            if c == '\n' {
                self.line += 1;
                self.column = 1;
            } else {
                self.column += 1;
            }
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&mut self, message: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError {
            line: self.line,
            column: self.column,
            message: format!("{message}, found {found}"),
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn integer(&mut self) -> std::result::Result<i64, ParseError> {
        let (line, column) = self.position();
        let mut text = String::new();
        if matches!(self.peek(), Some('-' | '+')) {
            text.push(self.peek().unwrap());
            self.bump();
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            text.push(c);
            self.bump();
        }
        if !text.ends_with(|c: char| c.is_ascii_digit()) {
            return Err(self.error("expected an integer"));
        }
        text.parse().map_err(|_| ParseError {
            line,
            column,
            message: format!("integer '{text}' out of range"),
        })
    }
}

/// Variety-isomorphism class representative of a two-stage tower.
///
/// Products are stored with `n1 <= n2`; every other form keeps its type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub type_pair: (usize, usize),
    pub sorted_a: Vec<i64>,
    pub is_product: bool,
}

impl CanonicalForm {
    pub fn to_spec(&self) -> TwoStageSpec {
        TwoStageSpec {
            n1: self.type_pair.0,
            a: self.sorted_a.clone(),
        }
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_spec())
    }
}

/// `e_r(values)`: sum over all `r`-subsets of the products of their entries.
pub fn elementary_symmetric(values: &[i64], r: usize) -> Result<BigInt> {
    if r == 0 || r > values.len() {
        return Err(Error::SymmetricIndex {
            r,
            len: values.len(),
        });
    }
    Ok(elementary_symmetric_all(values).swap_remove(r))
}

/// `[e_0, e_1, ..., e_len]` in one pass.
pub(crate) fn elementary_symmetric_all(values: &[i64]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); values.len() + 1];
    e[0] = BigInt::one();
    for (seen, &b) in values.iter().enumerate() {
        for r in (1..=seen + 1).rev() {
            let term = &e[r - 1] * b;
            e[r] += term;
        }
    }
    e
}
