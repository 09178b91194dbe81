//! Reed-Solomon code parameters, encoding and Hamming distance.

use std::sync::Arc;

use num_rational::Ratio;
use thiserror::Error;

use crate::field::{EvalMode, FieldCtx, FieldElement};
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("dimension k = {k} outside 1..={n}")]
    Dimension { k: usize, n: usize },
    #[error("distance d = {d} outside 1..={n}")]
    Distance { d: usize, n: usize },
    #[error("polynomial of degree {degree} does not fit a code of dimension {k}")]
    DegreeTooHigh { degree: usize, k: usize },
    #[error("words of length {0} and {1} cannot be compared")]
    LengthMismatch(usize, usize),
    #[error("words over GF({0}) and GF({1}) cannot be compared")]
    FieldMismatch(u32, u32),
    #[error("invalid evaluation points: {0}")]
    Points(String),
}

/// An `[n, k, d]` Reed-Solomon code: evaluations of all polynomials of
/// degree below `k` at a fixed point sequence.
#[derive(Clone, Debug)]
pub struct CodeParams {
    field: Arc<FieldCtx>,
    mode: EvalMode,
    k: usize,
    points: Vec<FieldElement>,
}

impl CodeParams {
    pub fn new(field: &Arc<FieldCtx>, mode: EvalMode, k: usize) -> Result<Self, CodeError> {
        Self::with_points(field, mode, k, field.eval_points(mode))
    }

    /// Same code with its coordinates permuted: `points` must enumerate the
    /// point set of `mode` in some order.
    pub fn with_points(
        field: &Arc<FieldCtx>,
        mode: EvalMode,
        k: usize,
        points: Vec<FieldElement>,
    ) -> Result<Self, CodeError> {
        let mut expected = field.eval_points(mode);
        let mut given = points.clone();
        expected.sort();
        given.sort();
        if expected != given {
            return Err(CodeError::Points(format!(
                "expected a permutation of the {} {mode} points of GF({})",
                expected.len(),
                field.q()
            )));
        }
        let n = points.len();
        if k == 0 || k > n {
            return Err(CodeError::Dimension { k, n });
        }
        Ok(CodeParams {
            field: field.clone(),
            mode,
            k,
            points,
        })
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn mode(&self) -> EvalMode {
        self.mode
    }

    pub fn points(&self) -> &[FieldElement] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Singleton bound with equality.
    pub fn d(&self) -> usize {
        self.n() - self.k + 1
    }

    pub fn encode(&self, f: &Poly) -> Result<Codeword, CodeError> {
        if let Some(degree) = f.degree() {
            if degree >= self.k {
                return Err(CodeError::DegreeTooHigh { degree, k: self.k });
            }
        }
        Ok(self.evaluate(f))
    }

    /// Evaluation at the code's points without the dimension check.
    pub fn evaluate(&self, f: &Poly) -> Codeword {
        Codeword {
            symbols: self.points.iter().map(|&x| f.eval(x)).collect(),
            source: Some(f.clone()),
        }
    }

    /// Number of codewords, `q^k`, if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        (self.field.q() as u64).checked_pow(self.k as u32)
    }

    /// The message polynomial with index `index` in the enumeration of all
    /// codewords: base-`q` digits of the index, in canonical element order,
    /// give the coefficients from degree 0 upwards.
    pub fn message(&self, mut index: u64) -> Poly {
        let q = self.field.q() as u64;
        let coeffs = (0..self.k)
            .map(|_| {
                let digit = (index % q) as u32;
                index /= q;
                self.field.element(digit).expect("digit below q")
            })
            .collect();
        Poly::from_coeffs(&self.field, coeffs)
    }
}

/// Parameters for the code of minimum distance `d`: `k = n - d + 1`.
pub fn params_for_distance(
    field: &Arc<FieldCtx>,
    mode: EvalMode,
    d: usize,
) -> Result<CodeParams, CodeError> {
    let n = field.eval_points(mode).len();
    if d == 0 || d > n {
        return Err(CodeError::Distance { d, n });
    }
    CodeParams::new(field, mode, n - d + 1)
}

/// A length-`n` word, remembering the polynomial it encodes when known.
/// Equality looks at the symbols only.
#[derive(Clone, Debug)]
pub struct Codeword {
    pub symbols: Vec<FieldElement>,
    pub source: Option<Poly>,
}

impl PartialEq for Codeword {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Codeword {}

impl Codeword {
    pub fn new(symbols: Vec<FieldElement>) -> Self {
        Codeword {
            symbols,
            source: None,
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn render(&self, field: &FieldCtx) -> Vec<String> {
        self.symbols.iter().map(|&a| field.render(a)).collect()
    }
}

/// Number of positions where `a` and `b` differ.
pub fn hamming(a: &[FieldElement], b: &[FieldElement]) -> Result<usize, CodeError> {
    if a.len() != b.len() {
        return Err(CodeError::LengthMismatch(a.len(), b.len()));
    }
    if let (Some(x), Some(y)) = (a.first(), b.first()) {
        if x.field_size() != y.field_size() {
            return Err(CodeError::FieldMismatch(x.field_size(), y.field_size()));
        }
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

/// `n - n/c^2`; codes with larger minimum distance (and `q > c`) are `c`-TA.
pub fn ta_threshold(n: usize, c: usize) -> Ratio<u64> {
    let (n, c) = (n as u64, c as u64);
    Ratio::from_integer(n) - Ratio::new(n, c * c)
}

/// `n - n/c`; codes with larger minimum distance are `c`-frameproof.
pub fn fp_threshold(n: usize, c: usize) -> Ratio<u64> {
    let (n, c) = (n as u64, c as u64);
    Ratio::from_integer(n) - Ratio::new(n, c)
}
