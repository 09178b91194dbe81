//! Dense univariate polynomials over a [`FieldCtx`].

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::field::{FieldCtx, FieldElement, FieldError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("repeated root {0}")]
    DuplicateRoot(String),
    #[error("repeated abscissa {0}")]
    RepeatedAbscissa(String),
    #[error("interpolation needs at least one point")]
    NoPoints,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("Bezout inputs must be non-constant")]
    ConstantInput,
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("target degree {degree} is not below deg(u) + deg(v) = {bound}")]
    TargetDegree { degree: usize, bound: usize },
    /// A degree bound that the algebra guarantees was violated.
    #[error("internal error: {0}")]
    DegreeBound(String),
    #[error("cannot parse polynomial term {0:?}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A polynomial with coefficients indexed by degree and no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Arc<FieldCtx>,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.field.q() == other.field.q() && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[GF({})]({})", self.field.q(), self.render())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Poly {
    pub fn from_coeffs(field: &Arc<FieldCtx>, coeffs: Vec<FieldElement>) -> Self {
        for &c in &coeffs {
            assert!(field.contains(c), "coefficient from a different field");
        }
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    /// Coefficients given as integers of the prime subfield, low degree first.
    pub fn from_ints(field: &Arc<FieldCtx>, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| field.from_int(c)).collect();
        Self::from_coeffs(field, coeffs)
    }

    pub fn zero(field: &Arc<FieldCtx>) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Arc<FieldCtx>) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &Arc<FieldCtx>, c: FieldElement) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(field: &Arc<FieldCtx>, c: FieldElement, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// The identity polynomial `x`.
    pub fn x(field: &Arc<FieldCtx>) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// `None` stands for the degree of the zero polynomial, below every
    /// `Some(_)` under `Option`'s ordering.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(self.field.zero())
    }

    fn same_field(&self, other: &Poly) {
        assert_eq!(
            self.field.q(),
            other.field.q(),
            "polynomials over GF({}) and GF({}) mixed",
            self.field.q(),
            other.field.q()
        );
    }

    /// Horner evaluation.
    pub fn eval(&self, pt: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, pt), c))
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// Scales to leading coefficient one; the zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lead) => self.scale(
                self.field
                    .inv(lead)
                    .expect("leading coefficient is nonzero"),
            ),
        }
    }

    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.same_field(divisor);
        let f = &self.field;
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[top - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let j = top - dd + i;
                rem[j] = f.sub(rem[j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(f, quot), Poly::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Monic polynomial vanishing exactly on `roots`.
    pub fn from_roots(field: &Arc<FieldCtx>, roots: &[FieldElement]) -> Result<Poly, PolyError> {
        let mut sorted = roots.to_vec();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(PolyError::DuplicateRoot(field.render(w[0])));
        }
        Ok(product_of_linears(field, roots))
    }

    /// Lagrange interpolation through `points`.
    pub fn interpolate(
        field: &Arc<FieldCtx>,
        points: &[(FieldElement, FieldElement)],
    ) -> Result<Poly, PolyError> {
        if points.is_empty() {
            return Err(PolyError::NoPoints);
        }
        let xs: Vec<FieldElement> = points.iter().map(|&(x, _)| x).collect();
        let mut sorted = xs.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(PolyError::RepeatedAbscissa(field.render(w[0])));
        }
        let full = product_of_linears(field, &xs);
        let mut acc = Poly::zero(field);
        for &(xi, yi) in points {
            // full / (x - xi) by synthetic division
            let basis = full
                .divmod(&Poly::from_coeffs(field, vec![field.neg(xi), field.one()]))?
                .0;
            let denom = basis.eval(xi);
            let weight = field.div(yi, denom)?;
            acc = &acc + &basis.scale(weight);
        }
        Ok(acc)
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly, PolyError> {
        a.same_field(b);
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::BothZero);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r2 = r0.rem(&r1)?;
            r0 = r1;
            r1 = r2;
        }
        Ok(r0.monic())
    }

    /// Extended Euclid: `(g, s, t)` with `s*a + t*b = g`, `g` not normalised.
    fn ext_gcd(a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly), PolyError> {
        let f = &a.field;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (quot, r2) = r0.divmod(&r1)?;
            let s2 = &s0 - &(&quot * &s1);
            let t2 = &t0 - &(&quot * &t1);
            (r0, r1) = (r1, r2);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        Ok((r0, s0, t0))
    }

    /// The Bezout pair `(a, b)` with `a*u - b*v = 1`, `deg a < deg v` and
    /// `deg b < deg u`; `a` is the remainder of any Bezout coefficient mod `v`.
    pub fn bezout_min(u: &Poly, v: &Poly) -> Result<(Poly, Poly), PolyError> {
        u.same_field(v);
        let (du, dv) = match (u.degree(), v.degree()) {
            (Some(du), Some(dv)) if du >= 1 && dv >= 1 => (du, dv),
            _ => return Err(PolyError::ConstantInput),
        };
        let f = &u.field;
        let (g, s, _) = Self::ext_gcd(u, v)?;
        if g.degree() != Some(0) {
            return Err(PolyError::NotCoprime);
        }
        let g_inv = f.inv(g.coeffs[0])?;
        let a = s.scale(g_inv).rem(v)?;
        let (b, r) = (&(&a * u) - &Poly::one(f)).divmod(v)?;
        if !r.is_zero() {
            return Err(PolyError::DegreeBound(
                "a*u - 1 is not divisible by v".into(),
            ));
        }
        check_bezout_degrees(&a, &b, du, dv)?;
        Ok((a, b))
    }

    /// `(a, b)` with `a*u - b*v = z`, `deg a < deg v`, `deg b < deg u`.
    pub fn bezout_target(u: &Poly, v: &Poly, z: &Poly) -> Result<(Poly, Poly), PolyError> {
        u.same_field(z);
        let (a_hat, _) = Self::bezout_min(u, v)?;
        let (du, dv) = (u.degree().unwrap(), v.degree().unwrap());
        if let Some(dz) = z.degree() {
            if dz >= du + dv {
                return Err(PolyError::TargetDegree {
                    degree: dz,
                    bound: du + dv,
                });
            }
        }
        let a = (&a_hat * z).rem(v)?;
        let (b, r) = (&(&a * u) - z).divmod(v)?;
        if !r.is_zero() {
            return Err(PolyError::DegreeBound(
                "a*u - z is not divisible by v".into(),
            ));
        }
        check_bezout_degrees(&a, &b, du, dv)?;
        Ok((a, b))
    }

    /// `c0 + c1*x + c2*x^2 + ...`, zero terms omitted, unit coefficients
    /// dropped on non-constant terms.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let one = self.field.one();
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(if i == 0 {
                self.field.render(c)
            } else if c == one {
                var
            } else {
                format!("{}*{var}", self.field.render(c))
            });
        }
        terms.join(" + ")
    }

    /// Inverse of [`Poly::render`]; repeated degrees are summed.
    pub fn parse(field: &Arc<FieldCtx>, text: &str) -> Result<Poly, PolyError> {
        if text.trim() == "0" {
            return Ok(Poly::zero(field));
        }
        let mut coeffs: Vec<FieldElement> = Vec::new();
        for term in split_terms(text) {
            let term = term.trim();
            let bad = || PolyError::Parse(term.to_string());
            let (coef, var) = match term.split_once('*') {
                Some((c, v)) => (Some(c.trim()), Some(v.trim())),
                None if term.starts_with('x') => (None, Some(term)),
                None => (Some(term), None),
            };
            let c = match coef {
                Some(c) => field.parse(c).map_err(|_| bad())?,
                None => field.one(),
            };
            let degree = match var {
                None => 0,
                Some("x") => 1,
                Some(v) => v
                    .strip_prefix("x^")
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(bad)?,
            };
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, field.zero());
            }
            coeffs[degree] = field.add(coeffs[degree], c);
        }
        Ok(Poly::from_coeffs(field, coeffs))
    }
}

fn split_terms(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

fn check_bezout_degrees(a: &Poly, b: &Poly, du: usize, dv: usize) -> Result<(), PolyError> {
    if a.degree().is_some_and(|d| d >= dv) || b.degree().is_some_and(|d| d >= du) {
        return Err(PolyError::DegreeBound(format!(
            "Bezout coefficients of degrees {:?}, {:?} exceed bounds {dv}, {du}",
            a.degree(),
            b.degree()
        )));
    }
    Ok(())
}

fn product_of_linears(field: &Arc<FieldCtx>, roots: &[FieldElement]) -> Poly {
    let mut coeffs = vec![field.one()];
    for &r in roots {
        let neg = field.neg(r);
        let mut next = vec![field.zero(); coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.add(next[i], field.mul(c, neg));
        }
        coeffs = next;
    }
    Poly::from_coeffs(field, coeffs)
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        self.same_field(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect();
        Poly::from_coeffs(f, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self.same_field(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect();
        Poly::from_coeffs(f, coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.same_field(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }
}
