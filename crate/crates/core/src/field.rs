//! Exact arithmetic in GF(p^s).
//!
//! Elements are stored as their coefficient vector over GF(p), packed into a
//! single integer with the degree-0 coefficient as the least significant
//! base-p digit. The packed integer doubles as the element's position in the
//! canonical order, so `0, 1, ..., p-1` are the prime-subfield elements and
//! `x` (for `s > 1`) is the element with value `p`.
//!
//! A field is fully determined by `(p, s)`: the modulus and the primitive
//! element are picked deterministically, so elements are tagged with the field
//! size `q` and two contexts built from the same `(p, s)` are interchangeable.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{s} exceeds the cap of {MAX_FIELD_SIZE}")]
    TooLarge { p: u32, s: u32 },
    #[error("inversion of zero")]
    InverseOfZero,
    #[error("value {value} is out of range for GF({q})")]
    OutOfRange { value: u64, q: u32 },
    #[error("cannot parse {0:?} as a field element")]
    Parse(String),
}

/// An element of some GF(q), tagged with `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    field: u32,
    value: u32,
}

impl FieldElement {
    /// Position of the element in the canonical order of its field.
    pub fn value(self) -> u32 {
        self.value
    }

    /// Size of the field the element belongs to.
    pub fn field_size(self) -> u32 {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

/// Which evaluation points a Reed-Solomon code uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EvalMode {
    /// `0, 1, α, ..., α^(q-2)`; length `q`.
    #[serde(rename = "full")]
    Full,
    /// `1, α, ..., α^(q-2)`; length `q - 1`.
    #[serde(rename = "nonextended")]
    NonExtended,
}

impl fmt::Display for EvalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalMode::Full => f.write_str("full"),
            EvalMode::NonExtended => f.write_str("nonextended"),
        }
    }
}

/// Arithmetic context for GF(p^s).
#[derive(Debug)]
pub struct FieldCtx {
    p: u32,
    s: u32,
    q: u32,
    /// Monic irreducible of degree `s`, low degree first (length `s + 1`).
    modulus: Vec<u32>,
    primitive: FieldElement,
    /// Distinct primes dividing `q - 1`.
    group_factors: Vec<u64>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for FieldCtx {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power into `(p, s)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut s = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        s += 1;
    }
    Some((p as u32, s))
}

/// Builds GF(p^s) with the lexicographically smallest monic irreducible
/// modulus and the smallest primitive element in canonical order.
pub fn make_field(p: u32, s: u32) -> Result<Arc<FieldCtx>, FieldError> {
    if !is_prime(p as u64) {
        return Err(FieldError::NotPrime(p));
    }
    if s == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let q = (p as u64)
        .checked_pow(s)
        .filter(|&q| q <= MAX_FIELD_SIZE as u64)
        .ok_or(FieldError::TooLarge { p, s })? as u32;

    let modulus = if s == 1 {
        vec![0, 1]
    } else {
        smallest_irreducible(p, s as usize)
    };
    let group_factors = prime_factors(q as u64 - 1);
    let mut ctx = FieldCtx {
        p,
        s,
        q,
        modulus,
        primitive: FieldElement { field: q, value: 1 },
        group_factors,
    };
    ctx.primitive = (1..q)
        .map(|value| FieldElement { field: q, value })
        .find(|&a| ctx.is_generator(a))
        .expect("the multiplicative group of a finite field is cyclic");
    Ok(Arc::new(ctx))
}

/// Builds GF(q) for a prime power `q`.
pub fn make_field_of_size(q: u32) -> Result<Arc<FieldCtx>, FieldError> {
    match prime_power(q as u64) {
        Some((p, s)) => make_field(p, s),
        None => Err(FieldError::NotPrime(q)),
    }
}

fn smallest_irreducible(p: u32, s: usize) -> Vec<u32> {
    let total = (p as u64).pow(s as u32);
    for t in 0..total {
        // c0 is the most significant digit of t: lexicographic, low degree first.
        let mut coeffs = vec![0u32; s + 1];
        let mut rest = t;
        for i in (0..s).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[s] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for t in 0..count {
            let mut g = vec![0u32; d + 1];
            let mut rest = t;
            for c in g.iter_mut().take(d) {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            g[d] = 1;
            if divides_mod_p(&g, f, p) {
                return false;
            }
        }
    }
    true
}

/// Whether monic `g` divides `f` over GF(p).
fn divides_mod_p(g: &[u32], f: &[u32], p: u32) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    for top in (dg..r.len()).rev() {
        let c = r[top] % p;
        if c == 0 {
            continue;
        }
        for (i, &gi) in g.iter().enumerate() {
            let j = top - dg + i;
            r[j] = (r[j] + (p - c) * gi as u64) % p;
        }
    }
    r[..dg].iter().all(|&c| c % p == 0)
}

impl FieldCtx {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The monic modulus, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> FieldElement {
        self.primitive
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.q,
            value: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.q,
            value: 1,
        }
    }

    /// The element at position `value` of the canonical order.
    pub fn element(&self, value: u32) -> Result<FieldElement, FieldError> {
        if value < self.q {
            Ok(FieldElement {
                field: self.q,
                value,
            })
        } else {
            Err(FieldError::OutOfRange {
                value: value as u64,
                q: self.q,
            })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let value = n.rem_euclid(self.p as i64) as u32;
        FieldElement {
            field: self.q,
            value,
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.s as usize {
            return Err(FieldError::Parse(format!("{coeffs:?}")));
        }
        let mut value: u64 = 0;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(FieldError::OutOfRange {
                    value: c as u64,
                    q: self.p,
                });
            }
            value = value * self.p as u64 + c as u64;
        }
        Ok(FieldElement {
            field: self.q,
            value: value as u32,
        })
    }

    /// Coefficients over GF(p), low degree first, always `s` of them.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        self.check(a);
        let mut out = Vec::with_capacity(self.s as usize);
        let mut v = a.value;
        for _ in 0..self.s {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.field == self.q
    }

    /// Mixing elements of different fields is a contract violation.
    #[inline]
    fn check(&self, a: FieldElement) {
        assert_eq!(
            a.field, self.q,
            "element of GF({}) used in GF({}) arithmetic",
            a.field, self.q
        );
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let value = if self.s == 1 {
            (a.value + b.value) % self.p
        } else {
            self.digitwise(a.value, b.value, |x, y| (x + y) % self.p)
        };
        FieldElement {
            field: self.q,
            value,
        }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let value = if self.s == 1 {
            (a.value + self.p - b.value) % self.p
        } else {
            self.digitwise(a.value, b.value, |x, y| (x + self.p - y) % self.p)
        };
        FieldElement {
            field: self.q,
            value,
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.sub(self.zero(), a)
    }

    fn digitwise(&self, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.s {
            out += op(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let value = if self.s == 1 {
            ((a.value as u64 * b.value as u64) % self.p as u64) as u32
        } else {
            self.mul_extension(a.value, b.value)
        };
        FieldElement {
            field: self.q,
            value,
        }
    }

    fn mul_extension(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let s = self.s as usize;
        let mut da = [0u64; 16];
        let mut db = [0u64; 16];
        let (mut x, mut y) = (a as u64, b as u64);
        for i in 0..s {
            da[i] = x % p;
            db[i] = y % p;
            x /= p;
            y /= p;
        }
        let mut prod = [0u64; 32];
        for i in 0..s {
            if da[i] == 0 {
                continue;
            }
            for j in 0..s {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for top in (s..2 * s - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            // x^s = -(m_0 + m_1 x + ... + m_{s-1} x^{s-1})
            for i in 0..s {
                let j = top - s + i;
                prod[j] = (prod[j] + (p - c) * self.modulus[i] as u64) % p;
            }
            prod[top] = 0;
        }
        let mut value = 0u64;
        for i in (0..s).rev() {
            value = value * p + prod[i];
        }
        value as u32
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        self.check(a);
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a);
        if a.is_zero() {
            return Err(FieldError::InverseOfZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `α^e` for any integer exponent, reduced modulo `q - 1`.
    pub fn alpha_pow(&self, e: i64) -> FieldElement {
        let e = e.rem_euclid(self.q as i64 - 1) as u64;
        self.pow(self.primitive, e)
    }

    /// Multiplicative order; `None` for zero.
    pub fn order(&self, a: FieldElement) -> Option<u64> {
        self.check(a);
        if a.is_zero() {
            return None;
        }
        let mut order = self.q as u64 - 1;
        for &l in &self.group_factors {
            while order.is_multiple_of(l) && self.pow(a, order / l) == self.one() {
                order /= l;
            }
        }
        Some(order)
    }

    fn is_generator(&self, a: FieldElement) -> bool {
        let n = self.q as u64 - 1;
        !a.is_zero()
            && self
                .group_factors
                .iter()
                .all(|&l| self.pow(a, n / l) != self.one())
    }

    /// All `q` elements, `0` first, ordered by packed coefficient value.
    pub fn canonical_order(&self) -> Vec<FieldElement> {
        (0..self.q)
            .map(|value| FieldElement {
                field: self.q,
                value,
            })
            .collect()
    }

    /// The nonzero elements in canonical order.
    pub fn nonzero_elements(&self) -> Vec<FieldElement> {
        (1..self.q)
            .map(|value| FieldElement {
                field: self.q,
                value,
            })
            .collect()
    }

    /// Evaluation points of the Reed-Solomon code: `0` (full mode only)
    /// followed by `1, α, α^2, ..., α^(q-2)`.
    pub fn eval_points(&self, mode: EvalMode) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(self.q as usize);
        if mode == EvalMode::Full {
            out.push(self.zero());
        }
        let mut x = self.one();
        for _ in 0..self.q - 1 {
            out.push(x);
            x = self.mul(x, self.primitive);
        }
        out
    }

    /// Decimal residue for prime fields, `[c0,c1,...]` otherwise.
    pub fn render(&self, a: FieldElement) -> String {
        self.check(a);
        if self.s == 1 {
            a.value.to_string()
        } else {
            let digits: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
            format!("[{}]", digits.join(","))
        }
    }

    /// Inverse of [`FieldCtx::render`].
    pub fn parse(&self, text: &str) -> Result<FieldElement, FieldError> {
        let text = text.trim();
        let bad = || FieldError::Parse(text.to_string());
        if let Some(inner) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let coeffs = inner
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            if coeffs.len() != self.s as usize {
                return Err(bad());
            }
            self.from_coeffs(&coeffs)
        } else if self.s == 1 {
            let value: u32 = text.parse().map_err(|_| bad())?;
            self.element(value)
        } else {
            Err(bad())
        }
    }

    /// Renders the modulus as a polynomial over GF(p).
    pub fn render_modulus(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            terms.push(match i {
                0 => coef,
                1 if coef.is_empty() => "x".to_string(),
                1 => format!("{coef}*x"),
                _ if coef.is_empty() => format!("x^{i}"),
                _ => format!("{coef}*x^{i}"),
            });
        }
        terms.join(" + ")
    }
}
