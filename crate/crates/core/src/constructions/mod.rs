//! Generators of non-separated coalition pairs for Reed-Solomon codes.
//!
//! Every generator returns a [`WitnessPair`]: two disjoint families of
//! polynomials whose encodings agree somewhere at every coordinate, together
//! with the smallest code (max degree `D`, distance `n - D`) containing them.
//! Generators check their own hypotheses; [`verify_witness`] re-checks the
//! result against the brute-force oracles.

mod bezout3;
mod blocks;
mod json;
mod multiplicative;
mod q11;
mod verify;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CodeError, CodeParams};
use crate::field::{EvalMode, FieldCtx, FieldElement};
use crate::poly::{Poly, PolyError};

pub use bezout3::construct_c3_eighth;
pub use blocks::{
    construct_c2_third, construct_fp_block, construct_general_2cm1, frameproof_remark,
    FrameproofDemo,
};
pub use json::{JsonError, WitnessDocument};
pub use multiplicative::{
    cilleruelo_ceil, cilleruelo_floor, construct_lin_cilleruelo, construct_lin_factor,
    construct_m2_div, difference_cover_missing, even_power_split, factor_roots, min_cover_bound,
};
pub use q11::{construct_q11_c2, listing_order, q11_products, shifted_alphas};
pub use verify::{verify_witness, Clause, VerifyFailure, VerifyReport};

/// Which construction produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Blocks of size about `q/c` on top of arbitrary seeds; `d = ⌊q - q/c⌋`.
    #[serde(rename = "fp_block")]
    FpBlock,
    /// The `[11, 4, 8]` code over GF(11) with `c = 2`.
    #[serde(rename = "q11_c2")]
    Q11C2,
    /// Three blocks, `c = 2`, degree about `q/3`.
    #[serde(rename = "c2_third")]
    C2Third,
    /// Eight blocks glued by Bezout identities, `c = 3`, degree about `q/4`.
    #[serde(rename = "c3_eighth")]
    C3Eighth,
    /// `2c - 1` blocks, any `c`, degree about `q/(2c-1)`.
    #[serde(rename = "gen_2cm1")]
    Gen2cm1,
    /// Monomials and constants when `m^2 | q - 1`; nonextended code.
    #[serde(rename = "m2_div")]
    M2Div,
    /// Linear witnesses from a difference cover by powers of `α`.
    #[serde(rename = "lin_cilleruelo")]
    LinCilleruelo,
    /// Linear witnesses from a coprime factorisation `q - 1 = r s`.
    #[serde(rename = "lin_factor")]
    LinFactor,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::FpBlock,
        TheoremId::Q11C2,
        TheoremId::C2Third,
        TheoremId::C3Eighth,
        TheoremId::Gen2cm1,
        TheoremId::M2Div,
        TheoremId::LinCilleruelo,
        TheoremId::LinFactor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::FpBlock => "fp_block",
            TheoremId::Q11C2 => "q11_c2",
            TheoremId::C2Third => "c2_third",
            TheoremId::C3Eighth => "c3_eighth",
            TheoremId::Gen2cm1 => "gen_2cm1",
            TheoremId::M2Div => "m2_div",
            TheoremId::LinCilleruelo => "lin_cilleruelo",
            TheoremId::LinFactor => "lin_factor",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown theorem id {s:?}"))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("coalition size c = {0} must be at least 2")]
    CTooSmall(usize),
    #[error("c = {c} divides q = {q}; that regime has its own additive construction and is not handled here")]
    CDividesQ { c: usize, q: u32 },
    #[error("c = {c} must be below q = {q}")]
    CNotBelowQ { c: usize, q: u32 },
    #[error("GF({q}) is too small: need q >= {min}")]
    FieldTooSmall { q: u32, min: u32 },
    #[error("expected {expected} seed polynomials, got {got}")]
    SeedCount { expected: usize, got: usize },
    #[error("seed polynomials must be pairwise distinct")]
    DuplicateSeeds,
    #[error("seed of degree {degree} exceeds the budget {max}")]
    SeedDegree { degree: usize, max: usize },
    #[error("construction is specific to GF({expected}), got GF({got})")]
    WrongField { expected: u32, got: u32 },
    #[error("evaluation points must be a permutation of the field")]
    NotPermutation,
    #[error("leading coefficient must be nonzero")]
    ZeroGamma,
    #[error("the interpolation system is singular: both determinant products equal {0}")]
    SingularSystem(String),
    #[error("m = {0} must be at least 2")]
    MTooSmall(usize),
    #[error("m^2 does not divide q-1 (m = {m}, q = {q})")]
    MSquaredNotDividing { m: usize, q: u32 },
    #[error("c = {c} is below m = {m}")]
    CBelowM { c: usize, m: usize },
    #[error("2q^(3/4) exceeds q - 1 for q = {q} (would need c = {c} distinct powers)")]
    HypothesisUnsatisfiable { q: u32, c: usize },
    #[error("difference cover incomplete: {missing} is not a difference of the chosen powers")]
    CoverageFailure { missing: String },
    #[error("r * s = {product} differs from q - 1 = {expected}")]
    FactorMismatch { product: usize, expected: u32 },
    #[error("gcd(r, s) = {gcd} is not 1 (r = {r}, s = {s})")]
    FactorsNotCoprime { r: usize, s: usize, gcd: usize },
    #[error("factor split needs odd q = p^(2t); got q = {0}")]
    NotOddEvenPower(u32),
    #[error("not enough unused constants to pad both coalitions to size {0}")]
    PaddingExhausted(usize),
    #[error("internal error: {0}")]
    Collision(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Two disjoint polynomial families whose encodings are not separated.
#[derive(Clone, Debug)]
pub struct WitnessPair {
    pub theorem: TheoremId,
    pub field: Arc<FieldCtx>,
    pub mode: EvalMode,
    /// Explicit coordinate order; `None` means the default evaluation order.
    pub points: Option<Vec<FieldElement>>,
    pub c: usize,
    pub u: Vec<Poly>,
    pub v: Vec<Poly>,
    /// Largest degree over both families (zero polynomials count as 0).
    pub max_degree: usize,
    /// Minimum distance `n - max_degree` of the smallest code containing both families.
    pub claimed_d: usize,
    /// Blocks of evaluation points the construction is built on, if any.
    pub partition: Vec<Vec<FieldElement>>,
}

impl WitnessPair {
    /// Fills in the degree bookkeeping and rejects repeated or shared members.
    pub(crate) fn assemble(
        theorem: TheoremId,
        field: &Arc<FieldCtx>,
        mode: EvalMode,
        c: usize,
        u: Vec<Poly>,
        v: Vec<Poly>,
        partition: Vec<Vec<FieldElement>>,
    ) -> Result<Self, ConstructionError> {
        for (name, family) in [("U", &u), ("V", &v)] {
            for (i, p) in family.iter().enumerate() {
                if family[..i].contains(p) {
                    return Err(ConstructionError::Collision(format!(
                        "{theorem}: {name} repeats the polynomial {p}"
                    )));
                }
            }
        }
        if let Some(p) = u.iter().find(|p| v.contains(p)) {
            return Err(ConstructionError::Collision(format!(
                "{theorem}: {p} lies in both coalitions"
            )));
        }
        let n = field.eval_points(mode).len();
        let max_degree = achieved_degree(u.iter().chain(&v));
        Ok(WitnessPair {
            theorem,
            field: field.clone(),
            mode,
            points: None,
            c,
            u,
            v,
            max_degree,
            claimed_d: n - max_degree,
            partition,
        })
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    /// Coordinates in encoding order.
    pub fn points(&self) -> Vec<FieldElement> {
        self.points
            .clone()
            .unwrap_or_else(|| self.field.eval_points(self.mode))
    }

    pub fn n(&self) -> usize {
        self.field.eval_points(self.mode).len()
    }

    /// The smallest Reed-Solomon code containing every witness polynomial.
    pub fn code_params(&self) -> Result<CodeParams, CodeError> {
        CodeParams::with_points(&self.field, self.mode, self.max_degree + 1, self.points())
    }

    /// The distance the underlying theorem states for these parameters.
    pub fn stated_d(&self) -> usize {
        let q = self.q() as usize;
        match self.theorem {
            TheoremId::FpBlock => q - q.div_ceil(self.c),
            TheoremId::Q11C2 => 8,
            TheoremId::C2Third => q - q / 3,
            TheoremId::C3Eighth => q - 2 * (q / 8) - 1,
            TheoremId::Gen2cm1 => q - q / (2 * self.c - 1) - 1,
            // q - (q-1)/m^2 with (q-1)/m^2 the monomial degree
            TheoremId::M2Div => q - self.max_degree,
            TheoremId::LinCilleruelo | TheoremId::LinFactor => q - 1,
        }
    }

    /// Adds unused constant polynomials until both families have `c` members.
    pub fn pad_to_c(&self) -> Result<WitnessPair, ConstructionError> {
        let needed = (self.c - self.u.len().min(self.c)) + (self.c - self.v.len().min(self.c));
        let fresh: Vec<Poly> = self
            .field
            .canonical_order()
            .into_iter()
            .map(|a| Poly::constant(&self.field, a))
            .filter(|p| !self.u.contains(p) && !self.v.contains(p))
            .take(needed)
            .collect();
        if fresh.len() < needed {
            return Err(ConstructionError::PaddingExhausted(self.c));
        }
        let mut fresh = fresh.into_iter();
        let mut out = self.clone();
        while out.u.len() < out.c {
            out.u.push(fresh.next().unwrap());
        }
        while out.v.len() < out.c {
            out.v.push(fresh.next().unwrap());
        }
        Ok(out)
    }
}

pub(crate) fn achieved_degree<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> usize {
    polys
        .into_iter()
        .filter_map(Poly::degree)
        .max()
        .unwrap_or(0)
}

/// Largest max-degree each construction may use.
///
/// `m` is only consulted for [`TheoremId::M2Div`].
pub fn degree_budget(theorem: TheoremId, q: u32, c: usize, m: Option<usize>) -> usize {
    let q = q as usize;
    match theorem {
        TheoremId::FpBlock => q.div_ceil(c),
        TheoremId::Q11C2 => 3,
        TheoremId::C2Third => q / 3 + 1,
        TheoremId::C3Eighth => 2 * (q / 8) + 1,
        TheoremId::Gen2cm1 => q / (2 * c - 1) + 1,
        TheoremId::M2Div => {
            let m = m.expect("m is needed for the m2_div budget");
            (q - 1) / (m * m)
        }
        TheoremId::LinCilleruelo | TheoremId::LinFactor => 1,
    }
}

/// Splits `points` into `count` consecutive blocks, the `len % count` larger
/// blocks first.
pub(crate) fn consecutive_blocks(points: &[FieldElement], count: usize) -> Vec<Vec<FieldElement>> {
    let (l, r) = (points.len() / count, points.len() % count);
    let mut out = Vec::with_capacity(count);
    let mut start = 0;
    for i in 0..count {
        let size = if i < r { l + 1 } else { l };
        out.push(points[start..start + size].to_vec());
        start += size;
    }
    out
}

/// Point orders that block generators slice, in the order they are tried:
/// canonical, reversed canonical, `0, 1, α, α², ...`, its reverse, then the
/// nontrivial rotations of the canonical order, and finally permutations of
/// the canonical order in lexicographic order (at most [`MAX_PERMUTATIONS`]).
pub(crate) fn candidate_orders(field: &FieldCtx) -> impl Iterator<Item = Vec<FieldElement>> {
    let canonical = field.canonical_order();
    let powers = field.eval_points(EvalMode::Full);
    let rev = |v: &Vec<FieldElement>| v.iter().rev().copied().collect::<Vec<_>>();
    let fixed = vec![
        canonical.clone(),
        rev(&canonical),
        powers.clone(),
        rev(&powers),
    ];
    let q = canonical.len();
    let rotations = (1..q).map({
        let canonical = canonical.clone();
        move |k| {
            let mut o = canonical.clone();
            o.rotate_left(k);
            o
        }
    });
    let permutations = canonical
        .into_iter()
        .permutations(q)
        .skip(1)
        .take(MAX_PERMUTATIONS);
    fixed.into_iter().chain(rotations).chain(permutations)
}

/// Cap on the permutation tail of [`candidate_orders`].
pub(crate) const MAX_PERMUTATIONS: usize = 200_000;

/// Runs `build` on each candidate order and returns the first result that is
/// not a member collision.
pub(crate) fn first_distinct(
    field: &FieldCtx,
    mut build: impl FnMut(&[FieldElement]) -> Result<WitnessPair, ConstructionError>,
) -> Result<WitnessPair, ConstructionError> {
    let mut last = None;
    for order in candidate_orders(field) {
        match build(&order) {
            Err(e @ ConstructionError::Collision(_)) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one candidate order"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn blocks_larger_first() {
        let f = make_field(11, 1).unwrap();
        let pts = f.canonical_order();
        let b = consecutive_blocks(&pts, 2);
        assert_eq!((b[0].len(), b[1].len()), (6, 5));
        let b = consecutive_blocks(&pts, 5);
        let sizes: Vec<usize> = b.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 2, 2, 2, 2]);
        assert_eq!(b.concat(), pts);
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
            let json = serde_json::to_string(&t).unwrap();
            assert_eq!(json, format!("\"{}\"", t.as_str()));
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }
}
