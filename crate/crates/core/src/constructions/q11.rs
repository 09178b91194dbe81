//! The `[11, 4, 8]` witness for two-traitor coalitions over GF(11).
//!
//! With eleven points `α1..α11`:
//! `f1 = 0`, `g1 = γ1 (x-α1)(x-α2)(x-α3)`,
//! `f2 = L + φ (x-α4)(x-α5)(x-α6)` where `L` interpolates `g1` on `α4, α5, α6`,
//! `g2 = γ (x-α7)(x-α8)(x-α9)`, and `(φ, γ)` make `f2 = g2` at `α10, α11`.

use std::sync::Arc;

use crate::field::{EvalMode, FieldCtx, FieldElement};
use crate::poly::Poly;

use super::{ConstructionError, TheoremId, WitnessPair};

const Q: u32 = 11;

/// `α_i = i + shift (mod 11)` for `i = 1..=11`.
pub fn shifted_alphas(field: &Arc<FieldCtx>, shift: i64) -> Vec<FieldElement> {
    (1..=11).map(|i| field.from_int(i + shift)).collect()
}

/// Coordinate order used for printed vectors: `1, 2, ..., 10, 0`.
pub fn listing_order(field: &Arc<FieldCtx>) -> Vec<FieldElement> {
    (1..=11).map(|i| field.from_int(i)).collect()
}

fn check_points(field: &Arc<FieldCtx>, alphas: &[FieldElement]) -> Result<(), ConstructionError> {
    if field.q() != Q {
        return Err(ConstructionError::WrongField {
            expected: Q,
            got: field.q(),
        });
    }
    let mut sorted = alphas.to_vec();
    sorted.sort();
    if sorted != field.canonical_order() {
        return Err(ConstructionError::NotPermutation);
    }
    Ok(())
}

/// The two sides of the solvability condition:
/// `P7(α10) P4(α11)` and `P4(α10) P7(α11)`, where `P4` vanishes on
/// `α4..α6` and `P7` on `α7..α9`. The system is solvable iff they differ.
pub fn q11_products(
    field: &Arc<FieldCtx>,
    alphas: &[FieldElement],
) -> Result<(FieldElement, FieldElement), ConstructionError> {
    check_points(field, alphas)?;
    let p4 = Poly::from_roots(field, &alphas[3..6])?;
    let p7 = Poly::from_roots(field, &alphas[6..9])?;
    let (a10, a11) = (alphas[9], alphas[10]);
    Ok((
        field.mul(p7.eval(a10), p4.eval(a11)),
        field.mul(p4.eval(a10), p7.eval(a11)),
    ))
}

pub fn construct_q11_c2(
    field: &Arc<FieldCtx>,
    alphas: &[FieldElement],
    gamma1: FieldElement,
) -> Result<WitnessPair, ConstructionError> {
    let (lhs, rhs) = q11_products(field, alphas)?;
    if gamma1.is_zero() {
        return Err(ConstructionError::ZeroGamma);
    }
    if lhs == rhs {
        return Err(ConstructionError::SingularSystem(field.render(lhs)));
    }
    let f = field;
    let det = f.sub(lhs, rhs);
    let g1 = Poly::from_roots(f, &alphas[0..3])?.scale(gamma1);
    let p4 = Poly::from_roots(f, &alphas[3..6])?;
    let p7 = Poly::from_roots(f, &alphas[6..9])?;
    let samples: Vec<(FieldElement, FieldElement)> =
        alphas[3..6].iter().map(|&a| (a, g1.eval(a))).collect();
    let interp = Poly::interpolate(f, &samples)?;
    let (a10, a11) = (alphas[9], alphas[10]);
    let (l10, l11) = (interp.eval(a10), interp.eval(a11));
    let phi_num = f.sub(f.mul(l10, p7.eval(a11)), f.mul(p7.eval(a10), l11));
    let gamma_num = f.sub(f.mul(p4.eval(a11), l10), f.mul(p4.eval(a10), l11));
    let phi = f.div(phi_num, det).expect("determinant is nonzero");
    let gamma = f.div(gamma_num, det).expect("determinant is nonzero");

    let f2 = &interp + &p4.scale(phi);
    let g2 = p7.scale(gamma);
    let partition = vec![
        alphas[0..3].to_vec(),
        alphas[3..6].to_vec(),
        alphas[6..9].to_vec(),
        alphas[9..11].to_vec(),
    ];
    let mut w = WitnessPair::assemble(
        TheoremId::Q11C2,
        f,
        EvalMode::Full,
        2,
        vec![Poly::zero(f), f2],
        vec![g1, g2],
        partition,
    )?;
    w.points = Some(listing_order(f));
    Ok(w)
}
