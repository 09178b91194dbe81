//! Three-traitor witness glued together by polynomial Bezout identities.
//!
//! The field is cut into nine blocks `U_ij` (`U_11` empty) with products
//! `u_ij` and `u_11 = -1`. Coefficients `v_ij` are chosen so that
//! `f_i - g_j = v_ij u_ij` for every `i, j`, hence every point is a root of
//! some `f_i - g_j`.

use std::sync::Arc;

use crate::field::{EvalMode, FieldCtx, FieldElement};
use crate::poly::Poly;

use super::{consecutive_blocks, first_distinct, ConstructionError, TheoremId, WitnessPair};

/// Block indices `(i, j)` in the order the larger blocks are handed out.
///
/// `U_21` and `U_31` come first: they are the moduli of the one Bezout
/// problem with a non-constant target, whose degree must stay below
/// `deg u_31 + deg u_21`.
const BLOCK_ORDER: [(usize, usize); 8] = [
    (2, 1),
    (3, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 2),
    (3, 3),
];

/// Blocks slice the canonical order; when that makes some `v_ij` vanish (so
/// `f_i = g_j`), the next candidate point order is used instead.
pub fn construct_c3_eighth(field: &Arc<FieldCtx>) -> Result<WitnessPair, ConstructionError> {
    let q = field.q();
    if q < 8 {
        return Err(ConstructionError::FieldTooSmall { q, min: 8 });
    }
    first_distinct(field, |order| build(field, order))
}

fn build(field: &Arc<FieldCtx>, order: &[FieldElement]) -> Result<WitnessPair, ConstructionError> {
    let blocks = consecutive_blocks(order, 8);
    // grid[i-1][j-1] holds U_ij
    let mut grid: Vec<Vec<Vec<FieldElement>>> = vec![vec![Vec::new(); 3]; 3];
    for (&(i, j), block) in BLOCK_ORDER.iter().zip(blocks) {
        grid[i - 1][j - 1] = block;
    }
    let u = |i: usize, j: usize| -> Result<Poly, ConstructionError> {
        if (i, j) == (1, 1) {
            Ok(Poly::constant(field, field.from_int(-1)))
        } else {
            Ok(Poly::from_roots(field, &grid[i - 1][j - 1])?)
        }
    };
    let (u11, u12, u13) = (u(1, 1)?, u(1, 2)?, u(1, 3)?);
    let (u21, u22, u23) = (u(2, 1)?, u(2, 2)?, u(2, 3)?);
    let (u31, u32, u33) = (u(3, 1)?, u(3, 2)?, u(3, 3)?);

    let (v33, v32) = Poly::bezout_min(&u33, &u32)?;
    let (v23, v22) = Poly::bezout_min(&u23, &u22)?;
    let target = &(&v33 * &u33) - &(&v23 * &u23);
    let (v31, _v21) = Poly::bezout_target(&u31, &u21, &target)?;
    // the second glued identity has target v33 u33 - v32 u32 = 1
    let (v13, _v12) = Poly::bezout_min(&u13, &u12)?;
    let v11 = &(&(&v33 * &u33) - &(&v31 * &u31)) - &(&v13 * &u13);

    let g1 = -&(&v31 * &u31);
    let g2 = -&(&v32 * &u32);
    let g3 = -&(&v33 * &u33);
    let f1 = &g1 + &(&v11 * &u11);
    let f2 = &g2 + &(&v22 * &u22);
    let f3 = Poly::zero(field);

    let partition = grid.into_iter().flatten().collect();
    WitnessPair::assemble(
        TheoremId::C3Eighth,
        field,
        EvalMode::Full,
        3,
        vec![f1, f2, f3],
        vec![g1, g2, g3],
        partition,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::verify_witness;
    use crate::field::{make_field, make_field_of_size};

    #[test]
    fn gf17() {
        let f = make_field(17, 1).unwrap();
        let w = construct_c3_eighth(&f).unwrap();
        let sizes: Vec<usize> = w.partition.iter().map(Vec::len).collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 1);
        assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 7);
        assert!(w.partition[0].is_empty());
        assert!(w.max_degree <= 5);
        verify_witness(&w).unwrap();
    }

    #[test]
    fn gf9_needs_rotation() {
        let f = make_field(3, 2).unwrap();
        let plain = build(&f, &f.canonical_order());
        assert!(matches!(plain, Err(ConstructionError::Collision(_))));
        let w = construct_c3_eighth(&f).unwrap();
        assert_ne!(w.partition[1][0], f.zero());
        verify_witness(&w).unwrap();
    }

    #[test]
    fn gf8_singletons() {
        let f = make_field(2, 3).unwrap();
        let w = construct_c3_eighth(&f).unwrap();
        assert!(w.partition.iter().skip(1).all(|b| b.len() == 1));
        assert!(w.max_degree <= 3);
        verify_witness(&w).unwrap();
    }

    #[test]
    fn differences_factor_over_blocks() {
        for q in [8, 9, 11, 13, 16, 23, 25, 27, 29, 31, 32, 37, 41, 49, 64] {
            let f = make_field_of_size(q).unwrap();
            let w = construct_c3_eighth(&f).unwrap();
            let l = q as usize / 8;
            assert!(w.max_degree <= 2 * l + 1, "q={q}");
            for (i, fi) in w.u.iter().enumerate() {
                for (j, gj) in w.v.iter().enumerate() {
                    let diff = fi - gj;
                    for &a in &w.partition[3 * i + j] {
                        assert!(diff.eval(a).is_zero(), "q={q} i={i} j={j}");
                    }
                }
            }
        }
        assert!(construct_c3_eighth(&make_field(7, 1).unwrap()).is_err());
    }
}
