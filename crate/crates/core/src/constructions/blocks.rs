//! Constructions built from products over consecutive blocks of the field.

use std::sync::Arc;

use crate::code::CodeParams;
use crate::field::{EvalMode, FieldCtx, FieldElement};
use crate::oracle::{frameproof_check, Coalition, OracleError};
use crate::poly::Poly;

use super::{consecutive_blocks, first_distinct, ConstructionError, TheoremId, WitnessPair};

fn block_poly(field: &Arc<FieldCtx>, block: &[FieldElement]) -> Result<Poly, ConstructionError> {
    Ok(Poly::from_roots(field, block)?)
}

fn fp_guard(field: &FieldCtx, c: usize) -> Result<(), ConstructionError> {
    let q = field.q();
    if c < 2 {
        return Err(ConstructionError::CTooSmall(c));
    }
    if c >= q as usize {
        return Err(ConstructionError::CNotBelowQ { c, q });
    }
    if (q as usize).is_multiple_of(c) {
        return Err(ConstructionError::CDividesQ { c, q });
    }
    Ok(())
}

/// `f_i` are the seeds, `g_i = f_i + ∏_{a ∈ A_i} (x - a)`.
///
/// Seeds default to the first `c` constants in canonical order and must be
/// distinct of degree at most `⌈q/c⌉`. Blocks are consecutive, the first
/// `q mod c` of size `⌈q/c⌉`; the point order falls back to other candidates
/// only if the canonical one makes two `g_i` coincide.
pub fn construct_fp_block(
    field: &Arc<FieldCtx>,
    c: usize,
    seeds: Option<&[Poly]>,
) -> Result<WitnessPair, ConstructionError> {
    fp_guard(field, c)?;
    let budget = (field.q() as usize).div_ceil(c);
    let seeds: Vec<Poly> = match seeds {
        Some(s) => s.to_vec(),
        None => field
            .canonical_order()
            .into_iter()
            .take(c)
            .map(|a| Poly::constant(field, a))
            .collect(),
    };
    if seeds.len() != c {
        return Err(ConstructionError::SeedCount {
            expected: c,
            got: seeds.len(),
        });
    }
    for (i, s) in seeds.iter().enumerate() {
        if seeds[..i].contains(s) {
            return Err(ConstructionError::DuplicateSeeds);
        }
        if let Some(degree) = s.degree().filter(|&d| d > budget) {
            return Err(ConstructionError::SeedDegree {
                degree,
                max: budget,
            });
        }
    }
    first_distinct(field, |order| {
        let blocks = consecutive_blocks(order, c);
        let mut v = Vec::with_capacity(c);
        for (seed, block) in seeds.iter().zip(&blocks) {
            v.push(seed + &block_poly(field, block)?);
        }
        WitnessPair::assemble(
            TheoremId::FpBlock,
            field,
            EvalMode::Full,
            c,
            seeds.clone(),
            v,
            blocks,
        )
    })
}

/// The constant-seed degeneration of [`construct_fp_block`]: every seed is
/// the monomial `x`, so `x` itself is a descendant of `V = {x + p_i}`.
#[derive(Clone, Debug)]
pub struct FrameproofDemo {
    pub field: Arc<FieldCtx>,
    pub framed: Poly,
    pub coalition: Vec<Poly>,
    pub max_degree: usize,
    pub partition: Vec<Vec<FieldElement>>,
}

impl FrameproofDemo {
    pub fn code_params(&self) -> CodeParams {
        CodeParams::new(&self.field, EvalMode::Full, self.max_degree + 1)
            .expect("max degree stays below q")
    }

    /// Whether the encoding of `framed` is produced by the coalition.
    pub fn is_framed(&self) -> Result<bool, OracleError> {
        let params = self.code_params();
        let members = self
            .coalition
            .iter()
            .map(|p| params.encode(p))
            .collect::<Result<Vec<_>, _>>()?;
        let word = params.encode(&self.framed)?;
        Ok(!frameproof_check(&word, &Coalition::new(members)?)?)
    }
}

pub fn frameproof_remark(
    field: &Arc<FieldCtx>,
    c: usize,
) -> Result<FrameproofDemo, ConstructionError> {
    fp_guard(field, c)?;
    let blocks = consecutive_blocks(&field.canonical_order(), c);
    let x = Poly::x(field);
    let coalition = blocks
        .iter()
        .map(|b| Ok(&x + &block_poly(field, b)?))
        .collect::<Result<Vec<_>, ConstructionError>>()?;
    let max_degree = super::achieved_degree(coalition.iter().chain([&x]));
    Ok(FrameproofDemo {
        field: field.clone(),
        framed: x,
        coalition,
        max_degree,
        partition: blocks,
    })
}

/// Three blocks `A11, A12, A21`; `f1 = 0`, `f2 = p21 - p11`, `g1 = -p11`,
/// `g2 = -p12`.
///
/// `f1 = g1` on `A11`, `f1 = g2` on `A12`, `f2 = g1` on `A21`.
pub fn construct_c2_third(field: &Arc<FieldCtx>) -> Result<WitnessPair, ConstructionError> {
    let q = field.q();
    if q < 3 {
        return Err(ConstructionError::FieldTooSmall { q, min: 3 });
    }
    first_distinct(field, |order| {
        let blocks = consecutive_blocks(order, 3);
        let p11 = block_poly(field, &blocks[0])?;
        let p12 = block_poly(field, &blocks[1])?;
        let p21 = block_poly(field, &blocks[2])?;
        let u = vec![Poly::zero(field), &p21 - &p11];
        let v = vec![-&p11, -&p12];
        WitnessPair::assemble(TheoremId::C2Third, field, EvalMode::Full, 2, u, v, blocks)
    })
}

/// Blocks `A_1..A_{2c-1}` as in [`construct_fp_block`]; `f_1 = 0`, `f_{i+1} = p_{c+i} - p_i`, `g_i = -p_i`.
///
/// `f_1 = g_i` on `A_i` for `i <= c` and `f_{i+1} = g_i` on `A_{c+i}`.
pub fn construct_general_2cm1(
    field: &Arc<FieldCtx>,
    c: usize,
) -> Result<WitnessPair, ConstructionError> {
    let q = field.q();
    if c < 2 {
        return Err(ConstructionError::CTooSmall(c));
    }
    if (q as usize) < 2 * c - 1 {
        return Err(ConstructionError::FieldTooSmall {
            q,
            min: 2 * c as u32 - 1,
        });
    }
    first_distinct(field, |order| {
        let blocks = consecutive_blocks(order, 2 * c - 1);
        let p = blocks
            .iter()
            .map(|b| block_poly(field, b))
            .collect::<Result<Vec<_>, _>>()?;
        let mut u = vec![Poly::zero(field)];
        u.extend((0..c - 1).map(|i| &p[c + i] - &p[i]));
        let v = p[..c].iter().map(|pi| -pi).collect();
        WitnessPair::assemble(TheoremId::Gen2cm1, field, EvalMode::Full, c, u, v, blocks)
    })
}
