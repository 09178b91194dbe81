//! Constructions that use the cyclic structure of `F_q*`.

use std::collections::HashSet;
use std::sync::Arc;

use crate::field::{EvalMode, FieldCtx, FieldElement};
use crate::poly::Poly;

use super::{ConstructionError, TheoremId, WitnessPair};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Monomials `f_i = α^{-i(q-1)/m} x^{(q-1)/m²}` against constants
/// `g_i = α^{i(q-1)/m²}`, `0 <= i < m`, on the nonextended code.
///
/// At `α^{l m² + r m + s}` one has `f_r = g_s`.
pub fn construct_m2_div(
    field: &Arc<FieldCtx>,
    m: usize,
    c: usize,
) -> Result<WitnessPair, ConstructionError> {
    let q = field.q();
    if m < 2 {
        return Err(ConstructionError::MTooSmall(m));
    }
    let order = q as usize - 1;
    if !order.is_multiple_of(m * m) {
        return Err(ConstructionError::MSquaredNotDividing { m, q });
    }
    if c < m {
        return Err(ConstructionError::CBelowM { c, m });
    }
    let (e1, e2) = (order / m, order / (m * m));
    let u = (0..m)
        .map(|i| Poly::monomial(field, field.alpha_pow(-((i * e1) as i64)), e2))
        .collect();
    let v = (0..m)
        .map(|i| Poly::constant(field, field.alpha_pow((i * e2) as i64)))
        .collect();
    // class r*m + s holds the α^t with t ≡ r m + s (mod m²)
    let mut partition = vec![Vec::new(); m * m];
    for t in 0..order {
        partition[t % (m * m)].push(field.alpha_pow(t as i64));
    }
    WitnessPair::assemble(
        TheoremId::M2Div,
        field,
        EvalMode::NonExtended,
        c,
        u,
        v,
        partition,
    )
}

/// Smallest `t` with `t >= 2 q^{3/4}`, i.e. `t^4 >= 16 q^3`.
pub fn cilleruelo_ceil(q: u32) -> usize {
    let target = 16 * (q as u128).pow(3);
    let mut t = (2.0 * (q as f64).powf(0.75)).floor() as u128;
    while t > 0 && (t - 1).pow(4) >= target {
        t -= 1;
    }
    while t.pow(4) < target {
        t += 1;
    }
    t as usize
}

/// Largest `t` with `t <= 2 q^{3/4}`, i.e. `t^4 <= 16 q^3`.
pub fn cilleruelo_floor(q: u32) -> usize {
    let target = 16 * (q as u128).pow(3);
    let t = cilleruelo_ceil(q) as u128;
    if t.pow(4) == target {
        t as usize
    } else {
        t as usize - 1
    }
}

/// First element of `F_q`, in canonical order, that is not `α^i - α^j` for
/// `0 <= i, j < count`.
pub fn difference_cover_missing(field: &Arc<FieldCtx>, count: usize) -> Option<FieldElement> {
    let powers: Vec<FieldElement> = (0..count).map(|i| field.alpha_pow(i as i64)).collect();
    let mut covered = vec![false; field.q() as usize];
    for &a in &powers {
        for &b in &powers {
            covered[field.sub(a, b).value() as usize] = true;
        }
    }
    covered
        .iter()
        .position(|&hit| !hit)
        .map(|v| field.element(v as u32).expect("index below q"))
}

/// Least `B` such that `{α^i - α^j : 0 <= i, j <= B}` is all of `F_q`;
/// `None` when no `B` works (only GF(2), where every power is 1).
pub fn min_cover_bound(field: &Arc<FieldCtx>) -> Option<usize> {
    let q = field.q() as usize;
    let mut covered = vec![false; q];
    covered[0] = true;
    let mut count = 1;
    let mut powers: Vec<FieldElement> = Vec::new();
    for b in 0..q - 1 {
        let new = field.alpha_pow(b as i64);
        for &old in &powers {
            for d in [field.sub(new, old), field.sub(old, new)] {
                let slot = &mut covered[d.value() as usize];
                if !*slot {
                    *slot = true;
                    count += 1;
                }
            }
        }
        powers.push(new);
        if count == q {
            return Some(b);
        }
    }
    None
}

/// `f_i = x - α^i`, `g_i = -α^i` for `i = 1..=c`, `c = ⌈2 q^{3/4}⌉`.
///
/// `f_i - g_j` vanishes at `α^i - α^j`, so the pair is non-separated exactly
/// when those differences exhaust the field.
pub fn construct_lin_cilleruelo(field: &Arc<FieldCtx>) -> Result<WitnessPair, ConstructionError> {
    let q = field.q();
    let c = cilleruelo_ceil(q);
    if c > q as usize - 1 {
        return Err(ConstructionError::HypothesisUnsatisfiable { q, c });
    }
    if let Some(missing) = difference_cover_missing(field, c) {
        return Err(ConstructionError::CoverageFailure {
            missing: field.render(missing),
        });
    }
    let x = Poly::x(field);
    let powers: Vec<FieldElement> = (1..=c).map(|i| field.alpha_pow(i as i64)).collect();
    let u = powers
        .iter()
        .map(|&a| &x - &Poly::constant(field, a))
        .collect();
    let v = powers
        .iter()
        .map(|&a| Poly::constant(field, field.neg(a)))
        .collect();
    WitnessPair::assemble(
        TheoremId::LinCilleruelo,
        field,
        EvalMode::Full,
        c,
        u,
        v,
        Vec::new(),
    )
}

/// `f_i = α^{ri} x` for `i < s` against `g_j = α^{sj}` for `j < r` plus the
/// zero polynomial; requires `rs = q - 1` and `gcd(r, s) = 1`.
///
/// `f_i - g_j` vanishes only at `α^{sj - ri}`, and these `q - 1` roots are
/// distinct; the zero polynomial meets every `f_i` at 0.
pub fn construct_lin_factor(
    field: &Arc<FieldCtx>,
    r: usize,
    s: usize,
) -> Result<WitnessPair, ConstructionError> {
    let q = field.q();
    if r * s != q as usize - 1 {
        return Err(ConstructionError::FactorMismatch {
            product: r * s,
            expected: q - 1,
        });
    }
    let g = gcd(r, s);
    if g != 1 {
        return Err(ConstructionError::FactorsNotCoprime { r, s, gcd: g });
    }
    let u = (0..s)
        .map(|i| Poly::monomial(field, field.alpha_pow((r * i) as i64), 1))
        .collect();
    let mut v: Vec<Poly> = (0..r)
        .map(|j| Poly::constant(field, field.alpha_pow((s * j) as i64)))
        .collect();
    v.push(Poly::zero(field));
    let c = s.max(r + 1);
    WitnessPair::assemble(
        TheoremId::LinFactor,
        field,
        EvalMode::Full,
        c,
        u,
        v,
        Vec::new(),
    )
}

/// Coprime split `q - 1 = r s` for `q = p^{2t}` with `p` odd:
/// `r = (p^t - 1)/2`, `s = 2(p^t + 1)` when that `r` is odd, otherwise
/// `r = (p^t + 1)/2`, `s = 2(p^t - 1)`.
pub fn even_power_split(field: &Arc<FieldCtx>) -> Result<(usize, usize), ConstructionError> {
    if field.p() == 2 || !field.s().is_multiple_of(2) {
        return Err(ConstructionError::NotOddEvenPower(field.q()));
    }
    let pt = (field.p() as usize).pow(field.s() / 2);
    let low = (pt - 1) / 2;
    let split = if low % 2 == 1 {
        (low, 2 * (pt + 1))
    } else {
        (pt.div_ceil(2), 2 * (pt - 1))
    };
    debug_assert_eq!(split.0 * split.1, field.q() as usize - 1);
    Ok(split)
}

/// Roots `α^{sj - ri}` of `f_i - g_j`, as a set.
pub fn factor_roots(field: &Arc<FieldCtx>, r: usize, s: usize) -> HashSet<FieldElement> {
    let mut out = HashSet::new();
    for i in 0..s {
        for j in 0..r {
            out.insert(field.alpha_pow((s * j) as i64 - (r * i) as i64));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::verify_witness;
    use crate::field::{make_field, make_field_of_size};

    #[test]
    fn m2_gf13() {
        let f = make_field(13, 1).unwrap();
        assert_eq!(f.primitive().value(), 2);
        let w = construct_m2_div(&f, 2, 2).unwrap();
        let v: Vec<u32> = w.v.iter().map(|p| p.coeff(0).value()).collect();
        assert_eq!(v, vec![1, 8]);
        assert_eq!(w.u[0], Poly::from_ints(&f, &[0, 0, 0, 1]));
        assert_eq!(w.u[1], Poly::from_ints(&f, &[0, 0, 0, 12]));
        assert_eq!(w.u[1].render(), "12*x^3");
        assert_eq!(w.n(), 12);
        assert_eq!((w.max_degree, w.claimed_d, w.stated_d()), (3, 9, 10));
        verify_witness(&w).unwrap();
    }

    #[test]
    fn m2_guards() {
        let f5 = make_field(5, 1).unwrap();
        let w = construct_m2_div(&f5, 2, 2).unwrap();
        assert_eq!(w.max_degree, 1);
        verify_witness(&w).unwrap();
        let f11 = make_field(11, 1).unwrap();
        assert_eq!(
            construct_m2_div(&f11, 2, 2).unwrap_err().to_string(),
            "m^2 does not divide q-1 (m = 2, q = 11)"
        );
        assert!(matches!(
            construct_m2_div(&f5, 2, 1),
            Err(ConstructionError::CBelowM { .. })
        ));
    }

    #[test]
    fn cilleruelo_bounds() {
        assert_eq!((cilleruelo_floor(101), cilleruelo_ceil(101)), (63, 64));
        assert_eq!(cilleruelo_ceil(11), 13);
        // 2 * 16^{3/4} = 16 exactly
        assert_eq!((cilleruelo_floor(16), cilleruelo_ceil(16)), (16, 16));
        let f = make_field(101, 1).unwrap();
        let w = construct_lin_cilleruelo(&f).unwrap();
        assert_eq!(w.c, 64);
        assert_eq!((w.max_degree, w.claimed_d), (1, 100));
        verify_witness(&w).unwrap();
        assert!(matches!(
            construct_lin_cilleruelo(&make_field(11, 1).unwrap()),
            Err(ConstructionError::HypothesisUnsatisfiable { q: 11, c: 13 })
        ));
    }

    #[test]
    fn cover_bounds() {
        let b = |q| min_cover_bound(&make_field_of_size(q).unwrap());
        assert_eq!(b(2), None);
        assert_eq!(b(3), Some(1));
        assert_eq!(b(5), Some(2));
        assert_eq!(b(29), Some(7));
        assert_eq!(b(101), Some(16));
        let f = make_field(101, 1).unwrap();
        assert!(difference_cover_missing(&f, 17).is_none());
        assert!(difference_cover_missing(&f, 16).is_some());
    }

    #[test]
    fn lin_factor_gf13() {
        let f = make_field(13, 1).unwrap();
        let w = construct_lin_factor(&f, 3, 4).unwrap();
        assert_eq!((w.u.len(), w.v.len(), w.c), (4, 4, 4));
        assert_eq!(factor_roots(&f, 3, 4).len(), 12);
        verify_witness(&w).unwrap();
        assert!(matches!(
            construct_lin_factor(&f, 2, 6),
            Err(ConstructionError::FactorsNotCoprime { gcd: 2, .. })
        ));
        assert!(matches!(
            construct_lin_factor(&f, 2, 5),
            Err(ConstructionError::FactorMismatch { .. })
        ));
    }

    #[test]
    fn even_power_rule() {
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(even_power_split(&f9).unwrap(), (1, 8));
        let w = construct_lin_factor(&f9, 1, 8).unwrap();
        assert_eq!(w.c, 8);
        verify_witness(&w).unwrap();
        for q in [25u32, 49, 81, 121, 169, 289, 361, 625, 729] {
            let f = make_field_of_size(q).unwrap();
            let (r, s) = even_power_split(&f).unwrap();
            assert_eq!(r * s, q as usize - 1);
            assert_eq!(gcd(r, s), 1);
            let bound = 2.0 * ((q as f64).sqrt() + 1.0);
            assert!((s as f64) <= bound, "q={q}");
            verify_witness(&construct_lin_factor(&f, r, s).unwrap()).unwrap();
        }
        assert!(even_power_split(&make_field(2, 4).unwrap()).is_err());
        assert!(even_power_split(&make_field(3, 3).unwrap()).is_err());
    }
}
