//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the lines are always shown; exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use rssep::code::{CodeParams, Codeword};
use rssep::constructions::{
    cilleruelo_ceil, construct_c2_third, construct_c3_eighth, construct_fp_block,
    construct_general_2cm1, construct_lin_cilleruelo, construct_lin_factor, construct_m2_div,
    construct_q11_c2, degree_budget, difference_cover_missing, even_power_split, shifted_alphas,
    verify_witness, Clause, ConstructionError, TheoremId, WitnessDocument, WitnessPair,
};
use rssep::field::{is_prime, make_field, make_field_of_size, prime_power, EvalMode, FieldCtx};
use rssep::oracle::{
    are_separated, exhaustive_sep_check, ta_violation_check, Budget, Coalition, SepSearch,
    DEFAULT_MAX_SCAN,
};
use rssep::poly::Poly;

type Check = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Duration, Check); 8] = [
        (
            "q11 worked example, bit-exact",
            Duration::from_secs(1),
            q11_reproduction,
        ),
        (
            "construction sweep q <= 499",
            Duration::from_secs(60),
            construction_sweep,
        ),
        ("degree-budget table", Duration::from_secs(60), degree_table),
        (
            "oracle cross-check q in {3,4,5,7}",
            Duration::from_secs(120),
            oracle_cross_check,
        ),
        (
            "Bezout property suite",
            Duration::from_secs(60),
            bezout_suite,
        ),
        (
            "power-difference cover, primes 29..2000",
            Duration::from_secs(60),
            cover_sweep,
        ),
        (
            "traceability failure at q = 11",
            Duration::from_secs(10),
            ta_failure,
        ),
        (
            "negative controls",
            Duration::from_secs(60),
            negative_controls,
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = match result {
            Ok(detail) if took > *limit => {
                Err(format!("{detail}; took {took:.2?}, limit {limit:?}"))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!("criterion {} PASS {name} ({took:.2?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name} ({took:.2?}): {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn gf(q: u32) -> Arc<FieldCtx> {
    make_field_of_size(q).expect("prime power")
}

fn vector(params: &CodeParams, p: &Poly) -> Vec<u32> {
    params
        .evaluate(p)
        .symbols
        .iter()
        .map(|a| a.value())
        .collect()
}

fn ratio_mod11(f: &Arc<FieldCtx>, num: i64, den: i64) -> rssep::field::FieldElement {
    f.div(f.from_int(num), f.from_int(den))
        .expect("nonzero denominator")
}

// ---------------------------------------------------------------- criterion 1

fn q11_reproduction() -> Result<String, String> {
    let f = gf(11);
    let mut problems = Vec::new();
    let mut compare = |what: &str, got: &Poly, want: &Poly| {
        if got != want {
            problems.push(format!(
                "{what}: computed {} but expected {}",
                got.render(),
                want.render()
            ));
        }
    };

    let w = construct_q11_c2(&f, &shifted_alphas(&f, 0), f.one()).map_err(|e| e.to_string())?;
    compare("first g1", &w.v[0], &Poly::from_ints(&f, &[-6, 11, -6, 1]));
    compare("first f2", &w.u[1], &Poly::from_ints(&f, &[9, 10, 0, 5]));
    compare("first g2", &w.v[1], &Poly::from_ints(&f, &[9, 1, 1, 10]));
    let params = w.code_params().map_err(|e| e.to_string())?;
    let printed: [(&str, &Poly, [u32; 11]); 4] = [
        ("first f1 vector", &w.u[0], [0; 11]),
        (
            "first f2 vector",
            &w.u[1],
            [2, 3, 9, 6, 2, 5, 1, 9, 4, 5, 9],
        ),
        (
            "first g1 vector",
            &w.v[0],
            [0, 0, 0, 6, 2, 5, 10, 1, 6, 9, 5],
        ),
        (
            "first g2 vector",
            &w.v[1],
            [6, 1, 10, 5, 2, 6, 0, 0, 0, 5, 9],
        ),
    ];
    for (what, p, want) in printed {
        if vector(&params, p) != want {
            problems.push(format!("{what}: computed {:?}", vector(&params, p)));
        }
    }

    let w = construct_q11_c2(&f, &shifted_alphas(&f, 1), f.one()).map_err(|e| e.to_string())?;
    let mut compare = |what: &str, got: &Poly, want: &Poly| {
        if got != want {
            problems.push(format!(
                "{what}: computed {} but expected {}",
                got.render(),
                want.render()
            ));
        }
    };
    compare(
        "second g1",
        &w.v[0],
        &Poly::from_ints(&f, &[-24, 26, -9, 1]),
    );
    let f2 = Poly::from_coeffs(
        &f,
        vec![
            ratio_mod11(&f, 1737, 2),
            ratio_mod11(&f, -1715, 4),
            ratio_mod11(&f, 135, 2),
            ratio_mod11(&f, -13, 4),
        ],
    );
    compare("second f2", &w.u[1], &f2);
    compare(
        "second g2",
        &w.v[1],
        &Poly::from_ints(&f, &[720, -242, 27, -1]),
    );
    let params = w.code_params().map_err(|e| e.to_string())?;
    let printed: [(&str, &Poly, [u32; 11]); 4] = [
        ("second f1 vector", &w.u[0], [0; 11]),
        (
            "second f2 vector",
            &w.u[1],
            [9, 2, 3, 9, 6, 2, 5, 1, 9, 4, 5],
        ),
        (
            "second g1 vector",
            &w.v[0],
            [5, 0, 0, 0, 6, 2, 5, 10, 1, 6, 9],
        ),
        (
            "second g2 vector",
            &w.v[1],
            [9, 6, 1, 10, 5, 2, 6, 0, 0, 0, 5],
        ),
    ];
    for (what, p, want) in printed {
        if vector(&params, p) != want {
            problems.push(format!("{what}: computed {:?}", vector(&params, p)));
        }
    }

    if problems.is_empty() {
        Ok("both quadruples and all eight vectors match".into())
    } else {
        Err(problems.join("; "))
    }
}

// ------------------------------------------------------------ criteria 2 and 3

struct SweepCase {
    label: String,
    m: Option<usize>,
    result: Result<WitnessPair, ConstructionError>,
}

fn sweep_cases(q: u32) -> Vec<SweepCase> {
    let f = gf(q);
    let mut out = Vec::new();
    let mut push =
        |label: String, m: Option<usize>, result| out.push(SweepCase { label, m, result });
    for c in 2..=6usize {
        if c < q as usize && !(q as usize).is_multiple_of(c) {
            push(
                format!("fp_block q={q} c={c}"),
                None,
                construct_fp_block(&f, c, None),
            );
        }
        if q as usize >= 2 * c - 1 {
            push(
                format!("gen_2cm1 q={q} c={c}"),
                None,
                construct_general_2cm1(&f, c),
            );
        }
    }
    if q == 11 {
        push(
            "q11_c2".into(),
            None,
            construct_q11_c2(&f, &shifted_alphas(&f, 0), f.one()),
        );
    }
    if q >= 3 {
        push(format!("c2_third q={q}"), None, construct_c2_third(&f));
    }
    if q >= 8 {
        push(format!("c3_eighth q={q}"), None, construct_c3_eighth(&f));
    }
    let order = q as usize - 1;
    for m in (2..).take_while(|m| m * m <= order) {
        if order.is_multiple_of(m * m) {
            for c in m..=6.max(m) {
                push(
                    format!("m2_div q={q} m={m} c={c}"),
                    Some(m),
                    construct_m2_div(&f, m, c),
                );
            }
        }
    }
    if cilleruelo_ceil(q) < q as usize {
        push(
            format!("lin_cilleruelo q={q}"),
            None,
            construct_lin_cilleruelo(&f),
        );
    }
    for r in (1..=order).filter(|r| order.is_multiple_of(*r)) {
        let s = order / r;
        if gcd(r, s) == 1 {
            push(
                format!("lin_factor q={q} r={r} s={s}"),
                None,
                construct_lin_factor(&f, r, s),
            );
        }
    }
    if let Ok((r, s)) = even_power_split(&f) {
        push(
            format!("lin_factor even-power q={q}"),
            None,
            construct_lin_factor(&f, r, s),
        );
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn sweep_qs() -> Vec<u32> {
    (2..=499)
        .filter(|&q| prime_power(q as u64).is_some())
        .collect()
}

fn construction_sweep() -> Result<String, String> {
    let results: Vec<(String, Result<(), String>)> = sweep_qs()
        .par_iter()
        .flat_map_iter(|&q| sweep_cases(q))
        .map(|case| {
            let outcome = case
                .result
                .map_err(|e| e.to_string())
                .and_then(|w| verify_witness(&w).map(|_| ()).map_err(|e| e.to_string()));
            (case.label, outcome)
        })
        .collect();
    let failures: Vec<String> = results
        .iter()
        .filter_map(|(label, r)| r.as_ref().err().map(|e| format!("{label}: {e}")))
        .collect();
    if failures.is_empty() {
        Ok(format!("{} witnesses verified", results.len()))
    } else {
        Err(format!(
            "{} of {} failed, first: {}",
            failures.len(),
            results.len(),
            failures[0]
        ))
    }
}

fn degree_table() -> Result<String, String> {
    let cases: Vec<SweepCase> = sweep_qs()
        .par_iter()
        .flat_map_iter(|&q| sweep_cases(q))
        .collect();
    // theorem -> (witnesses, at budget, gap cases)
    let mut table: BTreeMap<&'static str, (usize, usize, usize)> = BTreeMap::new();
    let mut problems = Vec::new();
    for case in cases {
        let Ok(w) = case.result else {
            problems.push(format!("{}: construction failed", case.label));
            continue;
        };
        let q = w.q() as usize;
        let budget = degree_budget(w.theorem, w.q(), w.c, case.m);
        let entry = table.entry(w.theorem.as_str()).or_default();
        entry.0 += 1;
        if w.max_degree == budget {
            entry.1 += 1;
        }
        if w.max_degree > budget {
            problems.push(format!(
                "{}: degree {} over budget {budget}",
                case.label, w.max_degree
            ));
        }
        if w.claimed_d != w.n() - w.max_degree {
            problems.push(format!("{}: claimed d inconsistent", case.label));
        }
        match w.theorem {
            TheoremId::M2Div | TheoremId::LinCilleruelo | TheoremId::LinFactor
                if w.max_degree != budget =>
            {
                problems.push(format!(
                    "{}: degree {} but exactly {budget} expected",
                    case.label, w.max_degree
                ));
            }
            TheoremId::C2Third => {
                let expected = if q.is_multiple_of(3) {
                    q - q / 3
                } else {
                    q - q / 3 - 1
                };
                if w.claimed_d != expected {
                    problems.push(format!(
                        "{}: claimed d {} but {expected} expected",
                        case.label, w.claimed_d
                    ));
                }
                if !q.is_multiple_of(3) {
                    entry.2 += 1;
                }
            }
            _ => {}
        }
    }
    let rows: Vec<String> = table
        .iter()
        .map(|(t, (n, at, gap))| {
            if *gap > 0 {
                format!("{t} {n} ({at} at budget, {gap} one below the stated distance)")
            } else {
                format!("{t} {n} ({at} at budget)")
            }
        })
        .collect();
    if problems.is_empty() {
        Ok(rows.join(", "))
    } else {
        Err(format!(
            "{} problems, first: {}",
            problems.len(),
            problems[0]
        ))
    }
}

// ---------------------------------------------------------------- criterion 4

fn oracle_cross_check() -> Result<String, String> {
    let budget = Budget {
        max_codewords: 256,
        max_work: 1_000_000_000,
    };
    let mut problems = Vec::new();
    let (mut separated, mut found, mut refused) = (0, 0, 0);
    for q in [3u32, 4, 5, 7] {
        let f = gf(q);
        for mode in [EvalMode::Full, EvalMode::NonExtended] {
            let n = f.eval_points(mode).len();
            for k in 1..=n {
                let params = CodeParams::new(&f, mode, k).map_err(|e| e.to_string())?;
                let d = params.d();
                let outcome = match exhaustive_sep_check(&params, 2, &budget) {
                    Ok(o) => o,
                    Err(_) => {
                        refused += 1;
                        continue;
                    }
                };
                let above = 4 * d > 3 * n;
                match &outcome {
                    SepSearch::AllSeparated => separated += 1,
                    SepSearch::NotSeparated { u, v } => {
                        found += 1;
                        if above {
                            problems
                                .push(format!("GF({q}) {mode} k={k}: non-separated above n - n/4"));
                        }
                        let enc = |ps: &[Poly]| {
                            Coalition::new(ps.iter().map(|p| params.evaluate(p)).collect())
                        };
                        let sep = are_separated(&enc(u).unwrap(), &enc(v).unwrap()).unwrap();
                        if sep.is_separated() {
                            problems
                                .push(format!("GF({q}) {mode} k={k}: reported pair is separated"));
                        }
                    }
                }
                if above && outcome != SepSearch::AllSeparated {
                    problems.push(format!(
                        "GF({q}) {mode} k={k}: d = {d} > n - n/4 yet not separated"
                    ));
                }
            }
        }
        // every code containing a c = 2 witness must be found non-separated
        let witnesses: Vec<WitnessPair> = [
            construct_c2_third(&f),
            construct_general_2cm1(&f, 2),
            construct_fp_block(&f, 2, None),
            construct_m2_div(&f, 2, 2),
            construct_lin_factor(&f, 1, q as usize - 1),
            construct_lin_factor(&f, q as usize - 1, 1),
        ]
        .into_iter()
        .flatten()
        .filter(|w| w.c == 2)
        .collect();
        for w in witnesses {
            let n = w.n();
            for k in w.max_degree + 1..=n {
                let params = CodeParams::new(&f, w.mode, k).map_err(|e| e.to_string())?;
                match exhaustive_sep_check(&params, 2, &budget) {
                    Ok(SepSearch::NotSeparated { .. }) => found += 1,
                    Ok(SepSearch::AllSeparated) => problems.push(format!(
                        "GF({q}) {} k={k}: {} witness exists but enumeration found none",
                        w.mode, w.theorem
                    )),
                    Err(_) => refused += 1,
                }
            }
        }
    }
    if problems.is_empty() {
        Ok(format!(
            "{separated} codes all separated, {found} non-separated findings, {refused} over budget"
        ))
    } else {
        Err(problems.join("; "))
    }
}

// ---------------------------------------------------------------- criterion 5

fn random_poly(f: &Arc<FieldCtx>, rng: &mut ChaCha8Rng, degree: usize) -> Poly {
    let q = f.q();
    let mut coeffs: Vec<_> = (0..degree)
        .map(|_| f.element(rng.gen_range(0..q)).unwrap())
        .collect();
    coeffs.push(f.element(rng.gen_range(1..q)).unwrap());
    Poly::from_coeffs(f, coeffs)
}

fn bezout_suite() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b022);
    let fields: Vec<Arc<FieldCtx>> = [7, 11, 13, 8, 9].into_iter().map(gf).collect();
    let mut failures = Vec::new();
    let mut draws = 0;
    while draws < 10_000 {
        let f = &fields[draws % fields.len()];
        let (du, dv) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let u = random_poly(f, &mut rng, du);
        let v = random_poly(f, &mut rng, dv);
        if Poly::gcd(&u, &v).unwrap().degree() != Some(0) {
            continue;
        }
        let z = if rng.gen_bool(0.1) {
            Poly::zero(f)
        } else {
            let dz = rng.gen_range(0..du + dv);
            random_poly(f, &mut rng, dz)
        };
        draws += 1;
        match Poly::bezout_target(&u, &v, &z) {
            Ok((a, b)) => {
                let identity = &(&a * &u) - &(&b * &v) == z;
                let bounds = a.degree().is_none_or(|d| d < dv) && b.degree().is_none_or(|d| d < du);
                if !identity || !bounds {
                    failures.push(format!(
                        "GF({}) u={} v={} z={}",
                        f.q(),
                        u.render(),
                        v.render(),
                        z.render()
                    ));
                }
            }
            Err(e) => failures.push(format!("GF({}) u={}: {e}", f.q(), u.render())),
        }
    }
    if failures.is_empty() {
        Ok(format!(
            "{draws} coprime draws, identity and both degree bounds hold"
        ))
    } else {
        Err(format!(
            "{} failures, first: {}",
            failures.len(),
            failures[0]
        ))
    }
}

// ---------------------------------------------------------------- criterion 6

/// Largest `t` with `t^4 <= 16 q^3`, by integer search only.
fn floor_two_q34(q: u64) -> u64 {
    let target = 16 * (q as u128).pow(3);
    let mut t: u64 = 0;
    while ((t + 1) as u128).pow(4) <= target {
        t += 1;
    }
    t
}

fn smallest_primitive_root(p: u64) -> u64 {
    let order = p - 1;
    let mut factors = Vec::new();
    let mut n = order;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    (2..p)
        .find(|&g| factors.iter().all(|&r| pow(g, order / r) != 1))
        .unwrap_or(1)
}

fn cover_sweep() -> Result<String, String> {
    let primes: Vec<u64> = (29..=2000).filter(|&q| is_prime(q)).collect();
    let failures: Vec<String> = primes
        .par_iter()
        .filter_map(|&q| {
            let g = smallest_primitive_root(q);
            let bound = floor_two_q34(q);
            let mut powers = vec![1u64];
            for _ in 0..bound {
                powers.push(powers.last().unwrap() * g % q);
            }
            let mut hit = vec![false; q as usize];
            for &a in &powers {
                for &b in &powers {
                    hit[((a + q - b) % q) as usize] = true;
                }
            }
            let independent = hit.iter().all(|&h| h);
            let field = make_field(q as u32, 1).unwrap();
            let library = difference_cover_missing(&field, bound as usize + 1).is_none();
            match (independent, library) {
                (true, true) => None,
                _ => Some(format!(
                    "q={q}: integer oracle {independent}, library {library}"
                )),
            }
        })
        .collect();
    if failures.is_empty() {
        Ok(format!("{} primes covered", primes.len()))
    } else {
        Err(failures.join("; "))
    }
}

// ---------------------------------------------------------------- criterion 7

fn ta_failure() -> Result<String, String> {
    let f = gf(11);
    let w = construct_q11_c2(&f, &shifted_alphas(&f, 0), f.one()).map_err(|e| e.to_string())?;
    let params = w.code_params().map_err(|e| e.to_string())?;
    let z = verify_witness(&w).map_err(|e| e.to_string())?.pirate;
    let u = Coalition::new(w.u.iter().map(|p| params.evaluate(p)).collect()).unwrap();
    let report =
        ta_violation_check(&u, &z.symbols, &params, DEFAULT_MAX_SCAN).map_err(|e| e.to_string())?;

    // independent scan over all 11^4 coefficient vectors with integer arithmetic
    let points: Vec<u64> = params.points().iter().map(|a| a.value() as u64).collect();
    let zs: Vec<u64> = z.symbols.iter().map(|a| a.value() as u64).collect();
    let members: Vec<Vec<u64>> = u
        .members()
        .iter()
        .map(|m: &Codeword| m.symbols.iter().map(|a| a.value() as u64).collect())
        .collect();
    let dist = |w: &[u64]| w.iter().zip(&zs).filter(|(a, b)| a != b).count();
    let inside = members.iter().map(|m| dist(m)).min().unwrap();
    let mut outside = usize::MAX;
    for idx in 0..11u64.pow(4) {
        let c = [idx % 11, idx / 11 % 11, idx / 121 % 11, idx / 1331];
        let word: Vec<u64> = points
            .iter()
            .map(|&x| (c[0] + c[1] * x + c[2] * x * x + c[3] * x * x * x) % 11)
            .collect();
        if !members.contains(&word) {
            outside = outside.min(dist(&word));
        }
    }
    let agree = report.best_inside == inside && report.best_outside == Some(outside);
    if report.violated && outside <= inside && agree {
        Ok(format!(
            "nearest member at {inside}, nearest outsider at {outside}"
        ))
    } else {
        Err(format!(
            "library: violated={} inside={} outside={:?}; integer scan: inside={inside} outside={outside}",
            report.violated, report.best_inside, report.best_outside
        ))
    }
}

// ---------------------------------------------------------------- criterion 8

fn expect_clause(problems: &mut Vec<String>, what: &str, w: &WitnessPair, clause: Clause) {
    match verify_witness(w) {
        Err(e) if e.clause == clause => {}
        Err(e) => problems.push(format!(
            "{what}: failed on {} instead of {clause}",
            e.clause
        )),
        Ok(_) => problems.push(format!("{what}: passed")),
    }
}

fn negative_controls() -> Result<String, String> {
    let f = gf(11);
    let base = construct_q11_c2(&f, &shifted_alphas(&f, 0), f.one()).map_err(|e| e.to_string())?;
    let mut problems = Vec::new();
    let mut checked = 0;

    let mut w = base.clone();
    w.v[1] = &w.v[1] + &Poly::one(&f);
    expect_clause(
        &mut problems,
        "corrupted coefficient",
        &w,
        Clause::NotSeparated,
    );
    let mut w = base.clone();
    w.u[1] = w.u[0].clone();
    expect_clause(&mut problems, "repeated member", &w, Clause::Distinct);
    let mut w = base.clone();
    w.v[0] = w.u[1].clone();
    expect_clause(&mut problems, "shared member", &w, Clause::Disjoint);
    let mut w = base.clone();
    w.max_degree = 2;
    expect_clause(&mut problems, "understated degree", &w, Clause::Degree);
    let mut w = base.clone();
    w.claimed_d += 1;
    expect_clause(
        &mut problems,
        "inflated distance",
        &w,
        Clause::ClaimedDistance,
    );
    let mut w = base.clone();
    w.c = 1;
    expect_clause(&mut problems, "coalition too large", &w, Clause::Size);
    let mut w = base.clone();
    w.partition[0].pop();
    expect_clause(&mut problems, "incomplete partition", &w, Clause::Partition);
    checked += 7;

    let mut doc = WitnessDocument::with_pirate(base.clone()).map_err(|e| e.to_string())?;
    if let Some(z) = doc.pirate.as_mut() {
        z.symbols[0] = f.one();
    }
    match doc.verify() {
        Err(e) if e.clause == Clause::Pirate => {}
        other => problems.push(format!("tampered pirate: {other:?}")),
    }
    checked += 1;

    let refusals: Vec<(&str, Result<WitnessPair, ConstructionError>, &str)> = vec![
        (
            "c | q",
            construct_fp_block(&gf(9), 3, None),
            "c = 3 divides q = 9",
        ),
        (
            "m^2 does not divide q-1",
            construct_m2_div(&gf(11), 2, 2),
            "m^2 does not divide q-1",
        ),
        (
            "gcd(r, s) > 1",
            construct_lin_factor(&gf(13), 2, 6),
            "gcd(r, s) = 2 is not 1",
        ),
        (
            "q < 2c - 1",
            construct_general_2cm1(&gf(5), 4),
            "need q >= 7",
        ),
    ];
    for (what, result, message) in refusals {
        checked += 1;
        match result {
            Err(e) if e.to_string().contains(message) => {}
            Err(e) => problems.push(format!("{what}: unexpected error {e}")),
            Ok(_) => problems.push(format!("{what}: accepted")),
        }
    }
    if problems.is_empty() {
        Ok(format!(
            "{checked} controls rejected with the expected clause or error"
        ))
    } else {
        Err(problems.join("; "))
    }
}
