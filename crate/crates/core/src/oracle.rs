//! Brute-force ground truth for descendant sets, separation, frameproofness,
//! identifiable parents and traceability.
//!
//! Nothing here knows about the algebraic constructions; everything works on
//! explicit codeword vectors. Positions are 0-based.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::code::{hamming, CodeError, CodeParams, Codeword};
use crate::field::{FieldCtx, FieldElement};
use crate::poly::Poly;

/// Default bound on the number of codewords of an exhaustively scanned code.
pub const DEFAULT_MAX_CODEWORDS: u64 = 200;
/// Default bound on the number of enumerated cases.
pub const DEFAULT_MAX_WORK: u64 = 10_000_000;
/// Default bound on the code size for a nearest-codeword scan.
pub const DEFAULT_MAX_SCAN: u64 = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("coalition is empty")]
    EmptyCoalition,
    #[error("coalition member {0} repeats an earlier member")]
    DuplicateMember(usize),
    #[error("words of different lengths")]
    LengthMismatch,
    #[error("coalitions share a codeword")]
    Overlap,
    #[error("coalitions are separated at position {0}")]
    Separated(usize),
    #[error("word is not a descendant of coalition {0}")]
    NotDescendant(&'static str),
    #[error("the word belongs to the coalition")]
    MemberOfCoalition,
    #[error("instance too large: {what} = {needed} exceeds the budget of {limit}")]
    TooLarge {
        what: &'static str,
        needed: u128,
        limit: u64,
    },
    #[error("coalition size bound must be at least 1")]
    ZeroCoalitionSize,
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Enumeration limits for the exhaustive checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_codewords: u64,
    pub max_work: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_codewords: DEFAULT_MAX_CODEWORDS,
            max_work: DEFAULT_MAX_WORK,
        }
    }
}

impl Budget {
    pub fn with_work(max_work: u64) -> Self {
        Budget {
            max_work,
            ..Budget::default()
        }
    }
}

/// A nonempty set of pairwise distinct codewords of equal length.
#[derive(Clone, Debug)]
pub struct Coalition {
    members: Vec<Codeword>,
}

impl Coalition {
    pub fn new(members: Vec<Codeword>) -> Result<Self, OracleError> {
        let first = members.first().ok_or(OracleError::EmptyCoalition)?;
        if members.iter().any(|m| m.len() != first.len()) {
            return Err(OracleError::LengthMismatch);
        }
        for (i, m) in members.iter().enumerate() {
            if members[..i].contains(m) {
                return Err(OracleError::DuplicateMember(i));
            }
        }
        Ok(Coalition { members })
    }

    pub fn members(&self) -> &[Codeword] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Length of the member words.
    pub fn word_len(&self) -> usize {
        self.members[0].len()
    }

    pub fn contains(&self, word: &[FieldElement]) -> bool {
        self.members.iter().any(|m| m.symbols == word)
    }

    fn overlaps(&self, other: &Coalition) -> bool {
        self.members.iter().any(|m| other.members.contains(m))
    }
}

/// A word claimed to be forged by a coalition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PirateWord {
    pub symbols: Vec<FieldElement>,
}

impl PirateWord {
    pub fn render(&self, field: &FieldCtx) -> Vec<String> {
        self.symbols.iter().map(|&a| field.render(a)).collect()
    }
}

/// The symbols each position takes across the coalition, sorted and deduplicated.
pub fn column_sets(t: &Coalition) -> Vec<Vec<FieldElement>> {
    (0..t.word_len())
        .map(|i| {
            let mut col: Vec<FieldElement> = t.members.iter().map(|m| m.symbols[i]).collect();
            col.sort();
            col.dedup();
            col
        })
        .collect()
}

/// Whether `z` lies in the descendant set of `t`.
pub fn in_descendant(z: &[FieldElement], t: &Coalition) -> Result<bool, OracleError> {
    if z.len() != t.word_len() {
        return Err(OracleError::LengthMismatch);
    }
    Ok(z.iter()
        .enumerate()
        .all(|(i, s)| t.members.iter().any(|m| m.symbols[i] == *s)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    /// Column sets are disjoint at `position` (the first such position).
    Separated { position: usize },
    /// Every position shares at least one symbol; `shared[i]` lists them.
    NotSeparated { shared: Vec<Vec<FieldElement>> },
}

impl Separation {
    pub fn is_separated(&self) -> bool {
        matches!(self, Separation::Separated { .. })
    }

    pub fn to_json(&self, field: &FieldCtx) -> Value {
        match self {
            Separation::Separated { position } => {
                json!({ "verdict": "SEPARATED", "position": position })
            }
            Separation::NotSeparated { shared } => {
                let table: Vec<Vec<String>> = shared
                    .iter()
                    .map(|col| col.iter().map(|&a| field.render(a)).collect())
                    .collect();
                json!({ "verdict": "NOT_SEPARATED", "shared": table })
            }
        }
    }
}

/// Compares two disjoint coalitions position by position.
pub fn are_separated(u: &Coalition, v: &Coalition) -> Result<Separation, OracleError> {
    if u.word_len() != v.word_len() {
        return Err(OracleError::LengthMismatch);
    }
    if u.overlaps(v) {
        return Err(OracleError::Overlap);
    }
    let (cu, cv) = (column_sets(u), column_sets(v));
    let mut shared = Vec::with_capacity(cu.len());
    for (i, (a, b)) in cu.iter().zip(&cv).enumerate() {
        let common: Vec<FieldElement> = a.iter().filter(|x| b.contains(x)).copied().collect();
        if common.is_empty() {
            return Ok(Separation::Separated { position: i });
        }
        shared.push(common);
    }
    Ok(Separation::NotSeparated { shared })
}

/// A common descendant of two non-separated coalitions, taking the smallest
/// shared symbol at every position.
pub fn forge_pirate(u: &Coalition, v: &Coalition) -> Result<PirateWord, OracleError> {
    match are_separated(u, v)? {
        Separation::Separated { position } => Err(OracleError::Separated(position)),
        Separation::NotSeparated { shared } => Ok(PirateWord {
            symbols: shared.iter().map(|col| col[0]).collect(),
        }),
    }
}

/// `true` when `u` is not framed by `v`, i.e. some position of `u` avoids
/// the column set of `v`.
pub fn frameproof_check(u: &Codeword, v: &Coalition) -> Result<bool, OracleError> {
    if v.contains(&u.symbols) {
        return Err(OracleError::MemberOfCoalition);
    }
    Ok(!in_descendant(&u.symbols, v)?)
}

/// Outcome of a nearest-codeword scan for a pirate word.
#[derive(Clone, Debug)]
pub struct TaReport {
    /// An outside codeword is at least as close as every coalition member.
    pub violated: bool,
    pub best_inside: usize,
    /// Index into the coalition of its member nearest to the pirate word.
    pub nearest_member: usize,
    pub best_outside: Option<usize>,
    pub nearest_outsider: Option<Poly>,
}

impl TaReport {
    pub fn to_json(&self) -> Value {
        json!({
            "verdict": if self.violated { "VIOLATED" } else { "NOT_VIOLATED" },
            "best_inside": self.best_inside,
            "nearest_member": self.nearest_member,
            "best_outside": self.best_outside,
            "nearest_outsider": self.nearest_outsider.as_ref().map(Poly::render),
        })
    }
}

/// Scans the whole code for a codeword outside `u` at distance no larger
/// than the nearest member of `u`. Ties count as violations.
pub fn ta_violation_check(
    u: &Coalition,
    z: &[FieldElement],
    params: &CodeParams,
    max_scan: u64,
) -> Result<TaReport, OracleError> {
    if z.len() != params.n() || u.word_len() != params.n() {
        return Err(OracleError::LengthMismatch);
    }
    if !in_descendant(z, u)? {
        return Err(OracleError::NotDescendant("U"));
    }
    let size = params
        .size()
        .filter(|&m| m <= max_scan)
        .ok_or(OracleError::TooLarge {
            what: "codewords to scan",
            needed: (params.field().q() as u128).saturating_pow(params.k() as u32),
            limit: max_scan,
        })?;
    let (nearest_member, best_inside) = u
        .members
        .iter()
        .map(|m| hamming(z, &m.symbols))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .enumerate()
        .min_by_key(|&(_, d)| d)
        .expect("coalition is nonempty");

    let best = (0..size)
        .into_par_iter()
        .filter_map(|idx| {
            let w = params.evaluate(&params.message(idx));
            if u.contains(&w.symbols) {
                return None;
            }
            let d = w.symbols.iter().zip(z).filter(|(a, b)| a != b).count();
            Some((d, idx))
        })
        .min();
    Ok(TaReport {
        violated: best.is_some_and(|(d, _)| d <= best_inside),
        best_inside,
        nearest_member,
        best_outside: best.map(|(d, _)| d),
        nearest_outsider: best.map(|(_, idx)| params.message(idx)),
    })
}

/// Certificate that `z` has two disjoint candidate parent coalitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IppCertificate {
    pub verdict: &'static str,
    pub u_size: usize,
    pub v_size: usize,
}

/// Checks the certificate `(u, v, z)`: disjoint coalitions that both
/// produce `z`, so no codeword is common to all parents of `z`.
pub fn ipp_violation_check(
    u: &Coalition,
    v: &Coalition,
    z: &[FieldElement],
) -> Result<IppCertificate, OracleError> {
    if u.overlaps(v) {
        return Err(OracleError::Overlap);
    }
    if !in_descendant(z, u)? {
        return Err(OracleError::NotDescendant("U"));
    }
    if !in_descendant(z, v)? {
        return Err(OracleError::NotDescendant("V"));
    }
    Ok(IppCertificate {
        verdict: "IPP_VIOLATED",
        u_size: u.len(),
        v_size: v.len(),
    })
}

/// Result of [`exhaustive_sep_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SepSearch {
    AllSeparated,
    /// First non-separated pair in enumeration order.
    NotSeparated {
        u: Vec<Poly>,
        v: Vec<Poly>,
    },
}

/// Result of [`exhaustive_fp_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FpSearch {
    Frameproof,
    Framed { word: Poly, coalition: Vec<Poly> },
}

/// Result of [`exhaustive_ta_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TaSearch {
    Traceable,
    Violated {
        coalition: Vec<Poly>,
        pirate: Vec<FieldElement>,
        best_inside: usize,
        best_outside: usize,
    },
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Number of unordered pairs of disjoint coalitions with sizes in `1..=c`.
pub fn sep_pair_count(m: u64, c: usize) -> u128 {
    let mut total: u128 = 0;
    for a in 1..=c as u64 {
        for b in a..=c as u64 {
            let ordered = binomial(m, a).saturating_mul(binomial(m.saturating_sub(a), b));
            total = total.saturating_add(if a == b { ordered / 2 } else { ordered });
        }
    }
    total
}

struct Table {
    words: Vec<Vec<u32>>,
}

impl Table {
    fn build(params: &CodeParams, budget: &Budget) -> Result<Self, OracleError> {
        let q = params.field().q() as u128;
        let m =
            params
                .size()
                .filter(|&m| m <= budget.max_codewords)
                .ok_or(OracleError::TooLarge {
                    what: "codewords",
                    needed: q.saturating_pow(params.k() as u32),
                    limit: budget.max_codewords,
                })?;
        let words = (0..m)
            .map(|i| {
                params
                    .evaluate(&params.message(i))
                    .symbols
                    .iter()
                    .map(|a| a.value())
                    .collect()
            })
            .collect();
        Ok(Table { words })
    }

    fn len(&self) -> usize {
        self.words.len()
    }

    fn non_separated(&self, u: &[usize], v: &[usize]) -> bool {
        let n = self.words[0].len();
        (0..n).all(|pos| {
            u.iter()
                .any(|&a| v.iter().any(|&b| self.words[a][pos] == self.words[b][pos]))
        })
    }

    fn in_desc(&self, word: &[u32], t: &[usize]) -> bool {
        word.iter()
            .enumerate()
            .all(|(pos, s)| t.iter().any(|&m| self.words[m][pos] == *s))
    }
}

fn check_work(what: &'static str, needed: u128, budget: &Budget) -> Result<(), OracleError> {
    if needed > budget.max_work as u128 {
        return Err(OracleError::TooLarge {
            what,
            needed,
            limit: budget.max_work,
        });
    }
    Ok(())
}

/// Enumerates every unordered pair of disjoint coalitions of sizes up to `c`
/// (smaller sizes first, lexicographic within a size) and reports the first
/// non-separated pair. Instances over budget are refused, never sampled.
pub fn exhaustive_sep_check(
    params: &CodeParams,
    c: usize,
    budget: &Budget,
) -> Result<SepSearch, OracleError> {
    if c == 0 {
        return Err(OracleError::ZeroCoalitionSize);
    }
    let table = Table::build(params, budget)?;
    let m = table.len();
    check_work("coalition pairs", sep_pair_count(m as u64, c), budget)?;
    for a in 1..=c {
        for b in a..=c {
            let us: Vec<Vec<usize>> = (0..m).combinations(a).collect();
            let found = us.par_iter().find_map_first(|uset| {
                let rest: Vec<usize> = (0..m)
                    .filter(|i| !uset.contains(i) && (a != b || *i > uset[0]))
                    .collect();
                rest.into_iter()
                    .combinations(b)
                    .find(|vset| table.non_separated(uset, vset))
                    .map(|vset| (uset.clone(), vset))
            });
            if let Some((uset, vset)) = found {
                return Ok(SepSearch::NotSeparated {
                    u: uset.iter().map(|&i| params.message(i as u64)).collect(),
                    v: vset.iter().map(|&i| params.message(i as u64)).collect(),
                });
            }
        }
    }
    Ok(SepSearch::AllSeparated)
}

/// Looks for a coalition of size up to `c` whose descendant set contains a
/// codeword outside it.
pub fn exhaustive_fp_check(
    params: &CodeParams,
    c: usize,
    budget: &Budget,
) -> Result<FpSearch, OracleError> {
    if c == 0 {
        return Err(OracleError::ZeroCoalitionSize);
    }
    let table = Table::build(params, budget)?;
    let m = table.len();
    let work = (1..=c as u64)
        .map(|a| binomial(m as u64, a).saturating_mul(m as u128))
        .fold(0u128, u128::saturating_add);
    check_work("coalition/word pairs", work, budget)?;
    for a in 1..=c {
        let coalitions: Vec<Vec<usize>> = (0..m).combinations(a).collect();
        let found = coalitions.par_iter().find_map_first(|t| {
            (0..m)
                .filter(|w| !t.contains(w))
                .find(|&w| table.in_desc(&table.words[w], t))
                .map(|w| (w, t.clone()))
        });
        if let Some((w, t)) = found {
            return Ok(FpSearch::Framed {
                word: params.message(w as u64),
                coalition: t.iter().map(|&i| params.message(i as u64)).collect(),
            });
        }
    }
    Ok(FpSearch::Frameproof)
}

/// For every coalition of size up to `c` and every descendant, checks that
/// some member is strictly closer than all outside codewords.
pub fn exhaustive_ta_check(
    params: &CodeParams,
    c: usize,
    budget: &Budget,
) -> Result<TaSearch, OracleError> {
    if c == 0 {
        return Err(OracleError::ZeroCoalitionSize);
    }
    let table = Table::build(params, budget)?;
    let (m, n) = (table.len(), params.n());
    let work = (1..=c as u64)
        .map(|a| {
            binomial(m as u64, a)
                .saturating_mul((a as u128).saturating_pow(n as u32))
                .saturating_mul(m as u128)
        })
        .fold(0u128, u128::saturating_add);
    check_work("descendant/codeword pairs", work, budget)?;
    let dist = |w: &[u32], z: &[u32]| w.iter().zip(z).filter(|(a, b)| a != b).count();
    for a in 1..=c {
        let coalitions: Vec<Vec<usize>> = (0..m).combinations(a).collect();
        let found = coalitions.par_iter().find_map_first(|t| {
            let columns: Vec<Vec<u32>> = (0..n)
                .map(|pos| t.iter().map(|&i| table.words[i][pos]).unique().collect())
                .collect();
            columns
                .iter()
                .map(|col| col.iter().copied())
                .multi_cartesian_product()
                .find_map(|z| {
                    let inside = t.iter().map(|&i| dist(&table.words[i], &z)).min().unwrap();
                    let outside = (0..m)
                        .filter(|w| !t.contains(w))
                        .map(|w| dist(&table.words[w], &z))
                        .min()?;
                    (outside <= inside).then(|| (t.clone(), z, inside, outside))
                })
        });
        if let Some((t, z, best_inside, best_outside)) = found {
            let field = params.field();
            return Ok(TaSearch::Violated {
                coalition: t.iter().map(|&i| params.message(i as u64)).collect(),
                pirate: z.iter().map(|&v| field.element(v).unwrap()).collect(),
                best_inside,
                best_outside,
            });
        }
    }
    Ok(TaSearch::Traceable)
}
