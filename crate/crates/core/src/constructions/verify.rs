//! Re-checks a witness against the brute-force oracles.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::code::{fp_threshold, ta_threshold, CodeParams, Codeword};
use crate::field::FieldElement;
use crate::oracle::{
    are_separated, forge_pirate, in_descendant, ipp_violation_check, Coalition, PirateWord,
    Separation,
};
use crate::poly::Poly;

use super::{TheoremId, WitnessPair};

/// The property a witness failed, in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    Size,
    Distinct,
    Disjoint,
    Degree,
    ClaimedDistance,
    Partition,
    NotSeparated,
    Pirate,
    Ipp,
    Threshold,
}

impl Clause {
    pub fn as_str(self) -> &'static str {
        match self {
            Clause::Size => "size",
            Clause::Distinct => "distinct",
            Clause::Disjoint => "disjoint",
            Clause::Degree => "degree",
            Clause::ClaimedDistance => "claimed_distance",
            Clause::Partition => "partition",
            Clause::NotSeparated => "not_separated",
            Clause::Pirate => "pirate",
            Clause::Ipp => "ipp",
            Clause::Threshold => "threshold",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("verification failed [{clause}]: {detail}")]
pub struct VerifyFailure {
    pub clause: Clause,
    pub detail: String,
}

fn fail<T>(clause: Clause, detail: impl Into<String>) -> Result<T, VerifyFailure> {
    Err(VerifyFailure {
        clause,
        detail: detail.into(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub verdict: &'static str,
    pub theorem: TheoremId,
    pub q: u32,
    pub n: usize,
    pub c: usize,
    pub u_size: usize,
    pub v_size: usize,
    pub max_degree: usize,
    pub claimed_d: usize,
    pub stated_d: usize,
    /// `n - n/c`; distances above it force frameproofness.
    pub fp_threshold: String,
    /// `n - n/c²`; distances above it force traceability when `q > c`.
    pub ta_threshold: String,
    pub at_or_below_fp_threshold: bool,
    pub at_or_below_ta_threshold: bool,
    #[serde(skip)]
    pub pirate: PirateWord,
    #[serde(rename = "pirate")]
    pub pirate_text: Vec<String>,
}

fn encode_all(params: &CodeParams, polys: &[Poly]) -> Vec<Codeword> {
    polys.iter().map(|p| params.evaluate(p)).collect()
}

/// Checks, in order: coalition sizes, distinctness, disjointness, degrees,
/// the claimed distance, the partition, non-separation, the forged pirate
/// word, the IPP certificate, and consistency with the traceability bound.
pub fn verify_witness(w: &WitnessPair) -> Result<VerifyReport, VerifyFailure> {
    let field = &w.field;
    for (name, family) in [("U", &w.u), ("V", &w.v)] {
        if family.is_empty() || family.len() > w.c {
            return fail(
                Clause::Size,
                format!("|{name}| = {} is outside 1..={}", family.len(), w.c),
            );
        }
        if let Some(p) = family.iter().find(|p| p.field().q() != field.q()) {
            return fail(Clause::Size, format!("{p} is not over GF({})", field.q()));
        }
        for (i, p) in family.iter().enumerate() {
            if family[..i].contains(p) {
                return fail(Clause::Distinct, format!("{name} lists {p} twice"));
            }
        }
    }
    if let Some(p) = w.u.iter().find(|p| w.v.contains(p)) {
        return fail(Clause::Disjoint, format!("{p} lies in both U and V"));
    }
    let n = w.n();
    if w.max_degree >= n {
        return fail(
            Clause::Degree,
            format!("max degree {} is not below n = {n}", w.max_degree),
        );
    }
    if let Some(p) =
        w.u.iter()
            .chain(&w.v)
            .find(|p| p.degree().is_some_and(|d| d > w.max_degree))
    {
        return fail(
            Clause::Degree,
            format!("{p} exceeds max degree {}", w.max_degree),
        );
    }
    if w.claimed_d != n - w.max_degree {
        return fail(
            Clause::ClaimedDistance,
            format!(
                "claimed d = {} but n - max_degree = {}",
                w.claimed_d,
                n - w.max_degree
            ),
        );
    }
    check_partition(w)?;

    let params = match w.code_params() {
        Ok(p) => p,
        Err(e) => return fail(Clause::Partition, e.to_string()),
    };
    let cu = match Coalition::new(encode_all(&params, &w.u)) {
        Ok(c) => c,
        Err(e) => return fail(Clause::Distinct, format!("U: {e}")),
    };
    let cv = match Coalition::new(encode_all(&params, &w.v)) {
        Ok(c) => c,
        Err(e) => return fail(Clause::Distinct, format!("V: {e}")),
    };
    match are_separated(&cu, &cv) {
        Ok(Separation::NotSeparated { .. }) => {}
        Ok(Separation::Separated { position }) => {
            let pt = field.render(params.points()[position]);
            return fail(
                Clause::NotSeparated,
                format!("column sets are disjoint at position {position} (point {pt})"),
            );
        }
        Err(e) => return fail(Clause::Disjoint, e.to_string()),
    }
    let pirate = forge_pirate(&cu, &cv).map_err(|e| VerifyFailure {
        clause: Clause::Pirate,
        detail: e.to_string(),
    })?;
    for (name, t) in [("U", &cu), ("V", &cv)] {
        if !in_descendant(&pirate.symbols, t).unwrap_or(false) {
            return fail(
                Clause::Pirate,
                format!("pirate word is not a descendant of {name}"),
            );
        }
    }
    if let Err(e) = ipp_violation_check(&cu, &cv, &pirate.symbols) {
        return fail(Clause::Ipp, e.to_string());
    }

    let (fp, ta) = (fp_threshold(n, w.c), ta_threshold(n, w.c));
    let d = num_rational::Ratio::from_integer(w.claimed_d as u64);
    if field.q() as usize > w.c && d > ta {
        return fail(
            Clause::Threshold,
            format!(
                "claimed d = {} exceeds n - n/c^2 = {ta}, where codes are traceable",
                w.claimed_d
            ),
        );
    }
    Ok(VerifyReport {
        verdict: "PASS",
        theorem: w.theorem,
        q: field.q(),
        n,
        c: w.c,
        u_size: w.u.len(),
        v_size: w.v.len(),
        max_degree: w.max_degree,
        claimed_d: w.claimed_d,
        stated_d: w.stated_d(),
        fp_threshold: fp.to_string(),
        ta_threshold: ta.to_string(),
        at_or_below_fp_threshold: d <= fp,
        at_or_below_ta_threshold: d <= ta,
        pirate_text: pirate.render(field),
        pirate,
    })
}

fn check_partition(w: &WitnessPair) -> Result<(), VerifyFailure> {
    if w.partition.is_empty() {
        return Ok(());
    }
    let mut all: Vec<FieldElement> = w.partition.concat();
    if all.iter().any(|a| !w.field.contains(*a)) {
        return fail(Clause::Partition, "block element outside the field");
    }
    all.sort();
    if all.windows(2).any(|p| p[0] == p[1]) {
        return fail(Clause::Partition, "blocks overlap");
    }
    let mut expected = w.field.eval_points(w.mode);
    expected.sort();
    if all != expected {
        return fail(
            Clause::Partition,
            "blocks do not cover the evaluation points",
        );
    }
    Ok(())
}
