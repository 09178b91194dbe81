//! JSON interchange for witnesses.
//!
//! Keys appear in a fixed order and output is pretty-printed with a trailing
//! newline, so serializing a parsed document reproduces it byte for byte.
//! Field elements are decimal strings over prime fields and coefficient
//! arrays (`c0` first) over extension fields; polynomials use the
//! `c0 + c1*x + ...` text form.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{make_field, EvalMode, FieldCtx, FieldElement, FieldError};
use crate::oracle::PirateWord;
use crate::poly::{Poly, PolyError};

use super::{verify_witness, Clause, TheoremId, VerifyFailure, VerifyReport, WitnessPair};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed witness JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("inconsistent witness: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum ElemJson {
    Text(String),
    Coeffs(Vec<u32>),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWitness {
    theorem: TheoremId,
    p: u32,
    s: u32,
    q: u32,
    mode: EvalMode,
    c: usize,
    claimed_d: usize,
    max_degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<ElemJson>>,
    #[serde(rename = "U")]
    u: Vec<String>,
    #[serde(rename = "V")]
    v: Vec<String>,
    #[serde(default)]
    partition: Vec<Vec<ElemJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pirate: Option<Vec<ElemJson>>,
}

fn elem_out(field: &FieldCtx, a: FieldElement) -> ElemJson {
    if field.s() == 1 {
        ElemJson::Text(a.value().to_string())
    } else {
        ElemJson::Coeffs(field.coeffs(a))
    }
}

fn elem_in(field: &FieldCtx, e: &ElemJson) -> Result<FieldElement, FieldError> {
    match e {
        ElemJson::Text(t) => field.parse(t),
        ElemJson::Coeffs(c) if c.len() == field.s() as usize => field.from_coeffs(c),
        ElemJson::Coeffs(c) => Err(FieldError::Parse(format!("{c:?}"))),
    }
}

fn elems_in(field: &FieldCtx, es: &[ElemJson]) -> Result<Vec<FieldElement>, FieldError> {
    es.iter().map(|e| elem_in(field, e)).collect()
}

/// A witness together with the pirate word recorded alongside it.
#[derive(Clone, Debug)]
pub struct WitnessDocument {
    pub witness: WitnessPair,
    pub pirate: Option<PirateWord>,
}

impl WitnessDocument {
    /// Attaches the pirate word forged by [`verify_witness`].
    pub fn with_pirate(witness: WitnessPair) -> Result<Self, VerifyFailure> {
        let pirate = verify_witness(&witness)?.pirate;
        Ok(WitnessDocument {
            witness,
            pirate: Some(pirate),
        })
    }

    pub fn to_json(&self) -> String {
        let w = &self.witness;
        let f = &w.field;
        let raw = RawWitness {
            theorem: w.theorem,
            p: f.p(),
            s: f.s(),
            q: f.q(),
            mode: w.mode,
            c: w.c,
            claimed_d: w.claimed_d,
            max_degree: w.max_degree,
            points: w
                .points
                .as_ref()
                .map(|pts| pts.iter().map(|&a| elem_out(f, a)).collect()),
            u: w.u.iter().map(Poly::render).collect(),
            v: w.v.iter().map(Poly::render).collect(),
            partition: w
                .partition
                .iter()
                .map(|b| b.iter().map(|&a| elem_out(f, a)).collect())
                .collect(),
            pirate: self
                .pirate
                .as_ref()
                .map(|z| z.symbols.iter().map(|&a| elem_out(f, a)).collect()),
        };
        let mut text = serde_json::to_string_pretty(&raw).expect("witness serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, JsonError> {
        let raw: RawWitness = serde_json::from_str(text)?;
        let field: Arc<FieldCtx> = make_field(raw.p, raw.s)?;
        if field.q() != raw.q {
            return Err(JsonError::Inconsistent(format!(
                "q = {} but p^s = {}",
                raw.q,
                field.q()
            )));
        }
        let polys = |texts: &[String]| -> Result<Vec<Poly>, PolyError> {
            texts.iter().map(|t| Poly::parse(&field, t)).collect()
        };
        let witness = WitnessPair {
            theorem: raw.theorem,
            mode: raw.mode,
            points: raw
                .points
                .as_deref()
                .map(|p| elems_in(&field, p))
                .transpose()?,
            c: raw.c,
            u: polys(&raw.u)?,
            v: polys(&raw.v)?,
            max_degree: raw.max_degree,
            claimed_d: raw.claimed_d,
            partition: raw
                .partition
                .iter()
                .map(|b| elems_in(&field, b))
                .collect::<Result<_, _>>()?,
            field: field.clone(),
        };
        let pirate = raw
            .pirate
            .as_deref()
            .map(|z| elems_in(&field, z).map(|symbols| PirateWord { symbols }))
            .transpose()?;
        Ok(WitnessDocument { witness, pirate })
    }

    /// [`verify_witness`], plus agreement of any recorded pirate word with
    /// the forged one.
    pub fn verify(&self) -> Result<VerifyReport, VerifyFailure> {
        let report = verify_witness(&self.witness)?;
        if let Some(z) = &self.pirate {
            if *z != report.pirate {
                return Err(VerifyFailure {
                    clause: Clause::Pirate,
                    detail: "recorded pirate word differs from the forged one".into(),
                });
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct_c3_eighth, construct_q11_c2, shifted_alphas};
    use crate::field::make_field_of_size;

    #[test]
    fn q11_round_trip() {
        let f = make_field(11, 1).unwrap();
        let w = construct_q11_c2(&f, &shifted_alphas(&f, 0), f.one()).unwrap();
        let doc = WitnessDocument::with_pirate(w).unwrap();
        let text = doc.to_json();
        assert!(text.contains("\"5 + 5*x^2 + x^3\""));
        let back = WitnessDocument::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        back.verify().unwrap();
    }

    #[test]
    fn extension_field_round_trip() {
        let f = make_field_of_size(9).unwrap();
        let doc = WitnessDocument::with_pirate(construct_c3_eighth(&f).unwrap()).unwrap();
        let text = doc.to_json();
        let back = WitnessDocument::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        back.verify().unwrap();
    }

    #[test]
    fn truncated_and_tampered() {
        let f = make_field(11, 1).unwrap();
        let w = construct_q11_c2(&f, &shifted_alphas(&f, 0), f.one()).unwrap();
        let text = WitnessDocument::with_pirate(w).unwrap().to_json();
        assert!(matches!(
            WitnessDocument::from_json(&text[..text.len() / 2]),
            Err(JsonError::Syntax(_))
        ));
        let tampered = text.replacen("\"q\": 11", "\"q\": 13", 1);
        assert!(matches!(
            WitnessDocument::from_json(&tampered),
            Err(JsonError::Inconsistent(_))
        ));
    }
}
