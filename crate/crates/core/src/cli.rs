//! Batch front end behind the `rssep` binary.
//!
//! Every subcommand writes one JSON document to `out` and one summary line
//! to `err`. Exit status: 0 for a passing verdict, 1 for a negative verdict
//! or failed verification, 2 for errors and refusals (reported as a JSON
//! object `{"error", "message", ...}` on `out`).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::code::{fp_threshold, ta_threshold, CodeParams};
use crate::constructions::{
    cilleruelo_floor, construct_c2_third, construct_c3_eighth, construct_fp_block,
    construct_general_2cm1, construct_lin_cilleruelo, construct_lin_factor, construct_m2_div,
    construct_q11_c2, even_power_split, min_cover_bound, shifted_alphas, TheoremId,
    WitnessDocument, WitnessPair,
};
use crate::field::{make_field, prime_power, EvalMode, FieldCtx};
use crate::oracle::{
    exhaustive_fp_check, exhaustive_sep_check, exhaustive_ta_check, in_descendant,
    ipp_violation_check, ta_violation_check, Budget, Coalition, FpSearch, OracleError, SepSearch,
    TaSearch, DEFAULT_MAX_SCAN, DEFAULT_MAX_WORK,
};
use crate::poly::Poly;

/// Largest `--qmax` accepted by `cilleruelo`.
pub const CILLERUELO_CAP: u32 = 10_000;
/// Smallest `q` from which `cilleruelo` asserts the cover bound.
pub const CILLERUELO_ASSERT_FROM: u32 = 29;

#[derive(Debug, Parser)]
#[command(
    name = "rssep",
    version,
    about = "Non-separation witnesses for Reed-Solomon codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a witness pair and write it as JSON.
    Construct(ConstructArgs),
    /// Re-check a witness JSON file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exhaustively scan a tiny Reed-Solomon code.
    Oracle(OracleArgs),
    /// Smallest power-difference covers for every prime power up to `--qmax`.
    Cilleruelo {
        #[arg(long, default_value_t = 2000)]
        qmax: u32,
        #[arg(long, default_value_t = 2)]
        qmin: u32,
        /// Include one row per field in the report.
        #[arg(long)]
        rows: bool,
    },
    /// Pirate word of a witness with its IPP and traceability certificates.
    Pirate {
        #[arg(long = "in")]
        input: PathBuf,
        /// Largest code size the traceability scan may enumerate.
        #[arg(long, default_value_t = DEFAULT_MAX_SCAN)]
        max_scan: u64,
    },
    /// Modulus, primitive element and element encoding of GF(p^s).
    FieldInfo {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        s: u32,
        /// List every element with its discrete logarithm.
        #[arg(long)]
        elements: bool,
    },
}

#[derive(Debug, clap::Args)]
struct ConstructArgs {
    #[arg(long)]
    theorem: TheoremId,
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    s: u32,
    /// Coalition size (fp_block, gen_2cm1; optional for m2_div).
    #[arg(long)]
    c: Option<usize>,
    /// Root-of-unity order for m2_div.
    #[arg(long)]
    m: Option<usize>,
    /// Factor `r` of `q - 1` for lin_factor.
    #[arg(long)]
    r: Option<usize>,
    /// Factor `s` of `q - 1` for lin_factor.
    #[arg(long = "s-factor")]
    s_factor: Option<usize>,
    /// Use the coprime split of `q - 1` for `q = p^(2t)` (lin_factor).
    #[arg(long)]
    even_power: bool,
    /// Leading coefficient of `g1` for q11_c2, as an integer mod 11.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    gamma: i64,
    /// Points `α_i = i + shift` for q11_c2.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    shift: i64,
    /// Pad both coalitions with fresh constants up to `c` members.
    #[arg(long)]
    pad_to_c: bool,
    /// Write the JSON here instead of to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleMode {
    Sep,
    Fp,
    Ta,
}

#[derive(Debug, clap::Args)]
struct OracleArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    s: u32,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    c: usize,
    #[arg(long, value_enum)]
    mode: OracleMode,
    /// Work budget: a case count or one of `small`, `default`, `large`.
    #[arg(long, env = "RSSEP_BUDGET", value_parser = parse_budget)]
    budget: Option<u64>,
    /// Largest number of codewords to tabulate.
    #[arg(long, default_value_t = crate::oracle::DEFAULT_MAX_CODEWORDS)]
    max_codewords: u64,
    /// Evaluate on the nonzero points only.
    #[arg(long)]
    nonextended: bool,
}

fn parse_budget(text: &str) -> Result<u64, String> {
    match text.trim() {
        "small" => Ok(1_000),
        "default" => Ok(DEFAULT_MAX_WORK),
        "large" => Ok(1_000_000_000),
        t => t
            .replace('_', "")
            .parse()
            .map_err(|_| format!("budget must be a count or small/default/large, got {t:?}")),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] crate::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

macro_rules! lib_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Lib(e.into())
            }
        }
    )*};
}

lib_error!(
    crate::field::FieldError,
    crate::poly::PolyError,
    crate::code::CodeError,
    OracleError,
    crate::constructions::ConstructionError,
    crate::constructions::VerifyFailure,
    crate::constructions::JsonError
);

impl CliError {
    fn to_json(&self) -> Value {
        let mut obj = json!({ "error": self.kind(), "message": self.to_string() });
        if let CliError::Lib(crate::Error::Verify(f)) = self {
            obj["clause"] = json!(f.clause.as_str());
        }
        obj
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.kind(),
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(crate::Error::Verify(_)) => 1,
            _ => 2,
        }
    }
}

/// What a subcommand produced: the JSON document, the summary line and the
/// exit status.
struct Outcome {
    document: Value,
    summary: String,
    code: i32,
}

impl Outcome {
    fn pass(document: Value, summary: String) -> Self {
        Outcome {
            document,
            summary,
            code: 0,
        }
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let error = CliError::Usage(e.to_string().trim_end().to_string());
            return report_error(&error, out, err);
        }
    };
    let result = match cli.command {
        Command::Construct(args) => cmd_construct(&args, out),
        Command::Verify { input } => cmd_verify(&input),
        Command::Oracle(args) => cmd_oracle(&args),
        Command::Cilleruelo { qmax, qmin, rows } => cmd_cilleruelo(qmin, qmax, rows),
        Command::Pirate { input, max_scan } => cmd_pirate(&input, max_scan),
        Command::FieldInfo { p, s, elements } => cmd_field_info(p, s, elements),
    };
    match result {
        Ok(outcome) => {
            if !outcome.document.is_null() {
                let text = serde_json::to_string_pretty(&outcome.document).expect("json value");
                let _ = writeln!(out, "{text}");
            }
            let _ = writeln!(err, "{}", outcome.summary);
            outcome.code
        }
        Err(e) => report_error(&e, out, err),
    }
}

fn report_error(e: &CliError, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = serde_json::to_string_pretty(&e.to_json()).expect("json value");
    let _ = writeln!(out, "{text}");
    let _ = writeln!(err, "error: {e}");
    e.exit_code()
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn require<T>(value: Option<T>, flag: &str, theorem: TheoremId) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for {theorem}")))
}

fn build_witness(
    args: &ConstructArgs,
    field: &std::sync::Arc<FieldCtx>,
) -> Result<WitnessPair, CliError> {
    let t = args.theorem;
    let w = match t {
        TheoremId::FpBlock => construct_fp_block(field, require(args.c, "c", t)?, None)?,
        TheoremId::Q11C2 => {
            let alphas = shifted_alphas(field, args.shift);
            construct_q11_c2(field, &alphas, field.from_int(args.gamma))?
        }
        TheoremId::C2Third => construct_c2_third(field)?,
        TheoremId::C3Eighth => construct_c3_eighth(field)?,
        TheoremId::Gen2cm1 => construct_general_2cm1(field, require(args.c, "c", t)?)?,
        TheoremId::M2Div => {
            let m = require(args.m, "m", t)?;
            construct_m2_div(field, m, args.c.unwrap_or(m))?
        }
        TheoremId::LinCilleruelo => construct_lin_cilleruelo(field)?,
        TheoremId::LinFactor => {
            let (r, s) = if args.even_power {
                even_power_split(field)?
            } else {
                (
                    require(args.r, "r", t)?,
                    require(args.s_factor, "s-factor", t)?,
                )
            };
            construct_lin_factor(field, r, s)?
        }
    };
    Ok(if args.pad_to_c { w.pad_to_c()? } else { w })
}

/// `theorem=… q=… c=… max_degree=… claimed_d=… fp_threshold=… ta_threshold=…`
pub fn summary_line(w: &WitnessPair) -> String {
    let n = w.n();
    format!(
        "theorem={} q={} c={} max_degree={} claimed_d={} fp_threshold={} ta_threshold={}",
        w.theorem,
        w.q(),
        w.c,
        w.max_degree,
        w.claimed_d,
        fp_threshold(n, w.c),
        ta_threshold(n, w.c)
    )
}

fn cmd_construct(args: &ConstructArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let field = make_field(args.p, args.s)?;
    let witness = build_witness(args, &field)?;
    let summary = summary_line(&witness);
    let doc = WitnessDocument::with_pirate(witness)?;
    let text = doc.to_json();
    match &args.out {
        Some(path) => fs::write(path, &text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    Ok(Outcome::pass(Value::Null, summary))
}

fn cmd_verify(input: &Path) -> Result<Outcome, CliError> {
    let doc = WitnessDocument::from_json(&read_file(input)?)?;
    let report = doc.verify()?;
    let summary = format!("verdict=PASS {}", summary_line(&doc.witness));
    Ok(Outcome::pass(
        serde_json::to_value(&report).expect("report serializes"),
        summary,
    ))
}

fn render_polys(polys: &[Poly]) -> Vec<String> {
    polys.iter().map(Poly::render).collect()
}

fn cmd_oracle(args: &OracleArgs) -> Result<Outcome, CliError> {
    let field = make_field(args.p, args.s)?;
    let mode = if args.nonextended {
        EvalMode::NonExtended
    } else {
        EvalMode::Full
    };
    let params = CodeParams::new(&field, mode, args.k)?;
    let budget = Budget {
        max_codewords: args.max_codewords,
        max_work: args.budget.unwrap_or(DEFAULT_MAX_WORK),
    };
    let mut doc = json!({
        "q": field.q(),
        "n": params.n(),
        "k": params.k(),
        "d": params.d(),
        "c": args.c,
        "mode": mode.to_string(),
    });
    let (verdict, passed) = match args.mode {
        OracleMode::Sep => match exhaustive_sep_check(&params, args.c, &budget)? {
            SepSearch::AllSeparated => ("ALL_SEPARATED", true),
            SepSearch::NotSeparated { u, v } => {
                doc["U"] = json!(render_polys(&u));
                doc["V"] = json!(render_polys(&v));
                ("NOT_SEPARATED", false)
            }
        },
        OracleMode::Fp => match exhaustive_fp_check(&params, args.c, &budget)? {
            FpSearch::Frameproof => ("FRAMEPROOF", true),
            FpSearch::Framed { word, coalition } => {
                doc["framed"] = json!(word.render());
                doc["coalition"] = json!(render_polys(&coalition));
                ("FRAMED", false)
            }
        },
        OracleMode::Ta => match exhaustive_ta_check(&params, args.c, &budget)? {
            TaSearch::Traceable => ("TRACEABLE", true),
            TaSearch::Violated {
                coalition,
                pirate,
                best_inside,
                best_outside,
            } => {
                doc["coalition"] = json!(render_polys(&coalition));
                doc["pirate"] = json!(pirate.iter().map(|&a| field.render(a)).collect::<Vec<_>>());
                doc["best_inside"] = json!(best_inside);
                doc["best_outside"] = json!(best_outside);
                ("TA_VIOLATED", false)
            }
        },
    };
    doc["verdict"] = json!(verdict);
    let summary = format!(
        "verdict={verdict} q={} n={} k={} d={} c={}",
        field.q(),
        params.n(),
        params.k(),
        params.d(),
        args.c
    );
    Ok(Outcome {
        document: doc,
        summary,
        code: if passed { 0 } else { 1 },
    })
}

fn cmd_cilleruelo(qmin: u32, qmax: u32, with_rows: bool) -> Result<Outcome, CliError> {
    if qmax > CILLERUELO_CAP {
        return Err(CliError::Usage(format!(
            "--qmax {qmax} exceeds the cap {CILLERUELO_CAP}"
        )));
    }
    let qs: Vec<u32> = (qmin.max(2)..=qmax)
        .filter(|&q| prime_power(q as u64).is_some())
        .collect();
    let rows = qs
        .par_iter()
        .map(|&q| {
            let (p, s) = prime_power(q as u64).expect("filtered to prime powers");
            let field = make_field(p, s)?;
            let bound = min_cover_bound(&field);
            let floor = cilleruelo_floor(q);
            let covered = bound.is_some_and(|b| b <= floor);
            Ok((q, bound, floor, covered))
        })
        .collect::<Result<Vec<_>, crate::field::FieldError>>()?;
    let failures: Vec<u32> = rows
        .iter()
        .filter(|&&(q, _, _, covered)| q >= CILLERUELO_ASSERT_FROM && !covered)
        .map(|&(q, ..)| q)
        .collect();
    let verdict = if failures.is_empty() {
        "COVERAGE_HOLDS"
    } else {
        "COVERAGE_FAILS"
    };
    let mut doc = json!({
        "verdict": verdict,
        "qmin": qmin,
        "qmax": qmax,
        "assert_from": CILLERUELO_ASSERT_FROM,
        "checked": rows.len(),
        "failures": failures,
    });
    if with_rows {
        doc["rows"] = rows
            .iter()
            .map(|&(q, b, floor, covered)| json!({ "q": q, "B": b, "floor_2q34": floor, "covered": covered }))
            .collect();
    }
    let summary = format!(
        "verdict={verdict} qmin={qmin} qmax={qmax} checked={} failures={}",
        rows.len(),
        failures.len()
    );
    Ok(Outcome {
        document: doc,
        summary,
        code: if failures.is_empty() { 0 } else { 1 },
    })
}

fn cmd_pirate(input: &Path, max_scan: u64) -> Result<Outcome, CliError> {
    let doc = WitnessDocument::from_json(&read_file(input)?)?;
    let report = doc.verify()?;
    let w = &doc.witness;
    let field = &w.field;
    let params = w.code_params()?;
    let coalition = |polys: &[Poly]| -> Result<Coalition, CliError> {
        Ok(Coalition::new(
            polys.iter().map(|p| params.evaluate(p)).collect(),
        )?)
    };
    let (u, v) = (coalition(&w.u)?, coalition(&w.v)?);
    let z = &report.pirate.symbols;
    let ipp = ipp_violation_check(&u, &v, z)?;
    let mut out = json!({
        "q": w.q(),
        "n": w.n(),
        "k": params.k(),
        "pirate": report.pirate.render(field),
        "in_desc_U": in_descendant(z, &u)?,
        "in_desc_V": in_descendant(z, &v)?,
        "ipp": ipp.verdict,
    });
    let ta_verdict = match ta_violation_check(&u, z, &params, max_scan) {
        Ok(ta) => {
            out["ta"] = ta.to_json();
            if ta.violated {
                "VIOLATED"
            } else {
                "NOT_VIOLATED"
            }
        }
        Err(OracleError::TooLarge { needed, limit, .. }) => {
            out["ta"] = json!({
                "verdict": "CERTIFICATE_ONLY",
                "notice": format!("traceability scan skipped: {needed} codewords exceed the limit {limit}"),
            });
            "CERTIFICATE_ONLY"
        }
        Err(e) => return Err(e.into()),
    };
    let summary = format!(
        "theorem={} q={} ipp={} ta={ta_verdict} pirate=({})",
        w.theorem,
        w.q(),
        ipp.verdict,
        report.pirate.render(field).join(",")
    );
    Ok(Outcome::pass(out, summary))
}

fn cmd_field_info(p: u32, s: u32, elements: bool) -> Result<Outcome, CliError> {
    let field = make_field(p, s)?;
    let alpha = field.primitive();
    let mut doc = json!({
        "p": field.p(),
        "s": field.s(),
        "q": field.q(),
        "modulus": field.render_modulus(),
        "primitive": field.render(alpha),
        "order_of_primitive": field.order(alpha),
    });
    if elements {
        let mut logs = vec![None; field.q() as usize];
        for e in 0..field.q() as i64 - 1 {
            logs[field.alpha_pow(e).value() as usize] = Some(e);
        }
        doc["elements"] = field
            .canonical_order()
            .into_iter()
            .map(|a| json!({ "value": a.value(), "text": field.render(a), "log": logs[a.value() as usize] }))
            .collect();
    }
    let summary = format!(
        "q={} modulus={} primitive={}",
        field.q(),
        field.render_modulus(),
        field.render(alpha)
    );
    Ok(Outcome::pass(doc, summary))
}
