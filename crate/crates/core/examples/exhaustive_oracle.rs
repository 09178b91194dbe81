//! Brute-force separation, frameproof and traceability scans of tiny codes.

use rssep::code::CodeParams;
use rssep::field::{make_field, EvalMode};
use rssep::oracle::{
    exhaustive_fp_check, exhaustive_sep_check, exhaustive_ta_check, Budget, OracleError,
};

fn show<T: std::fmt::Debug>(label: &str, result: Result<T, OracleError>) {
    match result {
        Ok(verdict) => println!("  {label}: {verdict:?}"),
        Err(e) => println!("  {label}: refused ({e})"),
    }
}

fn main() -> Result<(), rssep::Error> {
    let budget = Budget::default();
    for q in [3, 4, 5] {
        let (p, s) = if q == 4 { (2, 2) } else { (q, 1) };
        let f = make_field(p, s)?;
        for k in 1..=3.min(q as usize) {
            let params = CodeParams::new(&f, EvalMode::Full, k)?;
            println!("[{}, {k}, {}] over GF({q})", params.n(), params.d());
            show("2-SEP", exhaustive_sep_check(&params, 2, &budget));
            show("2-FP ", exhaustive_fp_check(&params, 2, &budget));
            show("2-TA ", exhaustive_ta_check(&params, 2, &budget));
        }
    }
    Ok(())
}
