//! A pirate word forged by two disjoint coalitions defeats identification
//! and nearest-codeword tracing.

use rssep::constructions::{construct_q11_c2, shifted_alphas, verify_witness};
use rssep::field::make_field;
use rssep::oracle::{ipp_violation_check, ta_violation_check, Coalition, DEFAULT_MAX_SCAN};

fn main() -> Result<(), rssep::Error> {
    let f = make_field(11, 1)?;
    let w = construct_q11_c2(&f, &shifted_alphas(&f, 0), f.one())?;
    let params = w.code_params()?;
    let u = Coalition::new(w.u.iter().map(|p| params.evaluate(p)).collect())?;
    let v = Coalition::new(w.v.iter().map(|p| params.evaluate(p)).collect())?;
    let z = verify_witness(&w)?.pirate;
    println!("z = ({})", z.render(&f).join(","));

    let cert = ipp_violation_check(&u, &v, &z.symbols)?;
    println!(
        "{}: both coalitions of sizes {} and {} produce z",
        cert.verdict, cert.u_size, cert.v_size
    );

    let ta = ta_violation_check(&u, &z.symbols, &params, DEFAULT_MAX_SCAN)?;
    println!("nearest member of U at distance {}", ta.best_inside);
    if let (Some(d), Some(p)) = (ta.best_outside, &ta.nearest_outsider) {
        println!("nearest outsider {} at distance {d}", p.render());
    }
    println!("traceability violated: {}", ta.violated);
    Ok(())
}
