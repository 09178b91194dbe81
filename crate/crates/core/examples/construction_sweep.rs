//! Every construction over a range of fields, with achieved versus stated distance.

use rssep::constructions::{
    construct_c2_third, construct_c3_eighth, construct_fp_block, construct_general_2cm1,
    construct_lin_cilleruelo, construct_lin_factor, construct_m2_div, even_power_split,
    verify_witness, ConstructionError, WitnessPair,
};
use rssep::field::{make_field_of_size, prime_power};

fn main() -> Result<(), rssep::Error> {
    let qmax: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(64);
    println!(
        "{:<15} {:>4} {:>2} {:>6} {:>9} {:>8}",
        "theorem", "q", "c", "max_deg", "claimed_d", "stated_d"
    );
    for q in (3..=qmax).filter(|&q| prime_power(q as u64).is_some()) {
        let f = make_field_of_size(q)?;
        let mut runs: Vec<Result<WitnessPair, ConstructionError>> = vec![
            construct_c2_third(&f),
            construct_c3_eighth(&f),
            construct_lin_cilleruelo(&f),
        ];
        for c in 2..=4 {
            runs.push(construct_fp_block(&f, c, None));
            runs.push(construct_general_2cm1(&f, c));
        }
        runs.push(construct_m2_div(&f, 2, 2));
        if let Ok((r, s)) = even_power_split(&f) {
            runs.push(construct_lin_factor(&f, r, s));
        }
        for w in runs.into_iter().flatten() {
            verify_witness(&w)?;
            println!(
                "{:<15} {:>4} {:>2} {:>7} {:>9} {:>8}",
                w.theorem.as_str(),
                q,
                w.c,
                w.max_degree,
                w.claimed_d,
                w.stated_d()
            );
        }
    }
    Ok(())
}
