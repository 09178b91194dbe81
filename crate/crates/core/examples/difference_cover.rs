//! Differences of the first few powers of a primitive element cover the field.

use rssep::constructions::{
    cilleruelo_floor, construct_lin_cilleruelo, min_cover_bound, verify_witness,
};
use rssep::field::{is_prime, make_field};

fn main() -> Result<(), rssep::Error> {
    println!("{:>5} {:>5} {:>12}", "q", "B(q)", "floor 2q^3/4");
    for q in (29..=400u32).filter(|&q| is_prime(q as u64)) {
        let f = make_field(q, 1)?;
        let b = min_cover_bound(&f).expect("q > 2");
        let bound = cilleruelo_floor(q);
        assert!(b <= bound);
        println!("{q:>5} {b:>5} {bound:>12}");
    }
    let f = make_field(101, 1)?;
    let w = construct_lin_cilleruelo(&f)?;
    let report = verify_witness(&w)?;
    println!(
        "GF(101): {} lines against {} constants, d = {}, {}",
        w.u.len(),
        w.v.len(),
        w.claimed_d,
        report.verdict
    );
    Ok(())
}
