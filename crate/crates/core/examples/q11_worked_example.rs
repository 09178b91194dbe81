//! The `[11, 4, 8]` Reed-Solomon code over GF(11) is not 2-separating.

use rssep::constructions::{construct_q11_c2, q11_products, shifted_alphas, verify_witness};
use rssep::field::make_field;

fn main() -> Result<(), rssep::Error> {
    let f = make_field(11, 1)?;
    for shift in [0, 1] {
        let alphas = shifted_alphas(&f, shift);
        let (lhs, rhs) = q11_products(&f, &alphas)?;
        println!(
            "alpha_i = i + {shift}: solvability products {} != {}",
            f.render(lhs),
            f.render(rhs)
        );
        let w = construct_q11_c2(&f, &alphas, f.one())?;
        let params = w.code_params()?;
        for (name, family) in [("f", &w.u), ("g", &w.v)] {
            for (i, p) in family.iter().enumerate() {
                let word = params.evaluate(p).render(&f).join(",");
                println!("  {name}{} = {:<26} ({word})", i + 1, p.render());
            }
        }
        let report = verify_witness(&w)?;
        println!("  pirate z = ({})", report.pirate_text.join(","));
    }
    Ok(())
}
