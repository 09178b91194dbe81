//! Arithmetic in GF(9) and GF(16): modulus, primitive element, inverses.

use rssep::field::make_field;

fn main() -> Result<(), rssep::Error> {
    for (p, s) in [(3, 2), (2, 4)] {
        let f = make_field(p, s)?;
        let alpha = f.primitive();
        println!(
            "GF({}) = GF({p})[x]/({})  primitive {}",
            f.q(),
            f.render_modulus(),
            f.render(alpha)
        );
        for e in 0..f.q() as i64 - 1 {
            let a = f.alpha_pow(e);
            let inv = f.inv(a)?;
            assert_eq!(f.mul(a, inv), f.one());
            println!(
                "  alpha^{e:<2} = {:<9}  inverse {}",
                f.render(a),
                f.render(inv)
            );
        }
    }
    Ok(())
}
