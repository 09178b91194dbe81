//! With every seed equal to `x`, the block construction frames `x` itself.

use rssep::constructions::frameproof_remark;
use rssep::field::make_field;

fn main() -> Result<(), rssep::Error> {
    let f = make_field(7, 1)?;
    for c in 2..=6 {
        let demo = frameproof_remark(&f, c)?;
        let coalition: Vec<String> = demo.coalition.iter().map(|p| p.render()).collect();
        println!(
            "c = {c}: {{{}}} frames x: {}",
            coalition.join("; "),
            demo.is_framed()?
        );
    }
    Ok(())
}
