//! Witnesses serialize to JSON and re-verify after parsing.

use rssep::constructions::{construct_c3_eighth, WitnessDocument};
use rssep::field::make_field;

fn main() -> Result<(), rssep::Error> {
    let f = make_field(3, 2)?;
    let doc = WitnessDocument::with_pirate(construct_c3_eighth(&f)?)?;
    let text = doc.to_json();
    println!("{text}");
    let back = WitnessDocument::from_json(&text)?;
    assert_eq!(back.to_json(), text);
    let report = back.verify()?;
    println!(
        "{}",
        serde_json::to_string(&report).expect("report serializes")
    );

    let tampered = text.replacen("\"c\": 3", "\"c\": 2", 1);
    match WitnessDocument::from_json(&tampered)?.verify() {
        Ok(_) => println!("tampered witness unexpectedly passed"),
        Err(e) => println!("tampered: {e}"),
    }
    Ok(())
}
