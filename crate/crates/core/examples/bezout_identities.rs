//! Bezout pairs `a*u - b*v = z` with `deg a < deg v`, `deg b < deg u`.

use rssep::field::make_field;
use rssep::poly::Poly;

fn main() -> Result<(), rssep::Error> {
    let f = make_field(13, 1)?;
    let pts = f.canonical_order();
    let u = Poly::from_roots(&f, &pts[0..4])?;
    let v = Poly::from_roots(&f, &pts[4..7])?;
    println!("u = {}\nv = {}", u.render(), v.render());

    let (a, b) = Poly::bezout_min(&u, &v)?;
    println!("a*u - b*v = 1 with a = {}, b = {}", a.render(), b.render());
    assert_eq!(&(&a * &u) - &(&b * &v), Poly::one(&f));

    let z = Poly::from_ints(&f, &[3, 0, 7, 0, 0, 1]);
    let (a, b) = Poly::bezout_target(&u, &v, &z)?;
    println!(
        "a*u - b*v = {} with a = {}, b = {}",
        z.render(),
        a.render(),
        b.render()
    );
    assert_eq!(&(&a * &u) - &(&b * &v), z);

    let too_high = Poly::monomial(&f, f.one(), 7);
    println!(
        "target x^7: {}",
        Poly::bezout_target(&u, &v, &too_high).unwrap_err()
    );
    Ok(())
}
