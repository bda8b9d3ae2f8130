//! Gröbner bases, membership, colon, saturation and dimension.

use regloc::field::Field;
use regloc::groebner::Ideal;
use regloc::poly::{parse_poly, PolyRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::new(Field::rationals(), ["x", "y", "z"])?;
    let i = Ideal::parse(&ring, &["x^2 - y", "x*y - z"])?;
    let basis: Vec<String> = i.basis()?.iter().map(|g| g.to_string()).collect();
    println!("I = {i}");
    println!("reduced basis: {}", basis.join(", "));
    println!("dim I = {}", i.krull_dim()?);
    let f = parse_poly("y^2 - x*z", &ring)?;
    println!("y^2 - x*z in I: {}", i.contains(&f)?);

    let j = Ideal::parse(&ring, &["x^2*y", "x*y^2"])?;
    let x = parse_poly("x", &ring)?;
    println!("({j}) : x = {}", j.colon(&x)?);
    println!("({j}) : x^inf = {}", j.saturation(&x)?);
    println!(
        "x*y in rad: {}",
        j.radical_contains(&parse_poly("x*y", &ring)?)?
    );
    println!("eliminating x from I: {}", i.eliminate(&["x"])?);
    Ok(())
}
