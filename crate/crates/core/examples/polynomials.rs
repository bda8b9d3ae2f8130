//! Parsing, arithmetic and derivatives of multivariate polynomials.

use regloc::field::Field;
use regloc::poly::{derivative, gcd, jacobian, parse_poly, PolyRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::new(Field::rationals(), ["s", "t", "Y", "Z"])?;
    let f = parse_poly("s + t*Z^3 - Z*Y^2", &ring)?;
    println!("ring {ring}");
    println!("f = {f}, total degree {}", f.total_degree());
    let g = parse_poly("(Y - Z)^2", &ring)?;
    println!("(Y - Z)^2 = {g}");
    println!("f * g = {}", f.try_mul(&g)?);
    let y = ring.var_index("Y").unwrap();
    println!("df/dY = {}", derivative(&f, y));
    for row in jacobian(&[f.clone()], &["Y", "Z"])? {
        let row: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        println!("jacobian row [{}]", row.join(", "));
    }
    let a = parse_poly("Y^2 - Z^2", &ring)?;
    println!("gcd(Y^2 - Z^2, (Y - Z)^2) = {}", gcd(&a, &g));
    Ok(())
}
