//! Values, primes and residue fields of the two monomial valuation rings.

use regloc::field::Field;
use regloc::poly::parse_poly;
use regloc::valuation::ValuationRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let zn = ValuationRing::zn_lex(Field::rationals(), &["s", "t"])?;
    let dense = ValuationRing::dense_sqrt2(Field::rationals(), &["t", "u"])?;
    for v in [&zn, &dense] {
        println!("value group {:?}", v.group());
        for p in v.primes() {
            let fg = if p.is_zero() {
                "-".to_string()
            } else {
                v.is_fg_prime(&p)?.to_string()
            };
            println!(
                "  prime {p}: residue field {}, finitely generated: {fg}",
                v.residue_field(&p)
            );
        }
        let ring = v.param_ring();
        let names = v.params();
        for text in [
            names[0].clone(),
            names[1].clone(),
            format!("{} + {}^2", names[0], names[1]),
        ] {
            let f = parse_poly(&text, ring)?;
            println!(
                "  v({text}) = {}, rad = {}",
                v.value_of_poly(&f)?,
                v.rad_principal_poly(&f)?
            );
        }
        println!("  gldim bound for wdim 2: {}", v.gldim_bound(2));
    }
    Ok(())
}
