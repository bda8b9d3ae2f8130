//! Fibres and cotangent spaces of the cubic on the chart X = 1.

use regloc::algebra::{cotangent_dim, fibre_cotangent, fibre_local_dim, PresentedAlgebra};
use regloc::field::Field;
use regloc::valuation::ValuationRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let base = ValuationRing::zn_lex(Field::rationals(), &["s", "t"])?;
    let a = PresentedAlgebra::new(base.clone(), &["Y", "Z"], &["s + t*Z^3 - Z*Y^2"])?;
    for p in base.primes() {
        println!(
            "fibre over {p}: {} in {}, dim {}",
            a.fibre_ideal(&p)?,
            a.fibre_ring(&p),
            a.fibre_dim(&p)?
        );
    }
    for prime in ["p", "N"] {
        let pt = a.point("origin", prime, &["Y", "Z"])?;
        let t = fibre_cotangent(&pt)?;
        println!(
            "origin over {prime}: dim T = {}, fibre dim T = {}, fibre local dim = {}",
            cotangent_dim(&pt)?,
            t.dim,
            fibre_local_dim(&pt)?
        );
    }
    Ok(())
}
