//! Grade lower bounds, grade after adjoining variables and the fibre CM test.

use regloc::algebra::PresentedAlgebra;
use regloc::field::Field;
use regloc::groebner::Ideal;
use regloc::poly::PolyRing;
use regloc::regular::{fibre_cm_check, grade_search, polynomial_grade, DEFAULT_POOL_DEGREE};
use regloc::valuation::ValuationRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::new(Field::rationals(), ["x", "y", "z"])?;
    let modulus = Ideal::parse(&ring, &["x*z", "y*z"])?;
    let ideal = Ideal::parse(&ring, &["x", "y", "z"])?;
    let g = grade_search(&modulus, &ideal, DEFAULT_POOL_DEGREE)?;
    let seq: Vec<String> = g.sequence.iter().map(|f| f.to_string()).collect();
    println!(
        "grade >= {} via ({}) from {} candidates",
        g.length,
        seq.join(", "),
        g.pool_size
    );

    let pg = polynomial_grade(&modulus, &ideal, 2, DEFAULT_POOL_DEGREE)?;
    println!(
        "with extra variables: {:?}, stable {} from {:?}",
        pg.per_level, pg.stable, pg.stable_from
    );

    let base = ValuationRing::zn_lex(Field::rationals(), &["s", "t"])?;
    // a line with an embedded point at the origin, constant over the base
    let a = PresentedAlgebra::new(base, &["Y", "Z"], &["Y^2", "Y*Z"])?;
    for prime in ["0", "N"] {
        let pt = a.point("o", prime, &["Y", "Z"])?;
        let cm = fibre_cm_check(&pt)?;
        let socle: Vec<String> = cm.witness.iter().map(|f| f.to_string()).collect();
        println!(
            "fibre over {prime} at o: {:?}, local dim {}, witness [{}]",
            cm.status,
            cm.local_dim,
            socle.join(", ")
        );
    }
    Ok(())
}
