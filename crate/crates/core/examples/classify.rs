//! Regularity verdicts, weak dimension and regular sequence witnesses.

use regloc::algebra::PresentedAlgebra;
use regloc::field::Field;
use regloc::regular::classify;
use regloc::valuation::ValuationRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let base = ValuationRing::zn_lex(Field::rationals(), &["s", "t"])?;
    let x_chart = PresentedAlgebra::new(base.clone(), &["Y", "Z"], &["s + t*Z^3 - Z*Y^2"])?;
    let z_chart = PresentedAlgebra::new(base, &["X", "Y"], &["s*X^3 - Y^2 + t"])?;
    let points = [
        x_chart.point("Q", "p", &["Y", "Z"])?,
        x_chart.point("Q''", "N", &["Y", "Z"])?,
        z_chart.point("Q'", "N", &["X - 1", "Y"])?,
    ];
    for pt in &points {
        let v = classify(pt)?;
        let cert = v
            .certificate
            .as_ref()
            .map(|c| c.to_string())
            .unwrap_or_default();
        println!("{}: {} by {cert}, wdim {}", pt.name, v.status, v.wdim);
        if let Some(w) = &v.witness {
            println!(
                "  regular sequence ({}), proofs reverify: {}",
                w.names().join(", "),
                w.verify()?
            );
        }
    }
    Ok(())
}
