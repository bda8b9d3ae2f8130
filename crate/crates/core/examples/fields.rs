//! Exact arithmetic in QQ, GF(p) and rational function fields.

use regloc::field::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::rationals();
    let a = q.ratio(3, 4)?;
    let b = q.ratio(-5, 6)?;
    println!("in {q}: ({a}) + ({b}) = {}", a.checked_add(&b)?);
    println!("in {q}: ({a}) / ({b}) = {}", a.checked_div(&b)?);

    let f7 = Field::prime(7)?;
    let x = f7.from_int(3);
    println!("in {f7}: 3^-1 = {}, 3^6 = {}", x.inv()?, x.pow(6));

    let kt = q.adjoin(&["t"])?;
    let t = kt.transcendental("t")?;
    let one = kt.one();
    let r = t
        .checked_mul(&t)?
        .checked_sub(&one)?
        .checked_div(&t.checked_sub(&one)?)?;
    println!("in {kt}: (t^2 - 1)/(t - 1) = {r}");
    println!("{kt} is perfect: {}", kt.is_perfect());
    println!(
        "{} is perfect: {}",
        f7.adjoin(&["t"])?,
        f7.adjoin(&["t"])?.is_perfect()
    );
    Ok(())
}
