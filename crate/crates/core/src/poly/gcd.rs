//! Multivariate gcd by recursive content / primitive-part pseudo-remainder
//! sequences. Only used to keep rational-function coefficients reduced.

use super::{Monomial, MultiPoly};

/// Greatest common divisor, normalized to leading coefficient 1.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.ring());
    }
    let var = a
        .variables()
        .into_iter()
        .chain(b.variables())
        .max()
        .expect("non-constant polynomials have variables");
    let (da, db) = (a.degree_in(var), b.degree_in(var));
    if da == 0 {
        return gcd(a, &content(b, var));
    }
    if db == 0 {
        return gcd(&content(a, var), b);
    }
    let ca = content(a, var);
    let cb = content(b, var);
    let c = gcd(&ca, &cb);
    let mut p = a.exact_div(&ca).expect("content divides");
    let mut q = b.exact_div(&cb).expect("content divides");
    if p.degree_in(var) < q.degree_in(var) {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        let r = pseudo_rem(&p, &q, var);
        if r.is_zero() {
            break q;
        }
        if r.degree_in(var) == 0 {
            break MultiPoly::one(a.ring());
        }
        p = q;
        q = primitive_part(&r, var);
    };
    (&c * &primitive_part(&g, var)).monic()
}

/// Gcd of the coefficients of `f` viewed as a polynomial in `var`.
fn content(f: &MultiPoly, var: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(f.ring());
    for (_, c) in f.coefficients_in(var) {
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part(f: &MultiPoly, var: usize) -> MultiPoly {
    let c = content(f, var);
    f.exact_div(&c).expect("content divides").monic()
}

fn leading_coeff_in(f: &MultiPoly, var: usize) -> (u32, MultiPoly) {
    f.coefficients_in(var).pop().expect("nonzero polynomial")
}

fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let (db, lb) = leading_coeff_in(b, var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let (dr, lr) = leading_coeff_in(&r, var);
        let mut shift = Monomial::one(a.ring().nvars()).exps().to_vec();
        shift[var] = dr - db;
        let shifted = b.mul_term(&Monomial::new(shift), &a.ring().field().one());
        r = &(&lb * &r) - &(&lr * &shifted);
    }
    r
}
