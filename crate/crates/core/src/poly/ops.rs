use std::collections::BTreeMap;

use super::{Monomial, MultiPoly, PolyError, PolyRing};
use crate::field::FieldElement;

/// Variable name to replacement polynomial.
pub type Bindings = BTreeMap<String, MultiPoly>;

/// Evaluates `f` with variables replaced by polynomials of `target`.
///
/// A variable is replaced by its binding if present, otherwise by the target
/// variable of the same name, otherwise by the target field's transcendental
/// of that name. Coefficients are embedded into the target field; a
/// coefficient with polynomial numerator and constant denominator may also
/// be moved from transcendentals back to ring variables.
pub fn substitute(
    f: &MultiPoly,
    bindings: &Bindings,
    target: &PolyRing,
) -> Result<MultiPoly, PolyError> {
    let src = f.ring();
    let mut images = Vec::with_capacity(src.nvars());
    for (i, name) in src.vars().iter().enumerate() {
        // only resolve variables that actually occur
        if f.degree_in(i) == 0 {
            images.push(None);
            continue;
        }
        let img = if let Some(b) = bindings.get(name) {
            b.in_ring(target)?
        } else if let Some(j) = target.var_index(name) {
            MultiPoly::var(target, j)
        } else if let Ok(c) = target.field().transcendental(name) {
            MultiPoly::constant(target, c)
        } else {
            return Err(PolyError::NoSuchVariable(name.clone()));
        };
        images.push(Some(img));
    }
    let mut powers: Vec<Vec<MultiPoly>> = images
        .iter()
        .map(|i| match i {
            Some(p) => vec![MultiPoly::one(target), p.clone()],
            None => vec![MultiPoly::one(target)],
        })
        .collect();
    let mut acc = MultiPoly::zero(target);
    for t in f.terms() {
        let mut term = coeff_into(&t.coeff, target)?;
        for (i, &e) in t.mono.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let pw = &mut powers[i];
            while pw.len() <= e as usize {
                let next = &pw[pw.len() - 1] * &pw[1];
                pw.push(next);
            }
            term = &term * &pw[e as usize];
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

fn coeff_into(c: &FieldElement, target: &PolyRing) -> Result<MultiPoly, PolyError> {
    match c.embed(target.field()) {
        Ok(e) => Ok(MultiPoly::constant(target, e)),
        Err(err) => {
            let (num, den) = c.as_fraction().ok_or(PolyError::Field(err.clone()))?;
            let d = den.constant_value().ok_or(PolyError::Field(err))?;
            let n = substitute(num, &Bindings::new(), target)?;
            let d = coeff_into(&d, target)?;
            let inv = d
                .constant_value()
                .expect("constant")
                .inv()
                .map_err(PolyError::Field)?;
            Ok(n.scale(&inv))
        }
    }
}

/// Partial derivative with respect to variable `var`.
pub fn derivative(f: &MultiPoly, var: usize) -> MultiPoly {
    let ring = f.ring();
    let field = ring.field();
    MultiPoly::from_terms(
        ring,
        f.terms()
            .iter()
            .filter(|t| t.mono.exps()[var] > 0)
            .map(|t| {
                let mut e = t.mono.exps().to_vec();
                let k = e[var];
                e[var] -= 1;
                (Monomial::new(e), &t.coeff * &field.from_int(k as i64))
            }),
    )
    .in_ring(ring)
    .expect("same ring")
}

/// Matrix `∂f_i/∂v_j` for the named variables.
pub fn jacobian<S: AsRef<str>>(
    fs: &[MultiPoly],
    vars: &[S],
) -> Result<Vec<Vec<MultiPoly>>, PolyError> {
    let mut out = Vec::with_capacity(fs.len());
    for f in fs {
        let mut row = Vec::with_capacity(vars.len());
        for v in vars {
            let i = f
                .ring()
                .var_index(v.as_ref())
                .ok_or_else(|| PolyError::NoSuchVariable(v.as_ref().to_string()))?;
            row.push(derivative(f, i));
        }
        out.push(row);
    }
    Ok(out)
}
