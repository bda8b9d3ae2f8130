use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{reduce_mod, Field, FieldError};
use crate::poly::{gcd, MultiPoly};

#[derive(Clone, Debug)]
pub(crate) enum Value {
    Rational(BigRational),
    Modular(u64),
    /// Reduced fraction; the denominator has leading coefficient 1.
    Fraction {
        num: MultiPoly,
        den: MultiPoly,
    },
}

/// An element of a [`Field`], always in canonical form.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: Value,
}

fn modulus(field: &Field) -> u64 {
    field.characteristic()
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let mut result = 1u128;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}

impl FieldElement {
    pub(crate) fn from_parts(field: Field, value: Value) -> FieldElement {
        FieldElement { field, value }
    }

    /// Builds `num / den` in a function field, reducing to lowest terms.
    pub fn fraction(
        field: &Field,
        num: MultiPoly,
        den: MultiPoly,
    ) -> Result<FieldElement, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let (num, den) = canonical_fraction(num, den);
        Ok(FieldElement {
            field: field.clone(),
            value: Value::Fraction { num, den },
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_zero(),
            Value::Modular(r) => *r == 0,
            Value::Fraction { num, .. } => num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_one(),
            Value::Modular(r) => *r == 1,
            Value::Fraction { num, den } => den.is_one() && num.is_one(),
        }
    }

    /// Numerator and denominator of a function-field element as polynomials
    /// in the transcendentals.
    pub fn as_fraction(&self) -> Option<(&MultiPoly, &MultiPoly)> {
        match &self.value {
            Value::Fraction { num, den } => Some((num, den)),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_modular(&self) -> Option<u64> {
        match &self.value {
            Value::Modular(r) => Some(*r),
            _ => None,
        }
    }

    /// True if the element lies in the prime field.
    pub fn is_prime_constant(&self) -> bool {
        match &self.value {
            Value::Fraction { num, den } => num.is_constant() && den.is_one(),
            _ => true,
        }
    }

    /// Elements printed without surrounding parentheses when used as a
    /// factor: nonnegative integers and single positive terms.
    pub(crate) fn is_atomic(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_integer() && !q.is_negative(),
            Value::Modular(_) => true,
            Value::Fraction { num, den } => {
                den.is_one() && num.terms().len() == 1 && num.terms()[0].coeff.is_atomic()
            }
        }
    }

    fn check_same(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::DescriptorMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a + b),
            (Value::Modular(a), Value::Modular(b)) => {
                let p = modulus(&self.field);
                Value::Modular(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            (Value::Fraction { num: a, den: b }, Value::Fraction { num: c, den: d }) => {
                if b == d {
                    let (n, d) = canonical_fraction(a + c, b.clone());
                    Value::Fraction { num: n, den: d }
                } else {
                    let (n, d) = canonical_fraction(&(a * d) + &(c * b), b * d);
                    Value::Fraction { num: n, den: d }
                }
            }
            _ => unreachable!("same field implies same representation"),
        };
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a * b),
            (Value::Modular(a), Value::Modular(b)) => {
                let p = modulus(&self.field);
                Value::Modular(((*a as u128 * *b as u128) % p as u128) as u64)
            }
            (Value::Fraction { num: a, den: b }, Value::Fraction { num: c, den: d }) => {
                if self.is_zero() || other.is_zero() {
                    return Ok(self.field.zero());
                }
                if b.is_one() && d.is_one() {
                    Value::Fraction {
                        num: a * c,
                        den: b.clone(),
                    }
                } else {
                    // Cross-cancel before multiplying; both inputs are reduced.
                    let g1 = gcd(a, d);
                    let g2 = gcd(c, b);
                    let a = a.exact_div(&g1).expect("gcd divides");
                    let d = d.exact_div(&g1).expect("gcd divides");
                    let c = c.exact_div(&g2).expect("gcd divides");
                    let b = b.exact_div(&g2).expect("gcd divides");
                    let (n, d) = normalize_den(&a * &c, &b * &d);
                    Value::Fraction { num: n, den: d }
                }
            }
            _ => unreachable!("same field implies same representation"),
        };
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let value = match &self.value {
            Value::Rational(a) => Value::Rational(a.recip()),
            Value::Modular(a) => Value::Modular(mod_inv(*a, modulus(&self.field))),
            Value::Fraction { num, den } => {
                let (n, d) = normalize_den(den.clone(), num.clone());
                Value::Fraction { num: n, den: d }
            }
        };
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same(other)?;
        self.checked_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> FieldElement {
        let value = match &self.value {
            Value::Rational(a) => Value::Rational(-a),
            Value::Modular(a) => {
                let p = modulus(&self.field);
                Value::Modular(if *a == 0 { 0 } else { p - a })
            }
            Value::Fraction { num, den } => Value::Fraction {
                num: -num,
                den: den.clone(),
            },
        };
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Image under the canonical inclusion into `target`.
    pub fn embed(&self, target: &Field) -> Result<FieldElement, FieldError> {
        if &self.field == target {
            return Ok(self.clone());
        }
        if !target.contains(&self.field) {
            return Err(FieldError::NoCanonicalEmbedding {
                from: self.field.to_string(),
                to: target.to_string(),
            });
        }
        let ring = target
            .poly_ring()
            .expect("proper extension is a function field");
        let value = match &self.value {
            Value::Rational(_) | Value::Modular(_) => Value::Fraction {
                num: MultiPoly::constant(ring, self.clone()),
                den: MultiPoly::one(ring),
            },
            Value::Fraction { num, den } => Value::Fraction {
                num: num.rename_into(ring).expect("names are contained"),
                den: den.rename_into(ring).expect("names are contained"),
            },
        };
        Ok(FieldElement {
            field: target.clone(),
            value,
        })
    }

    /// Writes the element with an explicit sign: returns (negative, magnitude
    /// text). Used by the polynomial printer.
    pub(crate) fn sign_and_abs(&self) -> (bool, FieldElement) {
        let negative = match &self.value {
            Value::Rational(q) => q.is_negative(),
            Value::Modular(_) => false,
            Value::Fraction { num, .. } => {
                num.terms().len() == 1 && num.terms()[0].coeff.sign_and_abs().0
            }
        };
        if negative {
            (true, self.neg_ref())
        } else {
            (false, self.clone())
        }
    }
}

/// Divides out the gcd and makes the denominator's leading coefficient 1.
pub(crate) fn canonical_fraction(num: MultiPoly, den: MultiPoly) -> (MultiPoly, MultiPoly) {
    if num.is_zero() {
        let one = MultiPoly::one(num.ring());
        return (num, one);
    }
    if den.is_constant() {
        return normalize_den(num, den);
    }
    let g = gcd(&num, &den);
    let num = num.exact_div(&g).expect("gcd divides numerator");
    let den = den.exact_div(&g).expect("gcd divides denominator");
    normalize_den(num, den)
}

fn normalize_den(num: MultiPoly, den: MultiPoly) -> (MultiPoly, MultiPoly) {
    let lc = den.leading_coeff().expect("nonzero denominator");
    if lc.is_one() {
        return (num, den);
    }
    let inv = lc.inv().expect("nonzero");
    (num.scale(&inv), den.scale(&inv))
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        if self.field != other.field {
            return false;
        }
        match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => a == b,
            (Value::Modular(a), Value::Modular(b)) => a == b,
            (Value::Fraction { num: a, den: b }, Value::Fraction { num: c, den: d }) => {
                a == c && b == d
            }
            _ => false,
        }
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.value {
            Value::Rational(q) => q.hash(state),
            Value::Modular(r) => r.hash(state),
            Value::Fraction { num, den } => {
                num.hash(state);
                den.hash(state);
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            /// Panics if the operands live in different fields.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs)
                    .expect(concat!("field ", stringify!($method)))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Value::Modular(r) => write!(f, "{r}"),
            Value::Fraction { num, den } => {
                if den.is_one() {
                    write!(f, "{num}")
                } else {
                    write!(f, "({num})/({den})")
                }
            }
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

impl Field {
    /// `num / den` as an element of ℚ, or of 𝔽ₚ after reduction.
    pub fn ratio(&self, num: i64, den: i64) -> Result<FieldElement, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        match self.descriptor() {
            super::FieldDescriptor::PrimeField(p) => {
                let d = reduce_mod(&BigInt::from(den), *p);
                if d == 0 {
                    return Err(FieldError::DivisionByZero);
                }
                self.from_int(num).checked_div(&self.from_int(den))
            }
            _ => self.from_rational(&BigRational::new(num.into(), den.into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{field_embed, FieldDescriptor};

    #[test]
    fn rational_sum() {
        let q = Field::rationals();
        let a = q.ratio(1, 2).unwrap();
        let b = q.ratio(1, 3).unwrap();
        assert_eq!(&a + &b, q.ratio(5, 6).unwrap());
        assert_eq!((&a + &b).to_string(), "5/6");
    }

    #[test]
    fn modular_product() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(&f5.from_int(3) * &f5.from_int(4), f5.from_int(2));
        assert_eq!(f5.from_int(-1), f5.from_int(4));
        assert_eq!(f5.from_int(2).inv().unwrap(), f5.from_int(3));
    }

    #[test]
    fn function_field_inverse_pair() {
        let qt = Field::rationals().adjoin(&["t"]).unwrap();
        let t = qt.transcendental("t").unwrap();
        let t1 = &t + &qt.one();
        let x = t.checked_div(&t1).unwrap();
        let y = t1.checked_div(&t).unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(x.to_string(), "(t)/(t + 1)");
    }

    #[test]
    fn fractions_reduce() {
        let qt = Field::rationals().adjoin(&["t"]).unwrap();
        let t = qt.transcendental("t").unwrap();
        let one = qt.one();
        // (t^2 - 1)/(2t - 2) = (t + 1)/2
        let num = &(&t * &t) - &one;
        let den = &(&qt.from_int(2) * &t) - &qt.from_int(2);
        let r = num.checked_div(&den).unwrap();
        let expected = (&t + &one).checked_div(&qt.from_int(2)).unwrap();
        assert_eq!(r, expected);
        let (_, d) = r.as_fraction().unwrap();
        assert!(d.is_one());
    }

    #[test]
    fn errors() {
        let q = Field::rationals();
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(
            q.one().checked_add(&f5.one()),
            Err(FieldError::DescriptorMismatch { .. })
        ));
        assert_eq!(
            q.one().checked_div(&q.zero()),
            Err(FieldError::DivisionByZero)
        );
        assert_eq!(f5.ratio(1, 5), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn embeddings() {
        let q = Field::rationals();
        let qt = q.adjoin(&["t"]).unwrap();
        let two = field_embed(&q.from_int(2), &qt).unwrap();
        assert_eq!(two, qt.from_int(2));

        let f5 = Field::prime(5).unwrap();
        let f5tu = f5.adjoin(&["t", "u"]).unwrap();
        assert!(field_embed(&f5.one(), &f5tu).unwrap().is_one());

        let qtu = Field::new(FieldDescriptor::FunctionField {
            base: Box::new(FieldDescriptor::Rationals),
            transcendentals: vec!["t".into(), "u".into()],
        })
        .unwrap();
        let t = qt.transcendental("t").unwrap();
        assert_eq!(
            field_embed(&t, &qtu).unwrap(),
            qtu.transcendental("t").unwrap()
        );
        assert!(matches!(
            field_embed(&q.one(), &f5),
            Err(FieldError::NoCanonicalEmbedding { .. })
        ));
        assert!(field_embed(&qtu.transcendental("u").unwrap(), &qt).is_err());
    }
}
