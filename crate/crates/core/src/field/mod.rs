//! Exact coefficient fields: ℚ, prime fields 𝔽ₚ and rational function fields
//! over either of them.
//!
//! A [`Field`] is a cheap handle around a validated [`FieldDescriptor`].
//! Function fields are always stored flattened, so `ℚ(t)(u)` and `ℚ(t, u)`
//! are the same field.

mod element;

pub use element::FieldElement;
pub(crate) use element::Value;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::poly::PolyRing;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("field descriptor mismatch: {left} vs {right}")]
    DescriptorMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("no canonical embedding of {from} into {to}")]
    NoCanonicalEmbedding { from: String, to: String },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("transcendental `{0}` declared twice")]
    DuplicateTranscendental(String),
    #[error("function field needs at least one transcendental")]
    NoTranscendentals,
    #[error("`{0}` is not a transcendental of this field")]
    UnknownTranscendental(String),
}

/// Structural description of a coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u64),
    FunctionField {
        base: Box<FieldDescriptor>,
        transcendentals: Vec<String>,
    },
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField(p) => *p,
            FieldDescriptor::FunctionField { base, .. } => base.characteristic(),
        }
    }

    /// The names of all transcendentals in the tower, innermost first.
    pub fn transcendentals(&self) -> Vec<String> {
        match self {
            FieldDescriptor::FunctionField {
                base,
                transcendentals,
            } => {
                let mut names = base.transcendentals();
                names.extend(transcendentals.iter().cloned());
                names
            }
            _ => Vec::new(),
        }
    }

    fn prime_base(&self) -> FieldDescriptor {
        match self {
            FieldDescriptor::FunctionField { base, .. } => base.prime_base(),
            other => other.clone(),
        }
    }

    /// Rewrites nested function fields into a single function field over the
    /// prime base.
    fn flattened(&self) -> FieldDescriptor {
        match self {
            FieldDescriptor::FunctionField { .. } => FieldDescriptor::FunctionField {
                base: Box::new(self.prime_base()),
                transcendentals: self.transcendentals(),
            },
            other => other.clone(),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "QQ"),
            FieldDescriptor::PrimeField(p) => write!(f, "GF({p})"),
            FieldDescriptor::FunctionField {
                base,
                transcendentals,
            } => write!(f, "{}({})", base, transcendentals.join(",")),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

struct FieldInner {
    desc: FieldDescriptor,
    /// For function fields: the polynomial ring over the prime base whose
    /// variables are the transcendentals.
    poly_ring: Option<PolyRing>,
}

/// Handle to a validated, flattened field.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl Field {
    pub fn new(desc: FieldDescriptor) -> Result<Field, FieldError> {
        match &desc {
            FieldDescriptor::Rationals => Ok(Field(Arc::new(FieldInner {
                desc,
                poly_ring: None,
            }))),
            FieldDescriptor::PrimeField(p) => {
                if !is_prime(*p) {
                    return Err(FieldError::NotPrime(*p));
                }
                Ok(Field(Arc::new(FieldInner {
                    desc,
                    poly_ring: None,
                })))
            }
            FieldDescriptor::FunctionField { .. } => {
                let flat = desc.flattened();
                let FieldDescriptor::FunctionField {
                    base,
                    transcendentals,
                } = &flat
                else {
                    unreachable!()
                };
                if transcendentals.is_empty() {
                    return Err(FieldError::NoTranscendentals);
                }
                for (i, name) in transcendentals.iter().enumerate() {
                    if transcendentals[..i].contains(name) {
                        return Err(FieldError::DuplicateTranscendental(name.clone()));
                    }
                }
                let base_field = Field::new((**base).clone())?;
                let ring = PolyRing::new(base_field, transcendentals.clone())
                    .map_err(|_| FieldError::DuplicateTranscendental(transcendentals.join(",")))?;
                Ok(Field(Arc::new(FieldInner {
                    desc: flat,
                    poly_ring: Some(ring),
                })))
            }
        }
    }

    pub fn rationals() -> Field {
        Field::new(FieldDescriptor::Rationals).expect("ℚ is valid")
    }

    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Field::new(FieldDescriptor::PrimeField(p))
    }

    /// `self(names…)`; when `names` is empty the field itself is returned.
    pub fn adjoin<S: AsRef<str>>(&self, names: &[S]) -> Result<Field, FieldError> {
        if names.is_empty() {
            return Ok(self.clone());
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        Field::new(FieldDescriptor::FunctionField {
            base: Box::new(self.descriptor().clone()),
            transcendentals: names,
        })
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.0.desc
    }

    pub fn characteristic(&self) -> u64 {
        self.0.desc.characteristic()
    }

    /// Characteristic zero or a finite field.
    pub fn is_perfect(&self) -> bool {
        self.characteristic() == 0 || self.transcendentals().is_empty()
    }

    pub fn transcendentals(&self) -> &[String] {
        match &self.0.desc {
            FieldDescriptor::FunctionField {
                transcendentals, ..
            } => transcendentals,
            _ => &[],
        }
    }

    pub fn is_function_field(&self) -> bool {
        self.0.poly_ring.is_some()
    }

    /// The prime field ℚ or 𝔽ₚ at the bottom of the tower.
    pub fn prime_base(&self) -> Field {
        match &self.0.poly_ring {
            Some(ring) => ring.field().clone(),
            None => self.clone(),
        }
    }

    pub(crate) fn poly_ring(&self) -> Option<&PolyRing> {
        self.0.poly_ring.as_ref()
    }

    pub fn zero(&self) -> FieldElement {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        let value = match &self.0.desc {
            FieldDescriptor::Rationals => Value::Rational(BigRational::from_integer(n.clone())),
            FieldDescriptor::PrimeField(p) => Value::Modular(reduce_mod(n, *p)),
            FieldDescriptor::FunctionField { .. } => {
                let ring = self.poly_ring().expect("function field ring");
                let c = ring.field().from_bigint(n);
                Value::Fraction {
                    num: crate::poly::MultiPoly::constant(ring, c),
                    den: crate::poly::MultiPoly::one(ring),
                }
            }
        };
        FieldElement::from_parts(self.clone(), value)
    }

    /// Image of a rational number; fails in characteristic p when p divides
    /// the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement, FieldError> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        num.checked_div(&den)
    }

    /// The transcendental called `name`, as an element of this field.
    pub fn transcendental(&self, name: &str) -> Result<FieldElement, FieldError> {
        let ring = self
            .poly_ring()
            .ok_or_else(|| FieldError::UnknownTranscendental(name.to_string()))?;
        let idx = ring
            .var_index(name)
            .ok_or_else(|| FieldError::UnknownTranscendental(name.to_string()))?;
        Ok(FieldElement::from_parts(
            self.clone(),
            Value::Fraction {
                num: crate::poly::MultiPoly::var(ring, idx),
                den: crate::poly::MultiPoly::one(ring),
            },
        ))
    }

    /// Whether `self` contains `other` through the name-preserving inclusion.
    pub fn contains(&self, other: &Field) -> bool {
        if self == other {
            return true;
        }
        if self.prime_base().descriptor() != other.prime_base().descriptor() {
            return false;
        }
        let mine = self.transcendentals();
        other.transcendentals().iter().all(|n| mine.contains(n))
    }
}

pub(crate) fn reduce_mod(n: &BigInt, p: u64) -> u64 {
    use num_integer::Integer;
    let m = n.mod_floor(&BigInt::from(p));
    u64::try_from(m).expect("residue fits in u64")
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.desc == other.0.desc
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.desc.hash(state)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.desc)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.desc)
    }
}

/// Canonical image of `a` in `target`.
pub fn field_embed(a: &FieldElement, target: &Field) -> Result<FieldElement, FieldError> {
    a.embed(target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(matches!(Field::prime(6), Err(FieldError::NotPrime(6))));
    }

    #[test]
    fn towers_flatten() {
        let qt = Field::rationals().adjoin(&["t"]).unwrap();
        let qtu = qt.adjoin(&["u"]).unwrap();
        let direct = Field::rationals().adjoin(&["t", "u"]).unwrap();
        assert_eq!(qtu, direct);
        assert_eq!(qtu.to_string(), "QQ(t,u)");
        assert!(matches!(
            qt.adjoin(&["t"]),
            Err(FieldError::DuplicateTranscendental(_))
        ));
    }

    #[test]
    fn containment() {
        let q = Field::rationals();
        let f5 = Field::prime(5).unwrap();
        let qt = q.adjoin(&["t"]).unwrap();
        let qtu = q.adjoin(&["t", "u"]).unwrap();
        assert!(qtu.contains(&qt));
        assert!(qt.contains(&q));
        assert!(!qt.contains(&qtu));
        assert!(!qt.contains(&f5));
    }
}
