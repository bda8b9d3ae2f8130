use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, PolyError, PolyRing};
use crate::field::FieldElement;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: FieldElement,
}

/// A polynomial with nonzero coefficients stored in descending order of the
/// ring's monomial order. The representation is unique.
#[derive(Clone)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: Vec<Term>,
}

impl MultiPoly {
    pub fn zero(ring: &PolyRing) -> MultiPoly {
        MultiPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &PolyRing) -> MultiPoly {
        MultiPoly::constant(ring, ring.field().one())
    }

    /// Panics if `c` is not an element of the ring's field.
    pub fn constant(ring: &PolyRing, c: FieldElement) -> MultiPoly {
        MultiPoly::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_int(ring: &PolyRing, n: i64) -> MultiPoly {
        MultiPoly::constant(ring, ring.field().from_int(n))
    }

    pub fn var(ring: &PolyRing, i: usize) -> MultiPoly {
        MultiPoly::monomial(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    /// The variable called `name`.
    pub fn var_named(ring: &PolyRing, name: &str) -> Result<MultiPoly, PolyError> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| PolyError::NoSuchVariable(name.to_string()))?;
        Ok(MultiPoly::var(ring, i))
    }

    pub fn monomial(ring: &PolyRing, mono: Monomial, coeff: FieldElement) -> MultiPoly {
        assert_eq!(
            coeff.field(),
            ring.field(),
            "coefficient from a foreign field"
        );
        assert_eq!(mono.len(), ring.nvars(), "exponent vector length");
        if coeff.is_zero() {
            return MultiPoly::zero(ring);
        }
        MultiPoly {
            ring: ring.clone(),
            terms: vec![Term { mono, coeff }],
        }
    }

    /// Collects arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(
        ring: &PolyRing,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> MultiPoly {
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.nvars(), "exponent vector length");
            match acc.get_mut(&m) {
                Some(e) => *e = &*e + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(b.mono.exps(), a.mono.exps()));
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one() && self.terms[0].coeff.is_one()
    }

    /// Zero or a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].mono.is_one())
    }

    pub fn constant_value(&self) -> Option<FieldElement> {
        if self.is_zero() {
            Some(self.ring.field().zero())
        } else if self.is_constant() {
            Some(self.terms[0].coeff.clone())
        } else {
            None
        }
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| t.mono.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|t| t.mono.exps()[var])
            .max()
            .unwrap_or(0)
    }

    /// Indices of variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|t| t.mono.exps()[i] > 0))
            .collect()
    }

    /// Same polynomial stored in `ring`, which must have the same field and
    /// variables (typically a different order).
    pub fn in_ring(&self, ring: &PolyRing) -> Result<MultiPoly, PolyError> {
        self.ring.check_same(ring)?;
        if self.ring.order() == ring.order() {
            return Ok(MultiPoly {
                ring: ring.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(b.mono.exps(), a.mono.exps()));
        Ok(MultiPoly {
            ring: ring.clone(),
            terms,
        })
    }

    fn aligned<'a>(
        &self,
        other: &'a MultiPoly,
    ) -> Result<std::borrow::Cow<'a, MultiPoly>, PolyError> {
        self.ring.check_same(&other.ring)?;
        if self.ring.order() == other.ring.order() {
            Ok(std::borrow::Cow::Borrowed(other))
        } else {
            Ok(std::borrow::Cow::Owned(other.in_ring(&self.ring)?))
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let other = self.aligned(other)?;
        Ok(self.merge(&other, false))
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let other = self.aligned(other)?;
        Ok(self.merge(&other, true))
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let other = self.aligned(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(&self.ring));
        }
        if other.terms.len() == 1 {
            let t = &other.terms[0];
            return Ok(self.mul_term(&t.mono, &t.coeff));
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return Ok(other.mul_term(&t.mono, &t.coeff).in_ring(&self.ring)?);
        }
        let products = self.terms.iter().flat_map(|a| {
            other
                .terms
                .iter()
                .map(move |b| (a.mono.mul(&b.mono), &a.coeff * &b.coeff))
        });
        Ok(MultiPoly::from_terms(&self.ring, products))
    }

    fn merge(&self, other: &MultiPoly, subtract: bool) -> MultiPoly {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match order.cmp(a.mono.exps(), b.mono.exps()) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { -&b.coeff } else { b.coeff.clone() };
                    out.push(Term {
                        mono: b.mono.clone(),
                        coeff: c,
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        &a.coeff - &b.coeff
                    } else {
                        &a.coeff + &b.coeff
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            mono: a.mono.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for b in &other.terms[j..] {
            let c = if subtract { -&b.coeff } else { b.coeff.clone() };
            out.push(Term {
                mono: b.mono.clone(),
                coeff: c,
            });
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `self · c · m`; the order is multiplicative, so sorting is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    /// `self − c · m · g` for `g` in the same ring and order.
    pub(crate) fn sub_mul_term(&self, c: &FieldElement, m: &Monomial, g: &MultiPoly) -> MultiPoly {
        let shifted = g.mul_term(m, c);
        self.merge(&shifted, true)
    }

    pub fn scale(&self, c: &FieldElement) -> MultiPoly {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    /// Leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Result<MultiPoly, PolyError> {
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            let mut exps = Vec::with_capacity(t.mono.len());
            for &x in t.mono.exps() {
                exps.push(x.checked_mul(e).ok_or(PolyError::ExponentOverflow)?);
            }
            return Ok(MultiPoly::monomial(
                &self.ring,
                Monomial::new(exps),
                t.coeff.pow(e),
            ));
        }
        let max_deg = self
            .terms
            .iter()
            .flat_map(|t| t.mono.exps().iter())
            .max()
            .copied()
            .unwrap_or(0);
        if (max_deg as u64) * (e as u64) > u32::MAX as u64 {
            return Err(PolyError::ExponentOverflow);
        }
        let mut base = self.clone();
        let mut acc = MultiPoly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let d = self.aligned(d).ok()?;
        let lt = d.leading_term()?;
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some(t) = r.leading_term() {
            if !lt.mono.divides(&t.mono) {
                return None;
            }
            let m = t.mono.div(&lt.mono);
            let c = &t.coeff / &lt.coeff;
            r = r.sub_mul_term(&c, &m, &d);
            q.push(Term { mono: m, coeff: c });
        }
        Some(MultiPoly {
            ring: self.ring.clone(),
            terms: q,
        })
    }

    /// Coefficients with respect to variable `var`: pairs (degree, coefficient
    /// with `var` removed), coefficient polynomials stay in this ring.
    pub(crate) fn coefficients_in(&self, var: usize) -> Vec<(u32, MultiPoly)> {
        let mut by_deg: std::collections::BTreeMap<u32, Vec<(Monomial, FieldElement)>> =
            Default::default();
        for t in &self.terms {
            let d = t.mono.exps()[var];
            let mut e = t.mono.exps().to_vec();
            e[var] = 0;
            by_deg
                .entry(d)
                .or_default()
                .push((Monomial::new(e), t.coeff.clone()));
        }
        by_deg
            .into_iter()
            .map(|(d, ts)| (d, MultiPoly::from_terms(&self.ring, ts)))
            .collect()
    }

    /// Wraps terms already sorted descending in `ring`'s order, nonzero and
    /// with distinct monomials.
    pub(crate) fn from_sorted_terms(ring: &PolyRing, terms: Vec<Term>) -> MultiPoly {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(w[0].mono.exps(), w[1].mono.exps()) == Ordering::Greater));
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Everything but the leading term.
    pub(crate) fn tail(&self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.get(1..).unwrap_or(&[]).to_vec(),
        }
    }

    /// Maps variables by name into `target`, whose variables or field
    /// transcendentals must include every variable occurring here.
    /// Coefficients are embedded into the target field.
    pub fn rename_into(&self, target: &PolyRing) -> Result<MultiPoly, PolyError> {
        super::substitute(self, &super::Bindings::new(), target)
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if !self.ring.same_ring(&other.ring) {
            return false;
        }
        if self.ring.order() == other.ring.order() {
            self.terms == other.terms
        } else {
            match other.in_ring(&self.ring) {
                Ok(o) => self.terms == o.terms,
                Err(_) => false,
            }
        }
    }
}

impl Eq for MultiPoly {}

impl Hash for MultiPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Order-independent so that equal polynomials hash equally.
        let mut sorted: Vec<&Term> = self.terms.iter().collect();
        sorted.sort_by(|a, b| a.mono.cmp(&b.mono));
        for t in sorted {
            t.mono.hash(state);
            t.coeff.hash(state);
        }
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            /// Panics if the operands live in different rings.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs)
                    .expect(concat!("polynomial ", stringify!($method)))
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add, try_add);
forward_poly_binop!(Sub, sub, try_sub);
forward_poly_binop!(Mul, mul, try_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    coeff: -&t.coeff,
                })
                .collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical text: terms in descending ring order, re-parseable by
    /// [`parse_poly`](super::parse_poly).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let (negative, abs) = t.coeff.sign_and_abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(self.ring.vars(), &t.mono);
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => {
                    if abs.is_atomic() || abs.as_rational().is_some() {
                        write!(f, "{abs}")?
                    } else {
                        write!(f, "({abs})")?
                    }
                }
                (false, true) => write!(f, "{mono}")?,
                (false, false) => {
                    if abs.is_atomic() || abs.as_rational().is_some() {
                        write!(f, "{abs}*{mono}")?
                    } else {
                        write!(f, "({abs})*{mono}")?
                    }
                }
            }
        }
        Ok(())
    }
}

fn format_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(m.exps()) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring)
    }
}
