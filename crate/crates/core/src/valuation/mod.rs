//! Valuation rings of monomial valuations on `κ₀(u₁,…,u_m)`.
//!
//! Two models are supported:
//! * split `ℤⁿ` lex: `n` parameters with `v(u_i) = e_i`;
//! * dense rank one: two parameters with `v(u₁) = 1`, `v(u₂) = √2`.
//!
//! Distinct monomials have distinct values in both models, so the value of
//! a polynomial is the value of a unique minimal monomial.

mod group;

pub use group::{GroupElement, Value, ValueGroup};

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};
use crate::poly::{substitute, Bindings, MultiPoly, PolyError, PolyRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("element has negative value at the prime and does not live in its local ring")]
    NegativeValue,
    #[error("element is not in the valuation ring")]
    NotMember,
    #[error("expected a non-unit")]
    UnitInput,
    #[error("expected a nonzero element")]
    ZeroInput,
    #[error("the zero prime is not allowed here")]
    ZeroPrimeInput,
    #[error("no prime named `{0}`")]
    UnknownPrime(String),
    #[error("`{0}` is not a parameter of the valuation ring")]
    NotAParameter(String),
    #[error("invalid valuation ring: {0}")]
    InvalidDescriptor(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A prime of the valuation ring. Primes form a chain indexed from the zero
/// prime (index 0) to the maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasePrime {
    index: usize,
    name: String,
}

impl BasePrime {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }
}

impl fmt::Display for BasePrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// The valuation ring `R = {x : v(x) ≥ 0}` of a monomial valuation.
#[derive(Clone, Debug)]
pub struct ValuationRing {
    kappa0: Field,
    params: Vec<String>,
    group: ValueGroup,
    param_ring: PolyRing,
    fraction_field: Field,
}

impl PartialEq for ValuationRing {
    fn eq(&self, other: &Self) -> bool {
        self.kappa0 == other.kappa0 && self.params == other.params && self.group == other.group
    }
}

impl ValuationRing {
    /// Split `ℤⁿ` lex model with `n = params.len() ≥ 1`.
    pub fn zn_lex<S: AsRef<str>>(kappa0: Field, params: &[S]) -> Result<ValuationRing, ValError> {
        if params.is_empty() {
            return Err(ValError::InvalidDescriptor(
                "at least one parameter is required".into(),
            ));
        }
        let rank = params.len();
        ValuationRing::build(kappa0, params, ValueGroup::ZnLex { rank })
    }

    /// Dense model with `v(u₁) = 1` and `v(u₂) = √2`.
    pub fn dense_sqrt2<S: AsRef<str>>(
        kappa0: Field,
        params: &[S],
    ) -> Result<ValuationRing, ValError> {
        if params.len() != 2 {
            return Err(ValError::InvalidDescriptor(
                "the dense model needs exactly two parameters".into(),
            ));
        }
        ValuationRing::build(kappa0, params, ValueGroup::DenseSqrt2)
    }

    fn build<S: AsRef<str>>(
        kappa0: Field,
        params: &[S],
        group: ValueGroup,
    ) -> Result<ValuationRing, ValError> {
        let params: Vec<String> = params.iter().map(|p| p.as_ref().to_string()).collect();
        let param_ring = PolyRing::new(kappa0.clone(), &params)?;
        let fraction_field = kappa0.adjoin(&params)?;
        Ok(ValuationRing {
            kappa0,
            params,
            group,
            param_ring,
            fraction_field,
        })
    }

    pub fn kappa0(&self) -> &Field {
        &self.kappa0
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn group(&self) -> &ValueGroup {
        &self.group
    }

    /// `κ₀[u₁,…,u_m]`.
    pub fn param_ring(&self) -> &PolyRing {
        &self.param_ring
    }

    /// `κ₀(u₁,…,u_m)`.
    pub fn fraction_field(&self) -> &Field {
        &self.fraction_field
    }

    /// `v(u_i)`.
    pub fn param_value(&self, i: usize) -> GroupElement {
        let mut e = vec![0u32; self.params.len()];
        e[i] = 1;
        self.monomial_value(&e)
    }

    fn monomial_value(&self, exps: &[u32]) -> GroupElement {
        match self.group {
            ValueGroup::ZnLex { .. } => GroupElement::Lex(exps.iter().map(|&e| e as i64).collect()),
            ValueGroup::DenseSqrt2 => GroupElement::Sqrt2 {
                a: exps[0] as i64,
                b: exps[1] as i64,
            },
        }
    }

    // ---- spectrum ----

    /// All primes, from the zero prime up to the maximal ideal.
    pub fn primes(&self) -> Vec<BasePrime> {
        (0..self.group.convex_subgroup_count())
            .map(|index| BasePrime {
                index,
                name: self.prime_name(index),
            })
            .collect()
    }

    fn prime_name(&self, index: usize) -> String {
        let top = self.group.convex_subgroup_count() - 1;
        match index {
            0 => "0".into(),
            i if i == top => "N".into(),
            1 if top == 2 => "p".into(),
            i => format!("P{i}"),
        }
    }

    pub fn prime(&self, name: &str) -> Result<BasePrime, ValError> {
        self.primes()
            .into_iter()
            .find(|p| p.name == name)
            .ok_or_else(|| ValError::UnknownPrime(name.to_string()))
    }

    pub fn zero_prime(&self) -> BasePrime {
        self.primes().remove(0)
    }

    pub fn maximal_prime(&self) -> BasePrime {
        self.primes().pop().expect("nonempty chain")
    }

    /// Number of leading parameters lying in `p` (they generate its trace).
    fn trace_len(&self, p: &BasePrime) -> usize {
        match self.group {
            ValueGroup::ZnLex { .. } => p.index,
            ValueGroup::DenseSqrt2 => {
                if p.is_zero() {
                    0
                } else {
                    self.params.len()
                }
            }
        }
    }

    /// Parameters generating `p ∩ κ₀[params]`.
    pub fn trace_params(&self, p: &BasePrime) -> &[String] {
        &self.params[..self.trace_len(p)]
    }

    /// Parameters that become units in `R_p` (coarsened value 0).
    pub fn inverted_params(&self, p: &BasePrime) -> &[String] {
        &self.params[self.trace_len(p)..]
    }

    /// Generator of `pR_p` among the parameters, when `p ≠ 0` is finitely
    /// generated.
    pub fn principal_generator(&self, p: &BasePrime) -> Option<&str> {
        match self.group {
            ValueGroup::ZnLex { .. } if !p.is_zero() => Some(&self.params[p.index - 1]),
            _ => None,
        }
    }

    /// Parameters of `p` lying in `(pR_p)²`: everything but the principal
    /// generator for the lex model, all parameters when `pR_p = (pR_p)²`.
    pub fn deep_params(&self, p: &BasePrime) -> &[String] {
        match self.group {
            ValueGroup::ZnLex { .. } => &self.params[..p.index.saturating_sub(1)],
            ValueGroup::DenseSqrt2 => self.trace_params(p),
        }
    }

    /// `pR_p` finitely generated (equivalently principal).
    pub fn is_fg_prime(&self, p: &BasePrime) -> Result<bool, ValError> {
        if p.is_zero() {
            return Err(ValError::ZeroPrimeInput);
        }
        Ok(matches!(self.group, ValueGroup::ZnLex { .. }))
    }

    /// `p` is the union of the strictly smaller primes. Only the zero prime
    /// (empty union) qualifies in the supported models.
    pub fn is_limit_prime(&self, p: &BasePrime) -> bool {
        p.is_zero()
    }

    // ---- values ----

    fn param_slots(&self, ring: &PolyRing) -> Vec<Option<usize>> {
        ring.vars()
            .iter()
            .map(|v| self.params.iter().position(|p| p == v))
            .collect()
    }

    /// Value of a polynomial in the parameters. Ring variables that are not
    /// parameters must not occur, except in `strict = false` mode where they
    /// are treated as constants (transcendentals of `κ₀`).
    fn poly_min(&self, f: &MultiPoly, strict: bool) -> Result<Value, ValError> {
        let slots = self.param_slots(f.ring());
        let mut best: Option<GroupElement> = None;
        for t in f.terms() {
            let mut e = vec![0u32; self.params.len()];
            for (i, &x) in t.mono.exps().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match slots[i] {
                    Some(k) => e[k] = x,
                    None if strict => {
                        return Err(ValError::NotAParameter(f.ring().vars()[i].clone()))
                    }
                    None => {}
                }
            }
            let v = self.monomial_value(&e);
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
        Ok(best.map_or(Value::Infinity, Value::Finite))
    }

    /// `v(f)` for a polynomial in the parameters (any ring whose occurring
    /// variables are parameters).
    pub fn value_of_poly(&self, f: &MultiPoly) -> Result<Value, ValError> {
        self.poly_min(f, true)
    }

    /// `v(num/den)`.
    pub fn value_of_fraction(&self, num: &MultiPoly, den: &MultiPoly) -> Result<Value, ValError> {
        if den.is_zero() {
            return Err(ValError::ZeroDenominator);
        }
        let vn = self.value_of_poly(num)?;
        let vd = self.value_of_poly(den)?;
        Ok(match (vn, vd) {
            (Value::Infinity, _) => Value::Infinity,
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(&a - &b),
            (_, Value::Infinity) => unreachable!("nonzero denominator"),
        })
    }

    /// `v(x)` for `x ∈ κ₀(params)` (or any subfield).
    pub fn value_of(&self, x: &FieldElement) -> Result<Value, ValError> {
        if x.is_zero() {
            return Ok(Value::Infinity);
        }
        let x = x.embed(&self.fraction_field)?;
        match x.as_fraction() {
            Some((n, d)) => {
                let a = self.poly_min(n, false)?;
                let b = self.poly_min(d, false)?;
                match (a, b) {
                    (Value::Finite(a), Value::Finite(b)) => Ok(Value::Finite(&a - &b)),
                    _ => unreachable!("nonzero fraction"),
                }
            }
            None => Ok(Value::Finite(self.group.zero())),
        }
    }

    pub fn is_member(&self, x: &FieldElement) -> Result<bool, ValError> {
        Ok(match self.value_of(x)? {
            Value::Infinity => true,
            Value::Finite(g) => g.sign() != Ordering::Less,
        })
    }

    pub fn is_unit(&self, x: &FieldElement) -> Result<bool, ValError> {
        Ok(matches!(self.value_of(x)?, Value::Finite(g) if g.is_zero()))
    }

    /// The smallest prime containing an element of positive value `g`.
    pub fn rad_principal_value(&self, g: &Value) -> Result<BasePrime, ValError> {
        let g = match g {
            Value::Infinity => return Err(ValError::ZeroInput),
            Value::Finite(g) => g,
        };
        match g.sign() {
            Ordering::Less => return Err(ValError::NotMember),
            Ordering::Equal => return Err(ValError::UnitInput),
            Ordering::Greater => {}
        }
        let index = match g {
            GroupElement::Lex(v) => v.iter().position(|&x| x != 0).expect("positive") + 1,
            GroupElement::Sqrt2 { .. } => 1,
        };
        Ok(self.primes().swap_remove(index))
    }

    /// `Rad(xR)` as a prime of the chain.
    pub fn rad_principal(&self, x: &FieldElement) -> Result<BasePrime, ValError> {
        self.rad_principal_value(&self.value_of(x)?)
    }

    pub fn rad_principal_poly(&self, f: &MultiPoly) -> Result<BasePrime, ValError> {
        self.rad_principal_value(&self.value_of_poly(f)?)
    }

    /// Image of a value in `Γ/H_p`, the value group of the coarsening `R_p`.
    pub fn coarsen(&self, g: &GroupElement, p: &BasePrime) -> GroupElement {
        match g {
            GroupElement::Lex(v) => GroupElement::Lex(v[..p.index].to_vec()),
            GroupElement::Sqrt2 { .. } if p.is_zero() => GroupElement::Lex(vec![]),
            GroupElement::Sqrt2 { .. } => g.clone(),
        }
    }

    // ---- residue fields ----

    /// `kp = Frac(R/p) = κ₀(inverted params)`.
    pub fn residue_field(&self, p: &BasePrime) -> Field {
        let inv = self.inverted_params(p);
        if inv.is_empty() {
            self.kappa0.clone()
        } else {
            self.kappa0.adjoin(inv).expect("parameters are fresh names")
        }
    }

    /// Coarsened minimum of `f` and its leading part with the trace
    /// parameters stripped, as an element of `kp`.
    fn leading_residue(
        &self,
        f: &MultiPoly,
        p: &BasePrime,
    ) -> Result<(GroupElement, FieldElement), ValError> {
        let slots = self.param_slots(f.ring());
        let trace = self.trace_len(p);
        let coarse = |exps: &[u32]| {
            let mut e = vec![0u32; self.params.len()];
            for (i, &x) in exps.iter().enumerate() {
                if let Some(k) = slots[i] {
                    e[k] = x;
                }
            }
            self.coarsen(&self.monomial_value(&e), p)
        };
        let cmin = f
            .terms()
            .iter()
            .map(|t| coarse(t.mono.exps()))
            .min()
            .expect("nonzero");
        let lead = MultiPoly::from_terms(
            f.ring(),
            f.terms()
                .iter()
                .filter(|t| coarse(t.mono.exps()) == cmin)
                .map(|t| {
                    let mut e = t.mono.exps().to_vec();
                    for (i, x) in e.iter_mut().enumerate() {
                        if slots[i].is_some_and(|k| k < trace) {
                            *x = 0;
                        }
                    }
                    (crate::poly::Monomial::new(e), t.coeff.clone())
                }),
        );
        let kp = self.residue_field(p);
        let point = PolyRing::new(kp, Vec::<String>::new())?;
        let r = substitute(&lead, &Bindings::new(), &point)?;
        Ok((cmin, r.constant_value().expect("no variables")))
    }

    /// Image of `x ∈ R_p` in `kp`.
    pub fn residue_map(&self, x: &FieldElement, p: &BasePrime) -> Result<FieldElement, ValError> {
        let kp = self.residue_field(p);
        if x.is_zero() {
            return Ok(kp.zero());
        }
        let x = x.embed(&self.fraction_field)?;
        let Some((n, d)) = x.as_fraction() else {
            return Ok(x.embed(&kp)?);
        };
        let (cn, rn) = self.leading_residue(n, p)?;
        let (cd, rd) = self.leading_residue(d, p)?;
        match cn.cmp(&cd) {
            Ordering::Less => Err(ValError::NegativeValue),
            Ordering::Greater => Ok(kp.zero()),
            Ordering::Equal => Ok(rn.checked_div(&rd)?),
        }
    }

    /// Reduction of a polynomial over `R` (coefficients polynomial in the
    /// parameters) to the fibre ring `kp[target vars]`: trace parameters go
    /// to 0, inverted parameters become transcendentals of `kp`.
    pub fn fibre_map(
        &self,
        f: &MultiPoly,
        p: &BasePrime,
        target: &PolyRing,
    ) -> Result<MultiPoly, ValError> {
        let mut b = Bindings::new();
        for u in self.trace_params(p) {
            b.insert(u.clone(), MultiPoly::zero(target));
        }
        Ok(substitute(f, &b, target)?)
    }

    /// Upper bound for the global dimension of a local ring of weak dimension
    /// `wdim` essentially of finite type over `R`: `wdim` itself for a
    /// discrete valuation ring, `wdim + 1` otherwise (all supported rings are
    /// countable, so every ideal is countably generated).
    pub fn gldim_bound(&self, wdim: u64) -> u64 {
        match self.group {
            ValueGroup::ZnLex { rank: 1 } => wdim,
            _ => wdim + 1,
        }
    }
}

#[cfg(test)]
mod tests;
