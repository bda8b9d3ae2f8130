//! Sparse multivariate polynomials over a [`Field`](crate::field::Field).

mod gcd;
mod monomial;
mod multipoly;
mod ops;
mod order;
mod parse;

pub use gcd::gcd;
pub use monomial::Monomial;
pub use multipoly::{MultiPoly, Term};
pub use ops::{derivative, jacobian, substitute, Bindings};
pub use order::MonomialOrder;
pub use parse::parse_poly;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{Field, FieldError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("syntax error at position {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("division by a non-constant at position {position}")]
    NonConstantDivisor { position: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("variable `{0}` declared twice or clashes with a field transcendental")]
    DuplicateVariable(String),
    #[error("variable `{0}` is not in the ring")]
    NoSuchVariable(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

struct RingInner {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

/// `field[vars]` together with the monomial order used to sort terms.
///
/// Two rings with the same field and variables are the same ring; the order
/// only affects how terms are stored.
#[derive(Clone)]
pub struct PolyRing(Arc<RingInner>);

impl PolyRing {
    pub fn new<S: AsRef<str>>(
        field: Field,
        vars: impl IntoIterator<Item = S>,
    ) -> Result<PolyRing, PolyError> {
        let vars: Vec<String> = vars.into_iter().map(|s| s.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) || field.transcendentals().contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        Ok(PolyRing(Arc::new(RingInner {
            field,
            vars,
            order: MonomialOrder::GrevLex,
        })))
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        if order == self.0.order {
            return self.clone();
        }
        PolyRing(Arc::new(RingInner {
            field: self.0.field.clone(),
            vars: self.0.vars.clone(),
            order,
        }))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// Same field and variables (orders may differ).
    pub fn same_ring(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.vars == other.0.vars)
    }

    pub(crate) fn check_same(&self, other: &PolyRing) -> Result<(), PolyError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }

    /// A variable name not used by this ring or its field, built from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        let taken = |n: &str| {
            self.var_index(n).is_some() || self.field().transcendentals().iter().any(|t| t == n)
        };
        if !taken(stem) {
            return stem.to_string();
        }
        (0..)
            .map(|i| format!("{stem}{i}"))
            .find(|n| !taken(n))
            .expect("infinitely many names")
    }

    /// This ring with extra variables appended (same order kind).
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<PolyRing, PolyError> {
        let mut vars = self.0.vars.clone();
        vars.extend(extra.iter().map(|s| s.as_ref().to_string()));
        PolyRing::new(self.0.field.clone(), vars)
    }

    /// The same variables over another field.
    pub fn over(&self, field: Field) -> Result<PolyRing, PolyError> {
        PolyRing::new(field, self.0.vars.clone())
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other)
    }
}

impl Eq for PolyRing {}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))
    }
}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({:?})", self, self.0.order)
    }
}
