//! Gröbner bases and the ideal operations built on them.

mod buchberger;

use std::cell::Cell;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::poly::{parse_poly, MonomialOrder, MultiPoly, PolyError, PolyRing};

/// Default number of S-pair reductions before a basis computation gives up.
pub const DEFAULT_SPAIR_BUDGET: usize = 100_000;

thread_local! {
    static BUDGET: Cell<usize> = const { Cell::new(DEFAULT_SPAIR_BUDGET) };
}

/// Budget given to ideals created on this thread from now on.
pub fn set_default_spair_budget(n: usize) {
    BUDGET.with(|b| b.set(n));
}

pub fn default_spair_budget() -> usize {
    BUDGET.with(|b| b.get())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("S-pair budget of {budget} reductions exceeded")]
    BudgetExceeded { budget: usize },
    #[error("colon or saturation by the zero polynomial")]
    ZeroDivisorInput,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A finitely generated ideal of a polynomial ring. Reduced Gröbner bases
/// are computed lazily and cached per monomial order.
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<MultiPoly>,
    budget: usize,
    cache: Mutex<BTreeMap<MonomialOrder, Arc<Vec<MultiPoly>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            budget: self.budget,
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {:?}", self.ring)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", g.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(
        ring: &PolyRing,
        gens: impl IntoIterator<Item = MultiPoly>,
    ) -> Result<Ideal, GroebnerError> {
        let mut out = Vec::new();
        for g in gens {
            let g = g.in_ring(ring)?;
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            budget: default_spair_budget(),
            cache: Mutex::new(BTreeMap::new()),
        })
    }

    /// Parses each generator in `ring`.
    pub fn parse<S: AsRef<str>>(ring: &PolyRing, gens: &[S]) -> Result<Ideal, GroebnerError> {
        let mut ps = Vec::with_capacity(gens.len());
        for g in gens {
            ps.push(parse_poly(g.as_ref(), ring)?);
        }
        Ideal::new(ring, ps)
    }

    pub fn zero(ring: &PolyRing) -> Ideal {
        Ideal::new(ring, []).expect("no generators")
    }

    pub fn unit(ring: &PolyRing) -> Ideal {
        Ideal::new(ring, [MultiPoly::one(ring)]).expect("same ring")
    }

    pub fn with_budget(mut self, budget: usize) -> Ideal {
        self.budget = budget;
        self.cache.get_mut().unwrap().clear();
        self
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    fn derived(
        &self,
        ring: &PolyRing,
        gens: impl IntoIterator<Item = MultiPoly>,
    ) -> Result<Ideal, GroebnerError> {
        Ok(Ideal::new(ring, gens)?.with_budget(self.budget))
    }

    /// Reduced Gröbner basis for `order`, stored in `ring().with_order(order)`.
    pub fn groebner_basis(
        &self,
        order: &MonomialOrder,
    ) -> Result<Arc<Vec<MultiPoly>>, GroebnerError> {
        if let Some(b) = self.cache.lock().unwrap().get(order) {
            return Ok(b.clone());
        }
        let r = self.ring.with_order(order.clone());
        let gens: Vec<MultiPoly> = self
            .gens
            .iter()
            .map(|g| g.in_ring(&r).expect("same ring"))
            .collect();
        let basis = Arc::new(buchberger::reduced_basis(&r, &gens, self.budget)?);
        self.cache
            .lock()
            .unwrap()
            .insert(order.clone(), basis.clone());
        Ok(basis)
    }

    /// Basis in the ring's own order.
    pub fn basis(&self) -> Result<Arc<Vec<MultiPoly>>, GroebnerError> {
        self.groebner_basis(&self.ring.order().clone())
    }

    fn check_ring(&self, f: &MultiPoly) -> Result<(), GroebnerError> {
        if f.ring().same_ring(&self.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch {
                left: self.ring.to_string(),
                right: f.ring().to_string(),
            }
            .into())
        }
    }

    /// Normal form of `f` against the basis in the ring's order.
    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly, GroebnerError> {
        self.check_ring(f)?;
        let basis = self.basis()?;
        let f = f.in_ring(&self.ring)?;
        Ok(buchberger::normal_form(&f, &basis))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_unit(&self) -> Result<bool, GroebnerError> {
        let b = self.basis()?;
        Ok(b.len() == 1 && b[0].is_constant())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool, GroebnerError> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool, GroebnerError> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        self.derived(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    /// `self + ⟨fs⟩`.
    pub fn add(&self, fs: impl IntoIterator<Item = MultiPoly>) -> Result<Ideal, GroebnerError> {
        let mut gens = self.gens.clone();
        for f in fs {
            self.check_ring(&f)?;
            gens.push(f);
        }
        self.derived(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(b)?);
            }
        }
        self.derived(&self.ring, gens)
    }

    /// `self ∩ other` by eliminating `w` from `w·I + (1 − w)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        self.ring.check_same(other.ring())?;
        let w = self.ring.fresh_name("w");
        let big = self.ring.extend(&[w.as_str()])?;
        let wv = MultiPoly::var(&big, big.nvars() - 1);
        let one_minus = &MultiPoly::one(&big) - &wv;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&wv * &g.rename_into(&big)?);
        }
        for g in &other.gens {
            gens.push(&one_minus * &g.rename_into(&big)?);
        }
        let big_ideal = self.derived(&big, gens)?;
        big_ideal.eliminate_into(&[w.as_str()], &self.ring)
    }

    /// `(self : f) = {g : g·f ∈ self}`.
    pub fn colon(&self, f: &MultiPoly) -> Result<Ideal, GroebnerError> {
        self.check_ring(f)?;
        if f.is_zero() {
            return Err(GroebnerError::ZeroDivisorInput);
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let f = f.in_ring(&self.ring)?;
        let fi = self.derived(&self.ring, [f.clone()])?;
        let both = self.intersect(&fi)?;
        let mut gens = Vec::with_capacity(both.gens.len());
        for g in &both.gens {
            gens.push(g.exact_div(&f).expect("intersection lies in ⟨f⟩"));
        }
        self.derived(&self.ring, gens)
    }

    /// `(self : J) = ⋂ (self : g)` over the generators of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        let mut acc = Ideal::unit(&self.ring).with_budget(self.budget);
        for g in &other.gens {
            acc = acc.intersect(&self.colon(g)?)?;
        }
        Ok(acc)
    }

    /// `(self : f^∞)`, eliminating `w` from `self + ⟨1 − w·f⟩`.
    pub fn saturation(&self, f: &MultiPoly) -> Result<Ideal, GroebnerError> {
        self.check_ring(f)?;
        if f.is_zero() {
            return Err(GroebnerError::ZeroDivisorInput);
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let w = self.ring.fresh_name("w");
        let big = self.ring.extend(&[w.as_str()])?;
        let wv = MultiPoly::var(&big, big.nvars() - 1);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.rename_into(&big)?);
        }
        gens.push(&MultiPoly::one(&big) - &(&wv * &f.rename_into(&big)?));
        self.derived(&big, gens)?
            .eliminate_into(&[w.as_str()], &self.ring)
    }

    /// `f ∈ Rad(self)` iff `1 ∈ self + ⟨1 − w·f⟩`.
    pub fn radical_contains(&self, f: &MultiPoly) -> Result<bool, GroebnerError> {
        self.check_ring(f)?;
        let w = self.ring.fresh_name("w");
        let big = self.ring.extend(&[w.as_str()])?;
        let wv = MultiPoly::var(&big, big.nvars() - 1);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.rename_into(&big)?);
        }
        gens.push(&MultiPoly::one(&big) - &(&wv * &f.rename_into(&big)?));
        self.derived(&big, gens)?.is_unit()
    }

    /// Leading monomials of the grevlex basis (`None` for the unit ideal).
    fn leading_supports(&self) -> Result<Option<Vec<u64>>, GroebnerError> {
        let b = self.groebner_basis(&MonomialOrder::GrevLex)?;
        if b.len() == 1 && b[0].is_constant() {
            return Ok(None);
        }
        Ok(Some(
            b.iter()
                .map(|g| {
                    g.leading_monomial()
                        .unwrap()
                        .support()
                        .fold(0u64, |acc, i| acc | (1 << i))
                })
                .collect(),
        ))
    }

    /// A largest set of variables independent modulo the ideal (no leading
    /// monomial lives in those variables only), first in lexicographic order
    /// of indices. `None` for the unit ideal.
    pub fn max_independent_set(&self) -> Result<Option<Vec<usize>>, GroebnerError> {
        let n = self.ring.nvars();
        assert!(n < 64, "too many variables for the independent-set search");
        let Some(supports) = self.leading_supports()? else {
            return Ok(None);
        };
        let mut best: Option<u64> = None;
        for size in (0..=n).rev() {
            for set in subsets_of_size(n, size) {
                if supports.iter().all(|&s| s & !set != 0) {
                    best = Some(set);
                    break;
                }
            }
            if best.is_some() {
                break;
            }
        }
        let set = best.expect("the empty set is independent for a proper ideal");
        Ok(Some((0..n).filter(|i| set & (1 << i) != 0).collect()))
    }

    /// Krull dimension of the quotient ring; −1 for the unit ideal.
    pub fn krull_dim(&self) -> Result<i64, GroebnerError> {
        Ok(match self.max_independent_set()? {
            None => -1,
            Some(s) => s.len() as i64,
        })
    }

    /// `self ∩ k[remaining variables]`, returned in the subring.
    pub fn eliminate<S: AsRef<str>>(&self, drop: &[S]) -> Result<Ideal, GroebnerError> {
        let keep: Vec<String> = self
            .ring
            .vars()
            .iter()
            .filter(|v| !drop.iter().any(|d| d.as_ref() == v.as_str()))
            .cloned()
            .collect();
        let sub = PolyRing::new(self.ring.field().clone(), keep)?;
        self.eliminate_into(drop, &sub)
    }

    /// Elimination with the result stored in `target`, which must contain
    /// every variable that is not dropped.
    pub fn eliminate_into<S: AsRef<str>>(
        &self,
        drop: &[S],
        target: &PolyRing,
    ) -> Result<Ideal, GroebnerError> {
        let mut idx = Vec::new();
        for d in drop {
            let i = self
                .ring
                .var_index(d.as_ref())
                .ok_or_else(|| PolyError::NoSuchVariable(d.as_ref().to_string()))?;
            idx.push(i);
        }
        if idx.is_empty() {
            let gens: Result<Vec<_>, _> = self.gens.iter().map(|g| g.rename_into(target)).collect();
            return self.derived(target, gens?);
        }
        let order = MonomialOrder::elimination(&idx, self.ring.nvars());
        let basis = self.groebner_basis(&order)?;
        let mut gens = Vec::new();
        for g in basis.iter() {
            if idx.iter().all(|&i| g.degree_in(i) == 0) {
                gens.push(g.rename_into(target)?);
            }
        }
        self.derived(target, gens)
    }

    /// The same generators read in another ring (by variable name).
    pub fn map_into(&self, target: &PolyRing) -> Result<Ideal, GroebnerError> {
        let gens: Result<Vec<_>, _> = self.gens.iter().map(|g| g.rename_into(target)).collect();
        self.derived(target, gens?)
    }
}

/// Bitmasks of the `k`-subsets of `0..n`, lexicographic in index tuples.
fn subsets_of_size(n: usize, k: usize) -> Vec<u64> {
    fn go(start: usize, n: usize, k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            go(i + 1, n, k - 1, acc | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    go(0, n, k, 0, &mut out);
    out
}

/// Reduced Gröbner basis of `ideal` for `order`.
pub fn groebner_basis(
    ideal: &Ideal,
    order: &MonomialOrder,
) -> Result<Vec<MultiPoly>, GroebnerError> {
    Ok(ideal.groebner_basis(order)?.as_ref().clone())
}

/// Normal form of `f` and whether it is zero.
pub fn nf_membership(f: &MultiPoly, ideal: &Ideal) -> Result<(MultiPoly, bool), GroebnerError> {
    let r = ideal.normal_form(f)?;
    let z = r.is_zero();
    Ok((r, z))
}

pub fn colon(ideal: &Ideal, f: &MultiPoly) -> Result<Ideal, GroebnerError> {
    ideal.colon(f)
}

pub fn saturation(ideal: &Ideal, f: &MultiPoly) -> Result<Ideal, GroebnerError> {
    ideal.saturation(f)
}

pub fn radical_membership(f: &MultiPoly, ideal: &Ideal) -> Result<bool, GroebnerError> {
    ideal.radical_contains(f)
}

pub fn krull_dim(ideal: &Ideal) -> Result<i64, GroebnerError> {
    ideal.krull_dim()
}

pub fn eliminate<S: AsRef<str>>(ideal: &Ideal, drop: &[S]) -> Result<Ideal, GroebnerError> {
    ideal.eliminate(drop)
}
