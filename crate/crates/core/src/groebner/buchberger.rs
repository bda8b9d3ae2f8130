//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::cmp::Ordering;

use super::GroebnerError;
use crate::poly::{Monomial, MultiPoly, PolyRing, Term};

/// Full normal form of `f` modulo `basis`; all polynomials live in the same
/// ring and order.
pub(crate) fn normal_form(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let ring = f.ring().clone();
    let mut r = f.clone();
    let mut out: Vec<Term> = Vec::new();
    'outer: while let Some(lt) = r.leading_term() {
        for g in basis {
            let glt = g.leading_term().expect("basis elements are nonzero");
            if glt.mono.divides(&lt.mono) {
                let m = lt.mono.div(&glt.mono);
                let c = &lt.coeff / &glt.coeff;
                r = r.sub_mul_term(&c, &m, g);
                continue 'outer;
            }
        }
        out.push(lt.clone());
        r = r.tail();
    }
    MultiPoly::from_sorted_terms(&ring, out)
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (ft, gt) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let l = ft.mono.lcm(&gt.mono);
    let a = f.mul_term(&l.div(&ft.mono), &ft.coeff.inv().expect("nonzero"));
    a.sub_mul_term(&gt.coeff.inv().expect("nonzero"), &l.div(&gt.mono), g)
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens` (all in `ring`),
/// sorted by descending leading monomial. `budget` bounds the number of
/// S-pair reductions.
pub(crate) fn reduced_basis(
    ring: &PolyRing,
    gens: &[MultiPoly],
    budget: usize,
) -> Result<Vec<MultiPoly>, GroebnerError> {
    let order = ring.order().clone();
    let mut polys: Vec<MultiPoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<MultiPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    // smaller leading monomials first keeps the initial basis small
    input.sort_by(|a, b| {
        order.cmp(
            a.leading_monomial().unwrap().exps(),
            b.leading_monomial().unwrap().exps(),
        )
    });
    for g in input {
        let h = normal_form(&g, &active_polys(&polys, &active));
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![MultiPoly::one(ring)]);
        }
        update(&mut polys, &mut active, &mut pairs, h.monic());
    }

    let mut spent = 0usize;
    while !pairs.is_empty() {
        // normal selection strategy, ties broken by index for determinism
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(pairs[a].lcm.exps(), pairs[b].lcm.exps())
                    .then((pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            })
            .unwrap();
        let p = pairs.swap_remove(best);
        spent += 1;
        if spent > budget {
            return Err(GroebnerError::BudgetExceeded { budget });
        }
        let s = s_polynomial(&polys[p.i], &polys[p.j]);
        let h = normal_form(&s, &active_polys(&polys, &active));
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![MultiPoly::one(ring)]);
        }
        update(&mut polys, &mut active, &mut pairs, h.monic());
    }

    Ok(interreduce(ring, active_polys(&polys, &active)))
}

fn active_polys(polys: &[MultiPoly], active: &[bool]) -> Vec<MultiPoly> {
    polys
        .iter()
        .zip(active)
        .filter(|(_, a)| **a)
        .map(|(p, _)| p.clone())
        .collect()
}

/// Adds `h` and updates the pair list following Gebauer and Möller.
fn update(polys: &mut Vec<MultiPoly>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: MultiPoly) {
    let hi = polys.len();
    let hm = h.leading_monomial().unwrap().clone();
    polys.push(h);
    active.push(true);

    let lm = |k: usize| polys[k].leading_monomial().unwrap().clone();
    let candidates: Vec<Pair> = (0..hi)
        .filter(|&k| active[k])
        .map(|k| Pair {
            i: k,
            j: hi,
            lcm: hm.lcm(&lm(k)),
        })
        .collect();

    // chain criterion among the new pairs
    let mut kept: Vec<Pair> = Vec::new();
    for (a, c) in candidates.iter().enumerate() {
        let coprime = hm.is_coprime(&lm(c.i));
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(b, d)| b != a && d.lcm.divides(&c.lcm) && (d.lcm != c.lcm || b < a));
        if coprime || !dominated {
            kept.push(c.clone());
        }
    }
    // drop duplicates of equal lcm, keep first
    let mut dedup: Vec<Pair> = Vec::new();
    for c in kept {
        if !dedup.iter().any(|d| d.lcm == c.lcm) {
            dedup.push(c);
        }
    }
    // product criterion
    dedup.retain(|c| !hm.is_coprime(&lm(c.i)));

    // old pairs made redundant by h
    pairs.retain(|p| {
        !(hm.divides(&p.lcm) && hm.lcm(&lm(p.i)) != p.lcm && hm.lcm(&lm(p.j)) != p.lcm)
    });
    pairs.extend(dedup);

    for k in 0..hi {
        if active[k] && hm.divides(&lm(k)) {
            active[k] = false;
        }
    }
}

fn interreduce(ring: &PolyRing, mut g: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let order = ring.order();
    g.sort_by(|a, b| {
        order.cmp(
            a.leading_monomial().unwrap().exps(),
            b.leading_monomial().unwrap().exps(),
        )
    });
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for p in g {
        let m = p.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().unwrap().divides(m))
        {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, q)| q.clone())
            .collect();
        let p = &minimal[k];
        let lt = p.leading_term().unwrap().clone();
        let tail = normal_form(&p.tail(), &others);
        let mut terms = vec![lt];
        terms.extend(tail.terms().iter().cloned());
        out.push(MultiPoly::from_sorted_terms(ring, terms).monic());
    }
    out.sort_by(|a, b| {
        order
            .cmp(
                a.leading_monomial().unwrap().exps(),
                b.leading_monomial().unwrap().exps(),
            )
            .then(Ordering::Equal)
            .reverse()
    });
    out
}
