use super::sequence::is_nzd;
use super::RegError;
use crate::algebra::{fibre_local_dim, PointSpec};
use crate::groebner::Ideal;
use crate::poly::MultiPoly;

/// Total degree bound for pool elements used by the checks in this module.
pub const DEFAULT_POOL_DEGREE: u64 = 4;

/// At most this many generators enter the signed combinations of the pool.
const MAX_COMBINED: usize = 6;

/// A regular sequence on `ring/modulus` inside an ideal.
#[derive(Clone, Debug)]
pub struct GradeWitness {
    pub length: usize,
    pub sequence: Vec<MultiPoly>,
    /// Number of candidates the greedy search could draw from.
    pub pool_size: usize,
}

/// Generators, then `±1` combinations of growing support, each of total
/// degree at most `bound`. Deterministic order.
fn pool(gens: &[MultiPoly], bound: u64) -> Vec<MultiPoly> {
    let mut seen: Vec<MultiPoly> = Vec::new();
    for g in gens {
        if !g.is_zero() && !g.is_constant() && !seen.contains(g) {
            seen.push(g.clone());
        }
    }
    let gens: Vec<MultiPoly> = seen.into_iter().take(MAX_COMBINED).collect();
    let n = gens.len();
    let mut out: Vec<MultiPoly> = Vec::new();
    let push = |f: MultiPoly, out: &mut Vec<MultiPoly>| {
        if !f.is_zero() && f.total_degree() <= bound && !out.contains(&f) {
            out.push(f);
        }
    };
    for size in 1..=n {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            // the first coefficient is +1, the others range over ±1
            for signs in 0u32..(1 << (size - 1)) {
                let mut f = gens[idx[0]].clone();
                for (k, &i) in idx[1..].iter().enumerate() {
                    f = if signs & (1 << k) == 0 {
                        &f + &gens[i]
                    } else {
                        &f - &gens[i]
                    };
                }
                push(f, &mut out);
            }
        }
    }
    out
}

/// Greedy maximal regular sequence from `pool` on `ring/modulus`.
fn greedy(modulus: &Ideal, pool: &[MultiPoly]) -> Result<Vec<MultiPoly>, RegError> {
    let mut current = modulus.clone();
    let mut seq = Vec::new();
    loop {
        let mut found = None;
        for c in pool {
            if is_nzd(&current, c)? {
                found = Some(c.clone());
                break;
            }
        }
        let Some(c) = found else {
            return Ok(seq);
        };
        current = current.add([c.clone()])?;
        seq.push(c);
    }
}

fn check_proper(modulus: &Ideal, ideal: &Ideal) -> Result<(), RegError> {
    if !modulus.ring().same_ring(ideal.ring()) {
        return Err(RegError::PreconditionViolated(
            "ideal and modulus live in different rings".into(),
        ));
    }
    if modulus.sum(ideal)?.is_unit()? {
        return Err(RegError::PreconditionViolated(
            "the ideal is not proper modulo the relations".into(),
        ));
    }
    Ok(())
}

/// Certified lower bound for the grade of `ideal` on `ring/modulus`: the
/// length of a greedy maximal regular sequence drawn from the generators and
/// their signed combinations.
pub fn grade_search(
    modulus: &Ideal,
    ideal: &Ideal,
    pool_degree_bound: u64,
) -> Result<GradeWitness, RegError> {
    check_proper(modulus, ideal)?;
    let pool = pool(ideal.generators(), pool_degree_bound);
    let sequence = greedy(modulus, &pool)?;
    Ok(GradeWitness {
        length: sequence.len(),
        sequence,
        pool_size: pool.len(),
    })
}

#[derive(Clone, Debug)]
pub struct PolynomialGrade {
    /// Largest grade found over all levels, capped by the generator count.
    pub grade: usize,
    /// Grade lower bound after adjoining `j` variables, for `j = 0, 1, …`.
    pub per_level: Vec<usize>,
    /// The last two levels agree. A heuristic, never a proof.
    pub stable: bool,
    /// First level from which all later levels agree.
    pub stable_from: Option<usize>,
    pub witness: Vec<MultiPoly>,
}

/// Grade lower bounds of `ideal·A[W₁,…,W_j]` for `j = 0..=max_extra_vars`.
/// The pool is enlarged by the elements `g_a + W_k·g_b`.
pub fn polynomial_grade(
    modulus: &Ideal,
    ideal: &Ideal,
    max_extra_vars: usize,
    pool_degree_bound: u64,
) -> Result<PolynomialGrade, RegError> {
    check_proper(modulus, ideal)?;
    let ngens = ideal.generators().iter().filter(|g| !g.is_zero()).count();
    let mut per_level = Vec::new();
    let mut best: Vec<MultiPoly> = Vec::new();
    for j in 0..=max_extra_vars {
        let mut names = Vec::new();
        let mut ring = modulus.ring().clone();
        for _ in 0..j {
            let w = ring.fresh_name("W");
            ring = ring.extend(&[w.as_str()])?;
            names.push(w);
        }
        let m = modulus.map_into(&ring)?;
        let gens: Vec<MultiPoly> = ideal
            .generators()
            .iter()
            .map(|g| g.rename_into(&ring))
            .collect::<Result<_, _>>()?;
        let mut candidates = pool(&gens, pool_degree_bound);
        for w in &names {
            let wv = MultiPoly::var_named(&ring, w)?;
            for a in &gens {
                for b in &gens {
                    if a != b && !a.is_zero() && !b.is_zero() {
                        let f = a + &(&wv * b);
                        if !candidates.contains(&f) {
                            candidates.push(f);
                        }
                    }
                }
            }
        }
        let seq = greedy(&m, &candidates)?;
        let len = seq.len().min(ngens);
        if len > best.len() || per_level.is_empty() {
            best = seq;
        }
        per_level.push(len);
    }
    let grade = per_level.iter().copied().max().unwrap_or(0);
    let stable =
        per_level.len() >= 2 && per_level[per_level.len() - 1] == per_level[per_level.len() - 2];
    let last = *per_level.last().expect("at least level 0");
    let stable_from = if per_level.len() >= 2 {
        let mut k = per_level.len() - 1;
        while k > 0 && per_level[k - 1] == last {
            k -= 1;
        }
        (k < per_level.len() - 1).then_some(k)
    } else {
        None
    };
    Ok(PolynomialGrade {
        grade,
        per_level,
        stable,
        stable_from,
        witness: best,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmStatus {
    CM,
    NotCM,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct CmCheck {
    pub status: CmStatus,
    /// A regular sequence of length `local_dim` for `CM`, a socle element for
    /// `NotCM`, the longest sequence found for `Unknown`.
    pub witness: Vec<MultiPoly>,
    pub local_dim: i64,
}

/// Cohen-Macaulayness of the fibre local ring at `pt`. `CM` when a global
/// regular sequence in the center reaches the local dimension; `NotCM` from a
/// socle element when the local dimension is at most one.
pub fn fibre_cm_check(pt: &PointSpec) -> Result<CmCheck, RegError> {
    let local_dim = fibre_local_dim(pt)?;
    let fibre = pt.algebra.fibre_ideal(&pt.base_prime)?;
    let center = pt.fibre_trace()?;
    if local_dim == 0 {
        return Ok(CmCheck {
            status: CmStatus::CM,
            witness: Vec::new(),
            local_dim,
        });
    }
    let g = grade_search(&fibre, &center, DEFAULT_POOL_DEGREE)?;
    if g.length as i64 >= local_dim {
        return Ok(CmCheck {
            status: CmStatus::CM,
            witness: g.sequence,
            local_dim,
        });
    }
    if local_dim <= 1 {
        if let Some(w) = socle_element(&fibre, &center)? {
            return Ok(CmCheck {
                status: CmStatus::NotCM,
                witness: vec![w],
                local_dim,
            });
        }
    }
    Ok(CmCheck {
        status: CmStatus::Unknown,
        witness: g.sequence,
        local_dim,
    })
}

/// `w ∉ I` with `(I : w) = q`, so `w` is a nonzero element of the local ring
/// killed by its maximal ideal, provided some minimal prime of `I` lies
/// strictly inside `q` (checked as `(I : q^∞) ⊆ q`).
fn socle_element(i: &Ideal, q: &Ideal) -> Result<Option<MultiPoly>, RegError> {
    let mut sat = Ideal::unit(i.ring());
    for g in q.generators() {
        if !g.is_zero() {
            sat = sat.intersect(&i.saturation(g)?)?;
        }
    }
    if !q.contains_ideal(&sat)? {
        return Ok(None);
    }
    let socle = i.colon_ideal(q)?;
    for w in socle.basis()?.iter() {
        if i.contains(w)? {
            continue;
        }
        if i.colon(w)?.equals(q)? {
            return Ok(Some(w.clone()));
        }
    }
    Ok(None)
}
