use super::RegError;
use crate::algebra::{build_chart, local_cotangent, Chart, PointSpec};
use crate::groebner::{GroebnerError, Ideal};
use crate::poly::MultiPoly;
use crate::valuation::{BasePrime, GroupElement, ValuationRing, Value};

/// Ring in which a colon equality was verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProofRing {
    /// `kp[X]`: the element is regular on the fibre, so by the local
    /// flatness criterion it is regular on the local ring and the quotient
    /// stays flat over `R_p`.
    Fibre,
    /// `K[X]` with `K = Frac(R)`: on a flat quotient, regular on the generic
    /// fibre implies regular.
    Generic,
}

/// `(modulus : element) = modulus` in the ring named by `ring`.
#[derive(Clone, Debug)]
pub struct ColonProof {
    pub ring: ProofRing,
    pub modulus: Ideal,
    pub element: MultiPoly,
}

impl ColonProof {
    /// Recomputes the colon ideal.
    pub fn verify(&self) -> Result<bool, GroebnerError> {
        is_nzd(&self.modulus, &self.element)
    }
}

#[derive(Clone, Debug)]
pub struct RegularSequenceWitness {
    /// Chart polynomials: lifts of a basis of `T`, then the base element.
    pub elements: Vec<MultiPoly>,
    pub colon_proofs: Vec<ColonProof>,
    /// Every point generator is in the radical of the generated chart ideal,
    /// and its contraction to the base has radical `p`.
    pub radical_flag: bool,
    /// A parameter `t` with `Rad(tR) = p`, appended when the lifts do not
    /// cover the base prime.
    pub base_element: Option<MultiPoly>,
    /// The elements generate the maximal ideal of the local ring (or, when
    /// `pR_p` is not finitely generated, the lifts generate the maximal ideal
    /// of the fibre local ring).
    pub generates: bool,
}

impl RegularSequenceWitness {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.elements.iter().map(|e| e.to_string()).collect()
    }

    pub fn lifts(&self) -> &[MultiPoly] {
        let n = self.elements.len() - usize::from(self.base_element.is_some());
        &self.elements[..n]
    }

    pub fn verify(&self) -> Result<bool, GroebnerError> {
        for p in &self.colon_proofs {
            if !p.verify()? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `f` is a non-zero-divisor on `ring/modulus` and the quotient is nonzero.
pub(crate) fn is_nzd(modulus: &Ideal, f: &MultiPoly) -> Result<bool, GroebnerError> {
    if f.is_zero() || modulus.is_unit()? {
        return Ok(false);
    }
    let colon = modulus.colon(f)?;
    modulus.contains_ideal(&colon)
}

/// Lifts a basis of `T` to chart elements, appends a base element when `p ≠ 0`
/// is not covered, and certifies the result as a regular sequence. All
/// elements but the last must be regular on the fibre; the last one on the
/// generic fibre. Orderings of up to four lifts are tried.
pub fn lift_regular_sequence(pt: &PointSpec) -> Result<RegularSequenceWitness, RegError> {
    let chart = build_chart(pt)?;
    let lifts = local_cotangent(pt, &chart)?.basis;
    for l in &lifts {
        if !chart.ideal().contains(l)? {
            return Err(RegError::ColonFailed(0));
        }
    }
    let base = pt.base();
    let p = &pt.base_prime;
    let ring = chart.ring();

    let lifted = chart.localize(&chart.relations().add(lifts.iter().cloned())?)?;
    let base_element = if p.is_zero() {
        None
    } else if base.is_fg_prime(p)? {
        let g = base.principal_generator(p).expect("finitely generated");
        let g = MultiPoly::var_named(ring, g)?;
        if covered_by_value(base, p, &lifted, &g, pt.algebra.vars())? {
            None
        } else {
            Some(g)
        }
    } else {
        Some(MultiPoly::var_named(ring, &base.params()[0])?)
    };

    let orders = if lifts.len() <= 4 {
        permutations(lifts.len())
    } else {
        vec![(0..lifts.len()).collect()]
    };
    let mut first_failure = None;
    let mut proofs = None;
    let mut elements = Vec::new();
    for order in orders {
        let mut seq: Vec<MultiPoly> = order.iter().map(|&i| lifts[i].clone()).collect();
        seq.extend(base_element.clone());
        match certify(pt, &seq)? {
            Ok(pr) => {
                proofs = Some(pr);
                elements = seq;
                break;
            }
            Err(i) => {
                first_failure.get_or_insert(i);
            }
        }
    }
    let Some(colon_proofs) = proofs else {
        return Err(RegError::ColonFailed(first_failure.unwrap_or(0)));
    };

    let all = chart.localize(&chart.relations().add(elements.iter().cloned())?)?;
    let generates = generation(pt, &chart, &all, &elements, base_element.is_some())?;
    let radical_flag = radical_flag(pt, &all)?;
    Ok(RegularSequenceWitness {
        elements,
        colon_proofs,
        radical_flag,
        base_element,
        generates,
    })
}

/// Colon proofs for `seq`, or the index of the first element that failed.
fn certify(pt: &PointSpec, seq: &[MultiPoly]) -> Result<Result<Vec<ColonProof>, usize>, RegError> {
    let base = pt.base();
    let p = &pt.base_prime;
    let zero = base.zero_prime();
    let fibre = pt.algebra.fibre_ideal(p)?;
    let generic = pt.algebra.fibre_ideal(&zero)?;
    let mut proofs = Vec::new();
    for (i, e) in seq.iter().enumerate() {
        let last = i + 1 == seq.len();
        let (kind, prime, start) = if last {
            (ProofRing::Generic, &zero, &generic)
        } else {
            (ProofRing::Fibre, p, &fibre)
        };
        let r = start.ring().clone();
        let mut prev = Vec::new();
        for f in &seq[..i] {
            prev.push(base.fibre_map(f, prime, &r)?);
        }
        let modulus = start.add(prev)?;
        let element = base.fibre_map(e, prime, &r)?;
        if !is_nzd(&modulus, &element)? {
            return Ok(Err(i));
        }
        proofs.push(ColonProof {
            ring: kind,
            modulus,
            element,
        });
    }
    Ok(Ok(proofs))
}

/// Some nonzero `h ∈ J ∩ κ₀[params]` has `v_p(h) ≤ v_p(g)`, so `g ∈ J·R_p`.
fn covered_by_value(
    base: &ValuationRing,
    p: &BasePrime,
    j: &Ideal,
    g: &MultiPoly,
    vars: &[String],
) -> Result<bool, RegError> {
    let Value::Finite(vg) = base.value_of_poly(g)? else {
        return Ok(false);
    };
    let target = base.coarsen(&vg, p);
    for h in min_valued(base, &j.eliminate(vars)?)? {
        if base.coarsen(&h.1, p) <= target {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Nonzero generators with their values, smallest value first.
fn min_valued(base: &ValuationRing, i: &Ideal) -> Result<Vec<(MultiPoly, GroupElement)>, RegError> {
    let mut out = Vec::new();
    for h in i.generators() {
        if let Value::Finite(v) = base.value_of_poly(h)? {
            out.push((h.clone(), v));
        }
    }
    out.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(out)
}

fn generation(
    pt: &PointSpec,
    chart: &Chart,
    all: &Ideal,
    elements: &[MultiPoly],
    has_base_element: bool,
) -> Result<bool, RegError> {
    let base = pt.base();
    let p = &pt.base_prime;
    if p.is_zero() || base.is_fg_prime(p)? {
        for g in &pt.generators {
            if !all.contains(g)? {
                return Ok(false);
            }
        }
        if p.is_zero() || has_base_element {
            return Ok(true);
        }
        let g = base.principal_generator(p).expect("finitely generated");
        let g = MultiPoly::var_named(chart.ring(), g)?;
        return covered_by_value(base, p, all, &g, pt.algebra.vars());
    }
    // pR_p = (pR_p)²: the lifts must generate the fibre maximal ideal
    let center = pt.fibre_trace()?;
    let fibre = pt.algebra.fibre_ideal(p)?;
    let lifts = &elements[..elements.len() - 1];
    let mut imgs = Vec::new();
    for l in lifts {
        imgs.push(base.fibre_map(l, p, fibre.ring())?);
    }
    Ok(fibre.add(imgs)?.contains_ideal(&center)?)
}

/// Point generators in `Rad(J)`, and `Rad(J ∩ R) = p` via the least valued
/// contracted generator.
fn radical_flag(pt: &PointSpec, j: &Ideal) -> Result<bool, RegError> {
    for g in &pt.generators {
        if !j.radical_contains(g)? {
            return Ok(false);
        }
    }
    let base = pt.base();
    let p = &pt.base_prime;
    if p.is_zero() {
        return Ok(true);
    }
    let elim = j.eliminate(pt.algebra.vars())?;
    match min_valued(base, &elim)?.first() {
        None => Ok(false),
        // a unit of R_p here means the contraction is not inside p
        Some((_, v)) => Ok(base
            .rad_principal_value(&Value::Finite(v.clone()))
            .is_ok_and(|q| q == *p)),
    }
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
