use super::grade::{grade_search, DEFAULT_POOL_DEGREE};
use super::{
    classify, expected_wdim, wdim_upper_bound, RegError, RegularSequenceWitness, RegularityVerdict,
    Status, Wdim,
};
use crate::algebra::{cotangent_dim, AlgebraError, PointSpec};
use crate::valuation::Value;

/// Outcome of one cross-check. `passed` is `None` when the check does not
/// apply to the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: Option<bool>,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, passed: Option<bool>, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed,
            detail: detail.into(),
        }
    }
}

/// `wdim = 1 + depth Ō` for a regular point over `p ≠ 0`, with the depth
/// taken from a greedy regular sequence in the fibre center.
pub fn grade_extension_check(
    pt: &PointSpec,
    verdict: &RegularityVerdict,
) -> Result<bool, RegError> {
    if verdict.status != Status::Regular {
        return Err(RegError::PreconditionViolated(
            "the point is not regular".into(),
        ));
    }
    if pt.base_prime.is_zero() {
        return Err(RegError::PreconditionViolated(
            "the base prime is zero".into(),
        ));
    }
    let fibre = pt.algebra.fibre_ideal(&pt.base_prime)?;
    let depth = grade_search(&fibre, &pt.fibre_trace()?, DEFAULT_POOL_DEGREE)?.length as u64;
    Ok(expected_wdim(pt)? == 1 + depth)
}

/// The contraction of the ideal generated by the witness to the base is 0 or
/// has radical `p` (the maximal ideal of `R_p`).
pub fn distribution_check(pt: &PointSpec, w: &RegularSequenceWitness) -> Result<bool, RegError> {
    let chart = crate::algebra::build_chart(pt)?;
    let j = chart.localize(&chart.relations().add(w.elements.iter().cloned())?)?;
    let elim = j.eliminate(pt.algebra.vars())?;
    let base = pt.base();
    let mut least: Option<Value> = None;
    for h in elim.generators() {
        let v = base.value_of_poly(h)?;
        if least.as_ref().is_none_or(|l| v < *l) {
            least = Some(v);
        }
    }
    match least {
        None | Some(Value::Infinity) => Ok(true),
        Some(v) => Ok(base
            .rad_principal_value(&v)
            .is_ok_and(|q| q == pt.base_prime)),
    }
}

/// Quotient by the first lift of the witness: when the result is classified
/// regular, its weak dimension must drop by one. `None` when the quotient is
/// not classified regular or no lift is available.
pub fn quotient_consistency(
    pt: &PointSpec,
    w: &RegularSequenceWitness,
) -> Result<Option<bool>, RegError> {
    let Some(first) = w.lifts().first() else {
        return Ok(None);
    };
    let q = pt.on_quotient([first.clone()]);
    let v = match classify(&q) {
        Ok(v) => v,
        Err(RegError::Algebra(AlgebraError::UnsupportedResidueField { .. })) => return Ok(None),
        Err(RegError::Algebra(AlgebraError::EmptyFibre { .. })) => return Ok(None),
        Err(e) => return Err(e),
    };
    if v.status != Status::Regular {
        return Ok(None);
    }
    Ok(Some(expected_wdim(&q)? + 1 == expected_wdim(pt)?))
}

/// Cross-checks of a verdict against the theorems it rests on.
pub fn verdict_checks(
    pt: &PointSpec,
    verdict: &RegularityVerdict,
    full: bool,
) -> Result<Vec<CheckResult>, RegError> {
    let mut out = Vec::new();
    let p_nonzero = !pt.base_prime.is_zero();
    if verdict.status == Status::Regular {
        let expected = expected_wdim(pt)?;
        let ub = wdim_upper_bound(pt)?;
        let lo = u64::from(p_nonzero);
        out.push(CheckResult::new(
            "wdim-within-bounds",
            Some(lo <= expected && expected <= ub),
            format!("{lo} <= {expected} <= {ub}"),
        ));
        if verdict.wdim != Wdim::Finite(expected) {
            out.push(CheckResult::new(
                "wdim-matches-value",
                Some(false),
                verdict.wdim.to_string(),
            ));
        }
        match cotangent_dim(pt) {
            Ok(d) => out.push(CheckResult::new(
                "cotangent-below-wdim",
                Some(d as u64 <= expected),
                format!("dim T = {d}, wdim = {expected}"),
            )),
            Err(AlgebraError::UnsupportedResidueField { .. }) => {}
            Err(e) => return Err(e.into()),
        }
        if let Some(w) = &verdict.witness {
            let len = w.len() as u64;
            if w.generates {
                out.push(CheckResult::new(
                    "sequence-length-is-wdim",
                    Some(len == expected),
                    format!("length {len}, wdim {expected}"),
                ));
            } else if len < expected {
                // a maximal sequence shorter than wdim would be a finding
                out.push(CheckResult::new(
                    "short-witness",
                    None,
                    format!("witness of length {len} below wdim {expected}"),
                ));
            }
            if w.base_element.is_none() && w.generates {
                if let Ok(d) = cotangent_dim(pt) {
                    out.push(CheckResult::new(
                        "cotangent-equals-wdim",
                        Some(d as u64 == expected),
                        format!("dim T = {d}, wdim = {expected}"),
                    ));
                }
            }
            out.push(CheckResult::new(
                "colon-proofs-reverify",
                Some(w.verify()?),
                format!("{} proofs", w.colon_proofs.len()),
            ));
            out.push(CheckResult::new(
                "distribution-regular-primes",
                Some(distribution_check(pt, w)?),
                "contraction of the witness ideal",
            ));
            if full {
                let q = quotient_consistency(pt, w)?;
                out.push(CheckResult::new(
                    "regular-prime-quotient",
                    q,
                    if q.is_some() {
                        "quotient by the first lift"
                    } else {
                        "quotient not classified regular"
                    },
                ));
            }
        }
        if p_nonzero {
            out.push(CheckResult::new(
                "grade-extension",
                Some(grade_extension_check(pt, verdict)?),
                "wdim = 1 + depth of the fibre local ring",
            ));
        }
    }
    if verdict.status == Status::NotRegular {
        out.push(CheckResult::new(
            "not-regular-means-infinite",
            Some(verdict.wdim == Wdim::Infinite),
            verdict.wdim.to_string(),
        ));
    }
    Ok(out)
}
