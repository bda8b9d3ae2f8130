//! Regularity of points of presented algebras: the weak dimension, lifted
//! regular sequences, grade, Cohen-Macaulay checks on fibres and the
//! three-valued classifier.

mod checks;
mod grade;
mod sequence;

pub use checks::{
    distribution_check, grade_extension_check, quotient_consistency, verdict_checks, CheckResult,
};
pub use grade::{
    fibre_cm_check, grade_search, polynomial_grade, CmCheck, CmStatus, GradeWitness,
    PolynomialGrade, DEFAULT_POOL_DEGREE,
};
pub use sequence::{lift_regular_sequence, ColonProof, ProofRing, RegularSequenceWitness};

use std::fmt;

use thiserror::Error;

use crate::algebra::{cotangent_dim, fibre_cotangent, fibre_local_dim, AlgebraError, PointSpec};
use crate::groebner::GroebnerError;
use crate::poly::{MultiPoly, PolyError};
use crate::valuation::ValError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegError {
    #[error("element {0} of the lifted sequence is not certified regular")]
    ColonFailed(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<GroebnerError> for RegError {
    fn from(e: GroebnerError) -> Self {
        RegError::Algebra(e.into())
    }
}

impl From<ValError> for RegError {
    fn from(e: ValError) -> Self {
        RegError::Algebra(e.into())
    }
}

impl From<PolyError> for RegError {
    fn from(e: PolyError) -> Self {
        RegError::Algebra(e.into())
    }
}

/// Weak dimension of a local ring as far as it is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wdim {
    Finite(u64),
    Infinite,
    Unknown,
}

impl fmt::Display for Wdim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Wdim::Finite(n) => write!(f, "{n}"),
            Wdim::Infinite => f.write_str("infinite"),
            Wdim::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Regular,
    NotRegular,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Regular => "Regular",
            Status::NotRegular => "NotRegular",
            Status::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug)]
pub enum Certificate {
    /// The fibre local ring is regular at the center.
    FibreSmooth,
    /// The maximal ideal is generated by a certified regular sequence.
    KoszulRadical(RegularSequenceWitness),
    /// `dim T` exceeds the only value a finite weak dimension could take.
    CotangentOverflow { dim: usize, bound: u64 },
    /// A socle element of the fibre local ring of positive dimension.
    FibreNotCM { socle: MultiPoly },
    /// `pR_p` is not finitely generated and the fibre is singular at the
    /// center.
    NonFgFibreSingular {
        fibre_cotangent: usize,
        local_dim: i64,
    },
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::FibreSmooth => "FibreSmooth",
            Certificate::KoszulRadical(_) => "KoszulRadical",
            Certificate::CotangentOverflow { .. } => "CotangentOverflow",
            Certificate::FibreNotCM { .. } => "FibreNotCM",
            Certificate::NonFgFibreSingular { .. } => "NonFgFibreSingular",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::CotangentOverflow { dim, bound } => {
                write!(f, "CotangentOverflow({dim} > {bound})")
            }
            Certificate::FibreNotCM { socle } => write!(f, "FibreNotCM(socle {socle})"),
            Certificate::NonFgFibreSingular {
                fibre_cotangent,
                local_dim,
            } => write!(f, "NonFgFibreSingular({fibre_cotangent} > {local_dim})"),
            c => f.write_str(c.name()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RegularityVerdict {
    pub status: Status,
    /// `None` exactly when the status is `Unknown`.
    pub certificate: Option<Certificate>,
    pub wdim: Wdim,
    /// A certified regular sequence at the point, when one was found. For
    /// `KoszulRadical` it is the certificate's own witness.
    pub witness: Option<RegularSequenceWitness>,
}

impl RegularityVerdict {
    fn regular(
        certificate: Certificate,
        wdim: u64,
        witness: Option<RegularSequenceWitness>,
    ) -> Self {
        RegularityVerdict {
            status: Status::Regular,
            certificate: Some(certificate),
            wdim: Wdim::Finite(wdim),
            witness,
        }
    }

    fn not_regular(certificate: Certificate, witness: Option<RegularSequenceWitness>) -> Self {
        RegularityVerdict {
            status: Status::NotRegular,
            certificate: Some(certificate),
            wdim: Wdim::Infinite,
            witness,
        }
    }
}

/// The value a finite weak dimension must take: `dim(A_q ⊗ kp)`, plus one
/// when `p ≠ 0`.
pub fn expected_wdim(pt: &PointSpec) -> Result<u64, RegError> {
    let d = fibre_local_dim(pt)?;
    Ok(d as u64 + u64::from(!pt.base_prime.is_zero()))
}

/// Weak dimension of the local ring at `pt` given its verdict.
pub fn wdim_of(pt: &PointSpec, verdict: &RegularityVerdict) -> Wdim {
    match verdict.status {
        Status::Regular => expected_wdim(pt).map_or(Wdim::Unknown, Wdim::Finite),
        Status::NotRegular => Wdim::Infinite,
        Status::Unknown => Wdim::Unknown,
    }
}

/// The least of `dim T̄ + 1`, `dim Ō + 1` and the length of a generating
/// regular sequence (without the `+ 1` over the zero prime). Bounds the weak
/// dimension whenever it is finite.
pub fn wdim_upper_bound(pt: &PointSpec) -> Result<u64, RegError> {
    let shift = u64::from(!pt.base_prime.is_zero());
    let mut best = fibre_local_dim(pt)? as u64 + shift;
    match fibre_cotangent(pt) {
        Ok(t) => best = best.min(t.dim as u64 + shift),
        Err(AlgebraError::UnsupportedResidueField { .. }) => {}
        Err(e) => return Err(e.into()),
    }
    match lift_regular_sequence(pt) {
        Ok(w) if w.generates => best = best.min(w.len() as u64),
        Ok(_) | Err(RegError::ColonFailed(_)) => {}
        Err(RegError::Algebra(AlgebraError::UnsupportedResidueField { .. })) => {}
        Err(e) => return Err(e),
    }
    Ok(best)
}

/// The lifts of a basis of `T̄` form a regular sequence on the fibre ring.
fn fibre_lifts_regular(pt: &PointSpec, lifts: &[MultiPoly]) -> Result<bool, RegError> {
    let mut modulus = pt.algebra.fibre_ideal(&pt.base_prime)?;
    for l in lifts {
        if !sequence::is_nzd(&modulus, l)? {
            return Ok(false);
        }
        modulus = modulus.add([l.clone()])?;
    }
    Ok(!modulus.is_unit()?)
}

/// Three-valued regularity of the local ring at `pt`; the first applicable
/// rule wins. Errors are reserved for invalid input and exhausted budgets.
pub fn classify(pt: &PointSpec) -> Result<RegularityVerdict, RegError> {
    let local_dim = fibre_local_dim(pt)?;
    let expected = expected_wdim(pt)?;
    let p = &pt.base_prime;

    let witness = match lift_regular_sequence(pt) {
        Ok(w) => Some(w),
        Err(RegError::ColonFailed(_)) => None,
        Err(RegError::Algebra(AlgebraError::UnsupportedResidueField { .. })) => None,
        Err(e) => return Err(e),
    };
    let fibre_t = match fibre_cotangent(pt) {
        Ok(t) => Some(t),
        Err(AlgebraError::UnsupportedResidueField { .. }) => None,
        Err(e) => return Err(e.into()),
    };

    // R1: regular fibre at the center
    if let Some(t) = &fibre_t {
        if pt.kp().is_perfect() && t.dim as i64 == local_dim && fibre_lifts_regular(pt, &t.basis)? {
            return Ok(RegularityVerdict::regular(
                Certificate::FibreSmooth,
                expected,
                witness,
            ));
        }
    }
    // R2: maximal ideal generated by a certified regular sequence
    if let Some(w) = &witness {
        if w.generates && w.radical_flag {
            let w = w.clone();
            return Ok(RegularityVerdict::regular(
                Certificate::KoszulRadical(w.clone()),
                expected,
                Some(w),
            ));
        }
    }
    // R3: cotangent overflow
    match cotangent_dim(pt) {
        Ok(d) if d as u64 > expected => {
            return Ok(RegularityVerdict::not_regular(
                Certificate::CotangentOverflow {
                    dim: d,
                    bound: expected,
                },
                witness,
            ));
        }
        Ok(_) | Err(AlgebraError::UnsupportedResidueField { .. }) => {}
        Err(e) => return Err(e.into()),
    }
    // R4: fibre local ring not Cohen-Macaulay
    if local_dim <= 1 {
        let cm = fibre_cm_check(pt)?;
        if cm.status == CmStatus::NotCM {
            let socle = cm.witness[0].clone();
            return Ok(RegularityVerdict::not_regular(
                Certificate::FibreNotCM { socle },
                witness,
            ));
        }
    }
    // R5: singular fibre over a prime that is not finitely generated
    if !p.is_zero() && !pt.base().is_fg_prime(p)? {
        if let Some(t) = &fibre_t {
            if t.dim as i64 > local_dim {
                return Ok(RegularityVerdict::not_regular(
                    Certificate::NonFgFibreSingular {
                        fibre_cotangent: t.dim,
                        local_dim,
                    },
                    witness,
                ));
            }
        }
    }
    Ok(RegularityVerdict {
        status: Status::Unknown,
        certificate: None,
        wdim: Wdim::Unknown,
        witness,
    })
}
