use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value as Json;

use super::{Analysis, Scenario, ScenarioError};
use crate::algebra::{
    cotangent_dim, fibre_cotangent, fibre_local_dim, AlgebraError, PointSpec, PresentedAlgebra,
};
use crate::regular::{classify, fibre_cm_check, verdict_checks, CmStatus, Status, Wdim};
use crate::valuation::ValuationRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub name: String,
    /// `null` for the zero prime.
    pub finitely_generated: Option<bool>,
    pub limit: bool,
    pub trace: Vec<String>,
    pub residue_field: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibreReport {
    pub prime: String,
    pub field: String,
    /// Reduced Gröbner basis of the fibre ideal.
    pub ideal: Vec<String>,
    /// `null` for an empty fibre.
    pub dimension: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointReport {
    pub point: String,
    pub chart: String,
    pub base_prime: String,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_detail: Option<String>,
    /// A number, `"infinite"`, or `null` when unknown.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wdim: Option<Json>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wdim_upper_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibre_local_dim: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cotangent_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibre_cotangent_dim: Option<usize>,
    /// Certified lower bound for the grade of the maximal ideal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grade_lower_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibre_cm: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gldim_bound: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartReport {
    pub name: String,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub fibres: Vec<FibreReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibre_dims_constant: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub chart: String,
    /// `null` for checks on the whole chart.
    pub point: Option<String>,
    pub check: String,
    /// `null` when the check does not apply.
    pub passed: Option<bool>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub regular: usize,
    pub not_regular: usize,
    pub unknown: usize,
    pub checks_passed: usize,
    pub checks_failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub description: String,
    pub field: String,
    pub value_group: String,
    pub params: Vec<String>,
    pub primes: Vec<PrimeReport>,
    pub charts: Vec<ChartReport>,
    pub points: Vec<PointReport>,
    pub invariant_checks: Vec<CheckEntry>,
    pub summary: Summary,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn point(&self, name: &str) -> Option<&PointReport> {
        self.points.iter().find(|p| p.point == name)
    }

    pub fn has_unknown(&self) -> bool {
        self.summary.unknown > 0
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "scenario {}: {}", self.scenario, self.description);
        let _ = writeln!(
            s,
            "base: {} over {}, params {}",
            self.value_group,
            self.field,
            self.params.join(", ")
        );
        for c in &self.charts {
            let _ = writeln!(
                s,
                "chart {} [{}]: {}",
                c.name,
                c.vars.join(", "),
                c.relations.join(", ")
            );
            for f in &c.fibres {
                let dim = f
                    .dimension
                    .map_or("empty".to_string(), |d| format!("dim {d}"));
                let _ = writeln!(
                    s,
                    "  fibre over {} in {}: <{}>, {}",
                    f.prime,
                    f.field,
                    f.ideal.join(", "),
                    dim
                );
            }
        }
        for p in &self.points {
            let mut line = format!("point {} ({}, over {})", p.point, p.chart, p.base_prime);
            if let Some(st) = &p.status {
                let _ = write!(line, ": {st}");
            }
            if let Some(c) = &p.certificate_detail {
                let _ = write!(line, " [{c}]");
            }
            if let Some(w) = &p.wdim {
                let w = match w {
                    Json::Null => "unknown".to_string(),
                    Json::String(x) => x.clone(),
                    other => other.to_string(),
                };
                let _ = write!(line, ", wdim {w}");
            }
            if let Some(d) = p.cotangent_dim {
                let _ = write!(line, ", dim T {d}");
            }
            if let Some(seq) = &p.sequence {
                let _ = write!(line, ", sequence ({})", seq.join(", "));
            }
            if let Some(g) = p.gldim_bound {
                let _ = write!(line, ", gldim <= {g}");
            }
            let _ = writeln!(s, "{line}");
        }
        let failed: Vec<&CheckEntry> = self
            .invariant_checks
            .iter()
            .filter(|c| c.passed == Some(false))
            .collect();
        let _ = writeln!(
            s,
            "checks: {} passed, {} failed",
            self.summary.checks_passed, self.summary.checks_failed
        );
        for c in failed {
            let _ = writeln!(
                s,
                "  FAILED {} at {}: {}",
                c.check,
                c.point.as_deref().unwrap_or(&c.chart),
                c.detail
            );
        }
        let _ = writeln!(
            s,
            "verdicts: {} regular, {} not regular, {} unknown",
            self.summary.regular, self.summary.not_regular, self.summary.unknown
        );
        s
    }
}

fn primes_report(base: &ValuationRing) -> Result<Vec<PrimeReport>, ScenarioError> {
    let mut out = Vec::new();
    for p in base.primes() {
        out.push(PrimeReport {
            name: p.name().to_string(),
            finitely_generated: if p.is_zero() {
                None
            } else {
                Some(base.is_fg_prime(&p)?)
            },
            limit: base.is_limit_prime(&p),
            trace: base.trace_params(&p).to_vec(),
            residue_field: base.residue_field(&p).to_string(),
        });
    }
    Ok(out)
}

fn fibres_report(a: &PresentedAlgebra) -> Result<Vec<FibreReport>, ScenarioError> {
    let mut out = Vec::new();
    for (p, dim) in a.fibre_dims()? {
        let ideal = a.fibre_ideal(&p)?;
        let basis = ideal.basis().map_err(AlgebraError::from)?;
        out.push(FibreReport {
            prime: p.name().to_string(),
            field: ideal.ring().field().to_string(),
            ideal: basis.iter().map(|g| g.to_string()).collect(),
            dimension: dim,
        });
    }
    Ok(out)
}

fn unsupported_to_none<T>(r: Result<T, AlgebraError>) -> Result<Option<T>, ScenarioError> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(AlgebraError::UnsupportedResidueField { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn wdim_json(w: Wdim) -> Json {
    match w {
        Wdim::Finite(n) => Json::from(n),
        Wdim::Infinite => Json::from("infinite"),
        Wdim::Unknown => Json::Null,
    }
}

fn analyze_point(
    sc: &Scenario,
    chart: &str,
    pt: &PointSpec,
    generators: &[String],
    full_checks: bool,
    checks: &mut Vec<CheckEntry>,
) -> Result<PointReport, ScenarioError> {
    let mut r = PointReport {
        point: pt.name.clone(),
        chart: chart.to_string(),
        base_prime: pt.base_prime.name().to_string(),
        generators: generators.to_vec(),
        status: None,
        certificate: None,
        certificate_detail: None,
        wdim: None,
        sequence: None,
        wdim_upper_bound: None,
        fibre_local_dim: None,
        cotangent_dim: None,
        fibre_cotangent_dim: None,
        grade_lower_bound: None,
        fibre_cm: None,
        gldim_bound: None,
    };
    let need_verdict = sc.wants(Analysis::Classify)
        || sc.wants(Analysis::Wdim)
        || sc.wants(Analysis::Grade)
        || sc.wants(Analysis::GldimBound);
    let verdict = if need_verdict {
        Some(classify(pt)?)
    } else {
        None
    };
    if let Some(v) = &verdict {
        if sc.wants(Analysis::Classify) {
            r.status = Some(v.status.to_string());
            r.certificate = v.certificate.as_ref().map(|c| c.name().to_string());
            r.certificate_detail = v.certificate.as_ref().map(|c| c.to_string());
            r.sequence = v.witness.as_ref().map(|w| w.names());
        }
        if sc.wants(Analysis::Wdim) {
            r.wdim = Some(wdim_json(v.wdim));
            r.wdim_upper_bound = Some(crate::regular::wdim_upper_bound(pt)?);
        }
        if sc.wants(Analysis::GldimBound) {
            if let Wdim::Finite(w) = v.wdim {
                r.gldim_bound = Some(pt.base().gldim_bound(w));
            }
        }
        if sc.wants(Analysis::Grade) {
            r.grade_lower_bound = v.witness.as_ref().map(|w| w.len());
            let cm = fibre_cm_check(pt)?;
            r.fibre_cm = Some(
                match cm.status {
                    CmStatus::CM => "CM",
                    CmStatus::NotCM => "NotCM",
                    CmStatus::Unknown => "Unknown",
                }
                .to_string(),
            );
        }
        for c in verdict_checks(pt, v, full_checks)? {
            checks.push(CheckEntry {
                chart: chart.to_string(),
                point: Some(pt.name.clone()),
                check: c.name.to_string(),
                passed: c.passed,
                detail: c.detail,
            });
        }
    }
    if sc.wants(Analysis::Cotangent) {
        r.fibre_local_dim = Some(fibre_local_dim(pt)?);
        r.cotangent_dim = unsupported_to_none(cotangent_dim(pt))?;
        r.fibre_cotangent_dim = unsupported_to_none(fibre_cotangent(pt))?.map(|t| t.dim);
    }
    Ok(r)
}

/// Runs every requested analysis. `full_checks` adds the quotient
/// consistency check, which classifies a second algebra per regular point.
pub fn run_scenario(sc: &Scenario, full_checks: bool) -> Result<Report, ScenarioError> {
    let (base, charts) = sc.build()?;
    let mut chart_reports = Vec::new();
    let mut points = Vec::new();
    let mut checks = Vec::new();
    for (spec, alg) in &charts {
        let mut cr = ChartReport {
            name: spec.name.clone(),
            vars: spec.vars.clone(),
            relations: alg.relations().iter().map(|r| r.to_string()).collect(),
            fibres: Vec::new(),
            fibre_dims_constant: None,
        };
        if sc.wants(Analysis::Fibres) {
            cr.fibres = fibres_report(alg)?;
            let constant = alg.fibre_dims_constant()?;
            cr.fibre_dims_constant = Some(constant);
            checks.push(CheckEntry {
                chart: spec.name.clone(),
                point: None,
                check: "fibre-dims-constant".into(),
                passed: Some(constant),
                detail: "nonempty fibres share one dimension".into(),
            });
        }
        chart_reports.push(cr);
        for entry in &spec.points {
            let pt = alg.point(&entry.name, &entry.base_prime, &entry.generators)?;
            points.push(analyze_point(
                sc,
                &spec.name,
                &pt,
                &entry.generators,
                full_checks,
                &mut checks,
            )?);
        }
    }
    let mut summary = Summary::default();
    for p in &points {
        match p.status.as_deref() {
            Some(s) if s == Status::Regular.to_string() => summary.regular += 1,
            Some(s) if s == Status::NotRegular.to_string() => summary.not_regular += 1,
            Some(_) => summary.unknown += 1,
            None => {}
        }
    }
    summary.checks_passed = checks.iter().filter(|c| c.passed == Some(true)).count();
    summary.checks_failed = checks.iter().filter(|c| c.passed == Some(false)).count();
    Ok(Report {
        scenario: sc.name.clone(),
        description: sc.description.clone(),
        field: base.kappa0().to_string(),
        value_group: match sc.base.value_group {
            super::GroupKind::ZnLex => format!("ZnLex(rank {})", sc.base.params.len()),
            super::GroupKind::DenseSqrt2 => "DenseSqrt2".to_string(),
        },
        params: base.params().to_vec(),
        primes: primes_report(&base)?,
        charts: chart_reports,
        points,
        invariant_checks: checks,
        summary,
    })
}
