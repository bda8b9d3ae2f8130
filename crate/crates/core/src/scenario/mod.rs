//! Scenarios: a base valuation ring, one or more affine charts of an algebra
//! with named points, and the analyses to run on them.

mod builtins;
mod report;

pub use builtins::{builtin, list_builtins, BUILTINS};
pub use report::{
    run_scenario, ChartReport, CheckEntry, FibreReport, PointReport, PrimeReport, Report, Summary,
};

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, PresentedAlgebra};
use crate::field::{Field, FieldError};
use crate::regular::RegError;
use crate::valuation::{ValError, ValuationRing};

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("scenario is not valid JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid scenario: {0}")]
    Invalid(String),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Reg(#[from] RegError),
}

impl From<ValError> for ScenarioError {
    fn from(e: ValError) -> Self {
        ScenarioError::Algebra(e.into())
    }
}

impl From<FieldError> for ScenarioError {
    fn from(e: FieldError) -> Self {
        ScenarioError::Algebra(e.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    /// 0 for ℚ, a prime `p` for 𝔽ₚ.
    #[serde(default)]
    pub characteristic: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub transcendentals: Vec<String>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<Field, FieldError> {
        let base = if self.characteristic == 0 {
            Field::rationals()
        } else {
            Field::prime(self.characteristic)?
        };
        base.adjoin(&self.transcendentals)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    /// `ℤⁿ` with the lexicographic order, one parameter per coordinate.
    ZnLex,
    /// `ℤ + ℤ√2`, exactly two parameters.
    DenseSqrt2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseSpec {
    pub value_group: GroupKind,
    pub params: Vec<String>,
}

impl BaseSpec {
    pub fn build(&self, kappa0: Field) -> Result<ValuationRing, ValError> {
        match self.value_group {
            GroupKind::ZnLex => ValuationRing::zn_lex(kappa0, &self.params),
            GroupKind::DenseSqrt2 => ValuationRing::dense_sqrt2(kappa0, &self.params),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointEntry {
    pub name: String,
    pub base_prime: String,
    #[serde(default)]
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChartSpec {
    pub name: String,
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default)]
    pub points: Vec<PointEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Analysis {
    Classify,
    Wdim,
    Cotangent,
    Grade,
    Fibres,
    GldimBound,
    All,
}

/// A scenario file. Either `charts` or the single-chart shorthand
/// `algebra` + `points` is given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub field: FieldSpec,
    pub base: BaseSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<PointEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub charts: Vec<ChartSpec>,
    #[serde(default = "default_analyses")]
    pub analyses: Vec<Analysis>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
}

fn default_analyses() -> Vec<Analysis> {
    vec![Analysis::All]
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Scenario, ScenarioError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_file(path: &Path) -> Result<Scenario, ScenarioError> {
        let text = std::fs::read_to_string(path).map_err(|source| ScenarioError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Scenario::from_json(&text)
    }

    /// A builtin name or a path to a scenario file.
    pub fn load(name_or_path: &str) -> Result<Scenario, ScenarioError> {
        if let Some(s) = builtin(name_or_path) {
            return Ok(s);
        }
        let path = Path::new(name_or_path);
        if path.exists() {
            return Scenario::from_file(path);
        }
        Err(ScenarioError::UnknownBuiltin(name_or_path.to_string()))
    }

    /// The charts, with the single-chart shorthand expanded.
    pub fn chart_specs(&self) -> Vec<ChartSpec> {
        let mut out = self.charts.clone();
        if let Some(a) = &self.algebra {
            out.insert(
                0,
                ChartSpec {
                    name: self.name.clone(),
                    vars: a.vars.clone(),
                    relations: a.relations.clone(),
                    points: self.points.clone(),
                },
            );
        }
        out
    }

    pub fn wants(&self, a: Analysis) -> bool {
        self.analyses.contains(&Analysis::All) || self.analyses.contains(&a)
    }

    /// Builds the base ring and every chart, checking names and primes.
    pub fn build(
        &self,
    ) -> Result<(ValuationRing, Vec<(ChartSpec, PresentedAlgebra)>), ScenarioError> {
        let invalid = |m: String| Err(ScenarioError::Invalid(m));
        if self.algebra.is_none() && !self.points.is_empty() {
            return invalid("`points` needs `algebra`".into());
        }
        let specs = self.chart_specs();
        if specs.is_empty() {
            return invalid("no algebra and no charts".into());
        }
        if self.analyses.is_empty() {
            return invalid("no analyses requested".into());
        }
        let field = self.field.build()?;
        let base = self.base.build(field)?;
        let mut chart_names = BTreeSet::new();
        let mut point_names = BTreeSet::new();
        let mut out = Vec::new();
        for spec in specs {
            if !chart_names.insert(spec.name.clone()) {
                return invalid(format!("chart `{}` declared twice", spec.name));
            }
            let alg = PresentedAlgebra::new(base.clone(), &spec.vars, &spec.relations)?;
            for p in &spec.points {
                if !point_names.insert(p.name.clone()) {
                    return invalid(format!("point `{}` declared twice", p.name));
                }
                base.prime(&p.base_prime)?;
                alg.point(&p.name, &p.base_prime, &p.generators)?;
            }
            out.push((spec, alg));
        }
        Ok((base, out))
    }
}
