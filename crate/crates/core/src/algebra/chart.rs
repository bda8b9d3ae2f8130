use super::{AlgebraError, PointSpec};
use crate::groebner::Ideal;
use crate::poly::{MultiPoly, PolyRing};

/// Polynomial model `κ₀[params][X]` of the localization at a point.
///
/// Inverted parameters are units of the local ring, so every ideal here is
/// saturated at their product before use.
#[derive(Clone, Debug)]
pub struct Chart {
    ring: PolyRing,
    relations: Ideal,
    ideal: Ideal,
    center: Vec<MultiPoly>,
    inverted: Vec<String>,
    unit: MultiPoly,
}

impl Chart {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// Relation ideal saturated at the inverted parameters.
    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    /// The chart ideal `Q̃` of the point.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Point generators followed by the generators of the base-prime trace.
    pub fn center(&self) -> &[MultiPoly] {
        &self.center
    }

    pub fn inverted_params(&self) -> &[String] {
        &self.inverted
    }

    /// Product of the inverted parameters (1 if there are none).
    pub fn unit(&self) -> &MultiPoly {
        &self.unit
    }

    /// `I : (inverted)^∞`.
    pub fn localize(&self, i: &Ideal) -> Result<Ideal, AlgebraError> {
        if self.unit.is_constant() {
            Ok(i.clone())
        } else {
            Ok(i.saturation(&self.unit)?)
        }
    }
}

/// Builds the chart of `pt` and checks that it lies over its base prime.
pub fn build_chart(pt: &PointSpec) -> Result<Chart, AlgebraError> {
    let alg = &pt.algebra;
    let base = alg.base();
    let ring = alg.chart_ring().clone();
    let inverted = base.inverted_params(&pt.base_prime).to_vec();
    let mut unit = MultiPoly::one(&ring);
    for u in &inverted {
        unit = &unit * &MultiPoly::var_named(&ring, u)?;
    }
    let mut chart = Chart {
        ring: ring.clone(),
        relations: alg.relation_ideal()?,
        ideal: Ideal::zero(&ring),
        center: Vec::new(),
        inverted,
        unit,
    };
    chart.relations = chart.localize(&chart.relations)?;

    let mut trace = Vec::new();
    for u in base.trace_params(&pt.base_prime) {
        trace.push(MultiPoly::var_named(&ring, u)?);
    }
    chart.center = pt
        .generators
        .iter()
        .cloned()
        .chain(trace.iter().cloned())
        .collect();
    chart.ideal = chart.localize(&chart.relations.add(chart.center.iter().cloned())?)?;
    if chart.ideal.is_unit()? {
        return Err(AlgebraError::ImproperPoint {
            point: pt.name.clone(),
        });
    }

    // q ∩ κ₀[params] must have the trace of the base prime as its radical
    let contracted = chart.ideal.eliminate(alg.vars())?;
    let pring = contracted.ring().clone();
    let trace_ideal = Ideal::new(
        &pring,
        trace
            .iter()
            .map(|t| t.rename_into(&pring))
            .collect::<Result<Vec<_>, _>>()?,
    )?;
    let inconsistent = || AlgebraError::InconsistentBasePrime {
        point: pt.name.clone(),
        prime: pt.base_prime.name().to_string(),
    };
    for g in contracted.generators() {
        if !trace_ideal.radical_contains(g)? {
            return Err(inconsistent());
        }
    }
    for g in trace_ideal.generators() {
        if !contracted.radical_contains(g)? {
            return Err(inconsistent());
        }
    }
    Ok(chart)
}
