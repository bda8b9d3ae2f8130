//! Finitely presented algebras `A = R[X]/I` over a valuation ring, their
//! fibres, and points given by generators of a chart ideal.

mod chart;
mod cotangent;

pub use chart::{build_chart, Chart};
pub use cotangent::{cotangent_dim, fibre_cotangent, local_cotangent, CotangentSpace};

use thiserror::Error;

use crate::field::Field;
use crate::groebner::{GroebnerError, Ideal};
use crate::poly::{parse_poly, MultiPoly, PolyError, PolyRing};
use crate::valuation::{BasePrime, ValError, ValuationRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("algebra is not flat: saturating at `{param}` changes the relation ideal")]
    NotFlat { param: String },
    #[error("the fibre over `{prime}` is empty")]
    EmptyFibre { prime: String },
    #[error("point `{point}` does not lie on its fibre")]
    PointNotOnFibre { point: String },
    #[error("the chart ideal of point `{point}` is the unit ideal")]
    ImproperPoint { point: String },
    #[error("point `{point}` does not lie over the declared base prime `{prime}`")]
    InconsistentBasePrime { point: String, prime: String },
    #[error("point `{point}`: residue field at the center is not supported ({reason})")]
    UnsupportedResidueField { point: String, reason: String },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Val(#[from] ValError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<crate::field::FieldError> for AlgebraError {
    fn from(e: crate::field::FieldError) -> Self {
        AlgebraError::Poly(e.into())
    }
}

/// `R[X₁,…,X_r]/⟨relations⟩` with relations in `κ₀[params][X]`.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    base: ValuationRing,
    vars: Vec<String>,
    chart_ring: PolyRing,
    relations: Vec<MultiPoly>,
}

impl PresentedAlgebra {
    /// Parses the relations in `κ₀[params, vars]` and checks the flatness
    /// witness: no relation ideal changes under saturation at a parameter.
    pub fn new<S: AsRef<str>, T: AsRef<str>>(
        base: ValuationRing,
        vars: &[S],
        relations: &[T],
    ) -> Result<PresentedAlgebra, AlgebraError> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let mut all = base.params().to_vec();
        all.extend(vars.iter().cloned());
        let chart_ring = PolyRing::new(base.kappa0().clone(), all)?;
        let mut rels = Vec::new();
        for r in relations {
            rels.push(parse_poly(r.as_ref(), &chart_ring)?);
        }
        let alg = PresentedAlgebra {
            base,
            vars,
            chart_ring,
            relations: rels,
        };
        alg.check_flat()?;
        Ok(alg)
    }

    fn check_flat(&self) -> Result<(), AlgebraError> {
        let i = self.relation_ideal()?;
        for u in self.base.params() {
            let uv = MultiPoly::var_named(&self.chart_ring, u)?;
            if !i.saturation(&uv)?.equals(&i)? {
                return Err(AlgebraError::NotFlat { param: u.clone() });
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &ValuationRing {
        &self.base
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// `κ₀[params][X]`, the ring all chart computations run in.
    pub fn chart_ring(&self) -> &PolyRing {
        &self.chart_ring
    }

    pub fn relations(&self) -> &[MultiPoly] {
        &self.relations
    }

    pub fn relation_ideal(&self) -> Result<Ideal, AlgebraError> {
        Ok(Ideal::new(
            &self.chart_ring,
            self.relations.iter().cloned(),
        )?)
    }

    /// The same algebra with extra relations (no flatness check).
    pub fn with_relations(&self, extra: impl IntoIterator<Item = MultiPoly>) -> PresentedAlgebra {
        let mut a = self.clone();
        a.relations.extend(extra);
        a
    }

    /// `kp[X]`.
    pub fn fibre_ring(&self, p: &BasePrime) -> PolyRing {
        PolyRing::new(self.base.residue_field(p), &self.vars)
            .expect("vars are distinct from params")
    }

    /// Defining ideal of the fibre `A ⊗_R kp` in `kp[X]`.
    pub fn fibre_ideal(&self, p: &BasePrime) -> Result<Ideal, AlgebraError> {
        let ring = self.fibre_ring(p);
        let mut gens = Vec::new();
        for r in &self.relations {
            gens.push(self.base.fibre_map(r, p, &ring)?);
        }
        Ok(Ideal::new(&ring, gens)?)
    }

    /// Krull dimension of the fibre over `p`.
    pub fn fibre_dim(&self, p: &BasePrime) -> Result<i64, AlgebraError> {
        let d = self.fibre_ideal(p)?.krull_dim()?;
        if d < 0 {
            return Err(AlgebraError::EmptyFibre {
                prime: p.name().to_string(),
            });
        }
        Ok(d)
    }

    /// Fibre dimension per prime (`None` for empty fibres), lowest prime first.
    pub fn fibre_dims(&self) -> Result<Vec<(BasePrime, Option<i64>)>, AlgebraError> {
        let mut out = Vec::new();
        for p in self.base.primes() {
            let d = match self.fibre_dim(&p) {
                Ok(d) => Some(d),
                Err(AlgebraError::EmptyFibre { .. }) => None,
                Err(e) => return Err(e),
            };
            out.push((p, d));
        }
        Ok(out)
    }

    /// Whether all nonempty fibres have the same dimension.
    pub fn fibre_dims_constant(&self) -> Result<bool, AlgebraError> {
        let dims: Vec<i64> = self
            .fibre_dims()?
            .into_iter()
            .filter_map(|(_, d)| d)
            .collect();
        Ok(dims.windows(2).all(|w| w[0] == w[1]))
    }

    /// Parses a point given by chart generators.
    pub fn point<S: AsRef<str>>(
        &self,
        name: &str,
        base_prime: &str,
        generators: &[S],
    ) -> Result<PointSpec, AlgebraError> {
        let p = self.base.prime(base_prime)?;
        let mut gens = Vec::new();
        for g in generators {
            gens.push(parse_poly(g.as_ref(), &self.chart_ring)?);
        }
        Ok(PointSpec {
            name: name.to_string(),
            algebra: self.clone(),
            base_prime: p,
            generators: gens,
        })
    }
}

/// A prime `q` of `A` given by its base prime `q ∩ R` and generators of its
/// trace in the chart (together with the relations and the base trace).
#[derive(Clone, Debug)]
pub struct PointSpec {
    pub name: String,
    pub algebra: PresentedAlgebra,
    pub base_prime: BasePrime,
    pub generators: Vec<MultiPoly>,
}

impl PointSpec {
    pub fn base(&self) -> &ValuationRing {
        self.algebra.base()
    }

    /// The residue field `kp` of the base prime.
    pub fn kp(&self) -> Field {
        self.base().residue_field(&self.base_prime)
    }

    /// Ideal of the point in the fibre ring: fibre relations plus mapped
    /// generators.
    pub fn fibre_trace(&self) -> Result<Ideal, AlgebraError> {
        let fib = self.algebra.fibre_ideal(&self.base_prime)?;
        let ring = fib.ring().clone();
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(self.base().fibre_map(g, &self.base_prime, &ring)?);
        }
        Ok(fib.add(gens)?)
    }

    /// Same point of the algebra with `extra` appended to its relations.
    pub fn on_quotient(&self, extra: impl IntoIterator<Item = MultiPoly>) -> PointSpec {
        PointSpec {
            algebra: self.algebra.with_relations(extra),
            ..self.clone()
        }
    }
}

/// Fibre ideal of `a` over `p`.
pub fn fibre_ideal(a: &PresentedAlgebra, p: &BasePrime) -> Result<Ideal, AlgebraError> {
    a.fibre_ideal(p)
}

/// Krull dimension of the fibre of `a` over `p`.
pub fn fibre_dim(a: &PresentedAlgebra, p: &BasePrime) -> Result<i64, AlgebraError> {
    a.fibre_dim(p)
}

/// `dim(A_q ⊗ kp)`: fibre dimension minus the dimension of the point's
/// fibre trace.
pub fn fibre_local_dim(pt: &PointSpec) -> Result<i64, AlgebraError> {
    let d = pt.algebra.fibre_dim(&pt.base_prime)?;
    let t = pt.fibre_trace()?.krull_dim()?;
    if t < 0 {
        return Err(AlgebraError::PointNotOnFibre {
            point: pt.name.clone(),
        });
    }
    Ok(d - t)
}

#[cfg(test)]
mod tests;
