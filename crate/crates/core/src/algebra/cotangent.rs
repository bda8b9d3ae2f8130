use super::{AlgebraError, Chart, PointSpec};
use crate::field::{Field, FieldElement};
use crate::groebner::Ideal;
use crate::poly::{derivative, substitute, Bindings, MonomialOrder, MultiPoly, PolyRing};

/// `M/M²` at a point, with lifts of a basis.
#[derive(Clone, Debug)]
pub struct CotangentSpace {
    pub dim: usize,
    /// Number of coordinates of the ambient polynomial model at the point.
    pub embedding_dim: usize,
    /// Rank of the Jacobian of the relations at the point.
    pub jacobian_rank: usize,
    /// Variables moved into the coefficient field because the point is not
    /// closed in the model.
    pub transcendental_vars: Vec<String>,
    /// Lifts of a basis of `M/M²`, in the chart ring (or fibre ring).
    pub basis: Vec<MultiPoly>,
}

/// Rank of a matrix over a field by Gaussian elimination.
pub(crate) fn rank(mut rows: Vec<Vec<FieldElement>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] * &inv;
                for k in c..ncols {
                    let v = &rows[i][k] - &(&f * &rows[r][k]);
                    rows[i][k] = v;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

struct LocalData {
    dim: usize,
    embedding_dim: usize,
    jacobian_rank: usize,
    moved: Vec<String>,
    /// (variable name, coordinate) of the chosen basis directions
    chosen: Vec<(String, FieldElement)>,
}

/// Cotangent space of `ring/⟨relations⟩` at the prime `⟨relations, center⟩`.
/// Basis directions are chosen greedily in `preference` order.
fn cotangent_at(
    point: &str,
    ring: &PolyRing,
    relations: &[MultiPoly],
    center: &[MultiPoly],
    preference: &[String],
) -> Result<LocalData, AlgebraError> {
    let c = Ideal::new(ring, relations.iter().chain(center).cloned())?;
    let Some(indep) = c.max_independent_set()? else {
        return Err(AlgebraError::PointNotOnFibre {
            point: point.to_string(),
        });
    };
    let moved: Vec<String> = indep.iter().map(|&i| ring.vars()[i].clone()).collect();
    let field: Field = if moved.is_empty() {
        ring.field().clone()
    } else {
        ring.field().adjoin(&moved)?
    };
    let rest: Vec<String> = ring
        .vars()
        .iter()
        .filter(|v| !moved.contains(v))
        .cloned()
        .collect();
    let small = PolyRing::new(field.clone(), &rest)?.with_order(MonomialOrder::Lex);
    let unsupported = |reason: &str| AlgebraError::UnsupportedResidueField {
        point: point.to_string(),
        reason: reason.to_string(),
    };

    let mut rel2 = Vec::new();
    for r in relations {
        rel2.push(r.rename_into(&small)?);
    }
    let mut cen2 = rel2.clone();
    for g in center {
        cen2.push(g.rename_into(&small)?);
    }
    let basis = Ideal::new(&small, cen2)?.groebner_basis(&MonomialOrder::Lex)?;

    // the center must be a rational point: basis {v_i - c_i}
    let mut coords: Vec<Option<FieldElement>> = vec![None; rest.len()];
    for g in basis.iter() {
        let lt = g.leading_term().expect("nonzero");
        let vars: Vec<usize> = lt.mono.support().collect();
        if lt.mono.degree() != 1
            || g.terms().len() > 2
            || g.terms()[1..].iter().any(|t| !t.mono.is_one())
        {
            return Err(unsupported(
                "the center is not a rational point of the model",
            ));
        }
        let c = g.terms().get(1).map_or(field.zero(), |t| -&t.coeff);
        coords[vars[0]] = Some(c);
    }
    let coords: Vec<FieldElement> = coords
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| unsupported("the center is not a rational point of the model"))?;

    let point_ring = PolyRing::new(field.clone(), Vec::<String>::new())?;
    let mut at = Bindings::new();
    for (v, c) in rest.iter().zip(&coords) {
        at.insert(v.clone(), MultiPoly::constant(&point_ring, c.clone()));
    }
    let eval = |f: &MultiPoly| -> Result<FieldElement, AlgebraError> {
        Ok(substitute(f, &at, &point_ring)?
            .constant_value()
            .expect("all variables bound"))
    };
    let mut rows = Vec::new();
    for r in &rel2 {
        let mut row = Vec::with_capacity(rest.len());
        for i in 0..rest.len() {
            row.push(eval(&derivative(r, i))?);
        }
        rows.push(row);
    }
    let jr = rank(rows.clone());

    let mut chosen = Vec::new();
    let mut current = rows;
    let mut current_rank = jr;
    for name in preference {
        let Some(i) = rest.iter().position(|v| v == name) else {
            continue;
        };
        let mut e = vec![field.zero(); rest.len()];
        e[i] = field.one();
        let mut trial = current.clone();
        trial.push(e);
        let rk = rank(trial.clone());
        if rk > current_rank {
            current = trial;
            current_rank = rk;
            chosen.push((name.clone(), coords[i].clone()));
        }
    }
    Ok(LocalData {
        dim: rest.len() - jr,
        embedding_dim: rest.len(),
        jacobian_rank: jr,
        moved,
        chosen,
    })
}

/// `den·v − num` for the coordinate `c = num/den` of variable `v`, in `target`.
fn lift(v: &str, c: &FieldElement, target: &PolyRing) -> Result<MultiPoly, AlgebraError> {
    let var = MultiPoly::var_named(target, v)?;
    match c.as_fraction() {
        Some((n, d)) => {
            let n = n.rename_into(target)?;
            let d = d.rename_into(target)?;
            Ok(&(&d * &var) - &n)
        }
        None => {
            let c = c.embed(target.field())?;
            Ok(&var - &MultiPoly::constant(target, c))
        }
    }
}

/// Cotangent space `T = M/M²` of the local ring at `pt`, computed in the
/// chart: inverted parameters become units, parameters of the base prime
/// lying in `(pR_p)²` are dropped, and the principal generator of `pR_p`
/// (if any) stays a coordinate.
pub fn local_cotangent(pt: &PointSpec, chart: &Chart) -> Result<CotangentSpace, AlgebraError> {
    let base = pt.base();
    let p = &pt.base_prime;
    let kprime = base.residue_field(p);
    let generator = base.principal_generator(p).map(str::to_string);
    let mut vars: Vec<String> = pt.algebra.vars().to_vec();
    vars.extend(generator.clone());
    let ring = PolyRing::new(kprime, &vars)?;
    let mut deep = Bindings::new();
    for u in base.deep_params(p) {
        deep.insert(u.clone(), MultiPoly::zero(&ring));
    }
    let mut rels = Vec::new();
    for r in chart.relations().generators() {
        rels.push(substitute(r, &deep, &ring)?);
    }
    let mut center = Vec::new();
    for g in &pt.generators {
        center.push(substitute(g, &deep, &ring)?);
    }
    if let Some(g) = &generator {
        center.push(MultiPoly::var_named(&ring, g)?);
    }
    let data = cotangent_at(&pt.name, &ring, &rels, &center, &vars)?;
    let mut basis = Vec::new();
    for (v, c) in &data.chosen {
        basis.push(lift(v, c, chart.ring())?);
    }
    Ok(CotangentSpace {
        dim: data.dim,
        embedding_dim: data.embedding_dim,
        jacobian_rank: data.jacobian_rank,
        transcendental_vars: data.moved,
        basis,
    })
}

/// Cotangent space `T̄` of the fibre local ring `Ō` at `pt`; lifts live in
/// the fibre ring `kp[X]`.
pub fn fibre_cotangent(pt: &PointSpec) -> Result<CotangentSpace, AlgebraError> {
    let fib = pt.algebra.fibre_ideal(&pt.base_prime)?;
    let ring = fib.ring().clone();
    let mut center = Vec::new();
    for g in &pt.generators {
        center.push(pt.base().fibre_map(g, &pt.base_prime, &ring)?);
    }
    let data = cotangent_at(
        &pt.name,
        &ring,
        fib.generators(),
        &center,
        pt.algebra.vars(),
    )?;
    let mut basis = Vec::new();
    for (v, c) in &data.chosen {
        basis.push(lift(v, c, &ring)?);
    }
    Ok(CotangentSpace {
        dim: data.dim,
        embedding_dim: data.embedding_dim,
        jacobian_rank: data.jacobian_rank,
        transcendental_vars: data.moved,
        basis,
    })
}

/// `dim T`: the chart computation when the base prime is 0 or finitely
/// generated, otherwise `dim T̄` (then `N = N²` and `T → T̄` is injective
/// with the same image).
pub fn cotangent_dim(pt: &PointSpec) -> Result<usize, AlgebraError> {
    let p = &pt.base_prime;
    if p.is_zero() || pt.base().is_fg_prime(p)? {
        let chart = super::build_chart(pt)?;
        Ok(local_cotangent(pt, &chart)?.dim)
    } else {
        Ok(fibre_cotangent(pt)?.dim)
    }
}
