//! Acceptance run: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value as Json;

use regloc::algebra::{
    cotangent_dim, fibre_cotangent, fibre_local_dim, AlgebraError, PresentedAlgebra,
};
use regloc::field::{Field, FieldElement};
use regloc::groebner::Ideal;
use regloc::poly::{parse_poly, MultiPoly, PolyRing};
use regloc::regular::{
    classify, distribution_check, grade_extension_check, lift_regular_sequence, expected_wdim,
    Certificate, Status, Wdim,
};
use regloc::scenario::{builtin, list_builtins, run_scenario};
use regloc::valuation::{GroupElement, ValuationRing, Value};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

// ---- 1 ----

fn elliptic() -> Outcome {
    let start = Instant::now();
    let r = run_scenario(&builtin("elliptic-rank2").unwrap(), true).map_err(err)?;
    let x = r
        .charts
        .iter()
        .find(|c| c.name == "X-chart")
        .ok_or("no X-chart")?;
    let fibre = |p: &str| x.fibres.iter().find(|f| f.prime == p).unwrap();
    ensure(
        fibre("N").ideal == ["Y^2*Z"],
        format!("fibre over N: {:?}", fibre("N").ideal),
    )?;
    ensure(fibre("p").field == "QQ(t)", "fibre over p field")?;
    ensure(
        fibre("p").ideal == ["Y^2*Z - t*Z^3"],
        format!("fibre over p: {:?}", fibre("p").ideal),
    )?;
    ensure(
        x.fibres.iter().all(|f| f.dimension == Some(1)),
        "fibre dimensions",
    )?;
    let pt = |n: &str| r.point(n).unwrap();
    ensure(pt("Q").status.as_deref() == Some("Regular"), "Q status")?;
    ensure(pt("Q").wdim == Some(Json::from(2)), "Q wdim")?;
    ensure(
        pt("Q").sequence.as_ref().map(|s| s.len()) == Some(2),
        "Q witness length",
    )?;
    ensure(pt("Q'").status.as_deref() == Some("Regular"), "Q' status")?;
    ensure(pt("Q'").wdim == Some(Json::from(2)), "Q' wdim")?;
    ensure(
        pt("Q''").status.as_deref() == Some("NotRegular"),
        "Q'' status",
    )?;
    ensure(
        pt("Q''").certificate_detail.as_deref() == Some("CotangentOverflow(3 > 2)"),
        "Q'' certificate",
    )?;
    ensure(pt("Q''").wdim == Some(Json::from("infinite")), "Q'' wdim")?;
    ensure(
        pt("generic").status.as_deref() == Some("Regular"),
        "generic status",
    )?;
    ensure(pt("generic").wdim == Some(Json::from(1)), "generic wdim")?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, format!("took {secs:.1}s"))?;
    Ok(format!(
        "Q 2, Q' 2, Q'' infinite (3 > 2), generic 1 in {secs:.2}s"
    ))
}

// ---- 2 ----

fn strange_t() -> Outcome {
    let sc = builtin("strange-T").unwrap();
    let (_, charts) = sc.build().map_err(err)?;
    let a = &charts[0].1;
    let q = a.point("q", "N", &["X"]).map_err(err)?;
    let t = cotangent_dim(&q).map_err(err)?;
    ensure(t == 1, format!("dim T = {t}"))?;
    let v = classify(&q).map_err(err)?;
    ensure(
        v.status == Status::Regular && v.wdim == Wdim::Finite(2),
        format!("verdict {:?}", v.wdim),
    )?;
    let w = lift_regular_sequence(&q).map_err(err)?;
    ensure(w.names() == ["X", "t"], format!("sequence {:?}", w.names()))?;
    // the colon proofs make (X, t) a regular sequence in M, so grade M >= 2
    ensure(w.verify().map_err(err)?, "colon proofs do not reverify")?;
    ensure(w.len() >= 2, "grade lower bound")?;
    Ok(format!(
        "dim T = {t}, wdim = 2, sequence ({})",
        w.names().join(", ")
    ))
}

// ---- 3 ----

fn dense() -> Outcome {
    let sc = builtin("dense-affine-line").unwrap();
    let (base, charts) = sc.build().map_err(err)?;
    let n = base.maximal_prime();
    ensure(
        !base.is_fg_prime(&n).map_err(err)?,
        "N is finitely generated",
    )?;
    let a = &charts[0].1;
    let q = a.point("q", "N", &["X"]).map_err(err)?;
    let tbar = fibre_cotangent(&q).map_err(err)?.dim;
    let local = fibre_local_dim(&q).map_err(err)?;
    ensure(
        tbar as i64 == local,
        format!("fibre over N singular: {tbar} vs {local}"),
    )?;
    let v = classify(&q).map_err(err)?;
    ensure(v.status == Status::Regular, "point not regular")?;
    // over a prime that is not finitely generated, regularity is read off
    // the fibre
    ensure(
        matches!(v.certificate, Some(Certificate::FibreSmooth)),
        "certificate is not the fibre branch",
    )?;
    let Wdim::Finite(w) = v.wdim else {
        return Err("wdim not finite".into());
    };
    ensure(w == 2, format!("wdim {w}"))?;
    let g = base.gldim_bound(w);
    ensure(g == 3, format!("gldim bound {g}"))?;
    Ok(format!(
        "N not fg, fibre regular, wdim {w}, gldim bound {g}"
    ))
}

// ---- 4 ----

struct Generated {
    base: ValuationRing,
    vars: Vec<String>,
    relations: Vec<String>,
    center: Vec<i64>,
}

fn shifted(var: &str, c: i64) -> String {
    match c {
        0 => var.to_string(),
        c if c > 0 => format!("({var} - {c})"),
        c => format!("({var} + {})", -c),
    }
}

/// A term `k * params^a * Π (X_i - c_i)^e_i` of total degree at most 3.
fn random_term(
    rng: &mut ChaCha8Rng,
    params: &[String],
    vars: &[String],
    center: &[i64],
    unit: bool,
) -> String {
    let mut k: i64 = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        k = -k;
    }
    let mut parts = vec![k.to_string()];
    let mut deg = 0;
    if !unit {
        for p in params {
            let e = rng.gen_range(0..=1);
            if e > 0 {
                parts.push(p.clone());
                deg += 1;
            }
        }
    }
    let mut xdeg = 0;
    while xdeg == 0 {
        for (i, v) in vars.iter().enumerate() {
            let room = 3 - deg - xdeg;
            if room == 0 {
                break;
            }
            let e = rng.gen_range(0..=room.min(2));
            if e > 0 {
                parts.push(format!("{}^{e}", shifted(v, center[i])));
                xdeg += e;
            }
        }
    }
    parts.join("*")
}

fn generate(rng: &mut ChaCha8Rng) -> Generated {
    let params: Vec<String> = if rng.gen_bool(0.5) {
        vec!["t".into()]
    } else {
        vec!["s".into(), "t".into()]
    };
    let base = ValuationRing::zn_lex(Field::rationals(), &params).unwrap();
    let n = rng.gen_range(1..=3);
    let vars: Vec<String> = ["X", "Y", "Z"][..n].iter().map(|s| s.to_string()).collect();
    let center: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=1)).collect();
    // the last variable may be a graph over the others
    let graph = n >= 2 && rng.gen_bool(0.3);
    let main_vars = if graph { &vars[..n - 1] } else { &vars[..] };
    let mut terms = vec![random_term(rng, &params, main_vars, &center, true)];
    for _ in 0..rng.gen_range(1..=3) {
        terms.push(random_term(rng, &params, main_vars, &center, false));
    }
    // a constant term inside the trace of the maximal ideal
    if rng.gen_bool(0.5) {
        terms.push(params[rng.gen_range(0..params.len())].clone());
    }
    let mut relations = vec![terms.join(" + ")];
    if graph {
        let last = n - 1;
        let h = random_term(rng, &params, &vars[..last], &center, false);
        relations.push(format!("{} - ({h})", shifted(&vars[last], center[last])));
    }
    Generated {
        base,
        vars,
        relations,
        center,
    }
}

fn consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20240611);
    let (mut algebras, mut points, mut regular, mut other) = (0, 0, 0, 0);
    let mut violations = Vec::new();
    let mut attempts = 0;
    while algebras < 30 && attempts < 500 {
        attempts += 1;
        let g = generate(&mut rng);
        let Ok(a) = PresentedAlgebra::new(g.base.clone(), &g.vars, &g.relations) else {
            continue;
        };
        let Ok(dims) = a.fibre_dims() else { continue };
        if dims.iter().any(|(_, d)| d.is_none()) {
            continue;
        }
        let constant = a.fibre_dims_constant().map_err(err)?;
        algebras += 1;
        let gens: Vec<String> = g
            .vars
            .iter()
            .zip(&g.center)
            .map(|(v, &c)| shifted(v, c))
            .collect();
        for p in g.base.primes() {
            let pt = a.point("c", p.name(), &gens).map_err(err)?;
            let v = match classify(&pt) {
                Ok(v) => v,
                Err(regloc::regular::RegError::Algebra(
                    AlgebraError::InconsistentBasePrime { .. }
                    | AlgebraError::ImproperPoint { .. }
                    | AlgebraError::PointNotOnFibre { .. },
                )) => continue,
                Err(e) => return Err(format!("{:?} at {}: {e}", g.relations, p.name())),
            };
            points += 1;
            if v.status != Status::Regular {
                other += 1;
                continue;
            }
            regular += 1;
            let tag = format!("{:?} at {}", g.relations, p.name());
            let expected = expected_wdim(&pt).map_err(err)?;
            if !constant {
                violations.push(format!("{tag}: fibre dimensions jump"));
            }
            match &v.witness {
                None => violations.push(format!("{tag}: no witness")),
                Some(w) => {
                    if w.len() as u64 != expected {
                        violations
                            .push(format!("{tag}: witness length {} vs wdim {expected}", w.len()));
                    }
                    if !distribution_check(&pt, w).map_err(err)? {
                        violations.push(format!("{tag}: contraction not in {{0, N}}"));
                    }
                }
            }
            if !p.is_zero() && !grade_extension_check(&pt, &v).map_err(err)? {
                violations.push(format!("{tag}: grade extension"));
            }
            match cotangent_dim(&pt) {
                Ok(d) if d as u64 > expected => {
                    violations.push(format!("{tag}: dim T {d} > wdim {expected}"))
                }
                Ok(_) | Err(AlgebraError::UnsupportedResidueField { .. }) => {}
                Err(e) => return Err(format!("{tag}: {e}")),
            }
        }
    }
    ensure(
        algebras >= 20,
        format!("only {algebras} algebras generated"),
    )?;
    ensure(regular > 0, "no regular verdicts")?;
    if !violations.is_empty() {
        return Err(format!(
            "{} violations: {}",
            violations.len(),
            violations.join("; ")
        ));
    }
    Ok(format!(
        "{algebras} algebras, {points} points, {regular} regular, {other} other, 0 violations"
    ))
}

// ---- 5 ----

type Mono = [u32; 3];

fn monomials(n: usize, max_deg: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    for a in 0..=max_deg {
        for b in 0..=max_deg {
            for c in 0..=max_deg {
                let m = [a, b, c];
                if a + b + c <= max_deg && m[n..].iter().all(|&x| x == 0) {
                    out.push(m);
                }
            }
        }
    }
    out
}

fn divides(a: &Mono, b: &Mono) -> bool {
    (0..3).all(|i| a[i] <= b[i])
}

fn mul(a: &Mono, b: &Mono) -> Mono {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn in_monomial_ideal(gens: &[Mono], m: &Mono) -> bool {
    gens.iter().any(|g| divides(g, m))
}

const NAMES: [&str; 3] = ["x", "y", "z"];

fn mono_poly(ring: &PolyRing, m: &Mono) -> MultiPoly {
    let mut s = vec!["1".to_string()];
    for i in 0..3 {
        if m[i] > 0 {
            s.push(format!("{}^{}", NAMES[i], m[i]));
        }
    }
    parse_poly(&s.join("*"), ring).unwrap()
}

/// Brute-force dimension: the largest set of variables supporting no
/// generator.
fn oracle_dim(n: usize, gens: &[Mono]) -> i64 {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return -1;
    }
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let ok = gens
            .iter()
            .all(|g| (0..n).any(|i| g[i] > 0 && mask & (1 << i) == 0));
        if ok {
            best = best.max(mask.count_ones() as i64);
        }
    }
    best
}

fn groebner_oracle() -> Outcome {
    let start = Instant::now();
    let mut ideals = 0;
    let mut mismatches = Vec::new();
    for n in 1..=3 {
        let ring = PolyRing::new(Field::rationals(), &NAMES[..n]).unwrap();
        let monos = monomials(n, 4);
        let probes = monomials(n, 5);
        let divisors: Vec<Mono> = {
            let mut d: Vec<Mono> = (0..n)
                .map(|i| {
                    let mut m = [0; 3];
                    m[i] = 1;
                    m
                })
                .collect();
            if n >= 2 {
                d.push([1, 1, 0]);
            }
            if n == 3 {
                d.push([0, 1, 2]);
            }
            d
        };
        let probe_polys: Vec<MultiPoly> = probes.iter().map(|m| mono_poly(&ring, m)).collect();
        let div_polys: Vec<MultiPoly> = divisors.iter().map(|m| mono_poly(&ring, m)).collect();
        let k = monos.len();
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for a in 0..k {
            sets.push(vec![a]);
            for b in a + 1..k {
                sets.push(vec![a, b]);
                for c in b + 1..k {
                    sets.push(vec![a, b, c]);
                }
            }
        }
        for set in sets {
            ideals += 1;
            let gens: Vec<Mono> = set.iter().map(|&i| monos[i]).collect();
            let ideal = Ideal::new(&ring, gens.iter().map(|m| mono_poly(&ring, m))).unwrap();
            let tag = format!("n={n} {gens:?}");
            // membership, including a binomial and its monomial parts
            for (m, p) in probes.iter().zip(&probe_polys) {
                if ideal.contains(p).unwrap() != in_monomial_ideal(&gens, m) {
                    mismatches.push(format!("{tag}: membership of {m:?}"));
                }
            }
            let (a, b) = (&probes[probes.len() / 3], &probes[probes.len() - 1]);
            let sum = &probe_polys[probes.len() / 3] + &probe_polys[probes.len() - 1];
            let expect = in_monomial_ideal(&gens, a) && in_monomial_ideal(&gens, b);
            if ideal.contains(&sum).unwrap() != expect {
                mismatches.push(format!("{tag}: membership of a binomial"));
            }
            let d = ideal.krull_dim().unwrap();
            if d != oracle_dim(n, &gens) {
                mismatches.push(format!("{tag}: dim {d} vs {}", oracle_dim(n, &gens)));
            }
            for (f, fp) in divisors.iter().zip(&div_polys) {
                let colon = ideal.colon(fp).unwrap();
                let sat = ideal.saturation(fp).unwrap();
                for (m, p) in probes.iter().zip(&probe_polys) {
                    let in_colon = in_monomial_ideal(&gens, &mul(m, f));
                    if colon.contains(p).unwrap() != in_colon {
                        mismatches.push(format!("{tag}: colon by {f:?} at {m:?}"));
                    }
                    let mut fk = *m;
                    let mut in_sat = false;
                    for _ in 0..=5 {
                        if in_monomial_ideal(&gens, &fk) {
                            in_sat = true;
                            break;
                        }
                        fk = mul(&fk, f);
                    }
                    if sat.contains(p).unwrap() != in_sat {
                        mismatches.push(format!("{tag}: saturation by {f:?} at {m:?}"));
                    }
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if !mismatches.is_empty() {
        let shown: Vec<&String> = mismatches.iter().take(5).collect();
        return Err(format!("{} mismatches, e.g. {shown:?}", mismatches.len()));
    }
    ensure(secs < 30.0, format!("took {secs:.1}s"))?;
    Ok(format!(
        "{ideals} monomial ideals, 0 mismatches in {secs:.1}s"
    ))
}

// ---- 6 ----

fn random_poly(rng: &mut ChaCha8Rng, ring: &PolyRing) -> MultiPoly {
    loop {
        let terms: Vec<String> = (0..rng.gen_range(1..=3))
            .map(|_| {
                format!(
                    "{}*s^{}*t^{}",
                    rng.gen_range(-4i64..=4),
                    rng.gen_range(0..4),
                    rng.gen_range(0..4)
                )
            })
            .collect();
        let f = parse_poly(&terms.join(" + "), ring).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

fn as_element(f: &MultiPoly, k: &Field) -> FieldElement {
    f.rename_into(&PolyRing::new(k.clone(), Vec::<String>::new()).unwrap())
        .unwrap()
        .constant_value()
        .unwrap()
}

/// `v` of `s^a t^b` computed by hand.
fn oracle_monomial(model: usize, a: i64, b: i64) -> GroupElement {
    if model == 0 {
        GroupElement::Lex(vec![a, b])
    } else {
        GroupElement::Sqrt2 { a, b }
    }
}

/// Distinct monomials have distinct values, so `v` is the least monomial value.
fn oracle_poly(model: usize, f: &MultiPoly) -> GroupElement {
    f.terms()
        .iter()
        .map(|t| {
            let e = t.mono.exps();
            oracle_monomial(model, e[0] as i64, e[1] as i64)
        })
        .min()
        .unwrap()
}

fn valuation_axioms() -> Outcome {
    let models = [
        ValuationRing::zn_lex(Field::rationals(), &["s", "t"]).unwrap(),
        ValuationRing::dense_sqrt2(Field::rationals(), &["s", "t"]).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for (model, v) in models.iter().enumerate() {
        let ring = v.param_ring().clone();
        let k = v.fraction_field().clone();
        for _ in 0..1000 {
            let (n1, d1, n2, d2) = (
                random_poly(&mut rng, &ring),
                random_poly(&mut rng, &ring),
                random_poly(&mut rng, &ring),
                random_poly(&mut rng, &ring),
            );
            let x = as_element(&n1, &k)
                .checked_div(&as_element(&d1, &k))
                .unwrap();
            let y = as_element(&n2, &k)
                .checked_div(&as_element(&d2, &k))
                .unwrap();
            let vx = v.value_of(&x).map_err(err)?;
            let vy = v.value_of(&y).map_err(err)?;
            let vxy = v.value_of(&x.checked_mul(&y).unwrap()).map_err(err)?;
            let vsum = v.value_of(&x.checked_add(&y).unwrap()).map_err(err)?;
            let (Value::Finite(a), Value::Finite(b)) = (&vx, &vy) else {
                return Err("nonzero element of infinite value".into());
            };
            ensure(
                vxy == Value::Finite(a + b),
                format!("v(xy) for {x} and {y}"),
            )?;
            let min = if a <= b { a.clone() } else { b.clone() };
            match &vsum {
                Value::Infinity => {}
                Value::Finite(c) => ensure(*c >= min, format!("ultrametric for {x} and {y}"))?,
            }
            for f in [&n1, &d1, &n2, &d2] {
                ensure(
                    v.value_of_poly(f).map_err(err)? == Value::Finite(oracle_poly(model, f)),
                    format!("v({f})"),
                )?;
            }
            checked += 1;
        }
    }
    let v = &models[0];
    let r = v.param_ring();
    let t = parse_poly("t", r).unwrap();
    let s = parse_poly("s", r).unwrap();
    ensure(
        v.rad_principal_poly(&t).map_err(err)? == v.maximal_prime(),
        "rad(t) != N",
    )?;
    ensure(
        v.rad_principal_poly(&s).map_err(err)? == v.prime("p").map_err(err)?,
        "rad(s) != p",
    )?;
    Ok(format!("{checked} random pairs, rad(t) = N, rad(s) = p"))
}

// ---- 7 ----

fn determinism() -> Outcome {
    let mut names = Vec::new();
    for (name, _) in list_builtins() {
        let sc = builtin(name).unwrap();
        let a = run_scenario(&sc, true).map_err(err)?.to_json();
        let b = run_scenario(&sc, true).map_err(err)?.to_json();
        ensure(a == b, format!("{name} differs between runs"))?;
        names.push(name);
    }
    Ok(format!("{} builtins byte-identical", names.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 elliptic curve over a rank-2 base", elliptic),
        ("2 strange T", strange_t),
        ("3 dense valuation", dense),
        ("4 theorem consistency", consistency),
        ("5 Groebner oracle equivalence", groebner_oracle),
        ("6 valuation axioms", valuation_axioms),
        ("7 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({detail})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
