use super::*;
use crate::poly::parse_poly;

fn rank2() -> ValuationRing {
    ValuationRing::zn_lex(Field::rationals(), &["s", "t"]).unwrap()
}

fn x_chart() -> PresentedAlgebra {
    PresentedAlgebra::new(rank2(), &["Y", "Z"], &["s + t*Z^3 - Z*Y^2"]).unwrap()
}

fn z_chart() -> PresentedAlgebra {
    PresentedAlgebra::new(rank2(), &["X", "Y"], &["s*X^3 - Y^2 + t"]).unwrap()
}

fn y_chart() -> PresentedAlgebra {
    PresentedAlgebra::new(rank2(), &["X", "Z"], &["s*X^3 + t*Z^3 - Z"]).unwrap()
}

fn dense_line() -> PresentedAlgebra {
    let v = ValuationRing::dense_sqrt2(Field::rationals(), &["t", "u"]).unwrap();
    PresentedAlgebra::new(v, &["X"], &[] as &[&str]).unwrap()
}

fn same(i: &Ideal, gens: &[&str]) -> bool {
    i.equals(&Ideal::parse(i.ring(), gens).unwrap()).unwrap()
}

#[test]
fn fibres_of_the_x_chart() {
    let a = x_chart();
    let v = a.base().clone();
    let n = a.fibre_ideal(&v.maximal_prime()).unwrap();
    assert_eq!(n.ring().field().to_string(), "QQ");
    assert_eq!(n.generators()[0].to_string(), "-Y^2*Z");
    assert!(same(&n, &["Z*Y^2"]));
    let p = a.fibre_ideal(&v.prime("p").unwrap()).unwrap();
    assert_eq!(p.ring().field().to_string(), "QQ(t)");
    assert!(same(&p, &["t*Z^3 - Z*Y^2"]));
    let z = a.fibre_ideal(&v.zero_prime()).unwrap();
    assert_eq!(z.ring().field().to_string(), "QQ(s,t)");
    assert_eq!(
        z.generators()[0],
        parse_poly("s + t*Z^3 - Z*Y^2", z.ring()).unwrap()
    );
    for p in v.primes() {
        assert_eq!(a.fibre_dim(&p).unwrap(), 1);
    }
    assert!(a.fibre_dims_constant().unwrap());
}

#[test]
fn fibre_dimensions_of_simple_algebras() {
    let line = PresentedAlgebra::new(rank2(), &["X"], &[] as &[&str]).unwrap();
    let torus = PresentedAlgebra::new(rank2(), &["X", "Y"], &["X*Y - 1"]).unwrap();
    for p in rank2().primes() {
        assert_eq!(line.fibre_dim(&p).unwrap(), 1);
        assert_eq!(torus.fibre_dim(&p).unwrap(), 1);
    }
    // unit content but empty closed fibre
    let a = PresentedAlgebra::new(rank2(), &["X"], &["t*X - 1"]).unwrap();
    assert_eq!(a.fibre_dim(&rank2().zero_prime()).unwrap(), 0);
    assert!(matches!(
        a.fibre_dim(&rank2().maximal_prime()),
        Err(AlgebraError::EmptyFibre { .. })
    ));
    let dims = a.fibre_dims().unwrap();
    assert_eq!(dims[2].1, None);
}

#[test]
fn torsion_is_rejected() {
    assert_eq!(
        PresentedAlgebra::new(rank2(), &["X"], &["s*X"]).unwrap_err(),
        AlgebraError::NotFlat { param: "s".into() }
    );
    // s - t is t times a unit of R: invisible to the chart saturation test,
    // but the fibre dimensions jump
    let a = PresentedAlgebra::new(rank2(), &["X"], &["(s - t)*X"]).unwrap();
    assert!(!a.fibre_dims_constant().unwrap());
}

#[test]
fn local_fibre_dimensions() {
    let a = x_chart();
    let q = a.point("Q", "p", &["Y", "Z"]).unwrap();
    assert_eq!(fibre_local_dim(&q).unwrap(), 1);
    let q2 = a.point("Q''", "N", &["Y", "Z"]).unwrap();
    assert_eq!(fibre_local_dim(&q2).unwrap(), 1);
    let eta = a.point("eta", "0", &[] as &[&str]).unwrap();
    assert_eq!(fibre_local_dim(&eta).unwrap(), 0);
    let off = a.point("off", "0", &["Y - 1", "Z - 1"]).unwrap();
    assert_eq!(
        fibre_local_dim(&off).unwrap_err(),
        AlgebraError::PointNotOnFibre {
            point: "off".into()
        }
    );
}

#[test]
fn charts() {
    let a = x_chart();
    let q = a.point("Q", "p", &["Y", "Z"]).unwrap();
    let c = build_chart(&q).unwrap();
    assert_eq!(c.inverted_params(), ["t"]);
    assert!(same(c.ideal(), &["s + t*Z^3 - Z*Y^2", "Y", "Z", "s"]));
    let q2 = a.point("Q''", "N", &["Y", "Z"]).unwrap();
    let c2 = build_chart(&q2).unwrap();
    assert!(c2.inverted_params().is_empty());
    assert!(same(c2.ideal(), &["s + t*Z^3 - Z*Y^2", "Y", "Z", "s", "t"]));
    let g = y_chart().point("g", "0", &["X", "Z"]).unwrap();
    assert_eq!(build_chart(&g).unwrap().inverted_params(), ["s", "t"]);

    // over 0 both parameters are inverted, and s lies in the ideal
    let wrong = a.point("w", "0", &["Y", "Z"]).unwrap();
    assert!(matches!(
        build_chart(&wrong),
        Err(AlgebraError::ImproperPoint { .. })
    ));
    // t - 1 has value 0, so the point cannot lie over p
    let wrong = a.point("w", "p", &["Y", "Z", "t - 1"]).unwrap();
    assert!(matches!(
        build_chart(&wrong),
        Err(AlgebraError::InconsistentBasePrime { .. })
    ));
    let unit = a.point("u", "N", &["1"]).unwrap();
    assert!(matches!(
        build_chart(&unit),
        Err(AlgebraError::ImproperPoint { .. })
    ));
}

#[test]
fn cotangent_dimensions() {
    let a = x_chart();
    let q = a.point("Q", "p", &["Y", "Z"]).unwrap();
    assert_eq!(cotangent_dim(&q).unwrap(), 2);
    let c = build_chart(&q).unwrap();
    let t = local_cotangent(&q, &c).unwrap();
    let names: Vec<String> = t.basis.iter().map(|b| b.to_string()).collect();
    assert_eq!(names, ["Y", "Z"]);

    let q2 = a.point("Q''", "N", &["Y", "Z"]).unwrap();
    assert_eq!(cotangent_dim(&q2).unwrap(), 3);
    let t2 = local_cotangent(&q2, &build_chart(&q2).unwrap()).unwrap();
    let names: Vec<String> = t2.basis.iter().map(|b| b.to_string()).collect();
    assert_eq!(names, ["Y", "Z", "t"]);

    let q1 = z_chart().point("Q'", "N", &["X - 1", "Y"]).unwrap();
    assert_eq!(cotangent_dim(&q1).unwrap(), 2);

    let g = y_chart().point("g", "0", &["X", "Z"]).unwrap();
    assert_eq!(cotangent_dim(&g).unwrap(), 1);

    let st = dense_line().point("q", "N", &["X"]).unwrap();
    assert_eq!(cotangent_dim(&st).unwrap(), 1);
    let eta = dense_line().point("eta", "N", &[] as &[&str]).unwrap();
    assert_eq!(cotangent_dim(&eta).unwrap(), 0);
}

#[test]
fn fibre_cotangent_spaces() {
    let a = x_chart();
    // Q is the singular point of the fibre over p
    let q = a.point("Q", "p", &["Y", "Z"]).unwrap();
    assert_eq!(fibre_cotangent(&q).unwrap().dim, 2);
    // points of the double line Y^2 = 0 have a two-dimensional T̄
    let b = z_chart().point("Q'", "N", &["X - 1", "Y"]).unwrap();
    assert_eq!(fibre_cotangent(&b).unwrap().dim, 2);
    // the generic point of the component Z = 0 of the fibre over p
    let eta = a.point("eta_p", "p", &["Z"]).unwrap();
    let t = fibre_cotangent(&eta).unwrap();
    assert_eq!(t.dim, 0);
    assert_eq!(t.transcendental_vars.len(), 1);
}

#[test]
fn non_rational_centers_are_refused() {
    let a = PresentedAlgebra::new(rank2(), &["X"], &[] as &[&str]).unwrap();
    let q = a.point("q", "N", &["X^2 + 1"]).unwrap();
    assert!(matches!(
        fibre_cotangent(&q),
        Err(AlgebraError::UnsupportedResidueField { .. })
    ));
}

#[test]
fn rational_point_with_transcendental_coordinate() {
    // X = 1/t on the generic fibre: the lift clears the denominator
    let a = PresentedAlgebra::new(rank2(), &["X"], &[] as &[&str]).unwrap();
    let q = a.point("q", "0", &["t*X - 1"]).unwrap();
    let c = build_chart(&q).unwrap();
    let t = local_cotangent(&q, &c).unwrap();
    assert_eq!(t.dim, 1);
    assert_eq!(t.basis[0].to_string(), "t*X - 1");
}
