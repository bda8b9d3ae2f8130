use super::*;
use crate::poly::parse_poly;
use proptest::prelude::*;

fn rank2() -> ValuationRing {
    ValuationRing::zn_lex(Field::rationals(), &["s", "t"]).unwrap()
}

fn dense() -> ValuationRing {
    ValuationRing::dense_sqrt2(Field::rationals(), &["s", "t"]).unwrap()
}

fn elt(v: &ValuationRing, num: &str, den: &str) -> FieldElement {
    let r = v.param_ring();
    let n = parse_poly(num, r)
        .unwrap()
        .rename_into(&PolyRing::new(v.fraction_field().clone(), Vec::<String>::new()).unwrap())
        .unwrap();
    let d = parse_poly(den, r).unwrap().rename_into(n.ring()).unwrap();
    n.constant_value()
        .unwrap()
        .checked_div(&d.constant_value().unwrap())
        .unwrap()
}

fn lex(v: &[i64]) -> Value {
    Value::Finite(GroupElement::Lex(v.to_vec()))
}

#[test]
fn values_in_the_rank_two_model() {
    let v = rank2();
    assert_eq!(v.value_of(&elt(&v, "s", "1")).unwrap(), lex(&[1, 0]));
    assert_eq!(v.value_of(&elt(&v, "1", "1")).unwrap(), lex(&[0, 0]));
    assert_eq!(v.value_of(&elt(&v, "s", "t^3")).unwrap(), lex(&[1, -3]));
    assert_eq!(v.value_of(&elt(&v, "0", "1")).unwrap(), Value::Infinity);
    let r = v.param_ring();
    assert_eq!(
        v.value_of_fraction(&parse_poly("s", r).unwrap(), &MultiPoly::zero(r)),
        Err(ValError::ZeroDenominator)
    );
    assert_eq!(
        v.value_of_fraction(
            &parse_poly("s + t^5", r).unwrap(),
            &parse_poly("t^3", r).unwrap()
        ),
        Ok(lex(&[0, 2]))
    );
}

#[test]
fn membership() {
    let v = rank2();
    let x = elt(&v, "s", "t^3");
    assert!(v.is_member(&x).unwrap() && !v.is_unit(&x).unwrap());
    assert!(!v.is_member(&elt(&v, "t", "s")).unwrap());
    let y = elt(&v, "1 + s", "1");
    assert!(v.is_member(&y).unwrap() && v.is_unit(&y).unwrap());
}

#[test]
fn radicals_of_principal_ideals() {
    let v = rank2();
    assert_eq!(v.rad_principal(&elt(&v, "t", "1")).unwrap().name(), "N");
    assert_eq!(v.rad_principal(&elt(&v, "s", "1")).unwrap().name(), "p");
    assert_eq!(v.rad_principal(&elt(&v, "s", "t^7")).unwrap().name(), "p");
    assert_eq!(
        v.rad_principal(&elt(&v, "1 + s", "1")),
        Err(ValError::UnitInput)
    );
    assert_eq!(
        v.rad_principal(&elt(&v, "0", "1")),
        Err(ValError::ZeroInput)
    );
    let d = dense();
    assert_eq!(d.rad_principal(&elt(&d, "s", "1")).unwrap().name(), "N");
    assert_eq!(d.rad_principal(&elt(&d, "t^3", "s^4")).unwrap().name(), "N");
}

#[test]
fn spectra() {
    let v = rank2();
    let names: Vec<String> = v.primes().iter().map(|p| p.name().to_string()).collect();
    assert_eq!(names, ["0", "p", "N"]);
    let r3 = ValuationRing::zn_lex(Field::rationals(), &["a", "b", "c"]).unwrap();
    let names: Vec<String> = r3.primes().iter().map(|p| p.name().to_string()).collect();
    assert_eq!(names, ["0", "P1", "P2", "N"]);
    let names: Vec<String> = dense()
        .primes()
        .iter()
        .map(|p| p.name().to_string())
        .collect();
    assert_eq!(names, ["0", "N"]);
    assert!(v.prime("q").is_err());
}

#[test]
fn fg_and_limit_primes() {
    let v = rank2();
    for p in v.primes().into_iter().skip(1) {
        assert!(v.is_fg_prime(&p).unwrap());
        assert!(!v.is_limit_prime(&p));
    }
    let d = dense();
    assert!(!d.is_fg_prime(&d.maximal_prime()).unwrap());
    assert!(!d.is_limit_prime(&d.maximal_prime()));
    assert!(d.is_limit_prime(&d.zero_prime()));
    assert_eq!(
        d.is_fg_prime(&d.zero_prime()),
        Err(ValError::ZeroPrimeInput)
    );
    let dvr = ValuationRing::zn_lex(Field::rationals(), &["t"]).unwrap();
    assert!(dvr.is_fg_prime(&dvr.maximal_prime()).unwrap());
}

#[test]
fn chart_data_per_prime() {
    let v = rank2();
    let p = v.prime("p").unwrap();
    let n = v.prime("N").unwrap();
    let z = v.zero_prime();
    assert_eq!(v.trace_params(&p), ["s"]);
    assert_eq!(v.inverted_params(&p), ["t"]);
    assert_eq!(v.principal_generator(&p), Some("s"));
    assert!(v.deep_params(&p).is_empty());
    assert_eq!(v.trace_params(&n), ["s", "t"]);
    assert_eq!(v.principal_generator(&n), Some("t"));
    assert_eq!(v.deep_params(&n), ["s"]);
    assert_eq!(v.inverted_params(&z), ["s", "t"]);
    let d = dense();
    let dn = d.maximal_prime();
    assert_eq!(d.principal_generator(&dn), None);
    assert_eq!(d.deep_params(&dn), ["s", "t"]);
}

#[test]
fn residue_fields_and_maps() {
    let v = rank2();
    let p = v.prime("p").unwrap();
    let kp = v.residue_field(&p);
    assert_eq!(kp.to_string(), "QQ(t)");
    assert!(v.residue_map(&elt(&v, "s", "s"), &p).unwrap().is_one());
    assert_eq!(
        v.residue_map(&elt(&v, "t", "1"), &p).unwrap(),
        kp.transcendental("t").unwrap()
    );
    assert_eq!(
        v.residue_map(&elt(&v, "s*t + s^2", "s*(1 + t)"), &p)
            .unwrap(),
        kp.transcendental("t")
            .unwrap()
            .checked_div(&(&kp.transcendental("t").unwrap() + &kp.one()))
            .unwrap()
    );
    assert_eq!(
        v.residue_map(&elt(&v, "t", "s"), &p),
        Err(ValError::NegativeValue)
    );
    // s/t^3 has positive p-value, so it dies in kp
    assert!(v.residue_map(&elt(&v, "s", "t^3"), &p).unwrap().is_zero());

    let n = v.maximal_prime();
    assert_eq!(v.residue_field(&n).to_string(), "QQ");
    assert!(v
        .residue_map(&elt(&v, "1 + s + t", "1"), &n)
        .unwrap()
        .is_one());

    let z = v.zero_prime();
    let x = elt(&v, "s + t^2", "t");
    assert_eq!(v.residue_map(&x, &z).unwrap(), x);

    let d = dense();
    let dn = d.maximal_prime();
    assert_eq!(
        d.residue_map(&elt(&d, "2*s + t", "3*s + t^2"), &dn)
            .unwrap(),
        Field::rationals().ratio(2, 3).unwrap()
    );
}

#[test]
fn fibre_map_of_the_x_chart_relation() {
    let v = rank2();
    let chart = PolyRing::new(Field::rationals(), ["s", "t", "Y", "Z"]).unwrap();
    let g = parse_poly("s + t*Z^3 - Z*Y^2", &chart).unwrap();
    let p = v.prime("p").unwrap();
    let fp = PolyRing::new(v.residue_field(&p), ["Y", "Z"]).unwrap();
    assert_eq!(
        v.fibre_map(&g, &p, &fp).unwrap(),
        parse_poly("t*Z^3 - Z*Y^2", &fp).unwrap()
    );
    let n = v.maximal_prime();
    let fnr = PolyRing::new(v.residue_field(&n), ["Y", "Z"]).unwrap();
    assert_eq!(
        v.fibre_map(&g, &n, &fnr).unwrap(),
        parse_poly("-Z*Y^2", &fnr).unwrap()
    );
    let z = v.zero_prime();
    let f0 = PolyRing::new(v.residue_field(&z), ["Y", "Z"]).unwrap();
    assert_eq!(
        v.fibre_map(&g, &z, &f0).unwrap(),
        parse_poly("s + t*Z^3 - Z*Y^2", &f0).unwrap()
    );
}

#[test]
fn global_dimension_bounds() {
    assert_eq!(dense().gldim_bound(2), 3);
    assert_eq!(rank2().gldim_bound(2), 3);
    let dvr = ValuationRing::zn_lex(Field::rationals(), &["t"]).unwrap();
    assert_eq!(dvr.gldim_bound(1), 1);
}

#[test]
fn maximal_ideal_is_principal_in_the_lex_model() {
    // t has the least positive value, so every x with v(x) > 0 is t times a member
    let v = rank2();
    let t = elt(&v, "t", "1");
    for (n, d) in [
        ("s", "1"),
        ("s", "t^9"),
        ("t^2 + s", "1 + s"),
        ("s^2", "t^4"),
    ] {
        let x = elt(&v, n, d);
        assert!(v.is_member(&x.checked_div(&t).unwrap()).unwrap());
    }
}

#[test]
fn dense_maximal_ideal_is_idempotent() {
    // monomials of positive value split into two factors of positive value
    let d = dense();
    for (a, b) in [(1i64, 0i64), (0, 1), (-1, 1), (3, -2), (-4, 3)] {
        let x = GroupElement::Sqrt2 { a, b };
        assert_eq!(x.sign(), Ordering::Greater);
        let y = (0..20)
            .flat_map(|i| (-20..20).map(move |j| GroupElement::Sqrt2 { a: j, b: i - 10 }))
            .find(|y| y.sign() == Ordering::Greater && (&x - y).sign() == Ordering::Greater);
        assert!(y.is_some(), "no splitting for {x}");
    }
    assert!(!d.is_fg_prime(&d.maximal_prime()).unwrap());
}

fn arb_fraction(v: ValuationRing) -> impl Strategy<Value = FieldElement> {
    let term = (0u32..4, 0u32..4, -3i64..4);
    (
        proptest::collection::vec(term.clone(), 1..4),
        proptest::collection::vec(term, 1..3),
    )
        .prop_filter_map("zero denominator", move |(n, d)| {
            let r = v.param_ring();
            let mk = |ts: &Vec<(u32, u32, i64)>| {
                MultiPoly::from_terms(
                    r,
                    ts.iter().map(|&(a, b, c)| {
                        (
                            crate::poly::Monomial::new(vec![a, b]),
                            r.field().from_int(c),
                        )
                    }),
                )
            };
            let (n, d) = (mk(&n), mk(&d));
            if d.is_zero() {
                return None;
            }
            let k = v.fraction_field();
            let to = |f: &MultiPoly| {
                f.rename_into(&PolyRing::new(k.clone(), Vec::<String>::new()).unwrap())
                    .unwrap()
                    .constant_value()
                    .unwrap()
            };
            Some(to(&n).checked_div(&to(&d)).unwrap())
        })
}

proptest! {
    #[test]
    fn valuation_axioms_lex(x in arb_fraction(rank2()), y in arb_fraction(rank2())) {
        let v = rank2();
        let (vx, vy) = (v.value_of(&x).unwrap(), v.value_of(&y).unwrap());
        prop_assert_eq!(v.value_of(&(&x * &y)).unwrap(), &vx + &vy);
        let vs = v.value_of(&(&x + &y)).unwrap();
        prop_assert!(vs >= vx.clone().min(vy.clone()));
        if vx != vy {
            prop_assert_eq!(vs, vx.min(vy));
        }
    }

    #[test]
    fn valuation_axioms_dense(x in arb_fraction(dense()), y in arb_fraction(dense())) {
        let v = dense();
        let (vx, vy) = (v.value_of(&x).unwrap(), v.value_of(&y).unwrap());
        prop_assert_eq!(v.value_of(&(&x * &y)).unwrap(), &vx + &vy);
        let vs = v.value_of(&(&x + &y)).unwrap();
        prop_assert!(vs >= vx.clone().min(vy.clone()));
        if vx != vy {
            prop_assert_eq!(vs, vx.min(vy));
        }
    }

    #[test]
    fn rad_principal_is_monotone(x in arb_fraction(rank2()), y in arb_fraction(rank2())) {
        let v = rank2();
        let (vx, vy) = (v.value_of(&x).unwrap(), v.value_of(&y).unwrap());
        if let (Ok(px), Ok(py)) = (v.rad_principal_value(&vx), v.rad_principal_value(&vy)) {
            if vx <= vy {
                prop_assert!(px.index() >= py.index());
            }
            // x lies in its radical prime and in no smaller one
            let g = vx.finite().unwrap();
            for p in v.primes() {
                let inside = v.coarsen(g, &p).sign() == Ordering::Greater;
                prop_assert_eq!(inside, p.index() >= px.index());
            }
        }
    }
}
