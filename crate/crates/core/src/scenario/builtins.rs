use super::{Analysis, BaseSpec, ChartSpec, FieldSpec, GroupKind, PointEntry, Scenario};

/// Builtin scenario names with one-line descriptions, in listing order.
pub const BUILTINS: &[(&str, &str)] = &[
    (
        "elliptic-rank2",
        "cubic s*X^3 + t*Z^3 - Z*Y^2 over a rank-2 base, all three affine charts",
    ),
    (
        "elliptic-rank2-x",
        "the chart X = 1 of the cubic: points Q and Q''",
    ),
    (
        "elliptic-rank2-y",
        "the chart Y = 1 of the cubic: a closed point of the generic fibre",
    ),
    (
        "elliptic-rank2-z",
        "the chart Z = 1 of the cubic: the point Q' (alpha = 1)",
    ),
    (
        "strange-T",
        "affine line over a dense rank-1 base: wdim 2 with a one-dimensional cotangent space",
    ),
    (
        "dense-affine-line",
        "affine line over a dense rank-1 base: regular fibre over the maximal ideal",
    ),
];

pub fn list_builtins() -> Vec<(&'static str, &'static str)> {
    BUILTINS.to_vec()
}

fn point(name: &str, prime: &str, gens: &[&str]) -> PointEntry {
    PointEntry {
        name: name.into(),
        base_prime: prime.into(),
        generators: gens.iter().map(|g| g.to_string()).collect(),
    }
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn x_chart() -> ChartSpec {
    ChartSpec {
        name: "X-chart".into(),
        vars: strings(&["Y", "Z"]),
        relations: strings(&["s + t*Z^3 - Z*Y^2"]),
        points: vec![point("Q", "p", &["Y", "Z"]), point("Q''", "N", &["Y", "Z"])],
    }
}

fn z_chart() -> ChartSpec {
    ChartSpec {
        name: "Z-chart".into(),
        vars: strings(&["X", "Y"]),
        relations: strings(&["s*X^3 - Y^2 + t"]),
        points: vec![point("Q'", "N", &["X - 1", "Y"])],
    }
}

fn y_chart() -> ChartSpec {
    ChartSpec {
        name: "Y-chart".into(),
        vars: strings(&["X", "Z"]),
        relations: strings(&["s*X^3 + t*Z^3 - Z"]),
        points: vec![point("generic", "0", &["X", "Z"])],
    }
}

fn rank2(name: &str, description: &str, charts: Vec<ChartSpec>) -> Scenario {
    Scenario {
        name: name.into(),
        description: description.into(),
        field: FieldSpec {
            characteristic: 0,
            transcendentals: Vec::new(),
        },
        base: BaseSpec {
            value_group: GroupKind::ZnLex,
            params: strings(&["s", "t"]),
        },
        algebra: None,
        points: Vec::new(),
        charts,
        analyses: vec![Analysis::All],
    }
}

fn dense(name: &str, description: &str, points: Vec<PointEntry>) -> Scenario {
    Scenario {
        name: name.into(),
        description: description.into(),
        field: FieldSpec {
            characteristic: 0,
            transcendentals: Vec::new(),
        },
        base: BaseSpec {
            value_group: GroupKind::DenseSqrt2,
            params: strings(&["t", "u"]),
        },
        algebra: Some(super::AlgebraSpec {
            vars: strings(&["X"]),
            relations: Vec::new(),
        }),
        points,
        charts: Vec::new(),
        analyses: vec![Analysis::All],
    }
}

pub fn builtin(name: &str) -> Option<Scenario> {
    let description = BUILTINS.iter().find(|(n, _)| *n == name)?.1;
    Some(match name {
        "elliptic-rank2" => rank2(name, description, vec![x_chart(), z_chart(), y_chart()]),
        "elliptic-rank2-x" => rank2(name, description, vec![x_chart()]),
        "elliptic-rank2-y" => rank2(name, description, vec![y_chart()]),
        "elliptic-rank2-z" => rank2(name, description, vec![z_chart()]),
        "strange-T" => dense(name, description, vec![point("q", "N", &["X"])]),
        "dense-affine-line" => dense(
            name,
            description,
            vec![point("q", "N", &["X"]), point("eta_N", "N", &[])],
        ),
        _ => unreachable!("listed builtin"),
    })
}
