//! Named comparison suites: registered (function, transform, oracle, grid)
//! cases that cover every closed form the engine knows.

use qnatural::closed_forms::{OracleId, Tolerance};
use qnatural::transform::Transform;

/// One registered comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub transform: Transform,
    /// Function selector, see [`crate::selector`].
    pub function: String,
    pub oracle: OracleId,
    /// Exponent for oracles that leave it unbound.
    pub alpha: Option<f64>,
    pub grid: Vec<(f64, f64)>,
    pub tol: Tolerance,
}

pub const SUITES: [&str; 22] = [
    "identity",
    "monomial",
    "theorem1",
    "theorem2",
    "theorem3",
    "exponential",
    "trig",
    "corollary4",
    "corollary5",
    "corollary7",
    "corollary8",
    "theorem9",
    "eq39",
    "corollary10",
    "theorem11",
    "corollary12",
    "eq42",
    "eq43",
    "corollary14",
    "type1",
    "type2",
    "all",
];

const ALPHAS: [f64; 3] = [1.0, 2.0, 2.5];

fn square(values: &[f64]) -> Vec<(f64, f64)> {
    values
        .iter()
        .flat_map(|&u| values.iter().map(move |&v| (u, v)))
        .collect()
}

/// Points with `u / v < 1.5`.
fn inner_grid() -> Vec<(f64, f64)> {
    vec![(0.5, 1.0), (1.0, 1.0), (1.0, 2.0), (1.3, 1.0), (0.7, 1.9)]
}

/// Points with `u / v <= 2`, for second-type forms guarded by `|a u| < q v`.
fn type2_grid() -> Vec<(f64, f64)> {
    vec![(1.0, 1.0), (1.3, 0.8), (0.5, 1.5), (2.0, 1.0), (0.8, 1.3)]
}

fn with_alpha(selector: &str, alpha: f64) -> String {
    if alpha == 1.0 {
        selector.to_string()
    } else if selector.contains(':') {
        format!("{selector},alpha={alpha}")
    } else {
        format!("{selector}:alpha={alpha}")
    }
}

fn case(
    transform: Transform,
    function: impl Into<String>,
    oracle: OracleId,
    grid: Vec<(f64, f64)>,
) -> Case {
    Case {
        transform,
        function: function.into(),
        oracle,
        alpha: None,
        grid,
        tol: Tolerance::default(),
    }
}

fn tol(mut c: Case, abs: f64, rel: f64) -> Case {
    c.tol = Tolerance { abs, rel };
    c
}

const SERIES_RULES: [&str; 3] = [
    "series:rule=inverse_factorial,max_index=40",
    "series:rule=geometric,ratio=0.5",
    "series:rule=Eq,a=0.7",
];

/// Second-type transforms grow like `q^(-n^2/2)` in the degree and need
/// `|a u| < q^alpha v` for exponential rules, so these stay small.
const ENTIRE_RULES: [&str; 3] = [
    "series:rule=inverse_factorial,max_index=12",
    "series:rule=Eq,a=0.02",
    "series:rule=explicit,coeffs=1/-0.5/0.25",
];

fn sided(first: bool) -> [Transform; 2] {
    if first {
        [Transform::Sq, Transform::Lq]
    } else {
        [Transform::QS, Transform::QL]
    }
}

/// The cases of suite `name`, or `None` for an unknown name.
pub fn suite(name: &str) -> Option<Vec<Case>> {
    use OracleId as O;
    use Transform::{Nq, QL, QN, QS};
    let unit = square(&[0.5, 1.0, 2.0]);
    let cases = match name {
        "identity" => vec![tol(case(Nq, "monomial:n=0", O::Monomial, unit), 1e-12, 0.0)],
        "monomial" => (0..=8)
            .map(|n| {
                tol(
                    case(Nq, format!("monomial:n={n}"), O::Monomial, unit.clone()),
                    0.0,
                    1e-10,
                )
            })
            .collect(),
        "theorem1" => SERIES_RULES
            .iter()
            .flat_map(|r| {
                ALPHAS.map(|a| tol(case(Nq, with_alpha(r, a), O::Thm1, inner_grid()), 1e-8, 0.0))
            })
            .collect(),
        "theorem2" => {
            let mut out: Vec<Case> = [1.0, 2.0, 2.5, 3.7]
                .iter()
                .map(|a| {
                    case(
                        Nq,
                        format!("monomial:n={}", a - 1.0),
                        O::Thm2i,
                        unit.clone(),
                    )
                })
                .collect();
            for a in ALPHAS {
                out.push(case(
                    Nq,
                    with_alpha("hyper:num=0.3,variant=Phi,k=1,a=0.4", a),
                    O::Thm2ii,
                    inner_grid(),
                ));
            }
            out
        }
        "theorem3" => [
            "hyper:a=0.5",
            "hyper:num=0.3,den=0.5,a=0.4",
            "hyper:num=0.2/q^1.5,den=-0.3,a=0.3",
        ]
        .iter()
        .flat_map(|h| {
            ALPHAS.map(|a| tol(case(Nq, with_alpha(h, a), O::Thm3, inner_grid()), 1e-8, 0.0))
        })
        .collect(),
        "exponential" => vec![
            case(Nq, "eexp:a=0.5", O::Eexp, inner_grid()),
            case(Nq, "eexp:a=-0.3", O::Eexp, inner_grid()),
            case(Nq, "Eexp:a=0.25", O::EexpPhi, inner_grid()),
        ],
        "trig" => ["0.4", "-0.3"]
            .iter()
            .flat_map(|a| {
                [
                    case(Nq, format!("trig:fn=sin,a={a}"), O::SinLower, inner_grid()),
                    case(Nq, format!("trig:fn=cos,a={a}"), O::CosLower, inner_grid()),
                ]
            })
            .collect(),
        "corollary4" => ["sin", "cos"]
            .iter()
            .flat_map(|f| {
                sided(true).map(|t| case(t, format!("trig:fn={f},a=0.4"), O::Cor4, unit.clone()))
            })
            .collect(),
        "corollary5" => [0.0, 1.0]
            .iter()
            .flat_map(|order| {
                ALPHAS.map(|a| {
                    case(
                        Nq,
                        with_alpha(&format!("bessel:kind=1,order={order},a=0.3"), a),
                        O::Cor5,
                        inner_grid(),
                    )
                })
            })
            .collect(),
        "corollary7" => {
            let mut out = Vec::new();
            for order in [0.0, 1.0] {
                for t in sided(true) {
                    for a in ALPHAS {
                        let f = with_alpha(&format!("bessel:kind=1,order={order},a=0.3"), a);
                        out.push(case(t, f, O::Cor7, unit.clone()));
                    }
                }
            }
            out
        }
        "corollary8" => [0.0, 1.0]
            .iter()
            .flat_map(|order| {
                sided(true).map(|t| {
                    case(
                        t,
                        format!("bessel:kind=1,order={order},a=0.3"),
                        O::Cor8,
                        unit.clone(),
                    )
                })
            })
            .collect(),
        "theorem9" => ENTIRE_RULES
            .iter()
            .flat_map(|r| {
                ALPHAS.map(|a| tol(case(QN, with_alpha(r, a), O::Thm9, type2_grid()), 1e-8, 0.0))
            })
            .collect(),
        "eq39" => [1.0, 1.5, 2.0, 2.5]
            .iter()
            .map(|a| {
                case(
                    QN,
                    format!("monomial:n={}", a - 1.0),
                    O::MonomialT2,
                    type2_grid(),
                )
            })
            .collect(),
        "corollary10" => [1.0, 1.5, 2.5]
            .iter()
            .flat_map(|a| {
                sided(false)
                    .map(|t| case(t, format!("monomial:n={}", a - 1.0), O::Cor10, unit.clone()))
            })
            .collect(),
        "theorem11" => ALPHAS
            .iter()
            .map(|&a| {
                case(
                    QN,
                    with_alpha("hyper:num=0.3,variant=Phi,k=1,a=0.02", a),
                    O::Thm11,
                    type2_grid(),
                )
            })
            .collect(),
        "corollary12" => ALPHAS
            .iter()
            .flat_map(|&a| {
                sided(false).map(|t| {
                    case(
                        t,
                        with_alpha("hyper:num=0.3,variant=Phi,k=1,a=0.02", a),
                        O::Cor12,
                        unit.clone(),
                    )
                })
            })
            .collect(),
        "eq42" => vec![case(QN, "Eexp:a=0.1", O::Eq42, type2_grid())],
        "eq43" => [QN, QL, QS]
            .iter()
            .map(|&t| case(t, "Eexp:a=0.1", O::EexpT2, type2_grid()))
            .collect(),
        "corollary14" => ["sin", "cos"]
            .iter()
            .flat_map(|f| {
                [QN, QL, QS].map(|t| {
                    case(
                        t,
                        format!("trig:family=upper,fn={f},a=0.1"),
                        O::Cor14,
                        type2_grid(),
                    )
                })
            })
            .collect(),
        "type1" => group(&[
            "identity",
            "monomial",
            "theorem1",
            "theorem2",
            "theorem3",
            "exponential",
            "trig",
            "corollary4",
            "corollary5",
            "corollary7",
            "corollary8",
        ]),
        "type2" => group(&[
            "theorem9",
            "eq39",
            "corollary10",
            "theorem11",
            "corollary12",
            "eq42",
            "eq43",
            "corollary14",
        ]),
        "all" => group(&["type1", "type2"]),
        _ => return None,
    };
    Some(cases)
}

fn group(names: &[&str]) -> Vec<Case> {
    names
        .iter()
        .flat_map(|n| suite(n).expect("registered suite"))
        .collect()
}
