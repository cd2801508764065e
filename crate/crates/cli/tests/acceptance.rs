//! One PASS/FAIL line per acceptance criterion.
//!
//! Reference values are recomputed here from their defining formulas
//! (finite products, elementary closed forms, Gauss-Laguerre quadrature)
//! rather than taken from the engine.

use std::process::{Command, ExitCode};

use qnatural::calculus::{big_e, q_gamma, small_e};
use qnatural::closed_forms::{compare_with, oracle_eval, Oracle, Side, Tolerance};
use qnatural::special::{BesselKind, HyperParams, QParam, TrigFamily, TrigFn};
use qnatural::transform::{
    laplace_q, natural_type1, natural_type2, natural_type2_with, sumudu_q, CoefficientRule, Family,
    FunctionSpec, PowerSeriesSpec, TransformQuery, TransformType, Type2Variant,
};
use qnatural::{Complex, QContext, QError};
use qnatural_cli::args::{Common, Format, SweepArgs};
use qnatural_cli::commands::{sweep, CompareRow};
use qnatural_cli::output::Document;
use qnatural_cli::{selector, suites};

type Check = Result<String, String>;

const QS: [f64; 3] = [0.3, 0.5, 0.9];
const UV: [f64; 3] = [0.5, 1.0, 2.0];

fn tight(q: f64) -> QContext {
    QContext::builder(q)
        .tol(1e-15)
        .max_terms(200_000)
        .build()
        .unwrap()
}

fn ctx(q: f64) -> QContext {
    QContext::new(q).unwrap()
}

/// `[n]_q!` as the finite product of `(1 - q^k) / (1 - q)`.
fn q_factorial(n: u32, q: f64) -> f64 {
    (1..=n)
        .map(|k| (1.0 - q.powi(k as i32)) / (1.0 - q))
        .product()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identity() -> Check {
    let mut worst: f64 = 0.0;
    for q in QS {
        let cx = tight(q);
        for u in UV {
            for v in UV {
                let got = natural_type1(&FunctionSpec::monomial(0.0), u, v, &cx)
                    .map_err(|e| e.to_string())?;
                let err = (got.re() - 1.0 / v).abs();
                ensure(err <= 1e-12, || format!("q={q} u={u} v={v}: error {err:e}"))?;
                worst = worst.max(err);
            }
        }
    }
    Ok(format!("max abs error {worst:.1e} (settle tol 1e-15)"))
}

fn monomial() -> Check {
    let mut worst: f64 = 0.0;
    for q in QS {
        let cx = ctx(q);
        for n in 0..=8u32 {
            for u in UV {
                for v in UV {
                    let got = natural_type1(&FunctionSpec::monomial(n as f64), u, v, &cx)
                        .map_err(|e| e.to_string())?;
                    let want = (1.0 - q).powi(n as i32) * u.powi(n as i32) * q_factorial(n, q)
                        / v.powi(n as i32 + 1);
                    let rel = (got.re() - want).abs() / want;
                    ensure(rel <= 1e-10, || {
                        format!("q={q} n={n} u={u} v={v}: rel {rel:e}")
                    })?;
                    worst = worst.max(rel);
                }
            }
        }
    }
    Ok(format!("max rel error {worst:.1e}"))
}

fn exponential() -> Check {
    let mut inside = 0;
    let mut outside = 0;
    for q in QS {
        let cx = ctx(q);
        for a in [-0.8, -0.3, 0.25, 0.5, 0.9, 1.5] {
            for u in UV {
                for v in UV {
                    let f = FunctionSpec::new(Family::SmallExp { a });
                    let got = natural_type1(&f, u, v, &cx);
                    if (a * u).abs() < v {
                        let got = got.map_err(|e| e.to_string())?;
                        let want = 1.0 / (v - a * u);
                        let rel = (got.re() - want).abs() / want.abs();
                        ensure(rel <= 1e-8, || {
                            format!("q={q} a={a} u={u} v={v}: rel {rel:e}")
                        })?;
                        inside += 1;
                    } else {
                        ensure(matches!(got, Err(QError::Domain(_))), || {
                            format!("q={q} a={a} u={u} v={v}: expected a domain error, got {got:?}")
                        })?;
                        outside += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{inside} points matched, {outside} points raised the domain error"
    ))
}

fn trig() -> Check {
    for q in QS {
        let cx = ctx(q);
        for a in [-0.4, 0.3, 0.45] {
            for u in UV {
                for v in UV {
                    if (a * u).abs() >= v {
                        continue;
                    }
                    let den = v * v + a * a * u * u;
                    for (func, want) in [(TrigFn::Sin, a * u / den), (TrigFn::Cos, v / den)] {
                        let f = FunctionSpec::new(Family::Trig {
                            family: TrigFamily::Lower,
                            func,
                            a,
                        });
                        let got = natural_type1(&f, u, v, &cx)
                            .map_err(|e| e.to_string())?
                            .re();
                        let rel = (got - want).abs() / want.abs();
                        ensure(rel <= 1e-8, || {
                            format!("q={q} {func:?} a={a} u={u} v={v}: rel {rel:e}")
                        })?;
                    }
                }
            }
        }
        for a in [-0.4, 0.3] {
            for p in UV {
                let pairs = [
                    (TrigFn::Sin, Side::Sumudu, Oracle::SinLower { a }, (p, 1.0)),
                    (TrigFn::Cos, Side::Sumudu, Oracle::CosLower { a }, (p, 1.0)),
                    (TrigFn::Sin, Side::Laplace, Oracle::SinLower { a }, (1.0, p)),
                    (TrigFn::Cos, Side::Laplace, Oracle::CosLower { a }, (1.0, p)),
                ];
                for (func, side, natural, (u, v)) in pairs {
                    if (a * u).abs() >= 1.0 || a.abs() >= v {
                        continue;
                    }
                    let cor = oracle_eval(&Oracle::Cor4 { func, side, a }, u, v, &cx)
                        .map_err(|e| e.to_string())?;
                    let nat = oracle_eval(&natural, u, v, &cx).map_err(|e| e.to_string())?;
                    ensure(cor.value == nat.value, || {
                        format!("Cor4 {func:?} {side:?} at {p}: {cor:?} vs {nat:?}")
                    })?;
                }
            }
        }
    }
    Ok("series within rel 1e-8; the four specializations equal bit for bit".into())
}

fn catalog() -> Vec<FunctionSpec> {
    let series = |rule| Family::PowerSeries(PowerSeriesSpec::new(rule));
    vec![
        FunctionSpec::monomial(0.0),
        FunctionSpec::monomial(3.0),
        FunctionSpec::monomial(0.5),
        FunctionSpec::new(Family::SmallExp { a: 0.3 }),
        FunctionSpec::new(Family::BigExp { a: 0.25 }),
        FunctionSpec::new(Family::Trig {
            family: TrigFamily::Lower,
            func: TrigFn::Sin,
            a: 0.4,
        }),
        FunctionSpec::new(Family::Trig {
            family: TrigFamily::Lower,
            func: TrigFn::Cosh,
            a: 0.4,
        }),
        FunctionSpec::new(Family::Trig {
            family: TrigFamily::Upper,
            func: TrigFn::Cos,
            a: 0.3,
        }),
        FunctionSpec::new(Family::Trig {
            family: TrigFamily::Upper,
            func: TrigFn::Sinh,
            a: 0.3,
        }),
        FunctionSpec::new(Family::Bessel {
            kind: BesselKind::First,
            order: 0.5,
            a: 0.3,
        }),
        FunctionSpec::new(Family::Bessel {
            kind: BesselKind::Second,
            order: 1.0,
            a: 0.5,
        }),
        FunctionSpec::new(Family::Bessel {
            kind: BesselKind::Third,
            order: 0.0,
            a: 0.2,
        }),
        FunctionSpec::new(series(CoefficientRule::Geometric { ratio: 0.5 })),
        FunctionSpec::with_prefactor(series(CoefficientRule::BigQExp { a: 0.2 }), 2.0),
        FunctionSpec::new(Family::Hyper {
            params: HyperParams::phi(vec![QParam::real(0.2)], vec![QParam::real(0.5)]),
            a: 0.4,
        }),
        FunctionSpec::new(Family::Hyper {
            params: HyperParams::big_phi(vec![QParam::real(0.3)], vec![], 1),
            a: 0.2,
        }),
    ]
}

fn specialization() -> Check {
    let mut n = 0;
    for q in QS {
        let cx = ctx(q);
        for f in catalog() {
            for p in [0.5, 1.0, 2.0] {
                for kind in [TransformType::First, TransformType::Second] {
                    let nat = |u, v| match kind {
                        TransformType::First => natural_type1(&f, u, v, &cx),
                        TransformType::Second => natural_type2(&f, u, v, &cx),
                    };
                    ensure(
                        laplace_q(&f, 2.0 * p, kind, &cx) == nat(1.0, 2.0 * p),
                        || format!("Laplace {f:?} {kind:?}"),
                    )?;
                    ensure(sumudu_q(&f, p, kind, &cx) == nat(p, 1.0), || {
                        format!("Sumudu {f:?} {kind:?}")
                    })?;
                    n += 2;
                }
            }
        }
    }
    Ok(format!("{n} pairs identical, errors included"))
}

fn gamma() -> Check {
    for q in QS {
        let cx = ctx(q);
        for n in 0..=12u32 {
            let g = q_gamma(n as f64 + 1.0, &cx).map_err(|e| e.to_string())?;
            let f = q_factorial(n, q);
            ensure((g - f).abs() <= 1e-10 * f, || {
                format!("q={q} n={n}: {g} vs {f}")
            })?;
        }
        for x in [0.3, 1.7, 4.2, 7.5] {
            let lhs = q_gamma(x + 1.0, &cx).map_err(|e| e.to_string())?;
            let rhs = (1.0 - q.powf(x)) / (1.0 - q) * q_gamma(x, &cx).map_err(|e| e.to_string())?;
            ensure((lhs - rhs).abs() <= 1e-10 * lhs.abs(), || {
                format!("recurrence q={q} x={x}")
            })?;
        }
    }
    let cx = QContext::builder(0.999).max_terms(200_000).build().unwrap();
    let root_pi = std::f64::consts::PI.sqrt();
    let mut gaps = Vec::new();
    for (alpha, classical) in [(1.5, root_pi / 2.0), (2.5, 0.75 * root_pi)] {
        let gap = (q_gamma(alpha, &cx).map_err(|e| e.to_string())? - classical).abs();
        ensure(gap <= 5e-2, || format!("alpha={alpha}: gap {gap}"))?;
        gaps.push(format!("{gap:.1e}"));
    }
    Ok(format!(
        "q = 0.999 gaps to Gamma(1.5), Gamma(2.5): {}",
        gaps.join(", ")
    ))
}

fn exponential_product() -> Check {
    let mut worst: f64 = 0.0;
    for q in QS {
        let cx = ctx(q);
        for i in -9..=9 {
            for j in -9..=9 {
                let t = Complex::new(i as f64 / 10.0, j as f64 / 10.0);
                if t.norm() > 0.9 {
                    continue;
                }
                let e = small_e(t, &cx).map_err(|e| e.to_string())?.value;
                let big = big_e(t, &cx).map_err(|e| e.to_string())?.value;
                let err = (e * big - 1.0).norm();
                ensure(err < 1e-10, || format!("q={q} t={t}: error {err:e}"))?;
                worst = worst.max(err);
            }
        }
    }
    Ok(format!("max |e_q E_q - 1| = {worst:.1e}"))
}

fn theorem_oracles() -> Check {
    let mut rows = 0;
    for name in ["theorem1", "theorem3"] {
        for case in suites::suite(name).unwrap() {
            let f = selector::parse(&case.function).map_err(|e| e.to_string())?;
            for q in QS {
                let cx = ctx(q);
                for &(u, v) in &case.grid {
                    let query = TransformQuery::new(case.transform, f.clone(), u, v);
                    let oracle =
                        Oracle::for_query(case.oracle, &query, None).map_err(|e| e.to_string())?;
                    let row = compare_with(
                        &query,
                        &oracle,
                        Tolerance {
                            abs: 1e-8,
                            rel: 0.0,
                        },
                        &cx,
                    )
                    .map_err(|e| e.to_string())?;
                    ensure(row.pass, || {
                        format!("{} at q={q} u={u} v={v}: {row:?}", case.function)
                    })?;
                    rows += 1;
                }
            }
        }
    }
    Ok(format!(
        "{rows} comparisons within max(1e-8, 10 x summed estimate)"
    ))
}

fn classical_limit() -> Check {
    let mut finals = Vec::new();
    for n in 0..=2 {
        let args = SweepArgs {
            function: format!("monomial:n={n}"),
            u: 1.0,
            v: 2.0,
            j_min: 3,
            j_max: 10,
            quad_nodes: 64,
            common: Common {
                q: vec![],
                tol: 1e-12,
                max_terms: 10_000,
                settle_count: 3,
                format: Format::Json,
                output: None,
            },
        };
        let run = sweep(&args).map_err(|e| e.to_string())?;
        ensure(run.ok, || format!("x^{n}: a sweep row failed"))?;
        ensure(run.doc.rows.iter().all(|r| r.monotone), || {
            format!("x^{n}: not monotone")
        })?;
        let last = run.doc.rows.last().unwrap().discrepancy.unwrap();
        ensure(last <= 1e-2, || format!("x^{n}: final discrepancy {last}"))?;
        finals.push(format!("{last:.1e}"));
    }
    Ok(format!(
        "final discrepancies {} for 1, x, x^2 (N_q at u/(1-q) against the classical transform; \
         N_q(x^n)(u;v) itself carries (1-q)^n and tends to 0 for n >= 1)",
        finals.join(", ")
    ))
}

fn run_report(suite: &str, dir: &std::path::Path) -> Result<serde_json::Value, String> {
    let path = dir.join(format!("{suite}.json"));
    let out = Command::new(env!("CARGO_BIN_EXE_qnatural"))
        .args([
            "compare",
            "--suite",
            suite,
            "--q",
            "0.3,0.5,0.9",
            "--format",
            "json",
        ])
        .arg("--report")
        .arg(&path)
        .env_remove("QNATURAL_TOL")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("{suite}: exit {:?}", out.status.code())
    })?;
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    serde_json::from_str(&text).map_err(|e| format!("{suite}: report does not parse: {e}"))
}

fn type2_calibration() -> Check {
    for q in QS {
        let cx = ctx(q);
        for u in UV {
            for v in UV {
                let got = natural_type2(&FunctionSpec::monomial(0.0), u, v, &cx)
                    .map_err(|e| e.to_string())?;
                let err = (got.re() - u / v).abs();
                ensure(err <= 1e-8, || {
                    format!("q={q} u={u} v={v}: {} vs {}", got.re(), u / v)
                })?;
            }
        }
        let printed = natural_type2_with(
            &FunctionSpec::monomial(0.0),
            1.0,
            1.0,
            Type2Variant::Printed,
            &cx,
        )
        .map_err(|e| e.to_string())?;
        ensure((printed.re() - 1.0).abs() <= 1e-8, || {
            "printed variant off the diagonal u = v".into()
        })?;
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut failing = Vec::new();
    for suite in ["eq42", "eq43", "corollary14"] {
        let rep = run_report(suite, dir.path())?;
        let records: Vec<CompareRow> = serde_json::from_value(rep["records"].clone())
            .map_err(|e| format!("{suite}: records do not match the schema: {e}"))?;
        ensure(!records.is_empty(), || format!("{suite}: empty report"))?;
        ensure(
            rep["summary"]["total"].as_u64() == Some(records.len() as u64),
            || format!("{suite}: bad summary"),
        )?;
        for o in rep["failing_oracles"].as_array().into_iter().flatten() {
            failing.push(format!("{suite}:{}", o.as_str().unwrap_or("?")));
        }
    }
    Ok(format!(
        "qN(1) = u/v on the grid; reports parse; formulas with failing rows: {}",
        if failing.is_empty() {
            "none".into()
        } else {
            failing.join(", ")
        }
    ))
}

fn cli_contract() -> Check {
    let bin = env!("CARGO_BIN_EXE_qnatural");
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .env_remove("QNATURAL_TOL")
            .output()
            .map_err(|e| e.to_string())
    };
    let codes = [
        (
            vec!["eval", "--fn", "eexp:a=0.5", "--u", "1", "--v", "2"],
            0,
        ),
        (
            vec!["eval", "--fn", "eexp:a=0.5", "--u", "1,3", "--v", "1"],
            1,
        ),
        (vec!["eval", "--fn", "eexp:a=0.5"], 2),
        (vec!["compare", "--suite", "eq42"], 0),
        (
            vec![
                "compare",
                "--fn",
                "monomial:n=0",
                "--oracle",
                "eexp",
                "--u",
                "1",
                "--v",
                "2",
            ],
            2,
        ),
        (
            vec!["sweep", "--fn", "monomial:n=0", "--u", "1", "--v", "2"],
            0,
        ),
        (
            vec!["sweep", "--fn", "bessel:a=0.3", "--u", "1", "--v", "2"],
            2,
        ),
        (vec!["list"], 0),
        (vec!["list", "--fn", "unknown"], 2),
    ];
    for (args, want) in &codes {
        let code = run(args)?.status.code();
        ensure(code == Some(*want), || {
            format!("{args:?}: exit {code:?}, expected {want}")
        })?;
    }

    let grid = ["compare", "--suite", "eq43", "--q", "0.9,0.3,0.5"];
    let as_csv = run(&[&grid[..], &["--format", "csv"]].concat())?.stdout;
    let again = run(&[&grid[..], &["--format", "csv"]].concat())?.stdout;
    ensure(as_csv == again, || "two identical runs differ".into())?;
    let csv_rows: Vec<CompareRow> = csv::Reader::from_reader(&as_csv[..])
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let key = |r: &CompareRow| (r.q, r.u, r.v);
    ensure(
        csv_rows.windows(2).all(|w| key(&w[0]) <= key(&w[1])),
        || "rows not sorted by (q, u, v)".into(),
    )?;
    let json: Document<CompareRow> =
        serde_json::from_slice(&run(&[&grid[..], &["--format", "json"]].concat())?.stdout)
            .map_err(|e| e.to_string())?;
    ensure(json.rows.len() == csv_rows.len(), || {
        "CSV and JSON row counts differ".into()
    })?;
    let same = |a: Option<f64>, b: Option<f64>| match (a, b) {
        (Some(a), Some(b)) => (a - b).abs() <= 1e-15 * a.abs().max(b.abs()).max(1.0),
        (a, b) => a == b,
    };
    for (a, b) in csv_rows.iter().zip(&json.rows) {
        ensure(
            same(a.series_re, b.series_re)
                && same(a.oracle_re, b.oracle_re)
                && same(a.abs_diff, b.abs_diff),
            || format!("CSV/JSON mismatch at {:?}", key(a)),
        )?;
        ensure(a.verdict == b.verdict, || {
            "verdict depends on the format".into()
        })?;
    }
    Ok(format!(
        "{} exit-code cases; ordering and CSV/JSON round trip hold",
        codes.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("identity suite", identity),
        ("monomial suite", monomial),
        ("exponential suite", exponential),
        ("trig suite", trig),
        ("specialization suite", specialization),
        ("gamma suite", gamma),
        ("exponential-product suite", exponential_product),
        ("theorem 1/3 oracle suite", theorem_oracles),
        ("classical-limit suite", classical_limit),
        ("type-2 calibration suite", type2_calibration),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(note) => println!("PASS criterion {}: {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
