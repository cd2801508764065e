use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use qnatural::closed_forms::{compare_with, Oracle, OracleId, Tolerance};
use qnatural::transform::{
    classical_correspondent, classical_natural_reference, natural_type1, natural_type2_with,
    Transform, TransformQuery, TransformType, Type2Variant,
};
use qnatural::{QContext, SeriesValue};

use crate::args::{Common, CompareArgs, EvalArgs, ListArgs, SweepArgs, Variant};
use crate::output::{Document, Meta};
use crate::report::Report;
use crate::suites::{self, Case};
use crate::{catalog, selector, CliError};

/// Rows of one run and whether every evaluation converged without error.
pub struct Run<R> {
    pub doc: Document<R>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRow {
    pub q: f64,
    pub u: f64,
    pub v: f64,
    pub transform: String,
    pub function: String,
    pub value_re: Option<f64>,
    pub value_im: Option<f64>,
    pub est_error: Option<f64>,
    pub terms_used: Option<usize>,
    pub converged: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub q: f64,
    pub u: f64,
    pub v: f64,
    pub transform: String,
    pub function: String,
    pub oracle: String,
    pub params: String,
    pub series_re: Option<f64>,
    pub series_im: Option<f64>,
    pub series_est_error: Option<f64>,
    pub oracle_re: Option<f64>,
    pub oracle_im: Option<f64>,
    pub abs_diff: Option<f64>,
    pub rel_diff: Option<f64>,
    pub threshold: Option<f64>,
    pub converged: bool,
    /// `pass`, `fail` or `error`.
    pub verdict: String,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub j: u32,
    pub q: f64,
    pub u: f64,
    pub v: f64,
    pub function: String,
    pub value: Option<f64>,
    pub classical: f64,
    pub discrepancy: Option<f64>,
    pub est_error: Option<f64>,
    pub terms_used: Option<usize>,
    pub converged: bool,
    /// The discrepancy did not grow past the noise floor since the previous row.
    pub monotone: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub family: String,
    pub parameters: String,
    pub guard: String,
    pub oracles: String,
}

fn by_point(a: (f64, f64, f64), b: (f64, f64, f64)) -> Ordering {
    a.0.total_cmp(&b.0)
        .then(a.1.total_cmp(&b.1))
        .then(a.2.total_cmp(&b.2))
}

fn contexts(common: &Common) -> Result<Vec<QContext>, CliError> {
    if common.q.is_empty() {
        return Err(CliError::Usage("--q needs at least one base".into()));
    }
    common
        .q
        .iter()
        .map(|&q| {
            QContext::builder(q)
                .tol(common.tol)
                .max_terms(common.max_terms)
                .settle_count(common.settle_count)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect()
}

fn meta(command: &str, common: &Common, q: Vec<f64>) -> Meta {
    Meta {
        command: command.to_string(),
        q,
        tol: common.tol,
        max_terms: common.max_terms,
    }
}

fn grid(u: &[f64], v: &[f64]) -> Result<Vec<(f64, f64)>, CliError> {
    if u.is_empty() || v.is_empty() {
        return Err(CliError::Usage("--u and --v are required".into()));
    }
    Ok(u.iter()
        .flat_map(|&u| v.iter().map(move |&v| (u, v)))
        .collect())
}

/// `(u, v)` pairs as evaluated by `t`, without repeats.
fn effective(t: Transform, grid: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::new();
    for &(u, v) in grid {
        let p = t.effective_point(u, v);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn evaluate(
    query: &TransformQuery,
    variant: Variant,
    ctx: &QContext,
) -> qnatural::Result<SeriesValue> {
    match (variant, query.transform.kind()) {
        (Variant::Printed, TransformType::Second) => {
            natural_type2_with(&query.f, query.u, query.v, Type2Variant::Printed, ctx)
        }
        _ => query.evaluate(ctx),
    }
}

pub fn eval(args: &EvalArgs) -> Result<Run<EvalRow>, CliError> {
    let f = selector::parse(&args.function)?;
    let points = effective(args.transform, &grid(&args.u, &args.v)?);
    let ctxs = contexts(&args.common)?;
    let jobs: Vec<(&QContext, (f64, f64))> = ctxs
        .iter()
        .flat_map(|c| points.iter().map(move |&p| (c, p)))
        .collect();
    let mut rows: Vec<EvalRow> = jobs
        .par_iter()
        .map(|&(ctx, (u, v))| {
            let query = TransformQuery::new(args.transform, f.clone(), u, v);
            let out = evaluate(&query, args.variant, ctx);
            let mut row = EvalRow {
                q: ctx.q(),
                u,
                v,
                transform: args.transform.name().to_string(),
                function: args.function.clone(),
                value_re: None,
                value_im: None,
                est_error: None,
                terms_used: None,
                converged: false,
                error: None,
            };
            match out {
                Ok(s) => {
                    row.value_re = Some(s.value.re);
                    row.value_im = Some(s.value.im);
                    row.est_error = Some(s.est_error);
                    row.terms_used = Some(s.terms_used);
                    row.converged = s.converged;
                }
                Err(e) => row.error = Some(e.to_string()),
            }
            row
        })
        .collect();
    rows.sort_by(|a, b| by_point((a.q, a.u, a.v), (b.q, b.u, b.v)));
    let ok = rows.iter().all(|r| r.converged && r.error.is_none());
    Ok(Run {
        doc: Document {
            meta: meta("eval", &args.common, args.common.q.clone()),
            rows,
        },
        ok,
    })
}

struct Job<'a> {
    ctx: &'a QContext,
    query: TransformQuery,
    oracle: Oracle,
    function: &'a str,
    tol: Tolerance,
}

fn compare_row(job: &Job) -> CompareRow {
    let mut row = CompareRow {
        q: job.ctx.q(),
        u: job.query.u,
        v: job.query.v,
        transform: job.query.transform.name().to_string(),
        function: job.function.to_string(),
        oracle: job.oracle.id().name().to_string(),
        params: job.oracle.params(),
        series_re: None,
        series_im: None,
        series_est_error: None,
        oracle_re: None,
        oracle_im: None,
        abs_diff: None,
        rel_diff: None,
        threshold: None,
        converged: false,
        verdict: "error".to_string(),
        error: None,
    };
    match compare_with(&job.query, &job.oracle, job.tol, job.ctx) {
        Ok(c) => {
            row.series_re = Some(c.series.value.re);
            row.series_im = Some(c.series.value.im);
            row.series_est_error = Some(c.series.est_error);
            row.oracle_re = Some(c.oracle_value.value.re);
            row.oracle_im = Some(c.oracle_value.value.im);
            row.abs_diff = Some(c.abs_diff);
            row.rel_diff = Some(c.rel_diff);
            row.threshold = Some(c.threshold);
            row.converged = c.series.converged && c.oracle_value.converged;
            row.verdict = if c.pass { "pass" } else { "fail" }.to_string();
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

/// The pairings of a compare run. Usage errors surface before any
/// evaluation.
fn compare_cases(args: &CompareArgs) -> Result<Vec<Case>, CliError> {
    match (&args.suite, &args.function, &args.oracle) {
        (Some(name), _, _) => suites::suite(name).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown suite '{name}' (one of {})",
                suites::SUITES.join(", ")
            ))
        }),
        (None, Some(f), Some(o)) => {
            let oracle = OracleId::from_name(o).ok_or_else(|| {
                let names: Vec<_> = OracleId::ALL.iter().map(|id| id.name()).collect();
                CliError::Usage(format!(
                    "unknown oracle '{o}' (one of {})",
                    names.join(", ")
                ))
            })?;
            Ok(vec![Case {
                transform: args.transform,
                function: f.clone(),
                oracle,
                alpha: args.alpha,
                grid: grid(&args.u, &args.v)?,
                tol: Tolerance::default(),
            }])
        }
        _ => Err(CliError::Usage(
            "compare needs --suite, or --fn with --oracle".into(),
        )),
    }
}

pub fn compare(args: &CompareArgs) -> Result<(Run<CompareRow>, Option<Report>), CliError> {
    let cases = compare_cases(args)?;
    let ctxs = contexts(&args.common)?;
    let mut jobs = Vec::new();
    for case in &cases {
        let f = selector::parse(&case.function)?;
        for &(u, v) in &effective(case.transform, &case.grid) {
            let query = TransformQuery::new(case.transform, f.clone(), u, v);
            let oracle = Oracle::for_query(case.oracle, &query, case.alpha)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            for ctx in &ctxs {
                jobs.push(Job {
                    ctx,
                    query: query.clone(),
                    oracle: oracle.clone(),
                    function: &case.function,
                    tol: case.tol,
                });
            }
        }
    }
    let mut rows: Vec<CompareRow> = jobs.par_iter().map(compare_row).collect();
    rows.sort_by(|a, b| by_point((a.q, a.u, a.v), (b.q, b.u, b.v)));
    let ok = rows.iter().all(|r| r.converged && r.error.is_none());
    let meta = meta("compare", &args.common, args.common.q.clone());
    let report = args
        .report
        .as_ref()
        .map(|_| Report::new(meta.clone(), rows.clone()));
    Ok((
        Run {
            doc: Document { meta, rows },
            ok,
        },
        report,
    ))
}

/// Term budget for a base near 1: the settle rule needs about `28 / (1 - q)`
/// terms there.
pub fn sweep_budget(max_terms: usize, q: f64) -> usize {
    max_terms.max((64.0 / (1.0 - q)).ceil() as usize)
}

/// Settle tolerance for a base near 1. The settle window undercounts a
/// tail with ratio `q` by about `1 / (1 - q)`, so the tolerance shrinks by
/// the same factor.
pub fn sweep_tol(tol: f64, q: f64) -> f64 {
    tol * (1.0 - q)
}

pub fn sweep(args: &SweepArgs) -> Result<Run<SweepRow>, CliError> {
    let f = selector::parse(&args.function)?;
    if args.j_min == 0 || args.j_min > args.j_max || args.j_max > 40 {
        return Err(CliError::Usage(format!(
            "need 1 <= j-min <= j-max <= 40, got {}..{}",
            args.j_min, args.j_max
        )));
    }
    let classical = classical_natural_reference(&f, args.u, args.v, args.quad_nodes)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let js: Vec<u32> = (args.j_min..=args.j_max).collect();
    let qs: Vec<f64> = js.iter().map(|&j| 1.0 - 0.5f64.powi(j as i32)).collect();
    let c = &args.common;
    let ctxs: Vec<QContext> = qs
        .iter()
        .map(|&q| {
            QContext::builder(q)
                .tol(sweep_tol(c.tol, q))
                .max_terms(sweep_budget(c.max_terms, q))
                .settle_count(c.settle_count)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect::<Result<_, _>>()?;
    let mut rows: Vec<SweepRow> = js
        .par_iter()
        .zip(ctxs.par_iter())
        .map(|(&j, ctx)| {
            let (g, u_q) = classical_correspondent(&f, args.u, ctx.q());
            let out = natural_type1(&g, u_q, args.v, ctx);
            let mut row = SweepRow {
                j,
                q: ctx.q(),
                u: args.u,
                v: args.v,
                function: args.function.clone(),
                value: None,
                classical,
                discrepancy: None,
                est_error: None,
                terms_used: None,
                converged: false,
                monotone: true,
                error: None,
            };
            match out {
                Ok(s) => {
                    row.value = Some(s.value.re);
                    row.discrepancy = Some((s.value.re - classical).abs());
                    row.est_error = Some(s.est_error);
                    row.terms_used = Some(s.terms_used);
                    row.converged = s.converged;
                }
                Err(e) => row.error = Some(e.to_string()),
            }
            row
        })
        .collect();
    rows.sort_by(|a, b| by_point((a.q, a.u, a.v), (b.q, b.u, b.v)));
    let mut last: Option<f64> = None;
    for row in &mut rows {
        if let (Some(d), Some(e)) = (row.discrepancy, row.est_error) {
            let floor = 10.0 * e + 1e-12 * classical.abs();
            row.monotone = last.is_none_or(|prev| d <= prev + floor);
            last = Some(d);
        } else {
            row.monotone = false;
        }
    }
    let ok = rows.iter().all(|r| r.converged && r.error.is_none());
    Ok(Run {
        doc: Document {
            meta: meta("sweep", c, qs),
            rows,
        },
        ok,
    })
}

pub fn list(args: &ListArgs) -> Result<Vec<CatalogRow>, CliError> {
    let entries = catalog::entries();
    match &args.function {
        None => Ok(entries),
        Some(sel) => {
            let family = sel.split_once(':').map_or(sel.as_str(), |(f, _)| f).trim();
            let rows: Vec<_> = entries.into_iter().filter(|e| e.family == family).collect();
            if rows.is_empty() {
                return Err(CliError::Usage(format!(
                    "unknown function family '{family}' (one of {})",
                    selector::FAMILIES.join(", ")
                )));
            }
            Ok(rows)
        }
    }
}
