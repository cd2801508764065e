use crate::context::QContext;
use crate::error::{QError, Result};
use crate::series::SeriesValue;
use crate::transform::{Transform, TransformQuery};

use super::{oracle_eval, Oracle, OracleId};

/// Acceptance thresholds for a comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs: 1e-12,
            rel: 1e-8,
        }
    }
}

/// Series value against closed form at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub oracle: OracleId,
    pub params: alloc::string::String,
    pub transform: Transform,
    pub q: f64,
    pub u: f64,
    pub v: f64,
    pub series: SeriesValue,
    pub oracle_value: SeriesValue,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub threshold: f64,
    /// Both sides converged and `abs_diff <= threshold`.
    pub pass: bool,
}

/// [`compare_with`] at the default tolerance.
pub fn compare(query: &TransformQuery, oracle: &Oracle, ctx: &QContext) -> Result<ComparisonRow> {
    compare_with(query, oracle, Tolerance::default(), ctx)
}

/// Evaluates `query` through the series engine and `oracle` in closed form.
///
/// The verdict threshold is
/// `max(tol.abs, tol.rel * |oracle|, 10 * (est_series + est_oracle))`.
pub fn compare_with(
    query: &TransformQuery,
    oracle: &Oracle,
    tol: Tolerance,
    ctx: &QContext,
) -> Result<ComparisonRow> {
    if !oracle.describes_query(query) {
        let (t, f) = oracle.describes();
        return Err(QError::Incompatible(alloc::format!(
            "oracle '{}' states {} of '{}', not {} of '{}'",
            oracle.id().name(),
            t.name(),
            f.family.name(),
            query.transform.name(),
            query.f.family.name()
        )));
    }
    let series = query.evaluate(ctx)?;
    let oracle_value = oracle_eval(oracle, query.u, query.v, ctx)?;
    let abs_diff = (series.value - oracle_value.value).norm();
    let scale = oracle_value.value.norm();
    let rel_diff = if scale > 0.0 {
        abs_diff / scale
    } else {
        abs_diff
    };
    let threshold = tol
        .abs
        .max(tol.rel * scale)
        .max(10.0 * (series.est_error + oracle_value.est_error));
    let pass = series.converged && oracle_value.converged && abs_diff <= threshold;
    Ok(ComparisonRow {
        oracle: oracle.id(),
        params: oracle.params(),
        transform: query.transform,
        q: ctx.q(),
        u: query.u,
        v: query.v,
        series,
        oracle_value,
        abs_diff,
        rel_diff,
        threshold,
        pass,
    })
}
