use crate::context::QContext;
use crate::error::{domain, QError, Result};
use crate::series::{KahanSum, SeriesValue, Settle, Step};
#[allow(unused_imports)]
use num_traits::Float;

use super::FunctionSpec;

/// Which Pochhammer base the bilateral type-2 series uses.
///
/// With `Calibrated` the weights are `q^k (-v/u;q)_k / (-v/u;q)_inf`, which
/// reproduces the second-kind q-gamma integral: the transform of `1` is
/// `u/v` and that of `x^(alpha-1)` is
/// `(u/v)^alpha (1-q)^(alpha-1) Gamma_q(alpha) / K(u/v; alpha)`.
/// `Printed` keeps the prefactor but uses `(-u/v;q)_k`; it agrees with
/// `Calibrated` only on the diagonal `u = v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Type2Variant {
    #[default]
    Calibrated,
    Printed,
}

fn check_point(u: f64, v: f64) -> Result<()> {
    if !(u > 0.0 && u.is_finite() && v > 0.0 && v.is_finite()) {
        return Err(domain!(
            "transform point needs u > 0 and v > 0, got u = {u}, v = {v}"
        ));
    }
    Ok(())
}

/// Number of leading steps over which `cond(step)` holds, capped at `cap`.
fn rising_steps(cap: usize, mut cond: impl FnMut(usize) -> bool) -> usize {
    let mut n = 0;
    while n < cap && cond(n) {
        n += 1;
    }
    n
}

/// Running node contribution: the weighted sum plus the propagated node
/// error estimates.
struct Tail {
    settle: Settle,
    node_error: f64,
    nodes_converged: bool,
}

impl Tail {
    fn new(settle: Settle) -> Self {
        Self {
            settle,
            node_error: 0.0,
            nodes_converged: true,
        }
    }

    fn push(&mut self, f: &FunctionSpec, node: f64, ln_w: f64, ctx: &QContext) -> Result<Step> {
        let fx = f.eval_weighted(node, ln_w, ctx)?;
        self.node_error += fx.est_error;
        self.nodes_converged &= fx.converged;
        self.settle.push(fx.value)
    }

    fn finish(self) -> Result<SeriesValue> {
        let mut out = self.settle.finish()?;
        out.est_error += self.node_error;
        out.converged &= self.nodes_converged;
        Ok(out)
    }
}

/// First-type q-Natural transform,
/// `N_q(f)(u;v) = (q;q)_inf / v * sum_{k>=0} q^k f((u/v) q^k) / (q;q)_k`.
///
/// The weights `q^k (q;q)_inf / (q;q)_k` are built in the log domain, so the
/// series stays usable as q approaches 1 where `(q;q)_inf` underflows.
pub fn natural_type1(f: &FunctionSpec, u: f64, v: f64, ctx: &QContext) -> Result<SeriesValue> {
    check_point(u, v)?;
    f.validate()?;
    let x0 = u / v;
    if let Some(bound) = f.node_bound() {
        if x0 >= bound {
            return Err(domain!(
                "{} needs |a u/v| < 1 (largest node u/v = {x0}, bound {bound})",
                f.family.name()
            ));
        }
    }
    let q = ctx.q();
    let ln_q = ctx.ln_q();
    // Weights grow while q^{k+1} > 1 - q.
    let peak = rising_steps(ctx.max_terms(), |k| ctx.pow((k + 1) as f64) > 1.0 - q);
    let mut tail = Tail::new(Settle::new(ctx, "N_q series").hold_until(peak));
    let mut ln_w = ctx.ln_qq_inf();
    let mut qk = 1.0;
    loop {
        if tail.push(f, x0 * qk, ln_w, ctx)? == Step::Done {
            break;
        }
        qk *= q;
        ln_w += ln_q - (-qk).ln_1p();
    }
    Ok(tail.finish()?.scaled_real(1.0 / v))
}

/// Second-type q-Natural transform with the calibrated Pochhammer base.
pub fn natural_type2(f: &FunctionSpec, u: f64, v: f64, ctx: &QContext) -> Result<SeriesValue> {
    natural_type2_with(f, u, v, Type2Variant::Calibrated, ctx)
}

/// `ln (-b; q)_inf` for `b >= 0`, summed to machine precision.
fn ln_neg_poch_inf(b: f64, ctx: &QContext) -> Result<f64> {
    let q = ctx.q();
    let mut acc = KahanSum::default();
    let mut t = b;
    for _ in 0..ctx.max_terms().max(1 << 20) {
        if t < 1e-18 * (1.0 - q) {
            return Ok(acc.value());
        }
        acc.add(t.ln_1p());
        t *= q;
    }
    Err(QError::NotConverged("(-b;q)_inf"))
}

/// Second-type q-Natural transform,
/// `qN(f)(u;v) = 1/(-v/u;q)_inf * sum_{k in Z} q^k f(q^k) (-b;q)_k`,
/// with `b = v/u` or `b = u/v` depending on `variant`.
///
/// The `k >= 0` and `k < 0` tails are settled independently; negative
/// indices use `(-b;q)_k = (-b;q)_inf / (-b q^k;q)_inf`.
pub fn natural_type2_with(
    f: &FunctionSpec,
    u: f64,
    v: f64,
    variant: Type2Variant,
    ctx: &QContext,
) -> Result<SeriesValue> {
    check_point(u, v)?;
    f.validate()?;
    if f.node_bound().is_some() {
        return Err(domain!(
            "{} has a bounded domain but the bilateral series samples unbounded nodes",
            f.family.name()
        ));
    }
    let q = ctx.q();
    let ln_q = ctx.ln_q();
    let b = match variant {
        Type2Variant::Calibrated => v / u,
        Type2Variant::Printed => u / v,
    };
    // ln w_k = k ln q + ln(-b;q)_inf - ln(-b q^k;q)_inf - ln(-v/u;q)_inf,
    // so w_0 = 1/(-v/u;q)_inf for either base.
    let ln_w0 = -ln_neg_poch_inf(v / u, ctx)?;
    let edge = (1.0 - q) / q;

    // k >= 0: w_{k+1} / w_k = q (1 + b q^k).
    let peak = rising_steps(ctx.max_terms(), |k| b * ctx.pow(k as f64) > edge);
    let mut upper = Tail::new(Settle::new(ctx, "qN series (k >= 0)").hold_until(peak));
    let mut ln_w = ln_w0;
    let mut qk = 1.0;
    loop {
        if upper.push(f, qk, ln_w, ctx)? == Step::Done {
            break;
        }
        ln_w += ln_q + (b * qk).ln_1p();
        qk *= q;
    }

    // k < 0: w_{k-1} / w_k = 1 / (q (1 + b q^{k-1})).
    let peak = rising_steps(ctx.max_terms(), |m| b * ctx.pow(-((m + 1) as f64)) < edge);
    let mut lower = Tail::new(Settle::new(ctx, "qN series (k < 0)").hold_until(peak));
    let mut ln_w = ln_w0;
    let mut node = 1.0;
    loop {
        node /= q;
        ln_w += -ln_q - (b * node).ln_1p();
        if lower.push(f, node, ln_w, ctx)? == Step::Done {
            break;
        }
    }

    Ok(upper.finish()?.add(lower.finish()?))
}

/// First or second type of the q-analogues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformType {
    First,
    Second,
}

/// q-Laplace transform: the Natural transform at `u = 1`.
pub fn laplace_q(
    f: &FunctionSpec,
    v: f64,
    kind: TransformType,
    ctx: &QContext,
) -> Result<SeriesValue> {
    match kind {
        TransformType::First => natural_type1(f, 1.0, v, ctx),
        TransformType::Second => natural_type2(f, 1.0, v, ctx),
    }
}

/// q-Sumudu transform: the Natural transform at `v = 1`.
pub fn sumudu_q(
    f: &FunctionSpec,
    u: f64,
    kind: TransformType,
    ctx: &QContext,
) -> Result<SeriesValue> {
    match kind {
        TransformType::First => natural_type1(f, u, 1.0, ctx),
        TransformType::Second => natural_type2(f, u, 1.0, ctx),
    }
}
