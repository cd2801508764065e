use crate::context::QContext;
use crate::error::{domain, Result};
use crate::series::{Complex, SeriesValue, Settle, Step};

/// Jackson integral from 0 to `a`: `(1 - q) a sum_{k>=0} f(a q^k) q^k`.
pub fn jackson_integral<F>(mut f: F, a: f64, ctx: &QContext) -> Result<SeriesValue>
where
    F: FnMut(f64) -> Complex,
{
    try_jackson_integral(|x| Ok(f(x)), a, ctx)
}

/// [`jackson_integral`] for integrands that can fail.
pub fn try_jackson_integral<F>(mut f: F, a: f64, ctx: &QContext) -> Result<SeriesValue>
where
    F: FnMut(f64) -> Result<Complex>,
{
    if !a.is_finite() {
        return Err(domain!("Jackson integral endpoint must be finite, got {a}"));
    }
    let q = ctx.q();
    let mut settle = Settle::new(ctx, "Jackson integral");
    let mut qk = 1.0;
    loop {
        let term = f(a * qk)? * qk;
        if settle.push(term)? == Step::Done {
            break;
        }
        qk *= q;
    }
    Ok(settle.finish()?.scaled_real((1.0 - q) * a))
}

/// Jackson integral over a generic interval, `J(b) - J(a)` with `J(x)` the
/// integral from 0 to `x`.
///
/// In the classical orientation this is the integral from `a` up to `b`;
/// the same quantity is sometimes written with the limits swapped.
pub fn jackson_integral_ab<F>(mut f: F, a: f64, b: f64, ctx: &QContext) -> Result<SeriesValue>
where
    F: FnMut(f64) -> Complex,
{
    let upper = jackson_integral(&mut f, b, ctx)?;
    let lower = jackson_integral(&mut f, a, ctx)?;
    Ok(upper.sub(lower))
}

/// Improper Jackson integral `(1 - q) sum_{k in Z} (q^k / A) f(q^k / A)`.
///
/// The `k >= 0` and `k < 0` tails are settled independently; the result is
/// converged only if both are.
pub fn jackson_integral_improper<F>(mut f: F, scale: f64, ctx: &QContext) -> Result<SeriesValue>
where
    F: FnMut(f64) -> Complex,
{
    try_jackson_integral_improper(|x| Ok(f(x)), scale, ctx)
}

pub fn try_jackson_integral_improper<F>(mut f: F, scale: f64, ctx: &QContext) -> Result<SeriesValue>
where
    F: FnMut(f64) -> Result<Complex>,
{
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(domain!(
            "improper Jackson integral needs A > 0, got {scale}"
        ));
    }
    let q = ctx.q();

    let mut upper = Settle::new(ctx, "improper Jackson integral (k >= 0)");
    let mut node = 1.0 / scale;
    loop {
        if upper.push(f(node)? * node)? == Step::Done {
            break;
        }
        node *= q;
    }

    let mut lower = Settle::new(ctx, "improper Jackson integral (k < 0)");
    let mut node = 1.0 / (scale * q);
    loop {
        if lower.push(f(node)? * node)? == Step::Done {
            break;
        }
        node /= q;
    }

    Ok(upper.finish()?.add(lower.finish()?).scaled_real(1.0 - q))
}
