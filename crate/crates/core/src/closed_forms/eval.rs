#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec;

use crate::calculus::{k_factor, ln_q_gamma, q_factorial};
use crate::context::QContext;
use crate::error::{domain, QError, Result};
use crate::series::{Complex, SeriesValue, Settle, Step};
use crate::special::{hyper, HyperParams, QParam, TrigFn};
use crate::transform::{CoefficientRule, Coefficients, PowerSeriesSpec};

use super::{Form, Oracle, Side};

fn check_point(u: f64, v: f64) -> Result<()> {
    if !(u > 0.0 && u.is_finite() && v > 0.0 && v.is_finite()) {
        return Err(domain!(
            "oracle point needs u > 0 and v > 0, got u = {u}, v = {v}"
        ));
    }
    Ok(())
}

fn require(ok: bool, constraint: &str, got: f64, bound: f64) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(domain!(
            "closed form requires {constraint} (got {got} against {bound})"
        ))
    }
}

fn exact(x: f64) -> Result<SeriesValue> {
    if x.is_finite() {
        Ok(SeriesValue::exact_real(x))
    } else {
        Err(QError::NonFinite("closed form"))
    }
}

/// `(1-q)^(alpha-1) Gamma_q(alpha)`.
fn gamma_factor(alpha: f64, ctx: &QContext) -> Result<f64> {
    let (ln_g, sign) = ln_q_gamma(alpha, ctx)?;
    let out = sign * (ln_g + (alpha - 1.0) * (1.0 - ctx.q()).ln()).exp();
    if out.is_finite() {
        Ok(out)
    } else {
        Err(QError::NonFinite("gamma factor"))
    }
}

/// `(1-q)^n Gamma_q(alpha + n)`, straight from the gamma function.
fn shifted_gamma(alpha: f64, n: usize, ctx: &QContext) -> Result<f64> {
    let (ln_g, sign) = ln_q_gamma(alpha + n as f64, ctx)?;
    Ok(sign * (ln_g + n as f64 * (1.0 - ctx.q()).ln()).exp())
}

/// `sum_n A_n x^n w_n` over the coefficients of `series`, settled like any
/// other series and stopped early when the series is a polynomial. The
/// weights are given by `w_0` and the ratios `w_{n+1} / w_n`; terms are
/// combined in the log domain so neither factor overflows alone.
fn weighted_sum(
    coeffs: &mut Coefficients,
    max_index: Option<usize>,
    x: f64,
    w0: f64,
    mut weight_ratio: impl FnMut(usize) -> f64,
    ctx: &QContext,
) -> Result<SeriesValue> {
    let mut settle = Settle::new(ctx, "oracle series").hold_until(coeffs.min_terms());
    let ln_x = x.ln();
    // ln(x^n w_n / w_0)
    let mut ln_rest = 0.0;
    let mut n = 0;
    while let Some((ln_c, phase)) = coeffs.next_log()? {
        let step = settle.push(phase * (ln_c + ln_rest).exp() * w0)?;
        if max_index == Some(n) {
            break;
        }
        if step == Step::Done {
            return settle.finish();
        }
        ln_rest += ln_x + weight_ratio(n).ln();
        n += 1;
    }
    settle.finish_exhausted()
}

/// `w_{n+1} / w_n` for `w_n = (q^alpha;q)_n`.
fn poch_ratio(alpha: f64, ctx: &QContext) -> impl FnMut(usize) -> f64 {
    let q = ctx.q();
    let mut qa = ctx.pow(alpha);
    move |_| {
        let r = 1.0 - qa;
        qa *= q;
        r
    }
}

fn within_radius(series: &PowerSeriesSpec, x: f64) -> Result<()> {
    if let Some(r) = series.radius() {
        require(
            x.abs() < r,
            "|u/v| inside the radius of convergence",
            x.abs(),
            r,
        )?;
    }
    Ok(())
}

/// `sum A_n x^n (q^alpha;q)_n` with the Bessel coefficients
/// `A_n = (-1)^n a^(mu+n) / ((q;q)_(2mu+n) (q;q)_n)`.
fn bessel_sum(alpha: f64, mu: f64, a: f64, x: f64, ctx: &QContext) -> Result<SeriesValue> {
    require((a * x).abs() < 1.0, "|a u/v| < 1", (a * x).abs(), 1.0)?;
    let mut coeffs = CoefficientRule::QBessel { mu, a }.coefficients(ctx)?;
    weighted_sum(&mut coeffs, None, x, 1.0, poch_ratio(alpha, ctx), ctx)
}

/// The series `params` evaluated at `z`, with the unit-radius guard for the
/// bracket-free variant.
fn hyper_at(params: &HyperParams, z: f64, ctx: &QContext) -> Result<SeriesValue> {
    if let Some(r) = params.radius() {
        require(
            z.abs() < r,
            "|z| < 1 for the hypergeometric argument",
            z.abs(),
            r,
        )?;
    }
    hyper(params, Complex::new(z, 0.0), ctx)
}

fn with_q_alpha(params: &HyperParams, alpha: f64) -> HyperParams {
    params.with_numerator(QParam::QPower(alpha))
}

/// Evaluates the right-hand side of `oracle` at `(u, v)`.
///
/// For one-variable forms only the relevant coordinate is read: Sumudu
/// forms ignore `v`, Laplace forms ignore `u`.
pub fn oracle_eval(oracle: &Oracle, u: f64, v: f64, ctx: &QContext) -> Result<SeriesValue> {
    check_point(u, v)?;
    oracle.validate()?;
    let q = ctx.q();
    let x = u / v;
    match oracle {
        Oracle::Thm1 { alpha, series } => {
            within_radius(series, x)?;
            let pre = (1.0 - q).powf(alpha - 1.0) * u.powf(alpha - 1.0) / v.powf(*alpha);
            let mut coeffs = series.rule.coefficients(ctx)?;
            let s = weighted_sum(
                &mut coeffs,
                series.max_index,
                x,
                shifted_gamma(*alpha, 0, ctx)?,
                poch_ratio(*alpha, ctx),
                ctx,
            )?;
            Ok(s.scaled_real(pre))
        }
        Oracle::Thm2i { alpha } => {
            let pre = (1.0 - q).powf(alpha - 1.0) * u.powf(alpha - 1.0) / v.powf(*alpha);
            exact(pre * shifted_gamma(*alpha, 0, ctx)?)
        }
        Oracle::Thm2ii { alpha, params, a } => {
            let mut p = with_q_alpha(params, *alpha);
            p.denominator.push(QParam::real(0.0));
            let pre = gamma_factor(*alpha, ctx)? * u.powf(alpha - 1.0) / v.powf(*alpha);
            Ok(hyper_at(&p, a * x, ctx)?.scaled_real(pre))
        }
        Oracle::Monomial { n } => {
            let n = *n as i32;
            exact((1.0 - q).powi(n) * u.powi(n) * q_factorial(n as i64, ctx)? / v.powi(n + 1))
        }
        Oracle::EexpPhi { a } => {
            let p = HyperParams::big_phi(vec![QParam::QPower(1.0)], vec![QParam::real(0.0)], 1);
            Ok(hyper_at(&p, a * x, ctx)?.scaled_real(1.0 / v))
        }
        Oracle::Thm3 { alpha, params, a } => {
            let p = with_q_alpha(params, *alpha);
            let pre = gamma_factor(*alpha, ctx)? * u.powf(alpha - 1.0) / v.powf(*alpha);
            Ok(hyper_at(&p, a * x, ctx)?.scaled_real(pre))
        }
        Oracle::Eexp { a } => {
            require((a * u).abs() < v, "|a u| < v", (a * u).abs(), v)?;
            exact(1.0 / (v - a * u))
        }
        Oracle::SinLower { a } => {
            require((a * u).abs() < v, "|a u| < v", (a * u).abs(), v)?;
            exact(a * u / (v * v + a * a * u * u))
        }
        Oracle::CosLower { a } => {
            require((a * u).abs() < v, "|a u| < v", (a * u).abs(), v)?;
            exact(v / (v * v + a * a * u * u))
        }
        Oracle::Cor4 { func, side, a } => match side {
            Side::Sumudu => {
                require((a * u).abs() < 1.0, "|a u| < 1", (a * u).abs(), 1.0)?;
                let den = 1.0 + a * a * u * u;
                exact(if *func == TrigFn::Sin {
                    a * u / den
                } else {
                    1.0 / den
                })
            }
            Side::Laplace => {
                require(a.abs() < v, "|a| < v", a.abs(), v)?;
                let den = v * v + a * a;
                exact(if *func == TrigFn::Sin {
                    a / den
                } else {
                    v / den
                })
            }
        },
        Oracle::Cor5 { alpha, mu, a } => {
            let pre = gamma_factor(*alpha, ctx)? * u.powf(alpha - 1.0) / v.powf(*alpha);
            Ok(bessel_sum(*alpha, *mu, *a, x, ctx)?.scaled_real(pre))
        }
        Oracle::Cor7 { side, alpha, mu, a } => match side {
            Side::Sumudu => {
                let pre = gamma_factor(*alpha, ctx)? * u.powf(alpha - 1.0);
                Ok(bessel_sum(*alpha, *mu, *a, u, ctx)?.scaled_real(pre))
            }
            Side::Laplace => {
                let pre = gamma_factor(*alpha, ctx)? / v.powf(*alpha);
                Ok(bessel_sum(*alpha, *mu, *a, 1.0 / v, ctx)?.scaled_real(pre))
            }
        },
        Oracle::Cor8 { side, alpha, mu, a } => match side {
            Side::Sumudu => bessel_sum(*alpha, *mu, *a, u, ctx),
            Side::Laplace => Ok(bessel_sum(*alpha, *mu, *a, 1.0 / v, ctx)?.scaled_real(1.0 / v)),
        },
        Oracle::Thm9 { alpha, series } => {
            within_radius(series, x)?;
            let pre = x.powf(*alpha) * gamma_factor(*alpha, ctx)?;
            let mut coeffs = series.rule.coefficients(ctx)?;
            // K(x; t + 1) = q^t K(x; t).
            let mut poch = poch_ratio(*alpha, ctx);
            let mut q_t = ctx.pow(*alpha);
            let s = weighted_sum(
                &mut coeffs,
                series.max_index,
                x,
                1.0 / k_factor(x, *alpha, ctx)?,
                |n| {
                    let r = poch(n) / q_t;
                    q_t *= q;
                    r
                },
                ctx,
            )?;
            Ok(s.scaled_real(pre))
        }
        Oracle::MonomialT2 { alpha } => {
            exact(x.powf(alpha - 1.0) * gamma_factor(*alpha, ctx)? / k_factor(x, *alpha, ctx)?)
        }
        Oracle::Cor10 { side, alpha } => match side {
            Side::Laplace => exact(
                gamma_factor(*alpha, ctx)?
                    / (v.powf(alpha - 1.0) * k_factor(1.0 / v, *alpha, ctx)?),
            ),
            Side::Sumudu => {
                exact(u.powf(alpha - 1.0) * gamma_factor(*alpha, ctx)? / k_factor(u, *alpha, ctx)?)
            }
        },
        Oracle::Thm11 { alpha, params, a } => {
            let p = second_type_params(params, *alpha);
            let qa = ctx.pow(*alpha);
            let pre = x.powf(*alpha) * gamma_factor(*alpha, ctx)? / k_factor(x, *alpha, ctx)?;
            Ok(hyper_at(&p, a * x / qa, ctx)?.scaled_real(pre))
        }
        Oracle::Cor12 {
            side,
            alpha,
            params,
            a,
        } => {
            let p = second_type_params(params, *alpha);
            let qa = ctx.pow(*alpha);
            let g = gamma_factor(*alpha, ctx)?;
            match side {
                Side::Laplace => {
                    let pre = g / k_factor(1.0 / v, *alpha, ctx)?;
                    Ok(hyper_at(&p, a / (v * qa), ctx)?.scaled_real(pre))
                }
                Side::Sumudu => {
                    let pre = u.powf(*alpha) * g / k_factor(u, *alpha, ctx)?;
                    Ok(hyper_at(&p, a * u / qa, ctx)?.scaled_real(pre))
                }
            }
        }
        Oracle::EexpT2 { form, a } => match form {
            Form::Natural => {
                require((a * u).abs() < q * v, "|a u| < q v", (a * u).abs(), q * v)?;
                exact(q * u / (q * v + a * u))
            }
            Form::Laplace => {
                require(a.abs() < q * v, "|a| < q v", a.abs(), q * v)?;
                exact(q / (q * v + a))
            }
            Form::Sumudu => {
                require((a * u).abs() < q, "|a u| < q", (a * u).abs(), q)?;
                exact(q * u / (q + a * u))
            }
        },
        Oracle::Eq42 { a } => {
            require((a * u).abs() < q * v, "|a u| < q v", (a * u).abs(), q * v)?;
            let sum = a * u / (q * v + a * u);
            exact(u / (v * k_factor(x, 1.0, ctx)?) * sum)
        }
        Oracle::Cor14 { func, form, a } => {
            let (uu, vv) = match form {
                Form::Natural => (u, v),
                Form::Laplace => (1.0, v),
                Form::Sumudu => (u, 1.0),
            };
            require(
                (a * uu).abs() < q * vv,
                "|a u| < q v",
                (a * uu).abs(),
                q * vv,
            )?;
            let sin = *func == TrigFn::Sin;
            exact(match form {
                Form::Natural | Form::Laplace => {
                    let den = q * q * vv * vv + a * a * uu * uu;
                    if sin {
                        -q * a * uu * uu / den
                    } else {
                        q * q * uu * vv / den
                    }
                }
                Form::Sumudu => {
                    let den = q * q + a * a * uu * uu;
                    if sin {
                        -q * a / den
                    } else {
                        q * q / den
                    }
                }
            })
        }
    }
}

/// Parameters of the second-type hypergeometric right-hand side: `q^alpha`
/// joins the numerator and the bracket power drops by one.
fn second_type_params(params: &HyperParams, alpha: f64) -> HyperParams {
    let mut p = with_q_alpha(params, alpha);
    p.k_exponent -= 1;
    p
}
