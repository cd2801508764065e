//! Foundational q-arithmetic: q-numbers, q-Pochhammer symbols, q-gamma,
//! the K-factor, q-exponentials, the q-derivative and Jackson integrals.

mod exponential;
mod jackson;
mod pochhammer;

pub use exponential::{big_e, small_e};
pub use jackson::{
    jackson_integral, jackson_integral_ab, jackson_integral_improper, try_jackson_integral,
    try_jackson_integral_improper,
};
pub use pochhammer::{
    k_factor, ln_q_gamma, q_gamma, q_pochhammer, q_pochhammer_inf, q_pochhammer_real,
    reciprocal_qq_real,
};

use crate::context::QContext;
use crate::error::{domain, Result};
#[allow(unused_imports)]
use num_traits::Float;

/// `[n]_q = (1 - q^n) / (1 - q)` for real `n`.
pub fn q_number(n: f64, ctx: &QContext) -> f64 {
    // expm1 keeps the numerator accurate when q^n is close to 1.
    -(n * ctx.ln_q()).exp_m1() / (1.0 - ctx.q())
}

/// `([n]_q)! = [1]_q [2]_q ... [n]_q`, with `([0]_q)! = 1`.
pub fn q_factorial(n: i64, ctx: &QContext) -> Result<f64> {
    if n < 0 {
        return Err(domain!("q_factorial needs n >= 0, got {n}"));
    }
    Ok((1..=n).map(|k| q_number(k as f64, ctx)).product())
}

/// Gaussian binomial coefficient `[n k]_q`.
pub fn q_binomial(n: i64, k: i64, ctx: &QContext) -> Result<f64> {
    if k < 0 || k > n {
        return Err(domain!("q_binomial needs 0 <= k <= n, got n={n}, k={k}"));
    }
    let q = ctx.q();
    let mut acc = 1.0;
    for i in 1..=k {
        acc *= (1.0 - q.powi((n - k + i) as i32)) / (1.0 - q.powi(i as i32));
    }
    Ok(acc)
}

/// `(x + a)_q^n = (x + a)(x + qa)...(x + q^{n-1}a)`; equals 1 for `n = 0`.
pub fn q_shifted_power(x: f64, a: f64, n: u32, ctx: &QContext) -> f64 {
    let mut acc = 1.0;
    let mut qj = 1.0;
    for _ in 0..n {
        acc *= x + qj * a;
        qj *= ctx.q();
    }
    acc
}

/// The q-difference quotient `(f(x) - f(qx)) / ((1 - q) x)`.
///
/// This is the quotient whose q -> 1 limit is `f'(x)` and which satisfies
/// `D_q (x + a)_q^n = [n]_q (x + a)_q^{n-1}`.
pub fn q_derivative<F>(f: F, x: f64, ctx: &QContext) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if x == 0.0 {
        return Err(domain!("q-derivative is undefined at x = 0"));
    }
    let q = ctx.q();
    Ok((f(x) - f(q * x)) / ((1.0 - q) * x))
}
