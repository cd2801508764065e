use crate::context::QContext;
use crate::error::{domain, pole, QError, Result};
use crate::series::{ensure_finite, Complex, KahanSum, SeriesValue};
#[allow(unused_imports)]
use num_traits::Float;

/// Factors closer to zero than this are treated as vanishing denominators.
const POLE_EPS: f64 = 1e-14;

/// Finite product `(a;q)_n = (1 - a)(1 - aq)...(1 - aq^{n-1})`.
pub fn q_pochhammer(a: Complex, n: u32, ctx: &QContext) -> Complex {
    let mut acc = Complex::new(1.0, 0.0);
    let mut aqk = a;
    for _ in 0..n {
        acc *= 1.0 - aqk;
        aqk *= ctx.q();
    }
    acc
}

/// Runs the settle rule on the multiplicative updates of an infinite
/// product: stop once `settle_count` consecutive updates fall below `tol`.
struct ProductSettle {
    tol: f64,
    need: usize,
    run: usize,
    window: alloc::collections::VecDeque<f64>,
}

impl ProductSettle {
    fn new(ctx: &QContext) -> Self {
        Self {
            tol: ctx.tol(),
            need: ctx.settle_count(),
            run: 0,
            window: alloc::collections::VecDeque::with_capacity(ctx.settle_count()),
        }
    }

    fn update(&mut self, magnitude: f64) -> bool {
        if self.window.len() == self.need {
            self.window.pop_front();
        }
        self.window.push_back(magnitude);
        if magnitude < self.tol {
            self.run += 1;
        } else {
            self.run = 0;
        }
        self.run >= self.need
    }

    fn residue(&self) -> f64 {
        self.window.iter().sum()
    }
}

/// `(a;q)_inf`, truncated once the update `|a q^k|` has stayed below `tol`
/// for `settle_count` consecutive factors.
pub fn q_pochhammer_inf(a: Complex, ctx: &QContext) -> Result<SeriesValue> {
    ensure_finite(a, "q_pochhammer_inf argument")?;
    let mut acc = Complex::new(1.0, 0.0);
    let mut aqk = a;
    let mut settle = ProductSettle::new(ctx);
    for k in 0..ctx.max_terms() {
        let factor = 1.0 - aqk;
        if factor == Complex::new(0.0, 0.0) {
            return Ok(SeriesValue {
                value: factor,
                est_error: 0.0,
                terms_used: k + 1,
                converged: true,
            });
        }
        acc *= factor;
        if settle.update(aqk.norm()) {
            return Ok(SeriesValue {
                value: ensure_finite(acc, "q_pochhammer_inf")?,
                est_error: acc.norm() * settle.residue(),
                terms_used: k + 1,
                converged: true,
            });
        }
        aqk *= ctx.q();
    }
    Ok(SeriesValue {
        value: ensure_finite(acc, "q_pochhammer_inf")?,
        est_error: acc.norm() * settle.residue(),
        terms_used: ctx.max_terms(),
        converged: false,
    })
}

/// Real-index symbol `(a;q)_t = (a;q)_inf / (a q^t;q)_inf`.
///
/// Evaluated as a single product of ratios `(1 - a q^k) / (1 - a q^{t+k})`,
/// which agrees with the finite product for integer `t >= 0` and gives
/// `1 / ((1 - a q^{-1}) ... (1 - a q^{t}))` for negative integer `t`.
pub fn q_pochhammer_real(a: Complex, t: f64, ctx: &QContext) -> Result<Complex> {
    ensure_finite(a, "q_pochhammer_real argument")?;
    if !t.is_finite() {
        return Err(domain!("Pochhammer index must be finite, got {t}"));
    }
    if t == 0.0 {
        return Ok(Complex::new(1.0, 0.0));
    }
    let q = ctx.q();
    let mut acc = Complex::new(1.0, 0.0);
    let mut aqk = a;
    let mut aqtk = a * ctx.pow(t);
    let mut settle = ProductSettle::new(ctx);
    for _ in 0..ctx.max_terms() {
        let den = 1.0 - aqtk;
        if den.norm() < POLE_EPS {
            return Err(pole!("(a q^t; q)_inf vanishes for a={a}, t={t}"));
        }
        acc *= (1.0 - aqk) / den;
        if settle.update(aqk.norm().max(aqtk.norm())) {
            return ensure_finite(acc, "q_pochhammer_real");
        }
        aqk *= q;
        aqtk *= q;
    }
    Err(QError::NotConverged("q_pochhammer_real"))
}

/// `1 / (q;q)_t = (q^{t+1};q)_inf / (q;q)_inf`, an entire function of `t`
/// that vanishes at negative integers.
pub fn reciprocal_qq_real(t: f64, ctx: &QContext) -> Result<f64> {
    if !t.is_finite() {
        return Err(domain!("Pochhammer index must be finite, got {t}"));
    }
    let q = ctx.q();
    let mut acc = 1.0;
    let mut qk1 = q;
    let mut qtk1 = ctx.pow(t + 1.0);
    let mut settle = ProductSettle::new(ctx);
    for _ in 0..ctx.max_terms() {
        acc *= (1.0 - qtk1) / (1.0 - qk1);
        if acc == 0.0 {
            return Ok(0.0);
        }
        if settle.update(qk1.max(qtk1)) {
            return Ok(acc);
        }
        qk1 *= q;
        qtk1 *= q;
    }
    Err(QError::NotConverged("reciprocal_qq_real"))
}

/// `ln |Gamma_q(x)|` and the sign of `Gamma_q(x)`, from
/// `Gamma_q(x) = (q;q)_inf / (q^x;q)_inf * (1 - q)^{1-x}`.
///
/// The products are accumulated as a compensated sum of log-ratios, so the
/// result stays representable for q arbitrarily close to 1.
pub fn ln_q_gamma(x: f64, ctx: &QContext) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(domain!("q_gamma argument must be finite, got {x}"));
    }
    let q = ctx.q();
    let mut acc = KahanSum::default();
    let mut sign = 1.0;
    let mut qk1 = q;
    let mut qxk = ctx.pow(x);
    let mut settle = ProductSettle::new(ctx);
    for _ in 0..ctx.max_terms() {
        let den = 1.0 - qxk;
        if den.abs() < POLE_EPS {
            return Err(pole!("Gamma_q has a pole at x = {x}"));
        }
        if den < 0.0 {
            sign = -sign;
        }
        acc.add((-qk1).ln_1p() - den.abs().ln());
        if settle.update(qk1.max(qxk)) {
            acc.add((1.0 - x) * (-q).ln_1p());
            return Ok((acc.value(), sign));
        }
        qk1 *= q;
        qxk *= q;
    }
    Err(QError::NotConverged("q_gamma"))
}

/// The q-gamma function of the first kind.
pub fn q_gamma(x: f64, ctx: &QContext) -> Result<f64> {
    let (ln_abs, sign) = ln_q_gamma(x, ctx)?;
    let value = sign * ln_abs.exp();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(QError::NonFinite("q_gamma"))
    }
}

/// Normalization factor of the second-kind q-gamma function,
/// `K(A;t) = A^{t-1} (-q/A;q)_inf (-A;q)_inf / ((-q^t/A;q)_inf (-A q^{1-t};q)_inf)`.
///
/// `K(A;1) = 1` and `K(A;t) = q^{t-1} K(A;t-1)`.
pub fn k_factor(a: f64, t: f64, ctx: &QContext) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(domain!("K(A;t) needs A > 0, got A = {a}"));
    }
    if !t.is_finite() {
        return Err(domain!("K(A;t) needs finite t, got {t}"));
    }
    let q = ctx.q();
    let inv = 1.0 / a;
    // Four geometric sequences: q^{k+1}/A, A q^k, q^{t+k}/A, A q^{1-t+k}.
    let mut s1 = q * inv;
    let mut s2 = a;
    let mut s3 = ctx.pow(t) * inv;
    let mut s4 = a * ctx.pow(1.0 - t);
    let mut acc = KahanSum::default();
    let mut settle = ProductSettle::new(ctx);
    for _ in 0..ctx.max_terms() {
        acc.add(s1.ln_1p() + s2.ln_1p() - s3.ln_1p() - s4.ln_1p());
        if settle.update(s1.max(s2).max(s3).max(s4)) {
            let value = ((t - 1.0) * a.ln() + acc.value()).exp();
            return if value.is_finite() {
                Ok(value)
            } else {
                Err(QError::NonFinite("k_factor"))
            };
        }
        s1 *= q;
        s2 *= q;
        s3 *= q;
        s4 *= q;
    }
    Err(QError::NotConverged("k_factor"))
}
