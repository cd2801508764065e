use crate::calculus::q_pochhammer_inf;
use crate::context::QContext;
use crate::error::{domain, Result};
use crate::series::{ensure_finite, Complex, SeriesValue, Settle, Step};

/// `E_q(t) = sum (-1)^n q^{n(n-1)/2} t^n / (q;q)_n`, which equals `(t;q)_inf`.
/// Entire in `t`.
///
/// When the alternating terms cancel so far that rounding would exceed the
/// settle tolerance, the product form is returned instead.
pub fn big_e(t: Complex, ctx: &QContext) -> Result<SeriesValue> {
    ensure_finite(t, "E_q argument")?;
    let q = ctx.q();
    let mut settle = Settle::new(ctx, "E_q");
    let mut term = Complex::new(1.0, 0.0);
    let mut qn = 1.0;
    let mut peak: f64 = 1.0;
    while settle.push(term)? == Step::Continue {
        // term_{n+1} / term_n = -q^n t / (1 - q^{n+1})
        term *= -qn * t / (1.0 - qn * q);
        qn *= q;
        peak = peak.max(term.norm());
    }
    let series = settle.finish()?;
    if cancels(peak, &series, ctx) {
        return q_pochhammer_inf(t, ctx);
    }
    Ok(series)
}

/// `e_q(t) = sum t^n / (q;q)_n = 1 / (t;q)_inf`, for `|t| < 1`.
///
/// Falls back to the product form under heavy cancellation, as [`big_e`].
pub fn small_e(t: Complex, ctx: &QContext) -> Result<SeriesValue> {
    ensure_finite(t, "e_q argument")?;
    if t.norm() >= 1.0 {
        return Err(domain!("e_q series needs |t| < 1, got |t| = {}", t.norm()));
    }
    let q = ctx.q();
    let mut settle = Settle::new(ctx, "e_q");
    let mut term = Complex::new(1.0, 0.0);
    let mut qn1 = q;
    let mut peak: f64 = 1.0;
    while settle.push(term)? == Step::Continue {
        term *= t / (1.0 - qn1);
        qn1 *= q;
        peak = peak.max(term.norm());
    }
    let series = settle.finish()?;
    if cancels(peak, &series, ctx) {
        let p = q_pochhammer_inf(t, ctx)?;
        let norm = p.value.norm();
        return Ok(SeriesValue {
            value: ensure_finite(p.value.inv(), "e_q")?,
            est_error: p.est_error / (norm * norm),
            ..p
        });
    }
    Ok(series)
}

/// Whether the rounding noise of a sum whose largest term is `peak` can
/// exceed the settle tolerance relative to the sum itself.
fn cancels(peak: f64, sum: &SeriesValue, ctx: &QContext) -> bool {
    peak * f64::EPSILON * sum.terms_used as f64 > ctx.tol() * sum.value.norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::QError;

    fn c(x: f64) -> Complex {
        Complex::new(x, 0.0)
    }

    #[test]
    fn big_e_values() {
        let cx = QContext::new(0.5).unwrap();
        assert_eq!(big_e(c(0.0), &cx).unwrap().value, c(1.0));
        let at_q = big_e(c(0.5), &cx).unwrap();
        assert!((at_q.re() - 0.288_788_095_1).abs() < 1e-10);
        assert!(big_e(c(1.0), &cx).unwrap().value.norm() < 1e-12);
    }

    #[test]
    fn big_e_matches_product_form() {
        for q in [0.3, 0.5, 0.9] {
            let cx = QContext::new(q).unwrap();
            for t in [c(-2.0), c(0.7), Complex::new(0.3, 1.5), c(-5.0)] {
                let series = big_e(t, &cx).unwrap();
                let product = q_pochhammer_inf(t, &cx).unwrap();
                assert!(series.converged);
                let scale = product.value.norm().max(1.0);
                assert!(
                    (series.value - product.value).norm() < 1e-9 * scale,
                    "q={q} t={t}"
                );
            }
        }
    }

    #[test]
    fn small_e_values() {
        let cx = QContext::new(0.5).unwrap();
        assert_eq!(small_e(c(0.0), &cx).unwrap().value, c(1.0));
        let half = small_e(c(0.5), &cx).unwrap();
        let recip = 1.0 / q_pochhammer_inf(c(0.5), &cx).unwrap().re();
        assert!((half.re() - recip).abs() < 1e-10);
        assert!((half.re() - 3.462_746_6).abs() < 1e-6);
        let prod = small_e(c(0.3), &cx).unwrap().value * big_e(c(0.3), &cx).unwrap().value;
        assert!((prod - c(1.0)).norm() < 1e-10);
    }

    #[test]
    fn small_e_domain() {
        let cx = QContext::new(0.5).unwrap();
        assert!(matches!(small_e(c(1.0), &cx), Err(QError::Domain(_))));
        assert!(matches!(
            small_e(Complex::new(0.0, -1.5), &cx),
            Err(QError::Domain(_))
        ));
    }
}
