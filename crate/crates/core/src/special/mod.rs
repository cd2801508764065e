//! Special functions: basic hypergeometric series, q-Bessel functions,
//! q-trigonometric functions and the G-function.

mod bessel;
mod hyper;
mod trig;

pub use bessel::{q_bessel, BesselKind};
pub use hyper::{hyper, hyper_big_phi, hyper_phi, HyperParams, HyperVariant, QParam};
pub use trig::{q_trig, TrigFamily, TrigFn};

pub(crate) use bessel::cpow;
pub(crate) use hyper::HyperCoefficients;

use crate::calculus::q_pochhammer_inf;
use crate::context::QContext;
use crate::error::{pole, QError, Result};
use crate::series::Complex;
#[allow(unused_imports)]
use num_traits::Float;

/// `G(q^alpha) = 1 / (q^alpha; q)_inf`.
pub fn g_function(alpha: f64, ctx: &QContext) -> Result<f64> {
    if alpha <= 0.0 && (alpha - alpha.round()).abs() < 1e-12 {
        return Err(pole!("G(q^alpha) has a pole at alpha = {alpha}"));
    }
    let p = q_pochhammer_inf(Complex::new(ctx.pow(alpha), 0.0), ctx)?;
    if !p.converged {
        return Err(QError::NotConverged("g_function"));
    }
    if p.re().abs() < 1e-300 {
        return Err(pole!("(q^alpha; q)_inf vanishes at alpha = {alpha}"));
    }
    Ok(1.0 / p.re())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_function_values() {
        let cx = QContext::new(0.5).unwrap();
        assert!((g_function(60.0, &cx).unwrap() - 1.0).abs() < 1e-12);
        assert!((g_function(1.0, &cx).unwrap() - 1.0 / cx.qq_inf()).abs() < 1e-12);
        assert!((g_function(1.0, &cx).unwrap() - 3.462_746_6).abs() < 1e-6);
        assert!(matches!(g_function(0.0, &cx), Err(QError::Pole(_))));
        assert!(matches!(g_function(-3.0, &cx), Err(QError::Pole(_))));
    }

    #[test]
    fn g_function_shift() {
        let cx = QContext::new(0.6).unwrap();
        for alpha in [0.3, 1.0, 2.7, -0.5, -1.5] {
            let lhs = g_function(alpha + 1.0, &cx).unwrap();
            let rhs = g_function(alpha, &cx).unwrap() * (1.0 - cx.pow(alpha));
            assert!((lhs - rhs).abs() < 1e-10 * lhs.abs(), "alpha={alpha}");
        }
    }
}
