use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{domain, Result};
use crate::special::{TrigFamily, TrigFn};

use super::{Family, FunctionSpec};

/// Gauss-Laguerre nodes and weights for `int_0^inf g(s) e^{-s} ds`.
pub fn gauss_laguerre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    let mut z = 0.0;
    for i in 0..n {
        // Initial guesses follow the usual asymptotic spacing of the roots.
        z = match i {
            0 => 3.0 / (1.0 + 2.4 * nf),
            1 => z + 15.0 / (1.0 + 2.5 * nf),
            _ => {
                let ai = (i - 1) as f64;
                z + (1.0 + 2.55 * ai) / (1.9 * ai) * (z - x[i - 2])
            }
        };
        let mut pp = 1.0;
        let mut p2 = 0.0;
        for _ in 0..100 {
            let mut p1 = 1.0;
            p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = ((2.0 * jf + 1.0 - z) * p2 - jf * p3) / (jf + 1.0);
            }
            pp = nf * (p1 - p2) / z;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 3e-14 * z.abs().max(1.0) {
                break;
            }
        }
        x[i] = z;
        w[i] = -1.0 / (pp * nf * p2);
    }
    (x, w)
}

/// The classical function the q-family tends to as q -> 1, if registered.
fn classical_integrand(f: &FunctionSpec) -> Result<impl Fn(f64) -> f64> {
    let alpha = f.prefactor_alpha.unwrap_or(1.0);
    let (kind, a, power) = match f.family {
        Family::Monomial { power } => (0, 0.0, power),
        Family::SmallExp { a } => (1, a, 0.0),
        Family::Trig {
            family: TrigFamily::Lower,
            func,
            a,
        } => (
            match func {
                TrigFn::Sin => 2,
                TrigFn::Cos => 3,
                TrigFn::Sinh => 4,
                TrigFn::Cosh => 5,
            },
            a,
            0.0,
        ),
        _ => {
            return Err(domain!(
                "no classical reference is registered for '{}'",
                f.family.name()
            ))
        }
    };
    let p = power + alpha - 1.0;
    if p < 0.0 || p.fract() != 0.0 {
        return Err(domain!(
            "classical reference needs a nonnegative integer total power, got {p}"
        ));
    }
    let p = p as i32;
    Ok(move |t: f64| {
        let g = match kind {
            0 => 1.0,
            1 => (a * t).exp(),
            2 => (a * t).sin(),
            3 => (a * t).cos(),
            4 => (a * t).sinh(),
            _ => (a * t).cosh(),
        };
        g * t.powi(p)
    })
}

/// Classical Natural transform `int_0^inf f(u t) e^{-v t} dt` by
/// `quad_nodes`-point Gauss-Laguerre quadrature, for the q -> 1 targets
/// `x^n`, `e^{a x}` and the classical sin, cos, sinh, cosh of `a x`.
pub fn classical_natural_reference(
    f: &FunctionSpec,
    u: f64,
    v: f64,
    quad_nodes: usize,
) -> Result<f64> {
    if !(v > 0.0 && v.is_finite() && u.is_finite()) {
        return Err(domain!("classical reference needs finite u and v > 0"));
    }
    if quad_nodes == 0 {
        return Err(domain!("quadrature needs at least one node"));
    }
    let g = classical_integrand(f)?;
    let growth = match f.family {
        Family::SmallExp { a } => a * u,
        Family::Trig {
            func: TrigFn::Sinh | TrigFn::Cosh,
            a,
            ..
        } => (a * u).abs(),
        _ => 0.0,
    };
    if growth >= v {
        return Err(domain!(
            "classical integral diverges: growth rate {growth} >= v = {v}"
        ));
    }
    let (x, w) = gauss_laguerre(quad_nodes);
    // Substituting s = v t leaves (1/v) int g(u s / v) e^{-s} ds.
    let sum: f64 = x.iter().zip(&w).map(|(&s, &wi)| wi * g(u * s / v)).sum();
    Ok(sum / v)
}

/// Maps `f` to the q-family member whose type-1 transform at
/// `(u / (1 - q), v)` tends to the classical transform of the q -> 1 limit
/// of `f`: exponential and trigonometric arguments are scaled by `1 - q`.
pub fn classical_correspondent(f: &FunctionSpec, u: f64, q: f64) -> (FunctionSpec, f64) {
    let s = 1.0 - q;
    let family = match &f.family {
        Family::SmallExp { a } => Family::SmallExp { a: a * s },
        Family::BigExp { a } => Family::BigExp { a: a * s },
        Family::Trig { family, func, a } => Family::Trig {
            family: *family,
            func: *func,
            a: a * s,
        },
        other => other.clone(),
    };
    (
        FunctionSpec {
            family,
            prefactor_alpha: f.prefactor_alpha,
        },
        u / s,
    )
}
