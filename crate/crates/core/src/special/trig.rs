use crate::calculus::{big_e, small_e};
use crate::context::QContext;
use crate::error::{domain, Result};
use crate::series::{Complex, SeriesValue};

/// `Lower` is built from `e_q` (so needs `|a x| < 1`), `Upper` from `E_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigFamily {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigFn {
    Sin,
    Cos,
    Sinh,
    Cosh,
}

impl TrigFn {
    pub fn name(self) -> &'static str {
        match self {
            TrigFn::Sin => "sin",
            TrigFn::Cos => "cos",
            TrigFn::Sinh => "sinh",
            TrigFn::Cosh => "cosh",
        }
    }

    /// True for the odd functions sin and sinh.
    pub fn is_odd(self) -> bool {
        matches!(self, TrigFn::Sin | TrigFn::Sinh)
    }
}

/// q-trigonometric and q-hyperbolic functions of `a x`:
///
/// `sin = (g(it) - g(-it)) / 2i`, `cos = (g(it) + g(-it)) / 2`,
/// `sinh = (g(t) - g(-t)) / 2`, `cosh = (g(t) + g(-t)) / 2`,
///
/// with `t = a x` and `g = e_q` (lower) or `E_q` (upper).
pub fn q_trig(
    family: TrigFamily,
    func: TrigFn,
    a: f64,
    x: f64,
    ctx: &QContext,
) -> Result<SeriesValue> {
    q_trig_complex(family, func, Complex::new(a * x, 0.0), ctx)
}

pub(crate) fn q_trig_complex(
    family: TrigFamily,
    func: TrigFn,
    t: Complex,
    ctx: &QContext,
) -> Result<SeriesValue> {
    if family == TrigFamily::Lower && t.norm() >= 1.0 {
        return Err(domain!(
            "lower q-{} needs |a x| < 1, got {}",
            func.name(),
            t.norm()
        ));
    }
    let g = |s: Complex| match family {
        TrigFamily::Lower => small_e(s, ctx),
        TrigFamily::Upper => big_e(s, ctx),
    };
    let i = Complex::new(0.0, 1.0);
    let arg = match func {
        TrigFn::Sin | TrigFn::Cos => i * t,
        TrigFn::Sinh | TrigFn::Cosh => t,
    };
    let plus = g(arg)?;
    let minus = g(-arg)?;
    let out = match func {
        TrigFn::Sin => plus.sub(minus).scaled(Complex::new(0.0, -0.5)),
        TrigFn::Sinh => plus.sub(minus).scaled_real(0.5),
        TrigFn::Cos | TrigFn::Cosh => plus.add(minus).scaled_real(0.5),
    };
    Ok(out)
}
