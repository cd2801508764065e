use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::context::QContext;
use crate::error::{pole, Result};
use crate::series::{ensure_finite, Complex, SeriesValue, Settle, Step};

/// Denominator factors `1 - b q^n` closer to zero than this are poles.
const POLE_EPS: f64 = 1e-14;

/// A numerator or denominator parameter. `QPower(t)` stands for `q^t` and is
/// resolved against the context at evaluation time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QParam {
    Fixed(Complex),
    QPower(f64),
}

impl QParam {
    pub fn real(x: f64) -> Self {
        QParam::Fixed(Complex::new(x, 0.0))
    }

    pub fn resolve(&self, ctx: &QContext) -> Complex {
        match *self {
            QParam::Fixed(z) => z,
            QParam::QPower(t) => Complex::new(ctx.pow(t), 0.0),
        }
    }
}

/// Which of the two basic hypergeometric conventions a parameter set uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperVariant {
    /// `r phi s`: no extra factor.
    Phi,
    /// `Phi`: each term carries `[(-1)^n q^{n(n-1)/2}]^k`.
    BigPhi,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HyperParams {
    pub numerator: Vec<QParam>,
    pub denominator: Vec<QParam>,
    pub variant: HyperVariant,
    /// Power of the bracket factor. Ignored for [`HyperVariant::Phi`].
    pub k_exponent: u32,
}

impl HyperParams {
    pub fn phi(numerator: Vec<QParam>, denominator: Vec<QParam>) -> Self {
        Self {
            numerator,
            denominator,
            variant: HyperVariant::Phi,
            k_exponent: 0,
        }
    }

    pub fn big_phi(numerator: Vec<QParam>, denominator: Vec<QParam>, k_exponent: u32) -> Self {
        Self {
            numerator,
            denominator,
            variant: HyperVariant::BigPhi,
            k_exponent,
        }
    }

    /// Effective bracket power: zero for `Phi`.
    pub fn bracket_power(&self) -> i32 {
        match self.variant {
            HyperVariant::Phi => 0,
            HyperVariant::BigPhi => self.k_exponent as i32,
        }
    }

    /// The same parameters with `extra` appended to the numerator.
    pub fn with_numerator(&self, extra: QParam) -> Self {
        let mut out = self.clone();
        out.numerator.push(extra);
        out
    }

    /// Radius of convergence in `z`: 1 without the bracket factor, infinite
    /// (`None`) with it.
    pub fn radius(&self) -> Option<f64> {
        if self.bracket_power() == 0 {
            Some(1.0)
        } else {
            None
        }
    }
}

/// Generates the coefficients `c_n` of `sum c_n z^n` for a parameter set,
/// one at a time, via the ratio `c_{n+1}/c_n`.
pub(crate) struct HyperCoefficients {
    num: Vec<Complex>,
    den: Vec<Complex>,
    bracket: i32,
    q: f64,
    qn: f64,
    n: usize,
    current: Complex,
}

impl HyperCoefficients {
    pub(crate) fn new(p: &HyperParams, bracket: i32, ctx: &QContext) -> Self {
        Self {
            num: p.numerator.iter().map(|a| a.resolve(ctx)).collect(),
            den: p.denominator.iter().map(|b| b.resolve(ctx)).collect(),
            bracket,
            q: ctx.q(),
            qn: 1.0,
            n: 0,
            current: Complex::new(1.0, 0.0),
        }
    }

    /// The ratio `c_{n+1} / c_n` at the current index.
    pub(crate) fn ratio(&self) -> Result<Complex> {
        let qn = self.qn;
        let mut ratio = Complex::new(1.0 / (1.0 - qn * self.q), 0.0);
        for a in &self.num {
            ratio *= 1.0 - a * qn;
        }
        for b in &self.den {
            let f = 1.0 - b * qn;
            if f.norm() < POLE_EPS {
                return Err(pole!(
                    "denominator parameter {b} makes (b;q)_{} vanish",
                    self.n + 1
                ));
            }
            ratio /= f;
        }
        if self.bracket != 0 {
            ratio *= (-qn).powi(self.bracket);
        }
        Ok(ratio)
    }

    /// Moves to the next index, given the ratio just computed.
    pub(crate) fn advance(&mut self, ratio: Complex) {
        self.current *= ratio;
        self.step();
    }

    /// Moves the index without tracking the coefficient value.
    pub(crate) fn step(&mut self) {
        self.qn *= self.q;
        self.n += 1;
    }

    /// Returns `c_n` and advances to `c_{n+1}`.
    pub(crate) fn next_coefficient(&mut self) -> Result<Complex> {
        let c = self.current;
        let r = self.ratio()?;
        self.advance(r);
        Ok(c)
    }
}

pub(crate) fn hyper_series(
    p: &HyperParams,
    bracket: i32,
    z: Complex,
    ctx: &QContext,
) -> Result<SeriesValue> {
    ensure_finite(z, "hypergeometric argument")?;
    let mut coeffs = HyperCoefficients::new(p, bracket, ctx);
    let mut settle = Settle::new(ctx, "basic hypergeometric series");
    let mut zn = Complex::new(1.0, 0.0);
    let mut peak: f64 = 0.0;
    loop {
        let term = coeffs.next_coefficient()? * zn;
        peak = peak.max(term.norm());
        if settle.push(term)? == Step::Done {
            break;
        }
        zn *= z;
    }
    let mut out = settle.finish()?;
    // Rounding in the partial sums, which dominates once terms cancel.
    out.est_error += peak * f64::EPSILON * out.terms_used as f64;
    Ok(out)
}

/// `r phi s [a; b | q, z] = sum (a;q)_n / (b;q)_n z^n / (q;q)_n`.
pub fn hyper_phi(p: &HyperParams, z: Complex, ctx: &QContext) -> Result<SeriesValue> {
    hyper_series(p, 0, z, ctx)
}

/// The `Phi` series: as [`hyper_phi`] with the extra factor
/// `[(-1)^n q^{n(n-1)/2}]^k`, `k = p.k_exponent`.
pub fn hyper_big_phi(p: &HyperParams, z: Complex, ctx: &QContext) -> Result<SeriesValue> {
    hyper_series(p, p.k_exponent as i32, z, ctx)
}

/// Evaluates `p` according to its own variant.
pub fn hyper(p: &HyperParams, z: Complex, ctx: &QContext) -> Result<SeriesValue> {
    hyper_series(p, p.bracket_power(), z, ctx)
}
