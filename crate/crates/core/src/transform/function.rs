use alloc::string::String;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::calculus::{big_e, reciprocal_qq_real, small_e};
use crate::context::QContext;
use crate::error::{domain, Result};
use crate::series::{ensure_finite, Complex, SeriesValue, Settle, Step};
use crate::special::{
    cpow, hyper, q_bessel, q_trig, BesselKind, HyperCoefficients, HyperParams, TrigFamily, TrigFn,
};

/// Closed rule for the coefficients `A_n` of `f(x) = sum A_n x^n`.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientRule {
    /// `A_n = 1`.
    Unit,
    /// `A_n = 1 / n!`.
    InverseFactorial,
    /// `A_n = r^n`.
    Geometric { ratio: f64 },
    /// `A_n = a^n / (q;q)_n`, the coefficients of `e_q(a x)`.
    SmallQExp { a: f64 },
    /// `A_n = (-1)^n q^{n(n-1)/2} a^n / (q;q)_n`, the coefficients of `E_q(a x)`.
    BigQExp { a: f64 },
    /// `A_n = (-1)^n a^{mu+n} / ((q;q)_{2mu+n} (q;q)_n)`, so that
    /// `J^(1)_{2mu}(2 sqrt(a x)) = x^mu sum A_n x^n`.
    QBessel { mu: f64, a: f64 },
    /// Coefficients of the basic hypergeometric series in `a x`.
    Hyper { params: HyperParams, a: f64 },
    /// Finitely many coefficients `A_0 .. A_{N-1}`, zero beyond.
    Explicit { coeffs: Vec<f64> },
}

impl CoefficientRule {
    pub fn name(&self) -> &'static str {
        match self {
            CoefficientRule::Unit => "unit",
            CoefficientRule::InverseFactorial => "inverse_factorial",
            CoefficientRule::Geometric { .. } => "geometric",
            CoefficientRule::SmallQExp { .. } => "eq",
            CoefficientRule::BigQExp { .. } => "Eq",
            CoefficientRule::QBessel { .. } => "bessel",
            CoefficientRule::Hyper { .. } => "hyper",
            CoefficientRule::Explicit { .. } => "explicit",
        }
    }

    /// Radius of convergence of `sum A_n x^n`; `None` when entire.
    pub fn radius(&self) -> Option<f64> {
        match self {
            CoefficientRule::Unit => Some(1.0),
            CoefficientRule::Geometric { ratio } => Some(1.0 / ratio.abs()),
            CoefficientRule::SmallQExp { a } => Some(1.0 / a.abs()),
            CoefficientRule::Hyper { params, a } => params.radius().map(|r| r / a.abs()),
            CoefficientRule::InverseFactorial
            | CoefficientRule::Explicit { .. }
            | CoefficientRule::BigQExp { .. }
            | CoefficientRule::QBessel { .. } => None,
        }
    }

    pub fn coefficients(&self, ctx: &QContext) -> Result<Coefficients> {
        Coefficients::new(self, ctx)
    }
}

/// Sequential generator of `A_0, A_1, ...`.
///
/// Closed rules advance by the ratio `A_{n+1} / A_n` and also keep
/// `ln |A_n|` and the phase, so that callers can form products with
/// large weights without overflowing the coefficient itself.
pub struct Coefficients {
    kind: CoefState,
    current: Complex,
    ln_mag: f64,
    phase: Complex,
    exhausted: bool,
    n: usize,
    q: f64,
    qn: f64,
    q2mu_n1: f64,
}

enum CoefState {
    Unit,
    InverseFactorial,
    Geometric(f64),
    SmallQExp(f64),
    BigQExp(f64),
    QBessel(f64),
    Hyper(HyperCoefficients, f64),
    Explicit(Vec<f64>),
}

impl Coefficients {
    fn new(rule: &CoefficientRule, ctx: &QContext) -> Result<Self> {
        let mut current = Complex::new(1.0, 0.0);
        let mut q2mu_n1 = 0.0;
        let kind = match rule {
            CoefficientRule::Unit => CoefState::Unit,
            CoefficientRule::InverseFactorial => CoefState::InverseFactorial,
            CoefficientRule::Geometric { ratio } => CoefState::Geometric(*ratio),
            CoefficientRule::SmallQExp { a } => CoefState::SmallQExp(*a),
            CoefficientRule::BigQExp { a } => CoefState::BigQExp(*a),
            CoefficientRule::QBessel { mu, a } => {
                if !(2.0 * mu > -1.0) {
                    return Err(domain!("Bessel coefficients need 2 mu > -1, got mu = {mu}"));
                }
                current = cpow(Complex::new(*a, 0.0), *mu)? * reciprocal_qq_real(2.0 * mu, ctx)?;
                q2mu_n1 = ctx.pow(2.0 * mu + 1.0);
                CoefState::QBessel(*a)
            }
            CoefficientRule::Hyper { params, a } => CoefState::Hyper(
                HyperCoefficients::new(params, params.bracket_power(), ctx),
                *a,
            ),
            CoefficientRule::Explicit { coeffs } => {
                for c in coeffs {
                    ensure_finite(Complex::new(*c, 0.0), "power-series coefficient")?;
                }
                CoefState::Explicit(coeffs.clone())
            }
        };
        ensure_finite(current, "power-series coefficient")?;
        let zero = current == Complex::new(0.0, 0.0);
        Ok(Self {
            kind,
            current,
            ln_mag: current.norm().ln(),
            phase: if zero {
                Complex::new(1.0, 0.0)
            } else {
                current / current.norm()
            },
            exhausted: zero,
            n: 0,
            q: ctx.q(),
            qn: 1.0,
            q2mu_n1,
        })
    }

    /// Number of leading coefficients that must all be visited before the
    /// settle rule may stop a sum: the length of an explicit list.
    pub(crate) fn min_terms(&self) -> usize {
        match &self.kind {
            CoefState::Explicit(c) => c.len(),
            _ => 0,
        }
    }

    /// The ratio `A_{n+1} / A_n` of a closed rule at the current index.
    fn ratio(&self) -> Result<Complex> {
        let q = self.q;
        let qn = self.qn;
        let n = self.n;
        let r = match &self.kind {
            CoefState::Unit => Complex::new(1.0, 0.0),
            CoefState::InverseFactorial => Complex::new(1.0 / (n + 1) as f64, 0.0),
            CoefState::Geometric(r) => Complex::new(*r, 0.0),
            CoefState::SmallQExp(a) => Complex::new(*a / (1.0 - qn * q), 0.0),
            CoefState::BigQExp(a) => Complex::new(-qn * *a / (1.0 - qn * q), 0.0),
            CoefState::QBessel(a) => {
                Complex::new(-*a / ((1.0 - self.q2mu_n1) * (1.0 - qn * q)), 0.0)
            }
            CoefState::Hyper(gen, a) => gen.ratio()? * *a,
            CoefState::Explicit(_) => unreachable!("explicit coefficients have no ratio"),
        };
        Ok(r)
    }

    fn advance(&mut self) -> Result<()> {
        if let CoefState::Explicit(c) = &self.kind {
            self.n += 1;
            self.exhausted = self.n >= c.len();
            return Ok(());
        }
        if self.exhausted {
            self.n += 1;
            return Ok(());
        }
        let r = self.ratio()?;
        match &mut self.kind {
            CoefState::Hyper(gen, _) => gen.step(),
            CoefState::QBessel(_) => self.q2mu_n1 *= self.q,
            _ => {}
        }
        self.current *= r;
        if r == Complex::new(0.0, 0.0) {
            self.exhausted = true;
        } else {
            self.ln_mag += r.norm().ln();
            self.phase *= r / r.norm();
        }
        self.qn *= self.q;
        self.n += 1;
        Ok(())
    }

    /// Returns `A_n` and advances.
    pub fn next_coefficient(&mut self) -> Result<Complex> {
        let out = match &self.kind {
            CoefState::Explicit(c) => Complex::new(c.get(self.n).copied().unwrap_or(0.0), 0.0),
            _ if self.exhausted => Complex::new(0.0, 0.0),
            _ => self.current,
        };
        self.advance()?;
        ensure_finite(out, "power-series coefficient")
    }

    /// Returns `(ln |A_n|, A_n / |A_n|)` and advances, or `None` once every
    /// remaining coefficient is zero. A zero coefficient inside an explicit
    /// list comes back as `ln |A_n| = -inf`.
    pub(crate) fn next_log(&mut self) -> Result<Option<(f64, Complex)>> {
        let out = match &self.kind {
            CoefState::Explicit(c) => match c.get(self.n) {
                None => return Ok(None),
                Some(&c) if c < 0.0 => (c.abs().ln(), Complex::new(-1.0, 0.0)),
                Some(&c) => (c.ln(), Complex::new(1.0, 0.0)),
            },
            _ if self.exhausted => return Ok(None),
            _ => (self.ln_mag, self.phase),
        };
        self.advance()?;
        Ok(Some(out))
    }
}

/// `f(x) = sum A_n x^n`, optionally cut off after `A_{max_index}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeriesSpec {
    pub rule: CoefficientRule,
    pub max_index: Option<usize>,
    pub label: String,
}

impl PowerSeriesSpec {
    pub fn new(rule: CoefficientRule) -> Self {
        let label = String::from(rule.name());
        Self {
            rule,
            max_index: None,
            label,
        }
    }

    pub fn truncated(rule: CoefficientRule, max_index: usize) -> Self {
        Self {
            max_index: Some(max_index),
            ..Self::new(rule)
        }
    }

    /// Effective radius: infinite once the series is cut to a polynomial.
    pub fn radius(&self) -> Option<f64> {
        match self.max_index {
            Some(_) => None,
            None => self.rule.radius(),
        }
    }

    pub fn eval(&self, x: f64, ctx: &QContext) -> Result<SeriesValue> {
        if let Some(r) = self.radius() {
            if x.abs() >= r {
                return Err(domain!(
                    "power series '{}' needs |x| < {r}, got x = {x}",
                    self.label
                ));
            }
        }
        let mut coeffs = self.rule.coefficients(ctx)?;
        let mut settle = Settle::new(ctx, "power series").hold_until(coeffs.min_terms());
        let mut xn = 1.0;
        let mut n = 0usize;
        loop {
            let term = coeffs.next_coefficient()? * xn;
            let step = settle.push(term)?;
            if self.max_index == Some(n) {
                return settle.finish_exhausted();
            }
            if step == Step::Done {
                return settle.finish();
            }
            if xn.abs() > 1e200 {
                let coeffs = self.rule.coefficients(ctx)?;
                return weighted_series(coeffs, x, 0.0, self.max_index, ctx);
            }
            xn *= x;
            n += 1;
        }
    }
}

/// The transformable function classes.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `x^power`, `power > -1`.
    Monomial {
        power: f64,
    },
    PowerSeries(PowerSeriesSpec),
    /// `e_q(a x)`.
    SmallExp {
        a: f64,
    },
    /// `E_q(a x)`.
    BigExp {
        a: f64,
    },
    Trig {
        family: TrigFamily,
        func: TrigFn,
        a: f64,
    },
    /// `J^(kind)_order(2 sqrt(a x))`.
    Bessel {
        kind: BesselKind,
        order: f64,
        a: f64,
    },
    /// Basic hypergeometric series in `a x`.
    Hyper {
        params: HyperParams,
        a: f64,
    },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Monomial { .. } => "monomial",
            Family::PowerSeries(_) => "series",
            Family::SmallExp { .. } => "eexp",
            Family::BigExp { .. } => "Eexp",
            Family::Trig { .. } => "trig",
            Family::Bessel { .. } => "bessel",
            Family::Hyper { .. } => "hyper",
        }
    }
}

/// A transformable function: a family member, optionally multiplied by
/// `x^(alpha - 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionSpec {
    pub family: Family,
    pub prefactor_alpha: Option<f64>,
}

impl From<Family> for FunctionSpec {
    fn from(family: Family) -> Self {
        Self {
            family,
            prefactor_alpha: None,
        }
    }
}

impl FunctionSpec {
    pub fn new(family: Family) -> Self {
        family.into()
    }

    pub fn with_prefactor(family: Family, alpha: f64) -> Self {
        Self {
            family,
            prefactor_alpha: Some(alpha),
        }
    }

    pub fn monomial(power: f64) -> Self {
        Family::Monomial { power }.into()
    }

    /// Checks the parameter invariants.
    pub fn validate(&self) -> Result<()> {
        if let Some(alpha) = self.prefactor_alpha {
            if !(alpha > 0.0 && alpha.is_finite()) {
                return Err(domain!("prefactor alpha must be positive, got {alpha}"));
            }
        }
        let finite = |name: &str, x: f64| {
            if x.is_finite() {
                Ok(())
            } else {
                Err(domain!("parameter {name} must be finite, got {x}"))
            }
        };
        match &self.family {
            Family::Monomial { power } => {
                finite("n", *power)?;
                if *power <= -1.0 {
                    return Err(domain!("monomial power must exceed -1, got {power}"));
                }
            }
            Family::PowerSeries(_) => {}
            Family::SmallExp { a } | Family::BigExp { a } | Family::Trig { a, .. } => {
                finite("a", *a)?
            }
            Family::Bessel { order, a, .. } => {
                finite("a", *a)?;
                if !(*order > -1.0 && order.is_finite()) {
                    return Err(domain!("Bessel order must exceed -1, got {order}"));
                }
                if *a < 0.0 {
                    return Err(domain!("Bessel argument 2 sqrt(a x) needs a >= 0, got {a}"));
                }
            }
            Family::Hyper { a, .. } => finite("a", *a)?,
        }
        Ok(())
    }

    /// Largest `|x|` the family accepts, if bounded.
    pub fn node_bound(&self) -> Option<f64> {
        match &self.family {
            Family::SmallExp { a }
            | Family::Trig {
                family: TrigFamily::Lower,
                a,
                ..
            } => Some(1.0 / a.abs()),
            Family::Bessel {
                kind: BesselKind::First,
                a,
                ..
            } => Some(1.0 / a.abs()),
            Family::PowerSeries(p) => p.radius(),
            Family::Hyper { params, a } => params.radius().map(|r| r / a.abs()),
            _ => None,
        }
    }

    /// Evaluates `f` at a node `x > 0`.
    pub fn eval(&self, x: f64, ctx: &QContext) -> Result<SeriesValue> {
        let base = match &self.family {
            Family::Monomial { power } => SeriesValue::exact_real(pow_node(x, *power)),
            Family::PowerSeries(p) => p.eval(x, ctx)?,
            Family::SmallExp { a } => small_e(Complex::new(a * x, 0.0), ctx)?,
            Family::BigExp { a } => big_e(Complex::new(a * x, 0.0), ctx)?,
            Family::Trig { family, func, a } => q_trig(*family, *func, *a, x, ctx)?,
            Family::Bessel { kind, order, a } => {
                let z = Complex::new(a * x, 0.0).sqrt() * 2.0;
                q_bessel(*kind, *order, z, ctx)?
            }
            Family::Hyper { params, a } => hyper(params, Complex::new(a * x, 0.0), ctx)?,
        };
        Ok(match self.prefactor_alpha {
            Some(alpha) => base.scaled_real(pow_node(x, alpha - 1.0)),
            None => base,
        })
    }
}

impl FunctionSpec {
    /// Evaluates `w f(x)` with `w = exp(ln_w)` for a node `x > 0`.
    ///
    /// Entire families at large arguments are summed with the weight folded
    /// into each term (or into the product form of `E_q`), so a tiny weight
    /// times a huge function value stays finite.
    pub fn eval_weighted(&self, x: f64, ln_w: f64, ctx: &QContext) -> Result<SeriesValue> {
        let ln_w = match self.prefactor_alpha {
            Some(alpha) if alpha != 1.0 => ln_w + (alpha - 1.0) * x.ln(),
            _ => ln_w,
        };
        match &self.family {
            Family::Monomial { power } => {
                Ok(SeriesValue::exact_real((power * x.ln() + ln_w).exp()))
            }
            Family::BigExp { a } if (a * x).abs() > 1.0 => {
                ln_big_e(Complex::new(a * x, 0.0), ln_w, ctx)
            }
            Family::Trig {
                family: TrigFamily::Upper,
                func,
                a,
            } if (a * x).abs() > 1.0 => {
                let t = Complex::new(a * x, 0.0);
                let arg = match func {
                    TrigFn::Sin | TrigFn::Cos => Complex::new(0.0, 1.0) * t,
                    TrigFn::Sinh | TrigFn::Cosh => t,
                };
                let plus = ln_big_e(arg, ln_w, ctx)?;
                let minus = ln_big_e(-arg, ln_w, ctx)?;
                let value = match func {
                    TrigFn::Sin => (plus.value - minus.value) * Complex::new(0.0, -0.5),
                    TrigFn::Sinh => (plus.value - minus.value) * 0.5,
                    TrigFn::Cos | TrigFn::Cosh => (plus.value + minus.value) * 0.5,
                };
                Ok(SeriesValue {
                    value: ensure_finite(value, "weighted q-trig")?,
                    est_error: 0.5 * (plus.est_error + minus.est_error),
                    terms_used: plus.terms_used + minus.terms_used,
                    converged: plus.converged && minus.converged,
                })
            }
            Family::PowerSeries(p) if x > 1.0 && p.radius().is_none() => {
                weighted_series(p.rule.coefficients(ctx)?, x, ln_w, p.max_index, ctx)
            }
            Family::Hyper { params, a } if (a * x).abs() > 1.0 && params.radius().is_none() => {
                let rule = CoefficientRule::Hyper {
                    params: params.clone(),
                    a: *a,
                };
                weighted_series(rule.coefficients(ctx)?, x, ln_w, None, ctx)
            }
            _ => {
                let bare = FunctionSpec::new(self.family.clone());
                Ok(bare.eval(x, ctx)?.scaled_real(ln_w.exp()))
            }
        }
    }
}

/// `w sum A_n x^n` with each term carried as a log-magnitude and a phase,
/// so `x^n` may pass the float range while the terms stay finite.
fn weighted_series(
    mut coeffs: Coefficients,
    x: f64,
    ln_w: f64,
    max_index: Option<usize>,
    ctx: &QContext,
) -> Result<SeriesValue> {
    let ln_x = x.abs().ln();
    let mut settle = Settle::new(ctx, "weighted power series").hold_until(coeffs.min_terms());
    let mut last = f64::INFINITY;
    let mut n = 0usize;
    while let Some((ln_c, phase)) = coeffs.next_log()? {
        let ln_term = ln_c + n as f64 * ln_x + ln_w;
        let sign = if x < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        let step = settle.push(phase * (sign * ln_term.exp()))?;
        if max_index == Some(n) {
            break;
        }
        // Small terms do not count while the terms are still growing.
        if step == Step::Done && (ln_term <= last || n + 1 >= ctx.max_terms()) {
            return settle.finish();
        }
        last = ln_term;
        n += 1;
    }
    settle.finish_exhausted()
}

/// `exp(ln_w) E_q(z)` through `ln E_q(z) = sum_j ln(1 - z q^j)`.
fn ln_big_e(z: Complex, ln_w: f64, ctx: &QContext) -> Result<SeriesValue> {
    let q = ctx.q();
    let floor = 1e-17 * (1.0 - q);
    let mut ln = Complex::new(0.0, 0.0);
    let mut rounding = 0.0;
    let mut t = z;
    let mut terms = 0;
    let mut converged = false;
    while terms < ctx.max_terms() {
        if t.norm() < floor {
            converged = true;
            break;
        }
        let f = Complex::new(1.0, 0.0) - t;
        if f == Complex::new(0.0, 0.0) {
            return Ok(SeriesValue::exact_real(0.0));
        }
        let l = f.ln();
        ln += l;
        rounding += l.norm();
        t *= q;
        terms += 1;
    }
    let value = ensure_finite((ln + ln_w).exp(), "weighted E_q")?;
    let rel = t.norm() / (1.0 - q) + rounding * f64::EPSILON;
    Ok(SeriesValue {
        value,
        est_error: value.norm() * rel,
        terms_used: terms,
        converged,
    })
}

fn pow_node(x: f64, p: f64) -> f64 {
    if p == 0.0 {
        1.0
    } else {
        x.powf(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::QParam;
    use alloc::vec;
    use alloc::vec::Vec;

    fn take(rule: &CoefficientRule, n: usize, cx: &QContext) -> Vec<Complex> {
        let mut g = rule.coefficients(cx).unwrap();
        (0..n).map(|_| g.next_coefficient().unwrap()).collect()
    }

    #[test]
    fn coefficient_rules() {
        let cx = QContext::new(0.5).unwrap();
        let f = take(&CoefficientRule::InverseFactorial, 5, &cx);
        assert!((f[4].re - 1.0 / 24.0).abs() < 1e-16);
        let g = take(&CoefficientRule::Geometric { ratio: -0.5 }, 4, &cx);
        assert_eq!(g[3].re, -0.125);
        let e = take(&CoefficientRule::SmallQExp { a: 2.0 }, 3, &cx);
        assert!((e[2].re - 4.0 / (0.5 * 0.75)).abs() < 1e-14);
        let big = take(&CoefficientRule::BigQExp { a: 2.0 }, 3, &cx);
        assert!((big[2].re - 0.5 * 4.0 / (0.5 * 0.75)).abs() < 1e-14);
        assert!((big[1].re + 2.0 / 0.5).abs() < 1e-14);
    }

    #[test]
    fn bessel_coefficients_reproduce_the_function() {
        let cx = QContext::new(0.5).unwrap();
        let (mu, a, x) = (0.75, 0.6, 0.8);
        let series = PowerSeriesSpec::new(CoefficientRule::QBessel { mu, a });
        let lhs = series.eval(x, &cx).unwrap().value * cpow(Complex::new(x, 0.0), mu).unwrap();
        let z = Complex::new(2.0 * (a * x).sqrt(), 0.0);
        let rhs = q_bessel(BesselKind::First, 2.0 * mu, z, &cx).unwrap().value;
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn hyper_coefficients_reproduce_the_function() {
        let cx = QContext::new(0.4).unwrap();
        let params = HyperParams::phi(
            vec![QParam::real(0.3), QParam::QPower(1.5)],
            vec![QParam::real(-0.2)],
        );
        let (a, x) = (0.7, 0.9);
        let series = PowerSeriesSpec::new(CoefficientRule::Hyper {
            params: params.clone(),
            a,
        });
        let lhs = series.eval(x, &cx).unwrap().value;
        let rhs = hyper(&params, Complex::new(a * x, 0.0), &cx).unwrap().value;
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn truncated_series_is_a_polynomial() {
        let cx = QContext::new(0.5).unwrap();
        let p = PowerSeriesSpec::truncated(CoefficientRule::Unit, 3);
        let out = p.eval(2.0, &cx).unwrap();
        assert!(out.converged);
        assert_eq!(out.re(), 15.0);
        assert!(PowerSeriesSpec::new(CoefficientRule::Unit)
            .eval(2.0, &cx)
            .is_err());
    }

    #[test]
    fn spec_validation_and_eval() {
        let cx = QContext::new(0.5).unwrap();
        assert!(FunctionSpec::monomial(-1.0).validate().is_err());
        assert!(
            FunctionSpec::with_prefactor(Family::Monomial { power: 0.0 }, 0.0)
                .validate()
                .is_err()
        );
        let f = FunctionSpec::with_prefactor(Family::Monomial { power: 2.0 }, 1.5);
        assert!((f.eval(4.0, &cx).unwrap().re() - 32.0).abs() < 1e-12);
        let e = FunctionSpec::new(Family::SmallExp { a: 0.5 });
        assert_eq!(e.node_bound(), Some(2.0));
        assert!(e.eval(3.0, &cx).is_err());
    }

    #[test]
    fn long_series_beyond_one_stays_finite() {
        let cx = QContext::builder(0.3).max_terms(50_000).build().unwrap();
        let s = PowerSeriesSpec::new(CoefficientRule::Geometric { ratio: 0.5 });
        let v = s.eval(1.98, &cx).unwrap();
        assert!((v.re() - 100.0).abs() < 1e-7, "{v:?}");
        let v = s.eval(-1.98, &cx).unwrap();
        assert!((v.re() - 1.0 / 1.99).abs() < 1e-12, "{v:?}");
    }

    #[test]
    fn explicit_coefficients_with_gaps() {
        let cx = QContext::new(0.5).unwrap();
        let rule = CoefficientRule::Explicit {
            coeffs: vec![1.0, 0.0, 0.0, 0.0, 0.0, -2.0],
        };
        let p = PowerSeriesSpec::new(rule.clone());
        let out = p.eval(1.5, &cx).unwrap();
        assert!(out.converged);
        assert!((out.re() - (1.0 - 2.0 * 1.5f64.powi(5))).abs() < 1e-12);
        let mut c = rule.coefficients(&cx).unwrap();
        assert_eq!(c.next_log().unwrap(), Some((0.0, Complex::new(1.0, 0.0))));
        assert_eq!(c.next_log().unwrap().unwrap().0, f64::NEG_INFINITY);
    }

    #[test]
    fn weighted_eval_matches_scaled_eval() {
        let cx = QContext::new(0.5).unwrap();
        let specs = [
            FunctionSpec::new(Family::BigExp { a: 0.7 }),
            FunctionSpec::new(Family::Trig {
                family: TrigFamily::Upper,
                func: TrigFn::Cos,
                a: 0.9,
            }),
            FunctionSpec::new(Family::Trig {
                family: TrigFamily::Upper,
                func: TrigFn::Sinh,
                a: 0.9,
            }),
            FunctionSpec::with_prefactor(
                Family::PowerSeries(PowerSeriesSpec::new(CoefficientRule::InverseFactorial)),
                1.5,
            ),
            FunctionSpec::new(Family::Hyper {
                params: HyperParams::big_phi(vec![QParam::real(0.3)], vec![], 1),
                a: 0.8,
            }),
        ];
        for f in &specs {
            for &x in &[0.5, 3.0, 12.0] {
                let direct = f.eval(x, &cx).unwrap().value * 0.25;
                let weighted = f.eval_weighted(x, 0.25f64.ln(), &cx).unwrap().value;
                assert!(
                    (direct - weighted).norm() < 1e-11 * direct.norm().max(1.0),
                    "{f:?} x={x}"
                );
            }
        }
    }

    #[test]
    fn weighted_eval_survives_huge_nodes() {
        let cx = QContext::new(0.5).unwrap();
        let f = FunctionSpec::new(Family::BigExp { a: 1.0 });
        let x = 1.5 * 2f64.powi(70);
        assert!(f.eval(x, &cx).is_err());
        let w = f.eval_weighted(x, -1500.0, &cx).unwrap();
        assert!(w.value.is_finite() && w.value.norm() > 0.0);
        // Nodes at q^{-m} hit the zeros of E_q(x).
        assert_eq!(
            f.eval_weighted(2f64.powi(70), 0.0, &cx).unwrap().value,
            Complex::new(0.0, 0.0)
        );
    }
}
