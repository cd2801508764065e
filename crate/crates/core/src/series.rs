//! Truncated-series results and the settle criterion shared by every sum and
//! product in the crate.
//!
//! A one-sided series is stopped once `settle_count` consecutive terms satisfy
//! `|term| < tol * |partial|`, where the comparison switches to `|term| < tol`
//! while the partial sum itself is below `tol`. The reported error estimate is
//! the summed magnitude of the last `settle_count` terms.

use alloc::collections::VecDeque;

use crate::context::QContext;
use crate::error::{QError, Result};

pub type Complex = num_complex::Complex64;

/// Outcome of a truncated series or product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex,
    /// Summed magnitude of the last `settle_count` terms; never negative.
    pub est_error: f64,
    pub terms_used: usize,
    /// False when the term budget ran out before the settle criterion fired.
    pub converged: bool,
}

impl SeriesValue {
    /// A value known in closed form.
    pub fn exact(value: Complex) -> Self {
        Self {
            value,
            est_error: 0.0,
            terms_used: 0,
            converged: true,
        }
    }

    pub fn exact_real(value: f64) -> Self {
        Self::exact(Complex::new(value, 0.0))
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }

    /// Multiplies the value and the error estimate by `factor`.
    pub fn scaled(self, factor: Complex) -> Self {
        Self {
            value: self.value * factor,
            est_error: self.est_error * factor.norm(),
            ..self
        }
    }

    pub fn scaled_real(self, factor: f64) -> Self {
        self.scaled(Complex::new(factor, 0.0))
    }

    /// Sum of two independently truncated quantities.
    pub fn add(self, other: Self) -> Self {
        Self {
            value: self.value + other.value,
            est_error: self.est_error + other.est_error,
            terms_used: self.terms_used + other.terms_used,
            converged: self.converged && other.converged,
        }
    }

    pub fn sub(self, other: Self) -> Self {
        self.add(other.scaled_real(-1.0))
    }
}

pub(crate) fn ensure_finite(z: Complex, what: &'static str) -> Result<Complex> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(QError::NonFinite(what))
    }
}

/// What the accumulator decided after a term was pushed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Continue,
    Done,
}

/// Running sum with the settle criterion.
pub(crate) struct Settle {
    tol: f64,
    settle_count: usize,
    max_terms: usize,
    min_terms: usize,
    sum: Complex,
    comp: Complex,
    run: usize,
    window: VecDeque<f64>,
    terms: usize,
    converged: bool,
    what: &'static str,
}

impl Settle {
    pub(crate) fn new(ctx: &QContext, what: &'static str) -> Self {
        Self::with_policy(ctx.tol(), ctx.settle_count(), ctx.max_terms(), what)
    }

    pub(crate) fn with_policy(
        tol: f64,
        settle_count: usize,
        max_terms: usize,
        what: &'static str,
    ) -> Self {
        Self {
            tol,
            settle_count,
            max_terms,
            min_terms: 0,
            sum: Complex::new(0.0, 0.0),
            comp: Complex::new(0.0, 0.0),
            run: 0,
            window: VecDeque::with_capacity(settle_count),
            terms: 0,
            converged: false,
            what,
        }
    }

    /// Ignores small terms until `n` terms have been pushed. Used when the
    /// terms are known to grow before they decay.
    pub(crate) fn hold_until(mut self, n: usize) -> Self {
        self.min_terms = n;
        self
    }

    pub(crate) fn partial(&self) -> Complex {
        self.sum + self.comp
    }

    /// Adds a term (Neumaier-compensated) and reports whether to stop.
    pub(crate) fn push(&mut self, term: Complex) -> Result<Step> {
        ensure_finite(term, self.what)?;
        self.sum = neumaier(self.sum, term, &mut self.comp);
        self.terms += 1;
        let mag = term.norm();
        if self.window.len() == self.settle_count {
            self.window.pop_front();
        }
        self.window.push_back(mag);

        let partial = self.partial().norm();
        let threshold = if partial < self.tol {
            self.tol
        } else {
            self.tol * partial
        };
        if mag < threshold && self.terms > self.min_terms {
            self.run += 1;
        } else {
            self.run = 0;
        }
        if self.run >= self.settle_count {
            self.converged = true;
            return Ok(Step::Done);
        }
        if self.terms >= self.max_terms {
            return Ok(Step::Done);
        }
        Ok(Step::Continue)
    }

    /// Ends a series that terminated on its own (finite sum); the result is
    /// converged regardless of the run length.
    pub(crate) fn finish_exhausted(mut self) -> Result<SeriesValue> {
        self.converged = true;
        self.finish()
    }

    pub(crate) fn finish(self) -> Result<SeriesValue> {
        let value = ensure_finite(self.partial(), self.what)?;
        Ok(SeriesValue {
            value,
            est_error: self.window.iter().sum(),
            terms_used: self.terms,
            converged: self.converged,
        })
    }
}

fn neumaier(sum: Complex, term: Complex, comp: &mut Complex) -> Complex {
    let re = neumaier_1(sum.re, term.re, &mut comp.re);
    let im = neumaier_1(sum.im, term.im, &mut comp.im);
    Complex::new(re, im)
}

fn neumaier_1(sum: f64, term: f64, comp: &mut f64) -> f64 {
    let t = sum + term;
    if sum.abs() >= term.abs() {
        *comp += (sum - t) + term;
    } else {
        *comp += (term - t) + sum;
    }
    t
}

/// Compensated real sum used by the log-domain products.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub(crate) fn add(&mut self, x: f64) {
        self.sum = neumaier_1(self.sum, x, &mut self.comp);
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
