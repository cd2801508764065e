//! The base `q` together with the truncation policy.

use crate::error::{QError, Result};
use crate::series::KahanSum;
#[allow(unused_imports)]
use num_traits::Float;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_TERMS: usize = 10_000;
pub const DEFAULT_SETTLE_COUNT: usize = 3;

/// Immutable evaluation context: the base `q` in (0, 1), the settle policy,
/// and memoized constants derived from `q`.
///
/// The memo is filled once at construction, so a context can be shared
/// between threads by reference without any synchronization.
#[derive(Debug, Clone, PartialEq)]
pub struct QContext {
    q: f64,
    tol: f64,
    max_terms: usize,
    settle_count: usize,
    ln_q: f64,
    /// ln (q;q)_inf, summed to machine precision independently of `tol`.
    ln_qq_inf: f64,
}

impl QContext {
    /// Context with the default truncation policy.
    pub fn new(q: f64) -> Result<Self> {
        Self::builder(q).build()
    }

    pub fn builder(q: f64) -> QContextBuilder {
        QContextBuilder {
            q,
            tol: DEFAULT_TOL,
            max_terms: DEFAULT_MAX_TERMS,
            settle_count: DEFAULT_SETTLE_COUNT,
        }
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn settle_count(&self) -> usize {
        self.settle_count
    }

    pub fn ln_q(&self) -> f64 {
        self.ln_q
    }

    /// `q^x` for real `x`.
    pub fn pow(&self, x: f64) -> f64 {
        (self.ln_q * x).exp()
    }

    /// ln (q;q)_inf.
    pub fn ln_qq_inf(&self) -> f64 {
        self.ln_qq_inf
    }

    /// (q;q)_inf. Underflows to zero once q gets within ~2.4e-3 of 1; use
    /// [`ln_qq_inf`](Self::ln_qq_inf) there.
    pub fn qq_inf(&self) -> f64 {
        self.ln_qq_inf.exp()
    }

    /// Same base, different policy. Recomputes nothing but the policy.
    pub fn with_policy(&self, tol: f64, max_terms: usize, settle_count: usize) -> Result<Self> {
        validate_policy(tol, max_terms, settle_count)?;
        Ok(Self {
            tol,
            max_terms,
            settle_count,
            ..self.clone()
        })
    }
}

#[derive(Debug, Clone)]
pub struct QContextBuilder {
    q: f64,
    tol: f64,
    max_terms: usize,
    settle_count: usize,
}

impl QContextBuilder {
    pub fn tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn settle_count(mut self, settle_count: usize) -> Self {
        self.settle_count = settle_count;
        self
    }

    pub fn build(self) -> Result<QContext> {
        let q = self.q;
        if !(q > 0.0 && q < 1.0) {
            return Err(QError::InvalidContext(alloc::format!(
                "q must lie in (0, 1), got {q}"
            )));
        }
        validate_policy(self.tol, self.max_terms, self.settle_count)?;
        Ok(QContext {
            q,
            tol: self.tol,
            max_terms: self.max_terms,
            settle_count: self.settle_count,
            ln_q: q.ln(),
            ln_qq_inf: ln_qq_inf_full(q),
        })
    }
}

fn validate_policy(tol: f64, max_terms: usize, settle_count: usize) -> Result<()> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(QError::InvalidContext(alloc::format!(
            "tol must be positive, got {tol}"
        )));
    }
    if max_terms == 0 {
        return Err(QError::InvalidContext(
            "max_terms must be at least 1".into(),
        ));
    }
    if settle_count == 0 {
        return Err(QError::InvalidContext(
            "settle_count must be at least 1".into(),
        ));
    }
    Ok(())
}

/// ln (q;q)_inf to machine precision.
///
/// Direct summation of ln(1 - q^k) for moderate q. Closer to 1 the sum needs
/// O(1/(1-q)) terms, so the Dedekind-eta modular relation is used instead:
/// with q = e^{-t} and p = e^{-4 pi^2 / t},
/// ln (q;q)_inf = ln(2 pi / t) / 2 - pi^2 / (6t) + t / 24 + ln (p;p)_inf.
fn ln_qq_inf_full(q: f64) -> f64 {
    if q > 0.99 {
        let t = -q.ln();
        let pi = core::f64::consts::PI;
        let p = (-4.0 * pi * pi / t).exp();
        return 0.5 * (2.0 * pi / t).ln() - pi * pi / (6.0 * t) + t / 24.0 + ln_qq_direct(p);
    }
    ln_qq_direct(q)
}

/// Sum of ln(1 - q^k), k >= 1, until the geometric tail q^k / (1 - q) is
/// below 1e-18.
fn ln_qq_direct(q: f64) -> f64 {
    if q == 0.0 {
        return 0.0;
    }
    let stop = 1e-18 * (1.0 - q);
    let mut acc = KahanSum::default();
    let mut qk = q;
    while qk >= stop {
        acc.add((-qk).ln_1p());
        qk *= q;
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_base() {
        for q in [0.0, 1.0, -0.5, 1.5, f64::NAN] {
            assert!(matches!(QContext::new(q), Err(QError::InvalidContext(_))));
        }
    }

    #[test]
    fn rejects_bad_policy() {
        assert!(QContext::builder(0.5).tol(0.0).build().is_err());
        assert!(QContext::builder(0.5).max_terms(0).build().is_err());
        assert!(QContext::builder(0.5).settle_count(0).build().is_err());
    }

    #[test]
    fn cached_euler_product_matches_direct_product() {
        let ctx = QContext::new(0.5).unwrap();
        let mut p = 1.0;
        let mut qk = 0.5;
        for _ in 0..200 {
            p *= 1.0 - qk;
            qk *= 0.5;
        }
        assert!((ctx.qq_inf() - p).abs() < 1e-15);
        assert!((ctx.qq_inf() - 0.288_788_095_086_602_4).abs() < 1e-15);
    }

    #[test]
    fn modular_branch_agrees_with_direct_sum() {
        for q in [0.991, 0.995, 0.999] {
            let direct = ln_qq_direct(q);
            let modular = ln_qq_inf_full(q);
            assert!((direct - modular).abs() < 1e-10 * direct.abs(), "q={q}");
        }
    }
}
