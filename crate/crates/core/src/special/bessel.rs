use crate::calculus::reciprocal_qq_real;
use crate::context::QContext;
use crate::error::{domain, pole, Result};
use crate::series::{ensure_finite, Complex, SeriesValue, Settle, Step};
#[allow(unused_imports)]
use num_traits::Float;

/// The three Jackson-type q-Bessel functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKind {
    /// `(z/2)^v sum (-z^2/4)^n / ((q;q)_{v+n} (q;q)_n)`, for `|z| < 2`.
    First,
    /// `(z/2)^v sum q^{n(n+v)} (-z^2/4)^n / ((q;q)_{v+n} (q;q)_n)`.
    Second,
    /// `z^v sum (-1)^n q^{n(n+1)/2} z^{2n} / ((q;q)_{v+n} (q;q)_n)`.
    Third,
}

impl BesselKind {
    pub fn from_index(kind: u8) -> Option<Self> {
        match kind {
            1 => Some(BesselKind::First),
            2 => Some(BesselKind::Second),
            3 => Some(BesselKind::Third),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            BesselKind::First => 1,
            BesselKind::Second => 2,
            BesselKind::Third => 3,
        }
    }
}

/// `z^p` on the principal branch, with `0^0 = 1`.
pub(crate) fn cpow(z: Complex, p: f64) -> Result<Complex> {
    if p == 0.0 {
        return Ok(Complex::new(1.0, 0.0));
    }
    if z == Complex::new(0.0, 0.0) {
        if p > 0.0 {
            return Ok(z);
        }
        return Err(pole!("0 raised to the power {p}"));
    }
    if z.im == 0.0 && z.re > 0.0 {
        return Ok(Complex::new(z.re.powf(p), 0.0));
    }
    ensure_finite(z.powf(p), "complex power")
}

/// q-Bessel function of the given kind and order `v > -1`.
pub fn q_bessel(kind: BesselKind, v: f64, z: Complex, ctx: &QContext) -> Result<SeriesValue> {
    ensure_finite(z, "q-Bessel argument")?;
    if !(v > -1.0 && v.is_finite()) {
        return Err(domain!("q-Bessel order must exceed -1, got {v}"));
    }
    if kind == BesselKind::First && z.norm() >= 2.0 {
        return Err(domain!(
            "first-kind q-Bessel series needs |z| < 2, got |z| = {}",
            z.norm()
        ));
    }
    let q = ctx.q();
    let (prefactor, step) = match kind {
        BesselKind::First | BesselKind::Second => (cpow(z / 2.0, v)?, -z * z / 4.0),
        BesselKind::Third => (cpow(z, v)?, -z * z * q),
    };

    let mut settle = Settle::new(ctx, "q-Bessel series");
    let mut term = Complex::new(reciprocal_qq_real(v, ctx)?, 0.0);
    let mut qn1 = q;
    let mut qvn1 = ctx.pow(v + 1.0);
    // Extra per-step q-power: q^{2n+1+v} for the second kind, q^n for the third.
    let mut extra = match kind {
        BesselKind::First => 1.0,
        BesselKind::Second => ctx.pow(v + 1.0),
        BesselKind::Third => 1.0,
    };
    let q2 = q * q;
    while settle.push(term)? == Step::Continue {
        term *= step * extra / ((1.0 - qvn1) * (1.0 - qn1));
        match kind {
            BesselKind::First => {}
            BesselKind::Second => extra *= q2,
            BesselKind::Third => extra = qn1,
        }
        qn1 *= q;
        qvn1 *= q;
    }
    Ok(settle.finish()?.scaled(prefactor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{q_pochhammer, q_pochhammer_real};
    use crate::error::QError;

    fn c(x: f64) -> Complex {
        Complex::new(x, 0.0)
    }

    fn direct(kind: BesselKind, v: f64, z: Complex, cx: &QContext) -> Complex {
        let q = cx.q();
        let mut acc = c(0.0);
        for n in 0..200u32 {
            let nf = n as f64;
            let den = q_pochhammer_real(c(q), v + nf, cx).unwrap() * q_pochhammer(c(q), n, cx);
            let t = match kind {
                BesselKind::First => (-z * z / 4.0).powu(n),
                BesselKind::Second => (-z * z / 4.0).powu(n) * q.powf(nf * (nf + v)),
                BesselKind::Third => {
                    (-1.0f64).powi(n as i32) * q.powf(nf * (nf + 1.0) / 2.0) * z.powu(2 * n)
                }
            };
            acc += t / den;
        }
        acc * match kind {
            BesselKind::Third => z.powf(v),
            _ => (z / 2.0).powf(v),
        }
    }

    #[test]
    fn value_at_origin() {
        let cx = QContext::new(0.5).unwrap();
        for kind in [BesselKind::First, BesselKind::Second, BesselKind::Third] {
            assert_eq!(q_bessel(kind, 0.0, c(0.0), &cx).unwrap().value, c(1.0));
            assert_eq!(q_bessel(kind, 1.5, c(0.0), &cx).unwrap().value, c(0.0));
        }
    }

    #[test]
    fn matches_brute_force_sums() {
        let cx = QContext::new(0.5).unwrap();
        for kind in [BesselKind::First, BesselKind::Second, BesselKind::Third] {
            for &(v, z) in &[
                (1.0, c(0.5)),
                (0.0, c(1.3)),
                (2.5, c(0.8)),
                (0.5, Complex::new(0.4, 0.9)),
            ] {
                let got = q_bessel(kind, v, z, &cx).unwrap();
                let want = direct(kind, v, z, &cx);
                assert!(got.converged);
                assert!(
                    (got.value - want).norm() < 1e-12 * want.norm().max(1.0),
                    "{kind:?} v={v} z={z}"
                );
            }
        }
    }

    #[test]
    fn small_argument_leading_term() {
        let cx = QContext::new(0.5).unwrap();
        for v in [0.0, 1.0, 2.5] {
            let z = 1e-4;
            let got = q_bessel(BesselKind::First, v, c(z), &cx).unwrap().re();
            let lead = reciprocal_qq_real(v, &cx).unwrap();
            assert!((got / (z / 2.0).powf(v) - lead).abs() < 1e-6);
        }
    }

    #[test]
    fn domain_checks() {
        let cx = QContext::new(0.5).unwrap();
        assert!(matches!(
            q_bessel(BesselKind::First, 0.0, c(2.0), &cx),
            Err(QError::Domain(_))
        ));
        assert!(
            q_bessel(BesselKind::Second, 0.0, c(5.0), &cx)
                .unwrap()
                .converged
        );
        assert!(matches!(
            q_bessel(BesselKind::Third, -1.0, c(0.5), &cx),
            Err(QError::Domain(_))
        ));
        assert!(matches!(
            q_bessel(BesselKind::Third, -0.5, c(0.0), &cx),
            Err(QError::Pole(_))
        ));
    }
}
