//! Closed-form right-hand sides of the transform theorems and corollaries,
//! evaluated exactly as stated, for use as oracles against the series
//! engine.

mod compare;
mod eval;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use compare::{compare, compare_with, ComparisonRow, Tolerance};
pub use eval::oracle_eval;

use crate::error::{domain, QError, Result};
use crate::special::{BesselKind, HyperParams, HyperVariant, TrigFamily, TrigFn};
use crate::transform::{Family, FunctionSpec, PowerSeriesSpec, Transform, TransformQuery};

/// Which one-variable specialization a corollary states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Sumudu,
    Laplace,
}

/// Natural, Laplace or Sumudu form of a second-type result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    Natural,
    Laplace,
    Sumudu,
}

/// Oracle identifiers without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OracleId {
    Thm1,
    Thm2i,
    Thm2ii,
    Monomial,
    EexpPhi,
    Thm3,
    Eexp,
    SinLower,
    CosLower,
    Cor4,
    Cor5,
    Cor7,
    Cor8,
    Thm9,
    MonomialT2,
    Cor10,
    Thm11,
    Cor12,
    EexpT2,
    Eq42,
    Cor14,
}

impl OracleId {
    pub const ALL: [OracleId; 21] = [
        OracleId::Thm1,
        OracleId::Thm2i,
        OracleId::Thm2ii,
        OracleId::Monomial,
        OracleId::EexpPhi,
        OracleId::Thm3,
        OracleId::Eexp,
        OracleId::SinLower,
        OracleId::CosLower,
        OracleId::Cor4,
        OracleId::Cor5,
        OracleId::Cor7,
        OracleId::Cor8,
        OracleId::Thm9,
        OracleId::MonomialT2,
        OracleId::Cor10,
        OracleId::Thm11,
        OracleId::Cor12,
        OracleId::EexpT2,
        OracleId::Eq42,
        OracleId::Cor14,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OracleId::Thm1 => "thm1",
            OracleId::Thm2i => "thm2i",
            OracleId::Thm2ii => "thm2ii",
            OracleId::Monomial => "monomial",
            OracleId::EexpPhi => "Eexp_phi",
            OracleId::Thm3 => "thm3",
            OracleId::Eexp => "eexp",
            OracleId::SinLower => "sin_lower",
            OracleId::CosLower => "cos_lower",
            OracleId::Cor4 => "cor4",
            OracleId::Cor5 => "cor5",
            OracleId::Cor7 => "cor7",
            OracleId::Cor8 => "cor8",
            OracleId::Thm9 => "thm9",
            OracleId::MonomialT2 => "monomial_t2",
            OracleId::Cor10 => "cor10",
            OracleId::Thm11 => "thm11",
            OracleId::Cor12 => "cor12",
            OracleId::EexpT2 => "Eexp_t2",
            OracleId::Eq42 => "eq42",
            OracleId::Cor14 => "cor14",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.name() == name)
    }

    /// Function families (by [`Family::name`]) the oracle can describe.
    pub fn family_names(self) -> &'static [&'static str] {
        match self {
            OracleId::Thm1 | OracleId::Thm9 => &["series"],
            OracleId::Thm2i | OracleId::Monomial | OracleId::MonomialT2 | OracleId::Cor10 => {
                &["monomial"]
            }
            OracleId::Thm2ii | OracleId::Thm3 | OracleId::Thm11 | OracleId::Cor12 => &["hyper"],
            OracleId::EexpPhi | OracleId::EexpT2 | OracleId::Eq42 => &["Eexp"],
            OracleId::Eexp => &["eexp"],
            OracleId::SinLower | OracleId::CosLower | OracleId::Cor4 | OracleId::Cor14 => &["trig"],
            OracleId::Cor5 | OracleId::Cor7 | OracleId::Cor8 => &["bessel"],
        }
    }

    /// Transforms the oracle states a value for.
    pub fn transforms(self) -> &'static [Transform] {
        use Transform::*;
        match self {
            OracleId::Thm1
            | OracleId::Thm2i
            | OracleId::Thm2ii
            | OracleId::Monomial
            | OracleId::EexpPhi
            | OracleId::Thm3
            | OracleId::Eexp
            | OracleId::SinLower
            | OracleId::CosLower
            | OracleId::Cor5 => &[Nq],
            OracleId::Cor4 | OracleId::Cor7 | OracleId::Cor8 => &[Sq, Lq],
            OracleId::Thm9 | OracleId::MonomialT2 | OracleId::Thm11 | OracleId::Eq42 => &[QN],
            OracleId::Cor10 | OracleId::Cor12 => &[QS, QL],
            OracleId::EexpT2 | OracleId::Cor14 => &[QN, QL, QS],
        }
    }
}

/// A closed-form right-hand side together with its free symbols.
#[derive(Debug, Clone, PartialEq)]
pub enum Oracle {
    /// `(1-q)^(alpha-1) u^(alpha-1) / v^alpha * sum A_n (u/v)^n (1-q)^n Gamma_q(alpha+n)`.
    Thm1 {
        alpha: f64,
        series: PowerSeriesSpec,
    },
    /// `(1-q)^(alpha-1) u^(alpha-1) Gamma_q(alpha) / v^alpha`.
    Thm2i {
        alpha: f64,
    },
    /// Theorem 1 prefactor times `Phi[a.., q^alpha; b.., 0 | q, a u/v]`.
    Thm2ii {
        alpha: f64,
        params: HyperParams,
        a: f64,
    },
    /// `(1-q)^n u^n ([n]_q)! / v^(n+1)`.
    Monomial {
        n: u32,
    },
    /// `(1/v) 1Phi1[q; 0 | q, a u/v]`.
    EexpPhi {
        a: f64,
    },
    /// Theorem 1 prefactor times `phi[a.., q^alpha; b.. | q, a u/v]`.
    Thm3 {
        alpha: f64,
        params: HyperParams,
        a: f64,
    },
    /// `1 / (v - a u)`.
    Eexp {
        a: f64,
    },
    /// `a u / (v^2 + a^2 u^2)`.
    SinLower {
        a: f64,
    },
    /// `v / (v^2 + a^2 u^2)`.
    CosLower {
        a: f64,
    },
    Cor4 {
        func: TrigFn,
        side: Side,
        a: f64,
    },
    /// `(1-q)^(alpha-1) u^(alpha-1) Gamma_q(alpha) / v^alpha * sum A_n (u/v)^n (q^alpha;q)_n`
    /// with the Bessel coefficients `A_n`.
    Cor5 {
        alpha: f64,
        mu: f64,
        a: f64,
    },
    Cor7 {
        side: Side,
        alpha: f64,
        mu: f64,
        a: f64,
    },
    Cor8 {
        side: Side,
        alpha: f64,
        mu: f64,
        a: f64,
    },
    /// `(u/v)^alpha (1-q)^(alpha-1) Gamma_q(alpha) sum A_n (q^alpha;q)_n (u/v)^n / K(u/v; alpha+n)`.
    Thm9 {
        alpha: f64,
        series: PowerSeriesSpec,
    },
    /// `(u/v)^(alpha-1) (1-q)^(alpha-1) Gamma_q(alpha) / K(u/v; alpha)`.
    MonomialT2 {
        alpha: f64,
    },
    Cor10 {
        side: Side,
        alpha: f64,
    },
    /// `(u/v)^alpha (1-q)^(alpha-1) Gamma_q(alpha) / K(u/v; alpha)`
    /// times `Phi[a.., q^alpha; b.. | q, a u / (v q^alpha)]`.
    Thm11 {
        alpha: f64,
        params: HyperParams,
        a: f64,
    },
    Cor12 {
        side: Side,
        alpha: f64,
        params: HyperParams,
        a: f64,
    },
    /// `q u / (q v + a u)` and its Laplace and Sumudu forms.
    EexpT2 {
        form: Form,
        a: f64,
    },
    /// `u / (v K(u/v; 1))` times the stated value `a u / (q v + a u)` of the
    /// `1Phi0` sum.
    Eq42 {
        a: f64,
    },
    Cor14 {
        func: TrigFn,
        form: Form,
        a: f64,
    },
}

fn incompatible(id: OracleId, query: &TransformQuery) -> QError {
    QError::Incompatible(format!(
        "oracle '{}' does not describe {} of '{}'",
        id.name(),
        query.transform.name(),
        query.f.family.name()
    ))
}

fn side_of(t: Transform) -> Side {
    match t {
        Transform::Lq | Transform::QL => Side::Laplace,
        _ => Side::Sumudu,
    }
}

fn form_of(t: Transform) -> Form {
    match t {
        Transform::Lq | Transform::QL => Form::Laplace,
        Transform::Sq | Transform::QS => Form::Sumudu,
        Transform::Nq | Transform::QN => Form::Natural,
    }
}

/// `f` rewritten so that equal functions compare equal: the prefactor is
/// folded into monomials and `alpha = 1` is dropped.
fn canonical(f: &FunctionSpec) -> FunctionSpec {
    let alpha = f.prefactor_alpha.unwrap_or(1.0);
    match f.family {
        Family::Monomial { power } => FunctionSpec::monomial(power + alpha - 1.0),
        _ if alpha == 1.0 => FunctionSpec::new(f.family.clone()),
        _ => f.clone(),
    }
}

fn with_alpha(family: Family, alpha: f64) -> FunctionSpec {
    if alpha == 1.0 {
        FunctionSpec::new(family)
    } else {
        FunctionSpec::with_prefactor(family, alpha)
    }
}

impl Oracle {
    pub fn id(&self) -> OracleId {
        match self {
            Oracle::Thm1 { .. } => OracleId::Thm1,
            Oracle::Thm2i { .. } => OracleId::Thm2i,
            Oracle::Thm2ii { .. } => OracleId::Thm2ii,
            Oracle::Monomial { .. } => OracleId::Monomial,
            Oracle::EexpPhi { .. } => OracleId::EexpPhi,
            Oracle::Thm3 { .. } => OracleId::Thm3,
            Oracle::Eexp { .. } => OracleId::Eexp,
            Oracle::SinLower { .. } => OracleId::SinLower,
            Oracle::CosLower { .. } => OracleId::CosLower,
            Oracle::Cor4 { .. } => OracleId::Cor4,
            Oracle::Cor5 { .. } => OracleId::Cor5,
            Oracle::Cor7 { .. } => OracleId::Cor7,
            Oracle::Cor8 { .. } => OracleId::Cor8,
            Oracle::Thm9 { .. } => OracleId::Thm9,
            Oracle::MonomialT2 { .. } => OracleId::MonomialT2,
            Oracle::Cor10 { .. } => OracleId::Cor10,
            Oracle::Thm11 { .. } => OracleId::Thm11,
            Oracle::Cor12 { .. } => OracleId::Cor12,
            Oracle::EexpT2 { .. } => OracleId::EexpT2,
            Oracle::Eq42 { .. } => OracleId::Eq42,
            Oracle::Cor14 { .. } => OracleId::Cor14,
        }
    }

    /// Checks that the parameters are complete and admissible.
    pub fn validate(&self) -> Result<()> {
        let positive = |alpha: f64| {
            if alpha > 0.0 && alpha.is_finite() {
                Ok(())
            } else {
                Err(domain!("oracle needs alpha > 0, got {alpha}"))
            }
        };
        let finite = |a: f64| {
            if a.is_finite() {
                Ok(())
            } else {
                Err(domain!("oracle needs a finite parameter a, got {a}"))
            }
        };
        let variant = |p: &HyperParams, want: HyperVariant| {
            if p.variant == want {
                Ok(())
            } else {
                Err(domain!(
                    "oracle needs {want:?} parameters, got {:?}",
                    p.variant
                ))
            }
        };
        match self {
            Oracle::Thm1 { alpha, .. }
            | Oracle::Thm9 { alpha, .. }
            | Oracle::Thm2i { alpha }
            | Oracle::MonomialT2 { alpha }
            | Oracle::Cor10 { alpha, .. } => positive(*alpha),
            Oracle::Thm2ii { alpha, params, a } => {
                positive(*alpha)?;
                finite(*a)?;
                variant(params, HyperVariant::BigPhi)
            }
            Oracle::Thm3 { alpha, params, a } => {
                positive(*alpha)?;
                finite(*a)?;
                variant(params, HyperVariant::Phi)
            }
            Oracle::Thm11 { alpha, params, a }
            | Oracle::Cor12 {
                alpha, params, a, ..
            } => {
                positive(*alpha)?;
                finite(*a)?;
                variant(params, HyperVariant::BigPhi)?;
                if params.k_exponent == 0 {
                    return Err(domain!(
                        "the second-type hypergeometric result needs k >= 1"
                    ));
                }
                Ok(())
            }
            Oracle::Monomial { .. } => Ok(()),
            Oracle::EexpPhi { a }
            | Oracle::Eexp { a }
            | Oracle::SinLower { a }
            | Oracle::CosLower { a }
            | Oracle::EexpT2 { a, .. }
            | Oracle::Eq42 { a } => finite(*a),
            Oracle::Cor4 { func, a, .. } | Oracle::Cor14 { func, a, .. } => {
                finite(*a)?;
                if matches!(func, TrigFn::Sin | TrigFn::Cos) {
                    Ok(())
                } else {
                    Err(domain!("trigonometric oracle covers sin and cos only"))
                }
            }
            Oracle::Cor5 { alpha, mu, a }
            | Oracle::Cor7 { alpha, mu, a, .. }
            | Oracle::Cor8 { alpha, mu, a, .. } => {
                positive(*alpha)?;
                finite(*a)?;
                if !(2.0 * mu > -1.0 && mu.is_finite()) {
                    return Err(domain!("Bessel oracle needs 2 mu > -1, got mu = {mu}"));
                }
                if *a < 0.0 {
                    return Err(domain!("Bessel oracle needs a >= 0, got {a}"));
                }
                Ok(())
            }
        }
    }

    /// The transform and the function whose transform this right-hand side
    /// states.
    pub fn describes(&self) -> (Transform, FunctionSpec) {
        let sided = |side: &Side, s: Transform, l: Transform| match side {
            Side::Sumudu => s,
            Side::Laplace => l,
        };
        let formed = |form: &Form| match form {
            Form::Natural => Transform::QN,
            Form::Laplace => Transform::QL,
            Form::Sumudu => Transform::QS,
        };
        let bessel = |mu: f64, a: f64| Family::Bessel {
            kind: BesselKind::First,
            order: 2.0 * mu,
            a,
        };
        let x_alpha = |alpha: f64| FunctionSpec::monomial(alpha - 1.0);
        match self {
            Oracle::Thm1 { alpha, series } => (
                Transform::Nq,
                with_alpha(Family::PowerSeries(series.clone()), *alpha),
            ),
            Oracle::Thm2i { alpha } => (Transform::Nq, x_alpha(*alpha)),
            Oracle::Thm2ii { alpha, params, a } | Oracle::Thm3 { alpha, params, a } => (
                Transform::Nq,
                with_alpha(
                    Family::Hyper {
                        params: params.clone(),
                        a: *a,
                    },
                    *alpha,
                ),
            ),
            Oracle::Monomial { n } => (Transform::Nq, FunctionSpec::monomial(*n as f64)),
            Oracle::EexpPhi { a } => (Transform::Nq, Family::BigExp { a: *a }.into()),
            Oracle::Eexp { a } => (Transform::Nq, Family::SmallExp { a: *a }.into()),
            Oracle::SinLower { a } | Oracle::CosLower { a } => {
                let func = if matches!(self, Oracle::SinLower { .. }) {
                    TrigFn::Sin
                } else {
                    TrigFn::Cos
                };
                let f = Family::Trig {
                    family: TrigFamily::Lower,
                    func,
                    a: *a,
                };
                (Transform::Nq, f.into())
            }
            Oracle::Cor4 { func, side, a } => (
                sided(side, Transform::Sq, Transform::Lq),
                Family::Trig {
                    family: TrigFamily::Lower,
                    func: *func,
                    a: *a,
                }
                .into(),
            ),
            Oracle::Cor5 { alpha, mu, a } => (Transform::Nq, with_alpha(bessel(*mu, *a), *alpha)),
            Oracle::Cor7 { side, alpha, mu, a } => (
                sided(side, Transform::Sq, Transform::Lq),
                with_alpha(bessel(*mu, *a), *alpha),
            ),
            Oracle::Cor8 { side, mu, a, .. } => (
                sided(side, Transform::Sq, Transform::Lq),
                bessel(*mu, *a).into(),
            ),
            Oracle::Thm9 { alpha, series } => (
                Transform::QN,
                with_alpha(Family::PowerSeries(series.clone()), *alpha),
            ),
            Oracle::MonomialT2 { alpha } => (Transform::QN, x_alpha(*alpha)),
            Oracle::Cor10 { side, alpha } => {
                (sided(side, Transform::QS, Transform::QL), x_alpha(*alpha))
            }
            Oracle::Thm11 { alpha, params, a } => (
                Transform::QN,
                with_alpha(
                    Family::Hyper {
                        params: params.clone(),
                        a: *a,
                    },
                    *alpha,
                ),
            ),
            Oracle::Cor12 {
                side,
                alpha,
                params,
                a,
            } => (
                sided(side, Transform::QS, Transform::QL),
                with_alpha(
                    Family::Hyper {
                        params: params.clone(),
                        a: *a,
                    },
                    *alpha,
                ),
            ),
            Oracle::EexpT2 { form, a } => (formed(form), Family::BigExp { a: *a }.into()),
            Oracle::Eq42 { a } => (Transform::QN, Family::BigExp { a: *a }.into()),
            Oracle::Cor14 { func, form, a } => (
                formed(form),
                Family::Trig {
                    family: TrigFamily::Upper,
                    func: *func,
                    a: *a,
                }
                .into(),
            ),
        }
    }

    /// True when this right-hand side states the value of `query`.
    pub fn describes_query(&self, query: &TransformQuery) -> bool {
        let (t, f) = self.describes();
        t == query.transform && canonical(&f) == canonical(&query.f)
    }

    /// Builds the oracle `id` for `query`, reading its parameters off the
    /// query's function. `alpha` supplies the otherwise unbound exponent of
    /// Corollary 8 and defaults to 1.
    pub fn for_query(id: OracleId, query: &TransformQuery, alpha: Option<f64>) -> Result<Self> {
        let bad = || incompatible(id, query);
        let t = query.transform;
        if !id.transforms().contains(&t) {
            return Err(bad());
        }
        let pre = query.f.prefactor_alpha.unwrap_or(1.0);
        let plain = query.f.prefactor_alpha.is_none_or(|x| x == 1.0);
        let oracle = match (&query.f.family, id) {
            (Family::PowerSeries(s), OracleId::Thm1) => Oracle::Thm1 {
                alpha: pre,
                series: s.clone(),
            },
            (Family::PowerSeries(s), OracleId::Thm9) => Oracle::Thm9 {
                alpha: pre,
                series: s.clone(),
            },
            (Family::Monomial { power }, OracleId::Thm2i) => Oracle::Thm2i { alpha: power + pre },
            (Family::Monomial { power }, OracleId::MonomialT2) => {
                Oracle::MonomialT2 { alpha: power + pre }
            }
            (Family::Monomial { power }, OracleId::Cor10) => Oracle::Cor10 {
                side: side_of(t),
                alpha: power + pre,
            },
            (Family::Monomial { power }, OracleId::Monomial) => {
                let n = power + pre - 1.0;
                if n < 0.0 || n.fract() != 0.0 || n > u32::MAX as f64 {
                    return Err(bad());
                }
                Oracle::Monomial { n: n as u32 }
            }
            (Family::Hyper { params, a }, OracleId::Thm2ii) => Oracle::Thm2ii {
                alpha: pre,
                params: params.clone(),
                a: *a,
            },
            (Family::Hyper { params, a }, OracleId::Thm3) => Oracle::Thm3 {
                alpha: pre,
                params: params.clone(),
                a: *a,
            },
            (Family::Hyper { params, a }, OracleId::Thm11) => Oracle::Thm11 {
                alpha: pre,
                params: params.clone(),
                a: *a,
            },
            (Family::Hyper { params, a }, OracleId::Cor12) => Oracle::Cor12 {
                side: side_of(t),
                alpha: pre,
                params: params.clone(),
                a: *a,
            },
            (Family::BigExp { a }, OracleId::EexpPhi) if plain => Oracle::EexpPhi { a: *a },
            (Family::BigExp { a }, OracleId::EexpT2) if plain => Oracle::EexpT2 {
                form: form_of(t),
                a: *a,
            },
            (Family::BigExp { a }, OracleId::Eq42) if plain => Oracle::Eq42 { a: *a },
            (Family::SmallExp { a }, OracleId::Eexp) if plain => Oracle::Eexp { a: *a },
            (
                Family::Trig {
                    family: TrigFamily::Lower,
                    func,
                    a,
                },
                OracleId::SinLower | OracleId::CosLower | OracleId::Cor4,
            ) if plain => match (id, func) {
                (OracleId::SinLower, TrigFn::Sin) => Oracle::SinLower { a: *a },
                (OracleId::CosLower, TrigFn::Cos) => Oracle::CosLower { a: *a },
                (OracleId::Cor4, TrigFn::Sin | TrigFn::Cos) => Oracle::Cor4 {
                    func: *func,
                    side: side_of(t),
                    a: *a,
                },
                _ => return Err(bad()),
            },
            (
                Family::Trig {
                    family: TrigFamily::Upper,
                    func: func @ (TrigFn::Sin | TrigFn::Cos),
                    a,
                },
                OracleId::Cor14,
            ) if plain => Oracle::Cor14 {
                func: *func,
                form: form_of(t),
                a: *a,
            },
            (
                Family::Bessel {
                    kind: BesselKind::First,
                    order,
                    a,
                },
                OracleId::Cor5 | OracleId::Cor7 | OracleId::Cor8,
            ) => {
                let mu = order / 2.0;
                match id {
                    OracleId::Cor5 => Oracle::Cor5 {
                        alpha: pre,
                        mu,
                        a: *a,
                    },
                    OracleId::Cor7 => Oracle::Cor7 {
                        side: side_of(t),
                        alpha: pre,
                        mu,
                        a: *a,
                    },
                    _ if plain => Oracle::Cor8 {
                        side: side_of(t),
                        alpha: alpha.unwrap_or(1.0),
                        mu,
                        a: *a,
                    },
                    _ => return Err(bad()),
                }
            }
            _ => return Err(bad()),
        };
        oracle.validate()?;
        debug_assert!(oracle.describes_query(query));
        Ok(oracle)
    }

    /// The free symbols as `key=value` pairs, for reports.
    pub fn params(&self) -> String {
        let side = |s: &Side| match s {
            Side::Sumudu => "S",
            Side::Laplace => "L",
        };
        let form = |f: &Form| match f {
            Form::Natural => "N",
            Form::Laplace => "L",
            Form::Sumudu => "S",
        };
        match self {
            Oracle::Thm1 { alpha, series } | Oracle::Thm9 { alpha, series } => {
                let cut = series
                    .max_index
                    .map(|n| format!(",max_index={n}"))
                    .unwrap_or_default();
                format!("alpha={alpha},rule={}{cut}", series.label)
            }
            Oracle::Thm2i { alpha } | Oracle::MonomialT2 { alpha } => format!("alpha={alpha}"),
            Oracle::Cor10 { side: s, alpha } => format!("side={},alpha={alpha}", side(s)),
            Oracle::Monomial { n } => format!("n={n}"),
            Oracle::Thm2ii { alpha, params, a }
            | Oracle::Thm3 { alpha, params, a }
            | Oracle::Thm11 { alpha, params, a } => {
                format!("alpha={alpha},a={a},{}", hyper_params(params))
            }
            Oracle::Cor12 {
                side: s,
                alpha,
                params,
                a,
            } => {
                format!(
                    "side={},alpha={alpha},a={a},{}",
                    side(s),
                    hyper_params(params)
                )
            }
            Oracle::EexpPhi { a }
            | Oracle::Eexp { a }
            | Oracle::SinLower { a }
            | Oracle::CosLower { a }
            | Oracle::Eq42 { a } => format!("a={a}"),
            Oracle::Cor4 { func, side: s, a } => {
                format!("fn={},side={},a={a}", func.name(), side(s))
            }
            Oracle::Cor5 { alpha, mu, a } => format!("alpha={alpha},mu={mu},a={a}"),
            Oracle::Cor7 {
                side: s,
                alpha,
                mu,
                a,
            }
            | Oracle::Cor8 {
                side: s,
                alpha,
                mu,
                a,
            } => {
                format!("side={},alpha={alpha},mu={mu},a={a}", side(s))
            }
            Oracle::EexpT2 { form: f, a } => format!("form={},a={a}", form(f)),
            Oracle::Cor14 { func, form: f, a } => {
                format!("fn={},form={},a={a}", func.name(), form(f))
            }
        }
    }
}

fn hyper_params(p: &HyperParams) -> String {
    use crate::special::QParam;
    let list = |v: &[QParam]| {
        let parts: Vec<String> = v
            .iter()
            .map(|x| match x {
                QParam::Fixed(z) if z.im == 0.0 => format!("{}", z.re),
                QParam::Fixed(z) => format!("{}{:+}i", z.re, z.im),
                QParam::QPower(t) => format!("q^{t}"),
            })
            .collect();
        parts.join("/")
    };
    let mut out = vec![
        format!("num={}", list(&p.numerator)),
        format!("den={}", list(&p.denominator)),
    ];
    if p.variant == HyperVariant::BigPhi {
        out.push(format!("k={}", p.k_exponent));
    }
    out.join(",")
}
