//! The two q-Natural transforms evaluated through their Jackson-sum series,
//! the q-Laplace and q-Sumudu specializations, and a classical quadrature
//! reference for q -> 1 checks.

mod classical;
mod function;
mod natural;

pub use classical::{classical_correspondent, classical_natural_reference, gauss_laguerre};
pub use function::{CoefficientRule, Coefficients, Family, FunctionSpec, PowerSeriesSpec};
pub use natural::{
    laplace_q, natural_type1, natural_type2, natural_type2_with, sumudu_q, TransformType,
    Type2Variant,
};

use crate::context::QContext;
use crate::error::Result;
use crate::series::SeriesValue;

/// Transform family of a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Transform {
    /// First-type Natural transform `N_q`.
    Nq,
    /// Second-type Natural transform `qN`.
    QN,
    Lq,
    QL,
    Sq,
    QS,
}

impl Transform {
    pub const ALL: [Transform; 6] = [
        Transform::Nq,
        Transform::QN,
        Transform::Lq,
        Transform::QL,
        Transform::Sq,
        Transform::QS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Transform::Nq => "Nq",
            Transform::QN => "qN",
            Transform::Lq => "Lq",
            Transform::QL => "qL",
            Transform::Sq => "Sq",
            Transform::QS => "qS",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == name)
    }

    pub fn kind(self) -> TransformType {
        match self {
            Transform::Nq | Transform::Lq | Transform::Sq => TransformType::First,
            Transform::QN | Transform::QL | Transform::QS => TransformType::Second,
        }
    }

    /// The `(u, v)` point actually evaluated: Laplace forces `u = 1`,
    /// Sumudu forces `v = 1`.
    pub fn effective_point(self, u: f64, v: f64) -> (f64, f64) {
        match self {
            Transform::Lq | Transform::QL => (1.0, v),
            Transform::Sq | Transform::QS => (u, 1.0),
            Transform::Nq | Transform::QN => (u, v),
        }
    }
}

/// One transform evaluation request.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformQuery {
    pub transform: Transform,
    pub f: FunctionSpec,
    pub u: f64,
    pub v: f64,
}

impl TransformQuery {
    /// Builds a query with the point normalized for Laplace and Sumudu.
    pub fn new(transform: Transform, f: FunctionSpec, u: f64, v: f64) -> Self {
        let (u, v) = transform.effective_point(u, v);
        Self { transform, f, u, v }
    }

    pub fn evaluate(&self, ctx: &QContext) -> Result<SeriesValue> {
        let (u, v) = self.transform.effective_point(self.u, self.v);
        match self.transform {
            Transform::Nq => natural_type1(&self.f, u, v, ctx),
            Transform::QN => natural_type2(&self.f, u, v, ctx),
            Transform::Lq | Transform::QL => laplace_q(&self.f, v, self.transform.kind(), ctx),
            Transform::Sq | Transform::QS => sumudu_q(&self.f, u, self.transform.kind(), ctx),
        }
    }
}
