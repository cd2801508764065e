use alloc::string::String;

/// Failure modes of the q-calculus engine.
///
/// Series that merely fail to settle are not errors: they come back as a
/// [`SeriesValue`](crate::SeriesValue) with `converged == false`.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QError {
    /// An argument lies outside the region where the formula is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A product in a denominator vanishes.
    #[error("pole: {0}")]
    Pole(String),

    /// A computation produced NaN or an infinity.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    /// The base or the truncation policy is invalid.
    #[error("invalid context: {0}")]
    InvalidContext(String),

    /// A scalar-valued routine needed an infinite product that did not settle
    /// within the term budget.
    #[error("{0} did not settle within max_terms")]
    NotConverged(&'static str),

    /// A closed-form oracle was paired with a query it does not describe.
    #[error("incompatible pairing: {0}")]
    Incompatible(String),
}

pub type Result<T> = core::result::Result<T, QError>;

macro_rules! domain {
    ($($arg:tt)*) => {
        $crate::error::QError::Domain(alloc::format!($($arg)*))
    };
}

macro_rules! pole {
    ($($arg:tt)*) => {
        $crate::error::QError::Pole(alloc::format!($($arg)*))
    };
}

pub(crate) use domain;
pub(crate) use pole;
