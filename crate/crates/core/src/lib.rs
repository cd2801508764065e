//! Numerical q-calculus engine for the two q-analogues of the Natural
//! integral transform and their q-Laplace and q-Sumudu specializations.
//!
//! Every infinite sum or product is truncated by the same settle rule (see
//! [`series`]) and comes back as a [`SeriesValue`] carrying the value, an
//! error estimate, the number of terms consumed and a convergence flag.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod calculus;
pub mod closed_forms;
pub mod context;
pub mod error;
pub mod series;
pub mod special;
pub mod transform;

pub use context::QContext;
pub use error::{QError, Result};
pub use series::{Complex, SeriesValue};
