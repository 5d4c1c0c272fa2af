//! Average error rates and ergodic capacity of η–μ fading channels with
//! L-branch maximal-ratio combining under additive white generalized
//! Gaussian noise.
//!
//! The closed forms live in [`metrics`]; [`oracle`] holds the independent
//! quadrature and Monte-Carlo engines used to validate them.

// `!(x > 0.0)` is used on purpose: it rejects NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approx;
pub mod error;
pub mod fading;
pub mod metrics;
pub mod noise;
pub mod oracle;
pub mod records;
pub mod special;

pub use approx::{ApproxKind, ExpSumApprox, ExpTerm, FitGrid, FitTarget};
pub use error::{Error, Result};
pub use fading::{FadingSpec, Format, HHPair, IntegerFormExpansion, SpecialCase};
pub use metrics::{ModulationSpec, PerformancePoint, Scheme};
pub use noise::NoiseSpec;
