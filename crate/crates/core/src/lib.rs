//! Exact and quadrature energies of polynomials on arc unions and of
//! bandlimited functions on interval unions, together with checkers that
//! test concentration inequalities on concrete instances and emit
//! re-checkable certificates.
//!
//! Module map:
//! - [`sets`]: canonical interval and arc unions.
//! - [`circle`]: polynomial energies on arcs.
//! - [`rearrange`]: central rearrangement, Toeplitz weights, cosine embedding.
//! - [`bandlimited`]: spectra on Gauss grids and time-set energies.
//! - [`trig`]: the h-function bound and sine-sum diagnostics.
//! - [`specsup`]: concentration matrices and their top eigenpairs.
//! - [`campaign`]: seeded campaigns, validity maps and certificate rechecks.

// `!(x > 0.0)` style guards are kept on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bandlimited;
pub mod campaign;
pub mod circle;
mod error;
pub mod numeric;
pub mod rearrange;
pub mod report;
pub mod rng;
pub mod sets;
pub mod specsup;
pub mod trig;

#[cfg(test)]
mod oracle;

pub use bandlimited::Spectrum;
pub use campaign::{Campaign, CampaignReport, MapConfig, Params};
pub use circle::Poly;
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use rearrange::CosineSeries;
pub use report::{ClaimId, ClaimReport, Witness, DEFAULT_TOL};
pub use sets::{ArcUnion, IntervalUnion};
pub use trig::TrigConfig;
