//! Rough continuous-state branching processes: analytic laws and a
//! Monte Carlo engine for the compound-Poisson pre-limit construction.
//!
//! The limit model is the branching process associated with a spectrally
//! positive stable process of index `1 + alpha`, `alpha` in (0,1), with
//! Laplace exponent
//!
//! ```text
//! Phi(lambda) = b*lambda + c*lambda^(1+alpha),   b >= 0, c > 0.
//! ```
//!
//! The crate provides
//!
//! * [`specfun`] — Gamma and one-/two-parameter Mittag-Leffler kernels,
//! * [`model`] — `Phi`, its inverse `Psi`, the Lévy density and the scale
//!   function `W` / `W'` of the stable process,
//! * [`prelimit`] — the level-`n` compound Poisson model: jump and initial
//!   laws, discrete exponent and scale function, local-time transforms,
//! * [`analytics`] — closed forms for the extinction-time and total-progeny
//!   transforms, their heavy-tail asymptotes, and the Feller baseline,
//! * [`simulate`] — excursion sampling, local times, and the rescaled
//!   aggregate Monte Carlo,
//! * [`stats`] — empirical estimators and analytic-vs-empirical reports.
//!
//! All numeric kernels are generic over the scalar type through [`Real`];
//! `f64` is the intended production type and the one the tolerances are
//! stated for. Concrete `f64` aliases live at the crate root.

pub mod analytics;
mod error;
pub mod model;
pub mod prelimit;
pub mod quad;
mod real;
pub mod roots;
pub mod simulate;
pub mod specfun;
pub mod stats;

pub use error::{Error, Result};
pub use real::Real;

/// The production model type: [`model::ModelParams`] over `f64`.
pub type ModelParams = model::ModelParams<f64>;
/// [`prelimit::DiscreteModel`] over `f64`.
pub type DiscreteModel = prelimit::DiscreteModel<f64>;
/// [`prelimit::ScaleTable`] over `f64`.
pub type ScaleTable = prelimit::ScaleTable<f64>;
/// [`simulate::McConfig`] over `f64`.
pub type McConfig = simulate::McConfig<f64>;
/// [`simulate::Excursion`] over `f64`.
pub type Excursion = simulate::Excursion<f64>;
/// [`simulate::AggregateSample`] over `f64`.
pub type AggregateSample = simulate::AggregateSample<f64>;
/// [`analytics::TailAsymptote`] over `f64`.
pub type TailAsymptote = analytics::TailAsymptote<f64>;
/// [`stats::ComparisonReport`] over `f64`.
pub type ComparisonReport = stats::ComparisonReport<f64>;
