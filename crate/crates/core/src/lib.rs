//! Reliability analysis of redundant semiconductor switches in a
//! series-switch fault current limiter.
//!
//! The crate covers the whole chain from a current waveform to a cost
//! ranking:
//!
//! - [`thermal`]: switching and conduction losses, junction temperature.
//! - [`failure`]: handbook failure rates with an Arrhenius temperature
//!   factor, split into open- and short-circuit modes.
//! - [`topology`]: the five switch configurations, their state diagrams,
//!   closed-form MTTFs and the boundaries deciding which configuration is
//!   more reliable.
//! - [`markov`]: a generic absorbing Markov chain engine that computes the
//!   MTTF of any [`markov::StateDiagram`].
//! - [`montecarlo`]: a seeded simulator used to cross-check the engine.
//! - [`cost`]: levelized cost per million hours.
//! - [`scenario`] and [`cli`]: the `fcl-rel` command-line tool.
//!
//! Rates are per hour internally; [`units::Fit`] marks values in FIT.
//!
//! ```
//! use fcl_reliability::failure::{CoverageParams, SwitchRates};
//! use fcl_reliability::topology::{build_diagram, mttf_closed_form, Topology};
//!
//! let rates = SwitchRates::uniform(0.5e-6, 0.5e-6).unwrap();
//! let cov = CoverageParams::perfect();
//! let d = build_diagram(Topology::ShuntParallel, &rates, &cov).unwrap();
//! let engine = fcl_reliability::markov::mttf(&d).unwrap();
//! let closed = mttf_closed_form(Topology::ShuntParallel, &rates, &cov).unwrap();
//! assert!((engine - 1.5e6).abs() < 1e-3 && (closed - 1.5e6).abs() < 1e-3);
//! ```

pub mod cli;
pub mod cost;
pub mod error;
pub mod failure;
pub mod markov;
pub mod montecarlo;
pub mod scenario;
pub mod thermal;
pub mod topology;
pub mod units;

pub use error::{Error, Result};
pub use scenario::Scenario;
pub use topology::{OperatingPoint, Topology};
