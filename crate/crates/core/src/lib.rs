//! Deterministic simulation engine that downscales annual, state-level
//! transportation electrification energy projections into hourly,
//! balancing-authority-level charging load profiles.
//!
//! The crate is organized around the stages of that pipeline:
//!
//! - [`units`], [`geo`], [`scenario`], [`calendar`], [`profile`]: shared
//!   domain types (energy quantities, geography identifiers, scenario keys,
//!   hourly profiles and normalized shapes) plus profile arithmetic.
//! - [`mobility`]: ingestion of depot-vehicle mobility records, the
//!   return-to-base filter, daily schedule construction, and a seeded
//!   synthetic fleet generator.
//! - [`depot`]: per-vehicle depot charging simulation under the immediate,
//!   delayed, and minimum-power strategies, Monte Carlo fleet aggregation
//!   into monthly average-day shapes, and yearly shape assembly.
//! - [`ldv`]: parametric light-duty charging session model with temperature
//!   sensitivity, weekday/weekend effects, and strategy adoption.
//! - [`nonroad`]: constant-power profiles for rail, aviation, and shipping,
//!   allocated by activity data.
//! - [`downscale`]: spatial allocation tables, county-to-BA aggregation, and
//!   energy-conserving scaling of normalized shapes to annual targets.
//! - [`metrics`]: grid-impact metrics (M1/M2/M3) and pathway comparisons.
//!
//! All operations are pure functions of their inputs and a seed; repeated
//! runs produce identical output regardless of thread count.

pub mod calendar;
pub mod depot;
pub mod downscale;
pub mod error;
pub mod geo;
pub mod ldv;
pub mod metrics;
pub mod mobility;
pub mod nonroad;
pub mod profile;
pub mod sampling;
pub mod scenario;
pub mod seeding;
pub mod units;

pub use error::{Error, Result};
pub use geo::{GeoId, GeoLevel};
pub use profile::{HourlyProfile, LoadClass, NormalizedShape, PeakStats};
pub use scenario::{ClimateScenario, Pathway, ScenarioKey, VehicleClass};
pub use units::{EnergyQuantity, EnergyUnit};
