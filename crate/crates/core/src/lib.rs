//! Deterministic geospatial assessment of cellular network assets exposed to
//! coastal-flood, riverine-flood, and tropical-cyclone hazards.
//!
//! The crate is organised as a small pipeline:
//!
//! * [`model`] — domain types (assets, hazard rasters, scenarios, damage
//!   curves, regions) and their validity rules.
//! * [`ingest`] — file readers with strict validation and rejected-record
//!   accounting.
//! * [`spatial`] — the geometric kernel: raster point sampling, mosaicking,
//!   zonal statistics, and point-in-polygon region assignment.
//! * [`vulnerability`] — damage curves applied to sampled intensities,
//!   producing damage fractions, costs, and qualitative damage states.
//! * [`engine`] — scenario enumeration, per-asset intersection, aggregation,
//!   ensemble statistics, and baseline comparison. Parallel and byte-for-byte
//!   reproducible.
//! * [`money`] — cent-precision accounting used at every reporting boundary.

pub mod engine;
pub mod ingest;
pub mod model;
pub mod money;
pub mod spatial;
pub mod vulnerability;
