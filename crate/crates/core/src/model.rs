//! Domain types shared across the pipeline and their validity rules.
//!
//! All types here are immutable after construction and safe to share across
//! parallel workers.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Default per-cell replacement cost in USD: a three-sector macro site at
/// roughly $100,000 split across its three cells.
pub const DEFAULT_UNIT_COST_USD: f64 = 33_333.0;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("unknown radio label {0:?}")]
    UnknownRadio(String),
    #[error("longitude {0} outside [-180, 180]")]
    LonOutOfRange(f64),
    #[error("latitude {0} outside [-90, 90]")]
    LatOutOfRange(f64),
    #[error("unit cost {0} must be nonnegative and finite")]
    InvalidUnitCost(f64),
    #[error("return period must be a positive number of years")]
    NonPositiveReturnPeriod,
    #[error("pathway {pathway} is inconsistent with epoch {epoch}: historical runs are pinned to 1980")]
    PathwayEpochMismatch { pathway: Pathway, epoch: i32 },
    #[error("model member label {0:?} contains characters outside [A-Za-z0-9._-]")]
    InvalidMemberLabel(String),
    #[error("invalid damage curve {id:?}: {reason}")]
    InvalidCurve { id: String, reason: String },
    #[error("invalid raster: {0}")]
    InvalidRaster(String),
    #[error("invalid region {id:?}: {reason}")]
    InvalidRegion { id: String, reason: String },
}

// ---------------------------------------------------------------------------
// Assets
// ---------------------------------------------------------------------------

/// Radio access technology as labelled in the source data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Radio {
    Gsm,
    Umts,
    Lte,
    Nr,
}

impl Radio {
    /// Parses a radio label, case-insensitively. Unknown labels are a
    /// rejected-record error carrying the offending value.
    pub fn parse(label: &str) -> Result<Radio, ModelError> {
        match label.trim().to_ascii_uppercase().as_str() {
            "GSM" => Ok(Radio::Gsm),
            "UMTS" => Ok(Radio::Umts),
            "LTE" => Ok(Radio::Lte),
            "NR" => Ok(Radio::Nr),
            _ => Err(ModelError::UnknownRadio(label.to_string())),
        }
    }

    /// Maps the radio standard onto its cellular generation:
    /// GSM→2G, UMTS→3G, LTE→4G, NR→5G.
    pub fn generation(self) -> Generation {
        match self {
            Radio::Gsm => Generation::G2,
            Radio::Umts => Generation::G3,
            Radio::Lte => Generation::G4,
            Radio::Nr => Generation::G5,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Radio::Gsm => "GSM",
            Radio::Umts => "UMTS",
            Radio::Lte => "LTE",
            Radio::Nr => "NR",
        }
    }
}

impl fmt::Display for Radio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Cellular generation, the reporting dimension for asset counts.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub enum Generation {
    #[serde(rename = "2G")]
    G2,
    #[serde(rename = "3G")]
    G3,
    #[serde(rename = "4G")]
    G4,
    #[serde(rename = "5G")]
    G5,
}

impl Generation {
    pub fn as_str(self) -> &'static str {
        match self {
            Generation::G2 => "2G",
            Generation::G3 => "3G",
            Generation::G4 => "4G",
            Generation::G5 => "5G",
        }
    }
}

impl fmt::Display for Generation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Structural design of the mounting tower. Source data rarely carries this,
/// so `Unknown` is the default; curve selection falls back to the hazard
/// default curve in that case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum TowerDesign {
    Monopole,
    SelfSupported,
    Guyed,
    #[default]
    Unknown,
}

impl TowerDesign {
    pub fn as_str(self) -> &'static str {
        match self {
            TowerDesign::Monopole => "monopole",
            TowerDesign::SelfSupported => "self_supported",
            TowerDesign::Guyed => "guyed",
            TowerDesign::Unknown => "unknown",
        }
    }
}

impl fmt::Display for TowerDesign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One cellular cell: a point asset with a replacement cost.
#[derive(Debug, Clone, PartialEq)]
pub struct Asset {
    pub asset_id: String,
    pub lon: f64,
    pub lat: f64,
    pub radio: Radio,
    pub tower_design: TowerDesign,
    /// Replacement cost in USD for this single cell.
    pub unit_cost: f64,
    /// ISO 3166-1 alpha-3 code, or `"unknown"`.
    pub country_iso3: String,
}

impl Asset {
    pub fn new(
        asset_id: String,
        lon: f64,
        lat: f64,
        radio: Radio,
        unit_cost: f64,
    ) -> Result<Asset, ModelError> {
        if !(-180.0..=180.0).contains(&lon) || !lon.is_finite() {
            return Err(ModelError::LonOutOfRange(lon));
        }
        if !(-90.0..=90.0).contains(&lat) || !lat.is_finite() {
            return Err(ModelError::LatOutOfRange(lat));
        }
        if !unit_cost.is_finite() || unit_cost < 0.0 {
            return Err(ModelError::InvalidUnitCost(unit_cost));
        }
        Ok(Asset {
            asset_id,
            lon,
            lat,
            radio,
            tower_design: TowerDesign::Unknown,
            unit_cost,
            country_iso3: "unknown".to_string(),
        })
    }

    /// Cellular generation, derived from the radio standard so the two can
    /// never disagree.
    pub fn generation(&self) -> Generation {
        self.radio.generation()
    }
}

// ---------------------------------------------------------------------------
// Hazard rasters
// ---------------------------------------------------------------------------

/// Unit of the intensity values stored in a raster or damage curve.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum IntensityUnit {
    /// Flood inundation depth in meters.
    MetersDepth,
    /// Maximum sustained wind speed in km/h.
    KmhWind,
    /// Maximum sustained wind speed in m/s.
    MsWind,
}

impl IntensityUnit {
    pub fn as_str(self) -> &'static str {
        match self {
            IntensityUnit::MetersDepth => "meters_depth",
            IntensityUnit::KmhWind => "kmh_wind",
            IntensityUnit::MsWind => "ms_wind",
        }
    }

    pub fn parse(token: &str) -> Option<IntensityUnit> {
        match token.trim() {
            "meters_depth" => Some(IntensityUnit::MetersDepth),
            "kmh_wind" => Some(IntensityUnit::KmhWind),
            "ms_wind" => Some(IntensityUnit::MsWind),
            _ => None,
        }
    }
}

impl fmt::Display for IntensityUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A georeferenced intensity grid in WGS84 lon/lat degrees.
///
/// Values are stored row-major with the **northernmost row first**. Cell
/// `(row, col)` covers `x ∈ [xll + col·cellsize, xll + (col+1)·cellsize)` and
/// the matching half-open band in `y` counted down from the top edge.
#[derive(Debug, Clone, PartialEq)]
pub struct HazardRaster {
    ncols: usize,
    nrows: usize,
    xll: f64,
    yll: f64,
    cellsize: f64,
    nodata: f64,
    values: Vec<f64>,
    units: IntensityUnit,
}

impl HazardRaster {
    #[allow(clippy::too_many_arguments)] // one argument per grid header field
    pub fn new(
        ncols: usize,
        nrows: usize,
        xll: f64,
        yll: f64,
        cellsize: f64,
        nodata: f64,
        values: Vec<f64>,
        units: IntensityUnit,
    ) -> Result<HazardRaster, ModelError> {
        if ncols == 0 || nrows == 0 {
            return Err(ModelError::InvalidRaster(
                "ncols and nrows must be positive".into(),
            ));
        }
        if !(cellsize.is_finite() && cellsize > 0.0) {
            return Err(ModelError::InvalidRaster(format!(
                "cellsize {cellsize} must be > 0"
            )));
        }
        if !nodata.is_finite() {
            return Err(ModelError::InvalidRaster(format!(
                "nodata sentinel {nodata} must be finite"
            )));
        }
        if !xll.is_finite() || !yll.is_finite() {
            return Err(ModelError::InvalidRaster("corner must be finite".into()));
        }
        if values.len() != ncols * nrows {
            return Err(ModelError::InvalidRaster(format!(
                "expected {} values ({} x {}), got {}",
                ncols * nrows,
                ncols,
                nrows,
                values.len()
            )));
        }
        for (i, &v) in values.iter().enumerate() {
            if v == nodata {
                continue;
            }
            if !v.is_finite() || v < 0.0 {
                return Err(ModelError::InvalidRaster(format!(
                    "value {v} at index {i} is negative or non-finite"
                )));
            }
        }
        Ok(HazardRaster {
            ncols,
            nrows,
            xll,
            yll,
            cellsize,
            nodata,
            values,
            units,
        })
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }
    pub fn nrows(&self) -> usize {
        self.nrows
    }
    pub fn xll(&self) -> f64 {
        self.xll
    }
    pub fn yll(&self) -> f64 {
        self.yll
    }
    pub fn cellsize(&self) -> f64 {
        self.cellsize
    }
    pub fn nodata(&self) -> f64 {
        self.nodata
    }
    pub fn units(&self) -> IntensityUnit {
        self.units
    }
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Eastern edge of the extent.
    pub fn x_max(&self) -> f64 {
        self.xll + self.ncols as f64 * self.cellsize
    }

    /// Northern edge of the extent.
    pub fn y_max(&self) -> f64 {
        self.yll + self.nrows as f64 * self.cellsize
    }

    /// Raw value at (row, col), row 0 = northernmost.
    pub fn value_at(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.ncols + col]
    }

    pub fn is_nodata(&self, v: f64) -> bool {
        v == self.nodata
    }
}

// ---------------------------------------------------------------------------
// Scenarios
// ---------------------------------------------------------------------------

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum Hazard {
    Coastal,
    Riverine,
    Cyclone,
}

impl Hazard {
    pub fn as_str(self) -> &'static str {
        match self {
            Hazard::Coastal => "coastal",
            Hazard::Riverine => "riverine",
            Hazard::Cyclone => "cyclone",
        }
    }

    /// Unit a hazard layer is expressed in unless a job overrides it.
    pub fn default_unit(self) -> IntensityUnit {
        match self {
            Hazard::Coastal | Hazard::Riverine => IntensityUnit::MetersDepth,
            Hazard::Cyclone => IntensityUnit::KmhWind,
        }
    }
}

impl fmt::Display for Hazard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Climate pathway. `rcp45` and `rcp85` are the IPCC AR5 Representative
/// Concentration Pathways 4.5 and 8.5.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum Pathway {
    Historical,
    Rcp45,
    Rcp85,
}

impl Pathway {
    pub fn as_str(self) -> &'static str {
        match self {
            Pathway::Historical => "historical",
            Pathway::Rcp45 => "rcp45",
            Pathway::Rcp85 => "rcp85",
        }
    }
}

impl fmt::Display for Pathway {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One hazard layer descriptor: hazard type, climate pathway, epoch year,
/// return period, and model member (GCM name, or a coastal percentile /
/// subsidence variant such as `p95_sub`).
///
/// The annual exceedance probability is always derived as
/// `1 / return_period_years`; it is never stored independently.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Scenario {
    pub hazard: Hazard,
    pub pathway: Pathway,
    pub epoch: i32,
    pub return_period_years: u32,
    pub model_member: String,
}

impl Scenario {
    /// Validates a scenario: positive return period, member label limited to
    /// filesystem-safe characters, and the historical pathway pinned to 1980
    /// (in both directions).
    pub fn validated(self) -> Result<Scenario, ModelError> {
        if self.return_period_years == 0 {
            return Err(ModelError::NonPositiveReturnPeriod);
        }
        let historical = self.pathway == Pathway::Historical;
        if historical != (self.epoch == 1980) {
            return Err(ModelError::PathwayEpochMismatch {
                pathway: self.pathway,
                epoch: self.epoch,
            });
        }
        if self.model_member.is_empty()
            || !self
                .model_member
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || matches!(c, '.' | '_' | '-'))
        {
            return Err(ModelError::InvalidMemberLabel(self.model_member));
        }
        Ok(self)
    }

    /// Annual exceedance probability, `1 / return_period_years`.
    pub fn annual_probability(&self) -> f64 {
        1.0 / self.return_period_years as f64
    }

    /// Filesystem-safe key: `<hazard>__<pathway>__<epoch>__rp<RP>__<member>`.
    pub fn key(&self) -> String {
        format!(
            "{}__{}__{}__rp{}__{}",
            self.hazard, self.pathway, self.epoch, self.return_period_years, self.model_member
        )
    }

    /// Sort key for every deterministic ordering over scenarios:
    /// (hazard token, pathway token, epoch, return period, member).
    pub fn sort_key(&self) -> (&'static str, &'static str, i32, u32, &str) {
        (
            self.hazard.as_str(),
            self.pathway.as_str(),
            self.epoch,
            self.return_period_years,
            &self.model_member,
        )
    }

    /// The ensemble group this scenario belongs to: every field except the
    /// model member.
    pub fn group(&self) -> ScenarioGroup {
        ScenarioGroup {
            hazard: self.hazard,
            pathway: self.pathway,
            epoch: self.epoch,
            return_period_years: self.return_period_years,
        }
    }
}

/// A scenario minus its model member: the unit over which ensemble statistics
/// are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScenarioGroup {
    pub hazard: Hazard,
    pub pathway: Pathway,
    pub epoch: i32,
    pub return_period_years: u32,
}

impl ScenarioGroup {
    pub fn sort_key(&self) -> (&'static str, &'static str, i32, u32) {
        (
            self.hazard.as_str(),
            self.pathway.as_str(),
            self.epoch,
            self.return_period_years,
        )
    }

    pub fn annual_probability(&self) -> f64 {
        1.0 / self.return_period_years as f64
    }
}

// ---------------------------------------------------------------------------
// Damage curves
// ---------------------------------------------------------------------------

/// Monotone piecewise-linear map from hazard intensity to damage fraction.
///
/// Knot intensities are strictly increasing, fractions are non-decreasing and
/// within [0, 1]; at least two knots; the first intensity is nonnegative.
#[derive(Debug, Clone, PartialEq)]
pub struct DamageCurve {
    pub curve_id: String,
    pub intensity_unit: IntensityUnit,
    knots: Vec<(f64, f64)>,
}

impl DamageCurve {
    pub fn new(
        curve_id: impl Into<String>,
        intensity_unit: IntensityUnit,
        knots: Vec<(f64, f64)>,
    ) -> Result<DamageCurve, ModelError> {
        let curve_id = curve_id.into();
        let err = |reason: String| ModelError::InvalidCurve {
            id: curve_id.clone(),
            reason,
        };
        if knots.len() < 2 {
            return Err(err(format!("needs at least 2 knots, got {}", knots.len())));
        }
        if !(knots[0].0.is_finite() && knots[0].0 >= 0.0) {
            return Err(err(format!("first knot intensity {} must be >= 0", knots[0].0)));
        }
        for w in knots.windows(2) {
            if !(w[1].0.is_finite() && w[1].0 > w[0].0) {
                return Err(err(format!(
                    "intensities must be strictly increasing ({} then {})",
                    w[0].0, w[1].0
                )));
            }
            if w[1].1 < w[0].1 {
                return Err(err(format!(
                    "fractions must be non-decreasing ({} then {})",
                    w[0].1, w[1].1
                )));
            }
        }
        for &(_, f) in &knots {
            if !(f.is_finite() && (0.0..=1.0).contains(&f)) {
                return Err(err(format!("fraction {f} outside [0, 1]")));
            }
        }
        Ok(DamageCurve {
            curve_id,
            intensity_unit,
            knots,
        })
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    pub fn first_knot(&self) -> (f64, f64) {
        self.knots[0]
    }

    pub fn last_knot(&self) -> (f64, f64) {
        *self.knots.last().expect("curve has at least 2 knots")
    }
}

// ---------------------------------------------------------------------------
// Regions
// ---------------------------------------------------------------------------

/// World Bank style income classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum IncomeGroup {
    Hic,
    Umc,
    Lmc,
    Lic,
    #[default]
    Unknown,
}

impl IncomeGroup {
    pub fn as_str(self) -> &'static str {
        match self {
            IncomeGroup::Hic => "HIC",
            IncomeGroup::Umc => "UMC",
            IncomeGroup::Lmc => "LMC",
            IncomeGroup::Lic => "LIC",
            IncomeGroup::Unknown => "unknown",
        }
    }

    /// Parses known labels case-insensitively; anything else is `Unknown`.
    pub fn parse(label: &str) -> IncomeGroup {
        match label.trim().to_ascii_uppercase().as_str() {
            "HIC" => IncomeGroup::Hic,
            "UMC" => IncomeGroup::Umc,
            "LMC" => IncomeGroup::Lmc,
            "LIC" => IncomeGroup::Lic,
            _ => IncomeGroup::Unknown,
        }
    }
}

impl fmt::Display for IncomeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One polygon part of a reporting region. The first ring is the outer
/// boundary; any further rings are holes. Rings are closed (first vertex
/// repeated last) with at least 4 vertices.
///
/// A MultiPolygon region decomposes into several `Region` values sharing the
/// same `region_id`.
#[derive(Debug, Clone, PartialEq)]
pub struct Region {
    pub region_id: String,
    pub name: String,
    rings: Vec<Vec<(f64, f64)>>,
    pub continent: String,
    pub income_group: IncomeGroup,
    pub country_iso3: String,
}

impl Region {
    pub fn new(
        region_id: impl Into<String>,
        rings: Vec<Vec<(f64, f64)>>,
    ) -> Result<Region, ModelError> {
        let region_id = region_id.into();
        let err = |reason: String| ModelError::InvalidRegion {
            id: region_id.clone(),
            reason,
        };
        if rings.is_empty() {
            return Err(err("polygon has no rings".into()));
        }
        for (i, ring) in rings.iter().enumerate() {
            if ring.len() < 4 {
                return Err(err(format!(
                    "ring {i} has {} vertices, need at least 4",
                    ring.len()
                )));
            }
            if ring.first() != ring.last() {
                return Err(err(format!("ring {i} is not closed (first vertex != last)")));
            }
            for w in ring.windows(2) {
                let (ax, ay) = w[0];
                let (bx, by) = w[1];
                if !(ax.is_finite() && ay.is_finite() && bx.is_finite() && by.is_finite()) {
                    return Err(err(format!("ring {i} contains non-finite coordinates")));
                }
                // Antimeridian-crossing polygons are out of scope.
                if (ax - bx).abs() > 180.0 {
                    return Err(err(format!(
                        "ring {i} appears to cross the antimeridian (lon step {} -> {})",
                        ax, bx
                    )));
                }
            }
        }
        Ok(Region {
            region_id,
            name: String::new(),
            rings,
            continent: "unknown".to_string(),
            income_group: IncomeGroup::Unknown,
            country_iso3: "unknown".to_string(),
        })
    }

    pub fn rings(&self) -> &[Vec<(f64, f64)>] {
        &self.rings
    }

    /// Axis-aligned bounding box over all rings: (min_lon, min_lat, max_lon, max_lat).
    pub fn bbox(&self) -> (f64, f64, f64, f64) {
        let mut bb = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for ring in &self.rings {
            for &(x, y) in ring {
                bb.0 = bb.0.min(x);
                bb.1 = bb.1.min(y);
                bb.2 = bb.2.max(x);
                bb.3 = bb.3.max(y);
            }
        }
        bb
    }
}

// ---------------------------------------------------------------------------
// Exposure outcomes
// ---------------------------------------------------------------------------

/// Qualitative cell-site damage severity ladder, from exhausted backup
/// batteries up to catastrophic structural loss.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DamageState {
    Ds0None,
    Ds1BackupExhausted,
    Ds2GeneratorFailure,
    Ds3GeneratorDamage,
    Ds4EquipmentLoss,
    Ds5Catastrophic,
}

impl DamageState {
    pub fn as_str(self) -> &'static str {
        match self {
            DamageState::Ds0None => "DS0_none",
            DamageState::Ds1BackupExhausted => "DS1_backup_exhausted",
            DamageState::Ds2GeneratorFailure => "DS2_generator_failure",
            DamageState::Ds3GeneratorDamage => "DS3_generator_damage",
            DamageState::Ds4EquipmentLoss => "DS4_equipment_loss",
            DamageState::Ds5Catastrophic => "DS5_catastrophic",
        }
    }

    /// Numeric rank, DS0 = 0 .. DS5 = 5.
    pub fn rank(self) -> u8 {
        match self {
            DamageState::Ds0None => 0,
            DamageState::Ds1BackupExhausted => 1,
            DamageState::Ds2GeneratorFailure => 2,
            DamageState::Ds3GeneratorDamage => 3,
            DamageState::Ds4EquipmentLoss => 4,
            DamageState::Ds5Catastrophic => 5,
        }
    }
}

impl fmt::Display for DamageState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-asset intersection outcome for one hazard layer.
///
/// `intensity` is absent when the asset falls outside the raster extent or on
/// a nodata cell. An asset is *exposed* when its intensity is present and
/// strictly above the layer's exposure threshold; only exposed assets carry a
/// nonzero damage fraction, cost, and state.
#[derive(Debug, Clone, PartialEq)]
pub struct ExposureRecord {
    pub asset_id: String,
    pub lon: f64,
    pub lat: f64,
    pub generation: Generation,
    pub intensity: Option<f64>,
    pub exposed: bool,
    pub damage_fraction: f64,
    /// Exact product `damage_fraction * unit_cost` in USD; rounded to cents
    /// only at reporting boundaries.
    pub damage_cost: f64,
    pub damage_state: DamageState,
    pub region_id: Option<String>,
}

/// Grouped sums over exposure records: exposed-asset count and total damage
/// cost, held in integer cents so conservation checks are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregateResult {
    pub key: String,
    pub cell_count: u64,
    pub damage_cost_cents: i128,
}

impl AggregateResult {
    pub fn damage_cost_usd(&self) -> f64 {
        self.damage_cost_cents as f64 / 100.0
    }
}
