//! Orchestration: scenario enumeration, per-asset intersection, aggregation,
//! ensemble statistics, and baseline comparison.
//!
//! Determinism contract: identical inputs produce identical results for any
//! worker count. Per-asset work is pure and collected in asset order; cost
//! totals are integer-cent sums, so partial aggregates recombine exactly no
//! matter how the work was partitioned.

use crate::ingest::CostConfig;
use crate::model::{
    AggregateResult, Asset, DamageCurve, ExposureRecord, Hazard, HazardRaster, IntensityUnit,
    ModelError, Pathway, Region, Scenario, ScenarioGroup,
};
use crate::money;
use crate::spatial::{self, RegionIndex};
use crate::vulnerability::{self, DamageStateThresholds};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("cannot read manifest {path}: {source}")]
    ManifestIo {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("manifest {path}: {source}")]
    ManifestJson {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("manifest: {0}")]
    InvalidManifest(String),
    #[error("manifest: {0}")]
    InvalidScenario(#[from] ModelError),
    #[error("duplicate scenario key {0}")]
    DuplicateScenario(String),
    #[error("job {key} references unknown curve_id {curve_id:?}")]
    DanglingCurve { key: String, curve_id: String },
    #[error("job {key}: raster path {path} does not exist")]
    MissingRaster { key: String, path: PathBuf },
    #[error("curve {curve_id:?}: file {path} does not exist")]
    MissingCurveFile { curve_id: String, path: PathBuf },
    #[error("curve {curve} is in {curve_unit} but raster is in {raster_unit}")]
    UnitMismatch {
        curve: String,
        curve_unit: IntensityUnit,
        raster_unit: IntensityUnit,
    },
    #[error("ensemble statistics over an empty member set")]
    EmptyEnsemble,
}

// ---------------------------------------------------------------------------
// Manifest
// ---------------------------------------------------------------------------

/// Exposure and zonal thresholds, plus the damage-state mapping.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Thresholds {
    /// Minimum intensity (strict) for an asset to count as exposed, per
    /// hazard. Hazards not listed use the built-in default: 0 for floods,
    /// the first damaging curve knot for cyclones.
    pub exposure: BTreeMap<Hazard, f64>,
    /// Minimum intensity (strict) for a pixel to count as flooded in zonal
    /// statistics.
    pub zonal: f64,
    /// Damage-fraction bounds mapping onto the DS1..DS5 severity ladder.
    pub damage_state: DamageStateThresholds,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            exposure: BTreeMap::new(),
            zonal: 0.0,
            damage_state: DamageStateThresholds::default(),
        }
    }
}

/// One hazard layer to assess: a scenario bound to a raster file and a
/// damage curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestJob {
    pub scenario: Scenario,
    /// Path to an ESRI ASCII grid, relative to the manifest file.
    pub raster: String,
    /// Key into the manifest's curve bindings.
    pub curve_id: String,
    /// Raster units; defaults to the hazard's natural unit when omitted.
    #[serde(default)]
    pub units: Option<IntensityUnit>,
}

/// Which (pathway, epoch) serves as the historical reference for a hazard.
/// Return periods are matched per summary row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaselineSpec {
    pub hazard: Hazard,
    pub pathway: Pathway,
    pub epoch: i32,
}

/// The assessment manifest: inputs, curve bindings, thresholds, jobs,
/// baseline designations, and the default output directory.
///
/// All paths are resolved relative to the directory containing the manifest
/// file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioManifest {
    /// Asset CSV in the OpenCellID export layout.
    pub assets: String,
    /// Optional region GeoJSON; without it every asset reports as unassigned.
    #[serde(default)]
    pub regions: Option<String>,
    #[serde(default)]
    pub cost: CostConfig,
    /// curve_id -> curve CSV path.
    pub curves: BTreeMap<String, String>,
    #[serde(default)]
    pub thresholds: Thresholds,
    pub jobs: Vec<ManifestJob>,
    #[serde(default)]
    pub baselines: Vec<BaselineSpec>,
    #[serde(default = "default_output_dir")]
    pub output_dir: String,
}

fn default_output_dir() -> String {
    "out".to_string()
}

impl ScenarioManifest {
    pub fn from_path(path: &Path) -> Result<ScenarioManifest, EngineError> {
        let text = std::fs::read_to_string(path).map_err(|e| EngineError::ManifestIo {
            path: path.to_path_buf(),
            source: e,
        })?;
        let manifest: ScenarioManifest =
            serde_json::from_str(&text).map_err(|e| EngineError::ManifestJson {
                path: path.to_path_buf(),
                source: e,
            })?;
        manifest.validate()?;
        Ok(manifest)
    }

    /// Structural validation: scenario fields, distinct scenario keys,
    /// resolvable curve bindings, sane thresholds.
    pub fn validate(&self) -> Result<(), EngineError> {
        let mut keys = BTreeSet::new();
        for job in &self.jobs {
            let scenario = job.scenario.clone().validated()?;
            let key = scenario.key();
            if !keys.insert(key.clone()) {
                return Err(EngineError::DuplicateScenario(key));
            }
            if !self.curves.contains_key(&job.curve_id) {
                return Err(EngineError::DanglingCurve {
                    key,
                    curve_id: job.curve_id.clone(),
                });
            }
        }
        self.thresholds
            .damage_state
            .validate()
            .map_err(|e| EngineError::InvalidManifest(e.to_string()))?;
        if !(self.thresholds.zonal.is_finite() && self.thresholds.zonal >= 0.0) {
            return Err(EngineError::InvalidManifest(format!(
                "zonal threshold {} must be nonnegative",
                self.thresholds.zonal
            )));
        }
        for (hazard, threshold) in &self.thresholds.exposure {
            if !(threshold.is_finite() && *threshold >= 0.0) {
                return Err(EngineError::InvalidManifest(format!(
                    "exposure threshold {threshold} for {hazard} must be nonnegative"
                )));
            }
        }
        if !(self.cost.default_unit_cost_usd.is_finite() && self.cost.default_unit_cost_usd >= 0.0)
        {
            return Err(EngineError::InvalidManifest(format!(
                "default_unit_cost_usd {} must be nonnegative",
                self.cost.default_unit_cost_usd
            )));
        }
        Ok(())
    }

    /// Canonical JSON serialization (used for the round-trippable manifest
    /// copy written next to assessment outputs).
    pub fn to_json_pretty(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        text
    }
}

/// A fully resolved layer job: absolute paths, concrete units.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerJob {
    pub scenario: Scenario,
    pub raster_path: PathBuf,
    pub curve_id: String,
    pub curve_path: PathBuf,
    pub units: IntensityUnit,
}

/// Resolves and orders the manifest's jobs deterministically by
/// (hazard, pathway, epoch, return period, member). Verifies that every
/// referenced raster and curve file exists.
pub fn enumerate_jobs(
    manifest: &ScenarioManifest,
    base_dir: &Path,
) -> Result<Vec<LayerJob>, EngineError> {
    manifest.validate()?;
    let mut jobs = Vec::with_capacity(manifest.jobs.len());
    for job in &manifest.jobs {
        let key = job.scenario.key();
        let raster_path = base_dir.join(&job.raster);
        if !raster_path.is_file() {
            return Err(EngineError::MissingRaster {
                key,
                path: raster_path,
            });
        }
        let curve_rel = &manifest.curves[&job.curve_id];
        let curve_path = base_dir.join(curve_rel);
        if !curve_path.is_file() {
            return Err(EngineError::MissingCurveFile {
                curve_id: job.curve_id.clone(),
                path: curve_path,
            });
        }
        jobs.push(LayerJob {
            scenario: job.scenario.clone(),
            raster_path,
            curve_id: job.curve_id.clone(),
            curve_path,
            units: job.units.unwrap_or_else(|| job.scenario.hazard.default_unit()),
        });
    }
    jobs.sort_by(|a, b| {
        let ka = a.scenario.sort_key();
        let kb = b.scenario.sort_key();
        ka.cmp(&kb)
    });
    log::debug!("enumerated {} layer jobs", jobs.len());
    Ok(jobs)
}

// ---------------------------------------------------------------------------
// Per-layer assessment
// ---------------------------------------------------------------------------

/// Settings for one `assess_layer` run.
#[derive(Debug, Clone)]
pub struct AssessOptions {
    /// Strict lower intensity bound for exposure.
    pub exposure_threshold: f64,
    pub state_thresholds: DamageStateThresholds,
    /// Worker threads; 0 uses the ambient rayon pool.
    pub workers: usize,
}

impl Default for AssessOptions {
    fn default() -> Self {
        AssessOptions {
            exposure_threshold: 0.0,
            state_thresholds: DamageStateThresholds::default(),
            workers: 0,
        }
    }
}

/// Exposure threshold for a job: the manifest override when present,
/// otherwise the hazard/curve default.
pub fn exposure_threshold_for(
    thresholds: &Thresholds,
    hazard: Hazard,
    curve: &DamageCurve,
) -> f64 {
    thresholds
        .exposure
        .get(&hazard)
        .copied()
        .unwrap_or_else(|| vulnerability::default_exposure_threshold(hazard, curve))
}

fn assess_one(
    asset: &Asset,
    raster: &HazardRaster,
    curve: &DamageCurve,
    region_index: &RegionIndex<'_>,
    opts: &AssessOptions,
) -> ExposureRecord {
    let intensity = spatial::sample(raster, asset.lon, asset.lat);
    let exposed = matches!(intensity, Some(v) if v > opts.exposure_threshold);
    let (fraction, cost) = if exposed {
        let f = vulnerability::interpolate_fraction(curve, intensity.unwrap());
        (f, vulnerability::damage_cost(f, asset.unit_cost))
    } else {
        (0.0, 0.0)
    };
    let state = vulnerability::classify_damage_state(fraction, &opts.state_thresholds);
    let region_id = region_index
        .assign_region(asset.lon, asset.lat)
        .map(|r| r.region_id.clone());
    ExposureRecord {
        asset_id: asset.asset_id.clone(),
        lon: asset.lon,
        lat: asset.lat,
        generation: asset.generation(),
        intensity,
        exposed,
        damage_fraction: fraction,
        damage_cost: cost,
        damage_state: state,
        region_id,
    }
}

/// Intersects every asset with one hazard layer, producing one record per
/// asset in asset order. Workers split the asset list; per-asset work is
/// pure, so the result is identical for any worker count.
pub fn assess_layer(
    assets: &[Asset],
    raster: &HazardRaster,
    curve: &DamageCurve,
    scenario: &Scenario,
    region_index: &RegionIndex<'_>,
    opts: &AssessOptions,
) -> Result<Vec<ExposureRecord>, EngineError> {
    if curve.intensity_unit != raster.units() {
        return Err(EngineError::UnitMismatch {
            curve: curve.curve_id.clone(),
            curve_unit: curve.intensity_unit,
            raster_unit: raster.units(),
        });
    }
    let run = || {
        assets
            .par_iter()
            .map(|asset| assess_one(asset, raster, curve, region_index, opts))
            .collect()
    };
    let started = std::time::Instant::now();
    let records: Vec<ExposureRecord> = if opts.workers == 0 {
        run()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .expect("building a worker pool");
        pool.install(run)
    };
    log::debug!(
        "assessed {} assets against {} in {:?}",
        records.len(),
        scenario.key(),
        started.elapsed()
    );
    Ok(records)
}

// ---------------------------------------------------------------------------
// Aggregation
// ---------------------------------------------------------------------------

/// Dimension to group exposure records by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupBy {
    /// Single global group, keyed "all".
    All,
    RegionId,
    Continent,
    IncomeGroup,
    Generation,
}

/// Group key for records outside every region (or with no region attribute).
pub const UNASSIGNED_KEY: &str = "unassigned";

/// Groups records and sums them: exposed-record count plus cent-exact damage
/// cost totals. Every record contributes to exactly one group; records that
/// are not exposed contribute zero to both count and cost. Output is sorted
/// by group key.
pub fn aggregate(
    records: &[ExposureRecord],
    group_by: GroupBy,
    regions: &[Region],
) -> Vec<AggregateResult> {
    // region_id -> (continent, income group) for attribute lookups.
    let mut attrs: BTreeMap<&str, (&str, &str)> = BTreeMap::new();
    if matches!(group_by, GroupBy::Continent | GroupBy::IncomeGroup) {
        for region in regions {
            attrs
                .entry(region.region_id.as_str())
                .or_insert((region.continent.as_str(), region.income_group.as_str()));
        }
    }

    // Keys borrow from the records to keep the hot loop allocation-free.
    let mut groups: BTreeMap<&str, (u64, i128)> = BTreeMap::new();
    for record in records {
        let key: &str = match group_by {
            GroupBy::All => "all",
            GroupBy::RegionId => record.region_id.as_deref().unwrap_or(UNASSIGNED_KEY),
            GroupBy::Generation => record.generation.as_str(),
            GroupBy::Continent | GroupBy::IncomeGroup => record
                .region_id
                .as_deref()
                .and_then(|id| attrs.get(id))
                .map(|&(continent, income)| {
                    if group_by == GroupBy::Continent {
                        continent
                    } else {
                        income
                    }
                })
                .unwrap_or(UNASSIGNED_KEY),
        };
        let entry = groups.entry(key).or_insert((0, 0));
        if record.exposed {
            entry.0 += 1;
            entry.1 += money::to_cents(record.damage_cost);
        }
    }

    groups
        .into_iter()
        .map(|(key, (cell_count, damage_cost_cents))| AggregateResult {
            key: key.to_string(),
            cell_count,
            damage_cost_cents,
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Ensemble statistics and baseline comparison
// ---------------------------------------------------------------------------

/// Mean/min/max over ensemble member totals. Counts report the mean rounded
/// half up; the unrounded means are kept for percent-change arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleStats {
    pub members: usize,
    pub count_mean: u64,
    pub count_min: u64,
    pub count_max: u64,
    pub cost_mean_cents: i128,
    pub cost_min_cents: i128,
    pub cost_max_cents: i128,
    pub count_mean_raw: f64,
    pub cost_mean_raw: f64,
}

/// Aggregates per-member (cell count, cost cents) outcomes of one scenario
/// group into ensemble statistics.
pub fn ensemble_stats(members: &[(u64, i128)]) -> Result<EnsembleStats, EngineError> {
    if members.is_empty() {
        return Err(EngineError::EmptyEnsemble);
    }
    let n = members.len();
    let count_sum: u128 = members.iter().map(|&(c, _)| c as u128).sum();
    let cost_sum: i128 = members.iter().map(|&(_, c)| c).sum();
    let cost_mean_cents = {
        // Costs are nonnegative in practice, but keep the sign safe.
        let neg = cost_sum < 0;
        let mean = money::mean_round_half_up(cost_sum.unsigned_abs(), n as u128) as i128;
        if neg {
            -mean
        } else {
            mean
        }
    };
    Ok(EnsembleStats {
        members: n,
        count_mean: money::mean_round_half_up(count_sum, n as u128) as u64,
        count_min: members.iter().map(|&(c, _)| c).min().unwrap(),
        count_max: members.iter().map(|&(c, _)| c).max().unwrap(),
        cost_mean_cents,
        cost_min_cents: members.iter().map(|&(_, c)| c).min().unwrap(),
        cost_max_cents: members.iter().map(|&(_, c)| c).max().unwrap(),
        count_mean_raw: count_sum as f64 / n as f64,
        cost_mean_raw: cost_sum as f64 / n as f64,
    })
}

/// Signed integer percent change of `future` against `baseline`, rounded to
/// the nearest point, half away from zero. `None` marks an undefined change
/// (baseline not positive).
pub fn pct_change_vs_baseline(future: f64, baseline: f64) -> Option<i64> {
    if !baseline.is_finite() || baseline <= 0.0 || !future.is_finite() {
        return None;
    }
    Some(((future / baseline - 1.0) * 100.0).round() as i64)
}

/// One summary row: ensemble statistics for a scenario group plus percent
/// change against its designated baseline group.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub group: ScenarioGroup,
    pub stats: EnsembleStats,
    pub pct_change_cells: Option<i64>,
    pub pct_change_cost: Option<i64>,
}

/// Builds the summary table from per-job global outcomes.
///
/// Jobs collapse into (hazard, pathway, epoch, return period) groups over
/// their model members; each group is compared against the baseline group
/// designated for its hazard at the same return period. Rows are sorted by
/// group key.
pub fn summarize(
    job_outcomes: &[(Scenario, u64, i128)],
    baselines: &[BaselineSpec],
) -> Result<Vec<SummaryRow>, EngineError> {
    type GroupKey = (&'static str, &'static str, i32, u32);
    let mut grouped: BTreeMap<GroupKey, Vec<(u64, i128)>> = BTreeMap::new();
    let mut group_of: BTreeMap<GroupKey, ScenarioGroup> = BTreeMap::new();
    for (scenario, count, cents) in job_outcomes {
        let group = scenario.group();
        grouped.entry(group.sort_key()).or_default().push((*count, *cents));
        group_of.insert(group.sort_key(), group);
    }

    let mut stats_by_group: BTreeMap<GroupKey, EnsembleStats> = BTreeMap::new();
    for (key, members) in &grouped {
        stats_by_group.insert(*key, ensemble_stats(members)?);
    }

    let baseline_for = |group: &ScenarioGroup| -> Option<&EnsembleStats> {
        let spec = baselines.iter().find(|b| b.hazard == group.hazard)?;
        let baseline_group = ScenarioGroup {
            hazard: group.hazard,
            pathway: spec.pathway,
            epoch: spec.epoch,
            return_period_years: group.return_period_years,
        };
        stats_by_group.get(&baseline_group.sort_key())
    };

    let mut rows = Vec::with_capacity(grouped.len());
    for (key, stats) in &stats_by_group {
        let group = group_of[key];
        let (pct_cells, pct_cost) = match baseline_for(&group) {
            Some(base) => (
                pct_change_vs_baseline(stats.count_mean_raw, base.count_mean_raw),
                pct_change_vs_baseline(stats.cost_mean_raw, base.cost_mean_raw),
            ),
            None => (None, None),
        };
        rows.push(SummaryRow {
            group,
            stats: stats.clone(),
            pct_change_cells: pct_cells,
            pct_change_cost: pct_cost,
        });
    }
    Ok(rows)
}
