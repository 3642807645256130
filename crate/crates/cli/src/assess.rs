//! `hazcell assess`: run every manifest job and write the output tree.
//!
//! Outputs, all CSV, all byte-identical across reruns and worker counts:
//!
//! * `exposure_<scenario-key>.csv` — one row per exposed asset, sorted by
//!   asset id;
//! * `regions_<scenario-key>.csv` — per-region aggregates, sorted by region
//!   id, including zero rows for regions without exposure;
//! * `summary.csv` — ensemble statistics per scenario group with percent
//!   change against the designated baselines;
//! * `manifest.json` — the manifest with input paths resolved, so report and
//!   export commands can locate the sources.

use crate::load::{load_inputs, resolved_manifest, LoadedInputs};
use crate::{runtime_io, CliError};
use hazcell_core::engine::{
    aggregate, assess_layer, exposure_threshold_for, summarize, AssessOptions, GroupBy,
    UNASSIGNED_KEY,
};
use hazcell_core::ingest::read_raster_asc;
use hazcell_core::model::{ExposureRecord, HazardRaster, IntensityUnit, Scenario};
use hazcell_core::money;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const SUMMARY_HEADER: [&str; 14] = [
    "hazard",
    "pathway",
    "epoch",
    "return_period_years",
    "annual_probability",
    "members",
    "cell_count_mean",
    "cell_count_min",
    "cell_count_max",
    "damage_cost_mean",
    "damage_cost_min",
    "damage_cost_max",
    "pct_change_cells",
    "pct_change_cost",
];

pub const EXPOSURE_HEADER: [&str; 9] = [
    "asset_id",
    "lon",
    "lat",
    "generation",
    "intensity",
    "damage_fraction",
    "damage_cost",
    "damage_state",
    "region_id",
];

pub const REGIONS_HEADER: [&str; 3] = ["region_id", "cell_count", "damage_cost_total"];

/// Serializes rows to CSV bytes and writes them in one shot.
pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(header)
        .and_then(|_| rows.iter().try_for_each(|row| writer.write_record(row)))
        .map_err(|e| CliError::Runtime(format!("writing {}: {e}", path.display())))?;
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Runtime(format!("writing {}: {e}", path.display())))?;
    runtime_io(std::fs::write(path, bytes), &format!("writing {}", path.display()))
}

fn exposure_rows(records: &[ExposureRecord]) -> Vec<Vec<String>> {
    let mut exposed: Vec<&ExposureRecord> = records.iter().filter(|r| r.exposed).collect();
    exposed.sort_by(|a, b| a.asset_id.cmp(&b.asset_id));
    exposed
        .iter()
        .map(|r| {
            vec![
                r.asset_id.clone(),
                r.lon.to_string(),
                r.lat.to_string(),
                r.generation.to_string(),
                r.intensity.map(|v| v.to_string()).unwrap_or_default(),
                r.damage_fraction.to_string(),
                money::fmt_usd(r.damage_cost),
                r.damage_state.to_string(),
                r.region_id.clone().unwrap_or_else(|| UNASSIGNED_KEY.into()),
            ]
        })
        .collect()
}

fn region_rows(
    records: &[ExposureRecord],
    inputs: &LoadedInputs,
) -> Vec<Vec<String>> {
    let mut groups: BTreeMap<String, (u64, i128)> = BTreeMap::new();
    // Every region from the regions file appears, even with no assets at all.
    for region in &inputs.regions {
        groups.entry(region.region_id.clone()).or_insert((0, 0));
    }
    for agg in aggregate(records, GroupBy::RegionId, &inputs.regions) {
        groups.insert(agg.key, (agg.cell_count, agg.damage_cost_cents));
    }
    groups
        .into_iter()
        .map(|(region_id, (count, cents))| {
            vec![region_id, count.to_string(), money::fmt_cents(cents)]
        })
        .collect()
}

/// Runs the full assessment. Returns the output directory.
pub fn cmd_assess(
    manifest_path: &Path,
    out_override: Option<&Path>,
    workers: usize,
) -> Result<PathBuf, CliError> {
    let inputs = load_inputs(manifest_path)?;
    let out_dir = match out_override {
        Some(p) => p.to_path_buf(),
        None => inputs.base.join(&inputs.manifest.output_dir),
    };
    runtime_io(
        std::fs::create_dir_all(&out_dir),
        &format!("creating output directory {}", out_dir.display()),
    )?;

    let copy = resolved_manifest(&inputs.manifest, &inputs.base);
    runtime_io(
        std::fs::write(out_dir.join("manifest.json"), copy.to_json_pretty()),
        "writing manifest copy",
    )?;

    if inputs.asset_report.rejected_count > 0 {
        log::warn!(
            "{} asset rows rejected (run validate for details)",
            inputs.asset_report.rejected_count
        );
    }

    let region_index = hazcell_core::spatial::RegionIndex::build(&inputs.regions);
    let mut raster_cache: BTreeMap<(PathBuf, IntensityUnit), HazardRaster> = BTreeMap::new();
    let mut job_outcomes: Vec<(Scenario, u64, i128)> = Vec::with_capacity(inputs.jobs.len());

    for job in &inputs.jobs {
        let key = job.scenario.key();
        let cache_key = (job.raster_path.clone(), job.units);
        if !raster_cache.contains_key(&cache_key) {
            let raster = read_raster_asc(&job.raster_path, job.units)?;
            raster_cache.insert(cache_key.clone(), raster);
        }
        let raster = &raster_cache[&cache_key];
        let curve = &inputs.curves[&job.curve_id];
        let opts = AssessOptions {
            exposure_threshold: exposure_threshold_for(
                &inputs.manifest.thresholds,
                job.scenario.hazard,
                curve,
            ),
            state_thresholds: inputs.manifest.thresholds.damage_state,
            workers,
        };
        let records = assess_layer(
            &inputs.assets,
            raster,
            curve,
            &job.scenario,
            &region_index,
            &opts,
        )?;

        write_csv(
            &out_dir.join(format!("exposure_{key}.csv")),
            &EXPOSURE_HEADER,
            &exposure_rows(&records),
        )?;
        write_csv(
            &out_dir.join(format!("regions_{key}.csv")),
            &REGIONS_HEADER,
            &region_rows(&records, &inputs),
        )?;

        let global = aggregate(&records, GroupBy::All, &inputs.regions);
        let (count, cents) = global
            .first()
            .map(|a| (a.cell_count, a.damage_cost_cents))
            .unwrap_or((0, 0));
        log::info!("{key}: {count} exposed cells, {} USD", money::fmt_cents(cents));
        job_outcomes.push((job.scenario.clone(), count, cents));
    }

    let summary = summarize(&job_outcomes, &inputs.manifest.baselines)?;
    let rows: Vec<Vec<String>> = summary
        .iter()
        .map(|row| {
            vec![
                row.group.hazard.to_string(),
                row.group.pathway.to_string(),
                row.group.epoch.to_string(),
                row.group.return_period_years.to_string(),
                row.group.annual_probability().to_string(),
                row.stats.members.to_string(),
                row.stats.count_mean.to_string(),
                row.stats.count_min.to_string(),
                row.stats.count_max.to_string(),
                money::fmt_cents(row.stats.cost_mean_cents),
                money::fmt_cents(row.stats.cost_min_cents),
                money::fmt_cents(row.stats.cost_max_cents),
                row.pct_change_cells.map(|p| p.to_string()).unwrap_or_default(),
                row.pct_change_cost.map(|p| p.to_string()).unwrap_or_default(),
            ]
        })
        .collect();
    write_csv(&out_dir.join("summary.csv"), &SUMMARY_HEADER, &rows)?;

    println!(
        "assessed {} layers over {} assets -> {}",
        inputs.jobs.len(),
        inputs.assets.len(),
        out_dir.display()
    );
    Ok(out_dir)
}
