//! `hazcell report` and `hazcell export-geojson`: tidy long-format tables and
//! per-region GeoJSON built from assessment outputs.

use crate::assess::write_csv;
use crate::{runtime_io, CliError};
use hazcell_core::engine::{enumerate_jobs, ScenarioManifest};
use hazcell_core::ingest::{read_raster_asc, read_regions};
use hazcell_core::model::{HazardRaster, IntensityUnit};
use hazcell_core::money;
use hazcell_core::spatial::zonal_sum;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportKind {
    Counts,
    Costs,
    PctChange,
    Zonal,
}

impl ReportKind {
    pub fn token(self) -> &'static str {
        match self {
            ReportKind::Counts => "counts",
            ReportKind::Costs => "costs",
            ReportKind::PctChange => "pct_change",
            ReportKind::Zonal => "zonal",
        }
    }
}

const TIDY_HEADER: [&str; 7] = [
    "hazard",
    "pathway",
    "epoch",
    "return_period_years",
    "annual_probability",
    "statistic",
    "value",
];

const ZONAL_HEADER: [&str; 8] = [
    "hazard",
    "pathway",
    "epoch",
    "return_period_years",
    "model_member",
    "region_id",
    "flooded_pixel_count",
    "mean_intensity",
];

fn read_summary(out_dir: &Path) -> Result<Vec<BTreeMap<String, String>>, CliError> {
    let path = out_dir.join("summary.csv");
    if !path.is_file() {
        return Err(CliError::Validation(format!(
            "missing input {}: run `hazcell assess` first",
            path.display()
        )));
    }
    let mut reader = csv::Reader::from_path(&path)
        .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
    let headers = reader
        .headers()
        .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?
        .clone();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record =
            record.map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
        rows.push(
            headers
                .iter()
                .map(str::to_string)
                .zip(record.iter().map(str::to_string))
                .collect(),
        );
    }
    Ok(rows)
}

/// Emits `report_<kind>.csv` in the output directory: one row per scenario
/// group and statistic for the tabular kinds, one row per layer and region
/// for `zonal`.
pub fn cmd_report(out_dir: &Path, kind: ReportKind) -> Result<PathBuf, CliError> {
    let path = out_dir.join(format!("report_{}.csv", kind.token()));
    match kind {
        ReportKind::Zonal => {
            let rows = zonal_rows(out_dir)?;
            write_csv(&path, &ZONAL_HEADER, &rows)?;
        }
        _ => {
            let statistics: &[(&str, &str)] = match kind {
                ReportKind::Counts => &[
                    ("cells_mean", "cell_count_mean"),
                    ("cells_min", "cell_count_min"),
                    ("cells_max", "cell_count_max"),
                ],
                ReportKind::Costs => &[
                    ("cost_mean", "damage_cost_mean"),
                    ("cost_min", "damage_cost_min"),
                    ("cost_max", "damage_cost_max"),
                ],
                ReportKind::PctChange => &[
                    ("pct_change_cells", "pct_change_cells"),
                    ("pct_change_cost", "pct_change_cost"),
                ],
                ReportKind::Zonal => unreachable!(),
            };
            let summary = read_summary(out_dir)?;
            let mut rows = Vec::with_capacity(summary.len() * statistics.len());
            for entry in &summary {
                for &(label, column) in statistics {
                    rows.push(vec![
                        entry["hazard"].clone(),
                        entry["pathway"].clone(),
                        entry["epoch"].clone(),
                        entry["return_period_years"].clone(),
                        entry["annual_probability"].clone(),
                        label.to_string(),
                        entry[column].clone(),
                    ]);
                }
            }
            write_csv(&path, &TIDY_HEADER, &rows)?;
        }
    }
    println!("wrote {}", path.display());
    Ok(path)
}

fn load_output_manifest(out_dir: &Path) -> Result<ScenarioManifest, CliError> {
    let path = out_dir.join("manifest.json");
    if !path.is_file() {
        return Err(CliError::Validation(format!(
            "missing input {}: run `hazcell assess` first",
            path.display()
        )));
    }
    Ok(ScenarioManifest::from_path(&path)?)
}

/// Flooded-pixel counts and mean intensity per region per layer, computed
/// directly from the rasters and regions the manifest references.
fn zonal_rows(out_dir: &Path) -> Result<Vec<Vec<String>>, CliError> {
    let manifest = load_output_manifest(out_dir)?;
    let jobs = enumerate_jobs(&manifest, out_dir)?;
    let regions = match &manifest.regions {
        Some(path) => read_regions(&out_dir.join(path))?,
        None => Vec::new(),
    };
    let threshold = manifest.thresholds.zonal;

    let mut raster_cache: BTreeMap<(PathBuf, IntensityUnit), HazardRaster> = BTreeMap::new();
    let mut rows = Vec::new();
    for job in &jobs {
        let cache_key = (job.raster_path.clone(), job.units);
        if !raster_cache.contains_key(&cache_key) {
            raster_cache.insert(cache_key.clone(), read_raster_asc(&job.raster_path, job.units)?);
        }
        let raster = &raster_cache[&cache_key];

        // Merge MultiPolygon parts by region id, accumulating counts and
        // sums in file order so the mean is reproducible.
        let mut by_region: BTreeMap<&str, (u64, f64)> = BTreeMap::new();
        for region in &regions {
            let (count, sum) = zonal_sum(raster, region, threshold);
            let entry = by_region.entry(region.region_id.as_str()).or_insert((0, 0.0));
            entry.0 += count;
            entry.1 += sum;
        }
        for (region_id, (count, sum)) in by_region {
            let mean = if count == 0 {
                String::new()
            } else {
                (sum / count as f64).to_string()
            };
            rows.push(vec![
                job.scenario.hazard.to_string(),
                job.scenario.pathway.to_string(),
                job.scenario.epoch.to_string(),
                job.scenario.return_period_years.to_string(),
                job.scenario.model_member.clone(),
                region_id.to_string(),
                count.to_string(),
                mean,
            ]);
        }
    }
    Ok(rows)
}

/// Exports one scenario's per-region aggregates as a GeoJSON
/// FeatureCollection, copying the region geometry from the source file.
pub fn cmd_export_geojson(out_dir: &Path, scenario_key: &str) -> Result<PathBuf, CliError> {
    let aggregates_path = out_dir.join(format!("regions_{scenario_key}.csv"));
    if !aggregates_path.is_file() {
        let mut valid: Vec<String> = Vec::new();
        if let Ok(entries) = std::fs::read_dir(out_dir) {
            for entry in entries.flatten() {
                let name = entry.file_name().to_string_lossy().into_owned();
                if let Some(key) = name
                    .strip_prefix("regions_")
                    .and_then(|s| s.strip_suffix(".csv"))
                {
                    valid.push(key.to_string());
                }
            }
        }
        valid.sort();
        return Err(CliError::Validation(format!(
            "unknown scenario key {scenario_key:?}; valid keys: {}",
            if valid.is_empty() {
                "(none — run `hazcell assess` first)".to_string()
            } else {
                valid.join(", ")
            }
        )));
    }

    let manifest = load_output_manifest(out_dir)?;
    let regions_rel = manifest.regions.as_ref().ok_or_else(|| {
        CliError::Validation("manifest has no regions file to export geometry from".into())
    })?;
    let regions_path = out_dir.join(regions_rel);

    // Aggregates keyed by region id.
    let mut totals: BTreeMap<String, (u64, i128)> = BTreeMap::new();
    let mut reader = csv::Reader::from_path(&aggregates_path)
        .map_err(|e| CliError::Validation(format!("{}: {e}", aggregates_path.display())))?;
    for record in reader.records() {
        let record = record
            .map_err(|e| CliError::Validation(format!("{}: {e}", aggregates_path.display())))?;
        let region_id = record.get(0).unwrap_or("").to_string();
        let count: u64 = record.get(1).unwrap_or("0").parse().unwrap_or(0);
        let cents = record
            .get(2)
            .and_then(|s| s.parse::<f64>().ok())
            .map(money::to_cents)
            .unwrap_or(0);
        totals.insert(region_id, (count, cents));
    }

    // Copy geometry feature by feature from the source GeoJSON.
    let text = runtime_io(
        std::fs::read_to_string(&regions_path),
        &format!("reading {}", regions_path.display()),
    )?;
    let doc: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Validation(format!("{}: {e}", regions_path.display())))?;
    let features = doc["features"]
        .as_array()
        .ok_or_else(|| CliError::Validation("regions file has no features".into()))?;

    let mut out_features = Vec::with_capacity(features.len());
    for feature in features {
        let region_id = match &feature["properties"]["region_id"] {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            _ => continue,
        };
        let (count, cents) = totals.get(&region_id).copied().unwrap_or((0, 0));
        out_features.push(serde_json::json!({
            "type": "Feature",
            "properties": {
                "region_id": region_id,
                "cell_count": count,
                "damage_cost_total": money::fmt_cents(cents),
            },
            "geometry": feature["geometry"].clone(),
        }));
    }

    let collection = serde_json::json!({
        "type": "FeatureCollection",
        "features": out_features,
    });
    let path = out_dir.join(format!("export_{scenario_key}.geojson"));
    let mut body = serde_json::to_string_pretty(&collection)
        .map_err(|e| CliError::Runtime(format!("serializing geojson: {e}")))?;
    body.push('\n');
    runtime_io(std::fs::write(&path, body), &format!("writing {}", path.display()))?;
    println!("wrote {}", path.display());
    Ok(path)
}
