//! Shared input loading for the validate and assess commands.

use crate::CliError;
use hazcell_core::engine::{enumerate_jobs, LayerJob, ScenarioManifest};
use hazcell_core::ingest::{read_assets, read_curve, read_regions, IngestReport};
use hazcell_core::model::{Asset, DamageCurve, Region};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub struct LoadedInputs {
    pub manifest: ScenarioManifest,
    /// Directory the manifest's relative paths resolve against.
    pub base: PathBuf,
    /// Jobs in deterministic order, with existing raster / curve files.
    pub jobs: Vec<LayerJob>,
    pub assets: Vec<Asset>,
    pub asset_report: IngestReport,
    pub regions: Vec<Region>,
    /// curve_id -> parsed curve, ids rebound to the manifest keys.
    pub curves: BTreeMap<String, DamageCurve>,
}

/// Directory of the manifest file, as an absolute path so resolved copies of
/// the manifest are stable across output directories.
pub fn manifest_base(manifest_path: &Path) -> Result<PathBuf, CliError> {
    let parent = manifest_path.parent().unwrap_or(Path::new("."));
    let parent = if parent.as_os_str().is_empty() {
        Path::new(".")
    } else {
        parent
    };
    std::path::absolute(parent)
        .map_err(|e| CliError::Runtime(format!("cannot resolve manifest directory: {e}")))
}

/// Parses the manifest and loads every referenced input, including all
/// curves. Rasters are loaded later, per job.
pub fn load_inputs(manifest_path: &Path) -> Result<LoadedInputs, CliError> {
    let manifest = ScenarioManifest::from_path(manifest_path)?;
    let base = manifest_base(manifest_path)?;
    let jobs = enumerate_jobs(&manifest, &base)?;

    let assets_path = base.join(&manifest.assets);
    let (assets, asset_report) = read_assets(&assets_path, &manifest.cost)?;

    let regions = match &manifest.regions {
        Some(rel) => read_regions(&base.join(rel))?,
        None => Vec::new(),
    };

    let mut curves = BTreeMap::new();
    for (curve_id, rel) in &manifest.curves {
        let mut curve = read_curve(&base.join(rel))?;
        curve.curve_id = curve_id.clone();
        curves.insert(curve_id.clone(), curve);
    }

    Ok(LoadedInputs {
        manifest,
        base,
        jobs,
        assets,
        asset_report,
        regions,
        curves,
    })
}

/// A copy of the manifest with every input path made absolute, suitable for
/// writing next to assessment outputs so downstream commands can find the
/// sources. The `output_dir` field is left untouched.
pub fn resolved_manifest(manifest: &ScenarioManifest, base: &Path) -> ScenarioManifest {
    let abs = |rel: &String| base.join(rel).to_string_lossy().into_owned();
    let mut resolved = manifest.clone();
    resolved.assets = abs(&manifest.assets);
    resolved.regions = manifest.regions.as_ref().map(abs);
    resolved.curves = manifest
        .curves
        .iter()
        .map(|(id, rel)| (id.clone(), abs(rel)))
        .collect();
    for job in &mut resolved.jobs {
        job.raster = abs(&job.raster);
    }
    resolved
}
