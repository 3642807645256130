//! File readers: asset CSVs, ESRI ASCII grid rasters, region GeoJSON, and
//! damage-curve CSVs.
//!
//! Parsing is total: every input row ends up either accepted or rejected with
//! a line number and reason — never silently dropped. Structural problems
//! (missing file, malformed header) are fatal errors instead.

use crate::model::{
    Asset, DamageCurve, Generation, HazardRaster, IntensityUnit, ModelError, Radio, Region,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: malformed header: {reason}")]
    BadHeader { path: PathBuf, reason: String },
    #[error("{path}:{line}: {reason}")]
    BadLine {
        path: PathBuf,
        line: u64,
        reason: String,
    },
    #[error("{path}: {reason}")]
    BadFile { path: PathBuf, reason: String },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        source: csv::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{path}: {source}")]
    Invalid {
        path: PathBuf,
        source: ModelError,
    },
}

/// Accounting for one parsed file: every record is either accepted or
/// rejected with a (line number, reason) entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IngestReport {
    pub accepted_count: usize,
    pub rejected_count: usize,
    pub rejection_reasons: Vec<(u64, String)>,
}

impl IngestReport {
    pub fn total(&self) -> usize {
        self.accepted_count + self.rejected_count
    }

    fn reject(&mut self, line: u64, reason: String) {
        self.rejected_count += 1;
        self.rejection_reasons.push((line, reason));
    }
}

/// Per-cell replacement cost configuration: a default, optionally refined per
/// cellular generation. Rows may also carry their own `unit_cost` column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CostConfig {
    pub default_unit_cost_usd: f64,
    #[serde(default)]
    pub per_generation: BTreeMap<Generation, f64>,
}

impl Default for CostConfig {
    fn default() -> Self {
        CostConfig {
            default_unit_cost_usd: crate::model::DEFAULT_UNIT_COST_USD,
            per_generation: BTreeMap::new(),
        }
    }
}

impl CostConfig {
    pub fn unit_cost_for(&self, generation: Generation) -> f64 {
        self.per_generation
            .get(&generation)
            .copied()
            .unwrap_or(self.default_unit_cost_usd)
    }
}

// ---------------------------------------------------------------------------
// Asset CSV
// ---------------------------------------------------------------------------

/// Columns an asset CSV must provide, matching the OpenCellID public export
/// layout (lon at index 6, lat at index 7).
const REQUIRED_ASSET_COLUMNS: [&str; 7] = ["radio", "mcc", "net", "area", "cell", "lon", "lat"];

/// Reads an OpenCellID-layout CSV into assets.
///
/// Every valid row becomes one asset with its generation derived from the
/// radio column and its unit cost taken from `cost` (or from an optional
/// `unit_cost` column when present). Rows with unknown radio labels or
/// out-of-range coordinates are rejected into the report. Duplicate cell
/// identifiers are kept as-is; de-duplication is a preprocessing concern.
pub fn read_assets(
    path: &Path,
    cost: &CostConfig,
) -> Result<(Vec<Asset>, IngestReport), IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .from_path(path)
        .map_err(|e| match e.kind() {
            csv::ErrorKind::Io(_) => IngestError::Io {
                path: path.to_path_buf(),
                source: std::io::Error::other(e.to_string()),
            },
            _ => IngestError::Csv {
                path: path.to_path_buf(),
                source: e,
            },
        })?;

    let headers = reader
        .headers()
        .map_err(|e| IngestError::Csv {
            path: path.to_path_buf(),
            source: e,
        })?
        .clone();
    let col = |name: &str| headers.iter().position(|h| h == name);
    let mut required = [0usize; 7];
    for (slot, name) in required.iter_mut().zip(REQUIRED_ASSET_COLUMNS) {
        *slot = col(name).ok_or_else(|| IngestError::BadHeader {
            path: path.to_path_buf(),
            reason: format!("missing required column {name:?}"),
        })?;
    }
    let [c_radio, c_mcc, c_net, c_area, c_cell, c_lon, c_lat] = required;
    let c_unit_cost = col("unit_cost");

    let mut assets = Vec::new();
    let mut report = IngestReport::default();

    for record in reader.records() {
        let record = record.map_err(|e| IngestError::Csv {
            path: path.to_path_buf(),
            source: e,
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let field = |i: usize| record.get(i).unwrap_or("");

        let radio = match Radio::parse(field(c_radio)) {
            Ok(r) => r,
            Err(e) => {
                report.reject(line, e.to_string());
                continue;
            }
        };
        let lon: f64 = match field(c_lon).trim().parse() {
            Ok(v) => v,
            Err(_) => {
                report.reject(line, format!("lon {:?} is not a number", field(c_lon)));
                continue;
            }
        };
        let lat: f64 = match field(c_lat).trim().parse() {
            Ok(v) => v,
            Err(_) => {
                report.reject(line, format!("lat {:?} is not a number", field(c_lat)));
                continue;
            }
        };
        let mut unit_cost = cost.unit_cost_for(radio.generation());
        if let Some(ci) = c_unit_cost {
            let raw = field(ci).trim();
            if !raw.is_empty() {
                match raw.parse::<f64>() {
                    Ok(v) => unit_cost = v,
                    Err(_) => {
                        report.reject(line, format!("unit_cost {raw:?} is not a number"));
                        continue;
                    }
                }
            }
        }

        let asset_id = format!(
            "{}-{}-{}-{}",
            field(c_mcc),
            field(c_net),
            field(c_area),
            field(c_cell)
        );
        match Asset::new(asset_id, lon, lat, radio, unit_cost) {
            Ok(asset) => {
                report.accepted_count += 1;
                assets.push(asset);
            }
            Err(e) => report.reject(line, e.to_string()),
        }
    }

    Ok((assets, report))
}

// ---------------------------------------------------------------------------
// ESRI ASCII grid
// ---------------------------------------------------------------------------

const ASC_HEADER_KEYS: [&str; 6] = [
    "ncols",
    "nrows",
    "xllcorner",
    "yllcorner",
    "cellsize",
    "nodata_value",
];

/// Reads an ESRI ASCII grid. Header keys are case-insensitive and may appear
/// in any order; all six are required. Data rows follow north row first, and
/// every row must carry exactly `ncols` values.
pub fn read_raster_asc(path: &Path, units: IntensityUnit) -> Result<HazardRaster, IngestError> {
    let text = fs::read_to_string(path).map_err(|e| IngestError::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    let bad_line = |line: u64, reason: String| IngestError::BadLine {
        path: path.to_path_buf(),
        line,
        reason,
    };

    let mut header: BTreeMap<&str, f64> = BTreeMap::new();
    let mut lines = text.lines().enumerate().peekable();
    while let Some(&(i, line)) = lines.peek() {
        let mut parts = line.split_whitespace();
        let Some(key) = parts.next() else {
            lines.next(); // skip blank lines between header entries
            continue;
        };
        let key_lc = key.to_ascii_lowercase();
        let Some(canonical) = ASC_HEADER_KEYS.iter().find(|&&k| k == key_lc) else {
            break; // data section starts
        };
        let value: f64 = parts
            .next()
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad_line(i as u64 + 1, format!("header {key} needs a numeric value")))?;
        if parts.next().is_some() {
            return Err(bad_line(i as u64 + 1, format!("header {key} has trailing tokens")));
        }
        if header.insert(canonical, value).is_some() {
            return Err(bad_line(i as u64 + 1, format!("duplicate header key {key}")));
        }
        lines.next();
    }

    for key in ASC_HEADER_KEYS {
        if !header.contains_key(key) {
            return Err(IngestError::BadHeader {
                path: path.to_path_buf(),
                reason: format!("missing header key {key}"),
            });
        }
    }

    let as_count = |key: &str| -> Result<usize, IngestError> {
        let v = header[key];
        if v.fract() == 0.0 && v >= 1.0 && v <= u32::MAX as f64 {
            Ok(v as usize)
        } else {
            Err(IngestError::BadHeader {
                path: path.to_path_buf(),
                reason: format!("{key} must be a positive integer, got {v}"),
            })
        }
    };
    let ncols = as_count("ncols")?;
    let nrows = as_count("nrows")?;
    let cellsize = header["cellsize"];
    if cellsize <= 0.0 {
        return Err(IngestError::BadHeader {
            path: path.to_path_buf(),
            reason: format!("cellsize must be > 0, got {cellsize}"),
        });
    }

    let mut values = Vec::with_capacity(ncols * nrows);
    let mut data_rows = 0usize;
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        data_rows += 1;
        if data_rows > nrows {
            return Err(bad_line(
                i as u64 + 1,
                format!("more than the declared {nrows} data rows"),
            ));
        }
        let before = values.len();
        for token in line.split_whitespace() {
            let v: f64 = token
                .parse()
                .map_err(|_| bad_line(i as u64 + 1, format!("bad value {token:?}")))?;
            values.push(v);
        }
        let got = values.len() - before;
        if got != ncols {
            return Err(bad_line(
                i as u64 + 1,
                format!("expected {ncols} values in row, got {got}"),
            ));
        }
    }
    if data_rows != nrows {
        return Err(IngestError::BadFile {
            path: path.to_path_buf(),
            reason: format!("expected {nrows} data rows, got {data_rows}"),
        });
    }

    HazardRaster::new(
        ncols,
        nrows,
        header["xllcorner"],
        header["yllcorner"],
        cellsize,
        header["nodata_value"],
        values,
        units,
    )
    .map_err(|e| IngestError::Invalid {
        path: path.to_path_buf(),
        source: e,
    })
}

// ---------------------------------------------------------------------------
// Region GeoJSON
// ---------------------------------------------------------------------------

/// Reads a GeoJSON FeatureCollection of Polygon / MultiPolygon features into
/// regions. Each MultiPolygon part becomes its own `Region` sharing the
/// feature's `region_id`. Properties `name`, `continent`, `income_group` and
/// `country_iso3` are optional and default to unknown.
pub fn read_regions(path: &Path) -> Result<Vec<Region>, IngestError> {
    let text = fs::read_to_string(path).map_err(|e| IngestError::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    let doc: serde_json::Value = serde_json::from_str(&text).map_err(|e| IngestError::Json {
        path: path.to_path_buf(),
        source: e,
    })?;
    let bad = |reason: String| IngestError::BadFile {
        path: path.to_path_buf(),
        reason,
    };

    if doc["type"] != "FeatureCollection" {
        return Err(bad("expected a GeoJSON FeatureCollection".into()));
    }
    let features = doc["features"]
        .as_array()
        .ok_or_else(|| bad("FeatureCollection has no features array".into()))?;

    let mut regions = Vec::new();
    for (fi, feature) in features.iter().enumerate() {
        let props = &feature["properties"];
        let region_id = match &props["region_id"] {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            _ => return Err(bad(format!("feature {fi} is missing property region_id"))),
        };
        let text_prop = |key: &str| {
            props[key]
                .as_str()
                .map(str::to_string)
                .unwrap_or_else(|| "unknown".to_string())
        };

        let geometry = &feature["geometry"];
        let polygons: Vec<&serde_json::Value> = match geometry["type"].as_str() {
            Some("Polygon") => vec![&geometry["coordinates"]],
            Some("MultiPolygon") => geometry["coordinates"]
                .as_array()
                .ok_or_else(|| bad(format!("feature {fi}: MultiPolygon without coordinates")))?
                .iter()
                .collect(),
            other => {
                return Err(bad(format!(
                    "feature {fi} ({region_id}): unsupported geometry type {other:?}"
                )))
            }
        };

        for poly in polygons {
            let rings_json = poly
                .as_array()
                .ok_or_else(|| bad(format!("feature {fi} ({region_id}): malformed rings")))?;
            let mut rings = Vec::with_capacity(rings_json.len());
            for ring in rings_json {
                let coords = ring
                    .as_array()
                    .ok_or_else(|| bad(format!("feature {fi} ({region_id}): malformed ring")))?;
                let mut parsed = Vec::with_capacity(coords.len());
                for pos in coords {
                    let pair = pos.as_array().filter(|p| p.len() >= 2).ok_or_else(|| {
                        bad(format!("feature {fi} ({region_id}): malformed position"))
                    })?;
                    let lon = pair[0].as_f64();
                    let lat = pair[1].as_f64();
                    match (lon, lat) {
                        (Some(lon), Some(lat)) => parsed.push((lon, lat)),
                        _ => {
                            return Err(bad(format!(
                                "feature {fi} ({region_id}): non-numeric coordinate"
                            )))
                        }
                    }
                }
                rings.push(parsed);
            }
            let mut region = Region::new(region_id.clone(), rings).map_err(|e| {
                IngestError::Invalid {
                    path: path.to_path_buf(),
                    source: e,
                }
            })?;
            region.name = text_prop("name");
            region.continent = text_prop("continent");
            region.income_group = crate::model::IncomeGroup::parse(&text_prop("income_group"));
            region.country_iso3 = text_prop("country_iso3");
            regions.push(region);
        }
    }
    Ok(regions)
}

// ---------------------------------------------------------------------------
// Damage curve CSV
// ---------------------------------------------------------------------------

/// Reads a damage curve file: first line `intensity_unit,<unit>`, then one
/// `intensity,fraction` pair per line. The curve id is the file stem.
pub fn read_curve(path: &Path) -> Result<DamageCurve, IngestError> {
    let text = fs::read_to_string(path).map_err(|e| IngestError::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    let mut lines = text.lines().enumerate();

    let (_, header) = lines
        .next()
        .ok_or_else(|| IngestError::BadHeader {
            path: path.to_path_buf(),
            reason: "empty file".into(),
        })?;
    let unit = match header.split(',').map(str::trim).collect::<Vec<_>>()[..] {
        ["intensity_unit", token] => {
            IntensityUnit::parse(token).ok_or_else(|| IngestError::BadHeader {
                path: path.to_path_buf(),
                reason: format!("unknown intensity unit {token:?}"),
            })?
        }
        _ => {
            return Err(IngestError::BadHeader {
                path: path.to_path_buf(),
                reason: format!("expected `intensity_unit,<unit>`, got {header:?}"),
            })
        }
    };

    let mut knots = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed = if parts.len() == 2 {
            parts[0].parse::<f64>().ok().zip(parts[1].parse::<f64>().ok())
        } else {
            None
        };
        let (x, f) = parsed.ok_or_else(|| IngestError::BadLine {
            path: path.to_path_buf(),
            line: i as u64 + 1,
            reason: format!("expected `intensity,fraction`, got {line:?}"),
        })?;
        knots.push((x, f));
    }

    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "curve".to_string());
    DamageCurve::new(stem, unit, knots).map_err(|e| IngestError::Invalid {
        path: path.to_path_buf(),
        source: e,
    })
}
