//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (run with `--nocapture` to see them). Budgets and
//! tolerances are pinned in the constants below.
//!
//! The brute-force reimplementations in this file are intentionally
//! independent, straight-line code paths: containing-cell lookup, hand
//! interpolation, direct multiplication, and a polygon scan, sharing nothing
//! with the library internals they check.

use hazcell_cli::asc::{raster_to_asc_string, write_raster_asc};
use hazcell_cli::assess::cmd_assess;
use hazcell_core::engine::{
    aggregate, assess_layer, pct_change_vs_baseline, AssessOptions, GroupBy, ScenarioManifest,
};
use hazcell_core::ingest::{read_curve, read_raster_asc};
use hazcell_core::model::{
    Asset, DamageCurve, DamageState, ExposureRecord, Hazard, HazardRaster, IntensityUnit, Pathway,
    Radio, Region, Scenario,
};
use hazcell_core::money;
use hazcell_core::spatial::{zonal_stats, RegionIndex};
use hazcell_core::vulnerability::{damage_cost, damage_fraction, DamageStateThresholds};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

const WORKED_EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
const PCT_CHANGE_BUDGET: Duration = Duration::from_secs(1);
const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const ZONAL_BUDGET: Duration = Duration::from_secs(30);
const DETERMINISM_BUDGET: Duration = Duration::from_secs(30);
const THROUGHPUT_BUDGET: Duration = Duration::from_secs(60);
const ORACLE_INSTANCES: usize = 100;
const ZONAL_INSTANCES: usize = 100;
const MONOTONE_INSTANCES: usize = 50;
const ROUND_TRIP_INSTANCES: usize = 20;
const THROUGHPUT_ASSETS: usize = 1_000_000;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn repo_data() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn criterion(n: u32, name: &str, ok: bool, details: &str) {
    println!(
        "[criterion {n}] {name}: {} ({details})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "[criterion {n}] {name} FAILED: {details}");
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

const NODATA: f64 = -9999.0;

fn random_raster(r: &mut ChaCha8Rng, max_cols: usize, max_rows: usize) -> HazardRaster {
    let ncols = r.random_range(1..=max_cols);
    let nrows = r.random_range(1..=max_rows);
    let cellsize = [0.25, 0.5, 1.0][r.random_range(0..3)];
    let xll = r.random_range(-5..5) as f64 * cellsize;
    let yll = r.random_range(-5..5) as f64 * cellsize;
    let values: Vec<f64> = (0..ncols * nrows)
        .map(|_| {
            if r.random_range(0.0..1.0) < 0.2 {
                NODATA
            } else {
                r.random_range(0.0..10.0)
            }
        })
        .collect();
    HazardRaster::new(
        ncols,
        nrows,
        xll,
        yll,
        cellsize,
        NODATA,
        values,
        IntensityUnit::MetersDepth,
    )
    .unwrap()
}

fn random_ring(r: &mut ChaCha8Rng, cx: f64, cy: f64, r_max: f64) -> Vec<(f64, f64)> {
    let n = r.random_range(3..10);
    let mut angles: Vec<f64> = (0..n)
        .map(|_| r.random_range(0.0..std::f64::consts::TAU))
        .collect();
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    angles.dedup();
    while angles.len() < 3 {
        angles.push(angles.last().unwrap() + 0.1);
    }
    let mut ring: Vec<(f64, f64)> = angles
        .iter()
        .map(|&a| {
            let rad = r.random_range(0.2..1.0) * r_max;
            (cx + rad * a.cos(), cy + rad * a.sin())
        })
        .collect();
    ring.push(ring[0]);
    ring
}

fn random_region(r: &mut ChaCha8Rng, id: &str, extent: f64) -> Region {
    let cx = r.random_range(-extent..extent);
    let cy = r.random_range(-extent..extent);
    let r_max = r.random_range(0.5..extent);
    let mut rings = vec![random_ring(r, cx, cy, r_max)];
    if r.random_range(0.0..1.0) < 0.3 {
        rings.push(random_ring(r, cx, cy, 0.15));
    }
    Region::new(id, rings).unwrap()
}

fn random_curve(r: &mut ChaCha8Rng) -> DamageCurve {
    let n = r.random_range(2..8);
    let mut x = 0.0;
    let mut f: f64 = 0.0;
    let mut knots = Vec::with_capacity(n);
    for _ in 0..n {
        knots.push((x, f.min(1.0)));
        x += r.random_range(0.2..3.0);
        f += r.random_range(0.0..0.4);
    }
    DamageCurve::new("random", IntensityUnit::MetersDepth, knots).unwrap()
}

fn random_assets(r: &mut ChaCha8Rng, n: usize, raster: &HazardRaster) -> Vec<Asset> {
    let radios = [Radio::Gsm, Radio::Umts, Radio::Lte, Radio::Nr];
    (0..n)
        .map(|i| {
            let (lon, lat) = if r.random_range(0.0..1.0) < 0.8 {
                (
                    r.random_range(raster.xll() - 1.0..raster.x_max() + 1.0),
                    r.random_range(raster.yll() - 1.0..raster.y_max() + 1.0),
                )
            } else {
                (r.random_range(-30.0..30.0), r.random_range(-30.0..30.0))
            };
            Asset::new(format!("cell-{i}"), lon, lat, radios[r.random_range(0..4)], 33_333.0)
                .unwrap()
        })
        .collect()
}

fn coastal_scenario() -> Scenario {
    Scenario {
        hazard: Hazard::Coastal,
        pathway: Pathway::Historical,
        epoch: 1980,
        return_period_years: 100,
        model_member: "p95_sub".to_string(),
    }
}

// ---------------------------------------------------------------------------
// Independent brute-force reimplementations
// ---------------------------------------------------------------------------

fn brute_in_region(region: &Region, x: f64, y: f64) -> bool {
    for ring in region.rings() {
        for w in ring.windows(2) {
            let (ax, ay) = w[0];
            let (bx, by) = w[1];
            let cross = (bx - ax) * (y - ay) - (by - ay) * (x - ax);
            if cross == 0.0
                && x >= ax.min(bx)
                && x <= ax.max(bx)
                && y >= ay.min(by)
                && y <= ay.max(by)
            {
                return true;
            }
        }
    }
    let mut crossings = 0usize;
    for ring in region.rings() {
        for w in ring.windows(2) {
            let (ax, ay) = w[0];
            let (bx, by) = w[1];
            if (ay > y) != (by > y) {
                let xc = ax + (y - ay) * (bx - ax) / (by - ay);
                if x < xc {
                    crossings += 1;
                }
            }
        }
    }
    crossings % 2 == 1
}

fn brute_assess(
    asset: &Asset,
    raster: &HazardRaster,
    curve: &DamageCurve,
    regions: &[Region],
    threshold: f64,
) -> ExposureRecord {
    let cs = raster.cellsize();
    let y_top = raster.yll() + raster.nrows() as f64 * cs;
    let col = ((asset.lon - raster.xll()) / cs).floor();
    let row = ((y_top - asset.lat) / cs).floor();
    let mut intensity = None;
    if col >= 0.0 && row >= 0.0 && col < raster.ncols() as f64 && row < raster.nrows() as f64 {
        let v = raster.value_at(row as usize, col as usize);
        if v != raster.nodata() {
            intensity = Some(v);
        }
    }
    let exposed = matches!(intensity, Some(v) if v > threshold);

    let mut fraction = 0.0;
    if exposed {
        let x = intensity.unwrap();
        let knots = curve.knots();
        let (x0, f0) = knots[0];
        let (xn, fn_) = knots[knots.len() - 1];
        fraction = if x <= x0 {
            f0
        } else if x >= xn {
            fn_
        } else {
            let mut i = 0;
            while !(knots[i].0 <= x && x < knots[i + 1].0) {
                i += 1;
            }
            let (xa, fa) = knots[i];
            let (xb, fb) = knots[i + 1];
            fa + (x - xa) * (fb - fa) / (xb - xa)
        };
    }
    let cost = fraction * asset.unit_cost;

    let t = DamageStateThresholds::default();
    let state = if fraction <= 0.0 {
        DamageState::Ds0None
    } else if fraction <= t.ds1_max {
        DamageState::Ds1BackupExhausted
    } else if fraction <= t.ds2_max {
        DamageState::Ds2GeneratorFailure
    } else if fraction <= t.ds3_max {
        DamageState::Ds3GeneratorDamage
    } else if fraction <= t.ds4_max {
        DamageState::Ds4EquipmentLoss
    } else {
        DamageState::Ds5Catastrophic
    };

    let region_id = regions
        .iter()
        .find(|region| brute_in_region(region, asset.lon, asset.lat))
        .map(|region| region.region_id.clone());

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

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_worked_example_exact() {
    let start = Instant::now();
    let curve = read_curve(&repo_data().join("curves/flood_depth_default.csv")).unwrap();
    let fraction = damage_fraction(&curve, 0.6, IntensityUnit::MetersDepth).unwrap();
    let cost = damage_cost(fraction, 33_333.0);
    let formatted = money::fmt_usd(cost);
    let elapsed = start.elapsed();

    let ok = fraction == 0.5
        && cost == 16_666.5
        && formatted == "16666.50"
        && elapsed < WORKED_EXAMPLE_BUDGET;
    criterion(
        1,
        "worked example exact",
        ok,
        &format!("fraction={fraction}, cost={formatted}, elapsed={elapsed:?}"),
    );
}

#[test]
fn criterion_2_percent_change_reproduction() {
    let start = Instant::now();
    let cases: [(f64, f64, i64); 7] = [
        (52.2, 79.9, 53),
        (52.2, 87.8, 68),
        (64.5, 99.7, 55),
        (64.5, 109.9, 70),
        (0.70, 1.01, 44),
        (0.03, 0.09, 200),
        (1.98, 2.26, 14),
    ];
    let mut failures = Vec::new();
    for (baseline, future, expected) in cases {
        match pct_change_vs_baseline(future, baseline) {
            Some(got) if (got - expected).abs() <= 1 => {}
            other => failures.push(format!("({baseline} -> {future}): {other:?} != {expected}")),
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < PCT_CHANGE_BUDGET;
    criterion(
        2,
        "percent-change reproduction",
        ok,
        &format!("7 published pairs, failures={failures:?}, elapsed={elapsed:?}"),
    );
}

#[test]
fn criterion_3_pipeline_oracle_equivalence() {
    let start = Instant::now();
    let mut r = ChaCha8Rng::seed_from_u64(0xACCE97);
    let mut mismatches = 0usize;
    for case in 0..ORACLE_INSTANCES {
        let raster = random_raster(&mut r, 50, 50);
        let curve = random_curve(&mut r);
        let n_regions = r.random_range(0..=5);
        let regions: Vec<Region> = (0..n_regions)
            .map(|i| random_region(&mut r, &format!("r{i}"), 6.0))
            .collect();
        let n_assets = r.random_range(1..=200);
        let assets = random_assets(&mut r, n_assets, &raster);
        let threshold = if case % 2 == 0 { 0.0 } else { r.random_range(0.0..3.0) };

        let index = RegionIndex::build(&regions);
        let opts = AssessOptions {
            exposure_threshold: threshold,
            ..AssessOptions::default()
        };
        let records =
            assess_layer(&assets, &raster, &curve, &coastal_scenario(), &index, &opts).unwrap();

        for (asset, record) in assets.iter().zip(&records) {
            if *record != brute_assess(asset, &raster, &curve, &regions, threshold) {
                mismatches += 1;
            }
        }

        // Aggregates against a direct recount.
        let mut expected: BTreeMap<String, (u64, i128)> = BTreeMap::new();
        for asset in &assets {
            let rec = brute_assess(asset, &raster, &curve, &regions, threshold);
            let key = rec.region_id.clone().unwrap_or_else(|| "unassigned".into());
            let e = expected.entry(key).or_insert((0, 0));
            if rec.exposed {
                e.0 += 1;
                e.1 += (rec.damage_cost * 100.0).round() as i128;
            }
        }
        let got: BTreeMap<String, (u64, i128)> = aggregate(&records, GroupBy::RegionId, &regions)
            .into_iter()
            .map(|a| (a.key, (a.cell_count, a.damage_cost_cents)))
            .collect();
        if got != expected {
            mismatches += 1;
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches == 0 && elapsed < ORACLE_BUDGET;
    criterion(
        3,
        "pipeline oracle equivalence",
        ok,
        &format!("{ORACLE_INSTANCES} instances, {mismatches} mismatches, elapsed={elapsed:?}"),
    );
}

#[test]
fn criterion_4_zonal_oracle() {
    let start = Instant::now();
    let mut r = ChaCha8Rng::seed_from_u64(0x20741);
    let mut mismatches = 0usize;
    for case in 0..ZONAL_INSTANCES {
        let raster = random_raster(&mut r, 50, 50);
        let region = random_region(&mut r, &format!("z{case}"), 7.0);
        let threshold = if case % 3 == 0 { 0.0 } else { r.random_range(0.0..5.0) };

        // Per-pixel brute-force loop.
        let mut count = 0u64;
        let mut sum = 0.0f64;
        let cs = raster.cellsize();
        let y_top = raster.yll() + raster.nrows() as f64 * cs;
        for row in 0..raster.nrows() {
            let y = y_top - (row as f64 + 0.5) * cs;
            for col in 0..raster.ncols() {
                let v = raster.value_at(row, col);
                if v == NODATA || v <= threshold {
                    continue;
                }
                let x = raster.xll() + (col as f64 + 0.5) * cs;
                if brute_in_region(&region, x, y) {
                    count += 1;
                    sum += v;
                }
            }
        }
        let expected_mean = if count == 0 { None } else { Some(sum / count as f64) };
        if zonal_stats(&raster, &region, threshold) != (count, expected_mean) {
            mismatches += 1;
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches == 0 && elapsed < ZONAL_BUDGET;
    criterion(
        4,
        "zonal oracle",
        ok,
        &format!("{ZONAL_INSTANCES} raster/polygon pairs, {mismatches} mismatches, elapsed={elapsed:?}"),
    );
}

fn output_tree(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut out = BTreeMap::new();
    for entry in std::fs::read_dir(dir).unwrap() {
        let entry = entry.unwrap();
        out.insert(
            entry.file_name().to_string_lossy().into_owned(),
            std::fs::read(entry.path()).unwrap(),
        );
    }
    out
}

#[test]
fn criterion_5_determinism_across_workers_and_reruns() {
    let start = Instant::now();
    let manifest = fixtures().join("manifest.json");
    let tmp = tempfile::tempdir().unwrap();
    let mut reference: Option<BTreeMap<String, Vec<u8>>> = None;
    let mut runs = 0usize;
    let mut identical = true;
    for workers in [1usize, 4, 8] {
        for rerun in 0..3 {
            let out = tmp.path().join(format!("w{workers}_r{rerun}"));
            cmd_assess(&manifest, Some(&out), workers).unwrap();
            let tree = output_tree(&out);
            match &reference {
                None => reference = Some(tree),
                Some(reference) => identical &= &tree == reference,
            }
            runs += 1;
        }
    }
    let elapsed = start.elapsed();
    let ok = identical && runs == 9 && elapsed < DETERMINISM_BUDGET;
    criterion(
        5,
        "byte-identical outputs for workers {1,4,8} x 3 reruns",
        ok,
        &format!("{runs} runs, identical={identical}, elapsed={elapsed:?}"),
    );
}

#[test]
fn criterion_6_monotone_hazard_response() {
    let mut r = ChaCha8Rng::seed_from_u64(0x303030);
    let mut violations = 0usize;
    for _ in 0..MONOTONE_INSTANCES {
        let base = random_raster(&mut r, 25, 25);
        let curve = random_curve(&mut r);
        let regions: Vec<Region> = (0..3)
            .map(|i| random_region(&mut r, &format!("r{i}"), 6.0))
            .collect();
        let assets = random_assets(&mut r, 150, &base);
        let index = RegionIndex::build(&regions);

        let bumped: Vec<f64> = base
            .values()
            .iter()
            .map(|&v| {
                if v == base.nodata() {
                    v
                } else {
                    v + r.random_range(0.0..2.0)
                }
            })
            .collect();
        let higher = HazardRaster::new(
            base.ncols(),
            base.nrows(),
            base.xll(),
            base.yll(),
            base.cellsize(),
            base.nodata(),
            bumped,
            base.units(),
        )
        .unwrap();

        let opts = AssessOptions::default();
        let rec_lo =
            assess_layer(&assets, &base, &curve, &coastal_scenario(), &index, &opts).unwrap();
        let rec_hi =
            assess_layer(&assets, &higher, &curve, &coastal_scenario(), &index, &opts).unwrap();
        for group_by in [GroupBy::All, GroupBy::RegionId, GroupBy::Generation] {
            let lo: BTreeMap<String, (u64, i128)> = aggregate(&rec_lo, group_by, &regions)
                .into_iter()
                .map(|a| (a.key, (a.cell_count, a.damage_cost_cents)))
                .collect();
            for h in aggregate(&rec_hi, group_by, &regions) {
                if let Some(&(lc, lcents)) = lo.get(&h.key) {
                    if h.cell_count < lc || h.damage_cost_cents < lcents {
                        violations += 1;
                    }
                }
            }
        }
    }
    criterion(
        6,
        "monotone hazard response",
        violations == 0,
        &format!("{MONOTONE_INSTANCES} curve/raster pairs, {violations} violations"),
    );
}

#[test]
fn criterion_7_throughput_one_million_assets() {
    // Global-extent raster at 0.1 degrees with a realistic nodata share.
    let mut r = ChaCha8Rng::seed_from_u64(0x7064);
    let (ncols, nrows) = (3600, 1800);
    let values: Vec<f64> = (0..ncols * nrows)
        .map(|_| {
            if r.random_range(0.0..1.0) < 0.5 {
                NODATA
            } else {
                r.random_range(0.0..10.0)
            }
        })
        .collect();
    let raster = HazardRaster::new(
        ncols,
        nrows,
        -180.0,
        -90.0,
        0.1,
        NODATA,
        values,
        IntensityUnit::MetersDepth,
    )
    .unwrap();
    let curve = read_curve(&repo_data().join("curves/flood_depth_default.csv")).unwrap();
    let regions: Vec<Region> = (0..4)
        .map(|i| {
            let x0 = -160.0 + 80.0 * i as f64;
            Region::new(
                format!("quad{i}"),
                vec![vec![
                    (x0, -80.0),
                    (x0 + 70.0, -80.0),
                    (x0 + 70.0, 80.0),
                    (x0, 80.0),
                    (x0, -80.0),
                ]],
            )
            .unwrap()
        })
        .collect();
    let index = RegionIndex::build(&regions);

    let radios = [Radio::Gsm, Radio::Umts, Radio::Lte, Radio::Nr];
    let assets: Vec<Asset> = (0..THROUGHPUT_ASSETS)
        .map(|i| {
            Asset::new(
                format!("syn-{i}"),
                r.random_range(-180.0..180.0),
                r.random_range(-90.0..90.0),
                radios[i % 4],
                33_333.0,
            )
            .unwrap()
        })
        .collect();

    // Timed end-to-end pass with 4 workers: intersection plus aggregation.
    let start = Instant::now();
    let opts = AssessOptions {
        workers: 4,
        ..AssessOptions::default()
    };
    let parallel =
        assess_layer(&assets, &raster, &curve, &coastal_scenario(), &index, &opts).unwrap();
    let by_region = aggregate(&parallel, GroupBy::RegionId, &regions);
    let elapsed = start.elapsed();

    // Parallel output must equal the serial run exactly.
    let serial_opts = AssessOptions {
        workers: 1,
        ..AssessOptions::default()
    };
    let serial =
        assess_layer(&assets, &raster, &curve, &coastal_scenario(), &index, &serial_opts).unwrap();
    let equal = parallel == serial;

    let exposed: u64 = by_region.iter().map(|a| a.cell_count).sum();
    let ok = elapsed < THROUGHPUT_BUDGET && equal;
    criterion(
        7,
        "1M-asset throughput with workers=4",
        ok,
        &format!(
            "{THROUGHPUT_ASSETS} assets in {elapsed:?} (budget {THROUGHPUT_BUDGET:?}), \
             parallel==serial: {equal}, exposed={exposed}"
        ),
    );
}

#[test]
fn criterion_8_format_round_trips() {
    let mut r = ChaCha8Rng::seed_from_u64(0x8888);
    let tmp = tempfile::tempdir().unwrap();
    let mut failures = 0usize;

    for i in 0..ROUND_TRIP_INSTANCES {
        // ASC raster: write -> read -> write must be byte-identical.
        let raster = random_raster(&mut r, 30, 30);
        let p1 = tmp.path().join(format!("a{i}.asc"));
        let p2 = tmp.path().join(format!("b{i}.asc"));
        write_raster_asc(&raster, &p1).unwrap();
        let back = read_raster_asc(&p1, raster.units()).unwrap();
        write_raster_asc(&back, &p2).unwrap();
        if std::fs::read(&p1).unwrap() != std::fs::read(&p2).unwrap() || back != raster {
            failures += 1;
        }
        // The canonical string renders identically too.
        if raster_to_asc_string(&raster) != raster_to_asc_string(&back) {
            failures += 1;
        }

        // Scenario manifest: write -> read -> write must be byte-identical.
        let manifest = random_manifest(&mut r, i);
        let m1 = tmp.path().join(format!("m{i}.json"));
        std::fs::write(&m1, manifest.to_json_pretty()).unwrap();
        let parsed = ScenarioManifest::from_path(&m1).unwrap();
        let m2 = tmp.path().join(format!("n{i}.json"));
        std::fs::write(&m2, parsed.to_json_pretty()).unwrap();
        if std::fs::read(&m1).unwrap() != std::fs::read(&m2).unwrap() || parsed != manifest {
            failures += 1;
        }
    }
    criterion(
        8,
        "ASC and manifest round-trips",
        failures == 0,
        &format!("{ROUND_TRIP_INSTANCES} random instances each, {failures} failures"),
    );
}

fn random_manifest(r: &mut ChaCha8Rng, salt: usize) -> ScenarioManifest {
    use hazcell_core::engine::{BaselineSpec, ManifestJob, Thresholds};
    use hazcell_core::ingest::CostConfig;

    let hazards = [Hazard::Coastal, Hazard::Riverine, Hazard::Cyclone];
    let mut jobs = Vec::new();
    let n_jobs = r.random_range(1..6);
    for j in 0..n_jobs {
        let hazard = hazards[r.random_range(0..3)];
        let (pathway, epoch) = if r.random_range(0.0..1.0) < 0.5 {
            (Pathway::Historical, 1980)
        } else {
            (
                [Pathway::Rcp45, Pathway::Rcp85][r.random_range(0..2)],
                [2030, 2050, 2080][r.random_range(0..3)],
            )
        };
        jobs.push(ManifestJob {
            scenario: Scenario {
                hazard,
                pathway,
                epoch,
                return_period_years: [100, 250, 500, 1000][r.random_range(0..4)],
                model_member: format!("member-{salt}-{j}"),
            },
            raster: format!("rasters/layer_{j}.asc"),
            curve_id: "default".to_string(),
            units: if r.random_range(0.0..1.0) < 0.5 {
                None
            } else {
                Some(hazard.default_unit())
            },
        });
    }
    let mut thresholds = Thresholds::default();
    if r.random_range(0.0..1.0) < 0.5 {
        thresholds.exposure.insert(Hazard::Cyclone, r.random_range(0..200) as f64);
    }
    ScenarioManifest {
        assets: "assets.csv".to_string(),
        regions: if r.random_range(0.0..1.0) < 0.5 {
            Some("regions.geojson".to_string())
        } else {
            None
        },
        cost: CostConfig::default(),
        curves: [("default".to_string(), "curves/default.csv".to_string())].into(),
        thresholds,
        jobs,
        baselines: vec![BaselineSpec {
            hazard: hazards[r.random_range(0..3)],
            pathway: Pathway::Historical,
            epoch: 1980,
        }],
        output_dir: "out".to_string(),
    }
}
