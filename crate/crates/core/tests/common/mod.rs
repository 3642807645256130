//! Shared generators for randomized oracle tests. Everything is seeded so
//! failures reproduce exactly.
#![allow(dead_code)] // not every test file uses every generator

use hazcell_core::model::{DamageCurve, HazardRaster, IntensityUnit, Region};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const NODATA: f64 = -9999.0;

pub fn random_raster(
    rng: &mut ChaCha8Rng,
    max_cols: usize,
    max_rows: usize,
    nodata_prob: f64,
) -> HazardRaster {
    let ncols = rng.random_range(1..=max_cols);
    let nrows = rng.random_range(1..=max_rows);
    let cellsize = *[0.25, 0.5, 1.0].get(rng.random_range(0..3)).unwrap();
    let xll = rng.random_range(-5..5) as f64 * cellsize;
    let yll = rng.random_range(-5..5) as f64 * cellsize;
    let values: Vec<f64> = (0..ncols * nrows)
        .map(|_| {
            if rng.random_range(0.0..1.0) < nodata_prob {
                NODATA
            } else {
                rng.random_range(0.0..10.0)
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

/// Simple (non-self-intersecting) polygon: random radii at sorted angles
/// around a center.
pub fn random_star_ring(
    rng: &mut ChaCha8Rng,
    cx: f64,
    cy: f64,
    r_max: f64,
) -> Vec<(f64, f64)> {
    let n = rng.random_range(3..10);
    let mut angles: Vec<f64> = (0..n)
        .map(|_| rng.random_range(0.0..std::f64::consts::TAU))
        .collect();
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    angles.dedup();
    while angles.len() < 3 {
        angles.push(angles.last().unwrap() + 0.1);
    }
    let mut ring: Vec<(f64, f64)> = angles
        .iter()
        .map(|&a| {
            let r = rng.random_range(0.2..1.0) * r_max;
            (cx + r * a.cos(), cy + r * a.sin())
        })
        .collect();
    ring.push(ring[0]);
    ring
}

pub fn random_region(rng: &mut ChaCha8Rng, id: &str, extent: f64) -> Region {
    let cx = rng.random_range(-extent..extent);
    let cy = rng.random_range(-extent..extent);
    let r_max = rng.random_range(0.5..extent);
    let outer = random_star_ring(rng, cx, cy, r_max);
    let mut rings = vec![outer];
    // Occasionally punch a small hole near the center.
    if rng.random_range(0.0..1.0) < 0.3 {
        rings.push(random_star_ring(rng, cx, cy, 0.15));
    }
    Region::new(id, rings).unwrap()
}

pub fn random_curve(rng: &mut ChaCha8Rng, unit: IntensityUnit) -> DamageCurve {
    let n = rng.random_range(2..8);
    let mut x = 0.0;
    let mut f: f64 = if rng.random_range(0.0..1.0) < 0.7 {
        0.0
    } else {
        rng.random_range(0.0..0.3)
    };
    let mut knots = Vec::with_capacity(n);
    for _ in 0..n {
        knots.push((x, f.min(1.0)));
        x += rng.random_range(0.2..3.0);
        f += rng.random_range(0.0..0.4);
    }
    DamageCurve::new("random", unit, knots).unwrap()
}
