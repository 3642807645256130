//! Geometric kernel: raster point sampling, raster mosaicking, zonal
//! statistics, and point-in-polygon region assignment.
//!
//! Every operation is pure over immutable inputs and follows fixed edge
//! conventions so results are deterministic and brute-force checkable:
//!
//! * raster cells are half-open: a point exactly on an internal cell edge
//!   belongs to the cell with the larger column/row index (east/south-ward);
//! * a point exactly on a polygon edge (outer or hole) counts as inside;
//! * ties between overlapping regions resolve to the first region in file
//!   order.

use crate::model::{HazardRaster, IntensityUnit, ModelError, Region};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpatialError {
    #[error("cannot mosaic an empty raster list")]
    EmptyMosaic,
    #[error("mosaic inputs mix units {0} and {1}")]
    MixedUnits(IntensityUnit, IntensityUnit),
    #[error("mosaic inputs have differing cellsize ({0} vs {1})")]
    CellsizeMismatch(f64, f64),
    #[error("raster {index} is not aligned to the common grid lattice")]
    MisalignedGrid { index: usize },
    #[error("mosaic output would have {0} cells, refusing")]
    MosaicTooLarge(u128),
    #[error(transparent)]
    Model(#[from] ModelError),
}

// ---------------------------------------------------------------------------
// Point sampling
// ---------------------------------------------------------------------------

/// Value of the raster cell containing (lon, lat), or `None` when the point
/// lies outside the extent or on a nodata cell.
///
/// Containing-cell lookup, not interpolation: damage curves expect the
/// modeled hazard value at the asset's grid cell, and interpolation would
/// blur nodata boundaries.
pub fn sample(raster: &HazardRaster, lon: f64, lat: f64) -> Option<f64> {
    let cs = raster.cellsize();
    let col = ((lon - raster.xll()) / cs).floor();
    let row = ((raster.y_max() - lat) / cs).floor();
    // Positive-form bounds check so non-finite coordinates fall out too.
    let in_grid =
        col >= 0.0 && row >= 0.0 && col < raster.ncols() as f64 && row < raster.nrows() as f64;
    if !in_grid {
        return None;
    }
    let v = raster.value_at(row as usize, col as usize);
    if raster.is_nodata(v) {
        None
    } else {
        Some(v)
    }
}

// ---------------------------------------------------------------------------
// Mosaicking
// ---------------------------------------------------------------------------

/// Sentinel used for cells of a mosaic not covered by any input. Input values
/// are nonnegative by construction, so a negative sentinel never collides.
const MOSAIC_NODATA: f64 = -9999.0;

const MAX_MOSAIC_CELLS: u128 = 1 << 31;

/// Combines rasters that share a cellsize and grid lattice into one raster
/// spanning their bounding union. Each output cell takes the maximum over all
/// non-nodata inputs covering it; cells covered by no input are nodata.
pub fn mosaic_max(rasters: &[HazardRaster]) -> Result<HazardRaster, SpatialError> {
    let first = rasters.first().ok_or(SpatialError::EmptyMosaic)?;
    let cs = first.cellsize();
    let units = first.units();
    for r in rasters {
        if r.units() != units {
            return Err(SpatialError::MixedUnits(units, r.units()));
        }
        if r.cellsize() != cs {
            return Err(SpatialError::CellsizeMismatch(cs, r.cellsize()));
        }
    }

    let min_x = rasters.iter().map(|r| r.xll()).fold(f64::INFINITY, f64::min);
    let min_y = rasters.iter().map(|r| r.yll()).fold(f64::INFINITY, f64::min);

    // Integer offsets of each raster on the common lattice, measured from the
    // south-west corner of the union.
    let mut offsets = Vec::with_capacity(rasters.len());
    for (index, r) in rasters.iter().enumerate() {
        let fx = (r.xll() - min_x) / cs;
        let fy = (r.yll() - min_y) / cs;
        let ox = fx.round();
        let oy = fy.round();
        let tol = 1e-6;
        if (fx - ox).abs() > tol || (fy - oy).abs() > tol {
            return Err(SpatialError::MisalignedGrid { index });
        }
        offsets.push((ox as usize, oy as usize));
    }

    let ncols_out = rasters
        .iter()
        .zip(&offsets)
        .map(|(r, &(ox, _))| ox + r.ncols())
        .max()
        .expect("non-empty");
    let nrows_out = rasters
        .iter()
        .zip(&offsets)
        .map(|(r, &(_, oy))| oy + r.nrows())
        .max()
        .expect("non-empty");

    let total = ncols_out as u128 * nrows_out as u128;
    if total > MAX_MOSAIC_CELLS {
        return Err(SpatialError::MosaicTooLarge(total));
    }

    let mut values = vec![MOSAIC_NODATA; ncols_out * nrows_out];
    for (r, &(ox, oy)) in rasters.iter().zip(&offsets) {
        for row in 0..r.nrows() {
            // Row indices count from the north; offsets from the south.
            let south_row = r.nrows() - 1 - row + oy;
            let out_row = nrows_out - 1 - south_row;
            for col in 0..r.ncols() {
                let v = r.value_at(row, col);
                if r.is_nodata(v) {
                    continue;
                }
                let slot = &mut values[out_row * ncols_out + ox + col];
                *slot = if *slot == MOSAIC_NODATA { v } else { slot.max(v) };
            }
        }
    }

    Ok(HazardRaster::new(
        ncols_out,
        nrows_out,
        min_x,
        min_y,
        cs,
        MOSAIC_NODATA,
        values,
        units,
    )?)
}

// ---------------------------------------------------------------------------
// Point in polygon
// ---------------------------------------------------------------------------

/// Exact test for a point lying on the closed segment a-b.
fn on_segment(px: f64, py: f64, ax: f64, ay: f64, bx: f64, by: f64) -> bool {
    let cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
    cross == 0.0
        && px >= ax.min(bx)
        && px <= ax.max(bx)
        && py >= ay.min(by)
        && py <= ay.max(by)
}

/// Even-odd ray-casting containment over all rings of a region. Holes
/// subtract (a point inside a hole crosses an even number of edges). A point
/// exactly on any ring edge counts as inside.
pub fn point_in_polygon(region: &Region, lon: f64, lat: f64) -> bool {
    for ring in region.rings() {
        for w in ring.windows(2) {
            if on_segment(lon, lat, w[0].0, w[0].1, w[1].0, w[1].1) {
                return true;
            }
        }
    }
    let mut inside = false;
    for ring in region.rings() {
        for w in ring.windows(2) {
            let (ax, ay) = w[0];
            let (bx, by) = w[1];
            if (ay > lat) != (by > lat) {
                let x_cross = ax + (lat - ay) * (bx - ax) / (by - ay);
                if lon < x_cross {
                    inside = !inside;
                }
            }
        }
    }
    inside
}

// ---------------------------------------------------------------------------
// Zonal statistics
// ---------------------------------------------------------------------------

/// Count and sum of raster pixels whose center lies inside the region and
/// whose value is non-nodata and strictly above the threshold. Pixels are
/// visited in row-major order so the sum is reproducible bit-for-bit.
pub fn zonal_sum(raster: &HazardRaster, region: &Region, threshold: f64) -> (u64, f64) {
    let cs = raster.cellsize();
    let (min_x, min_y, max_x, max_y) = region.bbox();

    // Window of pixels whose centers may fall inside the bbox, widened by a
    // pixel on each side so exact boundary hits are never cropped away.
    let col_lo = (((min_x - raster.xll()) / cs) - 1.0).floor().max(0.0) as usize;
    let col_hi_f = (((max_x - raster.xll()) / cs) + 1.0).ceil();
    let row_lo = (((raster.y_max() - max_y) / cs) - 1.0).floor().max(0.0) as usize;
    let row_hi_f = (((raster.y_max() - min_y) / cs) + 1.0).ceil();
    if col_hi_f < 0.0 || row_hi_f < 0.0 {
        return (0, 0.0);
    }
    let col_hi = (col_hi_f as usize).min(raster.ncols());
    let row_hi = (row_hi_f as usize).min(raster.nrows());

    let mut count = 0u64;
    let mut sum = 0.0f64;
    for row in row_lo..row_hi {
        let y = raster.y_max() - (row as f64 + 0.5) * cs;
        for col in col_lo..col_hi {
            let v = raster.value_at(row, col);
            if raster.is_nodata(v) || v <= threshold {
                continue;
            }
            let x = raster.xll() + (col as f64 + 0.5) * cs;
            if point_in_polygon(region, x, y) {
                count += 1;
                sum += v;
            }
        }
    }
    (count, sum)
}

/// Flooded-pixel count and mean intensity over the counted pixels;
/// `(0, None)` when nothing qualifies.
pub fn zonal_stats(raster: &HazardRaster, region: &Region, threshold: f64) -> (u64, Option<f64>) {
    let (count, sum) = zonal_sum(raster, region, threshold);
    if count == 0 {
        (0, None)
    } else {
        (count, Some(sum / count as f64))
    }
}

// ---------------------------------------------------------------------------
// Region index
// ---------------------------------------------------------------------------

/// Uniform-grid acceleration index over a region list.
///
/// Queries return exactly what a brute-force scan over all polygons in file
/// order would: the index only narrows the candidate set, never the answer.
pub struct RegionIndex<'a> {
    regions: &'a [Region],
    bboxes: Vec<(f64, f64, f64, f64)>,
    min_x: f64,
    min_y: f64,
    bin_w: f64,
    bin_h: f64,
    nx: usize,
    ny: usize,
    bins: Vec<Vec<u32>>,
}

impl<'a> RegionIndex<'a> {
    pub fn build(regions: &'a [Region]) -> RegionIndex<'a> {
        let bboxes: Vec<_> = regions.iter().map(Region::bbox).collect();
        if regions.is_empty() {
            return RegionIndex {
                regions,
                bboxes,
                min_x: 0.0,
                min_y: 0.0,
                bin_w: 1.0,
                bin_h: 1.0,
                nx: 1,
                ny: 1,
                bins: vec![Vec::new()],
            };
        }

        let total_rings: usize = regions.iter().map(|r| r.rings().len()).sum();
        let n = ((total_rings as f64).sqrt().ceil() as usize).max(8);

        let min_x = bboxes.iter().map(|b| b.0).fold(f64::INFINITY, f64::min);
        let min_y = bboxes.iter().map(|b| b.1).fold(f64::INFINITY, f64::min);
        let max_x = bboxes.iter().map(|b| b.2).fold(f64::NEG_INFINITY, f64::max);
        let max_y = bboxes.iter().map(|b| b.3).fold(f64::NEG_INFINITY, f64::max);

        let bin_w = ((max_x - min_x) / n as f64).max(f64::MIN_POSITIVE);
        let bin_h = ((max_y - min_y) / n as f64).max(f64::MIN_POSITIVE);

        let mut bins = vec![Vec::new(); n * n];
        for (i, bb) in bboxes.iter().enumerate() {
            let x0 = Self::bin_coord(bb.0, min_x, bin_w, n);
            let x1 = Self::bin_coord(bb.2, min_x, bin_w, n);
            let y0 = Self::bin_coord(bb.1, min_y, bin_h, n);
            let y1 = Self::bin_coord(bb.3, min_y, bin_h, n);
            for by in y0..=y1 {
                for bx in x0..=x1 {
                    bins[by * n + bx].push(i as u32);
                }
            }
        }

        RegionIndex {
            regions,
            bboxes,
            min_x,
            min_y,
            bin_w,
            bin_h,
            nx: n,
            ny: n,
            bins,
        }
    }

    fn bin_coord(v: f64, min: f64, width: f64, n: usize) -> usize {
        let b = ((v - min) / width).floor();
        if b < 0.0 {
            0
        } else {
            (b as usize).min(n - 1)
        }
    }

    pub fn regions(&self) -> &[Region] {
        self.regions
    }

    /// The first region in file order containing the point, or `None`.
    pub fn assign_region(&self, lon: f64, lat: f64) -> Option<&'a Region> {
        if self.regions.is_empty() {
            return None;
        }
        let bx = Self::bin_coord(lon, self.min_x, self.bin_w, self.nx);
        let by = Self::bin_coord(lat, self.min_y, self.bin_h, self.ny);
        for &i in &self.bins[by * self.nx + bx] {
            let bb = self.bboxes[i as usize];
            if lon < bb.0 || lon > bb.2 || lat < bb.1 || lat > bb.3 {
                continue;
            }
            let region = &self.regions[i as usize];
            if point_in_polygon(region, lon, lat) {
                return Some(region);
            }
        }
        None
    }
}

/// Brute-force assignment: scan every region in file order. The reference
/// the index must agree with.
pub fn assign_region_scan(regions: &[Region], lon: f64, lat: f64) -> Option<&Region> {
    regions.iter().find(|r| point_in_polygon(r, lon, lat))
}
