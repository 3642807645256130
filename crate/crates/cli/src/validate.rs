//! `hazcell validate`: parse the manifest and every referenced file, print
//! ingest reports, and fail on the first structural problem.

use crate::load::load_inputs;
use crate::CliError;
use hazcell_core::ingest::read_raster_asc;
use std::collections::BTreeSet;
use std::path::Path;

pub fn cmd_validate(manifest_path: &Path) -> Result<(), CliError> {
    let inputs = load_inputs(manifest_path)?;

    println!(
        "manifest: OK ({} jobs, {} curves)",
        inputs.jobs.len(),
        inputs.curves.len()
    );

    println!(
        "assets: {} accepted, {} rejected",
        inputs.asset_report.accepted_count, inputs.asset_report.rejected_count
    );
    const MAX_PRINTED_REJECTIONS: usize = 20;
    for (line, reason) in inputs
        .asset_report
        .rejection_reasons
        .iter()
        .take(MAX_PRINTED_REJECTIONS)
    {
        println!("  line {line}: {reason}");
    }
    let hidden = inputs
        .asset_report
        .rejection_reasons
        .len()
        .saturating_sub(MAX_PRINTED_REJECTIONS);
    if hidden > 0 {
        println!("  ... and {hidden} more");
    }

    let region_ids: BTreeSet<&str> = inputs
        .regions
        .iter()
        .map(|r| r.region_id.as_str())
        .collect();
    println!(
        "regions: {} polygon parts, {} region ids",
        inputs.regions.len(),
        region_ids.len()
    );

    for (id, curve) in &inputs.curves {
        println!(
            "curve {id}: {} knots ({})",
            curve.knots().len(),
            curve.intensity_unit
        );
    }

    // Parse every referenced raster fully so dimension or value problems
    // surface now rather than mid-assessment.
    let mut seen = BTreeSet::new();
    for job in &inputs.jobs {
        if !seen.insert((job.raster_path.clone(), job.units)) {
            continue;
        }
        let raster = read_raster_asc(&job.raster_path, job.units)?;
        println!(
            "raster {}: {}x{} cells ({})",
            job.raster_path.display(),
            raster.ncols(),
            raster.nrows(),
            raster.units()
        );
    }

    println!("validation passed");
    Ok(())
}
