//! Converts sampled hazard intensity into a damage fraction, a direct damage
//! cost, and a qualitative damage state.

use crate::model::{DamageCurve, DamageState, Hazard, IntensityUnit, TowerDesign};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VulnerabilityError {
    #[error("curve {curve_id:?} is in {curve_unit} but intensity was declared as {declared}")]
    UnitMismatch {
        curve_id: String,
        curve_unit: IntensityUnit,
        declared: IntensityUnit,
    },
    #[error("intensity {0} must be nonnegative and finite")]
    InvalidIntensity(f64),
    #[error("no default curve registered for hazard {0}")]
    NoDefaultCurve(Hazard),
    #[error("damage state thresholds must be strictly increasing within (0, 1), got {0:?}")]
    InvalidStateThresholds([f64; 4]),
}

/// Piecewise-linear interpolation of a curve at the given intensity, clamped
/// to the first knot's fraction below the curve and the last knot's fraction
/// above it. Damage is physically bounded by total loss, so no extrapolation.
///
/// Within a segment the value is `f0 + (x - x0) * (f1 - f0) / (x1 - x0)`,
/// evaluated in exactly that form so independent reimplementations can match
/// it bit-for-bit.
pub fn interpolate_fraction(curve: &DamageCurve, intensity: f64) -> f64 {
    let knots = curve.knots();
    let (x_first, f_first) = curve.first_knot();
    if intensity <= x_first {
        return f_first;
    }
    let (x_last, f_last) = curve.last_knot();
    if intensity >= x_last {
        return f_last;
    }
    // Index of the first knot with x > intensity; the segment starts one
    // before it. The clamp checks above guarantee 1 <= idx < len.
    let idx = knots.partition_point(|&(x, _)| x <= intensity);
    let (x0, f0) = knots[idx - 1];
    let (x1, f1) = knots[idx];
    f0 + (intensity - x0) * (f1 - f0) / (x1 - x0)
}

/// Damage fraction for an intensity expressed in `declared` units, checking
/// that the curve is in the same units.
pub fn damage_fraction(
    curve: &DamageCurve,
    intensity: f64,
    declared: IntensityUnit,
) -> Result<f64, VulnerabilityError> {
    if curve.intensity_unit != declared {
        return Err(VulnerabilityError::UnitMismatch {
            curve_id: curve.curve_id.clone(),
            curve_unit: curve.intensity_unit,
            declared,
        });
    }
    if !intensity.is_finite() || intensity < 0.0 {
        return Err(VulnerabilityError::InvalidIntensity(intensity));
    }
    Ok(interpolate_fraction(curve, intensity))
}

/// Direct damage cost: the exact product of damage fraction and per-cell
/// replacement cost. Cent rounding happens at reporting boundaries only.
pub fn damage_cost(fraction: f64, unit_cost: f64) -> f64 {
    fraction * unit_cost
}

/// Upper damage-fraction bounds for states DS1..DS4; anything above the last
/// bound is DS5. The default mapping is a repo convention (the severity
/// ladder itself is qualitative) and can be overridden in configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DamageStateThresholds {
    pub ds1_max: f64,
    pub ds2_max: f64,
    pub ds3_max: f64,
    pub ds4_max: f64,
}

impl Default for DamageStateThresholds {
    fn default() -> Self {
        DamageStateThresholds {
            ds1_max: 0.1,
            ds2_max: 0.25,
            ds3_max: 0.5,
            ds4_max: 0.9,
        }
    }
}

impl DamageStateThresholds {
    pub fn validate(&self) -> Result<(), VulnerabilityError> {
        let t = [self.ds1_max, self.ds2_max, self.ds3_max, self.ds4_max];
        let ok = t.iter().all(|v| v.is_finite() && *v > 0.0 && *v < 1.0)
            && t.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(())
        } else {
            Err(VulnerabilityError::InvalidStateThresholds(t))
        }
    }
}

/// Thresholded mapping from damage fraction to damage state:
/// 0 → DS0, (0, ds1] → DS1, (ds1, ds2] → DS2, (ds2, ds3] → DS3,
/// (ds3, ds4] → DS4, above → DS5.
pub fn classify_damage_state(fraction: f64, t: &DamageStateThresholds) -> DamageState {
    if fraction <= 0.0 {
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
    }
}

/// Registry of damage curves: one default per hazard, plus optional
/// tower-design-specific overrides.
#[derive(Debug, Clone, Default)]
pub struct CurveSet {
    defaults: BTreeMap<Hazard, DamageCurve>,
    by_design: BTreeMap<(Hazard, TowerDesign), DamageCurve>,
}

impl CurveSet {
    pub fn new() -> CurveSet {
        CurveSet::default()
    }

    pub fn register_default(&mut self, hazard: Hazard, curve: DamageCurve) {
        self.defaults.insert(hazard, curve);
    }

    pub fn register_for_design(&mut self, hazard: Hazard, design: TowerDesign, curve: DamageCurve) {
        self.by_design.insert((hazard, design), curve);
    }

    /// The (hazard, tower design) curve if one is registered, otherwise the
    /// hazard's default curve. Unknown designs always fall back.
    pub fn select_curve(
        &self,
        hazard: Hazard,
        design: TowerDesign,
    ) -> Result<&DamageCurve, VulnerabilityError> {
        if let Some(c) = self.by_design.get(&(hazard, design)) {
            return Ok(c);
        }
        self.defaults
            .get(&hazard)
            .ok_or(VulnerabilityError::NoDefaultCurve(hazard))
    }
}

/// Default exposure threshold for a hazard layer: flood cells count as
/// exposed at any positive depth; cyclone cells count from the first wind
/// speed at which the curve assigns nonzero damage.
pub fn default_exposure_threshold(hazard: Hazard, curve: &DamageCurve) -> f64 {
    match hazard {
        Hazard::Coastal | Hazard::Riverine => 0.0,
        Hazard::Cyclone => curve
            .knots()
            .iter()
            .find(|&&(_, f)| f > 0.0)
            .map(|&(x, _)| x)
            .unwrap_or(0.0),
    }
}
