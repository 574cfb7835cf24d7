use std::f64::consts::LN_2;
use std::fmt;

use crate::error::{Error, Result};
use crate::failure::CoverageParams;
use crate::thermal::ThermalStack;
use crate::units::CELSIUS_OFFSET;

/// The side of a reliability boundary a configuration falls on.
///
/// Under perfect coverage both standby configurations have the same MTTF
/// and `Standby` names either; under imperfect coverage it is the series
/// standby configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preferred {
    ShuntParallel,
    Standby,
    /// Exactly on the boundary; both sides have equal MTTF.
    Boundary,
}

impl Preferred {
    pub fn name(self) -> &'static str {
        match self {
            Preferred::ShuntParallel => "shunt_parallel",
            Preferred::Standby => "standby",
            Preferred::Boundary => "boundary",
        }
    }
}

impl fmt::Display for Preferred {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// Outcome of a boundary comparison: the evaluated quantity, the threshold
/// it was compared against, and the resulting preference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonVerdict {
    pub winner: Preferred,
    pub evaluated: f64,
    pub boundary_value: f64,
}

impl ComparisonVerdict {
    fn shunt_if_above(evaluated: f64, boundary_value: f64) -> Self {
        let winner = if evaluated > boundary_value {
            Preferred::ShuntParallel
        } else if evaluated < boundary_value {
            Preferred::Standby
        } else {
            Preferred::Boundary
        };
        ComparisonVerdict {
            winner,
            evaluated,
            boundary_value,
        }
    }

    fn shunt_if_below(evaluated: f64, boundary_value: f64) -> Self {
        let mut v = Self::shunt_if_above(boundary_value, evaluated);
        v.evaluated = evaluated;
        v.boundary_value = boundary_value;
        v
    }
}

/// Perfect coverage: shunt parallel beats standby iff `λ_SW / λ_SW,H > 2`.
pub fn perfect_coverage_winner(full_over_half: f64) -> ComparisonVerdict {
    ComparisonVerdict::shunt_if_above(full_over_half, 2.0)
}

/// `C₁` and `C₂` of the junction-temperature boundary `T_j > C₁ T_j,H + C₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryConstants {
    pub c1: f64,
    pub c2: f64,
}

pub fn boundary_constants(a: f64) -> Result<BoundaryConstants> {
    let shift = CELSIUS_OFFSET * LN_2;
    if !(a.is_finite() && a > shift) {
        return Err(Error::param(
            "a",
            a,
            format!("must exceed 273·ln2 = {shift:.4} for the boundary to exist"),
        ));
    }
    Ok(BoundaryConstants {
        c1: (a + shift) / (a - shift),
        c2: LN_2 * CELSIUS_OFFSET * CELSIUS_OFFSET / (a - shift),
    })
}

/// Full-load junction temperature above which shunt parallel is more
/// reliable, linearised by dropping the `ln2·T_j,H/a` term.
pub fn temperature_boundary(t_j_half: f64, a: f64) -> Result<f64> {
    check_celsius(t_j_half)?;
    let k = boundary_constants(a)?;
    Ok(k.c1 * t_j_half + k.c2)
}

/// The same boundary without the linearisation: the temperature at which
/// `π_T / π_T,H` equals exactly 2.
pub fn temperature_boundary_exact(t_j_half: f64, a: f64) -> Result<f64> {
    check_celsius(t_j_half)?;
    boundary_constants(a)?;
    let k = LN_2 / a;
    let denominator = 1.0 - k * CELSIUS_OFFSET - k * t_j_half;
    if denominator <= 0.0 {
        return Err(Error::Domain(format!(
            "half-load junction temperature {t_j_half} °C is too high for a factor-2 boundary"
        )));
    }
    Ok(((1.0 + k * CELSIUS_OFFSET) * t_j_half + k * CELSIUS_OFFSET * CELSIUS_OFFSET) / denominator)
}

/// Compares a full-load junction temperature with the linearised boundary.
pub fn region_verdict(t_j: f64, t_j_half: f64, a: f64) -> Result<ComparisonVerdict> {
    check_celsius(t_j)?;
    Ok(ComparisonVerdict::shunt_if_above(
        t_j,
        temperature_boundary(t_j_half, a)?,
    ))
}

fn check_celsius(t: f64) -> Result<()> {
    if t.is_finite() && t > -CELSIUS_OFFSET {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "temperature {t} °C is at or below absolute zero"
        )))
    }
}

/// Which form of the imperfect-coverage threshold to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ThresholdForm {
    /// The exact inequality between the two MTTFs.
    #[default]
    Full,
    /// Drops the `(χ - χ²) P_S,SB² (1 - P_SH,P)` denominator term.
    Truncated,
}

/// Upper bound on `λ_SW,H / λ_SW` below which shunt parallel is more
/// reliable than series standby, with `P_SH,P = p_s` and
/// `P_S,SB = γ · p_s`.
pub fn imperfect_coverage_threshold(c: &CoverageParams, form: ThresholdForm) -> Result<f64> {
    let CoverageParams { chi, .. } = *c;
    let p_sh = c.p_shunt();
    let p_sb = c.p_series();
    let numerator = 0.5 * (chi + (1.0 - chi) * p_sb * p_sb);
    let mut denominator = 1.0 - chi + chi * chi + chi * p_sb - chi * chi * p_sh;
    if form == ThresholdForm::Full {
        denominator += (chi - chi * chi) * p_sb * p_sb * (1.0 - p_sh);
    }
    if denominator.is_nan() || denominator <= 0.0 {
        return Err(Error::Domain(format!(
            "imperfect-coverage threshold denominator is {denominator} (must be > 0)"
        )));
    }
    Ok(numerator / denominator)
}

/// Verdict for a given half-load to full-load rate ratio.
pub fn imperfect_coverage_winner(
    half_over_full: f64,
    c: &CoverageParams,
    form: ThresholdForm,
) -> Result<ComparisonVerdict> {
    let threshold = imperfect_coverage_threshold(c, form)?;
    Ok(ComparisonVerdict::shunt_if_below(half_over_full, threshold))
}

/// Shunt parallel wins iff
/// `P_loss - C₁ P_loss,H > ((C₁ - 1) T_a + C₂) / (R_jc + R_ca)`.
pub fn heatsink_condition(
    p_loss: f64,
    p_loss_half: f64,
    stack: &ThermalStack,
    a: f64,
) -> Result<ComparisonVerdict> {
    let r = stack.r_total();
    if r.is_nan() || r <= 0.0 {
        return Err(Error::Domain(
            "junction-to-ambient thermal resistance is zero".to_owned(),
        ));
    }
    let k = boundary_constants(a)?;
    let lhs = p_loss - k.c1 * p_loss_half;
    let rhs = ((k.c1 - 1.0) * stack.t_a + k.c2) / r;
    Ok(ComparisonVerdict::shunt_if_above(lhs, rhs))
}
