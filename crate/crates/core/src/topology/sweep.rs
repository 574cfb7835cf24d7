use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{ComparisonVerdict, OperatingPoint, ThresholdForm, Topology};
use crate::error::{Error, Result};
use crate::thermal::ThermalStack;

/// Parameter varied by [`sensitivity_sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParameter {
    /// Ambient temperature, °C.
    AmbientTemperature,
    /// Multiplier applied to both the full- and half-load losses.
    LossScale,
    /// Case-to-ambient resistance `R_ch + R_ha`, °C/W. The case-to-sink
    /// part is kept and the sink-to-ambient part absorbs the change.
    CaseToAmbient,
}

impl SweepParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::AmbientTemperature => "t_a",
            SweepParameter::LossScale => "p_loss_scale",
            SweepParameter::CaseToAmbient => "r_ca",
        }
    }

    fn apply(self, base: &OperatingPoint, value: f64) -> Result<OperatingPoint> {
        let mut op = base.clone();
        let s = base.stack;
        match self {
            SweepParameter::AmbientTemperature => {
                op.stack = ThermalStack::new(value, s.r_jc, s.r_ch, s.r_ha)?;
            }
            SweepParameter::LossScale => {
                if !(value.is_finite() && value >= 0.0) {
                    return Err(Error::param("p_loss_scale", value, "must be >= 0"));
                }
                op.p_loss = base.p_loss * value;
                op.p_loss_half = base.p_loss_half * value;
            }
            SweepParameter::CaseToAmbient => {
                if value < s.r_ch {
                    return Err(Error::param(
                        "r_ca",
                        value,
                        format!("must be at least the case-to-sink resistance {}", s.r_ch),
                    ));
                }
                op.stack = ThermalStack::new(s.t_a, s.r_jc, s.r_ch, value - s.r_ch)?;
            }
        }
        Ok(op)
    }
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SweepParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t_a" => Ok(SweepParameter::AmbientTemperature),
            "p_loss_scale" => Ok(SweepParameter::LossScale),
            "r_ca" => Ok(SweepParameter::CaseToAmbient),
            other => Err(Error::Domain(format!(
                "unknown sweep parameter `{other}` (expected t_a, p_loss_scale or r_ca)"
            ))),
        }
    }
}

/// One grid point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub t_j: f64,
    pub t_j_half: f64,
    /// MTTF in hours, ordered as [`Topology::REDUNDANT`].
    pub mttf: [f64; 4],
    pub verdict: ComparisonVerdict,
}

/// Evaluates the redundant configurations over a monotone grid of one
/// parameter. Rows come back sorted by ascending parameter value.
pub fn sensitivity_sweep(
    base: &OperatingPoint,
    parameter: SweepParameter,
    grid: &[f64],
    form: ThresholdForm,
) -> Result<Vec<SweepRow>> {
    if grid.is_empty() {
        return Err(Error::Domain("sweep grid is empty".to_owned()));
    }
    let increasing = grid.windows(2).all(|w| w[0] < w[1]);
    let decreasing = grid.windows(2).all(|w| w[0] > w[1]);
    if !(increasing || decreasing) {
        return Err(Error::Domain(
            "sweep grid must be strictly monotone".to_owned(),
        ));
    }

    let mut rows = grid
        .par_iter()
        .enumerate()
        .map(|(index, &value)| {
            evaluate(base, parameter, value, form).map_err(|e| Error::Sweep {
                index,
                value,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if decreasing {
        rows.reverse();
    }
    Ok(rows)
}

fn evaluate(
    base: &OperatingPoint,
    parameter: SweepParameter,
    value: f64,
    form: ThresholdForm,
) -> Result<SweepRow> {
    let op = parameter.apply(base, value)?;
    let (t_j, t_j_half) = op.junction_temperatures();
    let mut mttf = [0.0; 4];
    for (slot, t) in mttf.iter_mut().zip(Topology::REDUNDANT) {
        *slot = op.mttf(t)?;
    }
    Ok(SweepRow {
        value,
        t_j,
        t_j_half,
        mttf,
        verdict: op.verdict(form)?,
    })
}
