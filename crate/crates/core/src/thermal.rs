//! Steady-state switch losses and junction temperature.
//!
//! Losses are the switching term `f_SW (E_ON + E_OFF)` plus the conduction
//! energy `(V₀ + R_S i) i T_S` averaged over one period. Junction
//! temperature follows the series thermal stack junction → case → heat sink
//! → ambient; thermal capacitances are ignored.

use std::path::Path;

use crate::error::{non_negative, Error, Result};

/// Thermal resistances from junction to ambient, °C/W, and the ambient
/// temperature, °C.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalStack {
    pub t_a: f64,
    pub r_jc: f64,
    pub r_ch: f64,
    pub r_ha: f64,
}

impl ThermalStack {
    pub fn new(t_a: f64, r_jc: f64, r_ch: f64, r_ha: f64) -> Result<Self> {
        if !t_a.is_finite() {
            return Err(Error::param("t_a_c", t_a, "must be finite"));
        }
        non_negative("r_jc", r_jc)?;
        non_negative("r_ch", r_ch)?;
        non_negative("r_ha", r_ha)?;
        Ok(ThermalStack {
            t_a,
            r_jc,
            r_ch,
            r_ha,
        })
    }

    /// Case-to-ambient resistance (heat sink resistance).
    pub fn r_ca(&self) -> f64 {
        self.r_ch + self.r_ha
    }

    /// Junction-to-ambient resistance.
    pub fn r_total(&self) -> f64 {
        self.r_jc + self.r_ca()
    }
}

/// One current sample held for `period` seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentSample {
    pub current: f64,
    pub period: f64,
}

/// Device and waveform data for the loss computation. The samples cover
/// exactly one averaging period.
#[derive(Debug, Clone, PartialEq)]
pub struct LossSpec {
    pub f_sw: f64,
    pub e_on: f64,
    pub e_off: f64,
    pub v_0: f64,
    pub r_s: f64,
    pub samples: Vec<CurrentSample>,
}

/// Switching and conduction parts of a loss evaluation, watts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossBreakdown {
    pub switching: f64,
    pub conduction: f64,
}

impl LossBreakdown {
    pub fn total(&self) -> f64 {
        self.switching + self.conduction
    }
}

impl LossSpec {
    fn validate(&self) -> Result<()> {
        non_negative("f_sw_hz", self.f_sw)?;
        non_negative("e_on_j", self.e_on)?;
        non_negative("e_off_j", self.e_off)?;
        non_negative("v0_v", self.v_0)?;
        non_negative("r_s_ohm", self.r_s)?;
        if self.samples.is_empty() {
            return Err(Error::Domain("loss waveform has no samples".to_owned()));
        }
        for (k, s) in self.samples.iter().enumerate() {
            if !(s.period.is_finite() && s.period > 0.0) {
                return Err(Error::Domain(format!(
                    "sample {k} has sampling period {}; periods must be > 0",
                    s.period
                )));
            }
            if !s.current.is_finite() {
                return Err(Error::Domain(format!("sample {k} current is not finite")));
            }
        }
        Ok(())
    }

    pub fn breakdown(&self) -> Result<LossBreakdown> {
        self.validate()?;
        let switching = self.f_sw * (self.e_on + self.e_off);
        let (energy, period) = self.samples.iter().fold((0.0, 0.0), |(e, t), s| {
            let i = s.current;
            (e + (self.v_0 + self.r_s * i) * i * s.period, t + s.period)
        });
        Ok(LossBreakdown {
            switching,
            conduction: energy / period,
        })
    }
}

/// Average power loss of one switch over the sampled period, W.
pub fn power_loss(spec: &LossSpec) -> Result<f64> {
    Ok(spec.breakdown()?.total())
}

/// `T_j = T_a + P_loss (R_jc + R_ca)`.
pub fn junction_temperature(stack: &ThermalStack, p_loss: f64) -> f64 {
    stack.t_a + p_loss * stack.r_total()
}

/// Junction temperature from a measured case temperature.
pub fn junction_from_case(t_case: f64, p_loss: f64, r_jc: f64) -> f64 {
    t_case + p_loss * r_jc
}

/// Converts `(time, current)` rows into held samples.
///
/// Each row is held until the next row's time; the last row's time closes
/// the averaging period, so its current is not integrated. Times must be
/// strictly increasing.
pub fn samples_from_points(points: &[(f64, f64)]) -> Result<Vec<CurrentSample>> {
    if points.len() < 2 {
        return Err(Error::Domain(
            "waveform needs at least two rows to span a period".to_owned(),
        ));
    }
    points
        .windows(2)
        .enumerate()
        .map(|(k, w)| {
            let dt = w[1].0 - w[0].0;
            if dt > 0.0 && dt.is_finite() {
                Ok(CurrentSample {
                    current: w[0].1,
                    period: dt,
                })
            } else {
                Err(Error::Parse {
                    line: k + 3,
                    message: format!("time column must increase strictly (t = {})", w[1].0),
                })
            }
        })
        .collect()
}

/// Reads a waveform CSV with header `t_s,i_a`.
pub fn read_waveform_csv(path: &Path) -> Result<Vec<CurrentSample>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_waveform_csv(&text)
}

pub fn parse_waveform_csv(text: &str) -> Result<Vec<CurrentSample>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })?;
    if headers.iter().collect::<Vec<_>>() != ["t_s", "i_a"] {
        return Err(Error::Parse {
            line: 1,
            message: format!(
                "expected header `t_s,i_a`, got `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        });
    }
    let mut points = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let field = |k: usize| -> Result<f64> {
            record
                .get(k)
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::Parse {
                    line,
                    message: format!("column {} is not a number", k + 1),
                })
        };
        points.push((field(0)?, field(1)?));
    }
    samples_from_points(&points)
}

/// The single-phase laboratory prototype: 63 V secondary, 200 W load,
/// 50 Hz line, BT151 thyristors in an anti-parallel pair.
pub mod prototype {
    use super::CurrentSample;
    use std::f64::consts::PI;

    pub const SECONDARY_VOLTAGE: f64 = 63.0;
    pub const LOAD_POWER: f64 = 200.0;
    pub const LINE_FREQUENCY: f64 = 50.0;

    /// Conduction resistance that makes a purely resistive loss model
    /// dissipate 1.34 W per thyristor at full load. Fitted to the measured
    /// losses, not a datasheet value.
    pub const FITTED_ON_RESISTANCE: f64 = 0.265923;

    /// Peak load current at `load_fraction` of the rated load.
    pub fn peak_current(load_fraction: f64) -> f64 {
        load_fraction * LOAD_POWER / SECONDARY_VOLTAGE * std::f64::consts::SQRT_2
    }

    /// One line period of a single thyristor's current: the positive half
    /// of the load sine, zero during the other half cycle.
    pub fn thyristor_current(load_fraction: f64, samples: usize) -> Vec<CurrentSample> {
        let period = 1.0 / LINE_FREQUENCY;
        let dt = period / samples as f64;
        let peak = peak_current(load_fraction);
        (0..samples)
            .map(|k| {
                let phase = 2.0 * PI * k as f64 / samples as f64;
                CurrentSample {
                    current: (peak * phase.sin()).max(0.0),
                    period: dt,
                }
            })
            .collect()
    }
}
