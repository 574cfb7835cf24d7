//! Handbook-style failure rates for the power semiconductor switches.
//!
//! A unidirectional switch fails at `λ_S = λ_b · π_T · π_Q · π_E · Π π_i`,
//! where only the Arrhenius temperature factor `π_T` differs between
//! redundant configurations. A bidirectional switch is an anti-parallel
//! pair, so `λ_SW = 2 λ_S`, split into short- and open-circuit modes by the
//! fraction `χ`.

use crate::error::{non_negative, positive, probability, Error, Result};
use crate::units::{Fit, CELSIUS_OFFSET};

/// Activation constant for a thyristor pair, in kelvin.
pub const THYRISTOR_ACTIVATION: f64 = 3082.0;

/// Share of thyristor failures that are short circuits.
pub const THYRISTOR_SHORT_FRACTION: f64 = 0.98;

/// Reference junction temperature of the temperature factor, °C.
pub const REFERENCE_TEMPERATURE_C: f64 = 25.0;

/// Base rate and stress factors of a unidirectional switch.
#[derive(Debug, Clone, PartialEq)]
pub struct PartStressParams {
    pub lambda_b: Fit,
    pub pi_q: f64,
    pub pi_e: f64,
    /// Further multiplicative factors held equal across configurations,
    /// for instance the voltage stress factor at its lowest value.
    pub extra_pi: Vec<(String, f64)>,
    /// Arrhenius activation constant, kelvin.
    pub a: f64,
}

impl PartStressParams {
    pub fn new(lambda_b: Fit, pi_q: f64, pi_e: f64, a: f64) -> Result<Self> {
        let p = PartStressParams {
            lambda_b,
            pi_q,
            pi_e,
            extra_pi: Vec::new(),
            a,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_factor(mut self, name: &str, value: f64) -> Result<Self> {
        positive(name, value)?;
        self.extra_pi.push((name.to_owned(), value));
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        positive("lambda_b_fit", self.lambda_b.value())?;
        positive("pi_q", self.pi_q)?;
        positive("pi_e", self.pi_e)?;
        positive("a", self.a)?;
        for (name, value) in &self.extra_pi {
            positive(name, *value)?;
        }
        Ok(())
    }

    /// Product of every factor except `π_T`.
    pub fn temperature_independent_rate(&self) -> Fit {
        let extra: f64 = self.extra_pi.iter().map(|(_, v)| v).product();
        Fit(self.lambda_b.value() * self.pi_q * self.pi_e * extra)
    }
}

/// Open- and short-circuit rates of one bidirectional switch at full and
/// half load, in failures per hour.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwitchRates {
    pub oc: f64,
    pub sc: f64,
    pub oc_half: f64,
    pub sc_half: f64,
}

impl SwitchRates {
    pub fn new(oc: f64, sc: f64, oc_half: f64, sc_half: f64) -> Result<Self> {
        non_negative("lambda_oc", oc)?;
        non_negative("lambda_sc", sc)?;
        non_negative("lambda_oc_half", oc_half)?;
        non_negative("lambda_sc_half", sc_half)?;
        Ok(SwitchRates {
            oc,
            sc,
            oc_half,
            sc_half,
        })
    }

    /// Splits bidirectional rates at full and half load with the
    /// short-circuit fraction `chi`.
    pub fn from_split(lambda_sw: f64, lambda_sw_half: f64, chi: f64) -> Result<Self> {
        non_negative("lambda_sw", lambda_sw)?;
        non_negative("lambda_sw_half", lambda_sw_half)?;
        let (sc, oc) = split_rates(lambda_sw, chi)?;
        let (sc_half, oc_half) = split_rates(lambda_sw_half, chi)?;
        Ok(SwitchRates {
            oc,
            sc,
            oc_half,
            sc_half,
        })
    }

    /// Same rates at half and full load.
    pub fn uniform(oc: f64, sc: f64) -> Result<Self> {
        Self::new(oc, sc, oc, sc)
    }

    pub fn total(&self) -> f64 {
        self.oc + self.sc
    }

    pub fn total_half(&self) -> f64 {
        self.oc_half + self.sc_half
    }

    pub fn scaled(&self, k: f64) -> SwitchRates {
        SwitchRates {
            oc: self.oc * k,
            sc: self.sc * k,
            oc_half: self.oc_half * k,
            sc_half: self.sc_half * k,
        }
    }
}

/// Relay coverage probabilities and failure-mode split.
///
/// Shunt configurations use `p_s`; series configurations use `γ · p_s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageParams {
    pub p_s: f64,
    pub gamma: f64,
    pub chi: f64,
}

impl Default for CoverageParams {
    fn default() -> Self {
        CoverageParams {
            p_s: 1.0,
            gamma: 1.0,
            chi: THYRISTOR_SHORT_FRACTION,
        }
    }
}

impl CoverageParams {
    pub fn new(p_s: f64, gamma: f64, chi: f64) -> Result<Self> {
        probability("p_s", p_s)?;
        probability("gamma", gamma)?;
        probability("chi", chi)?;
        Ok(CoverageParams { p_s, gamma, chi })
    }

    pub fn perfect() -> Self {
        Self::default()
    }

    /// Coverage of the shunt redundant switch configurations.
    pub fn p_shunt(&self) -> f64 {
        self.p_s
    }

    /// Coverage of the series redundant switch configurations.
    pub fn p_series(&self) -> f64 {
        self.gamma * self.p_s
    }
}

fn check_temperature(t_j: f64) -> Result<f64> {
    if t_j.is_finite() && t_j > -CELSIUS_OFFSET {
        Ok(t_j + CELSIUS_OFFSET)
    } else {
        Err(Error::Domain(format!(
            "junction temperature {t_j} °C is at or below absolute zero"
        )))
    }
}

/// Arrhenius temperature factor `exp(-a (1/(T_j + 273) - 1/298))`.
pub fn temperature_factor(t_j: f64, a: f64) -> Result<f64> {
    let kelvin = check_temperature(t_j)?;
    let reference = REFERENCE_TEMPERATURE_C + CELSIUS_OFFSET;
    Ok((-a * (1.0 / kelvin - 1.0 / reference)).exp())
}

/// Failure rate of one unidirectional switch at junction temperature `t_j`.
pub fn unidirectional_rate(p: &PartStressParams, t_j: f64) -> Result<Fit> {
    p.validate()?;
    let pi_t = temperature_factor(t_j, p.a)?;
    Ok(Fit(p.temperature_independent_rate().value() * pi_t))
}

/// Failure rate of one bidirectional switch (two unidirectional devices).
pub fn bidirectional_rate(p: &PartStressParams, t_j: f64) -> Result<Fit> {
    Ok(Fit(2.0 * unidirectional_rate(p, t_j)?.value()))
}

/// Splits a bidirectional rate into `(short circuit, open circuit)`. The
/// parts add back to `lambda_sw` up to one rounding.
pub fn split_rates(lambda_sw: f64, chi: f64) -> Result<(f64, f64)> {
    probability("chi", chi)?;
    Ok((chi * lambda_sw, (1.0 - chi) * lambda_sw))
}

/// `λ_SW,H / λ_SW = π_T,H / π_T` for full-load junction temperature `t_j`
/// and half-load junction temperature `t_j_half`.
pub fn rate_ratio_from_temps(t_j: f64, t_j_half: f64, a: f64) -> Result<f64> {
    let full = check_temperature(t_j)?;
    let half = check_temperature(t_j_half)?;
    Ok((a * (1.0 / full - 1.0 / half)).exp())
}

/// Full- and half-load switch rates for the given junction temperatures.
pub fn switch_rates_at(
    p: &PartStressParams,
    t_j: f64,
    t_j_half: f64,
    chi: f64,
) -> Result<SwitchRates> {
    let full = bidirectional_rate(p, t_j)?.per_hour();
    let half = bidirectional_rate(p, t_j_half)?.per_hour();
    SwitchRates::from_split(full, half, chi)
}
