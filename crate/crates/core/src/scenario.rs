//! Scenario files: flat `key = value` text, one pair per line, `#` starts a
//! comment. Unknown keys are rejected.
//!
//! | key | unit | default |
//! |---|---|---|
//! | `topology` | name | none |
//! | `p_s`, `gamma`, `chi` | probability | 1, 1, 0.98 |
//! | `t_a_c` | °C | required for thermal work |
//! | `r_jc`, `r_ch`, `r_ha` | °C/W | `r_ch` = 0 |
//! | `p_loss_w`, `p_loss_half_w` | W per switch | from waveforms |
//! | `waveform_full`, `waveform_half` | CSV path | none |
//! | `v0_v`, `r_s_ohm`, `f_sw_hz`, `e_on_j`, `e_off_j` | V, Ω, Hz, J | 0 |
//! | `a` | K | 3082 |
//! | `lambda_b_fit` | FIT | required |
//! | `pi_q`, `pi_e` | 1 | required |
//! | `c0_usd_per_ka`, `i_rating_ka` | $/kA, kA | required for cost |
//! | `c_l0_usd_per_kwh`, `c_lt_usd_per_ka_day`, `c_d0_usd_per_day` | $ | required for cost |
//! | `mttr_days` | day | required for cost |
//! | `l_m_h` | H | informational |

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::cost::CostParams;
use crate::error::{Error, Result};
use crate::failure::{
    CoverageParams, PartStressParams, THYRISTOR_ACTIVATION, THYRISTOR_SHORT_FRACTION,
};
use crate::thermal::{read_waveform_csv, LossSpec, ThermalStack};
use crate::topology::{OperatingPoint, Topology};
use crate::units::Fit;

const TEXT_KEYS: &[&str] = &["topology", "waveform_full", "waveform_half"];

// Numeric keys; `true` marks keys that may be negative.
const NUMERIC_KEYS: &[(&str, bool)] = &[
    ("p_s", false),
    ("gamma", false),
    ("chi", false),
    ("t_a_c", true),
    ("r_jc", false),
    ("r_ch", false),
    ("r_ha", false),
    ("p_loss_w", false),
    ("p_loss_half_w", false),
    ("a", false),
    ("lambda_b_fit", false),
    ("pi_q", false),
    ("pi_e", false),
    ("c0_usd_per_ka", false),
    ("i_rating_ka", false),
    ("c_l0_usd_per_kwh", false),
    ("c_lt_usd_per_ka_day", false),
    ("c_d0_usd_per_day", false),
    ("mttr_days", false),
    ("l_m_h", false),
    ("v0_v", false),
    ("r_s_ohm", false),
    ("f_sw_hz", false),
    ("e_on_j", false),
    ("e_off_j", false),
];

/// Waveform samples used when a scenario derives losses from CSV files.
const DEFAULT_WAVEFORM_KEYS: [&str; 2] = ["waveform_full", "waveform_half"];

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Number(f64),
    Text(String),
}

/// A parsed scenario. Relative waveform paths resolve against `base_dir`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scenario {
    values: BTreeMap<String, Value>,
    base_dir: Option<PathBuf>,
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Scenario> {
        let mut values = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| Error::Parse {
                line,
                message: format!("expected `key = value`, got `{content}`"),
            })?;
            let (key, value) = (key.trim(), value.trim());
            if value.is_empty() {
                return Err(Error::Parse {
                    line,
                    message: format!("key `{key}` has no value"),
                });
            }
            let parsed = if TEXT_KEYS.contains(&key) {
                Value::Text(value.to_owned())
            } else if let Some(&(_, signed)) = NUMERIC_KEYS.iter().find(|(name, _)| *name == key) {
                let x: f64 = value.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("key `{key}`: `{value}` is not a number"),
                })?;
                if !x.is_finite() || (!signed && x < 0.0) {
                    return Err(Error::param(key, x, "must be finite and non-negative"));
                }
                Value::Number(x)
            } else {
                return Err(Error::UnknownKey(key.to_owned()));
            };
            if values.insert(key.to_owned(), parsed).is_some() {
                return Err(Error::Parse {
                    line,
                    message: format!("key `{key}` given twice"),
                });
            }
        }
        let s = Scenario {
            values,
            base_dir: None,
        };
        if let Some(name) = s.text("topology") {
            name.parse::<Topology>()?;
        }
        Ok(s)
    }

    pub fn load(path: &Path) -> Result<Scenario> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let mut s = Scenario::parse(&text)?;
        s.base_dir = path.parent().map(Path::to_path_buf);
        Ok(s)
    }

    pub fn number(&self, key: &str) -> Option<f64> {
        match self.values.get(key) {
            Some(Value::Number(x)) => Some(*x),
            _ => None,
        }
    }

    pub fn text(&self, key: &str) -> Option<&str> {
        match self.values.get(key) {
            Some(Value::Text(s)) => Some(s),
            _ => None,
        }
    }

    pub fn require(&self, key: &str) -> Result<f64> {
        self.number(key)
            .ok_or_else(|| Error::MissingKey(key.to_owned()))
    }

    fn or(&self, key: &str, default: f64) -> f64 {
        self.number(key).unwrap_or(default)
    }

    /// Sets or replaces a numeric key.
    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        let &(_, signed) = NUMERIC_KEYS
            .iter()
            .find(|(name, _)| *name == key)
            .ok_or_else(|| Error::UnknownKey(key.to_owned()))?;
        if !value.is_finite() || (!signed && value < 0.0) {
            return Err(Error::param(key, value, "must be finite and non-negative"));
        }
        self.values.insert(key.to_owned(), Value::Number(value));
        Ok(())
    }

    pub fn topology(&self) -> Result<Option<Topology>> {
        self.text("topology").map(str::parse).transpose()
    }

    pub fn part(&self) -> Result<PartStressParams> {
        PartStressParams::new(
            Fit(self.require("lambda_b_fit")?),
            self.require("pi_q")?,
            self.require("pi_e")?,
            self.or("a", THYRISTOR_ACTIVATION),
        )
    }

    pub fn coverage(&self) -> Result<CoverageParams> {
        CoverageParams::new(
            self.or("p_s", 1.0),
            self.or("gamma", 1.0),
            self.or("chi", THYRISTOR_SHORT_FRACTION),
        )
    }

    pub fn stack(&self) -> Result<ThermalStack> {
        ThermalStack::new(
            self.require("t_a_c")?,
            self.require("r_jc")?,
            self.or("r_ch", 0.0),
            self.require("r_ha")?,
        )
    }

    fn resolve(&self, file: &str) -> PathBuf {
        match &self.base_dir {
            Some(dir) if Path::new(file).is_relative() => dir.join(file),
            _ => PathBuf::from(file),
        }
    }

    /// Loss model for the waveform stored under `key`.
    pub fn loss_spec(&self, key: &str) -> Result<LossSpec> {
        let file = self
            .text(key)
            .ok_or_else(|| Error::MissingKey(key.to_owned()))?;
        Ok(LossSpec {
            f_sw: self.or("f_sw_hz", 0.0),
            e_on: self.or("e_on_j", 0.0),
            e_off: self.or("e_off_j", 0.0),
            v_0: self.or("v0_v", 0.0),
            r_s: self.or("r_s_ohm", 0.0),
            samples: read_waveform_csv(&self.resolve(file))?,
        })
    }

    /// Per-switch losses at full and half load. Explicit `p_loss_w` and
    /// `p_loss_half_w` take precedence over waveform files.
    pub fn losses(&self) -> Result<(f64, f64)> {
        let [full_key, half_key] = DEFAULT_WAVEFORM_KEYS;
        let full = match self.number("p_loss_w") {
            Some(p) => p,
            None if self.text(full_key).is_some() => self.loss_spec(full_key)?.breakdown()?.total(),
            None => return Err(Error::MissingKey("p_loss_w".to_owned())),
        };
        let half = match self.number("p_loss_half_w") {
            Some(p) => p,
            None if self.text(half_key).is_some() => self.loss_spec(half_key)?.breakdown()?.total(),
            None => return Err(Error::MissingKey("p_loss_half_w".to_owned())),
        };
        Ok((full, half))
    }

    pub fn operating_point(&self) -> Result<OperatingPoint> {
        let (p_loss, p_loss_half) = self.losses()?;
        OperatingPoint::new(
            self.part()?,
            self.stack()?,
            p_loss,
            p_loss_half,
            self.coverage()?,
        )
    }

    /// Cost coefficients; the switch count is set per topology when costing.
    pub fn cost(&self) -> Result<CostParams> {
        let p = CostParams {
            c0: self.require("c0_usd_per_ka")?,
            i_rating: self.require("i_rating_ka")?,
            x_switches: 2,
            c_l0: self.require("c_l0_usd_per_kwh")?,
            c_lt: self.require("c_lt_usd_per_ka_day")?,
            c_d0: self.require("c_d0_usd_per_day")?,
            mttr_days: self.require("mttr_days")?,
        };
        p.validate()?;
        Ok(p)
    }
}
