//! Unit helpers. Failure rates are carried internally in failures per hour;
//! FIT (1e-9 failures per hour) only appears at I/O boundaries.

/// Failures per hour in one FIT.
pub const FIT: f64 = 1e-9;

// 1 / FIT
const PER_FIT: f64 = 1e9;

/// Hours per day, used for MTTR conversions.
pub const HOURS_PER_DAY: f64 = 24.0;

/// Offset between the Celsius scale and the absolute scale used by the
/// Arrhenius temperature factor (the handbook form uses 273, not 273.15).
pub const CELSIUS_OFFSET: f64 = 273.0;

/// A failure rate expressed in FIT.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Fit(pub f64);

impl Fit {
    pub fn from_per_hour(rate: f64) -> Self {
        Fit(rate * PER_FIT)
    }

    pub fn per_hour(self) -> f64 {
        self.0 / PER_FIT
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl std::fmt::Display for Fit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} FIT", self.0)
    }
}
