//! Closed-form MTTFs, in hours, for rates in failures per hour.
//!
//! The general forms take open/short-circuit rates and a coverage
//! probability. [`perfect`] and [`imperfect`] hold the same expressions
//! rewritten for `P_S = 1` and for a short-circuit fraction `χ`.

use super::Topology;
use crate::error::{Error, Result};
use crate::failure::{CoverageParams, SwitchRates};

fn finite(value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InfiniteMttf)
    }
}

/// Shunt redundant switch, parallel operation. Half-load rates apply until
/// the first fault.
pub fn shunt_parallel(r: &SwitchRates, p: f64) -> f64 {
    let full = r.oc + r.sc;
    let half = r.oc_half + r.sc_half;
    (full + 2.0 * (r.oc_half + p * r.sc_half)) / (2.0 * full * half)
}

/// Shunt redundant switch, standby operation.
pub fn shunt_standby(r: &SwitchRates, p: f64) -> f64 {
    let s = r.oc + r.sc;
    (s + p * r.oc + p * p * r.sc) / (s * s)
}

/// Series redundant switch, parallel operation.
pub fn series_parallel(r: &SwitchRates, p: f64) -> f64 {
    let s = r.oc + r.sc;
    (s + 2.0 * r.sc + 2.0 * p * r.oc) / (2.0 * s * s)
}

/// Series redundant switch, standby operation.
pub fn series_standby(r: &SwitchRates, p: f64) -> f64 {
    let s = r.oc + r.sc;
    (s + p * p * r.oc + p * r.sc) / ((p * p * r.oc + r.sc) * s)
}

/// A single switch.
pub fn non_redundant(r: &SwitchRates) -> f64 {
    1.0 / (r.oc + r.sc)
}

/// MTTF of `t` for the given rates and coverage. Shunt configurations use
/// [`CoverageParams::p_shunt`], series ones [`CoverageParams::p_series`].
pub fn mttf_closed_form(t: Topology, r: &SwitchRates, c: &CoverageParams) -> Result<f64> {
    if r.total() <= 0.0 || (t == Topology::ShuntParallel && r.total_half() <= 0.0) {
        return Err(Error::InfiniteMttf);
    }
    let value = match t {
        Topology::ShuntParallel => shunt_parallel(r, c.p_shunt()),
        Topology::ShuntStandby => shunt_standby(r, c.p_shunt()),
        Topology::SeriesParallel => series_parallel(r, c.p_series()),
        Topology::SeriesStandby => series_standby(r, c.p_series()),
        Topology::NonRedundant => non_redundant(r),
    };
    finite(value)
}

/// Perfect coverage, written with bidirectional rates `λ_SW` and `λ_SW,H`.
pub mod perfect {
    pub fn shunt_parallel(lambda_sw: f64, lambda_sw_half: f64) -> f64 {
        (lambda_sw + 2.0 * lambda_sw_half) / (2.0 * lambda_sw * lambda_sw_half)
    }

    /// Both standby configurations.
    pub fn standby(lambda_sw: f64) -> f64 {
        2.0 / lambda_sw
    }

    pub fn series_parallel(lambda_sw: f64) -> f64 {
        3.0 / (2.0 * lambda_sw)
    }

    pub fn non_redundant(lambda_sw: f64) -> f64 {
        1.0 / lambda_sw
    }
}

/// Imperfect coverage with a fraction `chi` of short-circuit faults.
pub mod imperfect {
    pub fn shunt_parallel(lambda_sw: f64, lambda_sw_half: f64, chi: f64, p_shunt: f64) -> f64 {
        (lambda_sw + (2.0 + 2.0 * chi * (p_shunt - 1.0)) * lambda_sw_half)
            / (2.0 * lambda_sw * lambda_sw_half)
    }

    pub fn series_standby(lambda_sw: f64, chi: f64, p_series: f64) -> f64 {
        let p2 = p_series * p_series;
        (1.0 + p2 + (p_series - p2) * chi) / (lambda_sw * (p2 + (1.0 - p2) * chi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn perfect_coverage_equal_rates() {
        let r = SwitchRates::uniform(0.5e-6, 0.5e-6).unwrap();
        let c = CoverageParams::perfect();
        let m = |t| mttf_closed_form(t, &r, &c).unwrap();
        assert!(rel(m(Topology::ShuntParallel), 1.5e6) < 1e-14);
        assert!(rel(m(Topology::ShuntStandby), 2e6) < 1e-14);
        assert!(rel(m(Topology::SeriesStandby), 2e6) < 1e-14);
        assert!(rel(m(Topology::SeriesParallel), 1.5e6) < 1e-14);
        assert!(rel(m(Topology::NonRedundant), 1e6) < 1e-14);
    }

    #[test]
    fn zero_rate_is_infinite() {
        let r = SwitchRates::uniform(0.0, 0.0).unwrap();
        assert_eq!(
            mttf_closed_form(Topology::NonRedundant, &r, &CoverageParams::perfect()),
            Err(Error::InfiniteMttf)
        );
        let r = SwitchRates::new(1e-6, 1e-6, 0.0, 0.0).unwrap();
        assert_eq!(
            mttf_closed_form(Topology::ShuntParallel, &r, &CoverageParams::perfect()),
            Err(Error::InfiniteMttf)
        );
    }

    #[test]
    fn imperfect_forms_reduce_at_full_coverage() {
        for (l, lh) in [(1e-6, 1e-6), (3e-6, 0.4e-6), (2e-7, 9e-7)] {
            for chi in [0.0, 0.3, 0.98, 1.0] {
                assert!(
                    rel(
                        imperfect::shunt_parallel(l, lh, chi, 1.0),
                        perfect::shunt_parallel(l, lh)
                    ) < 1e-15
                );
                assert!(rel(imperfect::series_standby(l, chi, 1.0), 2.0 / l) < 1e-15);
            }
        }
    }

    #[test]
    fn imperfect_forms_match_general_forms_under_split() {
        let (l, lh) = (3e-6, 0.7e-6);
        for chi in [0.1, 0.5, 0.98] {
            for p in [0.2, 0.7, 0.95] {
                let r = SwitchRates::from_split(l, lh, chi).unwrap();
                assert!(
                    rel(
                        imperfect::shunt_parallel(l, lh, chi, p),
                        shunt_parallel(&r, p)
                    ) < 1e-13
                );
                assert!(rel(imperfect::series_standby(l, chi, p), series_standby(&r, p)) < 1e-13);
            }
        }
    }
}
