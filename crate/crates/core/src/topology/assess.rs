use super::{closed_form, imperfect_coverage_winner, ComparisonVerdict, ThresholdForm, Topology};
use crate::error::{non_negative, Result};
use crate::failure::{
    rate_ratio_from_temps, switch_rates_at, CoverageParams, PartStressParams, SwitchRates,
};
use crate::thermal::{junction_temperature, ThermalStack};

/// Everything needed to go from losses to MTTF: part stress factors, the
/// thermal stack, per-switch losses at full and half load, and coverage.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatingPoint {
    pub part: PartStressParams,
    pub stack: ThermalStack,
    /// Loss of one switch carrying the full load current, W.
    pub p_loss: f64,
    /// Loss of one switch carrying half the load current, W.
    pub p_loss_half: f64,
    pub coverage: CoverageParams,
}

impl OperatingPoint {
    pub fn new(
        part: PartStressParams,
        stack: ThermalStack,
        p_loss: f64,
        p_loss_half: f64,
        coverage: CoverageParams,
    ) -> Result<Self> {
        part.validate()?;
        non_negative("p_loss_w", p_loss)?;
        non_negative("p_loss_half_w", p_loss_half)?;
        Ok(OperatingPoint {
            part,
            stack,
            p_loss,
            p_loss_half,
            coverage,
        })
    }

    /// Junction temperatures at full and half load, °C.
    pub fn junction_temperatures(&self) -> (f64, f64) {
        (
            junction_temperature(&self.stack, self.p_loss),
            junction_temperature(&self.stack, self.p_loss_half),
        )
    }

    pub fn switch_rates(&self) -> Result<SwitchRates> {
        let (t_j, t_j_half) = self.junction_temperatures();
        switch_rates_at(&self.part, t_j, t_j_half, self.coverage.chi)
    }

    /// `λ_SW,H / λ_SW`.
    pub fn half_over_full(&self) -> Result<f64> {
        let (t_j, t_j_half) = self.junction_temperatures();
        rate_ratio_from_temps(t_j, t_j_half, self.part.a)
    }

    pub fn mttf(&self, t: Topology) -> Result<f64> {
        closed_form::mttf_closed_form(t, &self.switch_rates()?, &self.coverage)
    }

    /// Shunt parallel against series standby through the coverage threshold.
    pub fn verdict(&self, form: ThresholdForm) -> Result<ComparisonVerdict> {
        imperfect_coverage_winner(self.half_over_full()?, &self.coverage, form)
    }

    /// Total loss dissipated by the conducting switches of `t` in the
    /// all-healthy state, W.
    pub fn configuration_loss(&self, t: Topology) -> f64 {
        let per_switch = if t.shares_load() {
            self.p_loss_half
        } else {
            self.p_loss
        };
        f64::from(t.conducting_switches()) * per_switch
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::Preferred;
    use crate::units::Fit;

    fn point(p_loss: f64, p_loss_half: f64) -> OperatingPoint {
        OperatingPoint::new(
            PartStressParams::new(Fit(2.2), 8.0, 14.0, 3082.0).unwrap(),
            ThermalStack::new(25.0, 1.3, 0.0, 58.7).unwrap(),
            p_loss,
            p_loss_half,
            CoverageParams::perfect(),
        )
        .unwrap()
    }

    #[test]
    fn prototype_operating_point_prefers_shunt_parallel() {
        let op = point(1.34, 0.335);
        let (t_j, t_j_half) = op.junction_temperatures();
        assert!((t_j - 105.4).abs() < 1e-12);
        assert!((t_j_half - 45.1).abs() < 1e-12);
        assert_eq!(
            op.verdict(ThresholdForm::Full).unwrap().winner,
            Preferred::ShuntParallel
        );
        assert!(
            op.mttf(Topology::ShuntParallel).unwrap() > op.mttf(Topology::SeriesStandby).unwrap()
        );
    }

    #[test]
    fn verdict_agrees_with_mttf_ordering() {
        for (p, ph) in [(1.34, 0.335), (0.5, 0.45), (0.3, 0.29), (2.0, 0.2)] {
            let op = point(p, ph);
            let v = op.verdict(ThresholdForm::Full).unwrap().winner;
            let sp = op.mttf(Topology::ShuntParallel).unwrap();
            let sb = op.mttf(Topology::SeriesStandby).unwrap();
            assert_eq!(v == Preferred::ShuntParallel, sp > sb, "p={p} ph={ph}");
        }
    }

    #[test]
    fn configuration_losses() {
        let op = point(1.34, 0.335);
        assert_eq!(op.configuration_loss(Topology::ShuntParallel), 0.67);
        assert_eq!(op.configuration_loss(Topology::SeriesParallel), 2.68);
        assert_eq!(op.configuration_loss(Topology::ShuntStandby), 1.34);
        assert_eq!(op.configuration_loss(Topology::NonRedundant), 1.34);
    }
}
