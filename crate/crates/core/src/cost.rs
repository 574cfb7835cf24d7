//! Levelized cost: lifetime cost divided by the expected time between
//! failures, reported in dollars per million hours.
//!
//! ```text
//! C_inst   = X · C₀ · I
//! C_loss   = P_loss · MTTF · C_l0            (W·h → kWh)
//! C_repair = C_inst + C_LT · I · MTTR
//! C_outage = C_d0 · MTTR
//! LC       = (C_inst + C_loss + C_repair + C_outage) / (MTTF + MTTR)
//! ```

use crate::error::{non_negative, positive, Error, Result};
use crate::topology::{OperatingPoint, Topology};
use crate::units::HOURS_PER_DAY;

/// Cost coefficients. Currency is dollars throughout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostParams {
    /// Cost per kA of switch capacity, $/kA.
    pub c0: f64,
    /// Current rating, kA.
    pub i_rating: f64,
    /// Installed bidirectional switch modules.
    pub x_switches: u32,
    /// Energy price for losses, $/kWh.
    pub c_l0: f64,
    /// Labor and transportation per repair, $/kA/day.
    pub c_lt: f64,
    /// Outage cost, $/day.
    pub c_d0: f64,
    /// Mean time to repair, days.
    pub mttr_days: f64,
}

impl CostParams {
    pub fn validate(&self) -> Result<()> {
        non_negative("c0_usd_per_ka", self.c0)?;
        non_negative("i_rating_ka", self.i_rating)?;
        non_negative("c_l0_usd_per_kwh", self.c_l0)?;
        non_negative("c_lt_usd_per_ka_day", self.c_lt)?;
        non_negative("c_d0_usd_per_day", self.c_d0)?;
        non_negative("mttr_days", self.mttr_days)?;
        if self.x_switches == 0 {
            return Err(Error::param("x_switches", 0.0, "must be at least 1"));
        }
        Ok(())
    }

    pub fn mttr_hours(&self) -> f64 {
        self.mttr_days * HOURS_PER_DAY
    }

    pub fn for_topology(&self, t: Topology) -> CostParams {
        CostParams {
            x_switches: t.installed_switches(),
            ..*self
        }
    }
}

/// Lifetime cost components and the resulting levelized cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostBill {
    pub c_inst: f64,
    pub c_loss: f64,
    pub c_repair: f64,
    pub c_outage: f64,
    pub mttf_h: f64,
    pub mttr_h: f64,
    /// Levelized cost, $ per million hours.
    pub lc_per_mh: f64,
}

impl CostBill {
    pub fn total(&self) -> f64 {
        self.c_inst + self.c_loss + self.c_repair + self.c_outage
    }
}

pub fn investment_cost(p: &CostParams) -> f64 {
    f64::from(p.x_switches) * p.c0 * p.i_rating
}

/// Costs a configuration with expected life `mttf_h` hours that dissipates
/// `p_loss_total` watts.
pub fn levelized_cost(p: &CostParams, mttf_h: f64, p_loss_total: f64) -> Result<CostBill> {
    p.validate()?;
    positive("mttf_h", mttf_h)?;
    non_negative("p_loss_total", p_loss_total)?;
    let mttr_h = p.mttr_hours();
    let c_inst = investment_cost(p);
    let c_loss = p_loss_total * mttf_h / 1000.0 * p.c_l0;
    let c_repair = c_inst + p.c_lt * p.i_rating * p.mttr_days;
    let c_outage = p.c_d0 * p.mttr_days;
    let total = c_inst + c_loss + c_repair + c_outage;
    Ok(CostBill {
        c_inst,
        c_loss,
        c_repair,
        c_outage,
        mttf_h,
        mttr_h,
        lc_per_mh: total / (mttf_h + mttr_h) * 1e6,
    })
}

/// A costed configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankedConfiguration {
    pub topology: Topology,
    pub bill: CostBill,
}

/// Costs one configuration end to end: losses, junction temperatures,
/// rates, MTTF, levelized cost.
pub fn cost_configuration(
    op: &OperatingPoint,
    cost: &CostParams,
    t: Topology,
) -> Result<RankedConfiguration> {
    let mttf = op.mttf(t)?;
    let bill = levelized_cost(&cost.for_topology(t), mttf, op.configuration_loss(t))?;
    Ok(RankedConfiguration { topology: t, bill })
}

/// All five configurations, cheapest levelized cost first. Ties keep the
/// declaration order of [`Topology::ALL`].
pub fn rank_configurations(
    op: &OperatingPoint,
    cost: &CostParams,
) -> Result<Vec<RankedConfiguration>> {
    let mut ranked = Topology::ALL
        .into_iter()
        .map(|t| cost_configuration(op, cost, t))
        .collect::<Result<Vec<_>>>()?;
    ranked.sort_by(|a, b| a.bill.lc_per_mh.total_cmp(&b.bill.lc_per_mh));
    Ok(ranked)
}
