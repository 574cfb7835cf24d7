//! Sweeps the case-to-ambient resistance of the prototype at reduced
//! losses and reports where the preferred configuration changes.
//!
//!     cargo run --example sensitivity_sweep

use fcl_reliability::failure::{CoverageParams, PartStressParams};
use fcl_reliability::thermal::ThermalStack;
use fcl_reliability::topology::{sensitivity_sweep, SweepParameter, ThresholdForm};
use fcl_reliability::units::Fit;
use fcl_reliability::OperatingPoint;

fn main() -> fcl_reliability::Result<()> {
    let base = OperatingPoint::new(
        PartStressParams::new(Fit(2.2), 8.0, 14.0, 3082.0)?,
        ThermalStack::new(25.0, 1.3, 0.0, 58.7)?,
        0.2,
        0.05,
        CoverageParams::perfect(),
    )?;
    let grid: Vec<f64> = (0..=20).map(|k| 10.0 * k as f64).collect();
    let rows = sensitivity_sweep(
        &base,
        SweepParameter::CaseToAmbient,
        &grid,
        ThresholdForm::Full,
    )?;
    println!(
        "{:>6} {:>8} {:>8} {:>12} {:>12}  winner",
        "r_ca", "T_j", "T_jH", "sh_p h", "s_sb h"
    );
    let mut last = None;
    for r in &rows {
        let mark = if last.is_some_and(|w| w != r.verdict.winner) {
            "  <- crossing"
        } else {
            ""
        };
        println!(
            "{:>6.0} {:>8.2} {:>8.2} {:>12.0} {:>12.0}  {}{mark}",
            r.value, r.t_j, r.t_j_half, r.mttf[0], r.mttf[3], r.verdict.winner
        );
        last = Some(r.verdict.winner);
    }
    Ok(())
}
