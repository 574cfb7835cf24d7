//! Threshold on λ_H/λ below which shunt parallel beats series standby, as a
//! function of relay coverage, in the full and truncated forms.
//!
//!     cargo run --example imperfect_coverage

use fcl_reliability::failure::CoverageParams;
use fcl_reliability::topology::{imperfect_coverage_threshold, ThresholdForm};

fn main() -> fcl_reliability::Result<()> {
    println!(
        "{:>6} {:>6} {:>10} {:>10}",
        "p_s", "gamma", "full", "truncated"
    );
    for p_s in [1.0, 0.99, 0.95, 0.9, 0.8] {
        for gamma in [1.0, 0.9] {
            let c = CoverageParams::new(p_s, gamma, 0.98)?;
            println!(
                "{p_s:>6} {gamma:>6} {:>10.5} {:>10.5}",
                imperfect_coverage_threshold(&c, ThresholdForm::Full)?,
                imperfect_coverage_threshold(&c, ThresholdForm::Truncated)?
            );
        }
    }
    Ok(())
}
