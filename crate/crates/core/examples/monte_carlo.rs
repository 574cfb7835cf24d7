//! Cross-checks the analytic MTTF of each configuration against a seeded
//! Monte Carlo simulation of its state diagram.
//!
//!     cargo run --release --example monte_carlo

use fcl_reliability::failure::{CoverageParams, SwitchRates};
use fcl_reliability::montecarlo::{simulate_mttf, McConfig};
use fcl_reliability::topology::{
    build_diagram, diagram_matches_closed_form, mttf_closed_form, Topology,
};

fn main() -> fcl_reliability::Result<()> {
    let rates = SwitchRates::from_split(4.4e-6, 1.0e-6, 0.98)?;
    let c = CoverageParams::new(0.95, 1.0, 0.98)?;
    let cfg = McConfig::new(1_000_000, 2024);
    for t in Topology::ALL {
        if !diagram_matches_closed_form(t, &c) {
            continue;
        }
        let analytic = mttf_closed_form(t, &rates, &c)?;
        let r = simulate_mttf(&build_diagram(t, &rates, &c)?, &cfg)?;
        println!(
            "{t:<16} analytic {analytic:>10.0} h  simulated {:>10.0} ± {:>5.0} h  z {:+.2}",
            r.mean_ttf,
            r.std_error,
            r.z_score(analytic)
        );
    }
    Ok(())
}
