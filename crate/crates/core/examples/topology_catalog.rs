//! All five configurations at one set of rates: closed-form MTTF next to the
//! Markov engine on the configuration's state diagram.
//!
//!     cargo run --example topology_catalog

use fcl_reliability::failure::{CoverageParams, SwitchRates};
use fcl_reliability::markov::mttf;
use fcl_reliability::topology::{
    build_diagram, diagram_matches_closed_form, mttf_closed_form, Topology,
};

fn main() -> fcl_reliability::Result<()> {
    let rates = SwitchRates::from_split(4.4e-6, 1.0e-6, 0.98)?;
    for p_s in [1.0, 0.9] {
        let c = CoverageParams::new(p_s, 1.0, 0.98)?;
        println!("p_s = {p_s}");
        for t in Topology::ALL {
            let closed = mttf_closed_form(t, &rates, &c)?;
            let engine = mttf(&build_diagram(t, &rates, &c)?)?;
            let note = if diagram_matches_closed_form(t, &c) {
                ""
            } else {
                "  (diagram is a reconstruction)"
            };
            println!("  {t:<16} closed {closed:>12.1} h  engine {engine:>12.1} h{note}");
        }
    }
    Ok(())
}
