//! Ranks the five configurations of the bundled prototype scenario by
//! levelized cost.
//!
//!     cargo run --example levelized_cost

use std::path::Path;

use fcl_reliability::cost::rank_configurations;
use fcl_reliability::Scenario;

fn main() -> fcl_reliability::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios/paper_repro.scn");
    let s = Scenario::load(&path)?;
    let ranked = rank_configurations(&s.operating_point()?, &s.cost()?)?;
    println!(
        "{:<16} {:>8} {:>10} {:>9} {:>9} {:>10} {:>10}",
        "topology", "C_inst", "C_loss", "C_repair", "C_outage", "MTTF h", "$/Mh"
    );
    for r in ranked {
        let b = r.bill;
        println!(
            "{:<16} {:>8.1} {:>10.2} {:>9.1} {:>9.0} {:>10.0} {:>10.2}",
            r.topology.name(),
            b.c_inst,
            b.c_loss,
            b.c_repair,
            b.c_outage,
            b.mttf_h,
            b.lc_per_mh
        );
    }
    Ok(())
}
