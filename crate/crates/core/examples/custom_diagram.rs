//! Any state diagram in the text format can be analyzed, not only the five
//! built-in configurations. Here: three switches where the limiter survives
//! as long as two work, with a shared-cause failure path.
//!
//!     cargo run --example custom_diagram

use fcl_reliability::markov::{format_diagram, mttf, parse_diagram};
use fcl_reliability::montecarlo::{simulate_mttf, McConfig};

const TWO_OUT_OF_THREE: &str = "
# rates in FIT
A3 -> A2 : 3000
A3 -> F  : 50     # common cause
A2 -> F  : 2000
absorbing: F
initial: A3
";

fn main() -> fcl_reliability::Result<()> {
    let d = parse_diagram(TWO_OUT_OF_THREE)?;
    print!("{}", format_diagram(&d));
    let analytic = mttf(&d)?;
    let mc = simulate_mttf(&d, &McConfig::new(200_000, 1))?;
    println!(
        "MTTF {analytic:.0} h, simulated {:.0} ± {:.0} h",
        mc.mean_ttf, mc.std_error
    );
    Ok(())
}
