//! Temperature factor and switch failure rates at a few junction
//! temperatures, with the short/open split.
//!
//!     cargo run --example failure_rates

use fcl_reliability::failure::{
    bidirectional_rate, split_rates, temperature_factor, PartStressParams, THYRISTOR_ACTIVATION,
    THYRISTOR_SHORT_FRACTION,
};
use fcl_reliability::units::Fit;

fn main() -> fcl_reliability::Result<()> {
    let part = PartStressParams::new(Fit(2.2), 8.0, 14.0, THYRISTOR_ACTIVATION)?;
    println!(
        "temperature-independent part: {:.1} FIT",
        part.temperature_independent_rate().value()
    );
    println!(
        "{:>8} {:>10} {:>12} {:>12} {:>12}",
        "T_j °C", "pi_T", "λ_SW FIT", "λ_sc FIT", "λ_oc FIT"
    );
    for t_j in [25.0, 45.1, 75.0, 105.4, 125.0] {
        let pi_t = temperature_factor(t_j, part.a)?;
        let l = bidirectional_rate(&part, t_j)?;
        let (sc, oc) = split_rates(l.value(), THYRISTOR_SHORT_FRACTION)?;
        println!(
            "{t_j:>8.1} {pi_t:>10.4} {:>12.2} {sc:>12.2} {oc:>12.2}",
            l.value()
        );
    }
    Ok(())
}
