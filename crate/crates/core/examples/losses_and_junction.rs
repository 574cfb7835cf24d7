//! Conduction loss of one thyristor in the laboratory prototype, at full and
//! half load, and the junction temperatures they produce.
//!
//!     cargo run --example losses_and_junction

use fcl_reliability::thermal::{
    junction_from_case, junction_temperature, power_loss, prototype, LossSpec, ThermalStack,
};

fn main() -> fcl_reliability::Result<()> {
    let stack = ThermalStack::new(25.0, 1.3, 0.0, 58.7)?;
    for (label, fraction) in [("full", 1.0), ("half", 0.5)] {
        let spec = LossSpec {
            f_sw: 0.0,
            e_on: 0.0,
            e_off: 0.0,
            v_0: 0.0,
            r_s: prototype::FITTED_ON_RESISTANCE,
            samples: prototype::thyristor_current(fraction, 2000),
        };
        let p = power_loss(&spec)?;
        println!(
            "{label} load: peak {:.3} A, loss {p:.4} W, T_j {:.2} °C",
            prototype::peak_current(fraction),
            junction_temperature(&stack, p)
        );
    }

    // from measured case temperatures instead of ambient
    println!(
        "T_j from case: {:.2} °C and {:.2} °C",
        junction_from_case(44.46, 0.335, 1.3),
        junction_from_case(104.46, 1.34, 1.3)
    );
    Ok(())
}
