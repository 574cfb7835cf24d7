//! Where shunt parallel beats standby under perfect coverage: boundary
//! constants, the junction-temperature boundary and the heat-sink form of
//! the same condition.
//!
//!     cargo run --example reliability_regions

use fcl_reliability::failure::THYRISTOR_ACTIVATION;
use fcl_reliability::thermal::ThermalStack;
use fcl_reliability::topology::{
    boundary_constants, heatsink_condition, region_verdict, temperature_boundary,
    temperature_boundary_exact,
};

fn main() -> fcl_reliability::Result<()> {
    let a = THYRISTOR_ACTIVATION;
    let k = boundary_constants(a)?;
    println!("C1 = {:.4}, C2 = {:.4}", k.c1, k.c2);

    println!("{:>8} {:>12} {:>12}", "T_jH", "linearized", "exact");
    for t_jh in [25.0, 40.0, 60.0, 80.0] {
        println!(
            "{t_jh:>8.1} {:>12.3} {:>12.3}",
            temperature_boundary(t_jh, a)?,
            temperature_boundary_exact(t_jh, a)?
        );
    }

    let v = region_verdict(106.2, 44.9, a)?;
    println!(
        "T_j 106.2 vs boundary {:.2} at T_jH 44.9 -> {}",
        v.boundary_value, v.winner
    );

    for r_ha in [0.5, 5.0, 58.7] {
        let stack = ThermalStack::new(25.0, 1.3, 0.0, r_ha)?;
        let v = heatsink_condition(1.34, 0.335, &stack, a)?;
        println!(
            "R_ha {r_ha:>5}: P - C1 P_H = {:.3} vs {:.3} -> {}",
            v.evaluated, v.boundary_value, v.winner
        );
    }
    Ok(())
}
