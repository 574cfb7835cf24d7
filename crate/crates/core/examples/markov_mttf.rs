//! Builds the shunt-parallel state diagram by hand and walks through the
//! absorbing-chain quantities: one-hour transition matrix, transient block
//! Q, fundamental matrix and MTTF.
//!
//!     cargo run --example markov_mttf

use fcl_reliability::markov::{
    build_transition_matrix, mttf, truncate, FundamentalMatrix, StateDiagram,
};

fn main() -> fcl_reliability::Result<()> {
    // λ_oc = λ_sc = λ_oc,H = λ_sc,H = 0.5e-6 per hour, perfect coverage
    let l = 0.5e-6;
    let d = StateDiagram::builder()
        .transition("S1", "S2", 2.0 * l)
        .transition("S1", "S3", 2.0 * l)
        .transition("S2", "S5", l)
        .transition("S2", "S6", l)
        .transition("S3", "S6", l)
        .transition("S3", "S7", l)
        .absorbing("S5")
        .absorbing("S6")
        .absorbing("S7")
        .initial("S1")
        .build()?;

    let p = build_transition_matrix(&d);
    println!("states {:?}", p.state_ids());
    println!("P ={}", p.entries());

    let q = truncate(&p)?;
    println!("Q ={}", q.entries());

    let m = FundamentalMatrix::from_diagram(&d)?;
    println!("M = (I - Q)^-1 ={}", m.entries());
    for (k, id) in m.state_ids().iter().enumerate() {
        println!("expected hours to failure from {id}: {:.6e}", m.row_sum(k));
    }

    println!("MTTF = {:.6e} h (expected 1.5e6)", mttf(&d)?);
    Ok(())
}
