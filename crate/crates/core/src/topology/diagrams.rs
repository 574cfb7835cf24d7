//! State diagrams of each configuration.
//!
//! State `S1` is always "both switches healthy". Absorbing states are
//! system failures; the open/short split is kept in separate absorbing
//! states where the mode matters for the FCL (open line vs. bypassed
//! limiter), though only time to absorption is computed from them.

use super::Topology;
use crate::error::Result;
use crate::failure::{CoverageParams, SwitchRates};
use crate::markov::StateDiagram;

/// Builds the state diagram of `t`.
///
/// The series standby diagram reproduces its closed form only at full
/// series coverage; see [`diagram_matches_closed_form`].
pub fn build_diagram(t: Topology, r: &SwitchRates, c: &CoverageParams) -> Result<StateDiagram> {
    match t {
        Topology::ShuntParallel => shunt_parallel(r, c.p_shunt()),
        Topology::ShuntStandby => shunt_standby(r, c.p_shunt()),
        Topology::SeriesParallel => series_parallel(r, c.p_series()),
        Topology::SeriesStandby => series_standby(r, c.p_series()),
        Topology::NonRedundant => non_redundant(r),
    }
}

/// Whether the engine MTTF of [`build_diagram`] equals the closed form.
pub fn diagram_matches_closed_form(t: Topology, c: &CoverageParams) -> bool {
    t != Topology::SeriesStandby || c.p_series() == 1.0
}

// S1 both healthy at half load; S2 one switch open and isolated; S3 one
// switch shorted and its relay opened; S4 short not isolated; S5..S7 the
// remaining switch fails.
fn shunt_parallel(r: &SwitchRates, p: f64) -> Result<StateDiagram> {
    StateDiagram::builder()
        .transition("S1", "S2", 2.0 * r.oc_half)
        .transition("S1", "S3", 2.0 * p * r.sc_half)
        .transition("S1", "S4", 2.0 * (1.0 - p) * r.sc_half)
        .transition("S2", "S5", r.oc)
        .transition("S2", "S6", r.sc)
        .transition("S3", "S6", r.oc)
        .transition("S3", "S7", r.sc)
        .absorbing("S4")
        .absorbing("S5")
        .absorbing("S6")
        .absorbing("S7")
        .initial("S1")
        .build()
}

// S1 main switch in circuit; S2 redundant switch in circuit. An open fault
// needs one relay operation, a short needs two (open main, close backup).
fn shunt_standby(r: &SwitchRates, p: f64) -> Result<StateDiagram> {
    StateDiagram::builder()
        .transition("S1", "S2", p * r.oc)
        .transition("S1", "S2", p * p * r.sc)
        .transition("S1", "S3", (1.0 - p) * r.oc)
        .transition("S1", "S4", (1.0 - p * p) * r.sc)
        .transition("S2", "S5", r.oc)
        .transition("S2", "S6", r.sc)
        .absorbing("S3")
        .absorbing("S4")
        .absorbing("S5")
        .absorbing("S6")
        .initial("S1")
        .build()
}

// S1 both switches in series at full load; S2 one switch left. A short in
// either switch is harmless; an open needs its bypass relay to close.
fn series_parallel(r: &SwitchRates, p: f64) -> Result<StateDiagram> {
    StateDiagram::builder()
        .transition("S1", "S2", 2.0 * p * r.oc)
        .transition("S1", "S2", 2.0 * r.sc)
        .transition("S1", "S3", 2.0 * (1.0 - p) * r.oc)
        .transition("S2", "S4", r.oc)
        .transition("S2", "S5", r.sc)
        .absorbing("S3")
        .absorbing("S4")
        .absorbing("S5")
        .initial("S1")
        .build()
}

// Reconstruction with coverage P² on open and P on short faults. Its MTTF
// is (λ + P²λ_oc + Pλ_sc)/λ², equal to the closed form only when P = 1.
fn series_standby(r: &SwitchRates, p: f64) -> Result<StateDiagram> {
    StateDiagram::builder()
        .transition("S1", "S2", p * p * r.oc)
        .transition("S1", "S2", p * r.sc)
        .transition("S1", "S3", (1.0 - p * p) * r.oc)
        .transition("S1", "S4", (1.0 - p) * r.sc)
        .transition("S2", "S5", r.oc)
        .transition("S2", "S6", r.sc)
        .absorbing("S3")
        .absorbing("S4")
        .absorbing("S5")
        .absorbing("S6")
        .initial("S1")
        .build()
}

fn non_redundant(r: &SwitchRates) -> Result<StateDiagram> {
    StateDiagram::builder()
        .transition("S1", "S2", r.oc)
        .transition("S1", "S2", r.sc)
        .absorbing("S2")
        .initial("S1")
        .build()
}
