//! The component-level redundant switch configurations of a series-switch
//! fault current limiter, their state diagrams, closed-form MTTFs and the
//! boundaries that decide which configuration is more reliable.

mod assess;
pub mod closed_form;
mod compare;
mod diagrams;
mod sweep;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub use assess::OperatingPoint;
pub use closed_form::mttf_closed_form;
pub use compare::{
    boundary_constants, heatsink_condition, imperfect_coverage_threshold,
    imperfect_coverage_winner, perfect_coverage_winner, region_verdict, temperature_boundary,
    temperature_boundary_exact, BoundaryConstants, ComparisonVerdict, Preferred, ThresholdForm,
};
pub use diagrams::{build_diagram, diagram_matches_closed_form};
pub use sweep::{sensitivity_sweep, SweepParameter, SweepRow};

/// Where the redundant switch sits and how the pair behaves from a
/// reliability point of view.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Topology {
    /// Shunt redundant switch, both switches share the load (parallel).
    ShuntParallel,
    /// Shunt redundant switch, backup enters after the main fails.
    ShuntStandby,
    /// Series redundant switch, both in circuit from the start (parallel).
    SeriesParallel,
    /// Series redundant switch, backup enters after the main fails.
    SeriesStandby,
    /// A single bidirectional switch.
    NonRedundant,
}

impl Topology {
    pub const ALL: [Topology; 5] = [
        Topology::ShuntParallel,
        Topology::ShuntStandby,
        Topology::SeriesParallel,
        Topology::SeriesStandby,
        Topology::NonRedundant,
    ];

    /// The four redundant configurations, in sweep-column order.
    pub const REDUNDANT: [Topology; 4] = [
        Topology::ShuntParallel,
        Topology::ShuntStandby,
        Topology::SeriesParallel,
        Topology::SeriesStandby,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Topology::ShuntParallel => "shunt_parallel",
            Topology::ShuntStandby => "shunt_standby",
            Topology::SeriesParallel => "series_parallel",
            Topology::SeriesStandby => "series_standby",
            Topology::NonRedundant => "non_redundant",
        }
    }

    pub fn is_redundant(self) -> bool {
        self != Topology::NonRedundant
    }

    /// Bidirectional switch modules installed.
    pub fn installed_switches(self) -> u32 {
        if self.is_redundant() {
            2
        } else {
            1
        }
    }

    /// Switches carrying current in the initial (all healthy) state.
    pub fn conducting_switches(self) -> u32 {
        match self {
            Topology::ShuntParallel | Topology::SeriesParallel => 2,
            _ => 1,
        }
    }

    /// Whether the conducting switches share the load current.
    pub fn shares_load(self) -> bool {
        self == Topology::ShuntParallel
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Topology::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                Error::Domain(format!(
                    "unknown topology `{s}` (expected one of shunt_parallel, shunt_standby, \
                     series_parallel, series_standby, non_redundant)"
                ))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for t in Topology::ALL {
            assert_eq!(t.name().parse::<Topology>().unwrap(), t);
        }
        assert!("bridge".parse::<Topology>().is_err());
    }
}
