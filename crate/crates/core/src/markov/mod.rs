//! Absorbing Markov chain engine.
//!
//! A [`StateDiagram`] is turned into a one-hour-step transition matrix `P`;
//! deleting the absorbing rows and columns leaves `Q`, and the row sums of
//! the fundamental matrix `M = (I - Q)^-1` are the expected hours to
//! absorption. [`mttf`] solves `(I - Q) x = 1` directly rather than forming
//! the inverse.

mod diagram;
mod matrix;
mod text;

pub use diagram::{DiagramBuilder, State, StateDiagram, StateKind, Transition};
pub use matrix::{
    build_transition_matrix, mttf, truncate, FundamentalMatrix, TransitionMatrix, TruncatedMatrix,
    PIVOT_TOLERANCE,
};
pub use text::{format_diagram, parse_diagram};
