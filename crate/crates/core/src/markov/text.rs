//! Plain-text state diagram format.
//!
//! ```text
//! # shunt redundant switch, parallel operation
//! S1 -> S2 : 2000
//! S2 -> S5 : 1000
//! absorbing: S5
//! initial: S1
//! ```
//!
//! One transition per line as `FROM -> TO : RATE_FIT`, a line listing the
//! absorbing states and a line naming the initial state. Rates are in FIT.
//! Blank lines and `#` comments are ignored.

use super::diagram::{is_identifier, StateDiagram, StateKind};
use crate::error::{Error, Result};
use crate::units::Fit;

pub fn parse_diagram(text: &str) -> Result<StateDiagram> {
    let mut builder = StateDiagram::builder();
    let mut initial_seen = false;

    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }

        if let Some(rest) = line.strip_prefix("absorbing:") {
            for id in rest.split_whitespace() {
                check_id(id).map_err(err)?;
                builder = builder.absorbing(id);
            }
        } else if let Some(rest) = line.strip_prefix("initial:") {
            let id = rest.trim();
            check_id(id).map_err(err)?;
            if initial_seen {
                return Err(err("initial state declared twice".to_owned()));
            }
            initial_seen = true;
            builder = builder.initial(id);
        } else {
            let (edge, rate) = line
                .split_once(':')
                .ok_or_else(|| err(format!("expected `FROM -> TO : RATE_FIT`, got `{line}`")))?;
            let (from, to) = edge
                .split_once("->")
                .ok_or_else(|| err(format!("missing `->` in `{line}`")))?;
            let (from, to) = (from.trim(), to.trim());
            check_id(from).map_err(err)?;
            check_id(to).map_err(err)?;
            let fit: f64 = rate
                .trim()
                .parse()
                .map_err(|_| err(format!("rate `{}` is not a number", rate.trim())))?;
            builder = builder.transition(from, to, Fit(fit).per_hour());
        }
    }
    if !initial_seen {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: "missing `initial:` line".to_owned(),
        });
    }
    builder.build()
}

fn check_id(id: &str) -> std::result::Result<(), String> {
    if is_identifier(id) {
        Ok(())
    } else {
        Err(format!("`{id}` is not an alphanumeric state identifier"))
    }
}

/// Renders `d` in the text format. Parsing the output yields an equivalent
/// diagram up to FIT/per-hour rounding.
pub fn format_diagram(d: &StateDiagram) -> String {
    let mut out = String::new();
    for t in d.transitions() {
        out.push_str(&format!(
            "{} -> {} : {}\n",
            d.states()[t.from].id,
            d.states()[t.to].id,
            Fit::from_per_hour(t.rate).value()
        ));
    }
    let absorbing: Vec<&str> = d
        .states()
        .iter()
        .filter(|s| s.kind == StateKind::Absorbing)
        .map(|s| s.id.as_str())
        .collect();
    out.push_str(&format!("absorbing: {}\n", absorbing.join(" ")));
    out.push_str(&format!("initial: {}\n", d.initial_id()));
    out
}
