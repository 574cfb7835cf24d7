use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// Whether a state is left again once entered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateKind {
    Transient,
    /// System failure; never left once entered.
    Absorbing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    pub id: String,
    pub kind: StateKind,
}

/// A rate-labelled edge between two states, by state index. Rates are in
/// failures per hour.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transition {
    pub from: usize,
    pub to: usize,
    pub rate: f64,
}

/// A validated continuous-time state diagram with at least one absorbing
/// state reachable from a transient initial state.
///
/// Construct through [`DiagramBuilder`]. Parallel transitions between the
/// same pair of states are kept as written and summed wherever rates are
/// consumed.
#[derive(Debug, Clone, PartialEq)]
pub struct StateDiagram {
    states: Vec<State>,
    transitions: Vec<Transition>,
    initial: usize,
}

impl StateDiagram {
    pub fn builder() -> DiagramBuilder {
        DiagramBuilder::default()
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn initial_id(&self) -> &str {
        &self.states[self.initial].id
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.states.iter().position(|s| s.id == id)
    }

    pub fn kind(&self, index: usize) -> StateKind {
        self.states[index].kind
    }

    pub fn transient_indices(&self) -> Vec<usize> {
        self.indices_of(StateKind::Transient)
    }

    pub fn absorbing_indices(&self) -> Vec<usize> {
        self.indices_of(StateKind::Absorbing)
    }

    fn indices_of(&self, kind: StateKind) -> Vec<usize> {
        self.states
            .iter()
            .enumerate()
            .filter(|(_, s)| s.kind == kind)
            .map(|(i, _)| i)
            .collect()
    }

    /// Outgoing rates per state with parallel transitions summed, in order
    /// of first appearance. Zero-rate edges are kept.
    pub fn merged_rates(&self) -> Vec<Vec<(usize, f64)>> {
        let mut out: Vec<Vec<(usize, f64)>> = vec![Vec::new(); self.states.len()];
        for t in &self.transitions {
            let row = &mut out[t.from];
            match row.iter_mut().find(|(to, _)| *to == t.to) {
                Some(entry) => entry.1 += t.rate,
                None => row.push((t.to, t.rate)),
            }
        }
        out
    }

    /// Total exit rate of `index`.
    pub fn exit_rate(&self, index: usize) -> f64 {
        self.transitions
            .iter()
            .filter(|t| t.from == index)
            .map(|t| t.rate)
            .sum()
    }

    /// The same diagram with every rate multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<StateDiagram> {
        let mut builder = DiagramBuilder::from(self);
        for t in &mut builder.transitions {
            t.2 *= factor;
        }
        builder.build()
    }
}

/// Incremental constructor for [`StateDiagram`].
///
/// States are ordered by declaration; a state first mentioned by a
/// transition is declared transient unless marked absorbing afterwards.
#[derive(Debug, Clone, Default)]
pub struct DiagramBuilder {
    states: Vec<State>,
    transitions: Vec<(String, String, f64)>,
    initial: Option<String>,
}

impl DiagramBuilder {
    pub fn transient(mut self, id: &str) -> Self {
        self.declare(id, StateKind::Transient);
        self
    }

    pub fn absorbing(mut self, id: &str) -> Self {
        self.declare(id, StateKind::Absorbing);
        self
    }

    pub fn transition(mut self, from: &str, to: &str, rate: f64) -> Self {
        self.touch(from);
        self.touch(to);
        self.transitions
            .push((from.to_owned(), to.to_owned(), rate));
        self
    }

    pub fn initial(mut self, id: &str) -> Self {
        self.touch(id);
        self.initial = Some(id.to_owned());
        self
    }

    fn touch(&mut self, id: &str) {
        if !self.states.iter().any(|s| s.id == id) {
            self.states.push(State {
                id: id.to_owned(),
                kind: StateKind::Transient,
            });
        }
    }

    fn declare(&mut self, id: &str, kind: StateKind) {
        match self.states.iter_mut().find(|s| s.id == id) {
            Some(state) => state.kind = kind,
            None => self.states.push(State {
                id: id.to_owned(),
                kind,
            }),
        }
    }

    pub fn build(self) -> Result<StateDiagram> {
        let invalid = |msg: String| Err(Error::InvalidDiagram(msg));

        if let Some(bad) = self.states.iter().find(|s| !is_identifier(&s.id)) {
            return invalid(format!(
                "state identifier `{}` must be a non-empty alphanumeric token",
                bad.id
            ));
        }
        let index: HashMap<&str, usize> = self
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.id.as_str(), i))
            .collect();

        let mut transitions = Vec::with_capacity(self.transitions.len());
        for (from, to, rate) in &self.transitions {
            let (f, t) = (index[from.as_str()], index[to.as_str()]);
            if f == t {
                return invalid(format!("self-transition on state `{from}`"));
            }
            if !(rate.is_finite() && *rate >= 0.0) {
                return invalid(format!(
                    "transition `{from} -> {to}` has rate {rate}; rates must be finite and >= 0"
                ));
            }
            if self.states[f].kind == StateKind::Absorbing {
                return invalid(format!(
                    "transition `{from} -> {to}` leaves absorbing state `{from}`"
                ));
            }
            transitions.push(Transition {
                from: f,
                to: t,
                rate: *rate,
            });
        }

        let Some(initial_id) = self.initial else {
            return invalid("no initial state declared".to_owned());
        };
        let initial = index[initial_id.as_str()];
        if self.states[initial].kind != StateKind::Transient {
            return invalid(format!("initial state `{initial_id}` is absorbing"));
        }

        let diagram = StateDiagram {
            states: self.states,
            transitions,
            initial,
        };
        if !absorption_reachable(&diagram) {
            return invalid(format!(
                "no absorbing state is reachable from initial state `{initial_id}`"
            ));
        }
        Ok(diagram)
    }
}

impl From<&StateDiagram> for DiagramBuilder {
    fn from(d: &StateDiagram) -> Self {
        DiagramBuilder {
            states: d.states.clone(),
            transitions: d
                .transitions
                .iter()
                .map(|t| {
                    (
                        d.states[t.from].id.clone(),
                        d.states[t.to].id.clone(),
                        t.rate,
                    )
                })
                .collect(),
            initial: Some(d.states[d.initial].id.clone()),
        }
    }
}

pub(crate) fn is_identifier(id: &str) -> bool {
    !id.is_empty() && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn absorption_reachable(d: &StateDiagram) -> bool {
    let mut seen = vec![false; d.states.len()];
    let mut queue = VecDeque::from([d.initial]);
    seen[d.initial] = true;
    while let Some(i) = queue.pop_front() {
        if d.states[i].kind == StateKind::Absorbing {
            return true;
        }
        for t in d.transitions.iter().filter(|t| t.from == i && t.rate > 0.0) {
            if !seen[t.to] {
                seen[t.to] = true;
                queue.push_back(t.to);
            }
        }
    }
    false
}
