use nalgebra::{DMatrix, DVector};

use super::diagram::{StateDiagram, StateKind};
use crate::error::{Error, Result};

/// Relative pivot threshold below which `I - Q` is treated as singular.
pub const PIVOT_TOLERANCE: f64 = 1e-12;

/// Per-step transition probabilities of the discretised chain (one-hour
/// step). Off-diagonal `(i, j)` is the rate `i -> j`; the diagonal closes
/// each row to one and absorbing rows are identity rows.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    ids: Vec<String>,
    kinds: Vec<StateKind>,
    entries: DMatrix<f64>,
}

impl TransitionMatrix {
    /// Wraps raw entries, checking row sums, signs, and identity rows for
    /// absorbing states. Intended for matrices that did not come from a
    /// [`StateDiagram`].
    pub fn from_entries(
        ids: Vec<String>,
        kinds: Vec<StateKind>,
        entries: DMatrix<f64>,
    ) -> Result<Self> {
        let n = ids.len();
        if kinds.len() != n || entries.nrows() != n || entries.ncols() != n {
            return Err(Error::InvalidDiagram(format!(
                "matrix is {}x{} but {} state ids and {} kinds were given",
                entries.nrows(),
                entries.ncols(),
                n,
                kinds.len()
            )));
        }
        for i in 0..n {
            let row = entries.row(i);
            if let Some(j) = (0..n).find(|&j| i != j && (row[j].is_nan() || row[j] < 0.0)) {
                return Err(Error::InvalidDiagram(format!(
                    "entry ({}, {}) is {}; off-diagonal probabilities must be >= 0",
                    ids[i], ids[j], row[j]
                )));
            }
            if (row.sum() - 1.0).abs() > 1e-12 {
                return Err(Error::InvalidDiagram(format!(
                    "row `{}` sums to {}",
                    ids[i],
                    row.sum()
                )));
            }
            if kinds[i] == StateKind::Absorbing && row[i] != 1.0 {
                return Err(Error::InvalidDiagram(format!(
                    "absorbing state `{}` must have an identity row",
                    ids[i]
                )));
            }
        }
        Ok(TransitionMatrix {
            ids,
            kinds,
            entries,
        })
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn state_ids(&self) -> &[String] {
        &self.ids
    }

    pub fn kinds(&self) -> &[StateKind] {
        &self.kinds
    }

    pub fn dim(&self) -> usize {
        self.ids.len()
    }
}

/// The transient-to-transient block `Q` of a [`TransitionMatrix`].
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedMatrix {
    ids: Vec<String>,
    entries: DMatrix<f64>,
}

impl TruncatedMatrix {
    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn state_ids(&self) -> &[String] {
        &self.ids
    }
}

/// `M = (I - Q)^-1`, expected hours spent in each transient state.
#[derive(Debug, Clone, PartialEq)]
pub struct FundamentalMatrix {
    ids: Vec<String>,
    entries: DMatrix<f64>,
}

impl FundamentalMatrix {
    /// Inverts `I - Q` for an already truncated matrix.
    ///
    /// `I - Q` is formed by subtraction here, so per-hour rates near 1e-9
    /// lose digits against the unit diagonal. [`FundamentalMatrix::from_diagram`]
    /// avoids that by assembling `I - Q` from the rates directly.
    pub fn from_truncated(q: &TruncatedMatrix) -> Result<Self> {
        let t = q.entries.nrows();
        let escape = DMatrix::identity(t, t) - &q.entries;
        Ok(FundamentalMatrix {
            ids: q.ids.clone(),
            entries: invert(escape)?,
        })
    }

    pub fn from_diagram(d: &StateDiagram) -> Result<Self> {
        let (ids, escape) = escape_matrix(d)?;
        Ok(FundamentalMatrix {
            ids,
            entries: invert(escape)?,
        })
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn state_ids(&self) -> &[String] {
        &self.ids
    }

    /// Expected time to absorption starting from transient row `row`.
    pub fn row_sum(&self, row: usize) -> f64 {
        self.entries.row(row).sum()
    }

    pub fn row_of(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|s| s == id)
    }
}

/// Builds the one-hour-step transition matrix of `d`.
pub fn build_transition_matrix(d: &StateDiagram) -> TransitionMatrix {
    let n = d.len();
    let mut p = DMatrix::zeros(n, n);
    for (i, row) in d.merged_rates().into_iter().enumerate() {
        let mut off = 0.0;
        for (j, rate) in row {
            p[(i, j)] = rate;
            off += rate;
        }
        p[(i, i)] = 1.0 - off;
    }
    TransitionMatrix {
        ids: d.states().iter().map(|s| s.id.clone()).collect(),
        kinds: d.states().iter().map(|s| s.kind).collect(),
        entries: p,
    }
}

/// Deletes the rows and columns of absorbing states, preserving order.
pub fn truncate(p: &TransitionMatrix) -> Result<TruncatedMatrix> {
    let transient: Vec<usize> = (0..p.dim())
        .filter(|&i| p.kinds[i] == StateKind::Transient)
        .collect();
    if transient.is_empty() {
        return Err(Error::NothingToAnalyze);
    }
    let t = transient.len();
    let entries = DMatrix::from_fn(t, t, |r, c| p.entries[(transient[r], transient[c])]);
    Ok(TruncatedMatrix {
        ids: transient.iter().map(|&i| p.ids[i].clone()).collect(),
        entries,
    })
}

/// Mean time to absorption from the initial state, in hours.
pub fn mttf(d: &StateDiagram) -> Result<f64> {
    let (ids, escape) = escape_matrix(d)?;
    let row = ids
        .iter()
        .position(|s| s == d.initial_id())
        .expect("initial state is transient");
    let lu = checked_lu(escape)?;
    let ones = DVector::from_element(ids.len(), 1.0);
    let times = lu.solve(&ones).ok_or(Error::InfiniteMttf)?;
    let value = times[row];
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InfiniteMttf)
    }
}

/// `I - Q` over the transient states, built from the rates: exit rate on
/// the diagonal, minus the transition rate off it.
fn escape_matrix(d: &StateDiagram) -> Result<(Vec<String>, DMatrix<f64>)> {
    let transient = d.transient_indices();
    if transient.is_empty() {
        return Err(Error::NothingToAnalyze);
    }
    let mut position = vec![None; d.len()];
    for (k, &i) in transient.iter().enumerate() {
        position[i] = Some(k);
    }
    let t = transient.len();
    let mut k = DMatrix::zeros(t, t);
    for (i, row) in d.merged_rates().into_iter().enumerate() {
        let Some(r) = position[i] else { continue };
        for (j, rate) in row {
            k[(r, r)] += rate;
            if let Some(c) = position[j] {
                k[(r, c)] -= rate;
            }
        }
    }
    let ids = transient
        .iter()
        .map(|&i| d.states()[i].id.clone())
        .collect();
    Ok((ids, k))
}

fn checked_lu(m: DMatrix<f64>) -> Result<nalgebra::LU<f64, nalgebra::Dyn, nalgebra::Dyn>> {
    let scale = m.amax();
    if !scale.is_finite() || scale <= 0.0 {
        return Err(Error::InfiniteMttf);
    }
    let lu = m.lu();
    let min_pivot = lu.u().diagonal().amin();
    if min_pivot <= PIVOT_TOLERANCE * scale {
        return Err(Error::InfiniteMttf);
    }
    Ok(lu)
}

fn invert(m: DMatrix<f64>) -> Result<DMatrix<f64>> {
    let t = m.nrows();
    let lu = checked_lu(m)?;
    let inv = lu
        .solve(&DMatrix::identity(t, t))
        .ok_or(Error::InfiniteMttf)?;
    if inv.iter().any(|v| !v.is_finite()) {
        return Err(Error::InfiniteMttf);
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_step() -> StateDiagram {
        StateDiagram::builder()
            .transition("S1", "S2", 2e-6)
            .transition("S2", "F", 1e-6)
            .absorbing("F")
            .initial("S1")
            .build()
            .unwrap()
    }

    #[test]
    fn two_transient_matrix_transcription() {
        let p = build_transition_matrix(&two_step());
        let expected = DMatrix::from_row_slice(
            3,
            3,
            &[1.0 - 2e-6, 2e-6, 0.0, 0.0, 1.0 - 1e-6, 1e-6, 0.0, 0.0, 1.0],
        );
        assert_eq!(p.entries(), &expected);
        for i in 0..3 {
            assert!((p.entries().row(i).sum() - 1.0).abs() <= f64::EPSILON);
        }
    }

    #[test]
    fn truncation_keeps_transient_block() {
        let q = truncate(&build_transition_matrix(&two_step())).unwrap();
        let expected = DMatrix::from_row_slice(2, 2, &[1.0 - 2e-6, 2e-6, 0.0, 1.0 - 1e-6]);
        assert_eq!(q.entries(), &expected);
        assert_eq!(q.state_ids(), ["S1", "S2"]);
    }

    #[test]
    fn single_exponential_mttf() {
        let d = StateDiagram::builder()
            .transition("Up", "Down", 1e-6)
            .absorbing("Down")
            .initial("Up")
            .build()
            .unwrap();
        let m = mttf(&d).unwrap();
        assert!((m - 1e6).abs() / 1e6 < 1e-12);
    }

    #[test]
    fn two_step_mttf_and_fundamental_matrix() {
        let d = two_step();
        // 1/2e-6 + 1/1e-6
        assert!((mttf(&d).unwrap() - 1.5e6).abs() < 1e-6);
        let m = FundamentalMatrix::from_diagram(&d).unwrap();
        assert!((m.row_sum(0) - 1.5e6).abs() < 1e-6);
        assert!(m.entries().iter().all(|&v| v >= 0.0));
        let via_q =
            FundamentalMatrix::from_truncated(&truncate(&build_transition_matrix(&d)).unwrap())
                .unwrap();
        assert!((via_q.row_sum(0) - 1.5e6).abs() / 1.5e6 < 1e-8);
    }

    #[test]
    fn all_absorbing_but_stuck_state_is_singular() {
        let entries = DMatrix::<f64>::identity(3, 3);
        let p = TransitionMatrix::from_entries(
            vec!["S1".into(), "S2".into(), "S3".into()],
            vec![
                StateKind::Transient,
                StateKind::Absorbing,
                StateKind::Absorbing,
            ],
            entries,
        )
        .unwrap();
        let q = truncate(&p).unwrap();
        assert_eq!(q.entries(), &DMatrix::from_element(1, 1, 1.0));
        assert_eq!(
            FundamentalMatrix::from_truncated(&q),
            Err(Error::InfiniteMttf)
        );
    }

    #[test]
    fn no_transient_state_is_nothing_to_analyze() {
        let p = TransitionMatrix::from_entries(
            vec!["A".into()],
            vec![StateKind::Absorbing],
            DMatrix::identity(1, 1),
        )
        .unwrap();
        assert_eq!(truncate(&p), Err(Error::NothingToAnalyze));
    }

    #[test]
    fn trapped_transient_state_gives_infinite_mttf() {
        // S1 can absorb, but S2 loops with S3 forever
        let d = StateDiagram::builder()
            .transition("S1", "F", 1e-6)
            .transition("S1", "S2", 1e-6)
            .transition("S2", "S3", 1e-6)
            .transition("S3", "S2", 1e-6)
            .absorbing("F")
            .initial("S1")
            .build()
            .unwrap();
        assert_eq!(mttf(&d), Err(Error::InfiniteMttf));
    }

    #[test]
    fn from_entries_rejects_bad_rows() {
        let bad = DMatrix::from_row_slice(2, 2, &[0.5, 0.4, 0.0, 1.0]);
        let err = TransitionMatrix::from_entries(
            vec!["A".into(), "B".into()],
            vec![StateKind::Transient, StateKind::Absorbing],
            bad,
        )
        .unwrap_err();
        assert!(err.to_string().contains("row `A`"));
    }
}
