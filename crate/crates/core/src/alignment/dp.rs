use std::fmt;

use crate::alignment::{ScoringScheme, SeedContext, Sequence};
use crate::{Error, Result, Score};

/// `(Q+1) x (R+1)` similarity matrix. Unfilled cells are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<Option<Score>>,
}

impl DpMatrix {
    fn empty(rows: usize, cols: usize) -> Self {
        DpMatrix { rows, cols, cells: vec![None; rows * cols] }
    }

    /// Builds a fully filled matrix from row-major values.
    pub fn from_rows(rows: Vec<Vec<Score>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return Err(Error::invalid("matrix rows must be non-empty and of equal length"));
        }
        let n = rows.len();
        let cells = rows.into_iter().flatten().map(Some).collect();
        Ok(DpMatrix { rows: n, cols, cells })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Score> {
        if row >= self.rows || col >= self.cols {
            return None;
        }
        self.cells[row * self.cols + col]
    }

    fn set(&mut self, row: usize, col: usize, value: Score) {
        self.cells[row * self.cols + col] = Some(value);
    }

    /// Value at `(row, col)`, or a state error if the cell is unfilled.
    pub fn value(&self, row: usize, col: usize) -> Result<Score> {
        self.get(row, col).ok_or(Error::UnfilledMatrix { row, col })
    }

    pub fn is_filled(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    /// Row-major copy of the values; fails on the first unfilled cell.
    pub fn to_rows(&self) -> Result<Vec<Vec<Score>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.value(i, j)).collect())
            .collect()
    }
}

impl fmt::Display for DpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                match self.get(i, j) {
                    Some(v) => write!(f, "{v:>3}")?,
                    None => write!(f, "  .")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalBest {
    pub score: Score,
    pub row: usize,
    pub col: usize,
}

/// Outputs of one seed extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedExtension {
    /// Best endpoint on the last row or last column.
    pub local_best: LocalBest,
    /// Value at `(Q, R)`.
    pub global_score: Score,
    /// Distance of `local_best` from the main diagonal.
    pub max_offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpResult {
    pub matrix: DpMatrix,
    pub scheme: ScoringScheme,
    pub seed: SeedContext,
    /// Present once the matrix has been filled by [`dp_fill`].
    pub outputs: Option<SeedExtension>,
}

/// Allocates a `(q_len+1) x (r_len+1)` matrix with only the boundary filled.
pub fn init_matrix(
    q_len: usize,
    r_len: usize,
    scheme: ScoringScheme,
    seed: SeedContext,
) -> Result<DpResult> {
    if q_len == 0 || r_len == 0 {
        return Err(Error::invalid(format!(
            "matrix dimensions must be positive, got {q_len} x {r_len}"
        )));
    }
    let mut matrix = DpMatrix::empty(q_len + 1, r_len + 1);
    for j in 0..=r_len {
        matrix.set(0, j, seed.boundary(j, &scheme));
    }
    for i in 1..=q_len {
        matrix.set(i, 0, seed.boundary(i, &scheme));
    }
    Ok(DpResult { matrix, scheme, seed, outputs: None })
}

/// Fills the min-plus recurrence
///
/// ```text
/// DP(i,j) = min( DP(i-1,j-1) + T(match|mismatch),
///                DP(i-1,j)   + T(gap),
///                DP(i,j-1)   + T(gap) )
/// ```
///
/// and derives the seed-extension outputs.
pub fn dp_fill(
    query: &Sequence,
    reference: &Sequence,
    scheme: ScoringScheme,
    seed: SeedContext,
) -> DpResult {
    let (q, r) = (query.bases(), reference.bases());
    // Sequences are never empty, so init_matrix cannot fail.
    let mut result = init_matrix(q.len(), r.len(), scheme, seed).expect("non-empty sequences");
    let gap = scheme.gap();
    let m = &mut result.matrix;
    for i in 1..=q.len() {
        for j in 1..=r.len() {
            let diag = m.cells[(i - 1) * m.cols + j - 1].unwrap() + scheme.substitution(q[i - 1], r[j - 1]);
            let up = m.cells[(i - 1) * m.cols + j].unwrap() + gap;
            let left = m.cells[i * m.cols + j - 1].unwrap() + gap;
            m.set(i, j, diag.min(up).min(left));
        }
    }
    result.outputs = Some(extract_outputs(&result).expect("matrix is filled"));
    result
}

/// Reads local best, global score and max offset off a filled matrix.
///
/// The local best is the minimum over the interior cells of the last row and
/// the last column; ties go to the smallest row, then the smallest column.
pub fn extract_outputs(result: &DpResult) -> Result<SeedExtension> {
    let m = &result.matrix;
    if let Some(idx) = m.cells.iter().position(Option::is_none) {
        return Err(Error::UnfilledMatrix { row: idx / m.cols, col: idx % m.cols });
    }
    let (last_row, last_col) = (m.rows - 1, m.cols - 1);
    let candidates = (1..=last_col)
        .map(|j| (last_row, j))
        .chain((1..last_row).map(|i| (i, last_col)));
    let local_best = candidates
        .map(|(row, col)| LocalBest { score: m.value(row, col).unwrap(), row, col })
        .min_by_key(|b| (b.score, b.row, b.col))
        .expect("at least one interior cell");
    Ok(SeedExtension {
        local_best,
        global_score: m.value(last_row, last_col)?,
        max_offset: local_best.row.abs_diff(local_best.col),
    })
}
