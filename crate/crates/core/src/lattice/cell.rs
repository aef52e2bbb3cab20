use std::collections::BTreeSet;

use crate::alignment::ScoringScheme;
use crate::{Error, Result};

/// Longest seed the lattice is built for.
pub const MAX_LATTICE_SIZE: usize = 131;

/// A node of the `(n+1) x (n+1)` grid: row 0 and column 0 are boundary
/// injection points, everything else is a basic cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeId {
    Boundary { row: usize, col: usize },
    Cell { row: usize, col: usize },
}

impl NodeId {
    pub fn at(row: usize, col: usize) -> Self {
        if row == 0 || col == 0 {
            NodeId::Boundary { row, col }
        } else {
            NodeId::Cell { row, col }
        }
    }

    pub fn position(self) -> (usize, usize) {
        match self {
            NodeId::Boundary { row, col } | NodeId::Cell { row, col } => (row, col),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicCell {
    pub row: usize,
    pub col: usize,
    /// Diagonal, vertical and horizontal predecessors, in that order.
    pub inputs: [NodeId; 3],
}

impl BasicCell {
    /// The output tap whose OR tree this cell's local OR feeds.
    pub fn shell(&self) -> usize {
        self.row.max(self.col)
    }
}

/// An `n x n` lattice of basic cells with its penalties programmed in.
#[derive(Debug, Clone)]
pub struct Lattice {
    size: usize,
    scheme: ScoringScheme,
    taps: BTreeSet<usize>,
    cells: Vec<BasicCell>,
}

/// Builds an `n x n` lattice with a tap at every row.
pub fn build_lattice(n: usize, scheme: ScoringScheme) -> Result<Lattice> {
    if !(1..=MAX_LATTICE_SIZE).contains(&n) {
        return Err(Error::invalid(format!(
            "lattice size {n} outside 1..={MAX_LATTICE_SIZE}"
        )));
    }
    let cells = (1..=n)
        .flat_map(|row| (1..=n).map(move |col| (row, col)))
        .map(|(row, col)| BasicCell {
            row,
            col,
            inputs: [
                NodeId::at(row - 1, col - 1),
                NodeId::at(row - 1, col),
                NodeId::at(row, col - 1),
            ],
        })
        .collect();
    Ok(Lattice { size: n, scheme, taps: (1..=n).collect(), cells })
}

impl Lattice {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn scheme(&self) -> &ScoringScheme {
        &self.scheme
    }

    /// Reprograms the penalty delays; the wiring is unchanged.
    pub fn reprogram(&mut self, scheme: ScoringScheme) {
        self.scheme = scheme;
    }

    pub fn taps(&self) -> &BTreeSet<usize> {
        &self.taps
    }

    /// Restricts the nanowire taps to a predefined set of rows.
    pub fn with_taps(mut self, taps: impl IntoIterator<Item = usize>) -> Result<Self> {
        let taps: BTreeSet<usize> = taps.into_iter().collect();
        if taps.is_empty() {
            return Err(Error::invalid("tap set must not be empty"));
        }
        if let Some(bad) = taps.iter().find(|&&t| t == 0 || t > self.size) {
            return Err(Error::invalid(format!("tap row {bad} outside 1..={}", self.size)));
        }
        self.taps = taps;
        Ok(self)
    }

    pub fn cells(&self) -> &[BasicCell] {
        &self.cells
    }

    pub fn cell(&self, row: usize, col: usize) -> Option<&BasicCell> {
        if row == 0 || col == 0 || row > self.size || col > self.size {
            return None;
        }
        Some(&self.cells[(row - 1) * self.size + (col - 1)])
    }

    /// Boundary injection nodes: `(0, 0)` plus one per row and per column.
    pub fn boundary_inputs(&self) -> usize {
        2 * self.size + 1
    }

    /// Cells whose local OR outputs feed tap `k`.
    pub fn tap_tree(&self, k: usize) -> impl Iterator<Item = &BasicCell> + '_ {
        self.cells.iter().filter(move |c| c.shell() == k)
    }
}
