use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::alignment::{DpMatrix, Nucleotide, SeedContext, Sequence};
use crate::lattice::{delay_element, CellConfig, Lattice, NucleotideCode};
use crate::{Error, Result, Score};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SimStats {
    /// Boundary wavefronts injected.
    pub injections: usize,
    /// Events popped from the queue, including ones that hit a latched cell.
    pub events: usize,
    /// Basic cells that latched; each fires exactly once.
    pub fired_cells: usize,
}

/// Arrival times over the simulated `(dim+1) x (dim+1)` region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrivalMap {
    dim: usize,
    arrival: Vec<Score>,
    row_taps: BTreeMap<usize, Score>,
    global_out: Score,
    stats: SimStats,
}

impl ArrivalMap {
    /// Side length of the simulated sub-lattice.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arrival(&self, row: usize, col: usize) -> Option<Score> {
        (row <= self.dim && col <= self.dim).then(|| self.arrival[row * (self.dim + 1) + col])
    }

    /// Tap readings for every predefined tap row inside the simulated region.
    pub fn row_taps(&self) -> &BTreeMap<usize, Score> {
        &self.row_taps
    }

    /// First arrival on the output shell of the simulated region.
    pub fn global_out(&self) -> Score {
        self.global_out
    }

    pub fn stats(&self) -> SimStats {
        self.stats
    }

    pub fn to_rows(&self) -> Vec<Vec<Score>> {
        self.arrival.chunks(self.dim + 1).map(<[Score]>::to_vec).collect()
    }

    /// First cell where this map and `matrix` disagree, row-major.
    pub fn first_mismatch(&self, matrix: &DpMatrix) -> Option<(usize, usize)> {
        if matrix.rows() != self.dim + 1 || matrix.cols() != self.dim + 1 {
            return Some((matrix.rows().min(self.dim + 1), matrix.cols().min(self.dim + 1)));
        }
        (0..=self.dim)
            .flat_map(|i| (0..=self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| matrix.get(i, j) != self.arrival(i, j))
    }

    fn shell_min(&self, k: usize) -> Score {
        (1..=k)
            .map(|j| self.arrival[k * (self.dim + 1) + j])
            .chain((1..k).map(|i| self.arrival[i * (self.dim + 1) + k]))
            .min()
            .expect("shell is non-empty")
    }
}

/// Runs the full lattice on a query/reference pair of exactly its size.
pub fn simulate(
    lattice: &Lattice,
    query: &Sequence,
    reference: &Sequence,
    seed: SeedContext,
) -> Result<ArrivalMap> {
    let n = lattice.size();
    if query.len() != n || reference.len() != n {
        return Err(Error::invalid(format!(
            "lattice of size {n} needs inputs of length {n}, got {} and {}",
            query.len(),
            reference.len()
        )));
    }
    Ok(propagate(lattice, query.bases(), reference.bases(), seed, n))
}

/// Runs only the `k x k` corner of the lattice for a read of length `k`.
///
/// Cells outside the sub-lattice are never touched: the flexible tap at row
/// `k` is read out as soon as its shell settles.
pub fn simulate_read(
    lattice: &Lattice,
    query: &Sequence,
    reference: &Sequence,
    seed: SeedContext,
) -> Result<ArrivalMap> {
    let k = query.len();
    if reference.len() != k {
        return Err(Error::invalid(format!(
            "read and reference window differ in length ({k} vs {})",
            reference.len()
        )));
    }
    if k > lattice.size() {
        return Err(Error::invalid(format!(
            "read length {k} exceeds lattice size {}",
            lattice.size()
        )));
    }
    Ok(propagate(lattice, query.bases(), reference.bases(), seed, k))
}

/// Minimum arrival on the output shell of the `read_len x read_len` sub-lattice.
pub fn tap_output(map: &ArrivalMap, read_len: usize) -> Result<Score> {
    if read_len == 0 || read_len > map.dim {
        return Err(Error::invalid(format!(
            "read length {read_len} outside 1..={}",
            map.dim
        )));
    }
    Ok(map.shell_min(read_len))
}

fn propagate(
    lattice: &Lattice,
    query: &[Nucleotide],
    reference: &[Nucleotide],
    seed: SeedContext,
    dim: usize,
) -> ArrivalMap {
    let scheme = lattice.scheme();
    let width = dim + 1;
    let index = |i: usize, j: usize| i * width + j;

    let configs: Vec<CellConfig> = query[..dim]
        .iter()
        .flat_map(|&q| {
            reference[..dim].iter().map(move |&r| {
                CellConfig::program(NucleotideCode::from(q), NucleotideCode::from(r), scheme)
            })
        })
        .collect();
    let config = |i: usize, j: usize| &configs[(i - 1) * dim + (j - 1)];

    let mut stats = SimStats::default();
    let mut queue: BinaryHeap<Reverse<(Score, usize)>> = BinaryHeap::with_capacity(3 * width * width);

    // Staggered wavefronts along row 0 and column 0: w0 plus one gap per step.
    let mut t = seed.w0;
    queue.push(Reverse((t, index(0, 0))));
    for k in 1..=dim {
        t = delay_element(t, scheme.t_gap);
        queue.push(Reverse((t, index(0, k))));
        queue.push(Reverse((t, index(k, 0))));
    }
    stats.injections = queue.len();

    let mut latched: Vec<Option<Score>> = vec![None; width * width];
    while let Some(Reverse((time, node))) = queue.pop() {
        stats.events += 1;
        if latched[node].is_some() {
            continue;
        }
        latched[node] = Some(time);
        let (i, j) = (node / width, node % width);
        if i > 0 && j > 0 {
            stats.fired_cells += 1;
        }
        if i < dim && j < dim {
            let d = config(i + 1, j + 1).d_diag;
            queue.push(Reverse((delay_element(time, d), index(i + 1, j + 1))));
        }
        if i < dim && j > 0 {
            let d = config(i + 1, j).d_vert;
            queue.push(Reverse((delay_element(time, d), index(i + 1, j))));
        }
        if j < dim && i > 0 {
            let d = config(i, j + 1).d_horiz;
            queue.push(Reverse((delay_element(time, d), index(i, j + 1))));
        }
    }

    let arrival: Vec<Score> = latched.into_iter().map(|t| t.expect("every node fires")).collect();
    let mut map = ArrivalMap { dim, arrival, row_taps: BTreeMap::new(), global_out: 0, stats };
    map.row_taps = lattice
        .taps()
        .range(1..=dim)
        .map(|&k| (k, map.shell_min(k)))
        .collect();
    map.global_out = map.shell_min(dim);
    map
}
