//! Exact solvers and lower-bound machinery: partition verification, fooling
//! sets, block decomposition, the 1-partition number, exact communication
//! complexity, and minimum leaf count.

mod cc;
mod chi;
mod leaves;
mod mask;

pub use cc::{cc_exact, CcResult};
pub use chi::{chi0, chi1, Chi1Result};
pub use leaves::{l_exact, LeafResult};

use std::time::{Duration, Instant};

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::matrix::{CommMatrix, OnePartition};

/// Wall-clock budget for a solver call. Solvers poll it between search nodes
/// and return explicit bound intervals when it expires.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn seconds(s: f64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_secs_f64(s)),
        }
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

pub(crate) fn ceil_log2(x: usize) -> usize {
    debug_assert!(x >= 1);
    x.next_power_of_two().trailing_zeros() as usize
}

/// True iff the rectangles are all-ones in m, pairwise cell-disjoint, and
/// cover exactly the 1-cells of m.
pub fn verify_partition(m: &CommMatrix, p: &OnePartition) -> Result<bool> {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut covered = Bits::new(nr * nc);
    let mut total = 0usize;
    for rect in &p.rects {
        for &r in rect.rows() {
            if r >= nr {
                return Err(Error::IndexOutOfRange {
                    what: "row",
                    got: r,
                    len: nr,
                });
            }
        }
        for &c in rect.cols() {
            if c >= nc {
                return Err(Error::IndexOutOfRange {
                    what: "col",
                    got: c,
                    len: nc,
                });
            }
        }
        for (r, c) in rect.cells() {
            if !m.get(r, c) {
                return Ok(false);
            }
            let cell = r * nc + c;
            if covered.get(cell) {
                return Ok(false);
            }
            covered.set(cell);
            total += 1;
        }
    }
    Ok(total == m.ones_count())
}

/// True iff all cells are 1-entries and no two of them can lie in a common
/// 1-monochromatic rectangle: for every pair, at least one cross entry is 0.
pub fn is_fooling_set(m: &CommMatrix, cells: &[(usize, usize)]) -> Result<bool> {
    for &(r, c) in cells {
        if r >= m.nrows() {
            return Err(Error::IndexOutOfRange {
                what: "row",
                got: r,
                len: m.nrows(),
            });
        }
        if c >= m.ncols() {
            return Err(Error::IndexOutOfRange {
                what: "col",
                got: c,
                len: m.ncols(),
            });
        }
    }
    let mut sorted = cells.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != cells.len() {
        return Err(Error::DuplicateCell);
    }
    if cells.iter().any(|&(r, c)| !m.get(r, c)) {
        return Ok(false);
    }
    for (a, &(r1, c1)) in cells.iter().enumerate() {
        for &(r2, c2) in &cells[a + 1..] {
            if m.get(r1, c2) && m.get(r2, c1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One connected component of the bipartite row-column graph whose edges are
/// the 1-cells, with its index maps into the parent matrix.
#[derive(Debug, Clone)]
pub struct Block {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub matrix: CommMatrix,
}

/// Result of `block_decompose`: components with at least one 1-cell, plus an
/// all-zero remainder holding every row and column without ones.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub blocks: Vec<Block>,
    pub remainder: Option<Block>,
}

/// Splits m into the connected components of its 1-cell structure. The
/// 1-partition number of m is the sum over components; the remainder
/// contributes nothing.
pub fn block_decompose(m: &CommMatrix) -> Decomposition {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut row_seen = vec![false; nr];
    let mut col_seen = vec![false; nc];
    let mut blocks = Vec::new();

    for start in 0..nr {
        if row_seen[start] || m.row_bits(start).is_empty() {
            continue;
        }
        let mut rows = Vec::new();
        let mut cols = Vec::new();
        let mut queue = vec![start];
        row_seen[start] = true;
        while let Some(r) = queue.pop() {
            rows.push(r);
            for c in m.row_bits(r).iter_ones() {
                if !col_seen[c] {
                    col_seen[c] = true;
                    cols.push(c);
                    for r2 in 0..nr {
                        if !row_seen[r2] && m.get(r2, c) {
                            row_seen[r2] = true;
                            queue.push(r2);
                        }
                    }
                }
            }
        }
        rows.sort_unstable();
        cols.sort_unstable();
        let matrix = m.submatrix(&rows, &cols);
        blocks.push(Block { rows, cols, matrix });
    }
    blocks.sort_by_key(|b| b.rows[0]);

    let zero_rows: Vec<usize> = (0..nr).filter(|&r| !row_seen[r]).collect();
    let zero_cols: Vec<usize> = (0..nc).filter(|&c| !col_seen[c]).collect();
    let remainder = if zero_rows.is_empty() && zero_cols.is_empty() {
        None
    } else {
        let matrix = m.submatrix(&zero_rows, &zero_cols);
        Some(Block {
            rows: zero_rows,
            cols: zero_cols,
            matrix,
        })
    };
    Decomposition { blocks, remainder }
}
