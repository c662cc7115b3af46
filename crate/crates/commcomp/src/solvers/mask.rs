//! u64-mask view of a matrix (at most 64 rows and columns) shared by the
//! exact protocol-search solvers.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::matrix::CommMatrix;

pub(crate) struct MaskMatrix {
    pub nr: usize,
    pub nc: usize,
    /// rows[r] bit c = entry (r, c); cols[c] bit r likewise.
    pub rows: Vec<u64>,
    pub cols: Vec<u64>,
}

impl MaskMatrix {
    pub fn new(m: &CommMatrix) -> Result<Self> {
        let (nr, nc) = (m.nrows(), m.ncols());
        if nr > 64 || nc > 64 {
            return Err(Error::TooLarge(nr, nc));
        }
        let mut rows = vec![0u64; nr];
        let mut cols = vec![0u64; nc];
        for r in 0..nr {
            for c in m.row_bits(r).iter_ones() {
                rows[r] |= 1 << c;
                cols[c] |= 1 << r;
            }
        }
        Ok(MaskMatrix { nr, nc, rows, cols })
    }

    pub fn full(&self) -> (u64, u64) {
        (low_mask(self.nr), low_mask(self.nc))
    }

    pub fn is_constant(&self, rmask: u64, cmask: u64) -> bool {
        let mut it = iter_bits(rmask).map(|r| self.rows[r] & cmask);
        match it.next() {
            None => true,
            Some(first) => {
                (first == 0 || first == cmask) && it.all(|p| p == first)
            }
        }
    }

    /// Keeps the lowest-index representative of every duplicate row and
    /// column class, iterating to a fixpoint. Merging duplicates preserves
    /// protocol depth and leaf count: an optimal protocol can treat identical
    /// inputs identically.
    pub fn canonical(&self, mut rmask: u64, mut cmask: u64) -> (u64, u64) {
        loop {
            let mut seen = HashSet::new();
            let mut r2 = 0u64;
            for r in iter_bits(rmask) {
                if seen.insert(self.rows[r] & cmask) {
                    r2 |= 1 << r;
                }
            }
            let mut seen = HashSet::new();
            let mut c2 = 0u64;
            for c in iter_bits(cmask) {
                if seen.insert(self.cols[c] & r2) {
                    c2 |= 1 << c;
                }
            }
            if r2 == rmask && c2 == cmask {
                return (r2, c2);
            }
            rmask = r2;
            cmask = c2;
        }
    }

    /// Greedy fooling set among the cells of value v inside the submatrix:
    /// lower-bounds the number of pairwise disjoint v-monochromatic
    /// rectangles needed to cover them.
    pub fn fooling_lb(&self, rmask: u64, cmask: u64, v: bool) -> usize {
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        for r in iter_bits(rmask) {
            let vals = if v { self.rows[r] } else { !self.rows[r] };
            for c in iter_bits(vals & cmask) {
                let independent = chosen.iter().all(|&(r2, c2)| {
                    let cross1 = (self.rows[r] >> c2 & 1 == 1) == v;
                    let cross2 = (self.rows[r2] >> c & 1 == 1) == v;
                    !(cross1 && cross2)
                });
                if independent {
                    chosen.push((r, c));
                }
            }
        }
        chosen.len()
    }
}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
