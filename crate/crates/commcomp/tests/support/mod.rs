//! Independent brute-force oracles for cross-checking the exact solvers.
//! These share no search machinery with the library: the partition oracle
//! enumerates set partitions of the 1-cells, the depth and leaf oracles run
//! plain memoized recursions over row/column bitmasks, and the cover oracle
//! scans subsets in size-then-lexicographic order.

use std::collections::HashMap;

use commcomp::graphs::Graph;
use commcomp::matrix::CommMatrix;

/// Minimum number of disjoint all-ones rectangles covering the 1-cells,
/// by exhaustive set-partition enumeration (restricted growth strings).
/// Exponential in the number of ones; callers keep it at 12 or fewer.
pub fn chi1_brute(m: &CommMatrix) -> usize {
    let ones: Vec<(usize, usize)> = (0..m.nrows())
        .flat_map(|i| (0..m.ncols()).filter_map(move |j| m.get(i, j).then_some((i, j))))
        .collect();
    assert!(ones.len() <= 12, "brute-force partition oracle capped at 12 ones");
    if ones.is_empty() {
        return 0;
    }
    let mut assign = vec![0usize; ones.len()];
    let mut best = ones.len() + 1;
    grow(&ones, &mut assign, 1, &mut best);
    best
}

/// Extends the restricted growth string at position `pos` (cells before it
/// are assigned to blocks 0..used). Any partition with `best` or more blocks
/// is abandoned.
fn grow(ones: &[(usize, usize)], assign: &mut [usize], pos: usize, best: &mut usize) {
    if *best == 1 {
        return;
    }
    if pos == ones.len() {
        let used = assign.iter().max().unwrap() + 1;
        if used < *best && blocks_are_rectangles(ones, assign, used) {
            *best = used;
        }
        return;
    }
    let used = assign[..pos].iter().max().unwrap() + 1;
    for b in 0..=used.min(*best - 2) {
        assign[pos] = b;
        grow(ones, assign, pos + 1, best);
    }
}

/// A block is a rectangle iff it is exactly the product of its row set and
/// column set; since every member is a 1-cell, size equality suffices.
fn blocks_are_rectangles(ones: &[(usize, usize)], assign: &[usize], used: usize) -> bool {
    for b in 0..used {
        let cells: Vec<(usize, usize)> = ones
            .iter()
            .zip(assign)
            .filter_map(|(&cell, &a)| (a == b).then_some(cell))
            .collect();
        let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
        let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        if rows.len() * cols.len() != cells.len() {
            return false;
        }
    }
    true
}

/// Minimum protocol-tree depth by direct recursion over submatrices: a side
/// splits its live index set in two, the worse branch counts. No pruning, no
/// duplicate-line collapsing; only fits small matrices.
pub fn cc_brute(m: &CommMatrix) -> usize {
    assert!(m.nrows() <= 4 && m.ncols() <= 4, "depth oracle capped at 4x4");
    let full = ((1u32 << m.nrows()) - 1, (1u32 << m.ncols()) - 1);
    let mut memo = HashMap::new();
    cc_rec(m, full.0, full.1, &mut memo)
}

fn cc_rec(m: &CommMatrix, rmask: u32, cmask: u32, memo: &mut HashMap<(u32, u32), usize>) -> usize {
    if let Some(&v) = memo.get(&(rmask, cmask)) {
        return v;
    }
    let v = if mask_constant(m, rmask, cmask) {
        0
    } else {
        let mut best = usize::MAX;
        for (side, other) in [(rmask, true), (cmask, false)] {
            let mut s = (side - 1) & side;
            while s != 0 {
                let (a, b) = if other { (s, cmask) } else { (rmask, s) };
                let (a2, b2) = if other { (side ^ s, cmask) } else { (rmask, side ^ s) };
                let d = cc_rec(m, a, b, memo).max(cc_rec(m, a2, b2, memo));
                best = best.min(1 + d);
                s = (s - 1) & side;
            }
        }
        best
    };
    memo.insert((rmask, cmask), v);
    v
}

/// Minimum protocol-tree leaf count by the same recursion with sum instead
/// of max and leaf base case 1.
pub fn l_brute(m: &CommMatrix) -> usize {
    assert!(m.nrows() <= 4 && m.ncols() <= 4, "leaf oracle capped at 4x4");
    let full = ((1u32 << m.nrows()) - 1, (1u32 << m.ncols()) - 1);
    let mut memo = HashMap::new();
    l_rec(m, full.0, full.1, &mut memo)
}

fn l_rec(m: &CommMatrix, rmask: u32, cmask: u32, memo: &mut HashMap<(u32, u32), usize>) -> usize {
    if let Some(&v) = memo.get(&(rmask, cmask)) {
        return v;
    }
    let v = if mask_constant(m, rmask, cmask) {
        1
    } else {
        let mut best = usize::MAX;
        for (side, other) in [(rmask, true), (cmask, false)] {
            let mut s = (side - 1) & side;
            while s != 0 {
                let (a, b) = if other { (s, cmask) } else { (rmask, s) };
                let (a2, b2) = if other { (side ^ s, cmask) } else { (rmask, side ^ s) };
                best = best.min(l_rec(m, a, b, memo) + l_rec(m, a2, b2, memo));
                s = (s - 1) & side;
            }
        }
        best
    };
    memo.insert((rmask, cmask), v);
    v
}

fn mask_constant(m: &CommMatrix, rmask: u32, cmask: u32) -> bool {
    let mut first = None;
    for i in 0..m.nrows() {
        if rmask >> i & 1 == 0 {
            continue;
        }
        for j in 0..m.ncols() {
            if cmask >> j & 1 == 0 {
                continue;
            }
            let v = m.get(i, j);
            match first {
                None => first = Some(v),
                Some(f) if f != v => return false,
                _ => {}
            }
        }
    }
    true
}

/// Minimum vertex cover by scanning vertex subsets in size-then-lex order.
pub fn vc_brute(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let set: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        if g.edges().iter().all(|&(i, j)| set.contains(&i) || set.contains(&j)) {
            return (set.len(), set);
        }
    }
    unreachable!("the full vertex set covers every edge");
}

/// Deterministic random bit matrix for cross-checking suites. Plain linear
/// congruential steps so the oracle tests do not depend on the library's
/// (or any crate's) generator.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn matrix(&mut self, max_dim: usize) -> CommMatrix {
        let nr = 1 + self.below(max_dim);
        let nc = 1 + self.below(max_dim);
        let rows: Vec<String> = (0..nr)
            .map(|_| (0..nc).map(|_| if self.next_u64() & 1 == 1 { '1' } else { '0' }).collect())
            .collect();
        let refs: Vec<&str> = rows.iter().map(|s| s.as_str()).collect();
        CommMatrix::from_bit_rows(&refs).unwrap()
    }
}
