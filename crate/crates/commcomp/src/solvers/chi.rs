//! Exact 1-partition number: minimum number of pairwise disjoint all-ones
//! rectangles covering every 1-cell.

use std::collections::HashMap;

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::matrix::{CommMatrix, OnePartition, Rectangle};
use crate::solvers::{block_decompose, Budget};

/// Outcome of a chi1/chi0 call. `lower == upper` means the value is exact.
/// The witness is always a valid 1-partition of size `upper` (for chi0, of
/// the complement matrix).
#[derive(Debug, Clone)]
pub struct Chi1Result {
    pub lower: usize,
    pub upper: usize,
    pub witness: OnePartition,
}

impl Chi1Result {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.upper)
    }
}

/// Exact 1-partition number with witness. Decomposes into connected blocks,
/// collapses duplicate rows and columns (both preserve the value), then runs
/// a branch-and-bound over pivot rectangles. On budget exhaustion the result
/// carries honest lower/upper bounds instead of an exact value.
pub fn chi1(m: &CommMatrix, budget: Budget) -> Result<Chi1Result> {
    if m.ones_count() == 0 {
        return Err(Error::NoOnes);
    }
    let dec = block_decompose(m);
    let mut lower = 0;
    let mut upper = 0;
    let mut rects = Vec::new();
    for b in &dec.blocks {
        let r = solve_block(&b.matrix, budget);
        lower += r.lower;
        upper += r.upper;
        for rect in r.witness.rects {
            rects.push(Rectangle::new(
                rect.rows().iter().map(|&i| b.rows[i]).collect(),
                rect.cols().iter().map(|&j| b.cols[j]).collect(),
            ));
        }
    }
    Ok(Chi1Result {
        lower,
        upper,
        witness: OnePartition { rects },
    })
}

/// 1-partition number of the entrywise complement; the witness partitions
/// the complement's 1-cells, i.e. the 0-cells of m.
pub fn chi0(m: &CommMatrix, budget: Budget) -> Result<Chi1Result> {
    if m.ones_count() == m.nrows() * m.ncols() {
        return Err(Error::NoZeros);
    }
    chi1(&m.complement(), budget).map_err(|e| match e {
        Error::NoOnes => Error::NoZeros,
        other => other,
    })
}

/// Solves one connected block: collapse duplicate rows/cols, search the core,
/// lift the witness back. Duplicate collapse preserves the value: a duplicate
/// row can join every rectangle of its representative, and dropping it from a
/// partition never increases the count.
fn solve_block(m: &CommMatrix, budget: Budget) -> Chi1Result {
    let mut rep_rows: Vec<usize> = Vec::new();
    let mut row_group: Vec<Vec<usize>> = Vec::new();
    let mut seen_rows: HashMap<Vec<u64>, usize> = HashMap::new();
    for r in 0..m.nrows() {
        let key = m.row_bits(r).words().to_vec();
        match seen_rows.get(&key) {
            Some(&g) => row_group[g].push(r),
            None => {
                seen_rows.insert(key, rep_rows.len());
                rep_rows.push(r);
                row_group.push(vec![r]);
            }
        }
    }
    let mut rep_cols: Vec<usize> = Vec::new();
    let mut col_group: Vec<Vec<usize>> = Vec::new();
    let mut seen_cols: HashMap<Vec<u64>, usize> = HashMap::new();
    for c in 0..m.ncols() {
        let mut pat = Bits::new(rep_rows.len());
        for (i, &r) in rep_rows.iter().enumerate() {
            if m.get(r, c) {
                pat.set(i);
            }
        }
        let key = pat.words().to_vec();
        match seen_cols.get(&key) {
            Some(&g) => col_group[g].push(c),
            None => {
                seen_cols.insert(key, rep_cols.len());
                rep_cols.push(c);
                col_group.push(vec![c]);
            }
        }
    }

    let core = m.submatrix(&rep_rows, &rep_cols);
    let r = solve_core(&core, budget);
    let rects = r
        .witness
        .rects
        .into_iter()
        .map(|rect| {
            Rectangle::new(
                rect.rows().iter().flat_map(|&i| row_group[i].clone()).collect(),
                rect.cols().iter().flat_map(|&j| col_group[j].clone()).collect(),
            )
        })
        .collect();
    Chi1Result {
        lower: r.lower,
        upper: r.upper,
        witness: OnePartition { rects },
    }
}

struct Search<'a> {
    m: &'a CommMatrix,
    /// 1-cells in lexicographic (row, col) order; bitsets below index them.
    ones: Vec<(usize, usize)>,
    cell_id: Vec<Vec<Option<usize>>>,
    row_cells: Vec<Bits>,
    col_cells: Vec<Bits>,
    memo: HashMap<Vec<u64>, MemoEntry>,
    budget: Budget,
    ticks: u32,
    expired: bool,
}

#[derive(Clone, Copy)]
struct MemoEntry {
    lower: usize,
    exact: Option<usize>,
}

struct Candidate {
    rows: Vec<usize>,
    cols: Vec<usize>,
    cells: Bits,
}

fn solve_core(m: &CommMatrix, budget: Budget) -> Chi1Result {
    let mut ones = Vec::new();
    let mut cell_id = vec![vec![None; m.ncols()]; m.nrows()];
    for r in 0..m.nrows() {
        for c in m.row_bits(r).iter_ones() {
            cell_id[r][c] = Some(ones.len());
            ones.push((r, c));
        }
    }
    let ncells = ones.len();
    let mut row_cells = vec![Bits::new(ncells); m.nrows()];
    let mut col_cells = vec![Bits::new(ncells); m.ncols()];
    for (id, &(r, c)) in ones.iter().enumerate() {
        row_cells[r].set(id);
        col_cells[c].set(id);
    }
    let mut s = Search {
        m,
        ones,
        cell_id,
        row_cells,
        col_cells,
        memo: HashMap::new(),
        budget,
        ticks: 0,
        expired: false,
    };

    let all = Bits::ones(ncells);
    let (greedy_count, greedy_rects) = s.greedy(&all);
    let root_lb = s.lower_bound(&all);
    if greedy_count == root_lb {
        return Chi1Result {
            lower: greedy_count,
            upper: greedy_count,
            witness: OnePartition { rects: greedy_rects },
        };
    }

    match s.solve(all.clone(), greedy_count - 1) {
        Some(v) => {
            let rects = s.reconstruct(all, v);
            match rects {
                Some(rects) => Chi1Result {
                    lower: v,
                    upper: v,
                    witness: OnePartition { rects },
                },
                // Budget died during reconstruction: the exact value is known
                // but only the greedy witness is available; report sound
                // bounds anchored to that witness.
                None => Chi1Result {
                    lower: v,
                    upper: greedy_count,
                    witness: OnePartition { rects: greedy_rects },
                },
            }
        }
        None if !s.expired => Chi1Result {
            lower: greedy_count,
            upper: greedy_count,
            witness: OnePartition { rects: greedy_rects },
        },
        None => Chi1Result {
            lower: root_lb,
            upper: greedy_count,
            witness: OnePartition { rects: greedy_rects },
        },
    }
}

impl Search<'_> {
    fn tick(&mut self) {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 1024 == 0 && self.budget.expired() {
            self.expired = true;
        }
    }

    /// Exact residual value when it is <= limit, None when it exceeds limit
    /// (or the budget expired; check `self.expired`).
    fn solve(&mut self, uncovered: Bits, limit: usize) -> Option<usize> {
        if uncovered.is_empty() {
            return Some(0);
        }
        self.tick();
        if self.expired {
            return None;
        }
        let lb = self.lower_bound(&uncovered);
        if lb > limit {
            return None;
        }
        let key = uncovered.words().to_vec();
        if let Some(e) = self.memo.get(&key) {
            if let Some(v) = e.exact {
                return (v <= limit).then_some(v);
            }
            if e.lower > limit {
                return None;
            }
        }

        let comps = self.components(&uncovered);
        if comps.len() > 1 {
            return self.solve_split(key, &comps, limit);
        }

        let cands = self.candidates(&uncovered);
        let mut best: Option<usize> = None;
        let mut bound = limit;
        for cand in &cands {
            if bound == 0 {
                break;
            }
            let mut rest = uncovered.clone();
            rest.subtract(&cand.cells);
            if let Some(v) = self.solve(rest, bound - 1) {
                let total = v + 1;
                best = Some(total);
                if total <= lb {
                    break;
                }
                bound = total - 1;
            }
            if self.expired {
                return None;
            }
        }

        match best {
            Some(v) => {
                self.memo.insert(key, MemoEntry { lower: v, exact: Some(v) });
                Some(v)
            }
            None => {
                let e = self.memo.entry(key).or_insert(MemoEntry { lower: 0, exact: None });
                e.lower = e.lower.max(limit + 1);
                None
            }
        }
    }

    /// Residual value across independent components: solve each exactly,
    /// smallest first, capping by the other components' lower bounds.
    fn solve_split(&mut self, key: Vec<u64>, comps: &[Bits], limit: usize) -> Option<usize> {
        let lbs: Vec<usize> = comps.iter().map(|c| self.lower_bound(c)).collect();
        let mut order: Vec<usize> = (0..comps.len()).collect();
        order.sort_by_key(|&i| comps[i].count_ones());

        let mut total = 0usize;
        for (step, &i) in order.iter().enumerate() {
            let rest_lb: usize = order[step..].iter().map(|&j| lbs[j]).sum();
            if total + rest_lb > limit {
                let e = self.memo.entry(key).or_insert(MemoEntry { lower: 0, exact: None });
                e.lower = e.lower.max(total + rest_lb);
                return None;
            }
            let others = rest_lb - lbs[i];
            match self.solve(comps[i].clone(), limit - total - others) {
                Some(v) => total += v,
                None if self.expired => return None,
                None => {
                    // This component alone exceeds its cap, so the sum
                    // exceeds the limit.
                    let e = self.memo.entry(key).or_insert(MemoEntry { lower: 0, exact: None });
                    e.lower = e.lower.max(limit + 1);
                    return None;
                }
            }
        }
        self.memo.insert(key, MemoEntry { lower: total, exact: Some(total) });
        (total <= limit).then_some(total)
    }

    /// All uncovered all-ones rectangles through a fixed pivot cell, largest
    /// area first. Completeness: the optimal partition's rectangle through
    /// the pivot is among them (rectangles need not be maximal). The pivot is
    /// the cell with the smallest uncovered column and row support, which
    /// minimizes the branching factor.
    fn candidates(&self, uncovered: &Bits) -> Vec<Candidate> {
        let mut rsup = vec![0usize; self.m.nrows()];
        for (r, sup) in rsup.iter_mut().enumerate() {
            let mut x = self.row_cells[r].clone();
            x.intersect_with(uncovered);
            *sup = x.count_ones();
        }
        let mut csup = vec![0usize; self.m.ncols()];
        for (c, sup) in csup.iter_mut().enumerate() {
            let mut x = self.col_cells[c].clone();
            x.intersect_with(uncovered);
            *sup = x.count_ones();
        }
        let pivot = uncovered
            .iter_ones()
            .min_by_key(|&id| {
                let (r, c) = self.ones[id];
                (csup[c] + rsup[r], id)
            })
            .expect("nonempty");
        let (pr, pc) = self.ones[pivot];

        let mut col_mask = self.col_cells[pc].clone();
        col_mask.intersect_with(uncovered);
        let support_rows: Vec<usize> = col_mask.iter_ones().map(|id| self.ones[id].0).collect();
        let others: Vec<usize> = support_rows.iter().copied().filter(|&r| r != pr).collect();

        // Uncovered column set per support row.
        let mut row_free: HashMap<usize, Bits> = HashMap::new();
        for &r in &support_rows {
            let mut cells = self.row_cells[r].clone();
            cells.intersect_with(uncovered);
            let mut free = Bits::new(self.m.ncols());
            for id in cells.iter_ones() {
                free.set(self.ones[id].1);
            }
            row_free.insert(r, free);
        }

        let mut cands = Vec::new();
        for amask in 0u32..(1 << others.len()) {
            let mut rows = vec![pr];
            for (b, &r) in others.iter().enumerate() {
                if amask >> b & 1 == 1 {
                    rows.push(r);
                }
            }
            rows.sort_unstable();
            let mut bmax = row_free[&pr].clone();
            for &r in &rows {
                bmax.intersect_with(&row_free[&r]);
            }
            let bothers: Vec<usize> = bmax.iter_ones().filter(|&c| c != pc).collect();
            for bmask in 0u32..(1 << bothers.len()) {
                let mut cols = vec![pc];
                for (b, &c) in bothers.iter().enumerate() {
                    if bmask >> b & 1 == 1 {
                        cols.push(c);
                    }
                }
                cols.sort_unstable();
                let mut cells = Bits::new(self.ones.len());
                for &r in &rows {
                    for &c in &cols {
                        cells.set(self.cell_id[r][c].expect("uncovered one"));
                    }
                }
                cands.push(Candidate { rows: rows.clone(), cols, cells });
            }
        }
        cands.sort_by(|a, b| {
            (b.rows.len() * b.cols.len())
                .cmp(&(a.rows.len() * a.cols.len()))
                .then_with(|| a.rows.cmp(&b.rows))
                .then_with(|| a.cols.cmp(&b.cols))
        });
        cands
    }

    /// Whether one uncovered rectangle could contain both cells: they share
    /// a row or column, or both cross cells are uncovered ones.
    fn shareable(&self, a: usize, b: usize, uncovered: &Bits) -> bool {
        let (r1, c1) = self.ones[a];
        let (r2, c2) = self.ones[b];
        if r1 == r2 || c1 == c2 {
            return true;
        }
        let x = self.cell_id[r1][c2];
        let y = self.cell_id[r2][c1];
        match (x, y) {
            (Some(x), Some(y)) => uncovered.get(x) && uncovered.get(y),
            _ => false,
        }
    }

    /// max(greedy fooling set on uncovered cells, density bound). A fooling
    /// set holds at most one cell of any rectangle, so pairwise unshareable
    /// cells each need their own rectangle.
    fn lower_bound(&self, uncovered: &Bits) -> usize {
        let rem = uncovered.count_ones();
        if rem == 0 {
            return 0;
        }
        let mut smax = 1usize;
        for r in 0..self.m.nrows() {
            let mut x = self.row_cells[r].clone();
            x.intersect_with(uncovered);
            smax = smax.max(x.count_ones());
        }
        let mut tmax = 1usize;
        for c in 0..self.m.ncols() {
            let mut x = self.col_cells[c].clone();
            x.intersect_with(uncovered);
            tmax = tmax.max(x.count_ones());
        }
        let density = rem.div_ceil(smax * tmax);

        let mut chosen: Vec<usize> = Vec::new();
        for id in uncovered.iter_ones() {
            if chosen.iter().all(|&b| !self.shareable(id, b, uncovered)) {
                chosen.push(id);
            }
        }
        density.max(chosen.len())
    }

    /// Group the uncovered cells so that no rectangle spans two groups: a
    /// rectangle's cells are pairwise shareable, hence connected, so the
    /// residual value is the sum over connected components.
    fn components(&self, uncovered: &Bits) -> Vec<Bits> {
        let ids: Vec<usize> = uncovered.iter_ones().collect();
        let mut seen = Bits::new(self.ones.len());
        let mut comps = Vec::new();
        for &start in &ids {
            if seen.get(start) {
                continue;
            }
            let mut group = Bits::new(self.ones.len());
            seen.set(start);
            group.set(start);
            let mut queue = vec![start];
            while let Some(a) = queue.pop() {
                for &b in &ids {
                    if !seen.get(b) && self.shareable(a, b, uncovered) {
                        seen.set(b);
                        group.set(b);
                        queue.push(b);
                    }
                }
            }
            comps.push(group);
        }
        comps
    }

    /// Greedy incumbent: repeatedly apply the first (largest) candidate.
    fn greedy(&mut self, all: &Bits) -> (usize, Vec<Rectangle>) {
        let mut uncovered = all.clone();
        let mut rects = Vec::new();
        while !uncovered.is_empty() {
            let cand = self.candidates(&uncovered).into_iter().next().expect("nonempty");
            uncovered.subtract(&cand.cells);
            rects.push(Rectangle::new(cand.rows, cand.cols));
        }
        (rects.len(), rects)
    }

    /// Deterministic witness for a known-exact value: follow the first
    /// candidate whose residual solves one lower.
    fn reconstruct(&mut self, all: Bits, value: usize) -> Option<Vec<Rectangle>> {
        let mut uncovered = all;
        let mut remaining = value;
        let mut rects = Vec::new();
        while !uncovered.is_empty() {
            let cands = self.candidates(&uncovered);
            let mut advanced = false;
            for cand in cands {
                let mut rest = uncovered.clone();
                rest.subtract(&cand.cells);
                // The residual of an optimal rectangle solves to exactly
                // remaining - 1; any other candidate's residual exceeds it.
                let ok = self.solve(rest.clone(), remaining - 1).is_some();
                if self.expired {
                    return None;
                }
                if ok {
                    rects.push(Rectangle::new(cand.rows, cand.cols));
                    uncovered = rest;
                    remaining -= 1;
                    advanced = true;
                    break;
                }
            }
            debug_assert!(advanced, "an optimal branch must exist");
            if !advanced {
                return None;
            }
        }
        Some(rects)
    }
}
