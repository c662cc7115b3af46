//! Exact minimum leaf count over binary protocol trees, by min-sum
//! branch and bound with bound descent over memoized submatrix states.

use std::collections::HashMap;

use crate::error::Result;
use crate::matrix::CommMatrix;
use crate::solvers::mask::{iter_bits, MaskMatrix};
use crate::solvers::Budget;

/// Leaf-count bounds; `lower == upper` means the exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeafResult {
    pub lower: usize,
    pub upper: usize,
}

impl LeafResult {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.upper)
    }
}

/// Exact minimum leaf count while the budget lasts, otherwise sound bounds.
pub fn l_exact(m: &CommMatrix, budget: Budget) -> Result<LeafResult> {
    let mm = MaskMatrix::new(m)?;
    let (r0, c0) = mm.full();
    if mm.is_constant(r0, c0) {
        return Ok(LeafResult { lower: 1, upper: 1 });
    }
    let (rc, cc) = mm.canonical(r0, c0);
    // One side names its deduplicated input, the other answers one bit.
    let ub = 2 * (rc.count_ones() as usize).min(cc.count_ones() as usize);
    let mut s = Search {
        mm,
        memo: HashMap::new(),
        budget,
        ticks: 0,
        expired: false,
    };
    let lb = s.lower_bound(r0, c0);
    match s.solve(r0, c0, ub) {
        Some(v) => Ok(LeafResult { lower: v, upper: v }),
        None if s.expired => Ok(LeafResult { lower: lb, upper: ub }),
        // The naming protocol always fits within ub.
        None => unreachable!("search below the naming bound cannot fail"),
    }
}

struct Search {
    mm: MaskMatrix,
    /// Per canonical state: (certified lower bound, exact value if known).
    memo: HashMap<(u64, u64), (usize, Option<usize>)>,
    budget: Budget,
    ticks: u32,
    expired: bool,
}

impl Search {
    fn lower_bound(&self, rmask: u64, cmask: u64) -> usize {
        let f1 = self.mm.fooling_lb(rmask, cmask, true);
        let f0 = self.mm.fooling_lb(rmask, cmask, false);
        (f1 + f0).max(2)
    }

    /// Minimum leaves for the submatrix if at most `limit`, else None.
    /// None is also returned when the budget expires (`self.expired`).
    fn solve(&mut self, rmask: u64, cmask: u64, limit: usize) -> Option<usize> {
        let (rmask, cmask) = self.mm.canonical(rmask, cmask);
        if self.mm.is_constant(rmask, cmask) {
            return (limit >= 1).then_some(1);
        }
        let lb = self.lower_bound(rmask, cmask);
        if lb > limit {
            return None;
        }
        let key = (rmask, cmask);
        if let Some(&(lo, exact)) = self.memo.get(&key) {
            if let Some(v) = exact {
                return (v <= limit).then_some(v);
            }
            if lo > limit {
                return None;
            }
        }
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 1024 == 0 && self.budget.expired() {
            self.expired = true;
        }
        if self.expired {
            return None;
        }

        let mut best: Option<usize> = None;
        let mut bound = limit;
        'sides: for rows_side in [true, false] {
            let side = if rows_side { rmask } else { cmask };
            if side.count_ones() < 2 {
                continue;
            }
            let e0 = side & side.wrapping_neg();
            let rest: Vec<u64> = iter_bits(side ^ e0).map(|b| 1u64 << b).collect();
            let total = 1u64 << rest.len();
            for sel in 0..total - 1 {
                let mut p1 = e0;
                for (i, &b) in rest.iter().enumerate() {
                    if sel >> i & 1 == 1 {
                        p1 |= b;
                    }
                }
                let p2 = side ^ p1;
                let (ra, ca, rb, cb) = if rows_side {
                    (p1, cmask, p2, cmask)
                } else {
                    (rmask, p1, rmask, p2)
                };
                let Some(v1) = self.solve(ra, ca, bound - 1) else {
                    if self.expired {
                        return None;
                    }
                    continue;
                };
                let Some(v2) = self.solve(rb, cb, bound - v1) else {
                    if self.expired {
                        return None;
                    }
                    continue;
                };
                best = Some(v1 + v2);
                if v1 + v2 == lb {
                    break 'sides;
                }
                bound = v1 + v2 - 1;
            }
        }
        let e = self.memo.entry(key).or_insert((0, None));
        match best {
            Some(v) => e.1 = Some(v),
            None => e.0 = e.0.max(limit + 1),
        }
        best
    }
}
