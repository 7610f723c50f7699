use super::PartialLatinSquare;
use crate::qcore::Quasigroup;

/// Backtracking search state: filled cells plus row/column symbol masks.
struct Solver {
    n: usize,
    cells: Vec<Option<usize>>,
    rows: Vec<u32>,
    cols: Vec<u32>,
    found: u64,
    limit: u64,
    first: Option<Vec<usize>>,
}

impl Solver {
    fn new(p: &PartialLatinSquare, limit: u64) -> Self {
        let n = p.order();
        let mut rows = vec![0u32; n];
        let mut cols = vec![0u32; n];
        for (r, c, s) in p.entries() {
            rows[r] |= 1 << s;
            cols[c] |= 1 << s;
        }
        Self {
            n,
            cells: p.cells.clone(),
            rows,
            cols,
            found: 0,
            limit,
            first: None,
        }
    }

    fn candidates(&self, idx: usize) -> u32 {
        let full = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        full & !(self.rows[idx / self.n] | self.cols[idx % self.n])
    }

    fn search(&mut self) {
        if self.found >= self.limit {
            return;
        }
        // most constrained empty cell
        let mut best: Option<(usize, u32)> = None;
        for idx in 0..self.cells.len() {
            if self.cells[idx].is_none() {
                let cand = self.candidates(idx);
                if best.is_none_or(|(_, b)| cand.count_ones() < b.count_ones()) {
                    best = Some((idx, cand));
                    if cand.count_ones() <= 1 {
                        break;
                    }
                }
            }
        }
        let Some((idx, mut cand)) = best else {
            self.found += 1;
            if self.first.is_none() {
                self.first = Some(self.cells.iter().map(|c| c.expect("complete")).collect());
            }
            return;
        };
        let (r, c) = (idx / self.n, idx % self.n);
        while cand != 0 && self.found < self.limit {
            let s = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.cells[idx] = Some(s);
            self.rows[r] |= 1 << s;
            self.cols[c] |= 1 << s;
            self.search();
            self.rows[r] &= !(1 << s);
            self.cols[c] &= !(1 << s);
            self.cells[idx] = None;
        }
    }
}

/// Number of Latin squares extending `p`, counting stops at `limit`.
pub fn completion_count(p: &PartialLatinSquare, limit: u64) -> u64 {
    if limit == 0 {
        return 0;
    }
    let mut solver = Solver::new(p, limit);
    solver.search();
    solver.found
}

/// The completion of `p` when there is exactly one.
pub fn unique_completion(p: &PartialLatinSquare) -> Option<Quasigroup> {
    let mut solver = Solver::new(p, 2);
    solver.search();
    if solver.found != 1 {
        return None;
    }
    let table = solver.first.expect("one completion recorded");
    Some(Quasigroup::from_table_unchecked(p.order(), table))
}

pub fn is_uniquely_completable(p: &PartialLatinSquare) -> bool {
    completion_count(p, 2) == 1
}
