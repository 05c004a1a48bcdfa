//! Sparse linear algebra over GF(2).

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::chain::SparseMat;

struct Gf2Workspace {
    rows: Vec<HashSet<u32>>,
    cols: Vec<HashSet<u32>>,
    heap: BinaryHeap<Reverse<(u64, u32, u32)>>,
}

impl Gf2Workspace {
    fn new(rows: usize, cols: usize) -> Self {
        Gf2Workspace {
            rows: vec![HashSet::new(); rows],
            cols: vec![HashSet::new(); cols],
            heap: BinaryHeap::new(),
        }
    }

    fn from_mat(mat: &SparseMat) -> Self {
        let mut w = Gf2Workspace::new(mat.rows, mat.cols);
        for (c, col) in mat.entries.iter().enumerate() {
            for &(r, v) in col {
                if v % 2 != 0 {
                    w.insert(r, c as u32);
                }
            }
        }
        w.seed_heap();
        w
    }

    fn insert(&mut self, r: u32, c: u32) {
        self.rows[r as usize].insert(c);
        self.cols[c as usize].insert(r);
    }

    fn toggle(&mut self, r: u32, c: u32) {
        if self.rows[r as usize].contains(&c) {
            self.rows[r as usize].remove(&c);
            self.cols[c as usize].remove(&r);
        } else {
            self.insert(r, c);
            self.heap.push(Reverse((0, r, c)));
        }
    }

    fn seed_heap(&mut self) {
        for (r, cols) in self.rows.iter().enumerate() {
            for &c in cols {
                self.heap.push(Reverse((0, r as u32, c)));
            }
        }
    }

    fn cost(&self, r: u32, c: u32) -> u64 {
        (self.rows[r as usize].len() as u64 - 1) * (self.cols[c as usize].len() as u64 - 1)
    }

    /// Lazy minimal-fill pivot: stale heap entries are refreshed on pop.
    fn next_pivot(&mut self) -> Option<(u32, u32)> {
        while let Some(Reverse((cost, r, c))) = self.heap.pop() {
            if !self.rows[r as usize].contains(&c) {
                continue;
            }
            let real = self.cost(r, c);
            if real > cost {
                self.heap.push(Reverse((real, r, c)));
                continue;
            }
            return Some((r, c));
        }
        None
    }

    fn rank(mut self) -> usize {
        let mut rank = 0;
        while let Some((pr, pc)) = self.next_pivot() {
            let pivot_row: Vec<u32> = self.rows[pr as usize].iter().copied().collect();
            let targets: Vec<u32> = self.cols[pc as usize]
                .iter()
                .copied()
                .filter(|&r| r != pr)
                .collect();
            for r2 in targets {
                for &c2 in &pivot_row {
                    if c2 != pc {
                        self.toggle(r2, c2);
                    }
                }
                self.rows[r2 as usize].remove(&pc);
                self.cols[pc as usize].remove(&r2);
            }
            for &c2 in &pivot_row {
                self.cols[c2 as usize].remove(&pr);
            }
            self.rows[pr as usize].clear();
            self.cols[pc as usize].clear();
            rank += 1;
        }
        rank
    }
}

/// Rank over GF(2) of an integer matrix reduced mod 2.
pub fn gf2_rank(mat: &SparseMat) -> usize {
    Gf2Workspace::from_mat(mat).rank()
}

/// Is `b` in the column span of `mat` over GF(2)?
pub fn gf2_in_column_span(mat: &SparseMat, b: &HashSet<u32>) -> bool {
    if b.is_empty() {
        return true;
    }
    let base = gf2_rank(mat);
    let mut aug = Gf2Workspace::new(mat.rows, mat.cols + 1);
    for (c, col) in mat.entries.iter().enumerate() {
        for &(r, v) in col {
            if v % 2 != 0 {
                aug.insert(r, c as u32);
            }
        }
    }
    for &r in b {
        aug.insert(r, mat.cols as u32);
    }
    aug.seed_heap();
    aug.rank() == base
}

/// Transpose with the same integer entries.
pub fn transpose(mat: &SparseMat) -> SparseMat {
    let mut t = SparseMat::new(mat.cols, mat.rows);
    for (c, col) in mat.entries.iter().enumerate() {
        for &(r, v) in col {
            t.push(c as u32, r as usize, v);
        }
    }
    t.normalize();
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_mod_two() {
        // [[1,1],[1,1]] has rank 1 over GF(2)
        let mut m = SparseMat::new(2, 2);
        m.push(0, 0, 1);
        m.push(1, 0, 1);
        m.push(0, 1, 1);
        m.push(1, 1, 1);
        m.normalize();
        assert_eq!(gf2_rank(&m), 1);
    }

    #[test]
    fn even_entries_vanish() {
        let mut m = SparseMat::new(2, 2);
        m.push(0, 0, 2);
        m.push(1, 1, 3);
        m.normalize();
        assert_eq!(gf2_rank(&m), 1);
    }

    #[test]
    fn span_membership() {
        let mut m = SparseMat::new(3, 2);
        m.push(0, 0, 1);
        m.push(1, 0, 1);
        m.push(1, 1, 1);
        m.push(2, 1, 1);
        m.normalize();
        // (1,0,1) = col0 + col1
        let b: HashSet<u32> = [0u32, 2].into_iter().collect();
        assert!(gf2_in_column_span(&m, &b));
        // (1,0,0) is not in the span
        let b2: HashSet<u32> = [0u32].into_iter().collect();
        assert!(!gf2_in_column_span(&m, &b2));
    }
}
