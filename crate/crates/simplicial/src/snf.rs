//! Smith normal form of sparse integer matrices.
//!
//! The elimination runs in two phases. Phase one repeatedly pivots on ±1
//! entries chosen by Markowitz cost (minimal fill), which clears essentially
//! all of a simplicial boundary matrix without leaving the integers. Phase
//! two diagonalizes whatever small core remains with a dense big-integer
//! Smith reduction, which is where torsion shows up.
//!
//! Phase one uses checked `i64` arithmetic; if an update would overflow the
//! whole computation restarts over `BigInt`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::chain::SparseMat;

/// Rank and torsion part of the cokernel, read off the diagonal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfSummary {
    pub rank: usize,
    /// Diagonal entries with absolute value > 1, in divisibility order.
    pub torsion: Vec<BigInt>,
}

trait ElimInt: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self − m·b`; `None` signals overflow.
    fn sub_mul(&self, m: &Self, b: &Self) -> Option<Self>;
    fn neg(&self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl ElimInt for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(&self, m: &Self, b: &Self) -> Option<Self> {
        let prod = (*m as i128) * (*b as i128);
        let res = (*self as i128) - prod;
        res.try_into().ok()
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ElimInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn sub_mul(&self, m: &Self, b: &Self) -> Option<Self> {
        Some(self - m * b)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

struct Workspace<T> {
    rows: Vec<HashMap<u32, T>>,
    cols: Vec<HashSet<u32>>,
    // lazy min-heap of unit pivot candidates: (cost, row, col)
    heap: BinaryHeap<Reverse<(u64, u32, u32)>>,
}

impl<T: ElimInt> Workspace<T> {
    fn from_mat(mat: &SparseMat) -> Self {
        let mut rows: Vec<HashMap<u32, T>> = vec![HashMap::new(); mat.rows];
        let mut cols: Vec<HashSet<u32>> = vec![HashSet::new(); mat.cols];
        let mut heap = BinaryHeap::new();
        for (c, col) in mat.entries.iter().enumerate() {
            for &(r, v) in col {
                let val = T::from_i64(v);
                if val.is_unit() {
                    heap.push(Reverse((0, r, c as u32)));
                }
                rows[r as usize].insert(c as u32, val);
                cols[c].insert(r);
            }
        }
        Workspace { rows, cols, heap }
    }

    fn cost(&self, r: u32, c: u32) -> u64 {
        let rn = self.rows[r as usize].len() as u64;
        let cn = self.cols[c as usize].len() as u64;
        (rn - 1) * (cn - 1)
    }

    /// Pops a valid minimal-cost unit pivot, refreshing stale heap entries.
    fn next_pivot(&mut self) -> Option<(u32, u32)> {
        while let Some(Reverse((cost, r, c))) = self.heap.pop() {
            let Some(v) = self.rows[r as usize].get(&c) else {
                continue;
            };
            if !v.is_unit() {
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

    /// Eliminates the pivot row and column; returns `None` on overflow.
    fn eliminate(&mut self, pr: u32, pc: u32) -> Option<()> {
        let pivot_row: Vec<(u32, T)> = self.rows[pr as usize]
            .iter()
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        let pval = self.rows[pr as usize].get(&pc).unwrap().clone();
        let targets: Vec<u32> = self.cols[pc as usize]
            .iter()
            .copied()
            .filter(|&r| r != pr)
            .collect();
        for r2 in targets {
            // multiplier m = a[r2][pc] / pval; pval = ±1 so division is a sign
            let a = self.rows[r2 as usize].get(&pc).unwrap().clone();
            let m = if pval == T::from_i64(-1) { a.neg() } else { a };
            for (c2, bv) in &pivot_row {
                if *c2 == pc {
                    continue;
                }
                let cur = self.rows[r2 as usize]
                    .get(c2)
                    .cloned()
                    .unwrap_or_else(|| T::from_i64(0));
                let next = cur.sub_mul(&m, bv)?;
                if next.is_zero() {
                    self.rows[r2 as usize].remove(c2);
                    self.cols[*c2 as usize].remove(&r2);
                } else {
                    if next.is_unit() {
                        self.heap.push(Reverse((0, r2, *c2)));
                    }
                    self.rows[r2 as usize].insert(*c2, next);
                    self.cols[*c2 as usize].insert(r2);
                }
            }
            self.rows[r2 as usize].remove(&pc);
            self.cols[pc as usize].remove(&r2);
        }
        // drop the pivot row and column wholesale
        for (c2, _) in &pivot_row {
            self.cols[*c2 as usize].remove(&pr);
        }
        self.rows[pr as usize] = HashMap::new();
        self.cols[pc as usize] = HashSet::new();
        Some(())
    }

    /// Runs unit-pivot elimination; returns the unit rank and the surviving
    /// entries, or `None` on overflow.
    #[allow(clippy::type_complexity)]
    fn run(mut self) -> Option<(usize, Vec<(u32, u32, BigInt)>)> {
        let mut rank = 0usize;
        while let Some((r, c)) = self.next_pivot() {
            self.eliminate(r, c)?;
            rank += 1;
        }
        let mut rest = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rest.push((r as u32, *c, v.to_bigint()));
            }
        }
        Some((rank, rest))
    }
}

/// Dense Smith reduction of the (small) leftover core.
fn dense_smith(entries: Vec<(u32, u32, BigInt)>) -> Vec<BigInt> {
    if entries.is_empty() {
        return Vec::new();
    }
    let mut row_ids: Vec<u32> = entries.iter().map(|e| e.0).collect();
    let mut col_ids: Vec<u32> = entries.iter().map(|e| e.1).collect();
    row_ids.sort_unstable();
    row_ids.dedup();
    col_ids.sort_unstable();
    col_ids.dedup();
    let rmap: HashMap<u32, usize> = row_ids.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let cmap: HashMap<u32, usize> = col_ids.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let (m, n) = (row_ids.len(), col_ids.len());
    let mut a = vec![vec![BigInt::zero(); n]; m];
    for (r, c, v) in entries {
        a[rmap[&r]][cmap[&c]] = v;
    }

    let mut diag = Vec::new();
    let mut t = 0usize;
    while t < m && t < n {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.magnitude() < a[bi][bj].magnitude()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break;
        };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut again = false;
            // clear the pivot column by division with remainder
            for i in (t + 1)..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = div_round(&a[i][t], &a[t][t]);
                for j in t..n {
                    let sub = &q * &a[t][j];
                    a[i][j] -= sub;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    again = true;
                }
            }
            if again {
                continue;
            }
            // clear the pivot row
            for j in (t + 1)..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = div_round(&a[t][j], &a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let sub = &q * &row[t];
                    row[j] -= sub;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    again = true;
                    break;
                }
            }
            if again {
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            let mut fixed = true;
            'outer: for i in (t + 1)..m {
                for j in (t + 1)..n {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        for jj in t..n {
                            let add = a[i][jj].clone();
                            a[t][jj] += add;
                        }
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // quotient with remainder of minimal magnitude
    let (q, r) = a.div_rem(b);
    let two_r = &r * 2;
    if two_r.magnitude() > b.magnitude() {
        if (r.sign() == b.sign()) || r.is_zero() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Rank and torsion of a sparse integer matrix.
pub fn smith_summary(mat: &SparseMat) -> SnfSummary {
    let attempt = Workspace::<i64>::from_mat(mat).run();
    let (unit_rank, rest) = match attempt {
        Some(r) => r,
        None => Workspace::<BigInt>::from_mat(mat)
            .run()
            .expect("bigint elimination is total"),
    };
    let diag = dense_smith(rest);
    let rank = unit_rank + diag.iter().filter(|d| !d.is_zero()).count();
    let mut torsion: Vec<BigInt> = diag
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_unit())
        .collect();
    torsion.sort();
    SnfSummary { rank, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: usize, cols: usize, data: &[(u32, usize, i64)]) -> SparseMat {
        let mut m = SparseMat::new(rows, cols);
        for &(r, c, v) in data {
            m.push(r, c, v);
        }
        m.normalize();
        m
    }

    #[test]
    fn identity_has_full_rank() {
        let m = mat(3, 3, &[(0, 0, 1), (1, 1, 1), (2, 2, 1)]);
        let s = smith_summary(&m);
        assert_eq!(s.rank, 3);
        assert!(s.torsion.is_empty());
    }

    #[test]
    fn doubling_map_gives_torsion() {
        let m = mat(1, 1, &[(0, 0, 2)]);
        let s = smith_summary(&m);
        assert_eq!(s.rank, 1);
        assert_eq!(s.torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn classic_smith_example() {
        // [[2, 4, 4], [-6, 6, 12], [10, 4, 16]] has SNF diag (2, 6, 12)
        let m = mat(
            3,
            3,
            &[
                (0, 0, 2),
                (0, 1, 4),
                (0, 2, 4),
                (1, 0, -6),
                (1, 1, 6),
                (1, 2, 12),
                (2, 0, 10),
                (2, 1, 4),
                (2, 2, 16),
            ],
        );
        let s = smith_summary(&m);
        assert_eq!(s.rank, 3);
        assert_eq!(
            s.torsion,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
    }

    #[test]
    fn rank_deficient() {
        let m = mat(2, 3, &[(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)]);
        let s = smith_summary(&m);
        assert_eq!(s.rank, 1);
        assert!(s.torsion.is_empty());
    }

    #[test]
    fn zero_matrix() {
        let s = smith_summary(&SparseMat::new(4, 5));
        assert_eq!(s.rank, 0);
        assert!(s.torsion.is_empty());
    }
}
