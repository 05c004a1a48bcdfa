//! Integral chain complexes with sparse boundary matrices.

use std::collections::HashMap;

use crate::complex::CellBasis;
use crate::simplex::Simplex;

/// Sparse integer matrix stored by columns; rows within a column are sorted.
#[derive(Clone, Debug, Default)]
pub struct SparseMat {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<(u32, i64)>>,
}

impl SparseMat {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            entries: vec![Vec::new(); cols],
        }
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn push(&mut self, row: u32, col: usize, val: i64) {
        if val != 0 {
            self.entries[col].push((row, val));
        }
    }

    /// Sorts and combines duplicate row indices within each column.
    pub fn normalize(&mut self) {
        for col in self.entries.iter_mut() {
            col.sort_unstable_by_key(|&(r, _)| r);
            let mut out: Vec<(u32, i64)> = Vec::with_capacity(col.len());
            for &(r, v) in col.iter() {
                match out.last_mut() {
                    Some((lr, lv)) if *lr == r => *lv += v,
                    _ => out.push((r, v)),
                }
            }
            out.retain(|&(_, v)| v != 0);
            *col = out;
        }
    }
}

/// A chain complex of free abelian groups with integral boundary maps.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    /// Number of generators per dimension `0..=d`.
    pub sizes: Vec<usize>,
    boundaries: Vec<SparseMat>, // boundaries[k-1] : C_k -> C_{k-1}
}

impl ChainComplex {
    pub fn from_parts(sizes: Vec<usize>, boundaries: Vec<SparseMat>) -> Self {
        assert_eq!(boundaries.len() + 1, sizes.len().max(1));
        let cc = ChainComplex { sizes, boundaries };
        assert!(cc.verify_dd_zero(), "boundary composition is nonzero");
        cc
    }

    pub fn dim(&self) -> Option<usize> {
        self.sizes.len().checked_sub(1)
    }

    /// The boundary `∂_k : C_k → C_{k−1}`, for `1 ≤ k ≤ dim`.
    pub fn boundary(&self, k: usize) -> &SparseMat {
        &self.boundaries[k - 1]
    }

    /// Builds the simplicial chain complex over the given cell basis.
    pub fn from_basis(basis: &CellBasis) -> Self {
        Self::from_basis_filtered(basis, |_| true)
    }

    /// Relative chain complex: keeps only the simplices selected by `keep`
    /// (which must be closed upward in the sense that dropping a generator
    /// only ever removes rows below retained columns).
    pub fn from_basis_filtered(basis: &CellBasis, keep: impl Fn(&Simplex) -> bool) -> Self {
        let nd = basis.by_dim.len();
        let mut kept: Vec<Vec<&Simplex>> = Vec::with_capacity(nd);
        for cells in &basis.by_dim {
            kept.push(cells.iter().filter(|s| keep(s)).collect());
        }
        let sizes: Vec<usize> = kept.iter().map(Vec::len).collect();
        let mut boundaries = Vec::new();
        for k in 1..nd {
            let index: HashMap<&Simplex, u32> = kept[k - 1]
                .iter()
                .enumerate()
                .map(|(i, s)| (*s, i as u32))
                .collect();
            let mut mat = SparseMat::new(sizes[k - 1], sizes[k]);
            for (c, s) in kept[k].iter().enumerate() {
                for i in 0..=k {
                    let f = s.face(i);
                    if let Some(&r) = index.get(&f) {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        mat.push(r, c, sign);
                    }
                }
            }
            mat.normalize();
            boundaries.push(mat);
        }
        if sizes.is_empty() {
            return ChainComplex {
                sizes,
                boundaries: Vec::new(),
            };
        }
        Self::from_parts(sizes, boundaries)
    }

    /// Exact integer check that `∂ ∘ ∂ = 0`.
    pub fn verify_dd_zero(&self) -> bool {
        for k in 2..self.sizes.len() {
            let upper = self.boundary(k);
            let lower = self.boundary(k - 1);
            for col in &upper.entries {
                let mut acc: HashMap<u32, i64> = HashMap::new();
                for &(mid, v) in col {
                    for &(r, w) in &lower.entries[mid as usize] {
                        *acc.entry(r).or_insert(0) += v * w;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return false;
                }
            }
        }
        true
    }
}
