//! Left submodules of `K^n` given by row bases.
//!
//! Scalars act on the left throughout; row reduction only ever multiplies
//! rows by scalars from the left, which keeps everything valid over the
//! noncommutative quaternions.

use crate::scalar::{Field, Scalar};
use crate::ExactError;

/// A left `K`-submodule of `K^n`, stored as a row basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

/// Left row reduction to reduced row-echelon form.
///
/// Returns the reduced rows (zero rows dropped) and the pivot columns.
/// Row operations are `row ← λ·row` and `row_a ← row_a − λ·row_b` with λ on
/// the left, so the row space as a *left* module is preserved.
pub fn left_rref(rows: &[Vec<Scalar>], ambient: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ambient {
        let Some(r) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, r);
        let inv = m[rank][col].inverse().expect("pivot nonzero");
        for entry in m[rank].iter_mut() {
            *entry = &inv * entry;
        }
        for r2 in 0..m.len() {
            if r2 == rank || m[r2][col].is_zero() {
                continue;
            }
            let factor = m[r2][col].clone();
            for c in 0..ambient {
                let delta = &factor * &m[rank][c];
                m[r2][c] = &m[r2][c] - &delta;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    (m, pivots)
}

impl Subspace {
    /// Builds a subspace from a row basis, verifying left independence.
    pub fn new(field: Field, ambient: usize, basis: Vec<Vec<Scalar>>) -> Result<Self, ExactError> {
        for row in &basis {
            if row.len() != ambient {
                return Err(ExactError::LengthMismatch(row.len(), ambient));
            }
            for s in row {
                if s.field() != field {
                    return Err(ExactError::FieldMismatch(s.field(), field));
                }
            }
        }
        let (reduced, _) = left_rref(&basis, ambient);
        if reduced.len() != basis.len() {
            return Err(ExactError::DependentBasis);
        }
        Ok(Subspace {
            field,
            ambient,
            basis,
        })
    }

    /// The zero subspace of `K^n`.
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
        }
    }

    /// The full space `K^n`.
    pub fn full(field: Field, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| {
                        if i == j {
                            Scalar::one(field)
                        } else {
                            Scalar::zero(field)
                        }
                    })
                    .collect()
            })
            .collect();
        Subspace {
            field,
            ambient,
            basis,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Canonical left-RREF basis; two subspaces are equal iff these agree.
    pub fn canonical_basis(&self) -> Vec<Vec<Scalar>> {
        left_rref(&self.basis, self.ambient).0
    }

    pub fn same_space(&self, other: &Subspace) -> bool {
        self.field == other.field
            && self.ambient == other.ambient
            && self.canonical_basis() == other.canonical_basis()
    }

    /// Does the vector lie in the span (with left coefficients)?
    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        let (reduced, _) = left_rref(&rows, self.ambient);
        reduced.len() == self.dim()
    }

    /// Orthogonal complement `V^⊥ = { y : ⟨x, y⟩ = 0 for all x ∈ V }` under
    /// the Hermitian form; a left submodule of dimension `n − dim V`.
    ///
    /// `⟨w, y⟩ = 0` conjugates to `Σᵢ yᵢ·conj(wᵢ) = 0`, a system with the
    /// unknowns on the left, solved by left row reduction of the matrix
    /// `C[i][s] = conj(w_s[i])` augmented with the identity.
    pub fn orthogonal_complement(&self) -> Subspace {
        let n = self.ambient;
        let r = self.dim();
        // augmented rows: [ C | I ], one row per ambient coordinate
        let mut aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row: Vec<Scalar> = self.basis.iter().map(|w| w[i].conj()).collect();
                for j in 0..n {
                    row.push(if i == j {
                        Scalar::one(self.field)
                    } else {
                        Scalar::zero(self.field)
                    });
                }
                row
            })
            .collect();

        // left-reduce on the first r columns only
        let mut rank = 0usize;
        for col in 0..r {
            let Some(row) = (rank..n).find(|&row| !aug[row][col].is_zero()) else {
                continue;
            };
            aug.swap(rank, row);
            let inv = aug[rank][col].inverse().expect("pivot nonzero");
            for entry in aug[rank].iter_mut() {
                *entry = &inv * entry;
            }
            for r2 in 0..n {
                if r2 == rank || aug[r2][col].is_zero() {
                    continue;
                }
                let factor = aug[r2][col].clone();
                for c in 0..(r + n) {
                    let delta = &factor * &aug[rank][c];
                    aug[r2][c] = &aug[r2][c] - &delta;
                }
            }
            rank += 1;
        }

        let mut rows = Vec::new();
        for row in aug.iter().skip(rank) {
            debug_assert!(row[..r].iter().all(|s| s.is_zero()));
            rows.push(row[r..].to_vec());
        }
        let (canon, _) = left_rref(&rows, n);
        debug_assert_eq!(canon.len(), n - rank);
        Subspace {
            field: self.field,
            ambient: n,
            basis: canon,
        }
    }
}
