//! Homology of chain complexes over Z, Q and GF(2).

use num_bigint::BigInt;

use crate::chain::ChainComplex;
use crate::gf2::gf2_rank;
use crate::snf::smith_summary;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coeffs {
    Z,
    Q,
    Gf2,
}

/// Betti numbers per dimension, plus torsion coefficients over Z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl Homology {
    /// Betti vector with trailing zeros removed.
    pub fn trimmed_betti(&self) -> Vec<usize> {
        let mut b = self.betti.clone();
        while b.last() == Some(&0) {
            b.pop();
        }
        b
    }

    pub fn betti_at(&self, k: usize) -> usize {
        self.betti.get(k).copied().unwrap_or(0)
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }

    /// Does this match the reduced homology of `S^d`?
    pub fn is_reduced_sphere(&self, d: usize) -> bool {
        !self.has_torsion()
            && self
                .betti
                .iter()
                .enumerate()
                .all(|(k, &b)| b == usize::from(k == d))
            && self.betti_at(d) == 1
    }

    /// Does this match the reduced homology of a wedge of `count` spheres `S^d`?
    pub fn is_wedge_of_spheres(&self, d: usize, count: usize) -> bool {
        !self.has_torsion()
            && self
                .betti
                .iter()
                .enumerate()
                .all(|(k, &b)| if k == d { b == count } else { b == 0 })
            && self.betti_at(d) == count
    }
}

/// Homology of a chain complex. With `reduced` the 0-th Betti number is
/// lowered by one (augmentation), matching reduced simplicial homology for
/// nonempty complexes.
pub fn homology(cc: &ChainComplex, coeffs: Coeffs, reduced: bool) -> Homology {
    let nd = cc.sizes.len();
    if nd == 0 {
        return Homology {
            betti: Vec::new(),
            torsion: Vec::new(),
        };
    }
    // ranks[k] = rank ∂_k for 1..=d; ranks[0] = ranks[d+1] = 0
    let mut ranks = vec![0usize; nd + 1];
    let mut torsion: Vec<Vec<BigInt>> = vec![Vec::new(); nd];
    match coeffs {
        Coeffs::Gf2 => {
            for k in 1..nd {
                ranks[k] = gf2_rank(cc.boundary(k));
            }
        }
        Coeffs::Z | Coeffs::Q => {
            for k in 1..nd {
                let s = smith_summary(cc.boundary(k));
                ranks[k] = s.rank;
                if coeffs == Coeffs::Z {
                    torsion[k - 1] = s.torsion;
                }
            }
        }
    }
    let mut betti: Vec<usize> = (0..nd)
        .map(|k| cc.sizes[k] - ranks[k] - ranks[k + 1])
        .collect();
    if reduced && cc.sizes[0] > 0 {
        betti[0] -= 1;
    }
    Homology { betti, torsion }
}
