//! Barycentric subdivision.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;

/// A barycentric subdivision together with the dictionary from new vertices
/// back to the simplices of the original complex.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// `vertex_simplices[v]` is the simplex of the original complex that
    /// became vertex `v`; indices follow (dimension, lex) order, so a new
    /// vertex's dimension is recoverable.
    pub vertex_simplices: Vec<Simplex>,
}

impl Subdivision {
    pub fn vertex_of(&self) -> HashMap<Simplex, u32> {
        self.vertex_simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as u32))
            .collect()
    }
}

/// Barycentric subdivision: vertices are the simplices of `k`, simplices
/// are the chains under inclusion. Facets are the complete flags inside the
/// facets of `k`.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> Subdivision {
    let basis = k.cell_basis();
    let mut vertex_simplices: Vec<Simplex> = Vec::with_capacity(basis.total());
    for cells in &basis.by_dim {
        vertex_simplices.extend(cells.iter().cloned());
    }
    let index: HashMap<&Simplex, u32> = vertex_simplices
        .iter()
        .enumerate()
        .map(|(i, s)| (s, i as u32))
        .collect();

    let mut facets = Vec::new();
    for f in k.facets() {
        let verts: Vec<u32> = f.vertices().to_vec();
        let d = verts.len();
        let mut perm: Vec<usize> = (0..d).collect();
        // enumerate orderings; each ordering is a complete flag
        loop {
            let mut chain = Vec::with_capacity(d);
            let mut prefix: Vec<u32> = Vec::with_capacity(d);
            for &i in &perm {
                prefix.push(verts[i]);
                chain.push(index[&Simplex::new(prefix.clone())]);
            }
            facets.push(Simplex::new(chain));
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    let complex = SimplicialComplex::from_facets(vertex_simplices.len(), facets)
        .expect("subdivision is a valid complex");
    Subdivision {
        complex,
        vertex_simplices,
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::ChainComplex;
    use crate::homology::{homology, Coeffs};

    #[test]
    fn subdivided_edge_is_a_path() {
        let edge = SimplicialComplex::simplex(1);
        let sd = barycentric_subdivision(&edge);
        let basis = sd.complex.cell_basis();
        assert_eq!(basis.by_dim[0].len(), 3);
        assert_eq!(basis.by_dim[1].len(), 2);
    }

    #[test]
    fn subdivided_triangle_counts() {
        let tri = SimplicialComplex::simplex(2);
        let sd = barycentric_subdivision(&tri);
        let basis = sd.complex.cell_basis();
        assert_eq!(basis.by_dim[0].len(), 7);
        assert_eq!(basis.by_dim[2].len(), 6);
    }

    #[test]
    fn euler_characteristic_is_preserved() {
        for c in [
            SimplicialComplex::sphere(2),
            SimplicialComplex::cycle(5),
            SimplicialComplex::simplex(3),
            SimplicialComplex::cross_polytope_boundary(2),
        ] {
            let sd = barycentric_subdivision(&c);
            assert_eq!(sd.complex.euler_characteristic(), c.euler_characteristic());
        }
    }

    #[test]
    fn homology_is_preserved() {
        for c in [
            SimplicialComplex::sphere(2),
            SimplicialComplex::cross_polytope_boundary(3),
        ] {
            let sd = barycentric_subdivision(&c);
            for coeffs in [Coeffs::Z, Coeffs::Gf2] {
                let h0 = homology(&ChainComplex::from_basis(&c.cell_basis()), coeffs, false);
                let h1 = homology(
                    &ChainComplex::from_basis(&sd.complex.cell_basis()),
                    coeffs,
                    false,
                );
                assert_eq!(h0.trimmed_betti(), h1.trimmed_betti());
                assert_eq!(h0.torsion, h1.torsion);
            }
        }
    }
}
