//! Finite simplicial complexes stored by facets, expanded on demand.

use std::collections::HashSet;

use crate::simplex::Simplex;
use crate::SimplicialError;

/// A finite simplicial complex on the vertex set `0..num_vertices`.
///
/// Only the facets (maximal simplices) are stored; the downward closure is
/// computed when needed. Every vertex must belong to at least one facet
/// (isolated vertices appear as 0-dimensional facets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<Simplex>,
}

/// Closure of a complex: all simplices grouped by dimension, each list
/// sorted lexicographically. The orderings are the global cell basis used
/// by chain complexes and cup products.
#[derive(Clone, Debug)]
pub struct CellBasis {
    pub by_dim: Vec<Vec<Simplex>>,
}

impl CellBasis {
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    pub fn total(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }
}

impl SimplicialComplex {
    /// The empty complex.
    pub fn empty() -> Self {
        SimplicialComplex {
            num_vertices: 0,
            facets: Vec::new(),
        }
    }

    /// Builds a complex from facets, discarding dominated faces.
    pub fn from_facets(num_vertices: usize, facets: Vec<Simplex>) -> Result<Self, SimplicialError> {
        for f in &facets {
            if let Some(&v) = f.vertices().last() {
                if v as usize >= num_vertices {
                    return Err(SimplicialError::VertexOutOfRange(v, num_vertices));
                }
            }
        }
        let mut covered = vec![false; num_vertices];
        for f in &facets {
            for &v in f.vertices() {
                covered[v as usize] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(SimplicialError::UnusedVertex(v as u32));
        }
        let mut facets: Vec<Simplex> = facets;
        facets.sort();
        facets.dedup();
        // drop any face dominated by another facet
        let keep: Vec<Simplex> = facets
            .iter()
            .filter(|f| {
                !facets
                    .iter()
                    .any(|g| g.dim() > f.dim() && f.is_face_of(g))
            })
            .cloned()
            .collect();
        Ok(SimplicialComplex {
            num_vertices,
            facets: keep,
        })
    }

    /// The full simplex on `d + 1` vertices.
    pub fn simplex(d: usize) -> Self {
        let all = Simplex::new((0..=d as u32).collect());
        SimplicialComplex {
            num_vertices: d + 1,
            facets: vec![all],
        }
    }

    /// The boundary sphere `∂Δ^{d+1} ≅ S^d` on `d + 2` vertices.
    pub fn sphere(d: usize) -> Self {
        let n = d + 2;
        let facets = (0..n)
            .map(|skip| {
                Simplex::new(
                    (0..n as u32)
                        .filter(|&v| v as usize != skip)
                        .collect(),
                )
            })
            .collect();
        SimplicialComplex {
            num_vertices: n,
            facets,
        }
    }

    /// A single point.
    pub fn point() -> Self {
        SimplicialComplex {
            num_vertices: 1,
            facets: vec![Simplex::vertex(0)],
        }
    }

    /// Cyclic triangulation of the circle with `k ≥ 3` vertices.
    pub fn cycle(k: usize) -> Self {
        assert!(k >= 3);
        let facets = (0..k as u32)
            .map(|i| Simplex::new(vec![i, (i + 1) % k as u32]))
            .collect();
        SimplicialComplex {
            num_vertices: k,
            facets,
        }
    }

    /// Boundary of the real cross polytope on `2n` vertices; vertex `2i`
    /// is the positive pole of coordinate `i` and `2i + 1` the negative
    /// one, so the antipodal map is `v ↦ v ^ 1`.
    pub fn cross_polytope_boundary(n: usize) -> Self {
        assert!(n >= 1);
        let mut facets = Vec::with_capacity(1 << n);
        for signs in 0..(1u32 << n) {
            let verts = (0..n as u32)
                .map(|i| 2 * i + ((signs >> i) & 1))
                .collect();
            facets.push(Simplex::new(verts));
        }
        SimplicialComplex {
            num_vertices: 2 * n,
            facets,
        }
    }

    /// The antipodal involution of `cross_polytope_boundary`.
    pub fn cross_polytope_antipode(n: usize) -> Vec<u32> {
        (0..2 * n as u32).map(|v| v ^ 1).collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(Simplex::dim).max()
    }

    /// Membership test against the facet list.
    pub fn contains_simplex(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains_simplex(f))
    }

    /// Downward closure, level by level from the facets.
    pub fn cell_basis(&self) -> CellBasis {
        let Some(maxd) = self.dim() else {
            return CellBasis { by_dim: Vec::new() };
        };
        let mut sets: Vec<HashSet<Simplex>> = vec![HashSet::new(); maxd + 1];
        for f in &self.facets {
            sets[f.dim()].insert(f.clone());
        }
        for d in (1..=maxd).rev() {
            let faces: Vec<Simplex> = sets[d]
                .iter()
                .flat_map(|s| (0..=d).map(move |i| s.face(i)))
                .collect();
            sets[d - 1].extend(faces);
        }
        let by_dim = sets
            .into_iter()
            .map(|set| {
                let mut v: Vec<Simplex> = set.into_iter().collect();
                v.sort();
                v
            })
            .collect();
        CellBasis { by_dim }
    }

    /// Join of two complexes, relabeling the right factor upward.
    /// The join with the empty complex is the other factor.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let off = self.num_vertices as u32;
        let facets = self
            .facets
            .iter()
            .flat_map(|f| {
                other
                    .facets
                    .iter()
                    .map(move |g| f.union(&g.map(|v| v + off)))
            })
            .collect();
        SimplicialComplex {
            num_vertices: self.num_vertices + other.num_vertices,
            facets,
        }
    }

    /// Alternating sum of simplex counts.
    pub fn euler_characteristic(&self) -> i64 {
        let basis = self.cell_basis();
        basis
            .by_dim
            .iter()
            .enumerate()
            .map(|(d, cells)| {
                let sign = if d % 2 == 0 { 1 } else { -1 };
                sign * cells.len() as i64
            })
            .sum()
    }

    /// Reduced Euler characteristic `χ − 1` (computes `−1` for the empty
    /// complex).
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.euler_characteristic() - 1
    }

    /// Relabels vertices through a map that must be injective on each facet.
    pub fn relabel(&self, num_vertices: usize, f: impl Fn(u32) -> u32) -> Result<Self, SimplicialError> {
        let facets: Vec<Simplex> = self
            .facets
            .iter()
            .map(|s| {
                let img = s.map(&f);
                if img.dim() != s.dim() {
                    Err(SimplicialError::CollapsedSimplex(s.clone()))
                } else {
                    Ok(img)
                }
            })
            .collect::<Result<_, _>>()?;
        SimplicialComplex::from_facets(num_vertices, facets)
    }
}
