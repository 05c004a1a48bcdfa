//! Rational points on unit spheres via the inverse stereographic map.

use num_rational::BigRational;
use num_traits::One;

/// Maps `u ∈ Q^{d−1}` to a rational unit vector in `Q^d`:
/// `x = ((1 − |u|²)/(1 + |u|²), 2u/(1 + |u|²))`, so `Σ xᵢ² = 1` exactly.
pub fn rational_sphere_point(u: &[BigRational]) -> Vec<BigRational> {
    let norm2: BigRational = u.iter().map(|c| c * c).sum();
    let denom = &norm2 + BigRational::one();
    let mut x = Vec::with_capacity(u.len() + 1);
    x.push((BigRational::one() - &norm2) / &denom);
    let two = BigRational::from_integer(2.into());
    for c in u {
        x.push(&two * c / &denom);
    }
    x
}

/// Exact check that a rational vector has unit norm.
pub fn is_unit(x: &[BigRational]) -> bool {
    let n: BigRational = x.iter().map(|c| c * c).sum();
    n.is_one()
}
