//! Scalars of the coefficient rings: rationals, Gaussian rationals and
//! rational quaternions, tagged by the ground (skew) field.
//!
//! All four components are exact `BigRational`s; the multiplication table is
//! the quaternion one (`i² = j² = k² = ijk = −1`), with the `C` tag forcing
//! the `j`, `k` components to zero and the `R` tag all but the real part.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ExactError;

/// Ground field tag: the three classical division rings over the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    R,
    C,
    H,
}

impl Field {
    /// Real dimension of the field: d(R) = 1, d(C) = 2, d(H) = 4.
    pub fn degree(self) -> usize {
        match self {
            Field::R => 1,
            Field::C => 2,
            Field::H => 4,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::R => write!(f, "R"),
            Field::C => write!(f, "C"),
            Field::H => write!(f, "H"),
        }
    }
}

/// An exact scalar `a + bi + cj + dk` over the tagged field.
///
/// `BigRational` keeps every component reduced with a positive denominator,
/// so equality of scalars is structural equality of components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: Field,
    comps: [BigRational; 4],
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl Scalar {
    pub fn new(field: Field, comps: [BigRational; 4]) -> Result<Self, ExactError> {
        let allowed = field.degree();
        for c in comps.iter().skip(allowed) {
            if !c.is_zero() {
                return Err(ExactError::ComponentOutsideField(field));
            }
        }
        Ok(Scalar { field, comps })
    }

    /// The zero scalar of a field.
    pub fn zero(field: Field) -> Self {
        Scalar {
            field,
            comps: [
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
            ],
        }
    }

    pub fn one(field: Field) -> Self {
        Scalar::from_rational(field, BigRational::one())
    }

    /// Embed a rational as the real part.
    pub fn from_rational(field: Field, q: BigRational) -> Self {
        let mut s = Scalar::zero(field);
        s.comps[0] = q;
        s
    }

    pub fn from_int(field: Field, n: i64) -> Self {
        Scalar::from_rational(field, rat(n, 1))
    }

    /// The imaginary unit `i` (fields C and H).
    pub fn unit_i(field: Field) -> Result<Self, ExactError> {
        if field == Field::R {
            return Err(ExactError::ComponentOutsideField(field));
        }
        let mut s = Scalar::zero(field);
        s.comps[1] = BigRational::one();
        Ok(s)
    }

    /// The quaternion unit `j`.
    pub fn unit_j() -> Self {
        let mut s = Scalar::zero(Field::H);
        s.comps[2] = BigRational::one();
        s
    }

    /// The quaternion unit `k`.
    pub fn unit_k() -> Self {
        let mut s = Scalar::zero(Field::H);
        s.comps[3] = BigRational::one();
        s
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn components(&self) -> &[BigRational; 4] {
        &self.comps
    }

    pub fn real_part(&self) -> &BigRational {
        &self.comps[0]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.comps[1].is_zero() && self.comps[2].is_zero() && self.comps[3].is_zero()
    }

    fn check_field(&self, other: &Scalar) -> Result<(), ExactError> {
        if self.field != other.field {
            Err(ExactError::FieldMismatch(self.field, other.field))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        self.check_field(other)?;
        let mut comps = self.comps.clone();
        for (a, b) in comps.iter_mut().zip(other.comps.iter()) {
            *a += b;
        }
        Ok(Scalar {
            field: self.field,
            comps,
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        self.check_field(other)?;
        let mut comps = self.comps.clone();
        for (a, b) in comps.iter_mut().zip(other.comps.iter()) {
            *a -= b;
        }
        Ok(Scalar {
            field: self.field,
            comps,
        })
    }

    /// Exact product, left operand first; order matters over H.
    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        self.check_field(other)?;
        let [a1, b1, c1, d1] = &self.comps;
        let [a2, b2, c2, d2] = &other.comps;
        let comps = [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ];
        Ok(Scalar {
            field: self.field,
            comps,
        })
    }

    /// Conjugation: negates the three imaginary components.
    pub fn conj(&self) -> Scalar {
        let mut comps = self.comps.clone();
        for c in comps.iter_mut().skip(1) {
            *c = -c.clone();
        }
        Scalar {
            field: self.field,
            comps,
        }
    }

    /// Squared norm `a² + b² + c² + d²`; a nonnegative rational, zero iff
    /// the scalar is zero.
    pub fn norm2(&self) -> BigRational {
        self.comps.iter().map(|c| c * c).sum()
    }

    /// Multiplicative inverse `conj(q) / |q|²`.
    pub fn inverse(&self) -> Result<Scalar, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm2();
        let mut s = self.conj();
        for c in s.comps.iter_mut() {
            *c /= &n;
        }
        Ok(s)
    }

    /// Multiply by an exact rational (central, so sides agree).
    pub fn scale(&self, q: &BigRational) -> Scalar {
        let mut s = self.clone();
        for c in s.comps.iter_mut() {
            *c *= q;
        }
        s
    }

    /// Largest absolute value among the rational components.
    pub fn max_abs_component(&self) -> BigRational {
        self.comps
            .iter()
            .map(|c| c.abs())
            .max()
            .expect("four components")
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("field mismatch in +")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("field mismatch in -")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("field mismatch in *")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut comps = self.comps.clone();
        for c in comps.iter_mut() {
            *c = -c.clone();
        }
        Scalar {
            field: self.field,
            comps,
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "i", "j", "k"];
        let mut wrote = false;
        for (c, name) in self.comps.iter().zip(names.iter()) {
            if c.is_zero() {
                continue;
            }
            if wrote && c.is_positive() {
                write!(f, "+")?;
            }
            if name.is_empty() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", name)?;
            } else if (-c).is_one() {
                write!(f, "-{}", name)?;
            } else {
                write!(f, "{}{}", c, name)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Hermitian form `⟨x, y⟩ = Σ xᵢ · conj(yᵢ)` on vectors over one field.
pub fn hermitian_form(x: &[Scalar], y: &[Scalar]) -> Result<Scalar, ExactError> {
    if x.len() != y.len() {
        return Err(ExactError::LengthMismatch(x.len(), y.len()));
    }
    if x.is_empty() {
        return Err(ExactError::EmptyVector);
    }
    let field = x[0].field();
    let mut acc = Scalar::zero(field);
    for (a, b) in x.iter().zip(y.iter()) {
        acc = acc.checked_add(&a.checked_mul(&b.conj())?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        rat(n, 1)
    }

    #[test]
    fn quaternion_table() {
        let i = Scalar::unit_i(Field::H).unwrap();
        let j = Scalar::unit_j();
        let k = Scalar::unit_k();
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, Scalar::from_int(Field::H, -1));
        // ijk = -1
        assert_eq!(&(&i * &j) * &k, Scalar::from_int(Field::H, -1));
    }

    #[test]
    fn one_is_identity() {
        let q17 = Scalar::new(Field::H, [rat(1, 2), q(3), q(-5), rat(7, 3)]).unwrap();
        assert_eq!(&Scalar::one(Field::H) * &q17, q17);
        assert_eq!(&q17 * &Scalar::one(Field::H), q17);
    }

    #[test]
    fn complex_product_expands() {
        // (1+i)(1-i) = 2
        let a = Scalar::new(
            Field::C,
            [q(1), q(1), BigRational::zero(), BigRational::zero()],
        )
        .unwrap();
        let b = a.conj();
        assert_eq!(&a * &b, Scalar::from_int(Field::C, 2));
    }

    #[test]
    fn mixed_tags_error() {
        let a = Scalar::one(Field::R);
        let b = Scalar::one(Field::C);
        assert!(matches!(
            a.checked_mul(&b),
            Err(ExactError::FieldMismatch(Field::R, Field::C))
        ));
    }

    #[test]
    fn conj_and_norm() {
        let s = Scalar::new(Field::H, [q(1), q(-2), q(3), q(-4)]).unwrap();
        let c = s.conj();
        assert_eq!(c.components()[1], q(2));
        assert_eq!(s.norm2(), q(1 + 4 + 9 + 16));
        assert!(( &s * &c).is_real());
        let inv = s.inverse().unwrap();
        assert_eq!(&s * &inv, Scalar::one(Field::H));
        assert_eq!(&inv * &s, Scalar::one(Field::H));
    }

    #[test]
    fn hermitian_examples() {
        // unit vector pairs to 1 with itself
        for field in [Field::R, Field::C, Field::H] {
            let e1 = vec![Scalar::one(field), Scalar::zero(field)];
            assert_eq!(
                hermitian_form(&e1, &e1).unwrap(),
                Scalar::one(field)
            );
        }
        // disjoint supports pair to zero
        let i = Scalar::unit_i(Field::C).unwrap();
        let x = vec![i, Scalar::zero(Field::C)];
        let y = vec![Scalar::zero(Field::C), Scalar::one(Field::C)];
        assert!(hermitian_form(&x, &y).unwrap().is_zero());
        // x=(j,k), y=(k,j): j·(−k) + k·(−j) = −i + i = 0
        let x = vec![Scalar::unit_j(), Scalar::unit_k()];
        let y = vec![Scalar::unit_k(), Scalar::unit_j()];
        assert!(hermitian_form(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn self_pairing_is_real_nonnegative() {
        let x = vec![
            Scalar::new(Field::H, [q(1), q(2), q(-1), rat(1, 2)]).unwrap(),
            Scalar::new(Field::H, [q(0), q(-3), q(2), q(5)]).unwrap(),
        ];
        let p = hermitian_form(&x, &x).unwrap();
        assert!(p.is_real());
        assert!(p.real_part().is_positive());
    }
}
