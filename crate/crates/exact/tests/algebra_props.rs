//! Property tests for the Hermitian form and orthogonal complements over
//! each of the three ground fields.

use num_rational::BigRational;
use proptest::prelude::*;

use concomb_exact::{hermitian_form, Field, Scalar, Subspace};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn scalar_strategy(field: Field) -> impl Strategy<Value = Scalar> {
    let deg = field.degree();
    prop::collection::vec((-6i64..=6, 1i64..=4), 4).prop_map(move |comps| {
        let mut arr = [rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        for (i, (n, d)) in comps.into_iter().enumerate().take(deg) {
            arr[i] = rat(n, d);
        }
        Scalar::new(field, arr).unwrap()
    })
}

fn vector_strategy(field: Field, len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(scalar_strategy(field), len)
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::R), Just(Field::C), Just(Field::H)]
}

#[allow(clippy::type_complexity)]
fn semilinearity_inputs() -> impl Strategy<Value = (Vec<Scalar>, Vec<Scalar>, Scalar)> {
    (field_strategy(), 1usize..=4).prop_flat_map(|(field, len)| {
        (
            vector_strategy(field, len),
            vector_strategy(field, len),
            scalar_strategy(field),
        )
    })
}

proptest! {
    /// Right semilinearity: ⟨x, αy⟩ = ⟨x, y⟩·conj(α). This is the algebraic
    /// step that upgrades a vanishing real part on a left module to the full
    /// Hermitian identity in the duality argument.
    #[test]
    fn right_semilinearity((x, y, alpha) in semilinearity_inputs()) {
        let ay: Vec<Scalar> = y.iter().map(|v| &alpha * v).collect();
        let lhs = hermitian_form(&x, &ay).unwrap();
        let rhs = &hermitian_form(&x, &y).unwrap() * &alpha.conj();
        prop_assert_eq!(lhs, rhs);
    }
}

#[allow(clippy::type_complexity)]
fn subspace_inputs() -> impl Strategy<Value = (Field, usize, Vec<Vec<Scalar>>)> {
    (field_strategy(), 1usize..=6, 1usize..=3).prop_flat_map(|(field, n, r)| {
        let rows = r.min(n);
        (
            Just(field),
            Just(n),
            prop::collection::vec(vector_strategy(field, n), rows),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    /// (V^⊥)^⊥ = V as row spaces, and every basis pairing vanishes.
    #[test]
    fn complement_is_involutive((field, n, rows) in subspace_inputs()) {
        let Ok(v) = Subspace::new(field, n, rows) else {
            // dependent random rows: nothing to test
            return Ok(());
        };
        let c = v.orthogonal_complement();
        prop_assert_eq!(c.dim(), n - v.dim());
        for x in v.basis() {
            for y in c.basis() {
                prop_assert!(hermitian_form(x, y).unwrap().is_zero());
            }
        }
        prop_assert!(c.orthogonal_complement().same_space(&v));
    }
}
