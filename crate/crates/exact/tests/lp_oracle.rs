//! Cross-check of the simplex-based strict feasibility decision against an
//! independent Fourier–Motzkin elimination oracle on small systems.

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use concomb_exact::lp_strict_feasible;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// A homogeneous constraint `Σ cⱼ tⱼ ≥ 0` (`> 0` when `strict`).
#[derive(Clone)]
struct Ineq {
    coeffs: Vec<BigRational>,
    strict: bool,
}

/// Fourier–Motzkin elimination for homogeneous systems with mixed strict
/// and non-strict inequalities. Combining an upper and a lower bound on the
/// eliminated variable yields a strict inequality iff either side is strict.
fn fm_feasible(mut system: Vec<Ineq>, nvars: usize) -> bool {
    for v in 0..nvars {
        let mut zero_rows = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for ineq in system {
            let c = &ineq.coeffs[v];
            if c.is_zero() {
                zero_rows.push(ineq);
            } else if c > &BigRational::zero() {
                pos.push(ineq);
            } else {
                neg.push(ineq);
            }
        }
        let mut next = zero_rows;
        for p in &pos {
            for n in &neg {
                let ap = p.coeffs[v].clone();
                let an = n.coeffs[v].clone();
                let coeffs: Vec<BigRational> = p
                    .coeffs
                    .iter()
                    .zip(n.coeffs.iter())
                    .map(|(cp, cn)| -&an * cp + &ap * cn)
                    .collect();
                next.push(Ineq {
                    coeffs,
                    strict: p.strict || n.strict,
                });
            }
        }
        system = next;
    }
    // only constant constraints remain: 0 ≥ 0 holds, 0 > 0 does not
    system.iter().all(|ineq| !ineq.strict)
}

fn fm_strict_feasible(matrix: &[Vec<BigRational>], designated: &[bool]) -> bool {
    let nvars = designated.len();
    let mut system = Vec::new();
    for row in matrix {
        system.push(Ineq {
            coeffs: row.clone(),
            strict: false,
        });
        system.push(Ineq {
            coeffs: row.iter().map(|c| -c).collect(),
            strict: false,
        });
    }
    for (i, &d) in designated.iter().enumerate() {
        if d {
            let mut coeffs = vec![BigRational::zero(); nvars];
            coeffs[i] = q(1);
            system.push(Ineq {
                coeffs,
                strict: true,
            });
        }
    }
    fm_feasible(system, nvars)
}

fn check_agreement(matrix: &[Vec<BigRational>], designated: &[bool]) {
    let lp = lp_strict_feasible(matrix, designated);
    let fm = fm_strict_feasible(matrix, designated);
    assert_eq!(
        lp.is_some(),
        fm,
        "simplex and Fourier-Motzkin disagree on {:?} designated {:?}",
        matrix,
        designated
    );
    if let Some(t) = lp {
        for row in matrix {
            let s: BigRational = row.iter().zip(t.iter()).map(|(a, b)| a * b).sum();
            assert!(s.is_zero(), "witness violates equality");
        }
        for (v, &d) in t.iter().zip(designated.iter()) {
            if d {
                assert!(v > &BigRational::zero(), "witness not strictly positive");
            }
        }
    }
}

#[test]
fn exhaustive_single_row_three_vars() {
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            for c in -2i64..=2 {
                let matrix = vec![vec![q(a), q(b), q(c)]];
                check_agreement(&matrix, &[true, true, true]);
                check_agreement(&matrix, &[true, false, true]);
            }
        }
    }
}

#[test]
fn known_answers() {
    // positive linear relation exists iff the vectors positively span zero
    check_agreement(&[vec![q(1), q(1)]], &[true, true]); // UNSAT
    check_agreement(&[vec![q(1), q(-2)]], &[true, true]); // SAT
    check_agreement(
        &[vec![q(1), q(0), q(-1)], vec![q(0), q(1), q(-1)]],
        &[true, true, true],
    ); // SAT (1,1,1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]
    #[test]
    fn random_systems_agree(
        entries in prop::collection::vec(-4i64..=4, 1..=12),
        nvars in 1usize..=4,
        mask in prop::collection::vec(any::<bool>(), 4),
    ) {
        let rows = entries.len() / nvars;
        let matrix: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| (0..nvars).map(|c| q(entries[r * nvars + c])).collect())
            .collect();
        // at least one designated variable, else the zero solution is trivial
        let mut designated: Vec<bool> = mask[..nvars].to_vec();
        if !designated.iter().any(|&d| d) {
            designated[0] = true;
        }
        check_agreement(&matrix, &designated);
    }
}
