//! Exact rational linear feasibility.
//!
//! Phase-1 simplex with Bland's rule on a dense tableau. All pivoting is
//! exact; there are no tolerances anywhere. Arithmetic runs over `i128`
//! rationals with overflow detection and restarts over `BigRational` in the
//! (rare) case a pivot overflows.
//!
//! Strict positivity is handled by the normalization trick: for a
//! homogeneous system, `t > 0` componentwise is feasible iff `t ≥ 1` is,
//! by rescaling, and `t ≥ 1` is encoded as `t = 1 + u`, `u ≥ 0`.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Constraint sense. `Le` rows are normalized to `Ge` by negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Eq,
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    Free,
    NonNeg,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub rel: Rel,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn eq(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Constraint {
            coeffs,
            rel: Rel::Eq,
            rhs,
        }
    }

    pub fn ge(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Constraint {
            coeffs,
            rel: Rel::Ge,
            rhs,
        }
    }
}

/// Exact rational arithmetic used inside the tableau. Operations report
/// overflow through `None`; the `BigRational` implementation cannot fail.
trait Rat: Clone + PartialEq + Sized {
    fn r_zero() -> Self;
    fn r_one() -> Self;
    fn from_big(q: &BigRational) -> Option<Self>;
    fn to_big(&self) -> BigRational;
    fn r_is_zero(&self) -> bool;
    fn r_is_positive(&self) -> bool;
    fn r_add(&self, o: &Self) -> Option<Self>;
    fn r_sub(&self, o: &Self) -> Option<Self>;
    fn r_mul(&self, o: &Self) -> Option<Self>;
    fn r_div(&self, o: &Self) -> Option<Self>;
    fn r_neg(&self) -> Self;
}

#[derive(Clone, PartialEq, Debug)]
struct Rat128 {
    n: i128,
    d: i128, // always > 0, gcd(|n|, d) = 1
}

impl Rat128 {
    fn make(n: i128, d: i128) -> Option<Rat128> {
        debug_assert!(d != 0);
        let (mut n, mut d) = if d < 0 { (n.checked_neg()?, d.checked_neg()?) } else { (n, d) };
        if n == 0 {
            return Some(Rat128 { n: 0, d: 1 });
        }
        let g = n.abs().gcd(&d);
        n /= g;
        d /= g;
        Some(Rat128 { n, d })
    }
}

impl Rat for Rat128 {
    fn r_zero() -> Self {
        Rat128 { n: 0, d: 1 }
    }
    fn r_one() -> Self {
        Rat128 { n: 1, d: 1 }
    }
    fn from_big(q: &BigRational) -> Option<Self> {
        let n: i128 = q.numer().try_into().ok()?;
        let d: i128 = q.denom().try_into().ok()?;
        Rat128::make(n, d)
    }
    fn to_big(&self) -> BigRational {
        BigRational::new(self.n.into(), self.d.into())
    }
    fn r_is_zero(&self) -> bool {
        self.n == 0
    }
    fn r_is_positive(&self) -> bool {
        self.n > 0
    }
    fn r_add(&self, o: &Self) -> Option<Self> {
        let n = self
            .n
            .checked_mul(o.d)?
            .checked_add(o.n.checked_mul(self.d)?)?;
        Rat128::make(n, self.d.checked_mul(o.d)?)
    }
    fn r_sub(&self, o: &Self) -> Option<Self> {
        self.r_add(&o.r_neg())
    }
    fn r_mul(&self, o: &Self) -> Option<Self> {
        Rat128::make(self.n.checked_mul(o.n)?, self.d.checked_mul(o.d)?)
    }
    fn r_div(&self, o: &Self) -> Option<Self> {
        debug_assert!(o.n != 0);
        Rat128::make(self.n.checked_mul(o.d)?, self.d.checked_mul(o.n)?)
    }
    fn r_neg(&self) -> Self {
        Rat128 {
            n: -self.n,
            d: self.d,
        }
    }
}

impl Rat for BigRational {
    fn r_zero() -> Self {
        Zero::zero()
    }
    fn r_one() -> Self {
        One::one()
    }
    fn from_big(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
    fn to_big(&self) -> BigRational {
        self.clone()
    }
    fn r_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn r_is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn r_add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn r_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn r_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn r_div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn r_neg(&self) -> Self {
        -self
    }
}

/// Standard-form phase 1: minimize the artificial sum subject to
/// `M y = d`, `y ≥ 0`, `d ≥ 0`. Returns `None` on arithmetic overflow,
/// otherwise the feasibility answer with a witness for the `y` columns.
#[allow(clippy::type_complexity)]
fn phase1<T: Rat>(ncols: usize, rows: &[(Vec<T>, T)]) -> Option<Option<Vec<T>>> {
    let m = rows.len();
    let ntot = ncols + m;
    let mut table: Vec<Vec<T>> = Vec::with_capacity(m);
    let mut rhs: Vec<T> = Vec::with_capacity(m);
    for (i, (coeffs, b)) in rows.iter().enumerate() {
        debug_assert_eq!(coeffs.len(), ncols);
        let mut row = coeffs.clone();
        row.extend((0..m).map(|j| if j == i { T::r_one() } else { T::r_zero() }));
        table.push(row);
        rhs.push(b.clone());
    }
    let mut basis: Vec<usize> = (ncols..ntot).collect();

    // objective expressed in nonbasic columns: w = wval − Σ z[j]·y_j
    let mut z: Vec<T> = vec![T::r_zero(); ntot];
    let mut wval = T::r_zero();
    for i in 0..m {
        for (j, zj) in z.iter_mut().enumerate().take(ncols) {
            *zj = zj.r_add(&table[i][j])?;
        }
        wval = wval.r_add(&rhs[i])?;
    }

    loop {
        // Bland: entering column = lowest index with positive objective coefficient
        let Some(e) = (0..ntot).find(|&j| z[j].r_is_positive()) else {
            break;
        };
        // ratio test, Bland tie-break on smallest basic variable index
        let mut best: Option<(T, usize)> = None;
        for i in 0..m {
            if !table[i][e].r_is_positive() {
                continue;
            }
            let ratio = rhs[i].r_div(&table[i][e])?;
            best = match best {
                None => Some((ratio, i)),
                Some((r, bi)) => {
                    let cmp = ratio.r_sub(&r)?;
                    if cmp.r_is_positive() || (cmp.r_is_zero() && basis[i] >= basis[bi]) {
                        Some((r, bi))
                    } else {
                        Some((ratio, i))
                    }
                }
            };
        }
        let (_, r) = best.expect("phase-1 objective is bounded below");
        // pivot on (r, e)
        let p = table[r][e].clone();
        for v in table[r].iter_mut() {
            *v = v.r_div(&p)?;
        }
        rhs[r] = rhs[r].r_div(&p)?;
        for i in 0..m {
            if i == r || table[i][e].r_is_zero() {
                continue;
            }
            let f = table[i][e].clone();
            for j in 0..ntot {
                let delta = f.r_mul(&table[r][j])?;
                table[i][j] = table[i][j].r_sub(&delta)?;
            }
            let delta = f.r_mul(&rhs[r])?;
            rhs[i] = rhs[i].r_sub(&delta)?;
        }
        let f = z[e].clone();
        for j in 0..ntot {
            let delta = f.r_mul(&table[r][j])?;
            z[j] = z[j].r_sub(&delta)?;
        }
        let delta = f.r_mul(&rhs[r])?;
        wval = wval.r_sub(&delta)?;
        basis[r] = e;
    }

    if !wval.r_is_zero() {
        return Some(None);
    }
    let mut y = vec![T::r_zero(); ncols];
    for (i, &b) in basis.iter().enumerate() {
        if b < ncols {
            y[b] = rhs[i].clone();
        }
    }
    Some(Some(y))
}

fn solve_standard<T: Rat>(
    ncols: usize,
    rows: &[(Vec<BigRational>, BigRational)],
) -> Option<Option<Vec<BigRational>>> {
    let converted: Option<Vec<(Vec<T>, T)>> = rows
        .iter()
        .map(|(c, b)| {
            let cc: Option<Vec<T>> = c.iter().map(T::from_big).collect();
            Some((cc?, T::from_big(b)?))
        })
        .collect();
    let converted = converted?;
    let result = phase1::<T>(ncols, &converted)?;
    Some(result.map(|y| y.iter().map(Rat::to_big).collect()))
}

/// Decides feasibility of `{ x : constraints }` with the given variable
/// kinds, returning an exact witness when feasible.
pub fn feasible(kinds: &[VarKind], constraints: &[Constraint]) -> Option<Vec<BigRational>> {
    // column layout: per-variable columns first, then one surplus per Ge row
    let mut col_of_var: Vec<(usize, bool)> = Vec::with_capacity(kinds.len()); // (col, split)
    let mut ncols = 0usize;
    for k in kinds {
        match k {
            VarKind::Free => {
                col_of_var.push((ncols, true));
                ncols += 2;
            }
            VarKind::NonNeg => {
                col_of_var.push((ncols, false));
                ncols += 1;
            }
        }
    }
    let nge = constraints.iter().filter(|c| c.rel == Rel::Ge).count();
    let first_surplus = ncols;
    ncols += nge;

    let mut rows: Vec<(Vec<BigRational>, BigRational)> = Vec::with_capacity(constraints.len());
    let mut surplus = 0usize;
    for c in constraints {
        assert_eq!(c.coeffs.len(), kinds.len(), "constraint arity mismatch");
        let mut row = vec![BigRational::zero(); ncols];
        for (v, coeff) in c.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let (col, split) = col_of_var[v];
            row[col] = coeff.clone();
            if split {
                row[col + 1] = -coeff.clone();
            }
        }
        if c.rel == Rel::Ge {
            row[first_surplus + surplus] = -BigRational::one();
            surplus += 1;
        }
        let mut rhs = c.rhs.clone();
        if rhs.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            rhs = -rhs;
        }
        rows.push((row, rhs));
    }

    let y = match solve_standard::<Rat128>(ncols, &rows) {
        Some(answer) => answer?,
        // i128 overflow: restart with arbitrary precision
        None => solve_standard::<BigRational>(ncols, &rows).expect("bigint path is total")?,
    };

    let mut x = Vec::with_capacity(kinds.len());
    for &(col, split) in &col_of_var {
        if split {
            x.push(&y[col] - &y[col + 1]);
        } else {
            x.push(y[col].clone());
        }
    }
    Some(x)
}

/// Strict feasibility of the homogeneous system `A·t = 0` with `t_j > 0`
/// for every designated `j` and `t_j` free otherwise.
///
/// Encoded exactly as `t_j = 1 + u_j, u_j ≥ 0` on the designated block; a
/// homogeneous system has a strictly positive solution iff it has one with
/// the designated block `≥ 1`. Returns a rational witness `t`.
pub fn lp_strict_feasible(
    matrix: &[Vec<BigRational>],
    designated: &[bool],
) -> Option<Vec<BigRational>> {
    let nvars = designated.len();
    let kinds: Vec<VarKind> = designated
        .iter()
        .map(|&d| if d { VarKind::NonNeg } else { VarKind::Free })
        .collect();
    let constraints: Vec<Constraint> = matrix
        .iter()
        .map(|row| {
            assert_eq!(row.len(), nvars, "matrix arity mismatch");
            let shift: BigRational = row
                .iter()
                .zip(designated.iter())
                .filter(|(_, &d)| d)
                .map(|(a, _)| a.clone())
                .sum();
            Constraint::eq(row.clone(), -shift)
        })
        .collect();
    let u = feasible(&kinds, &constraints)?;
    Some(
        u.into_iter()
            .zip(designated.iter())
            .map(|(v, &d)| if d { v + BigRational::one() } else { v })
            .collect(),
    )
}
