//! The complex `0 -> S(-r) -> S^r(-2) -> S^r(-1) -> M_{C_r} -> 0` of the
//! edge module of the cycle `C_r`, with `φ1 = A` and `φ2 = (u_1, ..., u_r)^T`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::SymalgError;
use crate::betti::rank;
use crate::ring::{Monomial, MonomialOrder, OrderSpec, Polynomial, VarContext};

const EVAL_SEED: u64 = 0x5eed_c7c1e;

#[derive(Clone, Debug)]
pub struct CycleComplex {
    pub r: usize,
    pub ctx: VarContext,
    pub order: MonomialOrder,
    pub phi1: Vec<Vec<Polynomial>>,
    pub phi2: Vec<Polynomial>,
}

pub fn cycle_complex(r: usize) -> Result<CycleComplex, SymalgError> {
    if !(4..=7).contains(&r) {
        return Err(SymalgError::CycleLength(r));
    }
    let names: Vec<String> = (1..=r).map(|i| format!("x{i}")).collect();
    let ctx = VarContext::new(&names)?;
    let order = OrderSpec::lex(&names).compile(&ctx)?;
    let var = |i: usize| Polynomial::monomial(Monomial::var(r, i));
    let mut phi1 = vec![vec![Polynomial::zero(); r]; r];
    // Column c (0-based, c < r - 1) encodes x_{c+1} e_{c+2} - x_{c+2} e_{c+1};
    // the last column encodes x_r e_1 - x_1 e_r.
    for c in 0..r - 1 {
        phi1[c][c] = var(c + 1).neg();
        phi1[c + 1][c] = var(c);
    }
    phi1[0][r - 1] = var(r - 1);
    phi1[r - 1][r - 1] = var(0).neg();
    let all = Monomial::squarefree(r, 0..r);
    let phi2 = (0..r)
        .map(|i| {
            let (a, b) = if i + 1 < r { (i, i + 1) } else { (0, r - 1) };
            Ok(Polynomial::monomial(all.quotient(&Monomial::squarefree(r, [a, b]))?))
        })
        .collect::<Result<Vec<_>, SymalgError>>()?;
    Ok(CycleComplex { r, ctx, order, phi1, phi2 })
}

impl CycleComplex {
    /// `φ1 · φ2`.
    pub fn product(&self) -> Result<Vec<Polynomial>, SymalgError> {
        let mut out = Vec::with_capacity(self.r);
        for row in &self.phi1 {
            let mut acc = Polynomial::zero();
            for (a, b) in row.iter().zip(&self.phi2) {
                acc = acc.add(&a.mul(b, &self.order)?, &self.order);
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// The minor of `φ1` with row `row` and column `col` deleted.
    pub fn minor(&self, row: usize, col: usize) -> Result<Polynomial, SymalgError> {
        let rows: Vec<usize> = (0..self.r).filter(|&i| i != row).collect();
        let cols: Vec<usize> = (0..self.r).filter(|&j| j != col).collect();
        det(&self.phi1, &rows, &cols, &self.order)
    }
}

/// Laplace expansion along the first listed row.
fn det(m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize], order: &MonomialOrder) -> Result<Polynomial, SymalgError> {
    if rows.is_empty() {
        return Ok(Polynomial::constant(order.nvars(), BigRational::one()));
    }
    let mut acc = Polynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[rows[0]][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&det(m, &rows[1..], &rest, order)?, order)?;
        acc = if k % 2 == 0 { acc.add(&term, order) } else { acc.sub(&term, order) };
    }
    Ok(acc)
}

fn eval(f: &Polynomial, point: &[BigRational]) -> BigRational {
    let mut total = BigRational::zero();
    for t in f.terms() {
        let mut v = t.coeff.clone();
        for (i, &e) in t.mono.exps().iter().enumerate() {
            for _ in 0..e {
                v *= &point[i];
            }
        }
        total += v;
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// How a matrix rank was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankMethod {
    /// The evaluated rank is full, so it is the generic rank.
    Evaluation,
    /// Every minor one size above the evaluated rank vanishes identically.
    SymbolicMinors,
}

/// Rank over the fraction field. Evaluation at a point never overestimates;
/// a non-full evaluated rank `k` is accepted once all `(k+1)`-minors vanish,
/// and raised otherwise.
fn poly_rank(m: &[Vec<Polynomial>], order: &MonomialOrder, point: &[BigRational]) -> Result<(usize, RankMethod), SymalgError> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let numeric: Vec<Vec<BigRational>> = m.iter().map(|row| row.iter().map(|f| eval(f, point)).collect()).collect();
    let mut k = rank(numeric);
    if k == nrows.min(ncols) {
        return Ok((k, RankMethod::Evaluation));
    }
    while k < nrows.min(ncols) {
        let mut nonzero = false;
        'search: for rows in subsets(nrows, k + 1) {
            for cols in subsets(ncols, k + 1) {
                if !det(m, &rows, &cols, order)?.is_zero() {
                    nonzero = true;
                    break 'search;
                }
            }
        }
        if !nonzero {
            break;
        }
        k += 1;
    }
    Ok((k, RankMethod::SymbolicMinors))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleComplexReport {
    pub r: usize,
    pub product_zero: bool,
    /// The minor deleting row 1 and column `r`.
    pub minor_without_row1_col_r: String,
    /// Equals `±x_1 ⋯ x_{r-1}`.
    pub minor_is_x1_to_xr1: bool,
    /// The minor deleting the last row and column.
    pub minor_without_last_row_col: String,
    pub gcd_is_one: bool,
    pub rank_phi1: usize,
    pub rank_phi1_method: RankMethod,
    pub rank_phi2: usize,
    pub rank_phi2_method: RankMethod,
    /// `(β_0, β_1, β_2)` of `M_{C_r}`.
    pub betti: [usize; 3],
    /// Generator degrees of the three free modules.
    pub shifts: [usize; 3],
    pub linear_resolution: bool,
}

pub fn cycle_complex_checks(r: usize) -> Result<CycleComplexReport, SymalgError> {
    let cx = cycle_complex(r)?;
    let product_zero = cx.product()?.iter().all(Polynomial::is_zero);

    let m1 = cx.minor(0, r - 1)?;
    let target = Monomial::squarefree(r, 0..r - 1);
    let minor_is_x1_to_xr1 = m1.len() == 1 && m1.terms()[0].mono == target && {
        let c = &m1.terms()[0].coeff;
        c.is_one() || (-c).is_one()
    };
    let m2 = cx.minor(r - 1, r - 1)?;

    let mut gcd = Monomial::squarefree(r, 0..r);
    for u in &cx.phi2 {
        gcd = gcd.gcd(u.leading_monomial().expect("u_i is a monomial"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(EVAL_SEED);
    let point: Vec<BigRational> = (0..r)
        .map(|_| BigRational::new(BigInt::from(rng.gen_range(1..=997)), BigInt::from(rng.gen_range(1..=97))))
        .collect();
    let (rank_phi1, rank_phi1_method) = poly_rank(&cx.phi1, &cx.order, &point)?;
    let column: Vec<Vec<Polynomial>> = cx.phi2.iter().map(|u| vec![u.clone()]).collect();
    let (rank_phi2, rank_phi2_method) = poly_rank(&column, &cx.order, &point)?;

    // The complex is exact when φ1φ2 = 0, rank φ1 + rank φ2 = r and the ideals of
    // maximal nonvanishing minors have grade at least 1 and 2.
    let exact = product_zero && rank_phi1 + rank_phi2 == r && !m1.is_zero() && gcd.is_one();
    let shifts = [1, 2, r];
    Ok(CycleComplexReport {
        r,
        product_zero,
        minor_without_row1_col_r: m1.render(&cx.ctx),
        minor_is_x1_to_xr1,
        minor_without_last_row_col: m2.render(&cx.ctx),
        gcd_is_one: gcd.is_one(),
        rank_phi1,
        rank_phi1_method,
        rank_phi2,
        rank_phi2_method,
        betti: if exact { [r, r, 1] } else { [0, 0, 0] },
        shifts,
        linear_resolution: shifts[2] == shifts[0] + 2,
    })
}
