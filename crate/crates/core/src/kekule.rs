//! The array `T(n, m)` and its generating functions, plus the derived array
//! `M` and the column generating functions `M_m(x)`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::combin::{binomial, factorial};
use crate::exact::{rat, ExactError, Poly, Rat, RatFn};
use crate::polyfam::p_poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KekuleError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// Memoized `T(n, m)`, stored column by column.
///
/// `T(n, 0) = T(0, m) = 1` and
/// `T(n, m) = T(n, m-1) + Σ_{k=0}^{⌊(n-1)/2⌋} T(2k, m-1) T(n-1-2k, m)`.
///
/// The table only grows. Readers share a lock; a fill takes the write lock,
/// and since every cell is a deterministic value, concurrent fills end in
/// the same state as a sequential one.
#[derive(Debug, Default)]
pub struct TTable {
    columns: RwLock<Vec<Vec<BigInt>>>,
}

impl TTable {
    pub fn new() -> TTable {
        TTable::default()
    }

    pub fn get(&self, n: usize, m: usize) -> BigInt {
        {
            let cols = self.columns.read().expect("table poisoned");
            if let Some(v) = cols.get(m).and_then(|c| c.get(n)) {
                return v.clone();
            }
        }
        let mut cols = self.columns.write().expect("table poisoned");
        fill(&mut cols, n, m);
        cols[m][n].clone()
    }

    /// `T(0..len, m)`
    pub fn column(&self, m: usize, len: usize) -> Vec<BigInt> {
        if len == 0 {
            return Vec::new();
        }
        self.get(len - 1, m);
        let cols = self.columns.read().expect("table poisoned");
        cols[m][..len].to_vec()
    }

    /// `T(n, 0..len)`
    pub fn row(&self, n: usize, len: usize) -> Vec<BigInt> {
        if len == 0 {
            return Vec::new();
        }
        self.get(n, len - 1);
        let cols = self.columns.read().expect("table poisoned");
        (0..len).map(|m| cols[m][n].clone()).collect()
    }
}

fn fill(cols: &mut Vec<Vec<BigInt>>, n: usize, m: usize) {
    while cols.len() <= m {
        cols.push(Vec::new());
    }
    for c in 0..=m {
        while cols[c].len() <= n {
            let r = cols[c].len();
            let v = if r == 0 || c == 0 {
                BigInt::one()
            } else {
                let mut acc = cols[c - 1][r].clone();
                for k in 0..=(r - 1) / 2 {
                    acc += &cols[c - 1][2 * k] * &cols[c][r - 1 - 2 * k];
                }
                acc
            };
            cols[c].push(v);
        }
    }
}

fn table() -> &'static TTable {
    static TABLE: OnceLock<TTable> = OnceLock::new();
    TABLE.get_or_init(TTable::new)
}

/// `T(n, m)` from the process-wide table.
pub fn t_value(n: usize, m: usize) -> BigInt {
    table().get(n, m)
}

pub fn t_column(m: usize, len: usize) -> Vec<BigInt> {
    table().column(m, len)
}

pub fn t_row(n: usize, len: usize) -> Vec<BigInt> {
    table().row(n, len)
}

fn rat_int(v: &BigInt) -> Rat {
    Rat::from_integer(v.clone())
}

/// The polynomial `p` of degree at most `n` with `p(m) = T(n, m)`, from
/// Newton forward differences at `m = 0..n`. Checked at `m = n+1, n+2`.
pub fn poly_of_row(n: usize) -> Result<Poly, KekuleError> {
    let values = t_row(n, n + 3);
    let mut diffs: Vec<BigInt> = values[..=n].to_vec();
    let mut leading = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // Σ_k Δ^k p(0) · C(m, k), with C(m, k) = m(m-1)...(m-k+1) / k!
    let mut p = Poly::zero();
    let mut falling = Poly::one();
    for (k, d) in leading.iter().enumerate() {
        let term = falling.scale(&Rat::new(d.clone(), factorial(k as u64)));
        p = p + term;
        falling = &falling * &Poly::from_coeffs(vec![rat(-(k as i64)), rat(1)]);
    }
    for m in [n + 1, n + 2] {
        if p.eval(&rat(m as i64)) != rat_int(&values[m]) {
            return Err(KekuleError::Inconsistent(format!("row polynomial {n} misses T({n}, {m})")));
        }
    }
    Ok(p)
}

/// Numerator `H_n` of the row generating function:
/// coefficient `j` is `Σ_{k=0}^{j} (-1)^k C(n+1, k) T(n, j-k)`.
/// Coefficients past `max(0, n-2)` must vanish; that is checked, not assumed.
pub fn h_poly(n: usize) -> Result<Poly, KekuleError> {
    let top = n + 2;
    let row = t_row(n, top + 1);
    let coeffs: Vec<BigInt> = (0..=top)
        .map(|j| {
            (0..=j)
                .map(|k| {
                    let term = binomial(n as u64 + 1, k as u64) * &row[j - k];
                    if k % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    let bound = n.saturating_sub(2);
    if let Some(j) = (bound + 1..=top).find(|&j| !coeffs[j].is_zero()) {
        return Err(KekuleError::Inconsistent(format!("H_{n} has nonzero coefficient at x^{j}")));
    }
    Ok(Poly::from_bigints(coeffs))
}

/// `(1 - x)^k`
fn one_minus_x_pow(k: u32) -> Poly {
    Poly::from_ints(&[1, -1]).pow(k)
}

/// `Σ_m T(n, m) x^m = H_n(x) / (1 - x)^(n+1)`.
pub fn row_gf(n: usize) -> Result<RatFn, KekuleError> {
    Ok(RatFn::make(h_poly(n)?, one_minus_x_pow(n as u32 + 1))?)
}

/// `Σ_n T(n, m) x^n = P_m(-x) / P_{m+1}(x)`.
pub fn col_gf(m: usize) -> RatFn {
    RatFn::make(p_poly(m).reflect(), p_poly(m + 1)).expect("P_{m+1}(0) = 1")
}

/// Same function from the continued fraction
/// `F(m, x) = 1 / (-x + F(m-1, -x))`, `F(0, x) = 1 / (1 - x)`.
pub fn col_gf_cf(m: usize) -> RatFn {
    let minus_x = RatFn::from_poly(Poly::from_ints(&[0, -1]));
    let mut f = RatFn::make(Poly::one(), Poly::from_ints(&[1, -1])).expect("nonzero");
    for _ in 0..m {
        f = minus_x.add(&f.reflect()).recip().expect("never zero: value 1 at the origin");
    }
    f
}

/// `M_{i,j}`: with `n = i + j + 2`, `Σ_{k=0}^{j} (-1)^k C(n+1, k) T(n, j-k)`.
pub fn m_entry(i: usize, j: usize) -> BigInt {
    let n = i + j + 2;
    let row = t_row(n, j + 1);
    (0..=j)
        .map(|k| {
            let term = binomial(n as u64 + 1, k as u64) * &row[j - k];
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// A rectangular block `M_{i,j}`, `0 <= i <= max_i`, `0 <= j <= max_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MArray {
    rows: Vec<Vec<BigInt>>,
}

impl MArray {
    pub fn build(max_i: usize, max_j: usize) -> MArray {
        let rows = (0..=max_i).map(|i| (0..=max_j).map(|j| m_entry(i, j)).collect()).collect();
        MArray { rows }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&BigInt> {
        self.rows.get(i).and_then(|r| r.get(j))
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}

/// `M_m(x) = Σ_i M_{i,m} x^i`, together with the unreduced product
/// denominator `Π_{k=1}^{m+1} P_k(x)^(m+2-k)` and the numerator over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MRowGf {
    pub gf: RatFn,
    pub structural_den: Poly,
    pub structural_num: Poly,
    /// Terms below `x^(m+3)` removed from the derivative sum before dividing
    /// by `x^(m+3)`. Nonzero only for `m = 0`, where the sum is `x / (1-x)`.
    pub low_order_correction: Poly,
}

/// `Π_{k=1}^{m+1} P_k(x)^(m+2-k)`
pub fn m_structural_den(m: usize) -> Poly {
    (1..=m + 1).fold(Poly::one(), |acc, k| &acc * &p_poly(k).pow((m + 2 - k) as u32))
}

/// Builds `M_m(x)` as `x^{-m-2} Σ_{k=0}^{m} (-1)^k (x F(m-k, x))^{(k)} x^{k-1} / k!`.
///
/// The sum is formed as `S = Σ (-1)^k (x F(m-k))^{(k)} x^k / k!` and then
/// divided by `x^(m+3)`, so every intermediate has a denominator that is
/// nonzero at the origin. The result's series is checked against `m_entry`.
pub fn m_row_gf(m: usize) -> Result<MRowGf, KekuleError> {
    let x = Poly::x();
    let mut sum = RatFn::zero();
    for k in 0..=m {
        let xf = col_gf(m - k).mul_poly(&x);
        let term = xf
            .nth_derivative(k)
            .mul_poly(&Poly::monomial(Rat::new(BigInt::one(), factorial(k as u64)), k));
        sum = if k % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
    }
    let shift = m + 3;
    let low = Poly::from_coeffs(sum.series(shift)?);
    let corrected = sum.sub(&RatFn::from_poly(low.clone()));
    let gf = corrected.div_x_pow(shift)?;

    let check = 12 + 2 * m;
    let series = gf.series(check)?;
    for (i, c) in series.iter().enumerate() {
        if *c != rat_int(&m_entry(i, m)) {
            return Err(KekuleError::Inconsistent(format!("M_{m}(x) coefficient {i} disagrees with M_{{{i},{m}}}")));
        }
    }

    let structural_den = m_structural_den(m);
    let cofactor = structural_den
        .exact_div(gf.den())
        .ok_or_else(|| KekuleError::Inconsistent(format!("reduced denominator of M_{m} does not divide the product form")))?;
    let structural_num = gf.num() * &cofactor;
    Ok(MRowGf { gf, structural_den, structural_num, low_order_correction: low })
}

/// `CF(n, x) = ⌊(n+1)/2⌋ x - x P'_{n+1}(x) / P_{n+1}(x)`.
pub fn cycle_gf(n: usize) -> RatFn {
    let p = p_poly(n + 1);
    let log_deriv = RatFn::make(&p.derivative() * &Poly::x(), p).expect("P(0) = 1");
    let linear = RatFn::from_poly(Poly::monomial(rat(((n + 1) / 2) as i64), 1));
    linear.sub(&log_deriv)
}

/// First `count` coefficients of `CF(n, x)`; coefficient 0 is 0.
pub fn cycle_gf_coeffs(n: usize, count: usize) -> Result<Vec<BigInt>, KekuleError> {
    integer_series(&cycle_gf(n), count)
}

/// Series of `f` whose coefficients must all be integers.
pub fn integer_series(f: &RatFn, count: usize) -> Result<Vec<BigInt>, KekuleError> {
    f.series(count)?
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            if c.denom().is_one() {
                Ok(c.numer().clone())
            } else {
                Err(KekuleError::Inconsistent(format!("non-integer coefficient {c} at x^{i}")))
            }
        })
        .collect()
}

/// `n!` times the leading coefficient of the row polynomial, as an integer
/// when it is one.
pub fn scaled_leading_coefficient(n: usize) -> Result<Option<BigInt>, KekuleError> {
    let p = poly_of_row(n)?;
    let lead = p.leading().cloned().unwrap_or_else(Rat::zero) * Rat::from_integer(factorial(n as u64));
    Ok(if lead.denom().is_one() { Some(lead.numer().clone()) } else { None })
}
