//! Exact integer matrices: the unit-primitive family `A_n`, the exchange
//! matrix `X_n`, `Ā_n = A_n - X_n`, the all-ones `J_n`, the tridiagonal
//! `T_n`/`T'_n`, bilinear forms `α^T M^k β`, a generic characteristic
//! polynomial and adjugate entries of `I - x A_n`.
//!
//! Indices in the public API are 1-based, matching the usual matrix notation;
//! storage is row-major and 0-based.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::{Poly, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix order must be at least 1")]
    EmptyOrder,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index ({i}, {j}) out of range for order {order}")]
    IndexOutOfRange { i: usize, j: usize, order: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntVector(Vec<BigInt>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    /// Anti-identity: 1 exactly where `i + j = n + 1`.
    Exchange,
    /// `A_n - X_n`.
    Abar,
    AllOnes,
    /// `T'_n` plus a 1 at (1, 1).
    T,
    /// Path adjacency: 1 exactly where `|i - j| = 1`.
    TPrime,
}

impl IntMatrix {
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> BigInt) -> Result<IntMatrix, MatrixError> {
        if order == 0 {
            return Err(MatrixError::EmptyOrder);
        }
        let mut entries = Vec::with_capacity(order * order);
        for i in 1..=order {
            for j in 1..=order {
                entries.push(f(i, j));
            }
        }
        Ok(IntMatrix { order, entries })
    }

    fn indicator(order: usize, pred: impl Fn(usize, usize) -> bool) -> Result<IntMatrix, MatrixError> {
        IntMatrix::from_fn(order, |i, j| if pred(i, j) { BigInt::one() } else { BigInt::zero() })
    }

    pub fn identity(order: usize) -> Result<IntMatrix, MatrixError> {
        IntMatrix::indicator(order, |i, j| i == j)
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntMatrix, MatrixError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(MatrixError::DimensionMismatch { expected: n, got: bad.len() });
        }
        IntMatrix::from_fn(n, |i, j| BigInt::from(rows[i - 1][j - 1]))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[(i - 1) * self.order + (j - 1)]
    }

    fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.order).map(<[BigInt]>::to_vec).collect()
    }

    fn check_same(&self, other: &IntMatrix) -> Result<(), MatrixError> {
        if self.order != other.order {
            return Err(MatrixError::DimensionMismatch { expected: self.order, got: other.order });
        }
        Ok(())
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        self.check_same(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(IntMatrix { order: self.order, entries })
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        self.check_same(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(IntMatrix { order: self.order, entries })
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix { order: self.order, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        self.check_same(other)?;
        let n = self.order;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(IntMatrix { order: n, entries })
    }

    /// `M^k` by repeated squaring; `M^0 = I`.
    pub fn pow(&self, k: u64) -> IntMatrix {
        let mut result = IntMatrix::identity(self.order).expect("order >= 1");
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        result
    }

    pub fn mul_vec(&self, v: &IntVector) -> Result<IntVector, MatrixError> {
        if v.len() != self.order {
            return Err(MatrixError::DimensionMismatch { expected: self.order, got: v.len() });
        }
        let n = self.order;
        Ok(IntVector(
            (0..n)
                .map(|i| {
                    (0..n)
                        .filter(|&j| !self.at(i, j).is_zero())
                        .map(|j| self.at(i, j) * &v.0[j])
                        .sum()
                })
                .collect(),
        ))
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.order;
        IntMatrix::from_fn(n, |i, j| self.get(j, i).clone()).expect("order >= 1")
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.at(i, i).clone()).sum()
    }

    /// `α β^T`
    pub fn outer(alpha: &IntVector, beta: &IntVector) -> Result<IntMatrix, MatrixError> {
        if alpha.len() != beta.len() {
            return Err(MatrixError::DimensionMismatch { expected: alpha.len(), got: beta.len() });
        }
        IntMatrix::from_fn(alpha.len(), |i, j| &alpha.0[i - 1] * &beta.0[j - 1])
    }
}

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Result<IntVector, MatrixError> {
        if entries.is_empty() {
            return Err(MatrixError::EmptyOrder);
        }
        Ok(IntVector(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Result<IntVector, MatrixError> {
        IntVector::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    /// `u_n`, all ones.
    pub fn ones(n: usize) -> Result<IntVector, MatrixError> {
        IntVector::new(vec![BigInt::one(); n])
    }

    /// `v_{n,i}`, the `i`-th unit vector (1-based).
    pub fn unit(n: usize, i: usize) -> Result<IntVector, MatrixError> {
        if i == 0 || i > n {
            return Err(MatrixError::IndexOutOfRange { i, j: 1, order: n });
        }
        let mut e = vec![BigInt::zero(); n];
        e[i - 1] = BigInt::one();
        IntVector::new(e)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, other: &IntVector) -> Result<BigInt, MatrixError> {
        if self.len() != other.len() {
            return Err(MatrixError::DimensionMismatch { expected: self.len(), got: other.len() });
        }
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    /// Drops the last component.
    pub fn truncated(&self) -> Result<IntVector, MatrixError> {
        IntVector::new(self.0[..self.0.len() - 1].to_vec())
    }

    pub fn sub(&self, other: &IntVector) -> Result<IntVector, MatrixError> {
        if self.len() != other.len() {
            return Err(MatrixError::DimensionMismatch { expected: self.len(), got: other.len() });
        }
        IntVector::new(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `v^T M`
    pub fn mul_mat(&self, m: &IntMatrix) -> Result<IntVector, MatrixError> {
        m.transpose().mul_vec(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// `A_n`: entry `(i, j)` is 1 iff `i + j <= n + 1`.
pub fn unit_primitive(n: usize) -> Result<IntMatrix, MatrixError> {
    IntMatrix::indicator(n, |i, j| i + j <= n + 1)
}

pub fn special_matrix(n: usize, kind: MatrixKind) -> Result<IntMatrix, MatrixError> {
    match kind {
        MatrixKind::Exchange => IntMatrix::indicator(n, |i, j| i + j == n + 1),
        MatrixKind::Abar => IntMatrix::indicator(n, |i, j| i + j <= n),
        MatrixKind::AllOnes => IntMatrix::indicator(n, |_, _| true),
        MatrixKind::TPrime => IntMatrix::indicator(n, |i, j| i.abs_diff(j) == 1),
        MatrixKind::T => IntMatrix::indicator(n, |i, j| i.abs_diff(j) == 1 || (i, j) == (1, 1)),
    }
}

/// `α^T M^k β` by `k` matrix-vector products.
pub fn bilinear(alpha: &IntVector, m: &IntMatrix, k: u64, beta: &IntVector) -> Result<BigInt, MatrixError> {
    if alpha.len() != m.order() {
        return Err(MatrixError::DimensionMismatch { expected: m.order(), got: alpha.len() });
    }
    let mut v = beta.clone();
    if v.len() != m.order() {
        return Err(MatrixError::DimensionMismatch { expected: m.order(), got: v.len() });
    }
    for _ in 0..k {
        v = m.mul_vec(&v)?;
    }
    alpha.dot(&v)
}

/// `α^T M^k β` for `k = 0..count`.
pub fn bilinear_series(
    alpha: &IntVector,
    m: &IntMatrix,
    beta: &IntVector,
    count: usize,
) -> Result<Vec<BigInt>, MatrixError> {
    for v in [alpha, beta] {
        if v.len() != m.order() {
            return Err(MatrixError::DimensionMismatch { expected: m.order(), got: v.len() });
        }
    }
    let mut out = Vec::with_capacity(count);
    let mut v = beta.clone();
    for k in 0..count {
        out.push(alpha.dot(&v)?);
        if k + 1 < count {
            v = m.mul_vec(&v)?;
        }
    }
    Ok(out)
}

/// `T̄(n, m) = u_m^T A_m^n v_{m,1}`.
pub fn tbar(n: u64, m: usize) -> Result<BigInt, MatrixError> {
    let a = unit_primitive(m)?;
    bilinear(&IntVector::ones(m)?, &a, n, &IntVector::unit(m, 1)?)
}

/// `det(xI - M)` by Faddeev–LeVerrier. All divisions are exact in the integers.
pub fn char_poly_generic(m: &IntMatrix) -> Poly {
    let n = m.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let identity = IntMatrix::identity(n).expect("order >= 1");
    let mut aux = IntMatrix::from_fn(n, |_, _| BigInt::zero()).expect("order >= 1");
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
        aux = m.mul(&aux).expect("same order").add(&identity.scale(&coeffs[n - k + 1])).expect("same order");
        let t = m.mul(&aux).expect("same order").trace();
        coeffs[n - k] = -t / BigInt::from(k);
    }
    Poly::from_bigints(coeffs)
}

/// Determinant of a square matrix of polynomials by fraction-free
/// (Bareiss) elimination; each division is exact.
pub fn poly_determinant(mut rows: Vec<Vec<Poly>>) -> Poly {
    let n = rows.len();
    if n == 0 {
        return Poly::one();
    }
    let mut sign = Rat::one();
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if rows[k][k].is_zero() {
            match (k + 1..n).find(|&r| !rows[r][k].is_zero()) {
                Some(r) => {
                    rows.swap(k, r);
                    sign = -sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &rows[i][j] * &rows[k][k] - &rows[i][k] * &rows[k][j];
                rows[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            rows[i][k] = Poly::zero();
        }
        prev = rows[k][k].clone();
    }
    rows[n - 1][n - 1].scale(&sign)
}

/// Entry `(i, j)` of the adjugate of `I - x A_n`, i.e. the signed `(j, i)`
/// minor, as a polynomial in `x`.
pub fn adjugate_entry(n: usize, i: usize, j: usize) -> Result<Poly, MatrixError> {
    if n == 0 {
        return Err(MatrixError::EmptyOrder);
    }
    if i == 0 || j == 0 || i > n || j > n {
        return Err(MatrixError::IndexOutOfRange { i, j, order: n });
    }
    let entry = |r: usize, c: usize| {
        let a = if r + c <= n + 1 { 1 } else { 0 };
        let d = if r == c { 1 } else { 0 };
        Poly::from_ints(&[d, -a])
    };
    let minor: Vec<Vec<Poly>> = (1..=n)
        .filter(|&r| r != j)
        .map(|r| (1..=n).filter(|&c| c != i).map(|c| entry(r, c)).collect())
        .collect();
    let det = poly_determinant(minor);
    Ok(if (i + j) % 2 == 0 { det } else { -det })
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.order))?;
        for row in self.entries.chunks(self.order) {
            let row: Vec<String> = row.iter().map(BigInt::to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
