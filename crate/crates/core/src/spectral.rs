//! Floating-point closed forms for the spectrum of `A_n`: eigenvalues,
//! eigenvectors, spectral radius, the partial-fraction form of the column
//! generating function, and growth asymptotics.

use std::f64::consts::{E, PI};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::exact::Rat;
use crate::kekule::m_entry;
use crate::polyfam::chebyshev_u;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("order must be at least {min}, got {n}")]
    Order { n: usize, min: usize },
    #[error("index {j} out of range 1..={n}")]
    IndexOutOfRange { n: usize, j: usize },
    #[error("nmax = {nmax} must be at least m + 10 = {}", m + 10)]
    ShortColumn { m: usize, nmax: usize },
}

fn require_order(n: usize, min: usize) -> Result<(), SpectralError> {
    if n < min {
        return Err(SpectralError::Order { n, min });
    }
    Ok(())
}

fn parity_sign(e: usize) -> f64 {
    if e % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `θ_j = (2j-1)π/(2n+1)`
pub fn angle(n: usize, j: usize) -> f64 {
    (2 * j - 1) as f64 * PI / (2 * n + 1) as f64
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenData {
    pub order: usize,
    pub eigenvalues: Vec<f64>,
    pub angles: Vec<f64>,
}

/// `λ_{n,j} = (-1)^(n+1) / (2 cos θ_j)` for `j = 1..n`.
pub fn eigenvalues(n: usize) -> Result<EigenData, SpectralError> {
    require_order(n, 1)?;
    let angles: Vec<f64> = (1..=n).map(|j| angle(n, j)).collect();
    let s = parity_sign(n + 1);
    let eigenvalues = angles.iter().map(|t| s / (2.0 * t.cos())).collect();
    Ok(EigenData { order: n, eigenvalues, angles })
}

/// `1 / (2 sin(π / (2(2n+1))))`
pub fn spectral_radius(n: usize) -> Result<f64, SpectralError> {
    require_order(n, 1)?;
    Ok(1.0 / (2.0 * (PI / (2.0 * (2 * n + 1) as f64)).sin()))
}

/// `U_k(cos φ)` by evaluating the Chebyshev polynomial.
pub fn chebyshev_u_at_cos(k: usize, phi: f64) -> f64 {
    chebyshev_u(k).eval_f64(phi.cos())
}

/// The radius written as `U_n(cos(π/(2n+1)))`.
pub fn spectral_radius_u_form(n: usize) -> f64 {
    chebyshev_u_at_cos(n, PI / (2 * n + 1) as f64)
}

/// `U_{n-1}(δ_{n,j} / 2)` when `halved`, else `U_{n-1}(δ_{n,j})`, with
/// `δ_{n,j} = 2 cos θ_j`. Only one of the two reproduces the spectrum.
pub fn eigenvalues_u_form(n: usize, halved: bool) -> Result<Vec<f64>, SpectralError> {
    require_order(n, 1)?;
    let u = chebyshev_u(n - 1);
    Ok((1..=n)
        .map(|j| {
            let delta = 2.0 * angle(n, j).cos();
            u.eval_f64(if halved { delta / 2.0 } else { delta })
        })
        .collect())
}

/// Unit eigenvector of `A_n` for `λ_{n,j}`:
/// `2/√(2n+1) (η_1, ..., η_n)` with `η_1 = cos((2n-3)θ/2) / (2 cos θ)` and
/// `η_k = (-1)^(k+1) cos((2n-4k+3)θ/2)` for `k > 1`.
///
/// `θ_j` never equals `π/2`, so the first component is evaluated directly;
/// it loses digits only when some `θ_j` sits within about `1e-3` of `π/2`.
pub fn eigenvector(n: usize, j: usize) -> Result<Vec<f64>, SpectralError> {
    require_order(n, 2)?;
    if j == 0 || j > n {
        return Err(SpectralError::IndexOutOfRange { n, j });
    }
    let theta = angle(n, j);
    let scale = 2.0 / ((2 * n + 1) as f64).sqrt();
    let half = |c: i64| (c as f64 * theta / 2.0).cos();
    let n = n as i64;
    Ok((1..=n)
        .map(|k| {
            let eta = if k == 1 {
                half(2 * n - 3) / (2.0 * theta.cos())
            } else {
                parity_sign((k + 1) as usize) * half(2 * n - 4 * k + 3)
            };
            scale * eta
        })
        .collect())
}

/// `Σ_j γ_j / (1 - x_j x)`
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartialFraction {
    pub rates: Vec<f64>,
    pub weights: Vec<f64>,
}

impl PartialFraction {
    pub fn eval(&self, x: f64) -> f64 {
        self.rates.iter().zip(&self.weights).map(|(r, g)| g / (1.0 - r * x)).sum()
    }

    /// Coefficient of `x^k`: `Σ_j γ_j x_j^k`.
    pub fn coefficient(&self, k: u32) -> f64 {
        self.rates.iter().zip(&self.weights).map(|(r, g)| g * r.powi(k as i32)).sum()
    }
}

/// Decomposition of `F(n-1, x)`: rates `λ_{n,j}`, weights
/// `γ_{n,j} = (-1)^(n+1) 2 cos θ_j tan²θ_j / (2n+1)`.
pub fn partial_fractions(n: usize) -> Result<PartialFraction, SpectralError> {
    let data = eigenvalues(n)?;
    let s = parity_sign(n + 1);
    let weights = data
        .angles
        .iter()
        .map(|t| s * 2.0 * t.cos() * t.tan().powi(2) / (2 * n + 1) as f64)
        .collect();
    Ok(PartialFraction { rates: data.eigenvalues, weights })
}

/// Asymptotic value of `T(big_n, n-1)`:
/// `csc(φ)^(N-1) cot²(φ) / (2^(N-1) (2n+1))` with `φ = π/(2(2n+1))`.
pub fn asymp_weighted_path(n: usize, big_n: usize) -> Result<f64, SpectralError> {
    require_order(n, 1)?;
    let phi = PI / (2.0 * (2 * n + 1) as f64);
    let e = big_n as f64 - 1.0;
    let log = e * (1.0 / phi.sin()).ln() + 2.0 * (1.0 / phi.tan()).ln() - e * 2f64.ln() - ((2 * n + 1) as f64).ln();
    Ok(log.exp())
}

/// Asymptotic value of `T(n-1, n-1)`: `2^(n+1) n^(n-1) √e / π^n`.
pub fn asymp_diagonal(n: usize) -> Result<f64, SpectralError> {
    require_order(n, 1)?;
    let nf = n as f64;
    let log = (nf + 1.0) * 2f64.ln() + (nf - 1.0) * nf.ln() + 0.5 * E.ln() - nf * PI.ln();
    Ok(log.exp())
}

/// `a / b` for big integers, as a double.
pub fn big_ratio(a: &BigInt, b: &BigInt) -> f64 {
    Rat::new(a.clone(), b.clone()).to_f64().unwrap_or(f64::NAN)
}

/// Empirical growth of column `m` of the `M` array against the two limits
/// that have been proposed for it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthReport {
    pub m: usize,
    pub nmax: usize,
    pub ratio: f64,
    /// `U_m(cos(π/(2m+3)))`
    pub limit_2m3: f64,
    /// `1 / (2 sin(π/(2(2m+1))))`
    pub limit_2m1: f64,
    pub tolerance: f64,
}

impl GrowthReport {
    pub fn matches_2m3(&self) -> bool {
        (self.ratio - self.limit_2m3).abs() < self.tolerance
    }

    pub fn matches_2m1(&self) -> bool {
        (self.ratio - self.limit_2m1).abs() < self.tolerance
    }

    /// Exactly one candidate agrees with the ratio.
    pub fn decisive(&self) -> bool {
        self.matches_2m3() != self.matches_2m1()
    }
}

/// `M_{nmax,m} / M_{nmax-1,m}` compared at tolerance `1e-6`.
pub fn m_column_growth(m: usize, nmax: usize) -> Result<GrowthReport, SpectralError> {
    if nmax < m + 10 {
        return Err(SpectralError::ShortColumn { m, nmax });
    }
    let ratio = big_ratio(&m_entry(nmax, m), &m_entry(nmax - 1, m));
    Ok(GrowthReport {
        m,
        nmax,
        ratio,
        limit_2m3: chebyshev_u_at_cos(m, PI / (2 * m + 3) as f64),
        limit_2m1: 1.0 / (2.0 * (PI / (2.0 * (2 * m + 1) as f64)).sin()),
        tolerance: 1e-6,
    })
}

/// `F(n, x)` from `(-1)^(n+1) cos((2n+1)θ/2) / cos((2n+3)θ/2)` with
/// `cos θ = (-1)^n x / 2`. Requires `|x| < 2`.
pub fn f_trig(n: usize, x: f64) -> f64 {
    let theta = (parity_sign(n) * x / 2.0).acos();
    let k = (2 * n) as f64;
    parity_sign(n + 1) * ((k + 1.0) * theta / 2.0).cos() / ((k + 3.0) * theta / 2.0).cos()
}

/// `P_n(x)` from `(-1)^C(n+1,2) cos((2n+1)θ/2) / cos(θ/2)` with
/// `cos θ = (-1)^(n+1) x / 2`. Requires `|x| < 2`.
pub fn p_trig(n: usize, x: f64) -> f64 {
    let theta = (parity_sign(n + 1) * x / 2.0).acos();
    let s = parity_sign(n * (n + 1) / 2);
    s * ((2 * n + 1) as f64 * theta / 2.0).cos() / (theta / 2.0).cos()
}

/// One comparison of an exact or empirical value with a closed form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub quantity: String,
    pub exact_or_empirical: f64,
    pub formula_value: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Outside the regime the formula claims; shown but not judged.
    Excluded,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    Absolute(f64),
    Relative(f64),
}

impl Record {
    pub fn compare(quantity: impl Into<String>, actual: f64, formula: f64, tol: Tolerance) -> Record {
        let abs_err = (actual - formula).abs();
        let rel_err = if actual != 0.0 { abs_err / actual.abs() } else { abs_err };
        let ok = match tol {
            Tolerance::Absolute(t) => abs_err < t,
            Tolerance::Relative(t) => rel_err < t,
        };
        Record {
            quantity: quantity.into(),
            exact_or_empirical: actual,
            formula_value: formula,
            abs_err,
            rel_err,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        }
    }

    pub fn excluded(mut self) -> Record {
        self.verdict = Verdict::Excluded;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}
