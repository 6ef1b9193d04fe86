//! Brute-force counters for the combinatorial models behind `T(n, m)`.
//!
//! Each one walks its whole search space; none of them uses dynamic
//! programming, since that would just rebuild the transfer matrix and the
//! agreement checks would stop meaning anything.

use num_bigint::BigInt;
use thiserror::Error;

/// Largest raw search space an oracle call will walk.
pub const SEARCH_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search space {base}^{exponent} exceeds the budget of {SEARCH_BUDGET}")]
    Budget { base: u64, exponent: u64 },
    #[error("{0}")]
    InvalidArgument(String),
}

fn check_budget(base: usize, exponent: usize) -> Result<(), OracleError> {
    let err = OracleError::Budget { base: base as u64, exponent: exponent as u64 };
    let mut size: u128 = 1;
    for _ in 0..exponent {
        size = size.checked_mul(base as u128).ok_or_else(|| err.clone())?;
        if size > SEARCH_BUDGET {
            return Err(err);
        }
    }
    Ok(())
}

/// Advances `digits` through `[0, max]^len` in lexicographic order; false
/// once every tuple has been visited.
fn odometer_next(digits: &mut [usize], max: usize) -> bool {
    for d in digits.iter_mut().rev() {
        if *d < max {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

/// Weightings `m_1..m_n` of the path on `n` vertices with values in `[0, m]`
/// and `m_i + m_{i+1} <= m`, by depth-first search that cuts a branch as soon
/// as an adjacent pair overflows.
pub fn count_weighted_path(n: usize, m: usize) -> Result<BigInt, OracleError> {
    check_budget(m + 1, n)?;
    fn extend(remaining: usize, prev: usize, m: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        (0..=m - prev).map(|w| extend(remaining - 1, w, m)).sum()
    }
    Ok(BigInt::from(extend(n, 0, m)))
}

/// Integer points of the dilated polytope `m P(L_n)`: every point of the box
/// `[0, m]^n` is tested against all edge inequalities.
pub fn count_lattice_points(n: usize, m: usize) -> Result<BigInt, OracleError> {
    check_budget(m + 1, n)?;
    let mut point = vec![0usize; n];
    let mut count: u64 = 0;
    loop {
        if point.windows(2).all(|w| w[0] + w[1] <= m) {
            count += 1;
        }
        if !odometer_next(&mut point, m) {
            break;
        }
    }
    Ok(BigInt::from(count))
}

/// Magic labellings with magic sum `s` of the path on `n + 1` vertices with
/// a loop at every vertex. The `n` path-edge labels are enumerated; each loop
/// label is then forced to `s - m_{i-1} - m_i` (with `m_0 = m_{n+1} = 0`) and
/// the labelling counts when all of them are nonnegative.
pub fn count_magic_labellings(n: usize, s: usize) -> Result<BigInt, OracleError> {
    if n == 0 {
        return Err(OracleError::InvalidArgument("magic labellings need n >= 1".into()));
    }
    check_budget(s + 1, n)?;
    let mut edges = vec![0usize; n];
    let mut count: u64 = 0;
    loop {
        let loops_ok = (0..=n).all(|i| {
            let left = if i == 0 { 0 } else { edges[i - 1] };
            let right = if i == n { 0 } else { edges[i] };
            left + right <= s
        });
        if loops_ok {
            count += 1;
        }
        if !odometer_next(&mut edges, s) {
            break;
        }
    }
    Ok(BigInt::from(count))
}

/// Weightings of the cycle `C_k` with values in `[0, m]` and every pair of
/// cyclically adjacent weights summing to at most `m`.
pub fn count_weighted_cycle(k: usize, m: usize) -> Result<BigInt, OracleError> {
    if k < 3 {
        return Err(OracleError::InvalidArgument(format!("cycle length must be at least 3, got {k}")));
    }
    check_budget(m + 1, k)?;
    let mut weights = vec![0usize; k];
    let mut count: u64 = 0;
    loop {
        let ok = (0..k).all(|i| weights[i] + weights[(i + 1) % k] <= m);
        if ok {
            count += 1;
        }
        if !odometer_next(&mut weights, m) {
            break;
        }
    }
    Ok(BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn path_examples() {
        assert_eq!(count_weighted_path(2, 2).unwrap(), big(6));
        assert_eq!(count_weighted_path(3, 3).unwrap(), big(30));
        for m in 0..6 {
            assert_eq!(count_weighted_path(1, m).unwrap(), big(m as u64 + 1));
            assert_eq!(count_weighted_path(0, m).unwrap(), big(1));
        }
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(count_lattice_points(3, 1).unwrap(), big(5));
        assert_eq!(count_lattice_points(4, 2).unwrap(), big(31));
        assert_eq!(count_lattice_points(0, 4).unwrap(), big(1));
        for n in 0..5 {
            assert_eq!(count_lattice_points(n, 0).unwrap(), big(1));
        }
    }

    #[test]
    fn magic_examples() {
        assert_eq!(count_magic_labellings(3, 3).unwrap(), big(30));
        assert_eq!(count_magic_labellings(5, 2).unwrap(), big(70));
        for s in 0..5 {
            assert_eq!(count_magic_labellings(1, s).unwrap(), big(s as u64 + 1));
        }
        assert!(matches!(count_magic_labellings(0, 1), Err(OracleError::InvalidArgument(_))));
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(count_weighted_cycle(3, 1).unwrap(), big(4));
        assert_eq!(count_weighted_cycle(4, 1).unwrap(), big(7));
        assert_eq!(count_weighted_cycle(3, 0).unwrap(), big(1));
        assert!(matches!(count_weighted_cycle(2, 1), Err(OracleError::InvalidArgument(_))));
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(count_weighted_path(20, 20), Err(OracleError::Budget { base: 21, exponent: 20 }));
        assert!(count_lattice_points(9, 9).is_err());
        assert!(check_budget(10, 8).is_ok());
        assert!(check_budget(10, 9).is_err());
    }
}
