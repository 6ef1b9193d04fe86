//! Exact computation of the Kekulé-number array `T(n, m)` of zigzag
//! benzenoids and the polynomial, matrix and generating-function objects
//! built around it, together with brute-force oracles and floating-point
//! spectral checks.

pub mod combin;
pub mod exact;
pub mod matrixcore;
pub mod polyfam;
pub mod kekule;
pub mod oracles;
pub mod spectral;
