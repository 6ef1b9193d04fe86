use kekule_core::exact::Poly;
use kekule_core::kekule::t_value;
use kekule_core::matrixcore::*;
use kekule_core::polyfam::{char_poly_a, char_poly_tprime, p_poly};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn ones(m: usize) -> IntVector {
    IntVector::ones(m).unwrap()
}

fn unit(m: usize, i: usize) -> IntVector {
    IntVector::unit(m, i).unwrap()
}

fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.mul(b).unwrap()
}

/// The seven identities relating `A_m`, `X`, `Ā_m = A_m - X` and `J_m`,
/// with `X` supplied by the caller. Returns the first identity that fails.
fn exchange_identities(m: usize, x: &IntMatrix) -> Result<(), &'static str> {
    let a = unit_primitive(m).unwrap();
    let abar = a.sub(x).unwrap();
    let j = special_matrix(m, MatrixKind::AllOnes).unwrap();
    let (u, v1) = (ones(m), unit(m, 1));
    if mul(&abar, x).add(&mul(x, &a)).unwrap() != j || mul(x, &abar).add(&mul(&a, x)).unwrap() != j {
        return Err("(1)");
    }
    if a.mul_vec(&v1).unwrap() != u {
        return Err("(2)");
    }
    if u.mul_mat(x).unwrap() != u {
        return Err("(3)");
    }
    if IntMatrix::outer(&a.mul_vec(&v1).unwrap(), &u).unwrap() != j {
        return Err("(4)");
    }
    if !mul(&abar, x).mul_vec(&v1).unwrap().is_zero() {
        return Err("(5)");
    }
    if mul(&a, x).mul_vec(&v1).unwrap() != v1 {
        return Err("(6)");
    }
    let lhs = bilinear(&u, &abar, 1, &v1).unwrap();
    let ubar = u.sub(&unit(m, m)).unwrap();
    let mid = bilinear(&ubar, &abar, 1, &v1).unwrap();
    let rhs = if m == 1 { BigInt::zero() } else { tbar(1, m - 1).unwrap() };
    if lhs != mid || mid != rhs {
        return Err("(7)");
    }
    Ok(())
}

#[test]
fn exchange_identities_holds_for_exchange_matrix() {
    for m in 1..=12 {
        let x = special_matrix(m, MatrixKind::Exchange).unwrap();
        assert_eq!(exchange_identities(m, &x), Ok(()), "m = {m}");
        assert_eq!(unit_primitive(m).unwrap().sub(&x).unwrap(), special_matrix(m, MatrixKind::Abar).unwrap());
    }
}

#[test]
fn exchange_identities_rejects_identity_as_exchange() {
    let failures = (2..=12)
        .filter(|&m| exchange_identities(m, &IntMatrix::identity(m).unwrap()).is_err())
        .count();
    assert_eq!(failures, 11);
}

#[test]
fn column_recursion_in_matrix_form() {
    for m in 2..=12 {
        for n in 1..=12u64 {
            let mut rhs = tbar(n, m - 1).unwrap();
            for k in 0..=(n - 1) / 2 {
                rhs += tbar(2 * k, m - 1).unwrap() * tbar(n - 1 - 2 * k, m).unwrap();
            }
            assert_eq!(tbar(n, m).unwrap(), rhs, "n = {n}, m = {m}");
        }
    }
    for n in 0..=12 {
        assert_eq!(tbar(n, 1).unwrap(), BigInt::one());
    }
}

#[test]
fn alternating_convolution() {
    for m in 2..=10 {
        for n in 2..=12u64 {
            let rhs: BigInt = (0..=n)
                .map(|k| {
                    let term = tbar(k, m).unwrap() * tbar(n - k, m - 1).unwrap();
                    if (n - k) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            assert_eq!(tbar(n - 1, m).unwrap(), rhs, "n = {n}, m = {m}");
        }
    }
}

#[test]
fn bilinear_generating_function_factorization() {
    let terms = 20;
    for m in 2..=8 {
        let a = unit_primitive(m).unwrap();
        let a_prev = unit_primitive(m - 1).unwrap();
        let base = bilinear_series(&ones(m), &a, &unit(m, 1), terms).unwrap();
        for i in 1..m {
            let lhs = bilinear_series(&ones(m), &a, &unit(m, m - i + 1), terms).unwrap();
            let vbar = unit(m, i).truncated().unwrap();
            let other: Vec<BigInt> = bilinear_series(&ones(m - 1), &a_prev, &vbar, terms)
                .unwrap()
                .into_iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c } else { -c })
                .collect();
            for n in 0..terms {
                let conv: BigInt = (0..=n).map(|k| &base[k] * &other[n - k]).sum();
                assert_eq!(lhs[n], conv, "m = {m}, i = {i}, n = {n}");
            }
        }
    }
}

#[test]
fn transfer_matrix_matches_recursion() {
    for n in 0..=10 {
        for m in 0..=8 {
            assert_eq!(tbar(n as u64, m + 1).unwrap(), t_value(n, m), "n = {n}, m = {m}");
        }
    }
}

/// `p(M)` by Horner's rule; `p` must have integer coefficients.
fn eval_matrix(p: &Poly, m: &IntMatrix) -> IntMatrix {
    let id = IntMatrix::identity(m.order()).unwrap();
    let coeffs = p.integer_coeffs().expect("integer polynomial");
    let mut acc = IntMatrix::from_fn(m.order(), |_, _| BigInt::zero()).unwrap();
    for c in coeffs.iter().rev() {
        acc = mul(&acc, m).add(&id.scale(c)).unwrap();
    }
    acc
}

#[test]
fn unit_primitive_is_chebyshev_of_tridiagonal() {
    // U_{n-1}(y/2) = f_{T'_{n-1}}(y)
    for n in 2..=10 {
        let t = special_matrix(n, MatrixKind::T).unwrap();
        assert_eq!(eval_matrix(&char_poly_tprime(n - 1), &t), unit_primitive(n).unwrap(), "n = {n}");
    }
}

#[test]
fn generic_characteristic_polynomial() {
    for n in 1..=12 {
        assert_eq!(char_poly_generic(&unit_primitive(n).unwrap()), char_poly_a(n), "n = {n}");
    }
    let t = special_matrix(5, MatrixKind::TPrime).unwrap();
    assert_eq!(char_poly_generic(&t), char_poly_tprime(5));
}

#[test]
fn adjugate_first_row() {
    for n in 2..=8usize {
        let half = (n + 1) / 2;
        for j in 1..=n {
            let expected = if j == 1 {
                p_poly(n - 2)
            } else if j < half + 1 {
                &Poly::x() * &p_poly(n + 1 - 2 * j).reflect()
            } else {
                &Poly::x() * &p_poly(2 * j - n - 2)
            };
            assert_eq!(adjugate_entry(n, 1, j).unwrap(), expected, "n = {n}, j = {j}");
        }
    }
}

#[test]
fn adjugate_column_sum() {
    for n in 2..=7 {
        let sum = (1..=n).fold(Poly::zero(), |acc, i| acc + adjugate_entry(n, i, 1).unwrap());
        assert_eq!(sum, p_poly(n - 1).reflect(), "n = {n}");
    }
}
