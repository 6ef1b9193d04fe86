//! Named polynomial families: Chebyshev `U_n`, the signed-binomial `P_n`, the
//! characteristic polynomials of the tridiagonal matrices `T'_n`, `T_n` and of
//! the unit-primitive matrix `A_n`, plus the Euler zigzag numbers.
//!
//! Each family is produced from its explicit formula; recurrences that must
//! agree with it are exposed separately so callers can cross-check.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combin::binomial;
use crate::exact::{rat, Poly, Rat};

/// Sign `(-1)^e`.
pub fn sign(e: u64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Growable memo table indexed by `n`; values are pure functions of `n`, so
/// sharing one table across threads changes nothing observable.
struct Memo {
    values: Mutex<Vec<Poly>>,
}

impl Memo {
    fn get_or_extend(&self, n: usize, next: impl Fn(&[Poly], usize) -> Poly) -> Poly {
        let mut values = self.values.lock().expect("memo poisoned");
        while values.len() <= n {
            let k = values.len();
            let v = next(&values, k);
            values.push(v);
        }
        values[n].clone()
    }
}

fn memo(cell: &'static OnceLock<Memo>) -> &'static Memo {
    cell.get_or_init(|| Memo { values: Mutex::new(Vec::new()) })
}

/// `U_n` by `U_n = 2x U_{n-1} - U_{n-2}`, `U_0 = 1`, `U_1 = 2x`.
pub fn chebyshev_u(n: usize) -> Poly {
    static CELL: OnceLock<Memo> = OnceLock::new();
    memo(&CELL).get_or_extend(n, |prev, k| match k {
        0 => Poly::one(),
        1 => Poly::from_ints(&[0, 2]),
        _ => &Poly::from_ints(&[0, 2]) * &prev[k - 1] - &prev[k - 2],
    })
}

/// `U_n` from the closed sum `Σ_k (-1)^k C(n-k, k) (2x)^(n-2k)`.
pub fn chebyshev_u_closed(n: usize) -> Poly {
    let n64 = n as u64;
    let mut coeffs = vec![Rat::zero(); n + 1];
    for k in 0..=n / 2 {
        let k64 = k as u64;
        let c = binomial(n64 - k64, k64) * BigInt::from(sign(k64)) * (BigInt::one() << (n - 2 * k));
        coeffs[n - 2 * k] = Rat::from_integer(c);
    }
    Poly::from_coeffs(coeffs)
}

/// Coefficient `(-1)^⌊3k/2⌋ C(⌊(n+k)/2⌋, k)` shared by `P_n` and `f_{A_n}`.
fn signed_binomial(n: u64, k: u64) -> BigInt {
    binomial((n + k) / 2, k) * BigInt::from(sign(3 * k / 2))
}

/// `P_n(x) = Σ_{k=0}^{n} (-1)^⌊3k/2⌋ C(⌊(n+k)/2⌋, k) x^k`, which is also
/// `det(I - x A_n)`.
pub fn p_poly(n: usize) -> Poly {
    static CELL: OnceLock<Memo> = OnceLock::new();
    memo(&CELL).get_or_extend(n, |_, k| {
        Poly::from_bigints((0..=k as u64).map(|i| signed_binomial(k as u64, i)))
    })
}

/// Characteristic polynomial of `T'_n` (adjacency matrix of the path), i.e.
/// `U_n(x/2)`. `n = 0` gives 1, the empty determinant.
pub fn char_poly_tprime(n: usize) -> Poly {
    let u = chebyshev_u(n);
    let coeffs = u
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c / Rat::from_integer(BigInt::one() << k))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// Characteristic polynomial of `T_n` as `f_{T'_n} - f_{T'_{n-1}}`; `n = 0`
/// gives 1.
pub fn char_poly_t(n: usize) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    char_poly_tprime(n) - char_poly_tprime(n - 1)
}

/// `f_{A_n}(x) = Σ_k (-1)^⌊3k/2⌋ C(⌊(n+k)/2⌋, k) x^(n-k)`; `n = 0` gives 1.
pub fn char_poly_a(n: usize) -> Poly {
    let n64 = n as u64;
    let mut coeffs = vec![Rat::zero(); n + 1];
    for k in 0..=n {
        coeffs[n - k] = Rat::from_integer(signed_binomial(n64, k as u64));
    }
    Poly::from_coeffs(coeffs)
}

/// `E_0, ..., E_n`: secant numbers at even index, tangent numbers at odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerSeq {
    values: Vec<BigInt>,
}

impl EulerSeq {
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.values.get(n)
    }
}

/// Zigzag numbers from the Seidel–Entringer boustrophedon triangle.
pub fn euler_numbers(n: usize) -> EulerSeq {
    let mut values = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for k in 1..=n {
        // each row is the running sum of the previous one read backwards
        let mut next = Vec::with_capacity(k + 1);
        next.push(BigInt::zero());
        for i in 0..k {
            let v = &next[i] + &row[k - 1 - i];
            next.push(v);
        }
        values.push(next[k].clone());
        row = next;
    }
    EulerSeq { values }
}

pub fn euler_number(n: usize) -> BigInt {
    euler_numbers(n).values.pop().expect("nonempty")
}

/// `f(-x)`-style helper used by the recurrences: `p((-1)^e x)`.
pub fn signed_arg(p: &Poly, e: u64) -> Poly {
    if e % 2 == 0 {
        p.clone()
    } else {
        p.reflect()
    }
}

/// `P_{n+1} = -x P_n(-x) + P_{n-1}`, seeded with `P_0 = 1`, `P_1 = 1 - x`.
pub fn p_poly_by_recursion(n: usize) -> Poly {
    let mut prev = Poly::one();
    let mut cur = Poly::from_ints(&[1, -1]);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(-&Poly::x()) * &cur.reflect() + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `f_{T_n} = x f_{T_{n-1}} - f_{T_{n-2}}` from `f_{T_0} = 1`, `f_{T_1} = x - 1`.
pub fn char_poly_t_by_recursion(n: usize) -> Poly {
    let mut prev = Poly::one();
    let mut cur = Poly::from_ints(&[-1, 1]);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &Poly::x() * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `f_{A_n} = x^2 f_{A_{n-2}}(x) - (-1)^(n+1) f_{A_{n-1}}(-x)` from
/// `f_{A_0} = 1`, `f_{A_1} = x - 1`.
pub fn char_poly_a_by_recursion(n: usize) -> Poly {
    let mut table = vec![Poly::one(), Poly::from_ints(&[-1, 1])];
    for k in 2..=n {
        let term = table[k - 1].reflect().scale(&rat(sign(k as u64 + 1)));
        let next = &Poly::monomial(rat(1), 2) * &table[k - 2] - &term;
        table.push(next);
    }
    table.swap_remove(n.min(table.len() - 1))
}
