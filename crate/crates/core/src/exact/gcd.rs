//! Polynomial gcd over the rationals via the subresultant remainder sequence
//! on integer polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use super::{Poly, Rat};

type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Gcd of the coefficients, always nonnegative; zero for the empty slice.
pub fn integer_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(p: &[BigInt]) -> IntPoly {
    let c = integer_content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Scales a rational polynomial to an integer polynomial with the same roots.
fn clear_denominators(p: &Poly) -> IntPoly {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = a.len() - db;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[off + j] -= &lr * bc;
        }
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = Pow::pow(lb, steps);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Subresultant gcd of two nonzero integer polynomials, up to sign.
fn subresultant_gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let (mut a, mut b) = if a.len() >= b.len() { (a.to_vec(), b.to_vec()) } else { (b.to_vec(), a.to_vec()) };
    let d = integer_content(&a).gcd(&integer_content(&b));
    a = primitive_part(&a);
    b = primitive_part(&b);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            b = vec![BigInt::one()];
            break;
        }
        a = b;
        let divisor = &g * Pow::pow(&h, delta);
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a.last().cloned().expect("nonzero");
        h = if delta == 0 {
            h
        } else {
            Pow::pow(&g, delta) / Pow::pow(&h, delta - 1)
        };
    }
    primitive_part(&b).into_iter().map(|c| c * &d).collect()
}

/// Gcd over the rationals, returned with coprime integer coefficients and a
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let normalize = |p: IntPoly| {
        let mut p = primitive_part(&p);
        if p.last().is_some_and(Signed::is_negative) {
            p.iter_mut().for_each(|c| *c = -&*c);
        }
        Poly::from_bigints(p)
    };
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Poly::zero(),
        (true, false) => normalize(clear_denominators(b)),
        (false, true) => normalize(clear_denominators(a)),
        (false, false) => {
            if a.len() == 1 || b.len() == 1 {
                return Poly::constant(Rat::one());
            }
            let g = subresultant_gcd(&clear_denominators(a), &clear_denominators(b));
            normalize(g)
        }
    }
}
