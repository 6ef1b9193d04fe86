use std::fmt;

use num_traits::{One, Zero};

use super::{Degree, ExactError, Poly, Rat};

/// Reduced quotient `num / den` of polynomials over the rationals.
///
/// Canonical form: `gcd(num, den) = 1` and the lowest nonzero coefficient of
/// `den` equals 1 (so in particular it is positive). Zero is `0 / 1`.
/// Two equal rational functions therefore have identical fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

impl RatFn {
    pub fn make(num: Poly, den: Poly) -> Result<RatFn, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFn::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree_usize().unwrap_or(0) > 0 {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        } else {
            (num, den)
        };
        Ok(RatFn::scaled(num, den))
    }

    /// Normalizes scale only; caller guarantees coprimality.
    fn scaled(num: Poly, den: Poly) -> RatFn {
        let low = den.lowest().expect("nonzero denominator").clone();
        if low.is_one() {
            return RatFn { num, den };
        }
        let inv = low.recip();
        RatFn { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Poly) -> RatFn {
        RatFn { num: p, den: Poly::one() }
    }

    pub fn zero() -> RatFn {
        RatFn::from_poly(Poly::zero())
    }

    pub fn one() -> RatFn {
        RatFn::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num - deg den`; minus infinity for zero.
    pub fn degree(&self) -> Degree {
        self.num.degree() - self.den.degree()
    }

    pub fn arith(&self, other: &RatFn, kind: ArithKind) -> Result<RatFn, ExactError> {
        match kind {
            ArithKind::Add => Ok(self.add(other)),
            ArithKind::Sub => Ok(self.sub(other)),
            ArithKind::Mul => Ok(self.mul(other)),
            ArithKind::Div => self.div(other),
        }
    }

    fn add_signed(&self, other: &RatFn, negate: bool) -> RatFn {
        let other_num = if negate { -&other.num } else { other.num.clone() };
        if self.den == other.den {
            return RatFn::make(&self.num + &other_num, self.den.clone()).expect("nonzero den");
        }
        let g = self.den.gcd(&other.den);
        let a_co = self.den.exact_div(&g).expect("gcd divides");
        let b_co = other.den.exact_div(&g).expect("gcd divides");
        let num = &self.num * &b_co + &other_num * &a_co;
        let den = &a_co * &other.den;
        RatFn::make(num, den).expect("nonzero den")
    }

    pub fn add(&self, other: &RatFn) -> RatFn {
        self.add_signed(other, false)
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        self.add_signed(other, true)
    }

    pub fn neg(&self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFn) -> RatFn {
        if self.is_zero() || other.is_zero() {
            return RatFn::zero();
        }
        RatFn::make(&self.num * &other.num, &self.den * &other.den).expect("nonzero den")
    }

    pub fn div(&self, other: &RatFn) -> Result<RatFn, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        RatFn::make(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn recip(&self) -> Result<RatFn, ExactError> {
        RatFn::one().div(self)
    }

    pub fn scale(&self, c: &Rat) -> RatFn {
        if c.is_zero() {
            return RatFn::zero();
        }
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFn {
        self.mul(&RatFn::from_poly(p.clone()))
    }

    /// `f(-x)`
    pub fn reflect(&self) -> RatFn {
        RatFn::scaled(self.num.reflect(), self.den.reflect())
    }

    /// Quotient rule, reduced.
    pub fn derivative(&self) -> RatFn {
        let num = &self.num.derivative() * &self.den - &self.num * &self.den.derivative();
        RatFn::make(num, &self.den * &self.den).expect("nonzero den")
    }

    pub fn nth_derivative(&self, k: usize) -> RatFn {
        (0..k).fold(self.clone(), |f, _| f.derivative())
    }

    /// `f / x^k`; fails if that leaves a pole at the origin.
    pub fn div_x_pow(&self, k: usize) -> Result<RatFn, ExactError> {
        if self.is_zero() {
            return Ok(RatFn::zero());
        }
        let den_val = self.den.valuation().expect("nonzero den");
        let num_val = self.num.valuation().expect("nonzero num");
        if den_val > 0 || num_val < k {
            return Err(ExactError::NotDivisibleByXPower { power: k, valuation: num_val });
        }
        let num = self.num.shift_down(k).expect("valuation checked");
        Ok(RatFn { num, den: self.den.clone() })
    }

    /// First `count` Taylor coefficients at 0, from the linear recurrence the
    /// denominator imposes.
    pub fn series(&self, count: usize) -> Result<Vec<Rat>, ExactError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(ExactError::PoleAtOrigin);
        }
        let d0_inv = d0.recip();
        let den = self.den.coeffs();
        let mut out: Vec<Rat> = Vec::with_capacity(count);
        for i in 0..count {
            let mut acc = self.num.coeff(i);
            for (j, dj) in den.iter().enumerate().skip(1).take(i) {
                if !dj.is_zero() {
                    acc -= dj * &out[i - j];
                }
            }
            out.push(acc * &d0_inv);
        }
        Ok(out)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn rf(num: &[i64], den: &[i64]) -> RatFn {
        RatFn::make(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    fn geometric() -> RatFn {
        rf(&[1], &[1, -1])
    }

    #[test]
    fn make_cancels_and_normalizes() {
        let f = rf(&[1, 0, -1], &[1, -1]);
        assert_eq!(f.num(), &Poly::from_ints(&[1, 1]));
        assert_eq!(f.den(), &Poly::one());
        assert_eq!(rf(&[], &[1, 2, 3]), RatFn::zero());
        // P_1(-x) / P_2(x)
        let f1 = rf(&[1, 1], &[1, -1, -1]);
        assert_eq!(f1.num(), &Poly::from_ints(&[1, 1]));
        assert_eq!(f1.den(), &Poly::from_ints(&[1, -1, -1]));
        // negative scale is absorbed into the numerator
        let g = rf(&[2], &[-2, 2]);
        assert_eq!(g, rf(&[-1], &[1, -1]));
        assert_eq!(
            RatFn::make(Poly::one(), Poly::zero()),
            Err(ExactError::ZeroDenominator)
        );
    }

    #[test]
    fn field_arithmetic_examples() {
        let g = geometric();
        assert_eq!(g.sub(&g), RatFn::zero());
        assert_eq!(g.mul(&g), rf(&[1], &[1, -2, 1]));
        // 1 / (-x + F(0, -x)) = F(1, x)
        let inner = RatFn::from_poly(Poly::from_ints(&[0, -1])).add(&g.reflect());
        assert_eq!(inner.recip().unwrap(), rf(&[1, 1], &[1, -1, -1]));
        assert_eq!(g.div(&RatFn::zero()), Err(ExactError::DivisionByZero));
        assert_eq!(g.arith(&g, ArithKind::Div).unwrap(), RatFn::one());
    }

    #[test]
    fn derivatives() {
        let f = rf(&[0, 1], &[1, -2, 1]);
        assert_eq!(f.nth_derivative(0), f);
        assert_eq!(f.derivative(), rf(&[1, 1], &[1, -3, 3, -1]));
        let xf0 = rf(&[0, 1], &[1, -1]);
        assert_eq!(xf0.derivative(), rf(&[1], &[1, -2, 1]));
    }

    #[test]
    fn series_examples() {
        let ones: Vec<Rat> = vec![rat(1); 4];
        assert_eq!(geometric().series(4).unwrap(), ones);
        let fib = rf(&[1, 1], &[1, -1, -1]).series(6).unwrap();
        assert_eq!(fib, [1, 2, 3, 5, 8, 13].map(rat).to_vec());
        // P_4(-x) / P_5(x)
        let f4 = rf(&[1, 2, -3, -1, 1], &[1, -3, -3, 4, 1, -1]).series(6).unwrap();
        assert_eq!(f4, [1, 5, 15, 55, 190, 671].map(rat).to_vec());
        assert_eq!(rf(&[1], &[0, 1]).series(2), Err(ExactError::PoleAtOrigin));
    }

    #[test]
    fn degrees() {
        assert_eq!(geometric().degree(), Degree::Finite(-1));
        assert_eq!(rf(&[1, 1], &[1, -1, -1]).degree(), Degree::Finite(-1));
        assert_eq!(RatFn::zero().degree(), Degree::NegInfinity);
    }

    #[test]
    fn x_power_division() {
        let f = rf(&[0, 0, 1], &[1, -1]);
        assert_eq!(f.div_x_pow(2).unwrap(), geometric());
        assert!(f.div_x_pow(3).is_err());
        let half = RatFn::from_poly(Poly::constant(ratio(1, 2)));
        assert_eq!(half.scale(&rat(2)), RatFn::one());
    }
}
