//! Exact scalars over the rationals or a prime field.
//!
//! A [`Scalar`] is a small `Copy` value. Rational scalars use checked `i128`
//! arithmetic and panic on overflow instead of silently wrapping. Integers
//! written as rationals are coerced into a prime field on contact, so
//! `Scalar::from(0)` and `Scalar::from(1)` work regardless of the field.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

use crate::error::{Error, Result};

type Rat = Ratio<i128>;

/// The ground field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("prime {p} is too large")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(Rat::zero()),
            Field::Prime(p) => Scalar::Fp { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(Rat::from_integer(n as i128)),
            Field::Prime(p) => Scalar::Fp { v: n.rem_euclid(p as i64) as u64, p },
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::InvalidField("zero denominator".into()));
        }
        let q = Scalar::Q(Rat::new(num as i128, den as i128));
        match self {
            Field::Rationals => Ok(q),
            Field::Prime(p) => {
                if (den as i128).rem_euclid(p as i128) == 0 {
                    return Err(Error::InvalidField(format!(
                        "denominator {den} vanishes in F{p}"
                    )));
                }
                Ok(q.coerce(p))
            }
        }
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`].
#[derive(Clone, Copy, Debug)]
pub enum Scalar {
    Q(Rat),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    fn coerce(self, p: u64) -> Scalar {
        match self {
            Scalar::Fp { .. } => self,
            Scalar::Q(r) => {
                let num = r.numer().rem_euclid(p as i128) as u64;
                let den = r.denom().rem_euclid(p as i128) as u64;
                assert!(den != 0, "rational with denominator divisible by {p}");
                Scalar::Fp { v: num * mod_inv(den, p) % p, p }
            }
        }
    }

    /// Brings two scalars into a common field.
    fn unify(self, other: Scalar) -> (Scalar, Scalar) {
        match (self, other) {
            (Scalar::Fp { p, .. }, Scalar::Q(_)) => (self, other.coerce(p)),
            (Scalar::Q(_), Scalar::Fp { p, .. }) => (self.coerce(p), other),
            (Scalar::Fp { p: a, .. }, Scalar::Fp { p: b, .. }) => {
                assert_eq!(a, b, "scalars from different prime fields");
                (self, other)
            }
            _ => (self, other),
        }
    }

    pub fn inv(self) -> Scalar {
        match self {
            Scalar::Q(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Q(r.recip())
            }
            Scalar::Fp { v, p } => {
                assert!(v != 0, "inverse of zero");
                Scalar::Fp { v: mod_inv(v, p), p }
            }
        }
    }

    /// Numerator and denominator in lowest terms (prime-field values are
    /// their canonical representative in `0..p`).
    pub fn parts(&self) -> (i128, i128) {
        match self {
            Scalar::Q(r) => (*r.numer(), *r.denom()),
            Scalar::Fp { v, .. } => (*v as i128, 1),
        }
    }

    /// Exact conversion to a small integer, if the scalar is one.
    pub fn to_i64(&self) -> Option<i64> {
        let (n, d) = self.parts();
        (d == 1).then_some(n as i64)
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p < 2^31, so products fit in u64.
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::Q(Rat::from_integer(n as i128))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match self.unify(*other) {
            (Scalar::Q(a), Scalar::Q(b)) => a == b,
            (Scalar::Fp { v: a, .. }, Scalar::Fp { v: b, .. }) => a == b,
            _ => unreachable!(),
        }
    }
}

impl Eq for Scalar {}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        match self.unify(rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => {
                Scalar::Q(a.checked_add(&b).expect("rational overflow in addition"))
            }
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp { v: (a + b) % p, p },
            _ => unreachable!(),
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        match self.unify(rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => {
                Scalar::Q(a.checked_sub(&b).expect("rational overflow in subtraction"))
            }
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => {
                Scalar::Fp { v: (a + p - b) % p, p }
            }
            _ => unreachable!(),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        match self.unify(rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => {
                Scalar::Q(a.checked_mul(&b).expect("rational overflow in multiplication"))
            }
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp { v: a * b % p, p },
            _ => unreachable!(),
        }
    }
}

impl Div for Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Scalar) -> Scalar {
        self * rhs.inv()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp { v: (p - v) % p, p },
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.parts();
        if d == 1 {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(a + b, f.from_i64(2));
        assert_eq!(a * b, f.from_i64(2));
        assert_eq!(a * a.inv(), f.one());
        assert_eq!(-a, f.from_i64(2));
        assert_eq!(f.from_ratio(1, 2).unwrap(), f.from_i64(3));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(6).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(7).is_ok());
    }

    #[test]
    fn rationals_print_in_lowest_terms() {
        let f = Field::Rationals;
        assert_eq!(f.from_ratio(4, -6).unwrap().to_string(), "-2/3");
        assert_eq!(f.from_i64(5).to_string(), "5");
    }

    #[test]
    fn integer_literals_coerce_into_prime_fields() {
        let f = Field::Prime(3);
        assert_eq!(f.from_i64(2) + Scalar::from(1), f.zero());
        assert!(Scalar::from(3) == f.zero());
    }
}
