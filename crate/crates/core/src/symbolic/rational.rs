//! Exact rational arithmetic.
//!
//! A hybrid representation: values that fit in an `i64/i64` fraction stay on a
//! fast inline path, anything larger is promoted to an arbitrary-precision
//! [`BigRational`]. Every constructor and operation returns the canonical form
//! (reduced, positive denominator, demoted back to the small arm whenever the
//! value fits), so equality is structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[derive(Clone, Debug)]
pub enum Rational {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

impl Rational {
    /// Builds `num/den` in canonical form. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn int(n: i64) -> Self {
        Rational::Small { num: n, den: 1 }
    }

    pub fn zero() -> Self {
        Rational::Small { num: 0, den: 1 }
    }

    pub fn one() -> Self {
        Rational::Small { num: 1, den: 1 }
    }

    pub fn half() -> Self {
        Rational::Small { num: 1, den: 2 }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd_i128(num, den);
        let (n, d) = if g == 0 {
            (0, 1)
        } else {
            (sign * num / g, sign * den / g)
        };
        if let (Ok(n64), Ok(d64)) = (i64::try_from(n), i64::try_from(d)) {
            Rational::Small { num: n64, den: d64 }
        } else {
            Rational::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d))))
        }
    }

    pub fn from_big(r: BigRational) -> Self {
        // BigRational::new already reduces with positive denominator.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            Rational::Small { num: n, den: d }
        } else {
            Rational::Big(Box::new(r))
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small { num, den } => {
                BigRational::new(BigInt::from(*num), BigInt::from(*den))
            }
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small { num: 1, den: 1 })
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small { num, .. } => *num < 0,
            Rational::Big(b) => b.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small { den, .. } => *den == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    /// Numerator and denominator when both fit in `i64`.
    pub fn as_small(&self) -> Option<(i64, i64)> {
        match self {
            Rational::Small { num, den } => Some((*num, *den)),
            Rational::Big(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rational::Small { num, den } => *num as f64 / *den as f64,
            Rational::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero rational");
        match self {
            Rational::Small { num, den } => Self::from_i128(*den as i128, *num as i128),
            Rational::Big(b) => Self::from_big(b.recip()),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    fn add_impl(a: &Rational, b: &Rational) -> Rational {
        if let (Rational::Small { num: n1, den: d1 }, Rational::Small { num: n2, den: d2 }) = (a, b)
        {
            let num = (*n1 as i128) * (*d2 as i128) + (*n2 as i128) * (*d1 as i128);
            let den = (*d1 as i128) * (*d2 as i128);
            return Rational::from_i128(num, den);
        }
        Rational::from_big(a.to_big() + b.to_big())
    }

    fn mul_impl(a: &Rational, b: &Rational) -> Rational {
        if let (Rational::Small { num: n1, den: d1 }, Rational::Small { num: n2, den: d2 }) = (a, b)
        {
            let num = (*n1 as i128) * (*n2 as i128);
            let den = (*d1 as i128) * (*d2 as i128);
            return Rational::from_i128(num, den);
        }
        Rational::from_big(a.to_big() * b.to_big())
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                a == c && b == d
            }
            // canonical form: big arm never holds an i64-representable value
            (Rational::Small { .. }, Rational::Big(_)) => false,
            (Rational::Big(_), Rational::Small { .. }) => false,
            (Rational::Big(x), Rational::Big(y)) => x == y,
        }
    }
}
impl Eq for Rational {}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:expr) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $impl_fn(self, rhs)
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $impl_fn(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $impl_fn(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, Rational::add_impl);
forward_binop!(Mul, mul, Rational::mul_impl);
forward_binop!(Sub, sub, |a: &Rational, b: &Rational| Rational::add_impl(
    a,
    &(-b.clone())
));
forward_binop!(Div, div, |a: &Rational, b: &Rational| Rational::mul_impl(
    a,
    &b.recip()
));

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self {
            Rational::Small { num, den } => {
                if let Some(n) = num.checked_neg() {
                    Rational::Small { num: n, den }
                } else {
                    Rational::from_i128(-(num as i128), den as i128)
                }
            }
            Rational::Big(b) => Rational::from_big(-*b),
        }
    }
}
impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -self.clone()
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = Rational::add_impl(self, rhs);
    }
}
impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = Rational::add_impl(self, &(-rhs.clone()));
    }
}
impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = Rational::mul_impl(self, rhs);
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small { num, den: 1 } => write!(f, "{num}"),
            Rational::Small { num, den } => write!(f, "{num}/{den}"),
            Rational::Big(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal `{}`", self.0)
    }
}
impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `n` or `n/d` with arbitrary-precision integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        let (ns, ds) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = ns.trim().parse().map_err(|_| bad())?;
        let d: BigInt = ds.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(-2, -4), r(1, 2));
        assert_eq!(r(2, -4), r(-1, 2));
        assert_eq!(r(0, 7), Rational::zero());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&r(1, 2) + &r(1, 3), r(5, 6));
        assert_eq!(&r(1, 2) - &r(1, 3), r(1, 6));
        assert_eq!(&r(2, 3) * &r(3, 4), r(1, 2));
        assert_eq!(&r(2, 3) / &r(4, 3), r(1, 2));
        assert_eq!(-r(1, 2), r(-1, 2));
        assert_eq!(r(3, 7).recip(), r(7, 3));
        assert_eq!(r(-3, 7).recip(), r(-7, 3));
    }

    #[test]
    fn promotion_and_demotion() {
        let big = Rational::int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Rational::Big(_)));
        let back = &sq / &big;
        assert!(matches!(back, Rational::Small { .. }));
        assert_eq!(back, big);
        // overflow in addition of near-max values
        let x = Rational::new(i64::MAX, 3);
        let y = Rational::new(i64::MAX, 2);
        let s = &x + &y;
        assert_eq!(&s - &y, x);
    }

    #[test]
    fn ordering() {
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-1, 2) < r(-1, 3));
        let big = &Rational::int(i64::MAX) * &Rational::int(4);
        assert!(r(1, 1) < big);
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["0", "5", "-5", "1/2", "-7/3", "123456789012345678901234567891/7"] {
            let v: Rational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("4/8".parse::<Rational>().unwrap(), r(1, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }
}
