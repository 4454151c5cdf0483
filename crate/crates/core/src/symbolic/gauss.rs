//! Gaussian rationals: `re + im·i` with exact rational parts.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::real(Rational::int(n))
    }

    pub fn i() -> Self {
        GaussRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re² + im²`, the field norm.
    pub fn norm_sq(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        GaussRational {
            re: &self.re / &n,
            im: &(-self.im.clone()) / &n,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GaussRational {
            re: &self.re * c,
            im: &self.im * c,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        // real×real is the overwhelmingly common case in the pipeline
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::real(&self.re * &rhs.re);
        }
        GaussRational {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Div for &GaussRational {
    type Output = GaussRational;
    fn div(self, rhs: &GaussRational) -> GaussRational {
        self * &rhs.recip()
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational {
            re: -self.re,
            im: -self.im,
        }
    }
}
impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        -self.clone()
    }
}

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_part = |f: &mut fmt::Formatter<'_>, im: &Rational| -> fmt::Result {
            if im.is_one() {
                write!(f, "i")
            } else if *im == Rational::int(-1) {
                write!(f, "-i")
            } else {
                write!(f, "{im}i")
            }
        };
        if self.re.is_zero() {
            im_part(f, &self.im)
        } else if self.im.is_negative() {
            write!(f, "{}", self.re)?;
            im_part(f, &self.im)
        } else {
            write!(f, "{}+", self.re)?;
            im_part(f, &self.im)
        }
    }
}
