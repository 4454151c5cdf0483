//! Polynomials in the transcendental symbol `p`, which stands for 2π.
//!
//! The symbol is never evaluated during exact computation; [`PiPoly::eval`]
//! substitutes `p = 2π` only when a numeric value is requested.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use super::gauss::GaussRational;
use super::rational::Rational;

/// Sparse polynomial over the Gaussian rationals; terms sorted by degree,
/// no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PiPoly {
    terms: Vec<(u32, GaussRational)>,
}

impl PiPoly {
    pub fn zero() -> Self {
        PiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            PiPoly { terms: vec![(0, c)] }
        }
    }

    pub fn rational(r: Rational) -> Self {
        Self::constant(GaussRational::real(r))
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::int(n))
    }

    /// `c · p^k`
    pub fn term(k: u32, c: GaussRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            PiPoly { terms: vec![(k, c)] }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(k, _)| *k)
    }

    pub fn terms(&self) -> &[(u32, GaussRational)] {
        &self.terms
    }

    /// The coefficient of `p^k`.
    pub fn coeff(&self, k: u32) -> GaussRational {
        match self.terms.binary_search_by_key(&k, |(d, _)| *d) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => GaussRational::zero(),
        }
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.as_slice() {
            [] => Some(GaussRational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_real())
    }

    pub fn conj(&self) -> Self {
        PiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (*k, a * c))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    fn add_term(&mut self, k: u32, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&k, |(d, _)| *d) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (k, c.clone())),
        }
    }

    /// Substitutes `p = 2·pi`.
    pub fn eval(&self, pi: f64) -> Complex64 {
        let p = 2.0 * pi;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in &self.terms {
            acc += c.to_complex() * p.powi(*k as i32);
        }
        acc
    }
}

impl Add for &PiPoly {
    type Output = PiPoly;
    fn add(self, rhs: &PiPoly) -> PiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub for &PiPoly {
    type Output = PiPoly;
    fn sub(self, rhs: &PiPoly) -> PiPoly {
        self + &(-rhs.clone())
    }
}

impl Mul for &PiPoly {
    type Output = PiPoly;
    fn mul(self, rhs: &PiPoly) -> PiPoly {
        let mut out = PiPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.add_term(ka + kb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for PiPoly {
    type Output = PiPoly;
    fn neg(mut self) -> PiPoly {
        for (_, c) in &mut self.terms {
            *c = -c.clone();
        }
        self
    }
}

impl AddAssign<&PiPoly> for PiPoly {
    fn add_assign(&mut self, rhs: &PiPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c);
        }
    }
}

impl fmt::Display for PiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                _ => {
                    let needs_parens = !(c.is_real() && !c.re.is_negative());
                    if c.is_real() && c.re.is_one() {
                        // bare power
                    } else if needs_parens {
                        write!(f, "({c})")?;
                    } else {
                        write!(f, "{c}")?;
                    }
                    if *k == 1 {
                        write!(f, "p")?;
                    } else {
                        write!(f, "p^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let p2 = PiPoly::term(2, GaussRational::one());
        let c = PiPoly::int(3);
        let s = &p2 + &c;
        assert_eq!(s.coeff(2), GaussRational::one());
        assert_eq!(s.coeff(0), GaussRational::int(3));
        let prod = &s * &s;
        assert_eq!(prod.coeff(4), GaussRational::one());
        assert_eq!(prod.coeff(2), GaussRational::int(6));
        assert_eq!(prod.coeff(0), GaussRational::int(9));
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn eval_p_is_two_pi() {
        let p2 = PiPoly::term(2, GaussRational::one());
        let v = p2.eval(std::f64::consts::PI);
        assert!((v.re - 4.0 * std::f64::consts::PI * std::f64::consts::PI).abs() < 1e-12);
        assert_eq!(v.im, 0.0);
    }
}
