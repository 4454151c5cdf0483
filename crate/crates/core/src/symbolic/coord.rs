//! Multivariate polynomials over the rationals in coordinates `x₁..x_n`,
//! used for the generic-element rank arguments (strict nonsingularity and the
//! almost-inner test).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::rational::Rational;

/// Exponent vector, one entry per coordinate.
type Monomial = Vec<u16>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl CoordPoly {
    pub fn zero(nvars: usize) -> Self {
        CoordPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The coordinate `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut m = vec![0u16; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(m, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        CoordPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += &t;
        }
        acc
    }
}

impl Add for &CoordPoly {
    type Output = CoordPoly;
    fn add(self, rhs: &CoordPoly) -> CoordPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &CoordPoly {
    type Output = CoordPoly;
    fn sub(self, rhs: &CoordPoly) -> CoordPoly {
        self + &(-rhs.clone())
    }
}

impl Mul for &CoordPoly {
    type Output = CoordPoly;
    fn mul(self, rhs: &CoordPoly) -> CoordPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = CoordPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for CoordPoly {
    type Output = CoordPoly;
    fn neg(self) -> CoordPoly {
        CoordPoly {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl AddAssign<&CoordPoly> for CoordPoly {
    fn add_assign(&mut self, rhs: &CoordPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl fmt::Display for CoordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{e}", i + 1)?,
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
    fn polynomial_identities() {
        let x = CoordPoly::var(2, 0);
        let y = CoordPoly::var(2, 1);
        // (x+y)(x−y) = x² − y²
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
        let v = lhs.eval(&[Rational::int(3), Rational::int(2)]);
        assert_eq!(v, Rational::int(5));
    }
}
