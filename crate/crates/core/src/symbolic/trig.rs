//! Quasi-trigonometric polynomials in the deformation parameter `s`:
//! finite sums of `c · s^m · cos(ks)` and `c · s^m · sin(ks)` with [`PiPoly`]
//! coefficients.
//!
//! Canonical form: no zero coefficients, `sin` terms always have `k ≥ 1`
//! (`sin(0s)` vanishes, `cos(0s)` is the constant direction), and products are
//! re-expanded by product-to-sum so that equality of canonical forms is
//! equality of functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use super::gauss::GaussRational;
use super::pipoly::PiPoly;
use super::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TrigKind {
    Cos,
    Sin,
}

/// `s^s_pow · kind(freq·s)`; `(0, 0, Cos)` is the constant direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TrigKey {
    pub s_pow: u32,
    pub freq: u32,
    pub kind: TrigKind,
}

impl TrigKey {
    pub fn constant() -> Self {
        TrigKey {
            s_pow: 0,
            freq: 0,
            kind: TrigKind::Cos,
        }
    }
}

impl fmt::Display for TrigKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        match self.s_pow {
            0 => {}
            1 => {
                write!(f, "s")?;
                wrote = true;
            }
            m => {
                write!(f, "s^{m}")?;
                wrote = true;
            }
        }
        if self.freq > 0 {
            if wrote {
                write!(f, " ")?;
            }
            let name = match self.kind {
                TrigKind::Cos => "cos",
                TrigKind::Sin => "sin",
            };
            if self.freq == 1 {
                write!(f, "{name}(s)")?;
            } else {
                write!(f, "{name}({}s)", self.freq)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TrigPoly {
    terms: BTreeMap<TrigKey, PiPoly>,
}

impl TrigPoly {
    pub fn zero() -> Self {
        TrigPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(PiPoly::one())
    }

    pub fn constant(c: PiPoly) -> Self {
        let mut t = Self::zero();
        t.add_term(TrigKey::constant(), &c);
        t
    }

    pub fn rational(r: Rational) -> Self {
        Self::constant(PiPoly::rational(r))
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::int(n))
    }

    /// `cos(k·s)`
    pub fn cos(k: u32) -> Self {
        Self::term(0, k, TrigKind::Cos, PiPoly::one())
    }

    /// `sin(k·s)`
    pub fn sin(k: u32) -> Self {
        Self::term(0, k, TrigKind::Sin, PiPoly::one())
    }

    /// `s^m`
    pub fn s_pow(m: u32) -> Self {
        Self::term(m, 0, TrigKind::Cos, PiPoly::one())
    }

    /// `c · s^m · kind(k·s)` normalized into canonical form.
    pub fn term(s_pow: u32, freq: u32, kind: TrigKind, c: PiPoly) -> Self {
        let mut t = Self::zero();
        if freq == 0 && kind == TrigKind::Sin {
            return t;
        }
        t.add_term(
            TrigKey {
                s_pow,
                freq,
                kind,
            },
            &c,
        );
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TrigKey, &PiPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &TrigKey) -> PiPoly {
        self.terms.get(key).cloned().unwrap_or_else(PiPoly::zero)
    }

    fn add_term(&mut self, key: TrigKey, c: &PiPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert!(!(key.freq == 0 && key.kind == TrigKind::Sin));
        match self.terms.entry(key) {
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

    /// Adds `c · s^m · kind(k·s)` where `k` may be negative; parity is folded
    /// into the canonical nonnegative-frequency form.
    fn add_signed(&mut self, s_pow: u32, k: i64, kind: TrigKind, c: &PiPoly) {
        if c.is_zero() {
            return;
        }
        let (freq, flip) = if k < 0 { ((-k) as u32, true) } else { (k as u32, false) };
        match kind {
            TrigKind::Cos => self.add_term(
                TrigKey {
                    s_pow,
                    freq,
                    kind: TrigKind::Cos,
                },
                c,
            ),
            TrigKind::Sin => {
                if freq == 0 {
                    return;
                }
                let coeff = if flip { -c.clone() } else { c.clone() };
                self.add_term(
                    TrigKey {
                        s_pow,
                        freq,
                        kind: TrigKind::Sin,
                    },
                    &coeff,
                );
            }
        }
    }

    pub fn scale(&self, c: &PiPoly) -> Self {
        let mut out = Self::zero();
        for (key, a) in &self.terms {
            out.add_term(*key, &(a * c));
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&PiPoly::rational(r.clone()))
    }

    /// Exact derivative d/ds.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (key, c) in &self.terms {
            // d/ds [s^m f(ks)] = m s^{m-1} f(ks) + k s^m f'(ks)
            if key.s_pow > 0 {
                let scaled = c * &PiPoly::int(key.s_pow as i64);
                out.add_term(
                    TrigKey {
                        s_pow: key.s_pow - 1,
                        ..*key
                    },
                    &scaled,
                );
            }
            if key.freq > 0 {
                let k = key.freq as i64;
                match key.kind {
                    TrigKind::Cos => {
                        // (cos ks)' = -k sin ks
                        out.add_term(
                            TrigKey {
                                kind: TrigKind::Sin,
                                ..*key
                            },
                            &(c * &PiPoly::int(-k)),
                        );
                    }
                    TrigKind::Sin => {
                        out.add_term(
                            TrigKey {
                                kind: TrigKind::Cos,
                                ..*key
                            },
                            &(c * &PiPoly::int(k)),
                        );
                    }
                }
            }
        }
        out
    }

    /// Numeric value at `s`, with the symbol `p` evaluated to `2·pi`.
    pub fn eval(&self, s: f64, pi: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (key, c) in &self.terms {
            let trig = match key.kind {
                TrigKind::Cos => (key.freq as f64 * s).cos(),
                TrigKind::Sin => (key.freq as f64 * s).sin(),
            };
            acc += c.eval(pi) * s.powi(key.s_pow as i32) * trig;
        }
        acc
    }

    /// Exact value at `s = 0` (a polynomial in `p`).
    pub fn eval_at_zero(&self) -> PiPoly {
        let mut acc = PiPoly::zero();
        for (key, c) in &self.terms {
            if key.s_pow == 0 && key.kind == TrigKind::Cos {
                acc += c;
            }
        }
        acc
    }

    /// `Ok(value)` when the polynomial is constant in `s`, otherwise the
    /// offending term as a witness.
    pub fn is_constant(&self) -> Result<PiPoly, TrigKey> {
        for key in self.terms.keys() {
            if key.s_pow != 0 || key.freq != 0 {
                return Err(*key);
            }
        }
        Ok(self.eval_at_zero())
    }

    /// `Some(c)` when the polynomial is a constant (in both `s` and `p`).
    pub fn as_scalar(&self) -> Option<GaussRational> {
        self.is_constant().ok().and_then(|p| p.as_constant())
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    pub fn conj(&self) -> Self {
        TrigPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }
}

impl Add for &TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: &TrigPoly) -> TrigPoly {
        let mut out = self.clone();
        for (key, c) in &rhs.terms {
            out.add_term(*key, c);
        }
        out
    }
}

impl Sub for &TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: &TrigPoly) -> TrigPoly {
        let mut out = self.clone();
        for (key, c) in &rhs.terms {
            out.add_term(*key, &(-c.clone()));
        }
        out
    }
}

impl Mul for &TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: &TrigPoly) -> TrigPoly {
        let mut out = TrigPoly::zero();
        let half = PiPoly::rational(Rational::half());
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let m = ka.s_pow + kb.s_pow;
                let c = ca * cb;
                let (f1, f2) = (ka.freq as i64, kb.freq as i64);
                // constants short-circuit the product-to-sum expansion
                if ka.freq == 0 {
                    out.add_signed(m, f2, kb.kind, &c);
                    continue;
                }
                if kb.freq == 0 {
                    out.add_signed(m, f1, ka.kind, &c);
                    continue;
                }
                let ch = &c * &half;
                match (ka.kind, kb.kind) {
                    // cos a cos b = ½cos(a−b) + ½cos(a+b)
                    (TrigKind::Cos, TrigKind::Cos) => {
                        out.add_signed(m, f1 - f2, TrigKind::Cos, &ch);
                        out.add_signed(m, f1 + f2, TrigKind::Cos, &ch);
                    }
                    // sin a sin b = ½cos(a−b) − ½cos(a+b)
                    (TrigKind::Sin, TrigKind::Sin) => {
                        out.add_signed(m, f1 - f2, TrigKind::Cos, &ch);
                        out.add_signed(m, f1 + f2, TrigKind::Cos, &(-ch.clone()));
                    }
                    // sin a cos b = ½sin(a+b) + ½sin(a−b)
                    (TrigKind::Sin, TrigKind::Cos) => {
                        out.add_signed(m, f1 + f2, TrigKind::Sin, &ch);
                        out.add_signed(m, f1 - f2, TrigKind::Sin, &ch);
                    }
                    // cos a sin b = ½sin(a+b) − ½sin(a−b)
                    (TrigKind::Cos, TrigKind::Sin) => {
                        out.add_signed(m, f1 + f2, TrigKind::Sin, &ch);
                        out.add_signed(m, f1 - f2, TrigKind::Sin, &(-ch.clone()));
                    }
                }
            }
        }
        out
    }
}

impl Neg for TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        TrigPoly {
            terms: self
                .terms
                .into_iter()
                .map(|(k, c)| (k, -c))
                .collect(),
        }
    }
}
impl Neg for &TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        -self.clone()
    }
}

impl AddAssign<&TrigPoly> for TrigPoly {
    fn add_assign(&mut self, rhs: &TrigPoly) {
        for (key, c) in &rhs.terms {
            self.add_term(*key, c);
        }
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (key, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let key_str = key.to_string();
            if key_str == "1" {
                write!(f, "{c}")?;
            } else if let Some(g) = c.as_constant() {
                if g.is_real() && g.re.is_one() {
                    write!(f, "{key_str}")?;
                } else if g.is_real() && g.re == Rational::int(-1) {
                    write!(f, "-{key_str}")?;
                } else if g.is_real() && !g.re.is_negative() && g.re.is_integer() {
                    write!(f, "{g}{key_str}")?;
                } else {
                    write!(f, "({g}){key_str}")?;
                }
            } else {
                write!(f, "({c}){key_str}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> TrigPoly {
        TrigPoly::rational(Rational::half())
    }

    #[test]
    fn product_to_sum_double_angle() {
        // cos(s)·cos(s) = ½ + ½cos(2s)
        let c = TrigPoly::cos(1);
        let sq = &c * &c;
        let want = &half() + &TrigPoly::cos(2).scale(&PiPoly::rational(Rational::half()));
        assert_eq!(sq, want);
    }

    #[test]
    fn product_to_sum_mixed() {
        // sin(s)·cos(2s) = ½(sin(3s) − sin(s))
        let got = &TrigPoly::sin(1) * &TrigPoly::cos(2);
        let want = &TrigPoly::sin(3).scale_rational(&Rational::half())
            - &TrigPoly::sin(1).scale_rational(&Rational::half());
        assert_eq!(got, want);
    }

    #[test]
    fn identity_multiplication() {
        // (1 − cos(s))·1 = 1 − cos(s)
        let a = &TrigPoly::one() - &TrigPoly::cos(1);
        assert_eq!(&a * &TrigPoly::one(), a);
    }

    #[test]
    fn pythagorean_identity() {
        let c = TrigPoly::cos(3);
        let s = TrigPoly::sin(3);
        let sum = &(&c * &c) + &(&s * &s);
        assert_eq!(sum, TrigPoly::one());
    }

    #[test]
    fn derivative_examples() {
        // cos(2s) → −2 sin(2s)
        assert_eq!(
            TrigPoly::cos(2).derivative(),
            TrigPoly::sin(2).scale_rational(&Rational::int(-2))
        );
        // s·sin(s) → sin(s) + s·cos(s)
        let ssin = &TrigPoly::s_pow(1) * &TrigPoly::sin(1);
        let want = &TrigPoly::sin(1) + &(&TrigPoly::s_pow(1) * &TrigPoly::cos(1));
        assert_eq!(ssin.derivative(), want);
        // 1 − cos(s) → sin(s)
        let a = &TrigPoly::one() - &TrigPoly::cos(1);
        assert_eq!(a.derivative(), TrigPoly::sin(1));
        // constants
        assert!(TrigPoly::int(5).derivative().is_zero());
    }

    #[test]
    fn eval_examples() {
        let pi = std::f64::consts::PI;
        assert_eq!(TrigPoly::cos(1).eval(0.0, pi).re, 1.0);
        let a = &TrigPoly::one() - &TrigPoly::cos(1);
        assert!((a.eval(pi, pi).re - 2.0).abs() < 1e-14);
        let p2 = TrigPoly::constant(PiPoly::term(2, GaussRational::one()));
        assert!((p2.eval(0.37, pi).re - 4.0 * pi * pi).abs() < 1e-12);
    }

    #[test]
    fn constancy_witness() {
        assert_eq!(TrigPoly::int(3).is_constant(), Ok(PiPoly::int(3)));
        let a = &TrigPoly::one() - &TrigPoly::cos(1);
        assert_eq!(
            a.is_constant(),
            Err(TrigKey {
                s_pow: 0,
                freq: 1,
                kind: TrigKind::Cos
            })
        );
        // sin with k=0 never appears
        assert!(TrigPoly::sin(0).is_zero());
    }

    #[test]
    fn display() {
        let a = &TrigPoly::one() - &TrigPoly::cos(1);
        assert_eq!(a.to_string(), "1 + -cos(s)");
        assert_eq!(TrigPoly::zero().to_string(), "0");
    }
}
