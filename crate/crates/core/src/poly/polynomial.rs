use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{PolyError, Rational};

/// Dense univariate polynomial over the rationals, coefficients in
/// ascending degree. The zero polynomial has no coefficients; otherwise the
/// last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `x - r`.
    pub fn linear(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Floating-point evaluation, for plotting and diagnostics only.
    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        let coeffs =
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(BigInt::from(i))).collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let d = divisor.degree().ok_or(PolyError::ZeroPolynomial)?;
        let lc_inv = divisor.coeffs[d].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.div_rem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Divides out `x - r` once, returning the quotient and the remainder `p(r)`.
    pub fn deflate(&self, r: &Rational) -> (Self, Rational) {
        if self.coeffs.is_empty() {
            return (Self::zero(), Rational::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![Rational::zero(); n - 1];
        let mut acc = Rational::zero();
        for i in (0..n).rev() {
            acc = &self.coeffs[i] + &acc * r;
            if i > 0 {
                q[i - 1] = acc.clone();
            }
        }
        (Self::new(q), acc)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// ASCII form, highest degree first: `x^3 - 3*x^2 + 9/4*x`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;

    /// Parses the [`Display`](fmt::Display) form (spaces optional).
    fn from_str(s: &str) -> Result<Self, PolyError> {
        let err = || PolyError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        // split into signed terms
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut coeffs: Vec<Rational> = Vec::new();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(err());
            }
            let (coef_txt, power) = match body.find('x') {
                None => (body, 0usize),
                Some(pos) => {
                    let coef = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                    if pos > 0 && !body[..pos].ends_with('*') {
                        return Err(err());
                    }
                    let rest = &body[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').and_then(|e| e.parse().ok()).ok_or_else(err)?
                    };
                    (coef, power)
                }
            };
            let mut c =
                if coef_txt.is_empty() { Rational::one() } else { coef_txt.parse::<Rational>().map_err(|_| err())? };
            if neg {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rational::zero());
            }
            coeffs[power] += c;
        }
        Ok(Self::new(coeffs))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn display_format() {
        let q = Polynomial::new(vec![int(0), rat(9, 4), int(-3), int(1)]);
        assert_eq!(q.to_string(), "x^3 - 3*x^2 + 9/4*x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::new(vec![int(-1), int(0), int(-1)]).to_string(), "-x^2 - 1");
        assert_eq!(Polynomial::linear(&rat(4, 3)).to_string(), "x - 4/3");
        assert_eq!(Polynomial::constant(rat(-7, 6)).to_string(), "-7/6");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["x^3 - 3*x^2 + 9/4*x", "0", "-x^2 - 1", "x - 4/3", "7/6", "-2/3*x^5 + x"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("x^2+2*x+1"), p("x^2 + 2*x + 1"));
        assert!("".parse::<Polynomial>().is_err());
        assert!("3x".parse::<Polynomial>().is_err());
        assert!("x^".parse::<Polynomial>().is_err());
        assert!("x +".parse::<Polynomial>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = p("x - 1");
        let b = p("x + 1");
        assert_eq!(&a * &b, p("x^2 - 1"));
        assert_eq!(&a + &b, p("2*x"));
        assert_eq!(&a - &a, Polynomial::zero());
        assert_eq!(p("x^3 - 1").div_rem(&a).unwrap(), (p("x^2 + x + 1"), Polynomial::zero()));
        assert_eq!(p("x^2").div_rem(&b).unwrap().1, p("1"));
        assert_eq!(p("x^2 - 1").gcd(&p("2*x^2 - 4*x + 2")), a);
        assert_eq!(p("x^3").derivative(), p("3*x^2"));
        assert_eq!(a.pow(3), p("x^3 - 3*x^2 + 3*x - 1"));
        assert!(a.divides(&p("x^2 - 1")));
        assert!(!b.divides(&p("x^2 + 1")));
        assert_eq!(p("x").div_rem(&Polynomial::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn deflate_gives_value() {
        let (q, r) = p("x^2 - 3*x + 2").deflate(&int(1));
        assert_eq!((q, r), (p("x - 2"), int(0)));
        let (_, r) = p("x^2 + 1").deflate(&int(2));
        assert_eq!(r, int(5));
    }
}
