//! Exact scalars: univariate polynomials in the formal parameter `s` with
//! rational coefficients. Degree-0 polynomials are ordinary rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Element of Q[s]. Coefficients are stored lowest degree first with no
/// trailing zeros, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    coeffs: Vec<Rational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::from_rational(Rational::one())
    }

    /// The indeterminate `s`.
    pub fn s() -> Self {
        Scalar { coeffs: vec![Rational::zero(), Rational::one()] }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(rat(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut out = Scalar { coeffs: vec![r] };
        out.trim();
        out
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut out = Scalar { coeffs };
        out.trim();
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value as a rational, if the polynomial is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar { coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Substitute `s -> s + c`.
    pub fn shift(&self, c: &Rational) -> Self {
        let linear = Scalar::from_coeffs(vec![c.clone(), Rational::one()]);
        self.compose(&linear)
    }

    /// Substitute `s -> q(s)`.
    pub fn compose(&self, q: &Scalar) -> Self {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * q) + &Scalar::from_rational(c.clone()))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Scalar::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Scalar::from_coeffs(coeffs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Constants print as bare rationals; anything else as a parenthesised
    /// polynomial in descending degree, e.g. `(2*s^2 - s + 1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return f.write_str(&fmt_rational(&r));
        }
        let mut out = String::from("(");
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{k}"),
            };
            if k == 0 {
                out.push_str(&fmt_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{}*{}", fmt_rational(&mag), var));
            }
        }
        out.push(')');
        f.write_str(&out)
    }
}

pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts the `Display` syntax, with or without the outer parentheses:
    /// a sum of terms `c`, `s`, `c*s`, `s^k`, `c*s^k`.
    fn from_str(text: &str) -> Result<Self, Error> {
        let mut body = text.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        }
        if body.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        // Split into signed terms.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (idx, ch) in body.char_indices() {
            let prev_is_slash_or_caret = current.trim_end().ends_with(['/', '^', '*']);
            if (ch == '+' || ch == '-') && !prev_is_slash_or_caret {
                if idx == 0 || current.trim().is_empty() {
                    negative ^= ch == '-';
                    continue;
                }
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        terms.push((negative, current));

        let mut acc = Scalar::zero();
        for (neg, term) in terms {
            let term = term.trim();
            let (coef, power) = match term.find('s') {
                None => (parse_rational(term)?, 0u32),
                Some(pos) => {
                    let coef_part = term[..pos].trim().trim_end_matches('*').trim();
                    let coef = if coef_part.is_empty() { Rational::one() } else { parse_rational(coef_part)? };
                    let rest = term[pos + 1..].trim();
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|p| p.trim().parse::<u32>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad power in {term:?}")))?
                    };
                    (coef, power)
                }
            };
            let coef = if neg { -coef } else { coef };
            acc += &Scalar::s().pow(power).scale(&coef);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::from_int(-3).to_string(), "-3");
        assert_eq!(Scalar::from_rational(rat_frac(1, 2)).to_string(), "1/2");
        assert_eq!(Scalar::zero().to_string(), "0");
        let p = &(&Scalar::s().pow(2).scale(&rat(2)) - &Scalar::s()) + &Scalar::from_rational(rat_frac(1, 2));
        assert_eq!(p.to_string(), "(2*s^2 - s + 1/2)");
        assert_eq!((-Scalar::s()).to_string(), "(-s)");
    }

    #[test]
    fn parse_round_trip() {
        for text in ["0", "-3", "1/2", "(2*s^2 - s + 1/2)", "(-s)", "(s^3 + 4)"] {
            let p: Scalar = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert_eq!("s-2".parse::<Scalar>().unwrap(), &Scalar::s() - &Scalar::from_int(2));
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn shift_and_eval() {
        // (s^2)(s -> s + 1) = s^2 + 2s + 1
        let p = Scalar::s().pow(2).shift(&rat(1));
        assert_eq!(p.coeffs(), &[rat(1), rat(2), rat(1)]);
        assert_eq!(p.eval(&rat(2)), rat(9));
    }

    #[test]
    fn constants_compare_as_rationals() {
        let c = Scalar::from_rational(rat_frac(4, 2));
        assert_eq!(c, Scalar::from_int(2));
        assert_eq!(c.as_integer(), Some(BigInt::from(2)));
    }
}
