//! Univariate polynomials with nonnegative big-integer coefficients, and the
//! recurrences that size the horn sweep.

mod exponent;
mod sweep;

pub use exponent::{choose_c, Bound, BoundKind, Certificate, ExponentChoice, TailArgument};
pub use sweep::{sweep_polys, SweepParameters, SweepTable};

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `c_0 + c_1 x + ... + c_d x^d` with `c_i ∈ ℕ`; trailing zeros are trimmed,
/// so the zero polynomial has no coefficients. Nondecreasing on ℕ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigUint>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: u64) -> Self {
        Self::from_coeffs(vec![BigUint::from(c)])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(coeff: u64, degree: usize) -> Self {
        let mut c = vec![BigUint::zero(); degree + 1];
        c[degree] = BigUint::from(coeff);
        Self::from_coeffs(c)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coefficient_sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigUint) -> BigUint {
        self.coeffs.iter().rev().fold(BigUint::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_u64(&self, x: u64) -> BigUint {
        self.eval(&BigUint::from(x))
    }

    /// Value at `x` as a machine integer, when it fits.
    pub fn eval_usize(&self, x: usize) -> Option<usize> {
        self.eval_u64(x as u64).to_usize()
    }

    pub fn scale(&self, k: &BigUint) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn scale_u64(&self, k: u64) -> Self {
        self.scale(&BigUint::from(k))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigUint::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs: c }
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, c| &(&acc * inner) + &Polynomial::from_coeffs(vec![c.clone()]))
    }

    /// Coefficientwise `self <= other`.
    pub fn dominated_by(&self, other: &Polynomial) -> bool {
        (0..self.coeffs.len()).all(|i| self.coeffs[i] <= other.coeff(i))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut c = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(c)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Ascending terms joined by `+`, e.g. `3+10x^2+50x^3`; zero prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}x^{i}")?,
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

/// Accepts sums of terms `c`, `cx`, `c*x`, `x^e`, `cx^e` in any order, with
/// optional whitespace; repeated powers are added.
impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let mut acc = Polynomial::zero();
        let mut offset = 0;
        for term in compact.split('+') {
            acc = &acc + &parse_term(term, offset)?;
            offset += term.len() + 1;
        }
        Ok(acc)
    }
}

fn parse_term(term: &str, offset: usize) -> Result<Polynomial> {
    if term.is_empty() {
        return Err(Error::parse(offset, "empty term"));
    }
    let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
    let coeff = if digits == 0 {
        BigUint::one()
    } else {
        term[..digits].parse::<BigUint>().map_err(|e| Error::parse(offset, e))?
    };
    let mut rest = &term[digits..];
    if rest.is_empty() {
        return Ok(Polynomial::from_coeffs(vec![coeff]));
    }
    if let Some(r) = rest.strip_prefix('*') {
        if digits == 0 {
            return Err(Error::parse(offset, "`*` without a coefficient"));
        }
        rest = r;
    }
    let Some(after_x) = rest.strip_prefix('x') else {
        return Err(Error::parse(offset + digits, format!("unexpected `{rest}` in term")));
    };
    let degree = if after_x.is_empty() {
        1
    } else if let Some(e) = after_x.strip_prefix('^') {
        e.parse::<usize>().map_err(|_| Error::parse(offset + term.len() - e.len(), format!("bad exponent `{e}`")))?
    } else {
        return Err(Error::parse(offset + term.len() - after_x.len(), "expected `^` after `x`"));
    };
    if degree > 10_000 {
        return Err(Error::parse(offset, "exponent too large"));
    }
    let mut c = vec![BigUint::zero(); degree + 1];
    c[degree] = coeff;
    Ok(Polynomial::from_coeffs(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn evaluation() {
        assert_eq!(Polynomial::x().eval_u64(7), BigUint::from(7u32));
        assert_eq!(p("2x^2").eval_u64(3), BigUint::from(18u32));
        assert_eq!(p("5").eval_u64(100), BigUint::from(5u32));
        assert_eq!(Polynomial::zero().eval_u64(9), BigUint::zero());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&Polynomial::x() + &Polynomial::x(), p("2x"));
        assert_eq!(&Polynomial::x() * &Polynomial::x(), p("x^2"));
        assert_eq!(p("2x").scale_u64(5), p("10x"));
        assert_eq!(p("x^2+1").compose(&p("x+1")), p("x^2+2x+2"));
        assert_eq!(p("3x").shift(2), p("3x^3"));
        assert!(p("x+1").dominated_by(&p("2x+1")));
        assert!(!p("x^2").dominated_by(&p("5x")));
    }

    #[test]
    fn display_and_parse() {
        let z1 = p("8x^6 + 88x^5 + 300x^4 + 10x^3 + 2x^2");
        assert_eq!(z1.to_string(), "2x^2+10x^3+300x^4+88x^5+8x^6");
        assert_eq!(p("x+x").to_string(), "2x");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("3*x^2+1").to_string(), "1+3x^2");
        assert_eq!(p("x^0").to_string(), "1");
        assert!("".parse::<Polynomial>().is_err());
        assert!("2y".parse::<Polynomial>().is_err());
        assert!("x^".parse::<Polynomial>().is_err());
        assert!("1++x".parse::<Polynomial>().is_err());
        assert!("-x".parse::<Polynomial>().is_err());
    }
}
