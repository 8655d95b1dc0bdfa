//! Exact truth values and assignments.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational used for truth values and abscissae.
pub type Rational = BigRational;

/// Parses `"p/q"` or an integer string into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Prints a rational as `p/q`, or as a bare integer when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A truth value in `[0,1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruthValue(Rational);

impl TruthValue {
    pub fn new(value: Rational) -> Result<Self> {
        if value < Rational::zero() || value > Rational::one() {
            return Err(Error::TruthValueOutOfRange(format_rational(&value)));
        }
        Ok(TruthValue(value))
    }

    pub fn zero() -> Self {
        TruthValue(Rational::zero())
    }

    pub fn one() -> Self {
        TruthValue(Rational::one())
    }

    /// `num/den`; panics unless `num <= den` and `den > 0`.
    pub fn ratio(num: usize, den: usize) -> Self {
        assert!(den > 0 && num <= den, "{num}/{den} is not a truth value");
        TruthValue(ratio(num, den))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl FromStr for TruthValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TruthValue::new(parse_rational(s)?)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

/// Values of `X1..Xn`; position `i` holds the value of `X(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment(Vec<TruthValue>);

impl Assignment {
    pub fn new(values: Vec<TruthValue>) -> Self {
        Assignment(values)
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value of variable `X{index}` (1-based).
    pub fn get(&self, index: usize) -> Option<&TruthValue> {
        index.checked_sub(1).and_then(|i| self.0.get(i))
    }
}

impl From<Vec<TruthValue>> for Assignment {
    fn from(values: Vec<TruthValue>) -> Self {
        Assignment(values)
    }
}

impl FromStr for Assignment {
    type Err = Error;

    /// Comma-separated truth values, e.g. `0,1/3,1`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .filter(|v| !v.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(Assignment)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational(" 1 ").unwrap(), Rational::one());
        assert_eq!(format_rational(&parse_rational("6/3").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("half").is_err());
    }

    #[test]
    fn truth_values_are_bounded() {
        assert!("3/2".parse::<TruthValue>().is_err());
        assert!("-1/2".parse::<TruthValue>().is_err());
        assert_eq!("1/3".parse::<TruthValue>().unwrap(), TruthValue::ratio(1, 3));
    }

    #[test]
    fn assignment_round_trips_through_text() {
        let a: Assignment = "0,1/3,1".parse().unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a.get(2), Some(&TruthValue::ratio(1, 3)));
        assert_eq!(a.get(0), None);
        assert_eq!(a.to_string(), "0,1/3,1");
    }
}
