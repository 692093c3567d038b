use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A reduced non-negative fraction `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i64,
    den: i64,
}

impl Fraction {
    /// Builds `num/den` in lowest terms.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den <= 0 {
            return Err(Error::InvalidArgument(format!(
                "fraction denominator must be positive, got {den}"
            )));
        }
        if num < 0 {
            return Err(Error::InvalidArgument(format!(
                "fraction numerator must be non-negative, got {num}"
            )));
        }
        let g = num.gcd(&den);
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    /// Caller guarantees `gcd(num, den) = 1`, `num ≥ 0`, `den > 0`.
    pub(crate) const fn new_unchecked(num: i64, den: i64) -> Self {
        Fraction { num, den }
    }

    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `a2·q1 − a1·q2` for `self = a1/q1`, `other = a2/q2`.
    pub fn determinant(&self, other: &Fraction) -> i128 {
        i128::from(other.num) * i128::from(self.den) - i128::from(self.num) * i128::from(other.den)
    }

    pub fn mediant(&self, other: &Fraction) -> Fraction {
        // Mediants of unimodular pairs are reduced; reduce anyway for arbitrary pairs.
        Fraction::new(self.num + other.num, self.den + other.den).expect("positive denominator")
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (i128::from(self.num) * i128::from(other.den)).cmp(&(i128::from(other.num) * i128::from(self.den)))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `a/b`, a bare integer `a`, or a terminating decimal such as `0.25`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::parse("fraction", s, reason);
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|_| bad("numerator is not an integer"))?;
            let d: i64 = d.trim().parse().map_err(|_| bad("denominator is not an integer"))?;
            return Fraction::new(n, d).map_err(|e| bad(&e.to_string()));
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 15 {
                return Err(bad("malformed decimal"));
            }
            let int: i64 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad("malformed decimal"))?
            };
            let den = 10i64.pow(frac.len() as u32);
            let frac: i64 = frac.parse().map_err(|_| bad("malformed decimal"))?;
            let num = int
                .checked_mul(den)
                .and_then(|v| v.checked_add(frac))
                .ok_or_else(|| bad("decimal too large"))?;
            return Fraction::new(num, den).map_err(|e| bad(&e.to_string()));
        }
        let n: i64 = s.parse().map_err(|_| bad("not a number"))?;
        Fraction::new(n, 1).map_err(|e| bad(&e.to_string()))
    }
}
