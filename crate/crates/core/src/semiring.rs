//! The tropical semifield `T = R ∪ {-∞}` with `max` as addition and `+` as
//! multiplication.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::rational::{format_rational, parse_rational, Rational};
use crate::{Error, Result};

/// An element of `T`. `NegInfinity` is the additive zero and the least
/// element; `Finite(0)` is the multiplicative unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TropicalScalar {
    NegInfinity,
    Finite(Rational),
}

impl TropicalScalar {
    pub fn zero() -> Self {
        TropicalScalar::NegInfinity
    }

    pub fn one() -> Self {
        TropicalScalar::Finite(Rational::zero())
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropicalScalar::Finite(q) => Some(q),
            TropicalScalar::NegInfinity => None,
        }
    }

    pub fn is_neg_infinity(&self) -> bool {
        matches!(self, TropicalScalar::NegInfinity)
    }

    /// Tropical sum: the maximum.
    pub fn trop_add(&self, other: &Self) -> Self {
        std::cmp::max(self, other).clone()
    }

    /// Tropical product: the ordinary sum, with `-∞` absorbing.
    pub fn trop_mul(&self, other: &Self) -> Self {
        match (self, other) {
            (TropicalScalar::Finite(a), TropicalScalar::Finite(b)) => TropicalScalar::Finite(a + b),
            _ => TropicalScalar::NegInfinity,
        }
    }

    /// Tropical power `k·a`. Negative powers of `-∞` have no meaning.
    pub fn trop_pow(&self, k: i64) -> Result<Self> {
        match self {
            TropicalScalar::Finite(a) => Ok(TropicalScalar::Finite(a * Rational::from_integer(BigInt::from(k)))),
            TropicalScalar::NegInfinity if k < 0 => Err(Error::NegativePowerOfZero),
            TropicalScalar::NegInfinity if k == 0 => Ok(Self::one()),
            TropicalScalar::NegInfinity => Ok(TropicalScalar::NegInfinity),
        }
    }
}

impl From<Rational> for TropicalScalar {
    fn from(q: Rational) -> Self {
        TropicalScalar::Finite(q)
    }
}

impl PartialOrd for TropicalScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropicalScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        use TropicalScalar::*;
        match (self, other) {
            (NegInfinity, NegInfinity) => Ordering::Equal,
            (NegInfinity, Finite(_)) => Ordering::Less,
            (Finite(_), NegInfinity) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for TropicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalScalar::NegInfinity => f.write_str("-inf"),
            TropicalScalar::Finite(q) => f.write_str(&format_rational(q)),
        }
    }
}

impl FromStr for TropicalScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "-inf" {
            Ok(TropicalScalar::NegInfinity)
        } else {
            parse_rational(s).map(TropicalScalar::Finite)
        }
    }
}

pub fn trop_add(a: &TropicalScalar, b: &TropicalScalar) -> TropicalScalar {
    a.trop_add(b)
}

pub fn trop_mul(a: &TropicalScalar, b: &TropicalScalar) -> TropicalScalar {
    a.trop_mul(b)
}

pub fn trop_pow(a: &TropicalScalar, k: i64) -> Result<TropicalScalar> {
    a.trop_pow(k)
}
