//! Exact rationals and small integer-vector helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`. Decimal and exponent notation are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let parse_int = |x: &str| -> Result<BigInt> {
        let digits = x.strip_prefix('-').unwrap_or(x);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        x.parse::<BigInt>().map_err(|_| bad())
    };
    let n = parse_int(num)?;
    let d = match den {
        Some(d) => parse_int(d)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.abs().gcd(&b.abs())
}

/// Lattice length of an integer vector: the gcd of its entries.
pub fn lattice_length(v: [i64; 2]) -> i64 {
    gcd_i64(v[0], v[1])
}

/// Primitive integer vector pointing along a nonzero rational direction.
pub fn primitive_direction(d: &[Rational; 2]) -> Option<[i64; 2]> {
    if d[0].is_zero() && d[1].is_zero() {
        return None;
    }
    let l = d[0].denom().lcm(d[1].denom());
    let x = (&d[0] * Rational::from_integer(l.clone())).to_integer();
    let y = (&d[1] * Rational::from_integer(l)).to_integer();
    let g = x.gcd(&y);
    let (x, y) = (x / &g, y / &g);
    Some([x.to_i64()?, y.to_i64()?])
}

/// Greatest common divisor of a nonempty set of positive rationals: the
/// largest `h` such that every input is an integer multiple of `h`.
pub fn rational_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Option<Rational> {
    let mut acc: Option<Rational> = None;
    for v in values {
        let v = v.abs();
        if v.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => v,
            Some(a) => {
                let l = a.denom().lcm(v.denom());
                let an = (&a * Rational::from_integer(l.clone())).to_integer();
                let vn = (&v * Rational::from_integer(l.clone())).to_integer();
                Rational::new(an.gcd(&vn), l)
            }
        });
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integer_and_fraction_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
    }

    #[test]
    fn rejects_decimals_and_garbage() {
        for s in ["1.5", "1e3", "", "/2", "1/0", "a/b", "--1", "1/-"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn primitive_of_rational_direction() {
        assert_eq!(primitive_direction(&[ratio(2, 3), ratio(-4, 3)]), Some([1, -2]));
        assert_eq!(primitive_direction(&[int(0), ratio(-5, 7)]), Some([0, -1]));
        assert_eq!(primitive_direction(&[int(0), int(0)]), None);
    }

    #[test]
    fn gcd_of_rationals() {
        let v = [ratio(1, 2), ratio(3, 4), int(2)];
        assert_eq!(rational_gcd(v.iter()), Some(ratio(1, 4)));
        let w = [int(2), int(4), int(6)];
        assert_eq!(rational_gcd(w.iter()), Some(int(2)));
    }
}
