//! Exact rational helpers shared by the density and bound modules.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn from_usize(value: usize) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn floor(value: &Rational) -> BigInt {
    value.floor().to_integer()
}

pub fn to_f64(value: &Rational) -> f64 {
    value.numer().to_f64().unwrap_or(f64::NAN) / value.denom().to_f64().unwrap_or(f64::NAN)
}

/// `"p/q"`, or `"p"` for integers.
pub fn format(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let negative = whole.starts_with('-');
        let whole: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let scale = num::pow(BigInt::from(10), frac.len());
        let frac: BigInt = frac.parse().ok()?;
        let magnitude = Rational::new(whole.abs() * &scale + frac, scale);
        return Some(if negative { -magnitude } else { magnitude });
    }
    text.parse::<BigInt>().ok().map(Rational::from_integer)
}

/// `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Integer square root, rounded down.
pub fn isqrt(value: &BigInt) -> BigInt {
    value.sqrt()
}

pub fn is_perfect_square(value: &BigInt) -> bool {
    let root = isqrt(value);
    &root * &root == *value
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).ok_or_else(|| serde::de::Error::custom(format!("bad rational {text:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3/2"), Some(rat(3, 2)));
        assert_eq!(parse("4"), Some(int(4)));
        assert_eq!(parse("2.75"), Some(rat(11, 4)));
        assert_eq!(parse("-0.5"), Some(rat(-1, 2)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(32, 2), BigInt::from(496));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(7, 0), BigInt::one());
    }

    #[test]
    fn floors_round_down() {
        assert_eq!(floor(&rat(7, 2)), BigInt::from(3));
        assert_eq!(floor(&rat(-7, 2)), BigInt::from(-4));
        assert_eq!(format(&rat(6, 4)), "3/2");
    }

    #[test]
    fn square_roots() {
        assert!(is_perfect_square(&BigInt::from(121)));
        assert!(!is_perfect_square(&BigInt::from(12)));
        assert_eq!(isqrt(&BigInt::from(99)), BigInt::from(9));
    }
}
