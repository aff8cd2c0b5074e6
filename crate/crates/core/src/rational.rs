//! Exact rational helpers shared by every module that reports numbers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = num_rational::BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn big(v: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(v.clone()))
}

/// Parses a printed decimal such as `0.19816` or `-3.98` into the exact
/// rational those digits denote.
pub fn decimal(text: &str) -> Rational {
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits = format!("{whole}{frac}");
    let num: BigInt = digits.parse().expect("decimal literal");
    let den = BigInt::from(10u32).pow(frac.len() as u32);
    let r = Rational::new(num, den);
    if neg {
        -r
    } else {
        r
    }
}

/// Renders `r` with exactly `digits` fractional digits, rounding half away
/// from zero.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r.abs() * Rational::from_integer(scale.clone());
    let floor = scaled.floor().to_integer();
    let rem = scaled - Rational::from_integer(floor.clone());
    let rounded = if rem * int(2) >= Rational::one() {
        floor + 1
    } else {
        floor
    };
    let (whole, frac) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && !rounded_is_zero(&whole, &frac) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    format!(
        "{sign}{whole}.{:0>width$}",
        frac.to_string(),
        width = digits
    )
}

fn rounded_is_zero(whole: &BigInt, frac: &BigInt) -> bool {
    whole.is_zero() && frac.is_zero()
}

/// `"p/q"` (or `"p"` for integers).
pub fn to_fraction(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_fraction(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None if text.contains('.') => {
            let ok = text
                .trim_start_matches('-')
                .chars()
                .all(|c| c.is_ascii_digit() || c == '.');
            ok.then(|| decimal(text))
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// JSON carrier for an exact rational: the fraction plus a 12-digit
/// decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub exact: String,
    pub decimal: String,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        RationalJson {
            exact: to_fraction(r),
            decimal: to_decimal(r, 12),
        }
    }
}

impl RationalJson {
    pub fn value(&self) -> Option<Rational> {
        parse_fraction(&self.exact)
    }
}

/// serde adapter so domain types can hold `Rational` fields directly.
pub mod serde_rational {
    use super::{Rational, RationalJson};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        RationalJson::from(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let j = RationalJson::deserialize(d)?;
        j.value()
            .ok_or_else(|| serde::de::Error::custom(format!("bad rational {:?}", j.exact)))
    }
}

pub mod serde_rational_vec {
    use super::{Rational, RationalJson};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let js: Vec<RationalJson> = v.iter().map(RationalJson::from).collect();
        js.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let js = Vec::<RationalJson>::deserialize(d)?;
        js.into_iter()
            .map(|j| {
                j.value()
                    .ok_or_else(|| serde::de::Error::custom(format!("bad rational {:?}", j.exact)))
            })
            .collect()
    }
}
