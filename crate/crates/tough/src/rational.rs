//! Exact nonnegative rational values with a distinguished infinity.
//!
//! Toughness values are ratios |S| / ω(G−S) of small integers, together with
//! the convention that complete graphs have infinite toughness. All
//! comparisons and arithmetic are exact; no floating point is involved
//! anywhere in the crate.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

/// A nonnegative rational number or infinity.
///
/// Finite values are kept in lowest terms with a strictly positive
/// denominator, so structural equality coincides with numeric equality.
/// The total order places `Infinity` above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite { num: u64, den: u64 },
    Infinity,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl ExtendedRational {
    /// Builds `num/den` reduced to lowest terms. Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "denominator must be positive");
        let g = gcd(num, den);
        if num == 0 {
            ExtendedRational::Finite { num: 0, den: 1 }
        } else {
            ExtendedRational::Finite {
                num: num / g,
                den: den / g,
            }
        }
    }

    pub fn from_int(k: u64) -> Self {
        ExtendedRational::Finite { num: k, den: 1 }
    }

    pub fn zero() -> Self {
        ExtendedRational::Finite { num: 0, den: 1 }
    }

    pub fn infinity() -> Self {
        ExtendedRational::Infinity
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::Infinity)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtendedRational::Finite { num: 0, .. })
    }

    /// Numerator and denominator of a finite value, in lowest terms.
    pub fn as_ratio(&self) -> Option<(u64, u64)> {
        match *self {
            ExtendedRational::Finite { num, den } => Some((num, den)),
            ExtendedRational::Infinity => None,
        }
    }

    /// Multiplicative inverse. Panics on zero or infinity.
    pub fn recip(&self) -> Self {
        match *self {
            ExtendedRational::Finite { num, den } => {
                assert!(num > 0, "recip of zero");
                ExtendedRational::Finite { num: den, den: num }
            }
            ExtendedRational::Infinity => panic!("recip of infinity"),
        }
    }

    /// `self * k`, exact. Infinity stays infinity for `k > 0`.
    pub fn times(&self, k: u64) -> Self {
        match *self {
            ExtendedRational::Finite { num, den } => ExtendedRational::new(num * k, den),
            ExtendedRational::Infinity => {
                assert!(k > 0, "0 * infinity is undefined");
                ExtendedRational::Infinity
            }
        }
    }

    /// `self + k`, exact.
    pub fn plus(&self, k: u64) -> Self {
        match *self {
            ExtendedRational::Finite { num, den } => ExtendedRational::new(num + k * den, den),
            ExtendedRational::Infinity => ExtendedRational::Infinity,
        }
    }

    /// Smallest integer ≥ `2 * self`. Panics on infinity.
    pub fn ceil_of_double(&self) -> u64 {
        match *self {
            ExtendedRational::Finite { num, den } => (2 * num).div_ceil(den),
            ExtendedRational::Infinity => panic!("ceil of infinity"),
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedRational::*;
        match (self, other) {
            (Infinity, Infinity) => Ordering::Equal,
            (Infinity, Finite { .. }) => Ordering::Greater,
            (Finite { .. }, Infinity) => Ordering::Less,
            (Finite { num: a, den: b }, Finite { num: c, den: d }) => {
                // Values are tiny (≤ 64 in practice) but widen anyway.
                (*a as u128 * *d as u128).cmp(&(*c as u128 * *b as u128))
            }
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExtendedRational::Finite { num, den } => {
                if den == 1 {
                    write!(f, "{num}")
                } else {
                    write!(f, "{num}/{den}")
                }
            }
            ExtendedRational::Infinity => write!(f, "inf"),
        }
    }
}

// JSON form: {"num": p, "den": q} for finite values, the string "inf" otherwise.
impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match *self {
            ExtendedRational::Finite { num, den } => {
                let mut s = serializer.serialize_struct("ExtendedRational", 2)?;
                s.serialize_field("num", &num)?;
                s.serialize_field("den", &den)?;
                s.end()
            }
            ExtendedRational::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct RatVisitor;

        impl<'de> Visitor<'de> for RatVisitor {
            type Value = ExtendedRational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("\"inf\" or {num, den}")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                if v == "inf" {
                    Ok(ExtendedRational::Infinity)
                } else {
                    Err(E::custom(format!("unexpected rational string {v:?}")))
                }
            }

            fn visit_map<A: de::MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut num = None;
                let mut den = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "num" => num = Some(map.next_value::<u64>()?),
                        "den" => den = Some(map.next_value::<u64>()?),
                        other => return Err(de::Error::custom(format!("unknown field {other:?}"))),
                    }
                }
                let num = num.ok_or_else(|| de::Error::missing_field("num"))?;
                let den = den.ok_or_else(|| de::Error::missing_field("den"))?;
                if den == 0 {
                    return Err(de::Error::custom("zero denominator"));
                }
                Ok(ExtendedRational::new(num, den))
            }
        }

        deserializer.deserialize_any(RatVisitor)
    }
}
