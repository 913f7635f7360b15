//! Unweighted distance values: a `u64` extended with a greatest element
//! `Infinite`, plus the signed differences that deletion reports use.
//!
//! JSON encoding is a plain number for finite values and the string `"inf"`
//! otherwise, for both [`Distance`] and [`Delta`].

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A shortest-path distance or a sum of them. `Infinite` compares greater
/// than every finite value and absorbs addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(x) => Some(x),
            Distance::Infinite => None,
        }
    }

    /// Finite difference `self - earlier` as a [`Delta`]. Infinity on either
    /// side yields `Delta::Infinite`.
    pub fn delta_from(self, earlier: Distance) -> Delta {
        match (self, earlier) {
            (Distance::Finite(a), Distance::Finite(b)) => {
                Delta::Finite(a as i64 - b as i64)
            }
            _ => Delta::Infinite,
        }
    }
}

impl From<u64> for Distance {
    fn from(x: u64) -> Self {
        Distance::Finite(x)
    }
}

impl Add for Distance {
    type Output = Distance;
    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => {
                // Distances here are bounded by n and sums by n^3, far below
                // u64; overflow means a logic error, not valid input.
                Distance::Finite(a.checked_add(b).expect("distance sum overflow"))
            }
            _ => Distance::Infinite,
        }
    }
}

impl Add<u64> for Distance {
    type Output = Distance;
    fn add(self, rhs: u64) -> Distance {
        self + Distance::Finite(rhs)
    }
}

impl Sum for Distance {
    fn sum<I: Iterator<Item = Distance>>(iter: I) -> Distance {
        iter.fold(Distance::Finite(0), Add::add)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(x) => write!(f, "{x}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(x) => s.serialize_u64(*x),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

struct DistanceVisitor;

impl<'de> Visitor<'de> for DistanceVisitor {
    type Value = Distance;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a nonnegative integer or the string \"inf\"")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Distance, E> {
        Ok(Distance::Finite(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Distance, E> {
        u64::try_from(v)
            .map(Distance::Finite)
            .map_err(|_| E::custom("negative distance"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Distance, E> {
        if v == "inf" {
            Ok(Distance::Infinite)
        } else {
            Err(E::custom(format!("expected \"inf\", got {v:?}")))
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Distance, D::Error> {
        d.deserialize_any(DistanceVisitor)
    }
}

/// A signed change in a distance sum, or `Infinite` when either side of the
/// difference is infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Delta {
    Finite(i64),
    Infinite,
}

impl Delta {
    pub fn is_zero(self) -> bool {
        self == Delta::Finite(0)
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta::Finite(x) => write!(f, "{x}"),
            Delta::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Delta {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Delta::Finite(x) => s.serialize_i64(*x),
            Delta::Infinite => s.serialize_str("inf"),
        }
    }
}

struct DeltaVisitor;

impl<'de> Visitor<'de> for DeltaVisitor {
    type Value = Delta;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or the string \"inf\"")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Delta, E> {
        i64::try_from(v)
            .map(Delta::Finite)
            .map_err(|_| E::custom("delta out of range"))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Delta, E> {
        Ok(Delta::Finite(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Delta, E> {
        if v == "inf" {
            Ok(Delta::Infinite)
        } else {
            Err(E::custom(format!("expected \"inf\", got {v:?}")))
        }
    }
}

impl<'de> Deserialize<'de> for Delta {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Delta, D::Error> {
        d.deserialize_any(DeltaVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_greatest_and_absorbing() {
        assert!(Distance::Infinite > Distance::Finite(u64::MAX));
        assert!(Distance::Finite(3) < Distance::Finite(4));
        assert_eq!(
            Distance::Finite(3) + Distance::Infinite,
            Distance::Infinite
        );
        assert_eq!(Distance::Infinite + 7, Distance::Infinite);
        let s: Distance = [1u64, 2, 3].into_iter().map(Distance::from).sum();
        assert_eq!(s, Distance::Finite(6));
        let s: Distance = [Distance::Finite(1), Distance::Infinite]
            .into_iter()
            .sum();
        assert_eq!(s, Distance::Infinite);
    }

    #[test]
    fn json_round_trip() {
        let f = Distance::Finite(2349);
        let i = Distance::Infinite;
        assert_eq!(serde_json::to_string(&f).unwrap(), "2349");
        assert_eq!(serde_json::to_string(&i).unwrap(), "\"inf\"");
        assert_eq!(
            serde_json::from_str::<Distance>("2349").unwrap(),
            Distance::Finite(2349)
        );
        assert_eq!(
            serde_json::from_str::<Distance>("\"inf\"").unwrap(),
            Distance::Infinite
        );
        assert!(serde_json::from_str::<Distance>("-1").is_err());
        assert!(serde_json::from_str::<Distance>("\"nope\"").is_err());

        assert_eq!(serde_json::to_string(&Delta::Finite(-5)).unwrap(), "-5");
        assert_eq!(
            serde_json::from_str::<Delta>("-5").unwrap(),
            Delta::Finite(-5)
        );
        assert_eq!(
            serde_json::from_str::<Delta>("\"inf\"").unwrap(),
            Delta::Infinite
        );
    }

    #[test]
    fn deltas() {
        assert_eq!(
            Distance::Finite(120).delta_from(Distance::Finite(125)),
            Delta::Finite(-5)
        );
        assert_eq!(
            Distance::Infinite.delta_from(Distance::Finite(1)),
            Delta::Infinite
        );
        assert!(Distance::Finite(7).delta_from(Distance::Finite(7)).is_zero());
    }
}
