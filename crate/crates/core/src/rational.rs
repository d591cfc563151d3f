use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"num/den"` or a plain integer literal.
pub fn parse_rational(text: &str) -> Result<Rat> {
    let t = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let num = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num = BigInt::from_str(t).map_err(|_| bad())?;
            Ok(BigRational::from_integer(num))
        }
    }
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A point with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<Rat>);

impl Point {
    pub fn new(coords: Vec<Rat>) -> Self {
        Self(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn parse(coords: &[&str]) -> Result<Self> {
        Ok(Self(
            coords
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> &Rat {
        &self.0[i]
    }

    pub fn sub(&self, other: &Point) -> Vec<Rat> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a - b)
            .collect()
    }

    pub fn add(&self, other: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, factor: &Rat) -> Point {
        Point(self.0.iter().map(|c| c * factor).collect())
    }

    /// Arithmetic mean of a non-empty point list.
    pub fn centroid(points: &[Point]) -> Point {
        let d = points[0].dim();
        let mut sums = vec![Rat::zero(); d];
        for p in points {
            for (s, c) in sums.iter_mut().zip(p.coords()) {
                *s += c;
            }
        }
        let n = rat(points.len() as i64);
        Point(sums.into_iter().map(|s| s / &n).collect())
    }

    /// Affine combination with the given weights (assumed to sum to 1).
    pub fn combine(points: &[Point], weights: &[Rat]) -> Point {
        let d = points[0].dim();
        let mut sums = vec![Rat::zero(); d];
        for (p, w) in points.iter().zip(weights) {
            for (s, c) in sums.iter_mut().zip(p.coords()) {
                *s += c * w;
            }
        }
        Point(sums)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(format_rational))
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<serde_json::Value> = Vec::deserialize(deserializer)?;
        let coords = raw
            .iter()
            .map(rational_from_value)
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        Ok(Point(coords))
    }
}

/// Accepts an integer literal or a `"num/den"` string.
pub fn rational_from_value(value: &serde_json::Value) -> Result<Rat> {
    match value {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(rat(i))
            } else {
                Err(Error::InvalidRational(n.to_string()))
            }
        }
        serde_json::Value::String(s) => parse_rational(s),
        other => Err(Error::InvalidRational(other.to_string())),
    }
}

/// Serde adapter for a single rational as a canonical `"n/d"` string,
/// accepting integer literals on input.
pub mod rat_serde {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RatLit {
        Int(i64),
        Text(String),
    }

    impl RatLit {
        pub(crate) fn to_rat(&self) -> Result<Rat> {
            match self {
                RatLit::Int(i) => Ok(rat(*i)),
                RatLit::Text(t) => parse_rational(t),
            }
        }
    }

    pub fn serialize<S: Serializer>(x: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        RatLit::deserialize(d)?.to_rat().map_err(de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rat>` in the same canonical form.
pub mod rat_vec_serde {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rat>, D::Error> {
        let lits: Vec<rat_serde::RatLit> = Vec::deserialize(d)?;
        lits.iter()
            .map(|l| l.to_rat().map_err(de::Error::custom))
            .collect()
    }
}

/// Serde adapter for `Vec<Vec<Rat>>` in the same canonical form.
pub mod rat_mat_serde {
    use super::*;

    pub fn serialize<S: Serializer>(
        xs: &[Vec<Rat>],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(
            xs.iter()
                .map(|row| row.iter().map(format_rational).collect::<Vec<_>>()),
        )
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Vec<Rat>>, D::Error> {
        let lits: Vec<Vec<rat_serde::RatLit>> = Vec::deserialize(d)?;
        lits.iter()
            .map(|row| {
                row.iter()
                    .map(|l| l.to_rat().map_err(de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

pub fn sign(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
