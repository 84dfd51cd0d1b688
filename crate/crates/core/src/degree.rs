//! Membership degrees: exact rationals in the closed unit interval.
//!
//! Only the lattice structure of `[0, 1]` is ever used by the automata in this
//! crate (`max` as join, `min` as meet), so a degree never needs arithmetic
//! beyond comparison. Values are kept exact so that transition matrices can be
//! compared and hashed reliably.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A degree of membership `r` with `0 <= r <= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(Ratio<u64>);

impl Degree {
    pub const ZERO: Degree = Degree(Ratio::new_raw(0, 1));
    pub const ONE: Degree = Degree(Ratio::new_raw(1, 1));

    /// Builds `numer / denom`, reduced. Fails unless the value lies in `[0, 1]`.
    pub fn new(numer: u64, denom: u64) -> Result<Self, Error> {
        if denom == 0 {
            return Err(Error::InvalidDegree(format!("{numer}/{denom}")));
        }
        if numer > denom {
            return Err(Error::DegreeOutOfRange(format!("{numer}/{denom}")));
        }
        Ok(Degree(Ratio::new(numer, denom)))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    pub fn is_positive(&self) -> bool {
        self.numer() > 0
    }

    pub fn is_one(&self) -> bool {
        self.numer() == self.denom()
    }

    /// `r ∧ s`
    pub fn meet(self, other: Degree) -> Degree {
        self.min(other)
    }

    /// `r ∨ s`
    pub fn join(self, other: Degree) -> Degree {
        self.max(other)
    }

    /// Lossy conversion, for display purposes only.
    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

pub fn meet(a: Degree, b: Degree) -> Degree {
    a.meet(b)
}

pub fn join(a: Degree, b: Degree) -> Degree {
    a.join(b)
}

impl Default for Degree {
    fn default() -> Self {
        Degree::ZERO
    }
}

impl fmt::Display for Degree {
    /// Canonical reduced fraction; `0` and `1` print as integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_u64(digits: &str, literal: &str) -> Result<u64, Error> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidDegree(literal.to_string()));
    }
    digits
        .parse::<u64>()
        .map_err(|_| Error::InvalidDegree(literal.to_string()))
}

impl FromStr for Degree {
    type Err = Error;

    /// Accepts decimal literals (`0.25`, `.5`, `1.0`), fractions (`1/4`) and
    /// the integers `0` and `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let numer = parse_u64(num, s)?;
            let denom = parse_u64(den, s)?;
            return Degree::new(numer, denom);
        }
        if let Some((int, frac)) = s.split_once('.') {
            let int = if int.is_empty() { 0 } else { parse_u64(int, s)? };
            let frac = frac.trim_end_matches('0');
            if frac.is_empty() {
                return Degree::new(int, 1);
            }
            // 10^19 overflows u64.
            if frac.len() > 18 {
                return Err(Error::InvalidDegree(s.to_string()));
            }
            let denom = 10u64.pow(frac.len() as u32);
            let frac = parse_u64(frac, s)?;
            let numer = int
                .checked_mul(denom)
                .and_then(|n| n.checked_add(frac))
                .ok_or_else(|| Error::DegreeOutOfRange(s.to_string()))?;
            return Degree::new(numer, denom);
        }
        let int = parse_u64(s, s)?;
        Degree::new(int, 1)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    #[test]
    fn meet_and_join() {
        assert_eq!(meet(d("0.3"), d("0.4")), d("0.3"));
        assert_eq!(meet(Degree::ONE, Degree::ONE), Degree::ONE);
        assert_eq!(meet(Degree::ZERO, d("0.7")), Degree::ZERO);
        assert_eq!(join(d("0.2"), d("0.6")), d("0.6"));
        assert_eq!(join(Degree::ZERO, Degree::ZERO), Degree::ZERO);
        assert_eq!(join(Degree::ONE, d("0.5")), Degree::ONE);
    }

    #[test]
    fn literals() {
        assert_eq!(d("0.25"), Degree::new(1, 4).unwrap());
        assert_eq!(d("1/4"), Degree::new(1, 4).unwrap());
        assert_eq!(d("2/8"), Degree::new(1, 4).unwrap());
        assert_eq!(d(".5"), Degree::new(1, 2).unwrap());
        assert_eq!(d("1.0"), Degree::ONE);
        assert_eq!(d("1"), Degree::ONE);
        assert_eq!(d("0"), Degree::ZERO);
        assert_eq!(d("0.3").to_string(), "3/10");
        assert_eq!(d("1.000").to_string(), "1");
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(matches!("1.5".parse::<Degree>(), Err(Error::DegreeOutOfRange(_))));
        assert!(matches!("3/2".parse::<Degree>(), Err(Error::DegreeOutOfRange(_))));
        assert!(matches!("2".parse::<Degree>(), Err(Error::DegreeOutOfRange(_))));
        for bad in ["", "-0.5", "1/0", "abc", "0.5.1", "1/", "/2", "0x1"] {
            assert!(bad.parse::<Degree>().is_err(), "{bad:?} should not parse");
        }
    }

    fn degree() -> impl Strategy<Value = Degree> {
        (1u64..=60)
            .prop_flat_map(|den| (0..=den, Just(den)))
            .prop_map(|(n, den)| Degree::new(n, den).unwrap())
    }

    proptest! {
        #[test]
        fn lattice_laws(a in degree(), b in degree(), c in degree()) {
            prop_assert_eq!(a.meet(b), b.meet(a));
            prop_assert_eq!(a.join(b), b.join(a));
            prop_assert_eq!(a.meet(b.meet(c)), a.meet(b).meet(c));
            prop_assert_eq!(a.join(b.join(c)), a.join(b).join(c));
            prop_assert_eq!(a.meet(a.join(b)), a);
            prop_assert_eq!(a.join(a.meet(b)), a);
            prop_assert_eq!(a.meet(a), a);
            prop_assert_eq!(a.join(a), a);
        }

        #[test]
        fn no_new_values(a in degree(), b in degree()) {
            prop_assert!(a.meet(b) == a || a.meet(b) == b);
            prop_assert!(a.join(b) == a || a.join(b) == b);
        }

        #[test]
        fn display_round_trips(a in degree()) {
            prop_assert_eq!(a.to_string().parse::<Degree>().unwrap(), a);
        }
    }
}
