//! Integers extended by `−∞`, the codomain of `ε_a` and `φ_a`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Sub};

/// An integer or the distinguished value `−∞`.
///
/// `−∞` is absorbing under addition and is smaller than every integer, so
/// `max` and comparisons behave as the tensor product rule expects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedInt {
    NegInfinity,
    Finite(i64),
}

impl ExtendedInt {
    pub const ZERO: ExtendedInt = ExtendedInt::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedInt::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtendedInt::Finite(n) => Some(n),
            ExtendedInt::NegInfinity => None,
        }
    }
}

impl From<i64> for ExtendedInt {
    fn from(n: i64) -> Self {
        ExtendedInt::Finite(n)
    }
}

impl Ord for ExtendedInt {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedInt::*;
        match (self, other) {
            (NegInfinity, NegInfinity) => Ordering::Equal,
            (NegInfinity, Finite(_)) => Ordering::Less,
            (Finite(_), NegInfinity) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for ExtendedInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<i64> for ExtendedInt {
    type Output = ExtendedInt;

    fn add(self, rhs: i64) -> ExtendedInt {
        match self {
            ExtendedInt::Finite(n) => ExtendedInt::Finite(n + rhs),
            ExtendedInt::NegInfinity => ExtendedInt::NegInfinity,
        }
    }
}

impl Sub<i64> for ExtendedInt {
    type Output = ExtendedInt;

    fn sub(self, rhs: i64) -> ExtendedInt {
        self + (-rhs)
    }
}

impl Add for ExtendedInt {
    type Output = ExtendedInt;

    fn add(self, rhs: ExtendedInt) -> ExtendedInt {
        match (self, rhs) {
            (ExtendedInt::Finite(a), ExtendedInt::Finite(b)) => ExtendedInt::Finite(a + b),
            _ => ExtendedInt::NegInfinity,
        }
    }
}

impl PartialEq<i64> for ExtendedInt {
    fn eq(&self, other: &i64) -> bool {
        *self == ExtendedInt::Finite(*other)
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedInt::Finite(n) => write!(f, "{}", n),
            ExtendedInt::NegInfinity => f.write_str("-inf"),
        }
    }
}
