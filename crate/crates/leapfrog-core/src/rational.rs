//! Exact rational arithmetic.
//!
//! Centroids, displacements, speeds and cycle means are all ratios of
//! machine-sized integers. Everything here is exact: comparisons go through
//! cross multiplication and values are kept reduced, so equality against
//! thresholds like 2/3 is never a floating-point question.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A reduced fraction with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Rational {
        assert!(den != 0, "rational with zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_int(v: i128) -> Rational {
        Rational { num: v, den: 1 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn abs(&self) -> Rational {
        Rational {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    /// Lossy conversion, only for displays and progress output.
    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross multiplication preserves order.
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.den - rhs.num * self.den, self.den * rhs.den)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Rational", 2)?;
        s.serialize_field("num", &(self.num as i64))?;
        s.serialize_field("den", &(self.den as i64))?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: i64,
            den: i64,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Rational::new(raw.num as i128, raw.den as i128))
    }
}

/// A vector of fractions sharing one positive denominator.
///
/// Centroids are stored this way: the numerators are coordinate sums and the
/// denominator is the placement size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalVec {
    pub nums: Vec<i128>,
    pub den: i128,
}

impl RationalVec {
    pub fn new(nums: Vec<i128>, den: i128) -> RationalVec {
        assert!(den > 0, "rational vector needs a positive denominator");
        RationalVec { nums, den }
    }

    pub fn dim(&self) -> usize {
        self.nums.len()
    }

    pub fn component(&self, i: usize) -> Rational {
        Rational::new(self.nums[i], self.den)
    }

    pub fn components(&self) -> impl Iterator<Item = Rational> + '_ {
        (0..self.nums.len()).map(|i| self.component(i))
    }

    /// L1 distance between two rational vectors, exactly.
    pub fn l1_distance(&self, other: &RationalVec) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let mut acc = Rational::ZERO;
        for i in 0..self.dim() {
            acc = acc + (self.component(i) - other.component(i)).abs();
        }
        acc
    }
}

impl fmt::Display for RationalVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        let r = Rational::new(4, -6);
        assert_eq!(r.numerator(), -2);
        assert_eq!(r.denominator(), 3);
        assert_eq!(r.to_string(), "-2/3");
        assert_eq!(Rational::new(0, -5), Rational::ZERO);
    }

    #[test]
    fn exact_comparisons() {
        let two_thirds = Rational::new(2, 3);
        assert!(Rational::new(667, 1000) > two_thirds);
        assert!(Rational::new(666, 1000) < two_thirds);
        assert_eq!(Rational::new(10, 15), two_thirds);
    }

    #[test]
    fn arithmetic() {
        let a = Rational::new(1, 2);
        let b = Rational::new(1, 3);
        assert_eq!(a + b, Rational::new(5, 6));
        assert_eq!(a - b, Rational::new(1, 6));
        assert_eq!(a * b, Rational::new(1, 6));
        assert_eq!(-a, Rational::new(-1, 2));
    }

    #[test]
    fn l1_distance_exact() {
        let a = RationalVec::new(vec![1, 1], 2);
        let b = RationalVec::new(vec![19, 19], 2);
        assert_eq!(a.l1_distance(&b), Rational::from_int(18));
    }
}
