use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error};

/// An integer or half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    pub const fn int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    pub const fn twice(self) -> i32 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    /// `2j + 1`.
    pub const fn multiplicity(self) -> i32 {
        self.0 + 1
    }

    /// Integer value, if this is an integer.
    pub const fn as_integer(self) -> Option<i32> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    /// Projections `-j, -j+1, ..., j`.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> {
        let j = self.0;
        (-j..=j).step_by(2).map(HalfInt)
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl From<i32> for HalfInt {
    fn from(n: i32) -> Self {
        HalfInt::int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `3`, `-2`, `5/2`, `-1/2`, `2.5`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || domain(format!("not an integer or half-integer: {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i32 = num.trim().parse().map_err(|_| bad())?;
            let den: i32 = den.trim().parse().map_err(|_| bad())?;
            return match den {
                1 => Ok(HalfInt::int(num)),
                2 => Ok(HalfInt(num)),
                _ => Err(bad()),
            };
        }
        if let Ok(n) = s.parse::<i32>() {
            return Ok(HalfInt::int(n));
        }
        let v: f64 = s.parse().map_err(|_| bad())?;
        let twice = 2.0 * v;
        if twice.fract() != 0.0 || twice.abs() > i32::MAX as f64 {
            return Err(bad());
        }
        Ok(HalfInt(twice as i32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for (text, twice) in [("2", 4), ("-1/2", -1), ("5/2", 5), ("1.5", 3), ("4/1", 8)] {
            let h: HalfInt = text.parse().unwrap();
            assert_eq!(h.twice(), twice, "{text}");
            assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
        }
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("0.25".parse::<HalfInt>().is_err());
        assert!("abc".parse::<HalfInt>().is_err());
    }

    #[test]
    fn projections_cover_range() {
        let m: Vec<_> = HalfInt::from_twice(3).projections().map(|m| m.twice()).collect();
        assert_eq!(m, vec![-3, -1, 1, 3]);
        assert_eq!(HalfInt::ZERO.projections().count(), 1);
    }
}
