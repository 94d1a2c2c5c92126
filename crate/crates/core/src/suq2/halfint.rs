use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    pub const fn int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    pub const fn twice(self) -> i32 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    /// `self - other` when it is an integer.
    pub fn int_diff(self, other: HalfInt) -> Option<i32> {
        let d = self.0 - other.0;
        if d % 2 == 0 {
            Some(d / 2)
        } else {
            None
        }
    }

    /// `m = j, j-1, ..., -j`: the basis ordering of a spin-`j` carrier space.
    pub fn magnetic(j: HalfInt) -> impl Iterator<Item = HalfInt> + Clone {
        (0..=j.0).map(move |k| HalfInt(j.0 - 2 * k))
    }

    /// Position of `m` in [`HalfInt::magnetic`] order.
    pub fn index_in(self, j: HalfInt) -> Option<usize> {
        if self.0.abs() > j.0 || (j.0 - self.0) % 2 != 0 {
            None
        } else {
            Some(((j.0 - self.0) / 2) as usize)
        }
    }

    /// Inverse of [`HalfInt::index_in`].
    pub fn from_index(j: HalfInt, i: usize) -> HalfInt {
        HalfInt(j.0 - 2 * i as i32)
    }

    /// Dimension `2j + 1`.
    pub fn dim(self) -> usize {
        (self.0 + 1) as usize
    }

    /// Labels `0, 1/2, 1, ...` up to `jmax`.
    pub fn up_to(jmax: HalfInt) -> impl Iterator<Item = HalfInt> {
        (0..=jmax.0).map(HalfInt)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}
