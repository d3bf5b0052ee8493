//! Exact scalars for root coordinates: `a + b·φ` with `φ² = φ + 1`.
//!
//! Crystallographic contexts only ever produce `b = 0`, so plain integers
//! embed as `Scalar { a, b: 0 }`; pentagonal bonds (type H, I₂(5)) live in
//! the full ring ℤ[φ]. Comparisons are exact, via integer arithmetic on
//! `2a + b + b√5`.

use std::cmp::Ordering;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub a: i64,
    pub b: i64,
}

pub const ZERO: Scalar = Scalar { a: 0, b: 0 };
pub const ONE: Scalar = Scalar { a: 1, b: 0 };
pub const PHI: Scalar = Scalar { a: 0, b: 1 };

impl Scalar {
    pub const fn int(a: i64) -> Self {
        Scalar { a, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Sign of `a + bφ` as a real number: -1, 0, or 1.
    pub fn signum(&self) -> i32 {
        // a + bφ = (x + y√5)/2 with x = 2a + b, y = b.
        let x = 2 * self.a as i128 + self.b as i128;
        let y = self.b as i128;
        if x == 0 && y == 0 {
            return 0;
        }
        if x >= 0 && y >= 0 {
            return 1;
        }
        if x <= 0 && y <= 0 {
            return -1;
        }
        // Opposite signs: compare x² with 5y².
        let d = x * x - 5 * y * y;
        // x > 0 > y: positive iff x² > 5y²; x < 0 < y: positive iff x² < 5y².
        if x > 0 {
            if d > 0 { 1 } else if d < 0 { -1 } else { 0 }
        } else if d < 0 {
            1
        } else if d > 0 {
            -1
        } else {
            0
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }
}

impl From<i64> for Scalar {
    fn from(a: i64) -> Self {
        Scalar::int(a)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Scalar { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        Scalar { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ.
        Scalar {
            a: self.a * o.a + self.b * o.b,
            b: self.a * o.b + self.b * o.a + self.b * o.b,
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self = *self + o;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        *self = *self - o;
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}φ"),
            (a, b) if b < 0 => write!(f, "{a}{b}φ"),
            (a, b) => write!(f, "{a}+{b}φ"),
        }
    }
}
