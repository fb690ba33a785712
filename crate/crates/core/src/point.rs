use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};

/// A point of Z^3. The derived order is lexicographic in (x, y, z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[i64; 3]", into = "[i64; 3]")]
pub struct LatticePoint3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

/// Shorthand constructor.
pub const fn pt(x: i64, y: i64, z: i64) -> LatticePoint3 {
    LatticePoint3 { x, y, z }
}

impl From<[i64; 3]> for LatticePoint3 {
    fn from(a: [i64; 3]) -> Self {
        pt(a[0], a[1], a[2])
    }
}

impl From<LatticePoint3> for [i64; 3] {
    fn from(p: LatticePoint3) -> Self {
        p.to_array()
    }
}

impl fmt::Display for LatticePoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

impl LatticePoint3 {
    pub const ORIGIN: LatticePoint3 = pt(0, 0, 0);

    pub const fn to_array(self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn checked_add(self, o: Self) -> Result<Self> {
        Ok(pt(arith::add(self.x, o.x)?, arith::add(self.y, o.y)?, arith::add(self.z, o.z)?))
    }

    pub fn checked_sub(self, o: Self) -> Result<Self> {
        Ok(pt(arith::sub(self.x, o.x)?, arith::sub(self.y, o.y)?, arith::sub(self.z, o.z)?))
    }

    pub fn checked_scale(self, k: i64) -> Result<Self> {
        Ok(pt(arith::mul(self.x, k)?, arith::mul(self.y, k)?, arith::mul(self.z, k)?))
    }

    pub fn checked_neg(self) -> Result<Self> {
        self.checked_scale(-1)
    }

    pub fn dot(self, o: Self) -> Result<i64> {
        let s = self.x as i128 * o.x as i128 + self.y as i128 * o.y as i128 + self.z as i128 * o.z as i128;
        arith::narrow(s)
    }

    pub fn cross(self, o: Self) -> Result<Self> {
        let c = |a: i64, b: i64, c: i64, d: i64| arith::narrow(a as i128 * d as i128 - b as i128 * c as i128);
        Ok(pt(c(self.y, self.z, o.y, o.z)?, c(self.z, self.x, o.z, o.x)?, c(self.x, self.y, o.x, o.y)?))
    }

    pub fn content(self) -> i64 {
        arith::gcd3(self.x, self.y, self.z)
    }

    pub fn is_primitive(self) -> bool {
        self.content() == 1
    }

    /// The primitive vector on the same ray; the zero vector stays zero.
    pub fn primitive(self) -> Self {
        match self.content() {
            0 => self,
            g => pt(self.x / g, self.y / g, self.z / g),
        }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ORIGIN
    }
}

/// A point of Q^3. `Ratio` keeps each coordinate reduced with a positive
/// denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPoint3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl RationalPoint3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        RationalPoint3 { x, y, z }
    }

    /// `(xn/d, yn/d, zn/d)` reduced.
    pub fn from_scaled(xn: i64, yn: i64, zn: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameters("zero denominator".into()));
        }
        Ok(Self::new(Rational::new(xn, d), Rational::new(yn, d), Rational::new(zn, d)))
    }

    pub fn coords(&self) -> [Rational; 3] {
        [self.x, self.y, self.z]
    }

    /// Least common denominator `d` and numerators `n` with `self = n / d`.
    pub fn common_denominator(&self) -> Result<(LatticePoint3, i64)> {
        let mut d: i64 = 1;
        for c in self.coords() {
            let den = *c.denom();
            d = arith::mul(d / arith::gcd(d, den), den)?;
        }
        let num = |c: Rational| arith::mul(*c.numer(), d / *c.denom());
        Ok((pt(num(self.x)?, num(self.y)?, num(self.z)?), d))
    }

    pub fn is_integral(&self) -> bool {
        self.coords().iter().all(|c| c.is_integer())
    }

    pub fn to_lattice(&self) -> Option<LatticePoint3> {
        self.is_integral()
            .then(|| pt(self.x.to_integer(), self.y.to_integer(), self.z.to_integer()))
    }
}

impl From<LatticePoint3> for RationalPoint3 {
    fn from(p: LatticePoint3) -> Self {
        RationalPoint3::new(Rational::from(p.x), Rational::from(p.y), Rational::from(p.z))
    }
}

impl fmt::Display for RationalPoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}
