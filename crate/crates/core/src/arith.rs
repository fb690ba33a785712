//! Checked integer helpers shared by every module.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

#[inline]
pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

#[inline]
pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

#[inline]
pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

#[inline]
pub(crate) fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow("narrowing to 64 bits"))
}

/// Non-negative gcd. `gcd(0, 0) == 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    i64::try_from(a).expect("gcd of two i64 values exceeds i64::MAX")
}

pub fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    gcd(gcd(a, b), c)
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y == g >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    (old_r as i64, old_s as i64, old_t as i64)
}

/// Inverse of `a` modulo `m > 0`, in `0..m`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m <= 0 {
        return None;
    }
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

/// Determinant of a 3x3 integer matrix (rows).
///
/// Tries checked 64-bit arithmetic first and falls back to arbitrary
/// precision when an intermediate product overflows; only a result outside
/// the 64-bit range is an error.
pub fn det3(m: &[[i64; 3]; 3]) -> Result<i64> {
    match det3_checked(m) {
        Some(d) => Ok(d),
        None => {
            let b = |i: usize, j: usize| BigInt::from(m[i][j]);
            let d = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1))
                - b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0))
                + b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
            d.to_i64().ok_or(Error::Overflow("determinant"))
        }
    }
}

fn det3_checked(m: &[[i64; 3]; 3]) -> Option<i64> {
    let minor = |a: i64, b: i64, c: i64, d: i64| a.checked_mul(d)?.checked_sub(b.checked_mul(c)?);
    let c0 = minor(m[1][1], m[1][2], m[2][1], m[2][2])?;
    let c1 = minor(m[1][0], m[1][2], m[2][0], m[2][2])?;
    let c2 = minor(m[1][0], m[1][1], m[2][0], m[2][1])?;
    m[0][0]
        .checked_mul(c0)?
        .checked_sub(m[0][1].checked_mul(c1)?)?
        .checked_add(m[0][2].checked_mul(c2)?)
}

/// Exact comparison helpers for rationals without going through `Ratio`
/// arithmetic (which may overflow on `i64`).
pub(crate) fn ratio_parts(r: &Rational) -> (i128, i128) {
    (*r.numer() as i128, *r.denom() as i128)
}
