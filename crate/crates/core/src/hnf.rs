//! Row-style Hermite normal form of small square integer matrices.

use crate::arith;
use crate::error::{Error, Result};

/// Returns `(h, u)` with `h = u · m`, `u` unimodular and `h` upper triangular
/// with positive diagonal, every entry above a pivot reduced into
/// `0..pivot`. For nonsingular `m` the form `h` is unique, so it is an
/// invariant of the orbit `GL_D(Z) · m`.
pub fn row_hnf<const D: usize>(m: &[[i64; D]; D]) -> Result<([[i64; D]; D], [[i64; D]; D])> {
    let mut h: [[i128; D]; D] = m.map(|r| r.map(|v| v as i128));
    let mut u: [[i128; D]; D] = std::array::from_fn(|i| std::array::from_fn(|j| (i == j) as i128));
    let check = |v: i128| -> Result<i128> {
        if v.unsigned_abs() > (i64::MAX as u128) {
            Err(Error::Overflow("hermite normal form"))
        } else {
            Ok(v)
        }
    };
    for col in 0..D {
        // Euclid on column `col` among rows col..D until a single nonzero remains.
        loop {
            let nonzero: Vec<usize> = (col..D).filter(|&i| h[i][col] != 0).collect();
            if nonzero.is_empty() {
                return Err(Error::Precondition("singular matrix".into()));
            }
            let piv = *nonzero.iter().min_by_key(|&&i| h[i][col].unsigned_abs()).expect("nonempty");
            if nonzero.len() == 1 {
                h.swap(col, piv);
                u.swap(col, piv);
                break;
            }
            for &i in &nonzero {
                if i != piv {
                    let q = h[i][col].div_euclid(h[piv][col]);
                    for j in 0..D {
                        h[i][j] = check(h[i][j] - q * h[piv][j])?;
                        u[i][j] = check(u[i][j] - q * u[piv][j])?;
                    }
                }
            }
        }
        if h[col][col] < 0 {
            h[col] = h[col].map(|v| -v);
            u[col] = u[col].map(|v| -v);
        }
        for i in 0..col {
            let q = h[i][col].div_euclid(h[col][col]);
            if q != 0 {
                for j in 0..D {
                    h[i][j] = check(h[i][j] - q * h[col][j])?;
                    u[i][j] = check(u[i][j] - q * u[col][j])?;
                }
            }
        }
    }
    let narrow = |a: [[i128; D]; D]| -> Result<[[i64; D]; D]> {
        let mut out = [[0i64; D]; D];
        for i in 0..D {
            for j in 0..D {
                out[i][j] = arith::narrow(a[i][j])?;
            }
        }
        Ok(out)
    };
    Ok((narrow(h)?, narrow(u)?))
}

pub(crate) fn mat_vec<const D: usize>(m: &[[i64; D]; D], v: &[i64; D]) -> Result<[i64; D]> {
    let mut out = [0i64; D];
    for i in 0..D {
        out[i] = arith::narrow((0..D).map(|j| m[i][j] as i128 * v[j] as i128).sum())?;
    }
    Ok(out)
}
