//! Integer 3x3 matrices and unimodular affine maps.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, Rational};
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::point::{pt, LatticePoint3, RationalPoint3};

/// Row-major integer matrix acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matrix3(pub [[i64; 3]; 3]);

impl Matrix3 {
    pub const IDENTITY: Matrix3 = Matrix3([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);

    pub fn from_rows(r0: LatticePoint3, r1: LatticePoint3, r2: LatticePoint3) -> Self {
        Matrix3([r0.to_array(), r1.to_array(), r2.to_array()])
    }

    pub fn from_columns(c0: LatticePoint3, c1: LatticePoint3, c2: LatticePoint3) -> Self {
        Self::from_rows(c0, c1, c2).transpose()
    }

    pub fn row(&self, i: usize) -> LatticePoint3 {
        self.0[i].into()
    }

    pub fn column(&self, j: usize) -> LatticePoint3 {
        pt(self.0[0][j], self.0[1][j], self.0[2][j])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Matrix3([[m[0][0], m[1][0], m[2][0]], [m[0][1], m[1][1], m[2][1]], [m[0][2], m[1][2], m[2][2]]])
    }

    pub fn det(&self) -> Result<i64> {
        arith::det3(&self.0)
    }

    pub fn mul_vec(&self, v: LatticePoint3) -> Result<LatticePoint3> {
        Ok(pt(self.row(0).dot(v)?, self.row(1).dot(v)?, self.row(2).dot(v)?))
    }

    pub fn mul(&self, o: &Matrix3) -> Result<Matrix3> {
        let mut r = [[0i64; 3]; 3];
        for (i, row) in r.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.row(i).dot(o.column(j))?;
            }
        }
        Ok(Matrix3(r))
    }

    /// Adjugate: `m * adj(m) == det(m) * I`.
    pub fn adjugate(&self) -> Result<Matrix3> {
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            arith::narrow(m[r0][c0] as i128 * m[r1][c1] as i128 - m[r0][c1] as i128 * m[r1][c0] as i128)
        };
        let mut a = [[0i64; 3]; 3];
        for (i, row) in a.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                // Entry (i, j) of the adjugate is the (j, i) cofactor.
                let rows: Vec<usize> = (0..3).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..3).filter(|&c| c != i).collect();
                let c = cof(rows[0], rows[1], cols[0], cols[1])?;
                *e = if (i + j) % 2 == 0 { c } else { arith::mul(c, -1)? };
            }
        }
        Ok(Matrix3(a))
    }

    /// Inverse of a matrix with determinant ±1.
    pub fn unimodular_inverse(&self) -> Result<Matrix3> {
        let d = self.det()?;
        if d.abs() != 1 {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        let adj = self.adjugate()?;
        Ok(Matrix3(adj.0.map(|row| row.map(|e| e * d))))
    }
}

impl fmt::Display for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = |i: usize| format!("[{},{},{}]", self.0[i][0], self.0[i][1], self.0[i][2]);
        write!(f, "[{},{},{}]", r(0), r(1), r(2))
    }
}

/// `x ↦ linear · x + translation` with `det(linear) = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnimodularAffineMap {
    linear: Matrix3,
    translation: LatticePoint3,
}

impl UnimodularAffineMap {
    pub const IDENTITY: UnimodularAffineMap =
        UnimodularAffineMap { linear: Matrix3::IDENTITY, translation: LatticePoint3::ORIGIN };

    pub fn new(linear: Matrix3, translation: LatticePoint3) -> Result<Self> {
        let d = linear.det()?;
        if d.abs() != 1 {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        Ok(UnimodularAffineMap { linear, translation })
    }

    pub fn linear_only(linear: Matrix3) -> Result<Self> {
        Self::new(linear, LatticePoint3::ORIGIN)
    }

    pub fn translation_by(t: LatticePoint3) -> Self {
        UnimodularAffineMap { linear: Matrix3::IDENTITY, translation: t }
    }

    pub fn linear(&self) -> &Matrix3 {
        &self.linear
    }

    pub fn translation(&self) -> LatticePoint3 {
        self.translation
    }

    /// +1 or −1.
    pub fn det(&self) -> i64 {
        self.linear.det().expect("determinant of a unimodular matrix is ±1")
    }

    pub fn apply(&self, p: LatticePoint3) -> Result<LatticePoint3> {
        self.linear.mul_vec(p)?.checked_add(self.translation)
    }

    pub fn apply_rational(&self, p: &RationalPoint3) -> Result<RationalPoint3> {
        let (n, d) = p.common_denominator()?;
        let img = self.linear.mul_vec(n)?.checked_add(self.translation.checked_scale(d)?)?;
        RationalPoint3::from_scaled(img.x, img.y, img.z, d)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &UnimodularAffineMap) -> Result<Self> {
        Ok(UnimodularAffineMap {
            linear: self.linear.mul(&other.linear)?,
            translation: self.apply(other.translation)?,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.linear.unimodular_inverse()?;
        let t = inv.mul_vec(self.translation)?.checked_neg()?;
        Ok(UnimodularAffineMap { linear: inv, translation: t })
    }
}

impl fmt::Display for UnimodularAffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> {} x + {}", self.linear, self.translation)
    }
}

/// Pointwise image, order preserved.
pub fn apply_map(m: &UnimodularAffineMap, cfg: &PointConfiguration) -> Result<PointConfiguration> {
    let pts = cfg.points().iter().map(|&p| m.apply(p)).collect::<Result<Vec<_>>>()?;
    PointConfiguration::new(pts)
}

/// A unimodular matrix whose first row is the primitive vector `v`.
pub fn unimodular_with_first_row(v: LatticePoint3) -> Result<Matrix3> {
    if !v.is_primitive() {
        return Err(Error::NotPrimitive(v));
    }
    // Row-reduce the column v to e1 while recording the operations in `a`;
    // then a·v = e1, so the transpose of a⁻¹ has v as its first row.
    let mut col = v.to_array();
    let mut a = Matrix3::IDENTITY.0;
    loop {
        let nonzero: Vec<usize> = (0..3).filter(|&i| col[i] != 0).collect();
        if nonzero.len() == 1 {
            let i = nonzero[0];
            col.swap(0, i);
            a.swap(0, i);
            if col[0] < 0 {
                col[0] = -col[0];
                a[0] = a[0].map(|e| -e);
            }
            break;
        }
        let piv = *nonzero.iter().min_by_key(|&&i| col[i].unsigned_abs()).expect("nonempty");
        for &j in &nonzero {
            if j != piv {
                let k = col[j].div_euclid(col[piv]);
                col[j] -= k * col[piv];
                for c in 0..3 {
                    a[j][c] = arith::sub(a[j][c], arith::mul(k, a[piv][c])?)?;
                }
            }
        }
    }
    debug_assert_eq!(col, [1, 0, 0]);
    Ok(Matrix3(a).unimodular_inverse()?.transpose())
}

/// Columns `[u, v, s]` with determinant 1, provided `u × v` is primitive
/// (i.e. `u, v` span a saturated rank-2 sublattice).
pub fn complete_basis(u: LatticePoint3, v: LatticePoint3) -> Result<Option<Matrix3>> {
    let n = u.cross(v)?;
    if !n.is_primitive() {
        return Ok(None);
    }
    let (g1, x1, y1) = arith::ext_gcd(n.x, n.y);
    let (_, a, b) = arith::ext_gcd(g1, n.z);
    let s = pt(arith::mul(a, x1)?, arith::mul(a, y1)?, b);
    debug_assert_eq!(n.dot(s)?, 1);
    Ok(Some(Matrix3::from_columns(u, v, s)))
}

/// The unimodular map sending `o`, `o + u`, `o + v` to the origin, `e1`, `e2`,
/// chosen with the third coordinate equal to the signed lattice distance
/// to the plane of the triangle. Absent if the triangle is not unimodular.
pub fn triangle_frame(o: LatticePoint3, u: LatticePoint3, v: LatticePoint3) -> Result<Option<UnimodularAffineMap>> {
    let Some(basis) = complete_basis(u, v)? else { return Ok(None) };
    let inv = basis.unimodular_inverse()?;
    let t = inv.mul_vec(o)?.checked_neg()?;
    Ok(Some(UnimodularAffineMap::new(inv, t)?))
}

/// A unimodular map sending `cfg` into the coordinate subspace of its
/// dimension: the first point goes to the origin, and the image of a
/// `d`-dimensional configuration has all coordinates beyond the first `d` zero.
pub fn flattening_map(cfg: &PointConfiguration) -> Result<UnimodularAffineMap> {
    let pts = cfg.points();
    let frame: Vec<LatticePoint3> = cfg.frame().into_iter().map(|i| pts[i]).collect();
    let o = frame[0];
    let linear = match cfg.dim() {
        0 | 3 => Matrix3::IDENTITY,
        1 => {
            let d = frame[1].checked_sub(o)?.primitive();
            unimodular_with_first_row(d)?.transpose().unimodular_inverse()?
        }
        _ => {
            let n = frame[1].checked_sub(o)?.cross(frame[2].checked_sub(o)?)?.primitive();
            let c = unimodular_with_first_row(n)?;
            // Cyclic row shift keeps the determinant and moves n·x to z.
            Matrix3::from_rows(c.row(1), c.row(2), c.row(0))
        }
    };
    let t = linear.mul_vec(o)?.checked_neg()?;
    UnimodularAffineMap::new(linear, t)
}

/// The affine map sending `a[i]` to `b[i]` (i = 0..3), provided it is integral
/// and unimodular. The `a` simplex must be full-dimensional.
pub fn forced_map(a: &[LatticePoint3; 4], b: &[LatticePoint3; 4]) -> Result<Option<UnimodularAffineMap>> {
    let da = Matrix3::from_columns(a[1].checked_sub(a[0])?, a[2].checked_sub(a[0])?, a[3].checked_sub(a[0])?);
    let db = Matrix3::from_columns(b[1].checked_sub(b[0])?, b[2].checked_sub(b[0])?, b[3].checked_sub(b[0])?);
    let det_a = da.det()?;
    if det_a == 0 {
        return Err(Error::Coplanar);
    }
    let det_b = db.det()?;
    if det_b.abs() != det_a.abs() {
        return Ok(None);
    }
    // L = db · da⁻¹ = db · adj(da) / det(da)
    let num = db.mul(&da.adjugate()?)?;
    let mut l = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            if num.0[i][j] % det_a != 0 {
                return Ok(None);
            }
            l[i][j] = num.0[i][j] / det_a;
        }
    }
    let linear = Matrix3(l);
    let t = b[0].checked_sub(linear.mul_vec(a[0])?)?;
    Ok(Some(UnimodularAffineMap::new(linear, t)?))
}

/// Exact rational affine map (used where an intermediate change of
/// coordinates is not lattice preserving).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalAffineMap {
    pub linear: [[Rational; 3]; 3],
    pub translation: [Rational; 3],
}

impl RationalAffineMap {
    pub fn apply(&self, p: &RationalPoint3) -> RationalPoint3 {
        let c = p.coords();
        let row = |i: usize| {
            self.linear[i][0] * c[0] + self.linear[i][1] * c[1] + self.linear[i][2] * c[2] + self.translation[i]
        };
        RationalPoint3::new(row(0), row(1), row(2))
    }

    /// The affine map sending `a[i]` to `b[i]`; `a` must be affinely independent.
    pub fn through(a: &[RationalPoint3; 4], b: &[RationalPoint3; 4]) -> Result<Self> {
        let diff = |p: &RationalPoint3, o: &RationalPoint3| {
            let (p, o) = (p.coords(), o.coords());
            [p[0] - o[0], p[1] - o[1], p[2] - o[2]]
        };
        let cols_a: Vec<[Rational; 3]> = (1..4).map(|i| diff(&a[i], &a[0])).collect();
        let cols_b: Vec<[Rational; 3]> = (1..4).map(|i| diff(&b[i], &b[0])).collect();
        let ma = [0, 1, 2].map(|i| [0, 1, 2].map(|j| cols_a[j][i]));
        let mb = [0, 1, 2].map(|i| [0, 1, 2].map(|j| cols_b[j][i]));
        let inv = rational_inverse(&ma).ok_or(Error::Coplanar)?;
        let linear = [0, 1, 2].map(|i| [0, 1, 2].map(|j| (0..3).map(|k| mb[i][k] * inv[k][j]).sum::<Rational>()));
        let a0 = a[0].coords();
        let b0 = b[0].coords();
        let translation = [0, 1, 2].map(|i| b0[i] - (0..3).map(|k| linear[i][k] * a0[k]).sum::<Rational>());
        Ok(RationalAffineMap { linear, translation })
    }
}

fn rational_inverse(m: &[[Rational; 3]; 3]) -> Option<[[Rational; 3]; 3]> {
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if det == Rational::from(0) {
        return None;
    }
    let mut inv = [[Rational::from(0); 3]; 3];
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let rows: Vec<usize> = (0..3).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..3).filter(|&c| c != i).collect();
            let c = m[rows[0]][cols[0]] * m[rows[1]][cols[1]] - m[rows[0]][cols[1]] * m[rows[1]][cols[0]];
            *e = (if (i + j) % 2 == 0 { c } else { -c }) / det;
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: [[i64; 3]; 3]) -> Matrix3 {
        Matrix3(rows)
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(UnimodularAffineMap::linear_only(m([[2, 0, 0], [0, 1, 0], [0, 0, 1]])).is_err());
        assert!(UnimodularAffineMap::linear_only(m([[0, 1, 0], [1, 0, 0], [0, 0, 1]])).is_ok());
    }

    #[test]
    fn inverse_and_composition() {
        let a = UnimodularAffineMap::new(m([[1, -1, 3], [0, -1, 5], [0, 0, 1]]), pt(2, -7, 1)).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv).unwrap(), UnimodularAffineMap::IDENTITY);
        assert_eq!(inv.compose(&a).unwrap(), UnimodularAffineMap::IDENTITY);
        let p = pt(4, 5, -6);
        assert_eq!(inv.apply(a.apply(p).unwrap()).unwrap(), p);
        assert_eq!(a.det(), -1);
        assert_eq!(a.compose(&a).unwrap().det(), 1);
    }

    #[test]
    fn adjugate_identity() {
        let a = m([[2, 3, 1], [-1, 4, 7], [0, 5, -2]]);
        let prod = a.mul(&a.adjugate().unwrap()).unwrap();
        let d = a.det().unwrap();
        assert_eq!(prod, m([[d, 0, 0], [0, d, 0], [0, 0, d]]));
    }

    #[test]
    fn completion_to_unimodular() {
        for v in [pt(1, 0, 0), pt(0, 0, -1), pt(6, 10, 15), pt(-4, 7, 0), pt(2, 3, 5)] {
            let c = unimodular_with_first_row(v).unwrap();
            assert_eq!(c.row(0), v);
            assert_eq!(c.det().unwrap().abs(), 1);
        }
        assert!(unimodular_with_first_row(pt(2, 4, 0)).is_err());
    }

    #[test]
    fn triangle_frames() {
        let o = pt(1, 2, 3);
        let (u, v) = (pt(2, 3, 5), pt(1, 1, 1));
        let f = triangle_frame(o, u, v).unwrap().unwrap();
        assert_eq!(f.apply(o).unwrap(), pt(0, 0, 0));
        assert_eq!(f.apply(o.checked_add(u).unwrap()).unwrap(), pt(1, 0, 0));
        assert_eq!(f.apply(o.checked_add(v).unwrap()).unwrap(), pt(0, 1, 0));
        assert!(triangle_frame(o, pt(2, 0, 0), pt(0, 1, 0)).unwrap().is_none());
    }

    #[test]
    fn flattening() {
        let plane = PointConfiguration::from_arrays(&[[1, 1, 1], [3, 1, 3], [1, 3, 3], [2, 2, 3]]).unwrap();
        let f = flattening_map(&plane).unwrap();
        let img = apply_map(&f, &plane).unwrap();
        assert!(img.points().iter().all(|p| p.z == 0));
        assert_eq!(img.points()[0], pt(0, 0, 0));
        let line = PointConfiguration::from_arrays(&[[1, 2, 3], [3, 6, 9], [5, 10, 15]]).unwrap();
        let f = flattening_map(&line).unwrap();
        let img = apply_map(&f, &line).unwrap();
        assert_eq!(img.points(), &[pt(0, 0, 0), pt(2, 0, 0), pt(4, 0, 0)]);
    }

    #[test]
    fn forced_map_integrality() {
        let a = [pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)];
        let b = [pt(1, 1, 1), pt(1, 2, 1), pt(2, 1, 1), pt(1, 1, 0)];
        let f = forced_map(&a, &b).unwrap().unwrap();
        for i in 0..4 {
            assert_eq!(f.apply(a[i]).unwrap(), b[i]);
        }
        let b2 = [pt(0, 0, 0), pt(2, 0, 0), pt(0, 1, 0), pt(0, 0, 1)];
        assert_eq!(forced_map(&a, &b2).unwrap(), None);
    }

    #[test]
    fn rational_map_through_points() {
        let r = |p: LatticePoint3| RationalPoint3::from(p);
        let a = [r(pt(0, 0, 0)), r(pt(1, 0, 0)), r(pt(0, 0, 1)), r(pt(2, 5, 1))];
        let b = [r(pt(0, 0, 0)), r(pt(0, 0, 1)), r(pt(1, 0, 0)), r(pt(0, 1, 0))];
        let f = RationalAffineMap::through(&a, &b).unwrap();
        for i in 0..4 {
            assert_eq!(f.apply(&a[i]), b[i]);
        }
    }
}
