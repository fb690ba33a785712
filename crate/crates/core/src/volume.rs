use crate::arith;
use crate::error::Result;
use crate::point::LatticePoint3;

/// The 4x4 determinant with a top row of ones and the points as columns,
/// i.e. `det(p2 − p1, p3 − p1, p4 − p1)`.
pub fn signed_volume(p1: LatticePoint3, p2: LatticePoint3, p3: LatticePoint3, p4: LatticePoint3) -> Result<i64> {
    let a = p2.checked_sub(p1)?;
    let b = p3.checked_sub(p1)?;
    let c = p4.checked_sub(p1)?;
    // Columns a, b, c; the transpose has the same determinant.
    arith::det3(&[a.to_array(), b.to_array(), c.to_array()])
}

/// Normalized volume of the tetrahedron; 0 iff the points are coplanar.
pub fn tetra_volume(p1: LatticePoint3, p2: LatticePoint3, p3: LatticePoint3, p4: LatticePoint3) -> Result<i64> {
    signed_volume(p1, p2, p3, p4).map(i64::abs)
}
