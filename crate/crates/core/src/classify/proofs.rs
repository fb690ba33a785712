//! The finite case analyses behind the (4,1) classes of width two, redone
//! as explicit searches.
//!
//! Coordinates: `p1..p4 = (0,0,0), (1,0,0), (0,0,1), (p,q,1)` and the fifth
//! point `(a, b, −1)` (non-symmetric case) or `(−p−1, −q, −2)` (symmetric
//! case).

use serde::Serialize;

use crate::affine::{apply_map, triangle_frame, UnimodularAffineMap};
use crate::arith;
use crate::config::PointConfiguration;
use crate::empty_tetra::{is_empty_tetra, lemma_a_predicate};
use crate::equivalence::z_equivalent;
use crate::error::{Error, Result};
use crate::invariants::{five_point_vector, FivePointVector};
use crate::point::{pt, LatticePoint3};
use crate::width::{width_of, IntegerFunctional};

use super::{classify_size5, ClassRecord};

/// One position of `p4 = (p, q, 1)` and `p5 = (a, b, −1)` admitted by the
/// planar analysis, written with `(c, d) = (a + p, b + q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub cd: (i64, i64),
    pub ab: (i64, i64),
    pub pq: (i64, i64),
    /// `gcd(p, q) = 1` and `p <= q`.
    pub survives: bool,
    /// `((a−2)q − bp, pb − qa, q + b, −b, q)` for surviving rows.
    pub vector: Option<[i64; 5]>,
}

/// Largest `d` tried; rows stop at `d = 3`.
pub const CANDIDATE_D_MAX: i64 = 8;
/// Largest `|b|` tried.
pub const CANDIDATE_B_MAX: i64 = 30;
/// Largest `|a|` tried.
pub const CANDIDATE_A_MAX: i64 = 60;

/// Lattice points of the triangle with vertices `v/2` (halved coordinates).
fn half_triangle_points(v: [(i64, i64); 3]) -> Vec<(i64, i64)> {
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let s = cross(v[0], v[1], v[2]).signum();
    let xs = v.map(|p| p.0);
    let ys = v.map(|p| p.1);
    let (x0, x1) = (xs.iter().min().unwrap().div_euclid(2), xs.iter().max().unwrap().div_euclid(2) + 1);
    let (y0, y1) = (ys.iter().min().unwrap().div_euclid(2), ys.iter().max().unwrap().div_euclid(2) + 1);
    let mut out = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            let p = (2 * x, 2 * y);
            if [cross(v[0], v[1], p), cross(v[1], v[2], p), cross(v[2], v[0], p)].iter().all(|&c| s * c >= 0) {
                out.push((x, y));
            }
        }
    }
    out
}

/// The candidate table: for `d >= 1` (with `c = 0` if `d = 1`, else `c = 1`)
/// and `b <= −d`, the points `(a, b)` with `cb − da > 0` for which
/// the triangle `conv{(1,0), (a/2,b/2), (c/2,d/2)}` (the slice `z = 0` of the
/// polytope, scaled) has no lattice points besides `(0,0)` and `(1,0)`.
pub fn enumerate_nonsymmetric41_candidates() -> Vec<Candidate> {
    let mut rows = Vec::new();
    for d in 1..=CANDIDATE_D_MAX {
        let c = if d == 1 { 0 } else { 1 };
        for b in (-CANDIDATE_B_MAX..=-d).rev() {
            // cb − da > 0, solved for a.
            let lo = -CANDIDATE_A_MAX;
            let hi = (c * b - 1).div_euclid(d);
            for a in (lo..=hi).rev() {
                let pts = half_triangle_points([(2, 0), (a, b), (c, d)]);
                let mut set = pts.clone();
                set.sort();
                if set != [(0, 0), (1, 0)] {
                    continue;
                }
                let (p, q) = (c - a, d - b);
                let survives = arith::gcd(p, q) == 1 && p <= q;
                let vector = survives.then(|| [(a - 2) * q - b * p, p * b - q * a, q + b, -b, q]);
                rows.push(Candidate { cd: (c, d), ab: (a, b), pq: (p, q), survives, vector });
            }
        }
    }
    rows.sort_by_key(|r| (r.cd.1, r.pq.1, r.pq.0, -r.ab.0));
    rows
}

/// The configuration of a candidate row.
pub fn candidate_configuration(c: &Candidate) -> PointConfiguration {
    let (p, q) = c.pq;
    let (a, b) = c.ab;
    PointConfiguration::new(vec![pt(0, 0, 0), pt(1, 0, 0), pt(0, 0, 1), pt(p, q, 1), pt(a, b, -1)])
        .expect("candidate points are distinct")
}

/// Emptiness of a tetrahedron by the congruence test in the frame of its
/// facet `v0 v1 v2`, which must be unimodular.
fn empty_by_congruences(v: [LatticePoint3; 4]) -> Result<bool> {
    let Some(f) = triangle_frame(v[0], v[1].checked_sub(v[0])?, v[2].checked_sub(v[0])?)? else {
        return Err(Error::Internal("facet is not unimodular".into()));
    };
    let x = f.apply(v[3])?;
    Ok(lemma_a_predicate(x.x, x.y, x.z))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSweep {
    pub q_max: i64,
    /// `(p, q)` with the first added tetrahedron empty.
    pub t1_empty: Vec<(i64, i64)>,
    /// `(p, q)` with the second added tetrahedron empty.
    pub t2_empty: Vec<(i64, i64)>,
    /// `(p, q)` with all three added tetrahedra empty.
    pub admissible: Vec<(i64, i64)>,
    /// One record per class, in order of `q`.
    pub classes: Vec<ClassRecord>,
    /// Map from the `p = 2` configuration to the `p = 3` one at `q = 5`.
    pub q5_map: Option<UnimodularAffineMap>,
}

/// The configuration with `p1` the barycenter of the other four points.
pub fn symmetric_configuration(p: i64, q: i64) -> PointConfiguration {
    PointConfiguration::new(vec![pt(0, 0, 0), pt(1, 0, 0), pt(0, 0, 1), pt(p, q, 1), pt(-p - 1, -q, -2)])
        .expect("distinct points")
}

/// Sweeps `1 <= p <= q <= q_max`, `gcd(p, q) = 1`. The hull is the union of
/// `T(p,q)` and the tetrahedra `{p1,p2,p3,p5}`, `{p1,p2,p4,p5}`,
/// `{p1,p3,p4,p5}`, each of volume `q`; emptiness of the first two is tested
/// by congruences in the frame of their facet at the origin, the third by
/// the exact emptiness test.
pub fn enumerate_symmetric41(q_max: i64) -> Result<SymmetricSweep> {
    let mut out = SymmetricSweep {
        q_max,
        t1_empty: Vec::new(),
        t2_empty: Vec::new(),
        admissible: Vec::new(),
        classes: Vec::new(),
        q5_map: None,
    };
    for q in 1..=q_max {
        for p in (1..=q).filter(|&p| arith::gcd(p, q) == 1) {
            let c = symmetric_configuration(p, q);
            let [p1, p2, p3, p4, p5] = [0, 1, 2, 3, 4].map(|i| c.points()[i]);
            let t1 = empty_by_congruences([p1, p2, p3, p5])?;
            let t2 = empty_by_congruences([p1, p2, p4, p5])?;
            if t1 {
                out.t1_empty.push((p, q));
            }
            if t2 {
                out.t2_empty.push((p, q));
            }
            if !(t1 && t2) {
                continue;
            }
            if is_empty_tetra(&[p1, p3, p4, p5])? {
                out.admissible.push((p, q));
            }
        }
    }
    let mut seen: Vec<FivePointVector> = Vec::new();
    for &(p, q) in &out.admissible {
        let c = symmetric_configuration(p, q);
        let v = five_point_vector(&c)?;
        if seen.contains(&v) {
            continue;
        }
        seen.push(v);
        let r = classify_size5(&c)?.into_record().ok_or_else(|| Error::Internal("admissible pair not of size 5".into()))?;
        out.classes.push(r);
    }
    if out.admissible.contains(&(2, 5)) && out.admissible.contains(&(3, 5)) {
        out.q5_map = z_equivalent(&symmetric_configuration(2, 5), &symmetric_configuration(3, 5))?;
    }
    Ok(out)
}

/// Width of a configuration with respect to `x − z`.
pub fn width_along_x_minus_z(c: &PointConfiguration) -> Result<i64> {
    width_of(c, &IntegerFunctional::new(1, 0, -1, 0))
}

/// Applies the map given in the symmetric case analysis,
/// `(x, y, z) ↦ (x − y + 3z, −y + 5z, z)`, to the `p = 2` configuration.
pub fn q5_linear_image() -> Result<PointConfiguration> {
    let m = UnimodularAffineMap::linear_only(crate::affine::Matrix3([[1, -1, 3], [0, -1, 5], [0, 0, 1]]))?;
    apply_map(&m, &symmetric_configuration(2, 5))
}
