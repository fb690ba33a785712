//! Coordinates in which a size-5 polytope of width at least two shows its
//! largest empty tetrahedron in standard position and the fifth point one or
//! two levels below it.

use serde::Serialize;

use crate::affine::UnimodularAffineMap;
use crate::canonical::permutations;
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::hull::lattice_points_in_hull;
use crate::invariants::{five_point_vector, Signature};
use crate::point::{pt, LatticePoint3};
use crate::volume::tetra_volume;
use crate::width::lattice_width;

use super::{level_frame, shear_x_by_y};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureForm {
    /// Values of the level functional on `normalized`, in order.
    pub levels: [i64; 5],
    /// The level of the fifth point, −1 or −2.
    pub h: i64,
    /// `(0,0,1), (p,q,1), (0,0,0), (1,0,0), (a,b,h)`.
    pub normalized: PointConfiguration,
    /// `(p, q)` of the tetrahedron, `1 <= p <= q`.
    pub tetrahedron: (i64, i64),
    /// Sends the lattice points of the input onto `normalized`.
    pub map: UnimodularAffineMap,
}

/// Finds coordinates where an empty tetrahedron of maximal volume sits at
/// levels `1, 1, 0, 0` as `(0,0,1), (p,q,1), (0,0,0), (1,0,0)` and the fifth
/// point at level `h ∈ {−1, −2}`. Among all choices, `h = −1` is preferred,
/// then the lexicographically least `(p, q, a, b)`.
pub fn structure_normalize(cfg: &PointConfiguration) -> Result<StructureForm> {
    let pts = lattice_points_in_hull(cfg)?;
    if pts.len() != 5 {
        return Err(Error::Size { expected: "5 lattice points", found: pts.len() });
    }
    if pts.dim() != 3 {
        return Err(Error::Dimension { expected: "3", found: pts.dim() });
    }
    let sig = five_point_vector(&pts)?.signature();
    if sig != Signature::new(3, 1) && sig != Signature::new(4, 1) {
        return Err(Error::Precondition(format!("signature {sig} has width one")));
    }
    if lattice_width(&pts)?.width < 2 {
        return Err(Error::Precondition("width one".into()));
    }
    let p = pts.points();
    // Every full-dimensional 4-subset avoiding a point of its hull is empty.
    let mut empties = Vec::new();
    for omit in 0..5 {
        let t: Vec<LatticePoint3> = (0..5).filter(|&i| i != omit).map(|i| p[i]).collect();
        let vol = tetra_volume(t[0], t[1], t[2], t[3])?;
        if vol == 0 || lattice_points_in_hull(&PointConfiguration::new(t.clone())?)?.len() != 4 {
            continue;
        }
        empties.push((vol, omit, t));
    }
    let max = empties.iter().map(|e| e.0).max().ok_or_else(|| Error::Internal("no empty tetrahedron".into()))?;
    let mut best: Option<(i64, [i64; 4], StructureForm)> = None;
    for (vol, omit, t) in empties {
        if vol != max {
            continue;
        }
        for perm in permutations(&[0, 1, 2, 3]) {
            let [l0, l1, u0, u1] = [t[perm[0]], t[perm[1]], t[perm[2]], t[perm[3]]];
            let Some((m, x, q)) = level_frame(l0, l1, u0, u1)? else { continue };
            let k = (x - 1).div_euclid(q);
            let m = shear_x_by_y(k).compose(&m)?;
            let fifth = m.apply(p[omit])?;
            let h = fifth.z;
            if h != -1 && h != -2 {
                continue;
            }
            let pp = x - k * q;
            let normalized = PointConfiguration::new(vec![pt(0, 0, 1), pt(pp, q, 1), pt(0, 0, 0), pt(1, 0, 0), fifth])?;
            let rank = (-h, [pp, q, fifth.x, fifth.y]);
            if best.as_ref().is_some_and(|b| (b.0, b.1) <= rank) {
                continue;
            }
            let form = StructureForm { levels: [1, 1, 0, 0, h], h, normalized, tetrahedron: (pp, q), map: m };
            best = Some((rank.0, rank.1, form));
        }
    }
    best.map(|b| b.2)
        .ok_or_else(|| Error::Internal(format!("no level functional with h in {{-1,-2}} for {pts}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::apply_map;
    use crate::classify::table::width_two_rows;
    use crate::empty_tetra::{is_empty_tetra, standard_tpq};

    fn cfg(v: &[[i64; 3]]) -> PointConfiguration {
        PointConfiguration::from_arrays(v).unwrap()
    }

    #[test]
    fn listed_examples() {
        let sym = cfg(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [1, 1, 1], [-2, -1, -2]]);
        assert_eq!(structure_normalize(&sym).unwrap().h, -2);
        let w31 = cfg(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [-1, -1, 0], [1, 2, 3]]);
        assert_eq!(structure_normalize(&w31).unwrap().h, -1);
        let w41 = cfg(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [1, 2, 1], [-1, -1, -1]]);
        assert_eq!(structure_normalize(&w41).unwrap().h, -1);
    }

    #[test]
    fn forms_are_consistent() {
        for row in width_two_rows() {
            let s = structure_normalize(&row.representative).unwrap();
            let img = apply_map(&s.map, &row.representative).unwrap();
            assert!(img.same_set(&s.normalized), "{}", row.family);
            let n = s.normalized.points();
            for (i, &l) in s.levels.iter().enumerate() {
                assert_eq!(n[i].z, l);
            }
            let (pp, q) = s.tetrahedron;
            assert!(1 <= pp && pp <= q);
            let t = [n[0], n[1], n[2], n[3]];
            assert!(is_empty_tetra(&t).unwrap());
            assert!(standard_tpq(pp, q).same_set(&PointConfiguration::new(t.to_vec()).unwrap()));
            assert_eq!(s.h == -2, row.vector.is_symmetric(), "{}", row.family);
        }
    }

    #[test]
    fn rejects_width_one() {
        let w1 = cfg(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [-1, -1, 0], [0, 0, 1]]);
        assert!(matches!(structure_normalize(&w1), Err(Error::Precondition(_))));
        let pyramid = cfg(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]);
        assert!(matches!(structure_normalize(&pyramid), Err(Error::Precondition(_))));
    }
}
