//! Unimodular equivalence of lattice point configurations.

use std::collections::{BTreeMap, BTreeSet};

use crate::affine::{forced_map, UnimodularAffineMap};
use crate::canonical::permutations;
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::hull::{lattice_points_in_hull, vertices};
use crate::invariants::four_subsets;
use crate::point::LatticePoint3;
use crate::volume::{signed_volume, tetra_volume};

/// Point sets up to this size get the volume-profile invariant per point.
const PROFILE_LIMIT: usize = 10;

fn require_dim3(cfg: &PointConfiguration) -> Result<()> {
    if cfg.dim() != 3 {
        return Err(Error::Dimension { expected: "3", found: cfg.dim() });
    }
    Ok(())
}

/// The affine map forced by the first four affinely independent points of
/// `a` and their counterparts in `b`, if it is unimodular, integral, and
/// sends every point of `a` to the point of `b` in the same position.
pub fn map_from_corresponding_points(
    a: &PointConfiguration,
    b: &PointConfiguration,
) -> Result<Option<UnimodularAffineMap>> {
    require_dim3(a)?;
    require_dim3(b)?;
    if a.len() != b.len() {
        return Err(Error::Size { expected: "equal sizes", found: b.len() });
    }
    let f = a.frame();
    let pa: [LatticePoint3; 4] = std::array::from_fn(|i| a.points()[f[i]]);
    let pb: [LatticePoint3; 4] = std::array::from_fn(|i| b.points()[f[i]]);
    let Some(m) = forced_map(&pa, &pb)? else { return Ok(None) };
    for (&p, &q) in a.points().iter().zip(b.points()) {
        if m.apply(p)? != q {
            return Ok(None);
        }
    }
    Ok(Some(m))
}

/// Equivalence-invariant description of one lattice point of a polytope.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PointProfile {
    vertex: bool,
    volumes: Vec<i64>,
}

fn profiles(pts: &[LatticePoint3], verts: &BTreeSet<LatticePoint3>) -> Result<Vec<PointProfile>> {
    let n = pts.len();
    let mut vols: Vec<Vec<i64>> = vec![Vec::new(); n];
    if n <= PROFILE_LIMIT {
        for s in four_subsets(n) {
            let v = tetra_volume(pts[s[0]], pts[s[1]], pts[s[2]], pts[s[3]])?;
            for i in s {
                vols[i].push(v);
            }
        }
    }
    Ok(pts
        .iter()
        .zip(vols)
        .map(|(p, mut volumes)| {
            volumes.sort();
            PointProfile { vertex: verts.contains(p), volumes }
        })
        .collect())
}

/// A unimodular map taking the lattice points of conv(A) onto those of
/// conv(B), found by a pruned search over images of one spanning simplex.
/// Maps of determinant −1 are allowed.
pub fn z_equivalent(a: &PointConfiguration, b: &PointConfiguration) -> Result<Option<UnimodularAffineMap>> {
    require_dim3(a)?;
    require_dim3(b)?;
    let la = lattice_points_in_hull(a)?;
    let lb = lattice_points_in_hull(b)?;
    if la.len() != lb.len() {
        return Ok(None);
    }
    let va: BTreeSet<_> = vertices(&la)?.into_iter().collect();
    let vb: BTreeSet<_> = vertices(&lb)?.into_iter().collect();
    if va.len() != vb.len() {
        return Ok(None);
    }
    let pa = la.points();
    let pb = lb.points();
    let prof_a = profiles(pa, &va)?;
    let prof_b = profiles(pb, &vb)?;
    let mut sa = prof_a.clone();
    let mut sb = prof_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }
    let mut by_profile: BTreeMap<&PointProfile, Vec<usize>> = BTreeMap::new();
    for (i, p) in prof_b.iter().enumerate() {
        by_profile.entry(p).or_default().push(i);
    }
    let target: BTreeSet<LatticePoint3> = pb.iter().copied().collect();
    let frame = la.frame();
    let fa: [LatticePoint3; 4] = std::array::from_fn(|i| pa[frame[i]]);
    let det_a = signed_volume(fa[0], fa[1], fa[2], fa[3])?.abs();
    let cands: Vec<&Vec<usize>> = frame.iter().map(|&i| &by_profile[&prof_a[i]]).collect();
    for &i0 in cands[0] {
        for &i1 in cands[1] {
            for &i2 in cands[2] {
                for &i3 in cands[3] {
                    let idx = [i0, i1, i2, i3];
                    if idx.iter().collect::<BTreeSet<_>>().len() < 4 {
                        continue;
                    }
                    let fb = idx.map(|i| pb[i]);
                    if signed_volume(fb[0], fb[1], fb[2], fb[3])?.abs() != det_a {
                        continue;
                    }
                    let Some(m) = forced_map(&fa, &fb)? else { continue };
                    if pa.iter().all(|&p| m.apply(p).map(|q| target.contains(&q)).unwrap_or(false)) {
                        return Ok(Some(m));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// All unimodular maps permuting the vertices of a tetrahedron.
pub fn tetrahedron_symmetries(v: &[LatticePoint3; 4]) -> Result<Vec<UnimodularAffineMap>> {
    if signed_volume(v[0], v[1], v[2], v[3])? == 0 {
        return Err(Error::Coplanar);
    }
    let mut out = Vec::new();
    for perm in permutations(&[0, 1, 2, 3]) {
        let image: [LatticePoint3; 4] = std::array::from_fn(|i| v[perm[i]]);
        if let Some(m) = forced_map(v, &image)? {
            out.push(m);
        }
    }
    Ok(out)
}
