//! Canonical forms of lattice point sets up to unimodular equivalence.
//!
//! For every ordered affinely independent `(D+1)`-tuple of minimal volume,
//! translate its first point to the origin and bring the edge matrix to
//! Hermite normal form by a unimodular `U`. Applying `U` to the whole set
//! gives a form that depends only on the orbit of the tuple, so the
//! lexicographically least sorted image over all tuples is a complete
//! invariant.

use std::fmt;

use crate::affine::{Matrix3, UnimodularAffineMap};
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::hnf::{mat_vec, row_hnf};
use crate::hull::lattice_points_in_hull;
use crate::point::{pt, LatticePoint3};

/// Largest lattice point count accepted by [`canonical_key`].
pub const MAX_KEY_POINTS: usize = 12;

/// Opaque, totally ordered key; equal keys mean equivalent point sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

/// The canonical form of a full-dimensional point set in Z^D: its sorted
/// image under the chosen normalizing map `x ↦ u·(x − origin)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm<const D: usize> {
    pub key: CanonicalKey,
    pub points: Vec<[i64; D]>,
    pub u: [[i64; D]; D],
    pub origin: [i64; D],
}

fn serialize<const D: usize>(points: &[[i64; D]]) -> Vec<u8> {
    let mut out = Vec::with_capacity(2 + points.len() * D * 8);
    out.push(D as u8);
    out.push(points.len() as u8);
    for p in points {
        for &v in p {
            // Offset binary so that byte order agrees with numeric order.
            out.extend_from_slice(&((v as u64) ^ (1 << 63)).to_be_bytes());
        }
    }
    out
}

fn det_dyn(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
                (if j % 2 == 0 { 1 } else { -1 }) * m[0][j] * det_dyn(&minor)
            })
            .sum(),
    }
}

fn simplex_det<const D: usize>(pts: &[[i64; D]], idx: &[usize]) -> i128 {
    let o = pts[idx[0]];
    let m: Vec<Vec<i128>> =
        idx[1..].iter().map(|&i| (0..D).map(|k| pts[i][k] as i128 - o[k] as i128).collect()).collect();
    det_dyn(&m)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Canonical form of a full-dimensional set of distinct points of Z^D.
pub fn normal_form<const D: usize>(pts: &[[i64; D]]) -> Result<NormalForm<D>> {
    let subsets: Vec<(Vec<usize>, i128)> =
        combinations(pts.len(), D + 1).into_iter().map(|s| { let d = simplex_det(pts, &s).abs(); (s, d) }).filter(|(_, d)| *d != 0).collect();
    let min_det = subsets.iter().map(|(_, d)| *d).min().ok_or(Error::Dimension { expected: "full", found: 0 })?;
    let mut best: Option<NormalForm<D>> = None;
    for (s, _) in subsets.iter().filter(|(_, d)| *d == min_det) {
        for tuple in permutations(s) {
            let o = pts[tuple[0]];
            // Rows of `edges` are the edge vectors; transpose to get columns.
            let edges: [[i64; D]; D] = std::array::from_fn(|r| std::array::from_fn(|c| pts[tuple[c + 1]][r] - o[r]));
            let (_, u) = row_hnf(&edges)?;
            let mut img = pts
                .iter()
                .map(|p| mat_vec(&u, &std::array::from_fn(|k| p[k] - o[k])))
                .collect::<Result<Vec<_>>>()?;
            img.sort();
            let key = CanonicalKey(serialize(&img));
            if best.as_ref().is_none_or(|b| key < b.key) {
                best = Some(NormalForm { key, points: img, u, origin: o });
            }
        }
    }
    best.ok_or(Error::Internal("no simplex found".into()))
}

/// Canonical key of the lattice points of conv(A).
pub fn canonical_key(cfg: &PointConfiguration) -> Result<CanonicalKey> {
    Ok(canonical_form(cfg)?.0)
}

/// Canonical key, the canonical point set, and a map taking the lattice
/// points of conv(A) onto it.
pub fn canonical_form(cfg: &PointConfiguration) -> Result<(CanonicalKey, PointConfiguration, UnimodularAffineMap)> {
    if cfg.dim() != 3 {
        return Err(Error::Dimension { expected: "3", found: cfg.dim() });
    }
    let all = lattice_points_in_hull(cfg)?;
    if all.len() > MAX_KEY_POINTS {
        return Err(Error::Size { expected: "at most 12 lattice points", found: all.len() });
    }
    let arr: Vec<[i64; 3]> = all.to_arrays();
    let nf = normal_form::<3>(&arr)?;
    let u = Matrix3(nf.u);
    let origin: LatticePoint3 = nf.origin.into();
    let map = UnimodularAffineMap::new(u, u.mul_vec(origin)?.checked_neg()?)?;
    let form = PointConfiguration::new(nf.points.iter().map(|&p| pt(p[0], p[1], p[2])).collect())?;
    Ok((nf.key, form, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::apply_map;

    fn cfg(v: &[[i64; 3]]) -> PointConfiguration {
        PointConfiguration::from_arrays(v).unwrap()
    }

    fn tpq(p: i64, q: i64) -> PointConfiguration {
        cfg(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [p, q, 1]])
    }

    #[test]
    fn key_matches_white_law_examples() {
        assert_eq!(canonical_key(&tpq(1, 3)).unwrap(), canonical_key(&tpq(2, 3)).unwrap());
        assert_eq!(canonical_key(&tpq(2, 7)).unwrap(), canonical_key(&tpq(4, 7)).unwrap());
        assert_ne!(canonical_key(&tpq(1, 5)).unwrap(), canonical_key(&tpq(2, 5)).unwrap());
    }

    #[test]
    fn form_map_is_a_witness() {
        let a = cfg(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [2, 5, 1], [-3, -5, -2]]);
        let (_, form, map) = canonical_form(&a).unwrap();
        assert!(apply_map(&map, &a).unwrap().same_set(&form));
    }

    #[test]
    fn two_dimensional_forms() {
        let a = normal_form::<2>(&[[0, 0], [2, 0], [0, 2], [1, 0], [0, 1], [1, 1]]).unwrap();
        let b = normal_form::<2>(&[[0, 0], [2, 2], [2, 0], [1, 0], [1, 1], [2, 1]]).unwrap();
        assert_eq!(a.key, b.key);
        let c = normal_form::<2>(&[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
        assert_ne!(a.key, c.key);
    }

    #[test]
    fn permutations_count() {
        assert_eq!(permutations(&[0, 1, 2, 3]).len(), 24);
        assert_eq!(combinations(5, 4).len(), 5);
    }
}
