//! Volume vectors, circuit signatures, the distinct-pair-sum predicate and
//! Pick's formula.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine::{apply_map, flattening_map};
use crate::arith;
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::hull::{lattice_points_in_hull, Hull};
use crate::volume::signed_volume;

/// Largest configuration for which [`volume_vector`] is computed.
pub const MAX_VOLUME_VECTOR_POINTS: usize = 8;

/// Signed 4-point determinants over all 4-subsets, in lexicographic subset order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VolumeVector {
    pub entries: Vec<i64>,
}

impl VolumeVector {
    /// gcd of the entries; the vector is a complete invariant when this is 1.
    pub fn content(&self) -> i64 {
        self.entries.iter().fold(0, |g, &e| arith::gcd(g, e))
    }
}

/// All increasing 4-tuples of `0..n`, lexicographic.
pub fn four_subsets(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| (b + 1..n).flat_map(move |c| (c + 1..n).map(move |d| [a, b, c, d])))
    })
}

pub fn volume_vector(cfg: &PointConfiguration) -> Result<VolumeVector> {
    require_dim3(cfg)?;
    if cfg.len() > MAX_VOLUME_VECTOR_POINTS {
        return Err(Error::Size { expected: "at most 8", found: cfg.len() });
    }
    let p = cfg.points();
    let entries = four_subsets(p.len())
        .map(|[a, b, c, d]| signed_volume(p[a], p[b], p[c], p[d]))
        .collect::<Result<_>>()?;
    Ok(VolumeVector { entries })
}

fn require_dim3(cfg: &PointConfiguration) -> Result<()> {
    if cfg.dim() != 3 {
        return Err(Error::Dimension { expected: "3", found: cfg.dim() });
    }
    Ok(())
}

/// `(pos, neg)` with `pos >= neg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
}

impl Signature {
    pub fn new(a: usize, b: usize) -> Self {
        Signature { pos: a.max(b), neg: a.min(b) }
    }
}

impl From<Signature> for [usize; 2] {
    fn from(s: Signature) -> Self {
        [s.pos, s.neg]
    }
}

impl From<[usize; 2]> for Signature {
    fn from(a: [usize; 2]) -> Self {
        Signature::new(a[0], a[1])
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pos, self.neg)
    }
}

/// The affine dependence of five points, scaled so that `|v_i|` is the
/// volume of the tetrahedron omitting point `i`.
///
/// Sign convention: the side with fewer nonzero entries is negative; when
/// both sides have the same size, the first nonzero entry (in the stored
/// point order) is negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FivePointVector(pub [i64; 5]);

impl FivePointVector {
    /// Applies the sign convention to a raw dependence.
    pub fn normalized(raw: [i64; 5]) -> Self {
        let pos = raw.iter().filter(|&&v| v > 0).count();
        let neg = raw.iter().filter(|&&v| v < 0).count();
        let flip = match pos.cmp(&neg) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => raw.iter().find(|&&v| v != 0).is_some_and(|&v| v > 0),
        };
        FivePointVector(if flip { raw.map(|v| -v) } else { raw })
    }

    pub fn entries(&self) -> [i64; 5] {
        self.0
    }

    pub fn signature(&self) -> Signature {
        Signature::new(self.0.iter().filter(|&&v| v > 0).count(), self.0.iter().filter(|&&v| v < 0).count())
    }

    /// Entries sorted ascending; an invariant of the unordered point set.
    pub fn sorted(&self) -> [i64; 5] {
        let mut s = self.0;
        s.sort();
        s
    }

    pub fn content(&self) -> i64 {
        self.0.iter().fold(0, |g, &e| arith::gcd(g, e))
    }

    /// True for `(q, q, q, q, −4q)` up to order.
    pub fn is_symmetric(&self) -> bool {
        let s = self.sorted();
        s[1] > 0 && s[1] == s[4] && s[0] == -4 * s[1]
    }
}

impl fmt::Display for FivePointVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.0;
        write!(f, "({},{},{},{},{})", v[0], v[1], v[2], v[3], v[4])
    }
}

pub fn five_point_vector(cfg: &PointConfiguration) -> Result<FivePointVector> {
    if cfg.len() != 5 {
        return Err(Error::Size { expected: "5", found: cfg.len() });
    }
    require_dim3(cfg)?;
    let p = cfg.points();
    let w = |a: usize, b: usize, c: usize, d: usize| signed_volume(p[a], p[b], p[c], p[d]);
    let raw = [w(1, 2, 3, 4)?, -w(0, 2, 3, 4)?, w(0, 1, 3, 4)?, -w(0, 1, 2, 4)?, w(0, 1, 2, 3)?];
    Ok(FivePointVector::normalized(raw))
}

pub fn signature(cfg: &PointConfiguration) -> Result<Signature> {
    Ok(five_point_vector(cfg)?.signature())
}

/// Distinct pair sums: all sums `a + b` (including `a + a`) of lattice points
/// of the polytope are distinct.
pub fn is_dps(cfg: &PointConfiguration) -> Result<bool> {
    let pts = lattice_points_in_hull(cfg)?;
    Ok(points_have_distinct_pair_sums(pts.points()))
}

pub(crate) fn points_have_distinct_pair_sums(pts: &[crate::point::LatticePoint3]) -> bool {
    let mut seen = BTreeSet::new();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i..] {
            let s = (a.x as i128 + b.x as i128, a.y as i128 + b.y as i128, a.z as i128 + b.z as i128);
            if !seen.insert(s) {
                return false;
            }
        }
    }
    true
}

/// Outcome of Pick's formula on a lattice polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PickReport {
    /// Normalized area (twice the Euclidean area in the plane's lattice).
    pub volume: i64,
    pub boundary: usize,
    pub interior: usize,
    /// Whether `volume == boundary + 2·interior − 2`.
    pub holds: bool,
}

/// Counts and area of a 2-dimensional configuration (in any lattice plane).
pub fn pick_check(cfg: &PointConfiguration) -> Result<PickReport> {
    if cfg.dim() != 2 {
        return Err(Error::Dimension { expected: "2", found: cfg.dim() });
    }
    let flat = apply_map(&flattening_map(cfg)?, cfg)?;
    let hull = Hull::new(&flat)?;
    let all = lattice_points_in_hull(&flat)?;
    let boundary: Vec<_> = all.points().iter().copied().filter(|&p| !hull.relative_interior_contains(p)).collect();
    let interior = all.len() - boundary.len();
    // Fan from an arbitrary base point: each edge contributes its lattice
    // length times its lattice distance to the base point.
    let base = flat.points()[0];
    let mut volume: i64 = 0;
    for h in hull.facets() {
        let on_edge = boundary.iter().filter(|p| h.normal.dot(**p).ok() == Some(h.bound)).count() as i64;
        let dist = arith::sub(h.bound, h.normal.dot(base)?)?;
        volume = arith::add(volume, arith::mul(on_edge - 1, dist)?)?;
    }
    let holds = volume as i128 == boundary.len() as i128 + 2 * interior as i128 - 2;
    Ok(PickReport { volume, boundary: boundary.len(), interior, holds })
}
