//! Exact H-representation of the convex hull of a point configuration.

use std::collections::BTreeSet;

use crate::arith;
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::point::{pt, LatticePoint3, RationalPoint3};

/// Upper bound on the number of box points `lattice_points_in_hull` will scan.
pub const MAX_SCAN: u128 = 50_000_000;

/// `normal · x <= bound` (inequality) or `normal · x == bound` (equality).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    pub normal: LatticePoint3,
    pub bound: i64,
}

impl HalfSpace {
    fn value(&self, p: LatticePoint3) -> i128 {
        self.normal.x as i128 * p.x as i128 + self.normal.y as i128 * p.y as i128 + self.normal.z as i128 * p.z as i128
    }

    /// Sign of `normal·x − bound` for a rational point, computed exactly.
    fn slack_sign(&self, q: &RationalPoint3) -> std::cmp::Ordering {
        // Bring the three coordinates to a common denominator in i128.
        let c = q.coords();
        let den: i128 = c.iter().fold(1i128, |acc, r| {
            let d = *r.denom() as i128;
            acc / gcd128(acc, d) * d
        });
        let n = [self.normal.x, self.normal.y, self.normal.z];
        let mut s: i128 = 0;
        for i in 0..3 {
            let (num, d) = arith::ratio_parts(&c[i]);
            s += n[i] as i128 * num * (den / d);
        }
        s.cmp(&(self.bound as i128 * den))
    }
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Convex hull of a configuration in H-representation. Inequalities are the
/// facets of the hull within its affine span, normalized to primitive normals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hull {
    dim: usize,
    equalities: Vec<HalfSpace>,
    inequalities: Vec<HalfSpace>,
}

impl Hull {
    pub fn new(cfg: &PointConfiguration) -> Result<Self> {
        let pts = cfg.points();
        let frame: Vec<LatticePoint3> = cfg.frame().into_iter().map(|i| pts[i]).collect();
        let o = frame[0];
        let mut equalities = Vec::new();
        let mut ineq: BTreeSet<HalfSpace> = BTreeSet::new();
        let push_supporting = |n: LatticePoint3, set: &mut BTreeSet<HalfSpace>| -> Result<()> {
            if n.is_zero() {
                return Ok(());
            }
            let n = n.primitive();
            let (mut lo, mut hi) = (i64::MAX, i64::MIN);
            for &p in pts {
                let v = n.dot(p)?;
                lo = lo.min(v);
                hi = hi.max(v);
            }
            set.insert(HalfSpace { normal: n, bound: hi });
            set.insert(HalfSpace { normal: n.checked_neg()?, bound: -lo });
            Ok(())
        };
        match cfg.dim() {
            0 => {
                for e in [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)] {
                    equalities.push(HalfSpace { normal: e, bound: e.dot(o)? });
                }
            }
            1 => {
                let d = frame[1].checked_sub(o)?.primitive();
                for e in [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)] {
                    let n = d.cross(e)?;
                    if !n.is_zero() {
                        let n = n.primitive();
                        equalities.push(HalfSpace { normal: n, bound: n.dot(o)? });
                    }
                }
                push_supporting(d, &mut ineq)?;
            }
            2 => {
                let nrm = frame[1].checked_sub(o)?.cross(frame[2].checked_sub(o)?)?.primitive();
                equalities.push(HalfSpace { normal: nrm, bound: nrm.dot(o)? });
                let mut cands = BTreeSet::new();
                for (i, &a) in pts.iter().enumerate() {
                    for &b in &pts[i + 1..] {
                        let m = nrm.cross(b.checked_sub(a)?)?;
                        push_supporting(m, &mut cands)?;
                    }
                }
                ineq = facets_only(pts, cands, 1)?;
            }
            _ => {
                let mut cands = BTreeSet::new();
                let n = pts.len();
                for i in 0..n {
                    for j in i + 1..n {
                        let dj = pts[j].checked_sub(pts[i])?;
                        for k in j + 1..n {
                            let m = dj.cross(pts[k].checked_sub(pts[i])?)?;
                            push_supporting(m, &mut cands)?;
                        }
                    }
                }
                ineq = facets_only(pts, cands, 2)?;
            }
        }
        Ok(Hull { dim: cfg.dim(), equalities, inequalities: ineq.into_iter().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equalities(&self) -> &[HalfSpace] {
        &self.equalities
    }

    /// Facet inequalities (relative to the affine span).
    pub fn facets(&self) -> &[HalfSpace] {
        &self.inequalities
    }

    pub fn contains(&self, p: LatticePoint3) -> bool {
        self.equalities.iter().all(|h| h.value(p) == h.bound as i128)
            && self.inequalities.iter().all(|h| h.value(p) <= h.bound as i128)
    }

    pub fn contains_rational(&self, q: &RationalPoint3) -> bool {
        use std::cmp::Ordering::*;
        self.equalities.iter().all(|h| h.slack_sign(q) == Equal)
            && self.inequalities.iter().all(|h| h.slack_sign(q) != Greater)
    }

    /// Membership in the relative interior.
    pub fn relative_interior_contains(&self, p: LatticePoint3) -> bool {
        self.equalities.iter().all(|h| h.value(p) == h.bound as i128)
            && self.inequalities.iter().all(|h| h.value(p) < h.bound as i128)
    }

    /// Facets through `p`.
    pub fn tight_at(&self, p: LatticePoint3) -> Vec<HalfSpace> {
        self.inequalities.iter().copied().filter(|h| h.value(p) == h.bound as i128).collect()
    }
}

/// Keep only the supporting half-spaces whose boundary contains an affinely
/// `face_dim`-dimensional set of points, i.e. the true facets.
fn facets_only(pts: &[LatticePoint3], cands: BTreeSet<HalfSpace>, face_dim: usize) -> Result<BTreeSet<HalfSpace>> {
    let mut out = BTreeSet::new();
    for h in cands {
        let on: Vec<LatticePoint3> = pts.iter().copied().filter(|&p| h.value(p) == h.bound as i128).collect();
        if PointConfiguration::new(on)?.dim() == face_dim {
            out.insert(h);
        }
    }
    Ok(out)
}

/// Closed membership of `q` in conv(cfg).
pub fn hull_contains(cfg: &PointConfiguration, q: &RationalPoint3) -> Result<bool> {
    Ok(Hull::new(cfg)?.contains_rational(q))
}

/// All lattice points of conv(cfg), in lexicographic order.
pub fn lattice_points_in_hull(cfg: &PointConfiguration) -> Result<PointConfiguration> {
    let hull = Hull::new(cfg)?;
    let pts = cfg.points();
    let mut lo = [i64::MAX; 3];
    let mut hi = [i64::MIN; 3];
    for p in pts {
        for (i, c) in p.to_array().into_iter().enumerate() {
            lo[i] = lo[i].min(c);
            hi[i] = hi[i].max(c);
        }
    }
    let span = |i: usize| (hi[i] as i128 - lo[i] as i128 + 1) as u128;
    let total = span(0)
        .checked_mul(span(1))
        .and_then(|v| v.checked_mul(span(2)))
        .ok_or(Error::Overflow("bounding box volume"))?;
    if total > MAX_SCAN {
        return Err(Error::TooLarge(total));
    }
    // Walk the two shorter axes and solve for the range along the longest.
    let w = (0..3).max_by_key(|&i| span(i)).expect("three axes");
    let (u, v) = match w {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let rows: Vec<(&HalfSpace, bool)> = hull
        .equalities
        .iter()
        .map(|h| (h, true))
        .chain(hull.inequalities.iter().map(|h| (h, false)))
        .collect();
    let mut out = Vec::new();
    for a in lo[u]..=hi[u] {
        'cell: for b in lo[v]..=hi[v] {
            let (mut wlo, mut whi) = (lo[w] as i128, hi[w] as i128);
            for &(h, eq) in &rows {
                let n = h.normal.to_array();
                let rest = h.bound as i128 - n[u] as i128 * a as i128 - n[v] as i128 * b as i128;
                let c = n[w] as i128;
                if c == 0 {
                    if rest < 0 || (eq && rest != 0) {
                        continue 'cell;
                    }
                    continue;
                }
                if eq {
                    if rest % c != 0 {
                        continue 'cell;
                    }
                    wlo = wlo.max(rest / c);
                    whi = whi.min(rest / c);
                } else if c > 0 {
                    whi = whi.min(rest.div_euclid(c));
                } else {
                    wlo = wlo.max(-rest.div_euclid(-c));
                }
            }
            for t in wlo..=whi {
                let mut c = [0i64; 3];
                c[u] = a;
                c[v] = b;
                c[w] = t as i64;
                out.push(pt(c[0], c[1], c[2]));
            }
        }
    }
    out.sort();
    PointConfiguration::new(out)
}

/// The extreme points of conv(cfg), in lexicographic order.
pub fn vertices(cfg: &PointConfiguration) -> Result<Vec<LatticePoint3>> {
    let hull = Hull::new(cfg)?;
    Ok(vertices_with(&hull, cfg))
}

pub(crate) fn vertices_with(hull: &Hull, cfg: &PointConfiguration) -> Vec<LatticePoint3> {
    let pts = cfg.points();
    let mut out: Vec<LatticePoint3> = pts
        .iter()
        .copied()
        .filter(|&p| {
            // p is extreme iff the face cut out by the facets through p holds
            // no other point of the configuration.
            let tight = hull.tight_at(p);
            !pts.iter().any(|&q| q != p && tight.iter().all(|h| h.value(q) == h.bound as i128))
        })
        .collect();
    out.sort();
    out
}

pub fn is_vertex(cfg: &PointConfiguration, p: &LatticePoint3) -> Result<bool> {
    Ok(cfg.contains(p) && vertices(cfg)?.contains(p))
}

/// Lattice points of conv(cfg) in the relative interior.
pub fn interior_lattice_points(cfg: &PointConfiguration) -> Result<Vec<LatticePoint3>> {
    let hull = Hull::new(cfg)?;
    let all = lattice_points_in_hull(cfg)?;
    Ok(all.points().iter().copied().filter(|&p| hull.relative_interior_contains(p)).collect())
}
