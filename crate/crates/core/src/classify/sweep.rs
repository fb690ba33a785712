//! Brute-force sweep over all 5-point subsets of the box `[0, s]^3` whose
//! hull has exactly those five lattice points, one subset per translation
//! class (the one touching all three coordinate planes).
//!
//! The hull of a point set is the union of the hulls of its 3- and 4-point
//! subsets, so its lattice points are an OR of precomputed triangle masks
//! and tetrahedron masks over the box points.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::arith;
use crate::canonical::{canonical_key, CanonicalKey};
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::invariants::{five_point_vector, FivePointVector, Signature};
use crate::point::{pt, LatticePoint3};
use crate::width::lattice_width;

use super::structure::structure_normalize;

/// Largest box side whose points fit in a 128-bit mask.
pub const MAX_SIDE: i64 = 4;

/// A class of width at least two met by the sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WideClass {
    pub key: CanonicalKey,
    /// First occurrence in sweep order.
    pub representative: PointConfiguration,
    pub occurrences: u64,
    pub vector: FivePointVector,
    pub width: i64,
    /// Levels `h` returned by `structure_normalize` over all occurrences.
    pub h_values: BTreeSet<i64>,
    pub structure_failures: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub side: i64,
    /// Size-5 full-dimensional configurations, one per translation class.
    pub configurations: u64,
    pub signature_histogram: BTreeMap<Signature, u64>,
    pub width_histogram: BTreeMap<i64, u64>,
    /// Signature (3,2), (2,2) or (2,1) but width other than 1.
    pub gate_violations: Vec<PointConfiguration>,
    /// Signature (3,1) with a vector other than `(−3q,q,q,q,0)`, `q ∈ {1,3}`.
    pub law_violations: Vec<PointConfiguration>,
    pub wide: Vec<WideClass>,
}

impl SweepReport {
    pub fn wide_keys(&self) -> BTreeSet<CanonicalKey> {
        self.wide.iter().map(|w| w.key.clone()).collect()
    }

    pub fn max_width(&self) -> i64 {
        self.width_histogram.keys().copied().max().unwrap_or(0)
    }
}

type V = [i64; 3];

fn sub(a: V, b: V) -> V {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: V, b: V) -> V {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: V, b: V) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

struct Grid {
    side: usize,
    n: usize,
    pts: Vec<V>,
    seg: Vec<u128>,
    tri: Vec<u128>,
}

impl Grid {
    fn new(s: i64) -> Self {
        let side = s as usize + 1;
        let n = side * side * side;
        let mut pts = Vec::with_capacity(n);
        for x in 0..=s {
            for y in 0..=s {
                for z in 0..=s {
                    pts.push([x, y, z]);
                }
            }
        }
        let mut g = Grid { side, n, pts, seg: vec![0; n * n], tri: Vec::new() };
        for i in 0..n {
            for j in i..n {
                let m = g.segment_mask(i, j);
                g.seg[i * n + j] = m;
                g.seg[j * n + i] = m;
            }
        }
        g.tri = vec![0; n * n * n];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    g.tri[(i * n + j) * n + k] = g.triangle_mask(i, j, k);
                }
            }
        }
        g
    }

    fn index(&self, p: V) -> usize {
        (p[0] as usize * self.side + p[1] as usize) * self.side + p[2] as usize
    }

    fn segment_mask(&self, i: usize, j: usize) -> u128 {
        let (a, b) = (self.pts[i], self.pts[j]);
        let d = sub(b, a);
        let g = arith::gcd3(d[0], d[1], d[2]).max(1);
        let mut m = 0u128;
        for t in 0..=g {
            m |= 1 << self.index([a[0] + t * d[0] / g, a[1] + t * d[1] / g, a[2] + t * d[2] / g]);
        }
        m
    }

    /// Points of the box inside the bounding box of the given points.
    fn scan(&self, corners: &[V], mut keep: impl FnMut(V) -> bool) -> u128 {
        let mut lo = corners[0];
        let mut hi = corners[0];
        for c in corners {
            for t in 0..3 {
                lo[t] = lo[t].min(c[t]);
                hi[t] = hi[t].max(c[t]);
            }
        }
        let mut m = 0u128;
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                for z in lo[2]..=hi[2] {
                    if keep([x, y, z]) {
                        m |= 1 << self.index([x, y, z]);
                    }
                }
            }
        }
        m
    }

    fn triangle_mask(&self, i: usize, j: usize, k: usize) -> u128 {
        let (a, b, c) = (self.pts[i], self.pts[j], self.pts[k]);
        let nrm = cross(sub(b, a), sub(c, a));
        if nrm == [0, 0, 0] {
            return self.seg[i * self.n + j] | self.seg[j * self.n + k] | self.seg[i * self.n + k];
        }
        self.scan(&[a, b, c], |x| {
            dot(nrm, sub(x, a)) == 0
                && dot(cross(sub(b, a), sub(x, a)), nrm) >= 0
                && dot(cross(sub(c, b), sub(x, b)), nrm) >= 0
                && dot(cross(sub(a, c), sub(x, c)), nrm) >= 0
        })
    }

    fn tri(&self, i: usize, j: usize, k: usize) -> u128 {
        // Callers pass increasing indices.
        self.tri[(i * self.n + j) * self.n + k]
    }

    /// Lattice points of a full-dimensional tetrahedron; 0 when flat (the
    /// flat case is covered by the triangles).
    fn tetra_mask(&self, i: usize, j: usize, k: usize, l: usize) -> u128 {
        let (a, b, c, d) = (self.pts[i], self.pts[j], self.pts[k], self.pts[l]);
        let (u, v, w) = (sub(b, a), sub(c, a), sub(d, a));
        let vol = dot(u, cross(v, w));
        if vol == 0 {
            return 0;
        }
        let s = vol.signum();
        let (nb, nc, nd) = (cross(v, w), cross(w, u), cross(u, v));
        self.scan(&[a, b, c, d], |x| {
            let r = sub(x, a);
            let (lb, lc, ld) = (s * dot(nb, r), s * dot(nc, r), s * dot(nd, r));
            lb >= 0 && lc >= 0 && ld >= 0 && s * vol - lb - lc - ld >= 0
        })
    }

    fn is_flat(&self, idx: &[usize; 5]) -> bool {
        let p: Vec<V> = idx.iter().map(|&i| self.pts[i]).collect();
        let mut rows = Vec::new();
        for q in &p[1..] {
            rows.push(sub(*q, p[0]));
        }
        for a in 0..4 {
            for b in a + 1..4 {
                for c in b + 1..4 {
                    if dot(rows[a], cross(rows[b], rows[c])) != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `extra` lattice points not yet chosen must come later in the order and
/// fit in the remaining picks.
fn admissible(mask: u128, chosen: u128, last: usize, picked: u32) -> bool {
    let extra = mask & !chosen;
    extra.count_ones() <= 5 - picked && extra & ((2u128 << last) - 1) == 0
}

/// Whether some pair of adjacent parallel lattice planes holds all points.
fn has_width_one(p: &[LatticePoint3]) -> bool {
    let n = p.len();
    let v = |q: LatticePoint3| [q.x, q.y, q.z];
    for mask in 1u32..(1 << (n - 1)) {
        let s: Vec<V> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| v(p[i])).collect();
        let t: Vec<V> = (0..n).filter(|&i| mask >> i & 1 == 0).map(|i| v(p[i])).collect();
        let diffs: Vec<V> =
            s.iter().map(|&x| sub(x, s[0])).chain(t.iter().map(|&x| sub(x, t[0]))).filter(|d| *d != [0, 0, 0]).collect();
        let mut nrm = [0, 0, 0];
        'find: for a in 0..diffs.len() {
            for b in a + 1..diffs.len() {
                let c = cross(diffs[a], diffs[b]);
                if c != [0, 0, 0] {
                    nrm = c;
                    break 'find;
                }
            }
        }
        if nrm == [0, 0, 0] {
            continue;
        }
        let g = arith::gcd3(nrm[0], nrm[1], nrm[2]);
        let nrm = [nrm[0] / g, nrm[1] / g, nrm[2] / g];
        if diffs.iter().all(|&d| dot(d, nrm) == 0) && dot(sub(t[0], s[0]), nrm).abs() == 1 {
            return true;
        }
    }
    false
}

fn law_holds(v: &FivePointVector) -> bool {
    matches!(v.sorted(), [-3, 0, 1, 1, 1] | [-9, 0, 3, 3, 3])
}

#[derive(Default)]
struct Partial {
    configurations: u64,
    signature_histogram: BTreeMap<Signature, u64>,
    width_histogram: BTreeMap<i64, u64>,
    gate_violations: Vec<PointConfiguration>,
    law_violations: Vec<PointConfiguration>,
    wide: Vec<(CanonicalKey, PointConfiguration, FivePointVector, i64, Option<i64>)>,
}

impl Partial {
    fn record(&mut self, grid: &Grid, idx: [usize; 5]) -> Result<()> {
        let pts: Vec<LatticePoint3> = idx.iter().map(|&i| {
            let p = grid.pts[i];
            pt(p[0], p[1], p[2])
        }).collect();
        let cfg = PointConfiguration::new(pts)?;
        let v = five_point_vector(&cfg)?;
        let sig = v.signature();
        let width = if has_width_one(cfg.points()) { 1 } else { lattice_width(&cfg)?.width };
        self.configurations += 1;
        *self.signature_histogram.entry(sig).or_default() += 1;
        *self.width_histogram.entry(width).or_default() += 1;
        let low = [Signature::new(3, 2), Signature::new(2, 2), Signature::new(2, 1)];
        if low.contains(&sig) && width != 1 {
            self.gate_violations.push(cfg.clone());
        }
        if sig == Signature::new(3, 1) && !law_holds(&v) {
            self.law_violations.push(cfg.clone());
        }
        if width >= 2 {
            let h = structure_normalize(&cfg).ok().map(|s| s.h);
            self.wide.push((canonical_key(&cfg)?, cfg, v, width, h));
        }
        Ok(())
    }
}

fn sweep_from(grid: &Grid, s: i64, i1: usize) -> Result<Partial> {
    let n = grid.n;
    let bit = |i: usize| 1u128 << i;
    let touches_planes = |idx: &[usize; 5]| {
        let min = |t: usize| idx.iter().map(|&i| grid.pts[i][t]).min().unwrap_or(0);
        min(1) == 0 && min(2) == 0
    };
    let _ = s;
    let mut out = Partial::default();
    for i2 in i1 + 1..n {
        let c2 = bit(i1) | bit(i2);
        let m2 = grid.seg[i1 * n + i2];
        if !admissible(m2, c2, i2, 2) {
            continue;
        }
        for i3 in i2 + 1..n {
            let c3 = c2 | bit(i3);
            let m3 = m2 | grid.tri(i1, i2, i3);
            if !admissible(m3, c3, i3, 3) {
                continue;
            }
            for i4 in i3 + 1..n {
                let c4 = c3 | bit(i4);
                let mut m4 = m3 | grid.tri(i1, i2, i4) | grid.tri(i1, i3, i4) | grid.tri(i2, i3, i4);
                if !admissible(m4, c4, i4, 4) {
                    continue;
                }
                m4 |= grid.tetra_mask(i1, i2, i3, i4);
                if !admissible(m4, c4, i4, 4) {
                    continue;
                }
                let forced = m4 & !c4;
                let range: Box<dyn Iterator<Item = usize>> = if forced != 0 {
                    Box::new(std::iter::once(forced.trailing_zeros() as usize))
                } else {
                    Box::new(i4 + 1..n)
                };
                for i5 in range {
                    let c5 = c4 | bit(i5);
                    let tris = grid.tri(i1, i2, i5)
                        | grid.tri(i1, i3, i5)
                        | grid.tri(i1, i4, i5)
                        | grid.tri(i2, i3, i5)
                        | grid.tri(i2, i4, i5)
                        | grid.tri(i3, i4, i5);
                    if (m4 | tris) & !c5 != 0 {
                        continue;
                    }
                    let idx = [i1, i2, i3, i4, i5];
                    if !touches_planes(&idx) || grid.is_flat(&idx) {
                        continue;
                    }
                    let tets = grid.tetra_mask(i1, i2, i3, i5)
                        | grid.tetra_mask(i1, i2, i4, i5)
                        | grid.tetra_mask(i1, i3, i4, i5)
                        | grid.tetra_mask(i2, i3, i4, i5);
                    if tets & !c5 != 0 {
                        continue;
                    }
                    out.record(grid, idx)?;
                }
            }
        }
    }
    Ok(out)
}

/// Sweeps the box `[0, side]^3`, `1 <= side <= 4`.
pub fn box_sweep(side: i64) -> Result<SweepReport> {
    if !(1..=MAX_SIDE).contains(&side) {
        return Err(Error::InvalidParameters(format!("box side {side} not in 1..={MAX_SIDE}")));
    }
    let grid = Grid::new(side);
    let s1 = grid.side;
    let partials: Vec<Result<Partial>> = (0..s1 * s1).into_par_iter().map(|i1| sweep_from(&grid, side, i1)).collect();
    let mut report = SweepReport { side, ..Default::default() };
    let mut wide: BTreeMap<CanonicalKey, WideClass> = BTreeMap::new();
    for p in partials {
        let p = p?;
        report.configurations += p.configurations;
        for (k, v) in p.signature_histogram {
            *report.signature_histogram.entry(k).or_default() += v;
        }
        for (k, v) in p.width_histogram {
            *report.width_histogram.entry(k).or_default() += v;
        }
        report.gate_violations.extend(p.gate_violations);
        report.law_violations.extend(p.law_violations);
        for (key, cfg, vector, width, h) in p.wide {
            let e = wide.entry(key.clone()).or_insert_with(|| WideClass {
                key,
                representative: cfg,
                occurrences: 0,
                vector,
                width,
                h_values: BTreeSet::new(),
                structure_failures: 0,
            });
            e.occurrences += 1;
            match h {
                Some(h) => {
                    e.h_values.insert(h);
                }
                None => e.structure_failures += 1,
            }
        }
    }
    report.wide = wide.into_values().collect();
    Ok(report)
}
