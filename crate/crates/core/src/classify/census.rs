//! The census of size-5 polytopes of width at least two, generated in
//! structured coordinates: an empty tetrahedron `T(p,q)` of maximal volume
//! in standard position and a fifth point at level −1 or −2.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arith;
use crate::canonical::{canonical_key, CanonicalKey};
use crate::config::PointConfiguration;
use crate::empty_tetra::standard_tpq;
use crate::error::{Error, Result};
use crate::hull::lattice_points_in_hull;
use crate::invariants::{five_point_vector, FivePointVector};
use crate::point::pt;
use crate::width::lattice_width;

use super::table::width_two_rows;
use super::{classify_size5, ClassRecord, Family};

/// Largest volume of the empty tetrahedron searched by default. The largest
/// volume that occurs is 7.
pub const DEFAULT_Q_MAX: i64 = 12;

/// One class found by the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusClass {
    pub key: CanonicalKey,
    /// The first configuration met, in search order.
    pub representative: PointConfiguration,
    /// Volume of the tetrahedron at which the class first appeared.
    pub first_q: i64,
    pub vector: FivePointVector,
    pub width: i64,
}

/// Fifth points `(a, b, h)` for the tetrahedron `T(p, q)`. Every tetrahedron
/// spanned by the fifth point and three vertices of `T` has volume at most
/// `4q`; in these coordinates three of those volumes are `|b|`, `|qh − b|`
/// and `|pb − qa|`.
fn fifth_points(p: i64, q: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for h in [-1, -2] {
        for b in -4 * q..=4 * q {
            if (q * h - b).abs() > 4 * q {
                continue;
            }
            let lo = -(4 * q - p * b).div_euclid(q);
            let hi = (p * b + 4 * q).div_euclid(q);
            out.extend((lo..=hi).map(|a| (a, b, h)));
        }
    }
    out
}

fn search_tetrahedron(p: i64, q: i64) -> Result<Vec<(CanonicalKey, PointConfiguration, i64)>> {
    let base = standard_tpq(p, q).into_points();
    let mut found = Vec::new();
    for (a, b, h) in fifth_points(p, q) {
        let mut pts = base.clone();
        pts.push(pt(a, b, h));
        let cfg = PointConfiguration::new(pts)?;
        if lattice_points_in_hull(&cfg)?.len() != 5 {
            continue;
        }
        let w = lattice_width(&cfg)?.width;
        if w >= 2 {
            found.push((canonical_key(&cfg)?, cfg, w));
        }
    }
    Ok(found)
}

/// All classes of size 5 and width at least two with a maximal empty
/// tetrahedron of volume at most `q_max`, keyed by canonical key.
pub fn structured_census(q_max: i64) -> Result<Vec<CensusClass>> {
    if q_max < 1 {
        return Err(Error::InvalidParameters(format!("q_max = {q_max}")));
    }
    let pairs: Vec<(i64, i64)> =
        (1..=q_max).flat_map(|q| (1..=q).filter(move |&p| arith::gcd(p, q) == 1).map(move |p| (p, q))).collect();
    let per_pair: Vec<Result<Vec<_>>> = pairs.par_iter().map(|&(p, q)| search_tetrahedron(p, q)).collect();
    let mut classes: BTreeMap<CanonicalKey, CensusClass> = BTreeMap::new();
    for (&(_, q), found) in pairs.iter().zip(per_pair) {
        for (key, cfg, width) in found? {
            if classes.contains_key(&key) {
                continue;
            }
            let vector = five_point_vector(&cfg)?;
            classes.insert(key.clone(), CensusClass { key, representative: cfg, first_q: q, vector, width });
        }
    }
    Ok(classes.into_values().collect())
}

/// The classes of size 5 and width at least two, as classification records
/// in table order.
pub fn enumerate_size5_width_ge2() -> Result<Vec<ClassRecord>> {
    let mut out = Vec::new();
    for c in structured_census(DEFAULT_Q_MAX)? {
        let r = classify_size5(&c.representative)?
            .into_record()
            .ok_or_else(|| Error::Internal("census produced a configuration of the wrong size".into()))?;
        out.push(r);
    }
    let order: Vec<Family> = width_two_rows().into_iter().map(|r| r.family).collect();
    out.sort_by_key(|r| order.iter().position(|f| *f == r.family));
    Ok(out)
}
