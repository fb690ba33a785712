//! Lattice polygons, handled through the plane `z = 0`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::canonical::{normal_form, CanonicalKey};
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::hull::{lattice_points_in_hull, vertices, Hull};
use crate::point::pt;
use crate::width::lattice_width;

pub type Point2 = [i64; 2];

pub fn embed(pts: &[Point2]) -> Result<PointConfiguration> {
    PointConfiguration::new(pts.iter().map(|p| pt(p[0], p[1], 0)).collect())
}

fn flatten(cfg: &PointConfiguration) -> Vec<Point2> {
    cfg.points().iter().map(|p| [p.x, p.y]).collect()
}

fn require_polygon(pts: &[Point2]) -> Result<PointConfiguration> {
    let c = embed(pts)?;
    if c.dim() != 2 {
        return Err(Error::Dimension { expected: "2", found: c.dim() });
    }
    Ok(c)
}

/// Lattice points of the polygon, sorted.
pub fn polygon_lattice_points(pts: &[Point2]) -> Result<Vec<Point2>> {
    Ok(flatten(&lattice_points_in_hull(&embed(pts)?)?))
}

pub fn polygon_vertices(pts: &[Point2]) -> Result<Vec<Point2>> {
    Ok(vertices(&embed(pts)?)?.iter().map(|p| [p.x, p.y]).collect())
}

pub fn polygon_width(pts: &[Point2]) -> Result<i64> {
    Ok(lattice_width(&require_polygon(pts)?)?.width)
}

/// Key of the lattice points of the polygon up to affine unimodular maps of
/// the plane.
pub fn polygon_key(pts: &[Point2]) -> Result<CanonicalKey> {
    require_polygon(pts)?;
    Ok(normal_form::<2>(&polygon_lattice_points(pts)?)?.key)
}

/// A class of lattice polygons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolygonClass {
    pub size: usize,
    /// All lattice points, in canonical position.
    pub points: Vec<Point2>,
    pub vertices: usize,
    pub width: i64,
    pub interior: usize,
    #[serde(skip)]
    pub key: CanonicalKey,
}

fn class_of(pts: &[Point2]) -> Result<PolygonClass> {
    let all = polygon_lattice_points(pts)?;
    let nf = normal_form::<2>(&all)?;
    let cfg = embed(&all)?;
    let hull = Hull::new(&cfg)?;
    let interior = cfg.points().iter().filter(|&&p| hull.relative_interior_contains(p)).count();
    Ok(PolygonClass {
        size: all.len(),
        vertices: polygon_vertices(&all)?.len(),
        width: polygon_width(&all)?,
        interior,
        points: nf.points,
        key: nf.key,
    })
}

/// Points at lattice distance one beyond some edge of the polygon whose
/// addition raises the number of lattice points by exactly one.
fn one_point_extensions(all: &[Point2]) -> Result<Vec<Vec<Point2>>> {
    let cfg = embed(all)?;
    let hull = Hull::new(&cfg)?;
    let reach = all.len() as i64 + 2;
    let mut out = Vec::new();
    for h in hull.facets() {
        let n = [h.normal.x, h.normal.y];
        if h.normal.z != 0 {
            continue;
        }
        // A point on the line n·x = bound + 1 and the edge direction.
        let (g, s, t) = crate::arith::ext_gcd(n[0], n[1]);
        if g != 1 {
            return Err(Error::Internal("edge normal is not primitive".into()));
        }
        let base = [s * (h.bound + 1), t * (h.bound + 1)];
        let dir = [-n[1], n[0]];
        let len2 = dir[0] * dir[0] + dir[1] * dir[1];
        let along: Vec<i64> = all.iter().map(|p| p[0] * dir[0] + p[1] * dir[1] - (base[0] * dir[0] + base[1] * dir[1])).collect();
        let lo = along.iter().min().unwrap().div_euclid(len2) - reach;
        let hi = along.iter().max().unwrap().div_euclid(len2) + 1 + reach;
        for k in lo..=hi {
            let x = [base[0] + k * dir[0], base[1] + k * dir[1]];
            let mut grown = all.to_vec();
            grown.push(x);
            let pts = polygon_lattice_points(&grown)?;
            if pts.len() == all.len() + 1 {
                out.push(pts);
            }
        }
    }
    Ok(out)
}

/// Classes of lattice polygons with at most `max_size` lattice points,
/// grown from the unimodular triangle one point at a time.
pub fn enumerate_polygons(max_size: usize) -> Result<Vec<PolygonClass>> {
    let mut classes: BTreeMap<CanonicalKey, PolygonClass> = BTreeMap::new();
    let start = class_of(&[[0, 0], [1, 0], [0, 1]])?;
    let mut layer = vec![start.clone()];
    classes.insert(start.key.clone(), start);
    for _ in 3..max_size {
        let mut next: BTreeMap<CanonicalKey, PolygonClass> = BTreeMap::new();
        for c in &layer {
            for grown in one_point_extensions(&c.points)? {
                let k = normal_form::<2>(&grown)?.key;
                if !next.contains_key(&k) {
                    let cls = class_of(&grown)?;
                    next.insert(k, cls);
                }
            }
        }
        layer = next.values().cloned().collect();
        classes.extend(next);
    }
    let mut out: Vec<PolygonClass> = classes.into_values().collect();
    out.sort_by(|a, b| (a.size, &a.key).cmp(&(b.size, &b.key)));
    Ok(out)
}

/// Classes of lattice polygons with 3, 4 or 5 lattice points.
pub fn enumerate_polygons_upto5() -> Result<Vec<PolygonClass>> {
    enumerate_polygons(5)
}

/// Independent count: every subset of `[0, side]^2` with at most
/// `max_size` points that is the full set of lattice points of its hull.
pub fn polygons_in_box(side: i64, max_size: usize) -> Result<Vec<PolygonClass>> {
    let grid: Vec<Point2> = (0..=side).flat_map(|x| (0..=side).map(move |y| [x, y])).collect();
    let mut classes: BTreeMap<CanonicalKey, PolygonClass> = BTreeMap::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        grid: &[Point2],
        start: usize,
        max: usize,
        stack: &mut Vec<usize>,
        classes: &mut BTreeMap<CanonicalKey, PolygonClass>,
    ) -> Result<()> {
        if stack.len() >= 3 {
            let pts: Vec<Point2> = stack.iter().map(|&i| grid[i]).collect();
            if embed(&pts)?.dim() == 2 && polygon_lattice_points(&pts)?.len() == pts.len() {
                let k = normal_form::<2>(&pts)?.key;
                if !classes.contains_key(&k) {
                    classes.insert(k, class_of(&pts)?);
                }
            }
        }
        if stack.len() == max {
            return Ok(());
        }
        for i in start..grid.len() {
            stack.push(i);
            rec(grid, i + 1, max, stack, classes)?;
            stack.pop();
        }
        Ok(())
    }
    rec(&grid, 0, max_size, &mut stack, &mut classes)?;
    let mut out: Vec<PolygonClass> = classes.into_values().collect();
    out.sort_by(|a, b| (a.size, &a.key).cmp(&(b.size, &b.key)));
    Ok(out)
}
