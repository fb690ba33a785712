//! Minimal and quasi-minimal polytopes: vertex deletion, `Vert*`, and the
//! projection check for the large case.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::affine::{unimodular_with_first_row, Matrix3};
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::hull::{lattice_points_in_hull, vertices, Hull};
use crate::plane::{embed, enumerate_polygons, polygon_key, polygon_lattice_points, polygon_vertices, PolygonClass, Point2};
use crate::point::{pt, LatticePoint3};
use crate::width::{lattice_width, IntegerFunctional};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Minimal,
    QuasiMinimal,
    Neither,
    /// Width one: the notion does not apply.
    WidthOne,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Minimal => "minimal",
            Verdict::QuasiMinimal => "quasi-minimal",
            Verdict::Neither => "neither",
            Verdict::WidthOne => "width-one",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// What happens to `P` when the vertex is removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletedVertex {
    pub vertex: LatticePoint3,
    pub dimension: usize,
    /// Lattice width of `P^v`; absent when the dimension dropped.
    pub width: Option<i64>,
    /// A functional taking at most two values on `P^v`: the width witness,
    /// or the normal of its plane after a dimension drop.
    pub functional: Option<IntegerFunctional>,
    pub in_vert_star: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub verdict: Verdict,
    pub size: usize,
    pub dimension: usize,
    pub width: i64,
    pub vertices: Vec<LatticePoint3>,
    pub vert_star: Vec<LatticePoint3>,
    pub deleted: Vec<DeletedVertex>,
}

/// Lattice points of `conv((P ∩ Z^3) \ {v})`.
pub fn vertex_deletion(cfg: &PointConfiguration, v: LatticePoint3) -> Result<PointConfiguration> {
    if !vertices(cfg)?.contains(&v) {
        return Err(Error::NotAVertex(v));
    }
    // The remaining lattice points of P are exactly those of their hull.
    lattice_points_in_hull(cfg)?.without(&v)
}

fn deleted_vertex(all: &PointConfiguration, v: LatticePoint3) -> Result<DeletedVertex> {
    let rest = all.without(&v)?;
    let dimension = rest.dim();
    if dimension < all.dim() {
        let functional = if dimension + 1 == all.dim() && all.dim() == 3 {
            Hull::new(&rest)?.equalities().first().map(|h| IntegerFunctional::new(h.normal.x, h.normal.y, h.normal.z, -h.bound))
        } else {
            None
        };
        return Ok(DeletedVertex { vertex: v, dimension, width: None, functional, in_vert_star: true });
    }
    let w = lattice_width(&rest)?;
    Ok(DeletedVertex {
        vertex: v,
        dimension,
        width: Some(w.width),
        functional: Some(w.witness),
        in_vert_star: w.width == 1,
    })
}

/// `Vert*` and the verdict, relative to the dimension of the input (2 or 3).
pub fn minimality_report(cfg: &PointConfiguration) -> Result<MinimalityReport> {
    if cfg.dim() < 2 {
        return Err(Error::Dimension { expected: "2 or 3", found: cfg.dim() });
    }
    let all = lattice_points_in_hull(cfg)?;
    let width = lattice_width(&all)?.width;
    let verts = vertices(&all)?;
    let mut report = MinimalityReport {
        verdict: Verdict::WidthOne,
        size: all.len(),
        dimension: all.dim(),
        width,
        vertices: verts.clone(),
        vert_star: Vec::new(),
        deleted: Vec::new(),
    };
    if width < 2 {
        return Ok(report);
    }
    report.deleted = verts.par_iter().map(|&v| deleted_vertex(&all, v)).collect::<Result<_>>()?;
    report.vert_star = report.deleted.iter().filter(|d| d.in_vert_star).map(|d| d.vertex).collect();
    report.verdict = match verts.len() - report.vert_star.len() {
        0 => Verdict::Minimal,
        1 => Verdict::QuasiMinimal,
        _ => Verdict::Neither,
    };
    Ok(report)
}

/// Verdict for a lattice polygon, which must have width at least two.
pub fn classify_2d_minimality(poly: &[Point2]) -> Result<Verdict> {
    let cfg = embed(poly)?;
    if cfg.dim() != 2 {
        return Err(Error::Dimension { expected: "2", found: cfg.dim() });
    }
    let r = minimality_report(&cfg)?;
    if r.verdict == Verdict::WidthOne {
        return Err(Error::Precondition("polygon has width one".into()));
    }
    Ok(r.verdict)
}

/// Minimal and quasi-minimal polygons with at most `max_size` lattice points.
pub fn minimal_polygons(max_size: usize) -> Result<Vec<(PolygonClass, Verdict)>> {
    let mut out = Vec::new();
    for c in enumerate_polygons(max_size)? {
        if c.width < 2 {
            continue;
        }
        let v = classify_2d_minimality(&c.points)?;
        if matches!(v, Verdict::Minimal | Verdict::QuasiMinimal) {
            out.push((c, v));
        }
    }
    Ok(out)
}

/// Size bound of the spanning case in dimension three, `2^3 + 3`.
pub const SMALL_CASE_BOUND: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "kebab-case")]
pub enum ProjectionReport {
    /// At most eleven lattice points; nothing to check.
    SmallCase { size: usize },
    /// The functionals span; with more than eleven points this contradicts
    /// the bound.
    Spanning { size: usize },
    Projected(Projection),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Projection {
    pub size: usize,
    /// Primitive direction on which all the functionals vanish.
    pub direction: LatticePoint3,
    /// Lattice points of the image polygon, in the coordinates of the map.
    pub polygon: Vec<Point2>,
    pub polygon_vertices: Vec<Point2>,
    /// Each vertex of the image has exactly one lattice preimage in `P`,
    /// and that preimage is a vertex of `P`.
    pub unique_lifts: bool,
    /// The lifted vertices of the image that lie in `Vert*` of `P`.
    pub lifted_vert_star: usize,
    pub verdict: Option<Verdict>,
}

fn rank(vs: &[LatticePoint3]) -> Result<usize> {
    let nonzero: Vec<LatticePoint3> = vs.iter().copied().filter(|v| !v.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(0);
    }
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            let c = nonzero[i].cross(nonzero[j])?;
            if c.is_zero() {
                continue;
            }
            if nonzero.iter().any(|&w| c.dot(w).map(|d| d != 0).unwrap_or(true)) {
                return Ok(3);
            }
            return Ok(2);
        }
    }
    Ok(1)
}

/// Projection of the lattice points along a primitive direction `d`:
/// coordinates two and three after a unimodular map sending `d` to `e1`.
pub fn project_along(cfg: &PointConfiguration, d: LatticePoint3) -> Result<Vec<(LatticePoint3, Point2)>> {
    let u = unimodular_with_first_row(d)?.transpose();
    let inv: Matrix3 = u.unimodular_inverse()?;
    cfg.points()
        .iter()
        .map(|&p| {
            let q = inv.mul_vec(p)?;
            Ok((p, [q.y, q.z]))
        })
        .collect()
}

/// Checks the alternative for a minimal or quasi-minimal 3-polytope: at most
/// eleven lattice points, or a projection onto a polygon whose vertices lift
/// uniquely.
pub fn projection_dichotomy_check(cfg: &PointConfiguration) -> Result<ProjectionReport> {
    if cfg.dim() != 3 {
        return Err(Error::Dimension { expected: "3", found: cfg.dim() });
    }
    let report = minimality_report(cfg)?;
    if !matches!(report.verdict, Verdict::Minimal | Verdict::QuasiMinimal) {
        return Err(Error::Precondition(format!("input is {}", report.verdict)));
    }
    if report.size <= SMALL_CASE_BOUND {
        return Ok(ProjectionReport::SmallCase { size: report.size });
    }
    let forms: Vec<LatticePoint3> =
        report.deleted.iter().filter(|d| d.in_vert_star).filter_map(|d| d.functional.map(|f| f.linear())).collect();
    if rank(&forms)? == 3 {
        return Ok(ProjectionReport::Spanning { size: report.size });
    }
    let mut direction = None;
    'outer: for (i, a) in forms.iter().enumerate() {
        for b in &forms[i + 1..] {
            let c = a.cross(*b)?;
            if !c.is_zero() {
                direction = Some(c.primitive());
                break 'outer;
            }
        }
    }
    let Some(direction) = direction else {
        return Err(Error::Internal("functionals do not determine a line".into()));
    };
    let all = lattice_points_in_hull(cfg)?;
    let images = project_along(&all, direction)?;
    let mut fibres: BTreeMap<Point2, Vec<LatticePoint3>> = BTreeMap::new();
    for (p, q) in &images {
        fibres.entry(*q).or_default().push(*p);
    }
    let shadow: Vec<Point2> = fibres.keys().copied().collect();
    let polygon = polygon_lattice_points(&shadow)?;
    let pv = polygon_vertices(&polygon)?;
    let mut unique_lifts = true;
    let mut lifted_vert_star = 0;
    for w in &pv {
        match fibres.get(w).map(|f| f.as_slice()) {
            Some([p]) if report.vertices.contains(p) => {
                if report.vert_star.contains(p) {
                    lifted_vert_star += 1;
                }
            }
            _ => unique_lifts = false,
        }
    }
    let verdict = if embed(&polygon)?.dim() == 2 { classify_2d_minimality(&polygon).ok() } else { None };
    Ok(ProjectionReport::Projected(Projection {
        size: report.size,
        direction,
        polygon,
        polygon_vertices: pv,
        unique_lifts,
        lifted_vert_star,
        verdict,
    }))
}

/// `conv{(1,0,0), (−1,0,0), (0,−1,k), (0,1,k)}`, and with the extra vertex
/// `(0,0,k+1)` when `apex` is set.
pub fn lemma_tetrahedron(k: i64, apex: bool) -> Result<PointConfiguration> {
    if k < 1 {
        return Err(Error::InvalidParameters(format!("need k >= 1, got {k}")));
    }
    let mut v = vec![pt(1, 0, 0), pt(-1, 0, 0), pt(0, -1, k), pt(0, 1, k)];
    if apex {
        v.push(pt(0, 0, k + 1));
    }
    PointConfiguration::new(v)
}

/// Key of the diamond `conv{(±1,0), (0,±1)}`.
pub fn diamond_key() -> Result<crate::canonical::CanonicalKey> {
    polygon_key(&[[1, 0], [-1, 0], [0, 1], [0, -1]])
}
