//! Classification of lattice 3-polytopes with exactly five lattice points,
//! and the searches that regenerate the list of classes.

pub mod atlas;
pub mod census;
pub mod proofs;
pub mod structure;
pub mod sweep;
pub mod table;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::affine::{apply_map, triangle_frame, Matrix3, UnimodularAffineMap};
use crate::config::PointConfiguration;
use crate::equivalence::z_equivalent;
use crate::error::{Error, Result};
use crate::hull::lattice_points_in_hull;
use crate::invariants::{five_point_vector, FivePointVector, Signature};
use crate::point::LatticePoint3;

pub use structure::{structure_normalize, StructureForm};
pub use table::TableRow;

/// A row of the classification, with its parameters where the row is an
/// infinite family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    W1_22,
    /// `0 <= p <= q/2`, `gcd(p, q) = 1`.
    W1_21 { p: i64, q: i64 },
    /// `0 < a <= b`, `gcd(a, b) = 1`.
    W1_32 { a: i64, b: i64 },
    W1_31,
    W2_31,
    W2_41 { vector: FivePointVector },
}

impl Family {
    /// Tag without parameters, e.g. `W1-(2,1)`.
    pub fn tag(&self) -> &'static str {
        match self {
            Family::W1_22 => "W1-(2,2)",
            Family::W1_21 { .. } => "W1-(2,1)",
            Family::W1_32 { .. } => "W1-(3,2)",
            Family::W1_31 => "W1-(3,1)",
            Family::W2_31 => "W2-(3,1)",
            Family::W2_41 { .. } => "W2-(4,1)",
        }
    }

    pub fn width(&self) -> i64 {
        match self {
            Family::W2_31 | Family::W2_41 { .. } => 2,
            _ => 1,
        }
    }

    pub fn signature(&self) -> Signature {
        match self {
            Family::W1_22 => Signature::new(2, 2),
            Family::W1_21 { .. } => Signature::new(2, 1),
            Family::W1_32 { .. } => Signature::new(3, 2),
            Family::W1_31 | Family::W2_31 => Signature::new(3, 1),
            Family::W2_41 { .. } => Signature::new(4, 1),
        }
    }

    /// Checks the parameter ranges of the parametric rows.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Family::W1_21 { p, q } => q >= 1 && 0 <= p && 2 * p <= q && crate::arith::gcd(p, q) == 1,
            Family::W1_32 { a, b } => 0 < a && a <= b && crate::arith::gcd(a, b) == 1,
            Family::W2_41 { vector } => table::w2_41_by_sorted(vector.sorted()) == Some(*self),
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!("{self} is outside the table")))
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::W1_21 { p, q } => write!(f, "{}[p={p},q={q}]", self.tag()),
            Family::W1_32 { a, b } => write!(f, "{}[a={a},b={b}]", self.tag()),
            Family::W2_41 { vector } => write!(f, "{}{vector}", self.tag()),
            _ => f.write_str(self.tag()),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A classified configuration: its row and a map onto the row's
/// representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub family: Family,
    pub signature: Signature,
    pub width: i64,
    /// The listed vector, i.e. the vector of `representative` in its order.
    pub vector: FivePointVector,
    pub representative: PointConfiguration,
    /// Sends the lattice points of the input onto `representative`.
    pub witness: UnimodularAffineMap,
}

/// Result of `classify_size5`: a record, or the number of lattice points
/// when it is not five.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Size5(ClassRecord),
    Unsized5 { size: usize },
}

impl Classification {
    pub fn record(&self) -> Option<&ClassRecord> {
        match self {
            Classification::Size5(r) => Some(r),
            Classification::Unsized5 { .. } => None,
        }
    }

    pub fn into_record(self) -> Option<ClassRecord> {
        match self {
            Classification::Size5(r) => Some(r),
            Classification::Unsized5 { .. } => None,
        }
    }
}

fn linear(rows: [[i64; 3]; 3]) -> UnimodularAffineMap {
    UnimodularAffineMap::linear_only(Matrix3(rows)).expect("elementary matrices are unimodular")
}

pub(crate) fn shear_x_by_y(k: i64) -> UnimodularAffineMap {
    linear([[1, -k, 0], [0, 1, 0], [0, 0, 1]])
}

pub(crate) fn reflect(axis: usize) -> UnimodularAffineMap {
    let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    m[axis][axis] = -1;
    linear(m)
}

/// A map sending `l0, l1, u0` to `0, e1, e3` and `u1` to `(x, q, 1)` with
/// `q > 0`, when some integer functional is 0 on `l0, l1` and 1 on `u0, u1`
/// and the triangle `l0 l1 u0` is unimodular. Returns the map and `(x, q)`.
pub(crate) fn level_frame(
    l0: LatticePoint3,
    l1: LatticePoint3,
    u0: LatticePoint3,
    u1: LatticePoint3,
) -> Result<Option<(UnimodularAffineMap, i64, i64)>> {
    let Some(f) = triangle_frame(l0, l1.checked_sub(l0)?, u0.checked_sub(l0)?)? else { return Ok(None) };
    let y = f.apply(u1)?;
    if y.z == 0 || (1 - y.y) % y.z != 0 {
        return Ok(None);
    }
    let c = (1 - y.y) / y.z;
    // (x, y, z) ↦ (x, z, y + c·z): the level functional becomes the last
    // coordinate.
    let mut m = linear([[1, 0, 0], [0, 0, 1], [0, 1, c]]).compose(&f)?;
    if y.z < 0 {
        m = reflect(1).compose(&m)?;
    }
    Ok(Some((m, y.x, y.z.abs())))
}

/// The normalization of a (2,1) circuit: the collinear triple on the x-axis
/// centered at the origin, the other two points at `e3` and `(p, q, 1)`,
/// then a shear of x by a multiple of y and a reflection bring `p` into
/// `0..=q/2`.
fn normalize_21(pts: &PointConfiguration, v: &FivePointVector) -> Result<Option<(Family, UnimodularAffineMap)>> {
    let e = v.entries();
    let p = pts.points();
    let Some(mid) = e.iter().position(|&c| c < 0) else { return Ok(None) };
    let ends: Vec<usize> = (0..5).filter(|&i| e[i] > 0).collect();
    let zeros: Vec<usize> = (0..5).filter(|&i| e[i] == 0).collect();
    if ends.len() != 2 || zeros.len() != 2 {
        return Ok(None);
    }
    let Some((m, x, q)) = level_frame(p[mid], p[ends[0]], p[zeros[0]], p[zeros[1]])? else { return Ok(None) };
    let k = (2 * x as i128 + q as i128).div_euclid(2 * q as i128) as i64;
    let mut m = shear_x_by_y(k).compose(&m)?;
    let mut r = x - k * q;
    if r < 0 {
        m = reflect(0).compose(&m)?;
        r = -r;
    }
    let fam = Family::W1_21 { p: r, q };
    if fam.validate().is_err() || !apply_map(&m, pts)?.same_set(&table::representative(&fam)) {
        return Ok(None);
    }
    Ok(Some((fam, m)))
}

fn family_from_vector(v: &FivePointVector) -> Result<Family> {
    let s = v.sorted();
    let sig = v.signature();
    let bad = || Error::Internal(format!("volume vector {v} of a size-5 configuration is not in the table"));
    match (sig.pos, sig.neg) {
        (2, 2) => Ok(Family::W1_22),
        (3, 2) => {
            // Negative entries {−1, −(a+b)}; positive entries {1, a, b}.
            let mut pos: Vec<i64> = s.iter().copied().filter(|&x| x > 0).collect();
            let one = pos.iter().position(|&x| x == 1).ok_or_else(bad)?;
            pos.remove(one);
            let fam = Family::W1_32 { a: pos[0], b: pos[1] };
            fam.validate()?;
            Ok(fam)
        }
        (3, 1) => match s {
            [-3, 0, 1, 1, 1] => Ok(Family::W1_31),
            [-9, 0, 3, 3, 3] => Ok(Family::W2_31),
            _ => Err(bad()),
        },
        (4, 1) => table::w2_41_by_sorted(s).ok_or_else(bad),
        _ => Err(bad()),
    }
}

/// Classifies the polytope `conv(cfg)` if it has exactly five lattice points.
pub fn classify_size5(cfg: &PointConfiguration) -> Result<Classification> {
    if cfg.dim() < 3 {
        return Err(Error::Dimension { expected: "3", found: cfg.dim() });
    }
    let pts = lattice_points_in_hull(cfg)?;
    if pts.len() != 5 {
        return Ok(Classification::Unsized5 { size: pts.len() });
    }
    let v = five_point_vector(&pts)?;
    let (family, witness) = match normalize_21_if_applicable(&pts, &v)? {
        Some(found) => found,
        None => {
            let family = family_from_vector(&v)?;
            let rep = table::representative(&family);
            let w = if pts.same_set(&rep) {
                UnimodularAffineMap::IDENTITY
            } else {
                z_equivalent(&pts, &rep)?
                    .ok_or_else(|| Error::Internal(format!("no map onto the {family} representative")))?
            };
            (family, w)
        }
    };
    let row = table::row(&family);
    Ok(Classification::Size5(ClassRecord {
        family,
        signature: row.signature,
        width: row.width,
        vector: row.vector,
        representative: row.representative,
        witness,
    }))
}

fn normalize_21_if_applicable(
    pts: &PointConfiguration,
    v: &FivePointVector,
) -> Result<Option<(Family, UnimodularAffineMap)>> {
    if v.signature() != Signature::new(2, 1) {
        return Ok(None);
    }
    let found = normalize_21(pts, v)?;
    if found.is_some() {
        return Ok(found);
    }
    Err(Error::Internal(format!("(2,1) configuration {pts} did not normalize")))
}
