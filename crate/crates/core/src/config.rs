use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::point::LatticePoint3;

/// An ordered list of distinct lattice points; the polytope is its convex hull.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<LatticePoint3>", into = "Vec<LatticePoint3>")]
pub struct PointConfiguration {
    points: Vec<LatticePoint3>,
    dim: usize,
}

impl PointConfiguration {
    pub fn new(points: Vec<LatticePoint3>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        let mut seen = BTreeSet::new();
        for &p in &points {
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint(p));
            }
        }
        let dim = frame_indices(&points)?.len() - 1;
        Ok(PointConfiguration { points, dim })
    }

    pub fn from_arrays(points: &[[i64; 3]]) -> Result<Self> {
        Self::new(points.iter().map(|&a| a.into()).collect())
    }

    pub fn points(&self) -> &[LatticePoint3] {
        &self.points
    }

    pub fn into_points(self) -> Vec<LatticePoint3> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Affine dimension of the point set (0..=3).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, p: &LatticePoint3) -> bool {
        self.points.contains(p)
    }

    /// Same points in lexicographic order.
    pub fn sorted(&self) -> Self {
        let mut points = self.points.clone();
        points.sort();
        PointConfiguration { points, dim: self.dim }
    }

    /// Equality as sets, ignoring order.
    pub fn same_set(&self, other: &Self) -> bool {
        self.len() == other.len() && self.sorted().points == other.sorted().points
    }

    /// Indices of a greedy affinely independent subset spanning the affine hull:
    /// the first point, then each point that raises the dimension.
    pub fn frame(&self) -> Vec<usize> {
        frame_indices(&self.points).expect("frame computed at construction")
    }

    pub fn without(&self, p: &LatticePoint3) -> Result<Self> {
        Self::new(self.points.iter().copied().filter(|q| q != p).collect())
    }

    pub fn to_arrays(&self) -> Vec<[i64; 3]> {
        self.points.iter().map(|p| p.to_array()).collect()
    }
}

impl TryFrom<Vec<LatticePoint3>> for PointConfiguration {
    type Error = Error;
    fn try_from(v: Vec<LatticePoint3>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<PointConfiguration> for Vec<LatticePoint3> {
    fn from(c: PointConfiguration) -> Self {
        c.points
    }
}

impl fmt::Display for PointConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

fn frame_indices(points: &[LatticePoint3]) -> Result<Vec<usize>> {
    let mut frame = vec![0usize];
    let o = points[0];
    let mut basis: Vec<LatticePoint3> = Vec::new();
    for (i, &p) in points.iter().enumerate().skip(1) {
        let d = p.checked_sub(o)?;
        let independent = match basis.len() {
            0 => !d.is_zero(),
            1 => !basis[0].cross(d)?.is_zero(),
            2 => arith::det3(&[basis[0].to_array(), basis[1].to_array(), d.to_array()])? != 0,
            _ => false,
        };
        if independent {
            basis.push(d);
            frame.push(i);
            if basis.len() == 3 {
                break;
            }
        }
    }
    Ok(frame)
}

/// Rank of the difference set `{p_i − p_1}`.
pub fn affine_dimension(cfg: &PointConfiguration) -> usize {
    cfg.dim()
}
