//! Reference data: the classes of lattice 3-polytopes with five lattice
//! points, one representative each.

use crate::config::PointConfiguration;
use crate::invariants::{FivePointVector, Signature};
use crate::point::{pt, LatticePoint3};

use super::Family;

/// One row of the reference table with fixed parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub family: Family,
    pub signature: Signature,
    pub width: i64,
    pub vector: FivePointVector,
    pub representative: PointConfiguration,
}

fn config(points: [LatticePoint3; 5]) -> PointConfiguration {
    PointConfiguration::new(points.to_vec()).expect("table representatives have distinct points")
}

const O: LatticePoint3 = pt(0, 0, 0);
const E1: LatticePoint3 = pt(1, 0, 0);
const E2: LatticePoint3 = pt(0, 1, 0);
const E3: LatticePoint3 = pt(0, 0, 1);

/// The representative of a family with the given parameters, in the table's
/// point order.
pub fn representative(family: &Family) -> PointConfiguration {
    match *family {
        Family::W1_22 => config([O, E1, E2, pt(1, 1, 0), E3]),
        Family::W1_21 { p, q } => config([O, E1, E3, pt(-1, 0, 0), pt(p, q, 1)]),
        Family::W1_32 { a, b } => config([O, E1, E2, E3, pt(a, b, 1)]),
        Family::W1_31 => config([O, E1, E2, pt(-1, -1, 0), E3]),
        Family::W2_31 => config([O, E1, E2, pt(-1, -1, 0), pt(1, 2, 3)]),
        Family::W2_41 { vector } => {
            let (p4, p5) = W2_41_POINTS
                .iter()
                .find(|(v, _, _)| *v == vector.entries())
                .map(|&(_, a, b)| (a, b))
                .expect("W2-(4,1) family built from a listed vector");
            config([O, E1, E3, p4, p5])
        }
    }
}

/// Volume vector of each (4,1) class of width two with the last two points
/// of its representative; the first three are `0`, `e1`, `e3`.
const W2_41_POINTS: [([i64; 5], LatticePoint3, LatticePoint3); 8] = [
    ([-4, 1, 1, 1, 1], pt(1, 1, 1), pt(-2, -1, -2)),
    ([-5, 1, 1, 1, 2], pt(1, 2, 1), pt(-1, -1, -1)),
    ([-7, 1, 1, 2, 3], pt(1, 3, 1), pt(-1, -2, -1)),
    ([-11, 1, 3, 2, 5], pt(2, 5, 1), pt(-1, -2, -1)),
    ([-13, 3, 4, 1, 5], pt(2, 5, 1), pt(-1, -1, -1)),
    ([-17, 3, 5, 2, 7], pt(2, 7, 1), pt(-1, -2, -1)),
    ([-19, 5, 4, 3, 7], pt(3, 7, 1), pt(-2, -3, -1)),
    ([-20, 5, 5, 5, 5], pt(2, 5, 1), pt(-3, -5, -2)),
];

/// The nine classes of width two, (3,1) first, then (4,1) in table order.
pub fn width_two_rows() -> Vec<TableRow> {
    let mut families = vec![Family::W2_31];
    families.extend(W2_41_POINTS.iter().map(|(v, _, _)| Family::W2_41 { vector: FivePointVector(*v) }));
    families.into_iter().map(|f| row(&f)).collect()
}

/// The vector listed for a family, in the representative's point order.
pub fn listed_vector(family: &Family) -> FivePointVector {
    FivePointVector(match *family {
        Family::W1_22 => [-1, 1, 1, -1, 0],
        Family::W1_21 { q, .. } => [-2 * q, q, 0, q, 0],
        Family::W1_32 { a, b } => [-a - b, a, b, 1, -1],
        Family::W1_31 => [-3, 1, 1, 1, 0],
        Family::W2_31 => [-9, 3, 3, 3, 0],
        Family::W2_41 { vector } => vector.entries(),
    })
}

pub fn row(family: &Family) -> TableRow {
    TableRow {
        family: *family,
        signature: family.signature(),
        width: family.width(),
        vector: listed_vector(family),
        representative: representative(family),
    }
}

/// The width-two (4,1) family whose vector has the given sorted entries.
pub(crate) fn w2_41_by_sorted(sorted: [i64; 5]) -> Option<Family> {
    W2_41_POINTS.iter().map(|(v, _, _)| FivePointVector(*v)).find(|v| v.sorted() == sorted).map(|vector| Family::W2_41 { vector })
}
