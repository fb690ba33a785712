//! Empty lattice tetrahedra: emptiness tests, the normal form T(p,q), maps
//! moving vertices, and the superlattice Λ(p,q).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine::{forced_map, triangle_frame, Matrix3, RationalAffineMap, UnimodularAffineMap};
use crate::arith::{self, Rational};
use crate::canonical::permutations;
use crate::config::PointConfiguration;
use crate::equivalence::tetrahedron_symmetries;
use crate::error::{Error, Result};
use crate::hull::{lattice_points_in_hull, Hull};
use crate::point::{pt, LatticePoint3, RationalPoint3};
use crate::volume::signed_volume;
use crate::width::lattice_width;

/// The standard tetrahedron `conv{(0,0,0), (1,0,0), (0,0,1), (p,q,1)}`.
pub fn standard_tpq(p: i64, q: i64) -> PointConfiguration {
    PointConfiguration::new(vec![pt(0, 0, 0), pt(1, 0, 0), pt(0, 0, 1), pt(p, q, 1)])
        .expect("standard tetrahedron has distinct points")
}

/// `p⁻¹ mod q` in `1..q`, with the value 1 for `q = 1`.
pub fn p_prime(p: i64, q: i64) -> Result<i64> {
    if q == 1 {
        return Ok(1);
    }
    arith::mod_inverse(p, q).ok_or_else(|| Error::InvalidParameters(format!("gcd({p},{q}) != 1")))
}

/// Equivalence class of empty tetrahedra of volume `q`. `p` is the least
/// representative in `1..=q` of `{±p^{±1} mod q}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TpqClass {
    p: i64,
    q: i64,
}

impl TpqClass {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q < 1 || arith::gcd(p, q) != 1 {
            return Err(Error::InvalidParameters(format!("T({p},{q}) needs q >= 1 and gcd(p,q) = 1")));
        }
        if q == 1 {
            return Ok(TpqClass { p: 1, q: 1 });
        }
        let r = p.rem_euclid(q);
        let inv = p_prime(r, q)?;
        let p = [r, q - r, inv, q - inv].into_iter().min().expect("four candidates");
        Ok(TpqClass { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn standard(&self) -> PointConfiguration {
        standard_tpq(self.p, self.q)
    }

    /// Whether `T(p2, q)` lies in this class.
    pub fn contains(&self, p2: i64) -> bool {
        TpqClass::new(p2, self.q).is_ok_and(|c| c == *self)
    }
}

impl fmt::Display for TpqClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

fn tetra_config(v: &[LatticePoint3; 4]) -> Result<PointConfiguration> {
    let cfg = PointConfiguration::new(v.to_vec())?;
    if cfg.dim() != 3 {
        return Err(Error::Coplanar);
    }
    Ok(cfg)
}

/// Emptiness by enumerating the lattice points of the hull.
pub fn is_empty_tetra_bruteforce(v: &[LatticePoint3; 4]) -> Result<bool> {
    Ok(lattice_points_in_hull(&tetra_config(v)?)?.len() == 4)
}

/// The three congruence conditions characterizing when
/// `conv{(0,0,0), (1,0,0), (0,1,0), (a,b,q)}` is empty.
pub fn lemma_a_predicate(a: i64, b: i64, q: i64) -> bool {
    if q == 0 {
        return false;
    }
    let q = q.abs();
    let (a, b) = (a.rem_euclid(q), b.rem_euclid(q));
    let one = 1 % q;
    (a == one && arith::gcd(b, q) == 1)
        || (b == one && arith::gcd(a, q) == 1)
        || ((a + b) % q == 0 && arith::gcd(a, q) == 1)
}

/// Emptiness of `conv{(0,0,0), (1,0,0), (0,1,0), (a,b,q)}` by counting
/// lattice points slice by slice: the slice at height `z` holds a lattice
/// point iff `(−az mod q) + (−bz mod q) <= q − z`.
pub fn is_empty_standard(a: i64, b: i64, q: i64) -> bool {
    let q = q.abs();
    if q == 0 {
        return false;
    }
    let (a, b) = (a.rem_euclid(q) as i128, b.rem_euclid(q) as i128);
    let q = q as i128;
    (1..q).all(|z| (-a * z).rem_euclid(q) + (-b * z).rem_euclid(q) > q - z)
}

/// Coordinates `(a, b, q)` with `q >= 0` of `x` in a unimodular frame that
/// sends `o`, `o + u`, `o + v` to the origin, `e1`, `e2`. Absent when the
/// triangle is not unimodular.
pub fn lemma_a_coordinates(
    o: LatticePoint3,
    u: LatticePoint3,
    v: LatticePoint3,
    x: LatticePoint3,
) -> Result<Option<(i64, i64, i64)>> {
    let Some(f) = triangle_frame(o, u, v)? else { return Ok(None) };
    let y = f.apply(x)?;
    Ok(Some((y.x, y.y, y.z.abs())))
}

/// Exact emptiness test without enumerating points: some facet of an empty
/// tetrahedron is a unimodular triangle, and in its frame the slice test
/// decides. Tetrahedra with no unimodular facet are never empty.
pub fn is_empty_tetra(v: &[LatticePoint3; 4]) -> Result<bool> {
    if signed_volume(v[0], v[1], v[2], v[3])? == 0 {
        return Err(Error::Coplanar);
    }
    for apex in 0..4 {
        let f: Vec<LatticePoint3> = (0..4).filter(|&i| i != apex).map(|i| v[i]).collect();
        let u = f[1].checked_sub(f[0])?;
        let w = f[2].checked_sub(f[0])?;
        if let Some((a, b, q)) = lemma_a_coordinates(f[0], u, w, v[apex])? {
            return Ok(is_empty_standard(a, b, q));
        }
    }
    Ok(false)
}

/// White normal form of an empty tetrahedron plus a map onto the standard
/// representative `T(p,q)` of its class.
pub fn classify_empty(v: &[LatticePoint3; 4]) -> Result<(TpqClass, UnimodularAffineMap)> {
    let cfg = tetra_config(v)?;
    if !is_empty_tetra(v)? {
        return Err(Error::NotEmpty);
    }
    let q = signed_volume(v[0], v[1], v[2], v[3])?.abs();
    let class = if q == 1 {
        TpqClass::new(1, 1)?
    } else {
        // Width one splits the vertices 2 + 2; in a frame where the lower
        // edge is e1 and one upper vertex is e3, the other upper vertex is
        // (p', ±q, 1) with p' in the class.
        let w = lattice_width(&cfg)?;
        let (lower, upper): (Vec<_>, Vec<_>) = v.iter().partition(|&&p| w.witness.eval(p).ok() == Some(0));
        if lower.len() != 2 || upper.len() != 2 {
            return Err(Error::Internal("empty tetrahedron of volume > 1 without a 2+2 split".into()));
        }
        let o = lower[0];
        let frame = triangle_frame(o, lower[1].checked_sub(o)?, upper[0].checked_sub(o)?)?
            .ok_or_else(|| Error::Internal("non-unimodular face in an empty tetrahedron".into()))?;
        // The frame puts the lower edge on e1 and the first upper vertex at
        // e2; the last vertex lands on (p', y, ±q), and a shear in y plus
        // swapping y and z turns this into T(p', ±q).
        let img = frame.apply(upper[1])?;
        TpqClass::new(img.x, q)?
    };
    let target = class.standard();
    let tp: [LatticePoint3; 4] = std::array::from_fn(|i| target.points()[i]);
    for perm in permutations(&[0, 1, 2, 3]) {
        let src: [LatticePoint3; 4] = std::array::from_fn(|i| v[perm[i]]);
        if let Some(m) = forced_map(&src, &tp)? {
            return Ok((class, m));
        }
    }
    Err(Error::Internal(format!("no vertex bijection onto {class}")))
}

/// The map of the vertex-moving lemma taking vertex `i` (1, 2 or 3) of the
/// standard `T(p,q)` to the origin. `t1` preserves `T(p,q)`; `t2` and `t3`
/// map it onto `T(p⁻¹ mod q, q)`.
pub fn vertex_to_origin_map(p: i64, q: i64, i: usize) -> Result<UnimodularAffineMap> {
    if q < 1 || !(1..=q).contains(&p) || arith::gcd(p, q) != 1 {
        return Err(Error::InvalidParameters(format!("need 1 <= p <= q, gcd(p,q)=1; got ({p},{q})")));
    }
    let pp = p_prime(p, q)?;
    let r = |num: i64| -> Result<i64> {
        if num % q != 0 {
            return Err(Error::Internal("non-integral entry".into()));
        }
        Ok(num / q)
    };
    let (m, t) = match i {
        1 => (Matrix3([[-1, 0, p - 1], [0, -1, q], [0, 0, 1]]), pt(1, 0, 0)),
        2 => (Matrix3([[pp, r(1 - p * pp)?, 0], [q, -p, 0], [0, 0, -1]]), pt(0, 0, 1)),
        3 => (Matrix3([[-pp, r(p * pp - 1)?, 1 - pp], [-q, p, -q], [0, 0, -1]]), pt(pp, q, 1)),
        _ => return Err(Error::InvalidParameters(format!("vertex index {i} not in 1..=3"))),
    };
    UnimodularAffineMap::new(m, t)
}

/// All unimodular maps permuting the vertices of the tetrahedron.
pub fn unimodular_automorphisms(v: &[LatticePoint3; 4]) -> Result<Vec<UnimodularAffineMap>> {
    tetrahedron_symmetries(v)
}

/// `Z^3 + Z·(1/q, −1/q, p/q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LambdaPQ {
    pub p: i64,
    pub q: i64,
}

impl LambdaPQ {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q < 1 || arith::gcd(p, q) != 1 {
            return Err(Error::InvalidParameters(format!("Λ({p},{q}) needs q >= 1, gcd(p,q)=1")));
        }
        Ok(LambdaPQ { p, q })
    }

    pub fn generator(&self) -> RationalPoint3 {
        RationalPoint3::from_scaled(1, -1, self.p, self.q).expect("q >= 1")
    }

    pub fn contains(&self, v: &RationalPoint3) -> bool {
        lambda_contains(self, v)
    }

    /// Points of the lattice in `[0,1)^3`; there are exactly `q` of them.
    pub fn points_in_unit_cube(&self) -> Vec<RationalPoint3> {
        let q = self.q;
        let mut out = Vec::new();
        for i in 0..q {
            for j in 0..q {
                for k in 0..q {
                    let v = RationalPoint3::from_scaled(i, j, k, q).expect("q >= 1");
                    if self.contains(&v) {
                        out.push(v);
                    }
                }
            }
        }
        out
    }
}

/// Membership in Λ(p,q), decided on integers after scaling by `q`.
pub fn lambda_contains(l: &LambdaPQ, v: &RationalPoint3) -> bool {
    let q = l.q as i128;
    let mut w = [0i128; 3];
    for (slot, c) in w.iter_mut().zip(v.coords()) {
        let (n, d) = arith::ratio_parts(&c);
        if (n * q) % d != 0 {
            return false;
        }
        *slot = (n * q / d).rem_euclid(q);
    }
    // w ≡ t·(1, −1, p) (mod q)
    let t = (-w[1]).rem_euclid(q);
    w[0] == t && w[2] == (t * l.p as i128).rem_euclid(q)
}

/// Membership of `(p'/q, −p'/q, 1/q)` in the triangles
/// `t2 = conv{(0,0,0), (1,−1,0), (1/2,−1/2,1/2)}` and
/// `t1 = conv{(0,0,0), (1,−1,0), (1,−1,1/2)}`, returned as `(in_t2, in_t1)`.
pub fn fundamental_rectangle_check(p: i64, q: i64) -> Result<(bool, bool)> {
    if q < 2 || arith::gcd(p, q) != 1 {
        return Err(Error::InvalidParameters(format!("need q >= 2 and gcd(p,q)=1; got ({p},{q})")));
    }
    let pp = p_prime(p.rem_euclid(q), q)?;
    // Everything scaled by 2q keeps the test in integers.
    let s = 2 * q;
    let point = pt(2 * pp, -2 * pp, 2);
    let tri = |third: LatticePoint3| -> Result<bool> {
        let cfg = PointConfiguration::new(vec![pt(0, 0, 0), pt(s, -s, 0), third])?;
        Ok(Hull::new(&cfg)?.contains(point))
    };
    Ok((tri(pt(q, -q, q))?, tri(pt(s, -s, q))?))
}

/// The change of coordinates sending the vertices `(0,0,0), (1,0,0), (0,0,1),
/// (p,q,1)` of `T(p,q)` to `o, e3, e1, e2`.
pub fn change_of_coordinates(p: i64, q: i64) -> Result<RationalAffineMap> {
    let r = |a: [i64; 3]| RationalPoint3::from(LatticePoint3::from(a));
    RationalAffineMap::through(
        &[r([0, 0, 0]), r([1, 0, 0]), r([0, 0, 1]), r([p, q, 1])],
        &[r([0, 0, 0]), r([0, 0, 1]), r([1, 0, 0]), r([0, 1, 0])],
    )
}

/// Checks that the change of coordinates carries Z^3 exactly onto Λ(p,q):
/// the images of a basis lie in Λ(p,q), and the preimages of the
/// generators of Λ(p,q) are integral.
pub fn verify_change_of_coordinates(p: i64, q: i64) -> Result<bool> {
    if q < 1 || !(1..=q).contains(&p) || arith::gcd(p, q) != 1 {
        return Err(Error::InvalidParameters(format!("need 1 <= p <= q, gcd(p,q)=1; got ({p},{q})")));
    }
    let lambda = change_of_coordinates(p, q)?;
    let r = |a: [i64; 3]| RationalPoint3::from(LatticePoint3::from(a));
    let inverse = RationalAffineMap::through(
        &[r([0, 0, 0]), r([0, 0, 1]), r([1, 0, 0]), r([0, 1, 0])],
        &[r([0, 0, 0]), r([1, 0, 0]), r([0, 0, 1]), r([p, q, 1])],
    )?;
    let l = LambdaPQ::new(p, q)?;
    let basis = [r([1, 0, 0]), r([0, 1, 0]), r([0, 0, 1])];
    let forward = basis.iter().all(|e| l.contains(&lambda.apply(e)));
    let mut generators = basis.to_vec();
    generators.push(l.generator());
    let backward = generators.iter().all(|g| inverse.apply(g).is_integral());
    let zero = Rational::from(0);
    let fixes_origin = lambda.translation == [zero; 3];
    Ok(forward && backward && fixes_origin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::apply_map;

    fn tet(v: [[i64; 3]; 4]) -> [LatticePoint3; 4] {
        v.map(LatticePoint3::from)
    }

    #[test]
    fn emptiness_examples() {
        let unit = tet([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert!(is_empty_tetra_bruteforce(&unit).unwrap());
        assert!(is_empty_tetra_bruteforce(&tet([[0, 0, 0], [1, 0, 0], [0, 0, 1], [2, 5, 1]])).unwrap());
        let fat = tet([[0, 0, 0], [1, 0, 0], [0, 1, 0], [2, 2, 4]]);
        assert!(!is_empty_tetra_bruteforce(&fat).unwrap());
        assert!(!is_empty_tetra(&fat).unwrap());
        assert_eq!(is_empty_tetra_bruteforce(&tet([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]])), Err(Error::Coplanar));
    }

    #[test]
    fn lemma_a_examples() {
        assert!(lemma_a_predicate(1, 3, 5));
        assert!(!lemma_a_predicate(2, 2, 4));
        assert!(lemma_a_predicate(0, 0, 1));
        assert!(is_empty_standard(1, 3, 5));
        assert!(!is_empty_standard(2, 2, 4));
        assert!(is_empty_standard(0, 0, 1));
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(TpqClass::new(3, 7).unwrap(), TpqClass::new(2, 7).unwrap());
        assert_eq!(TpqClass::new(1, 2).unwrap().p(), 1);
        assert_eq!(TpqClass::new(5, 1).unwrap().p(), 1);
        assert!(TpqClass::new(2, 4).is_err());
    }

    #[test]
    fn classify_examples() {
        let unit = tet([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let (c, m) = classify_empty(&unit).unwrap();
        assert_eq!((c.p(), c.q()), (1, 1));
        let unit_cfg = PointConfiguration::new(unit.to_vec()).unwrap();
        assert!(apply_map(&m, &unit_cfg).unwrap().same_set(&c.standard()));
        let v = tet([[0, 0, 0], [1, 0, 0], [0, 0, 1], [3, 7, 1]]);
        let (c, m) = classify_empty(&v).unwrap();
        assert_eq!((c.p(), c.q()), (2, 7));
        assert!(apply_map(&m, &standard_tpq(3, 7)).unwrap().same_set(&c.standard()));
        assert_eq!(classify_empty(&tet([[0, 0, 0], [1, 0, 0], [0, 0, 1], [1, 2, 1]])).unwrap().0.p(), 1);
        assert_eq!(classify_empty(&tet([[0, 0, 0], [1, 0, 0], [0, 1, 0], [2, 2, 4]])), Err(Error::NotEmpty));
    }

    #[test]
    fn vertex_maps() {
        for (p, q) in [(1, 1), (2, 5), (3, 7), (1, 2), (4, 9)] {
            let t = standard_tpq(p, q);
            let pp = p_prime(p, q).unwrap();
            let t1 = vertex_to_origin_map(p, q, 1).unwrap();
            assert_eq!(t1.apply(pt(1, 0, 0)).unwrap(), pt(0, 0, 0));
            assert_eq!(t1.compose(&t1).unwrap(), UnimodularAffineMap::IDENTITY);
            assert!(apply_map(&t1, &t).unwrap().same_set(&t));
            for i in [2, 3] {
                let ti = vertex_to_origin_map(p, q, i).unwrap();
                assert_eq!(ti.apply(t.points()[i]).unwrap(), pt(0, 0, 0));
                assert!(apply_map(&ti, &t).unwrap().same_set(&standard_tpq(pp, q)));
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(unimodular_automorphisms(&tet([[0, 0, 0], [1, 0, 0], [0, 0, 1], [2, 7, 1]])).unwrap().len(), 2);
        assert_eq!(unimodular_automorphisms(&tet([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])).unwrap().len(), 24);
    }

    #[test]
    fn lambda_membership() {
        let l = LambdaPQ::new(2, 5).unwrap();
        assert!(l.contains(&pt(3, -1, 7).into()));
        assert!(l.contains(&RationalPoint3::from_scaled(3, -3, 1, 5).unwrap()));
        assert!(!l.contains(&RationalPoint3::from_scaled(1, 0, 0, 5).unwrap()));
        assert_eq!(l.points_in_unit_cube().len(), 5);
    }

    #[test]
    fn change_of_coordinates_examples() {
        assert!(verify_change_of_coordinates(1, 1).unwrap());
        assert!(verify_change_of_coordinates(4, 7).unwrap());
        let lam = change_of_coordinates(2, 5).unwrap();
        let img = lam.apply(&pt(0, 1, 0).into());
        assert_eq!(img, RationalPoint3::from_scaled(-1, 1, -2, 5).unwrap());
    }

    #[test]
    fn rectangle_examples() {
        assert_eq!(fundamental_rectangle_check(3, 7).unwrap(), (true, true));
        assert_eq!(fundamental_rectangle_check(1, 5).unwrap(), (true, false));
        assert!(fundamental_rectangle_check(2, 4).is_err());
    }
}
