//! Certified lattice width.
//!
//! For a full-dimensional configuration take `D` independent difference
//! vectors `v_i` as the rows of `M`. A functional `c` of spread at most `r`
//! has `|c·v_i| <= r`, so `c = M⁻¹ y` for an integer `y` in the box
//! `‖y‖∞ <= r`. Scanning `r = 1, 2, ...` and stopping at the first radius
//! that admits a functional of spread `<= r` yields the exact width; the
//! axis spreads bound the number of rounds.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine::{apply_map, flattening_map, UnimodularAffineMap};
use crate::arith;
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::hull::{lattice_points_in_hull, vertices};
use crate::point::{pt, LatticePoint3};

/// `f(x, y, z) = a·x + b·y + c·z + k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntegerFunctional {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub k: i64,
}

impl IntegerFunctional {
    pub const fn new(a: i64, b: i64, c: i64, k: i64) -> Self {
        IntegerFunctional { a, b, c, k }
    }

    pub fn linear(&self) -> LatticePoint3 {
        pt(self.a, self.b, self.c)
    }

    pub fn is_zero_form(&self) -> bool {
        self.linear().is_zero()
    }

    pub fn is_primitive(&self) -> bool {
        self.linear().is_primitive()
    }

    pub fn eval(&self, p: LatticePoint3) -> Result<i64> {
        arith::add(self.linear().dot(p)?, self.k)
    }

    /// `f ∘ m`.
    pub fn pullback(&self, m: &UnimodularAffineMap) -> Result<Self> {
        let lin = m.linear().transpose().mul_vec(self.linear())?;
        let k = arith::add(self.linear().dot(m.translation())?, self.k)?;
        Ok(IntegerFunctional::new(lin.x, lin.y, lin.z, k))
    }

    /// Values on the configuration: `(min, max)`.
    pub fn range(&self, cfg: &PointConfiguration) -> Result<(i64, i64)> {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for &p in cfg.points() {
            let v = self.eval(p)?;
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Ok((lo, hi))
    }
}

impl fmt::Display for IntegerFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coef, var) in [(self.a, "x"), (self.b, "y"), (self.c, "z"), (self.k, "")] {
            if coef == 0 {
                continue;
            }
            let mag = coef.unsigned_abs();
            let sign = if coef < 0 { "-" } else { "+" };
            if out.is_empty() {
                if coef < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if mag != 1 || var.is_empty() {
                out.push_str(&mag.to_string());
            }
            out.push_str(var);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Spread `max f − min f` over the configuration.
pub fn width_of(cfg: &PointConfiguration, f: &IntegerFunctional) -> Result<i64> {
    if f.is_zero_form() {
        return Err(Error::ConstantFunctional);
    }
    let (lo, hi) = f.range(cfg)?;
    if lo == hi {
        return Err(Error::ConstantFunctional);
    }
    arith::sub(hi, lo)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthResult {
    pub width: i64,
    /// Attains the width, takes minimum value 0 on the configuration.
    pub witness: IntegerFunctional,
    /// The radius of the last dual box that was scanned.
    pub certificate_bound: i64,
}

/// Minimal width over non-constant integer functionals, computed within the
/// affine lattice spanned by the configuration.
pub fn lattice_width(cfg: &PointConfiguration) -> Result<WidthResult> {
    match cfg.dim() {
        0 => Err(Error::Dimension { expected: "at least 1", found: 0 }),
        3 => {
            let (w, c, r) = box_width::<3>(&project::<3>(&vertex_config(cfg)?)?)?;
            finish(cfg, pt(c[0], c[1], c[2]), w, r)
        }
        d => {
            let m = flattening_map(cfg)?;
            let flat = apply_map(&m, cfg)?;
            let flat_vertices = vertex_config(&flat)?;
            let (w, lin, r) = if d == 2 {
                let (w, c, r) = box_width::<2>(&project::<2>(&flat_vertices)?)?;
                (w, pt(c[0], c[1], 0), r)
            } else {
                let (w, c, r) = box_width::<1>(&project::<1>(&flat_vertices)?)?;
                (w, pt(c[0], 0, 0), r)
            };
            let g = IntegerFunctional::new(lin.x, lin.y, lin.z, 0).pullback(&m)?;
            finish(cfg, g.linear(), w, r)
        }
    }
}

fn finish(cfg: &PointConfiguration, lin: LatticePoint3, width: i64, bound: i64) -> Result<WidthResult> {
    let f = IntegerFunctional::new(lin.x, lin.y, lin.z, 0);
    let (lo, hi) = f.range(cfg)?;
    debug_assert_eq!(hi - lo, width);
    Ok(WidthResult { width, witness: IntegerFunctional::new(lin.x, lin.y, lin.z, -lo), certificate_bound: bound })
}

fn vertex_config(cfg: &PointConfiguration) -> Result<PointConfiguration> {
    PointConfiguration::new(vertices(cfg)?)
}

fn project<const D: usize>(cfg: &PointConfiguration) -> Result<Vec<[i64; D]>> {
    cfg.points()
        .iter()
        .map(|p| {
            let a = p.to_array();
            if a[D..].iter().any(|&v| v != 0) {
                return Err(Error::Internal("flattened point left its coordinate subspace".into()));
            }
            Ok(std::array::from_fn(|i| a[i]))
        })
        .collect()
}

/// Width of a full-dimensional polytope in Z^D given by its vertices in
/// lexicographic order, together with the witness linear form and the final
/// box radius.
pub(crate) fn box_width<const D: usize>(verts: &[[i64; D]]) -> Result<(i64, [i64; D], i64)> {
    let spread = |c: &[i64; D]| -> Result<i64> {
        let mut lo = i128::MAX;
        let mut hi = i128::MIN;
        for p in verts {
            let v: i128 = (0..D).map(|i| c[i] as i128 * p[i] as i128).sum();
            lo = lo.min(v);
            hi = hi.max(v);
        }
        arith::narrow(hi - lo)
    };
    let w0 = (0..D)
        .map(|i| {
            let mut e = [0i64; D];
            e[i] = 1;
            spread(&e)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .expect("D >= 1");
    let m = independent_differences::<D>(verts)?;
    let (det, adj) = det_adj::<D>(&m);
    if det == 0 {
        return Err(Error::Internal("difference vectors are dependent".into()));
    }
    for r in 1..=w0 {
        let mut best: Option<[i64; D]> = None;
        let mut y = [-r; D];
        loop {
            if let Some(c) = solve::<D>(&adj, det, &y)? {
                if c.iter().any(|&v| v != 0) && spread(&c)? <= r {
                    let c = sign_normalized(c);
                    if best.is_none_or(|b| c < b) {
                        best = Some(c);
                    }
                }
            }
            if !advance(&mut y, r) {
                break;
            }
        }
        if let Some(c) = best {
            let w = spread(&c)?;
            debug_assert_eq!(w, r);
            return Ok((w, c, r));
        }
    }
    Err(Error::Internal("no functional within the axis-spread box".into()))
}

fn sign_normalized<const D: usize>(c: [i64; D]) -> [i64; D] {
    match c.iter().find(|&&v| v != 0) {
        Some(&v) if v < 0 => c.map(|e| -e),
        _ => c,
    }
}

fn advance<const D: usize>(y: &mut [i64; D], r: i64) -> bool {
    for v in y.iter_mut().rev() {
        if *v < r {
            *v += 1;
            return true;
        }
        *v = -r;
    }
    false
}

fn solve<const D: usize>(adj: &[[i128; D]; D], det: i128, y: &[i64; D]) -> Result<Option<[i64; D]>> {
    let mut c = [0i64; D];
    for i in 0..D {
        let s: i128 = (0..D).map(|j| adj[i][j] * y[j] as i128).sum();
        if s % det != 0 {
            return Ok(None);
        }
        c[i] = arith::narrow(s / det)?;
    }
    Ok(Some(c))
}

fn independent_differences<const D: usize>(verts: &[[i64; D]]) -> Result<[[i64; D]; D]> {
    let o = verts[0];
    let mut rows: Vec<[i64; D]> = Vec::new();
    for v in &verts[1..] {
        let d: [i64; D] = std::array::from_fn(|i| v[i] - o[i]);
        let mut trial = rows.clone();
        trial.push(d);
        if rank_i128(&trial) == trial.len() {
            rows = trial;
            if rows.len() == D {
                break;
            }
        }
    }
    if rows.len() != D {
        return Err(Error::Dimension { expected: "full", found: rows.len() });
    }
    Ok(std::array::from_fn(|i| rows[i]))
}

/// Rank by fraction-free elimination.
pub(crate) fn rank_i128<const D: usize>(rows: &[[i64; D]]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut rank = 0;
    for col in 0..D {
        let Some(p) = (rank..m.len()).find(|&i| m[i][col] != 0) else { continue };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][col] != 0 {
                let (a, b) = (m[rank][col], m[i][col]);
                let g = gcd_i128(a, b);
                for j in 0..D {
                    m[i][j] = m[i][j] * (a / g) - m[rank][j] * (b / g);
                }
                let content = m[i].iter().fold(0, |acc, &v| gcd_i128(acc, v));
                if content > 1 {
                    m[i].iter_mut().for_each(|v| *v /= content);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn det_dyn(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det_dyn(&minor)
            })
            .sum(),
    }
}

/// Determinant and adjugate of the matrix whose rows are the difference
/// vectors, so that `c = adj · y / det` solves `M c = y`.
fn det_adj<const D: usize>(m: &[[i64; D]; D]) -> (i128, [[i128; D]; D]) {
    let full: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let det = det_dyn(&full);
    let mut adj = [[0i128; D]; D];
    for (i, row) in adj.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let minor: Vec<Vec<i128>> = full
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != j)
                .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, &v)| v).collect())
                .collect();
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            *e = s * det_dyn(&minor);
        }
    }
    (det, adj)
}

/// A width-one functional and the two lattice planes it splits the polytope
/// into (values 0 and 1), if the width is one.
pub fn width_one_split(
    cfg: &PointConfiguration,
) -> Result<Option<(IntegerFunctional, PointConfiguration, PointConfiguration)>> {
    if cfg.dim() == 0 {
        return Ok(None);
    }
    let w = lattice_width(cfg)?;
    if w.width != 1 {
        return Ok(None);
    }
    let all = lattice_points_in_hull(cfg)?;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for &p in all.points() {
        match w.witness.eval(p)? {
            0 => lower.push(p),
            _ => upper.push(p),
        }
    }
    Ok(Some((w.witness, PointConfiguration::new(lower)?, PointConfiguration::new(upper)?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(v: &[[i64; 3]]) -> PointConfiguration {
        PointConfiguration::from_arrays(v).unwrap()
    }

    fn unit() -> PointConfiguration {
        cfg(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    #[test]
    fn width_of_examples() {
        assert_eq!(width_of(&unit(), &IntegerFunctional::new(0, 0, 1, 0)), Ok(1));
        let sym = cfg(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [2, 5, 1], [-3, -5, -2]]);
        assert_eq!(width_of(&sym, &IntegerFunctional::new(1, 0, -1, 0)), Ok(2));
        let t25 = cfg(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [2, 5, 1]]);
        assert_eq!(width_of(&t25, &IntegerFunctional::new(0, 1, 0, 0)), Ok(5));
        assert_eq!(width_of(&t25, &IntegerFunctional::new(0, 0, 0, 3)), Err(Error::ConstantFunctional));
        let flat = cfg(&[[0, 0, 0], [1, 0, 0], [0, 1, 0]]);
        assert_eq!(width_of(&flat, &IntegerFunctional::new(0, 0, 1, 0)), Err(Error::ConstantFunctional));
    }

    #[test]
    fn lattice_width_examples() {
        let w2 = cfg(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [-1, -1, 0], [1, 2, 3]]);
        assert_eq!(lattice_width(&w2).unwrap().width, 2);
        let w1 = cfg(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [-1, -1, 0], [0, 0, 1]]);
        let r = lattice_width(&w1).unwrap();
        assert_eq!(r.width, 1);
        assert_eq!(r.witness, IntegerFunctional::new(0, 0, 1, 0));
        let t = cfg(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [3, 11, 1]]);
        assert_eq!(lattice_width(&t).unwrap().width, 1);
    }

    #[test]
    fn lower_dimensional_width() {
        let tri = cfg(&[[0, 0, 0], [2, 0, 0], [0, 2, 0]]);
        assert_eq!(lattice_width(&tri).unwrap().width, 2);
        let tilted = cfg(&[[0, 0, 0], [3, 0, 3], [0, 3, 3]]);
        let r = lattice_width(&tilted).unwrap();
        assert_eq!(r.width, 3);
        assert_eq!(width_of(&tilted, &r.witness), Ok(3));
        let seg = cfg(&[[1, 1, 1], [4, 7, 10]]);
        assert_eq!(lattice_width(&seg).unwrap().width, 3);
        assert!(lattice_width(&cfg(&[[1, 1, 1]])).is_err());
    }

    #[test]
    fn split_examples() {
        let (f, lo, hi) = width_one_split(&unit()).unwrap().unwrap();
        assert_eq!(f, IntegerFunctional::new(0, 0, 1, 0));
        assert_eq!((lo.len(), hi.len()), (3, 1));
        let fam = cfg(&[[0, 0, 0], [1, 0, 0], [0, 0, 1], [-1, 0, 0], [0, 1, 1]]);
        let (_, lo, hi) = width_one_split(&fam).unwrap().unwrap();
        assert_eq!((lo.len(), hi.len()), (3, 2));
        let w2 = cfg(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [-1, -1, 0], [1, 2, 3]]);
        assert!(width_one_split(&w2).unwrap().is_none());
    }

    #[test]
    fn functional_display_and_pullback() {
        assert_eq!(IntegerFunctional::new(1, 0, -1, 0).to_string(), "x - z");
        assert_eq!(IntegerFunctional::new(-2, 1, 0, 3).to_string(), "-2x + y + 3");
        let m = UnimodularAffineMap::new(crate::affine::Matrix3([[1, -1, 3], [0, -1, 5], [0, 0, 1]]), pt(1, 2, 3)).unwrap();
        let f = IntegerFunctional::new(2, -1, 4, 7);
        let g = f.pullback(&m).unwrap();
        for p in [pt(0, 0, 0), pt(1, -2, 5), pt(-3, 4, 1)] {
            assert_eq!(g.eval(p).unwrap(), f.eval(m.apply(p).unwrap()).unwrap());
        }
    }
}
