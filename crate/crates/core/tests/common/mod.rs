// Shared helpers for the integration tests: random unimodular maps and
// brute-force oracles that do not go through the library's algorithms.
#![allow(dead_code)]

use latpoly::affine::{Matrix3, UnimodularAffineMap};
use latpoly::config::PointConfiguration;
use latpoly::point::{pt, LatticePoint3};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn mul(a: [[i64; 3]; 3], b: [[i64; 3]; 3]) -> [[i64; 3]; 3] {
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

/// Product of a few elementary matrices (shears, swaps, sign flips) and a
/// translation.
pub fn random_unimodular(r: &mut impl Rng, steps: usize, shift: i64) -> UnimodularAffineMap {
    let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for _ in 0..steps {
        let mut e = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        let i = r.gen_range(0..3);
        let j = (i + r.gen_range(1..3)) % 3;
        match r.gen_range(0..3) {
            0 => e[i][j] = [-2, -1, 1, 2][r.gen_range(0..4)],
            1 => e.swap(i, j),
            _ => e[i][i] = -1,
        }
        m = mul(e, m);
    }
    let t = pt(r.gen_range(-shift..=shift), r.gen_range(-shift..=shift), r.gen_range(-shift..=shift));
    UnimodularAffineMap::new(Matrix3(m), t).expect("product of elementary matrices")
}

/// Points with coordinates in `[lo, hi]`.
pub fn random_points(r: &mut impl Rng, n: usize, lo: i64, hi: i64) -> PointConfiguration {
    loop {
        let pts: Vec<LatticePoint3> =
            (0..n).map(|_| pt(r.gen_range(lo..=hi), r.gen_range(lo..=hi), r.gen_range(lo..=hi))).collect();
        if let Ok(c) = PointConfiguration::new(pts) {
            return c;
        }
    }
}

/// Width by scanning every linear form with coefficients in `[-bound, bound]`.
pub fn width_oracle(cfg: &PointConfiguration, bound: i64) -> i64 {
    let mut best = i64::MAX;
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                if (a, b, c) == (0, 0, 0) {
                    continue;
                }
                let vals = cfg.points().iter().map(|p| a * p.x + b * p.y + c * p.z);
                let (lo, hi) = vals.fold((i64::MAX, i64::MIN), |(l, h), v| (l.min(v), h.max(v)));
                best = best.min(hi - lo);
            }
        }
    }
    best
}

fn det3(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i128 {
    let (a, b, c) = (a.map(|x| x as i128), b.map(|x| x as i128), c.map(|x| x as i128));
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// Whether `x / d` lies in the tetrahedron, by the signs of its barycentric
/// coordinates (Cramer's rule, everything scaled by `d`).
pub fn barycentric_inside(t: [[i64; 3]; 4], x: [i64; 3], d: i64) -> bool {
    let e = |i: usize| [t[i][0] - t[0][0], t[i][1] - t[0][1], t[i][2] - t[0][2]];
    let y = [x[0] - t[0][0] * d, x[1] - t[0][1] * d, x[2] - t[0][2] * d];
    let den = det3(e(1), e(2), e(3));
    assert!(den != 0, "degenerate tetrahedron");
    let l1 = det3(y, e(2), e(3));
    let l2 = det3(e(1), y, e(3));
    let l3 = det3(e(1), e(2), y);
    let s = den.signum();
    let (l1, l2, l3, tot) = (l1 * s, l2 * s, l3 * s, den.abs() * d as i128);
    l1 >= 0 && l2 >= 0 && l3 >= 0 && l1 + l2 + l3 <= tot
}

/// Whether some pair of adjacent lattice planes holds all the points, tried
/// over every split of the points into two nonempty groups.
pub fn has_width_one(p: &[[i64; 3]]) -> bool {
    let n = p.len();
    let sub = |a: [i64; 3], b: [i64; 3]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    let cross = |a: [i64; 3], b: [i64; 3]| [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
    let dot = |a: [i64; 3], b: [i64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    for mask in 1u32..(1 << (n - 1)) {
        let s: Vec<[i64; 3]> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| p[i]).collect();
        let t: Vec<[i64; 3]> = (0..n).filter(|&i| mask >> i & 1 == 0).map(|i| p[i]).collect();
        let diffs: Vec<[i64; 3]> =
            s.iter().map(|&x| sub(x, s[0])).chain(t.iter().map(|&x| sub(x, t[0]))).filter(|d| *d != [0, 0, 0]).collect();
        let Some(nrm) = diffs
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| diffs[i + 1..].iter().map(move |&b| cross(a, b)))
            .find(|c| *c != [0, 0, 0])
        else {
            continue;
        };
        let g = latpoly::arith::gcd3(nrm[0], nrm[1], nrm[2]);
        let nrm = nrm.map(|x| x / g);
        if diffs.iter().all(|&d| dot(d, nrm) == 0) && dot(sub(t[0], s[0]), nrm).abs() == 1 {
            return true;
        }
    }
    false
}
