// Acceptance run: one PASS/FAIL line per criterion, with the failing
// sub-checks listed underneath.
//
// Some sub-checks are expected to fail; see KNOWN_FAILURES. The run exits
// nonzero unless exactly those fail, so any other regression breaks it.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use latpoly::affine::{apply_map, triangle_frame, UnimodularAffineMap};
use latpoly::arith::{gcd, mod_inverse};
use latpoly::classify::census::{enumerate_size5_width_ge2, structured_census, DEFAULT_Q_MAX};
use latpoly::classify::sweep::{box_sweep, SweepReport, MAX_SIDE};
use latpoly::classify::table::{representative, width_two_rows};
use latpoly::classify::{classify_size5, Family};
use latpoly::config::PointConfiguration;
use latpoly::empty_tetra::{
    fundamental_rectangle_check, is_empty_tetra_bruteforce, lemma_a_predicate, standard_tpq, verify_change_of_coordinates,
};
use latpoly::equivalence::z_equivalent;
use latpoly::hull::{hull_contains, interior_lattice_points, lattice_points_in_hull};
use latpoly::invariants::{five_point_vector, signature, volume_vector, FivePointVector, Signature};
use latpoly::minimality::{diamond_key, lemma_tetrahedron, minimality_report, projection_dichotomy_check, ProjectionReport, Verdict, SMALL_CASE_BOUND};
use latpoly::plane::polygon_key;
use latpoly::point::{pt, LatticePoint3, RationalPoint3};
use latpoly::volume::tetra_volume;
use latpoly::width::lattice_width;
use rand::Rng;

/// Sub-checks that fail because the criterion asks for something false.
/// At k = 1 the tetrahedron has width 1 and adding the apex makes it minimal.
const KNOWN_FAILURES: &[(u32, &str)] = &[
    (8, "k = 1 is minimal"),
    (8, "k = 1 with apex is quasi-minimal"),
    (9, "in_t1 iff 2 <= p <= q-2"),
];

struct Criterion {
    id: u32,
    title: &'static str,
    checks: Vec<(String, bool, String)>,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Self {
        Criterion { id, title, checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push((name.into(), ok, detail.into()));
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

fn census_and_sweep(sweep: &SweepReport) -> Criterion {
    let mut c = Criterion::new(1, "size-5 census: nine classes of width two, structured search = box sweep");
    let t = Instant::now();
    let records = enumerate_size5_width_ge2().unwrap();
    let max_w = records.iter().map(|r| r.width).max().unwrap_or(0);
    let mut hist: BTreeMap<Signature, usize> = BTreeMap::new();
    for r in &records {
        *hist.entry(r.signature).or_default() += 1;
    }
    let want: BTreeMap<Signature, usize> = [(Signature::new(4, 1), 8), (Signature::new(3, 1), 1)].into();
    c.check("nine classes", records.len() == 9, format!("{}", records.len()));
    c.check("max width 2", max_w == 2, format!("{max_w}"));
    c.check("signature histogram", hist == want, format!("{hist:?}"));
    let census = structured_census(DEFAULT_Q_MAX).unwrap();
    let structured: BTreeSet<_> = census.iter().map(|k| k.key.clone()).collect();
    c.check("structured keys = sweep keys", structured == sweep.wide_keys(), format!("{} vs {}", structured.len(), sweep.wide.len()));
    let late: Vec<_> = census.iter().filter(|k| k.first_q > 7).map(|k| k.vector).collect();
    c.check("nothing new beyond q = 7", late.is_empty(), format!("{late:?}"));
    c.check("sweep max width 2", sweep.max_width() == 2, format!("{:?}", sweep.width_histogram));
    let secs = t.elapsed().as_secs_f64();
    c.check("runtime under five minutes", secs < 300.0, format!("{secs:.1}s plus the sweep"));
    c
}

fn table_exactness() -> Criterion {
    let mut c = Criterion::new(2, "width-2 vectors verbatim, listed representatives classify to their own row");
    let listed: [[i64; 5]; 9] = [
        [-9, 3, 3, 3, 0],
        [-4, 1, 1, 1, 1],
        [-5, 1, 1, 1, 2],
        [-7, 1, 1, 2, 3],
        [-11, 1, 3, 2, 5],
        [-13, 3, 4, 1, 5],
        [-17, 3, 5, 2, 7],
        [-19, 5, 4, 3, 7],
        [-20, 5, 5, 5, 5],
    ];
    let records = enumerate_size5_width_ge2().unwrap();
    let got: Vec<[i64; 5]> = records.iter().map(|r| r.vector.entries()).collect();
    c.check("census vectors in table order", got == listed, format!("{got:?}"));
    for row in width_two_rows() {
        let v = five_point_vector(&row.representative).unwrap();
        c.check(format!("{} vector of listed points", row.family), v == row.vector, format!("{v}"));
        let r = classify_size5(&row.representative).unwrap().into_record().unwrap();
        c.check(format!("{} classifies to itself", row.family), r.family == row.family, r.family.to_string());
        c.check(format!("{} identity witness", row.family), r.witness == UnimodularAffineMap::IDENTITY, r.witness.to_string());
    }
    c
}

fn empty_tetra_width() -> Criterion {
    let mut c = Criterion::new(3, "empty tetrahedra in [-3,3]^3 and T(p,q), q <= 30, have width 1");
    // Translation classes of tetrahedra in a box of side 6 are those in
    // [0,6]^3 touching the three coordinate planes. Every facet of an empty
    // tetrahedron is unimodular, so the first three vertices give a frame
    // in which the congruence test decides emptiness.
    let side = 6;
    let grid: Vec<LatticePoint3> =
        (0..=side).flat_map(|x| (0..=side).flat_map(move |y| (0..=side).map(move |z| pt(x, y, z)))).collect();
    let n = grid.len();
    let (mut empty, mut wide, mut sampled, mut sample_bad) = (0u64, Vec::new(), 0u64, Vec::new());
    let mut brute_bad = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let u = grid[b].checked_sub(grid[a]).unwrap();
            if !u.is_primitive() {
                continue;
            }
            for cc in b + 1..n {
                let v = grid[cc].checked_sub(grid[a]).unwrap();
                let Some(f) = triangle_frame(grid[a], u, v).unwrap() else { continue };
                for d in cc + 1..n {
                    let y = f.apply(grid[d]).unwrap();
                    if y.z == 0 || !lemma_a_predicate(y.x, y.y, y.z.abs()) {
                        continue;
                    }
                    let t = [grid[a], grid[b], grid[cc], grid[d]];
                    if [0, 1, 2].iter().any(|&i| t.iter().map(|p| p.to_array()[i]).min() != Some(0)) {
                        continue;
                    }
                    empty += 1;
                    if !common::has_width_one(&t.map(|p| p.to_array())) {
                        wide.push(t);
                    }
                    if empty % 997 == 0 {
                        sampled += 1;
                        if !is_empty_tetra_bruteforce(&t).unwrap() {
                            brute_bad.push(t);
                        }
                        if lattice_width(&PointConfiguration::new(t.to_vec()).unwrap()).unwrap().width != 1 {
                            sample_bad.push(t);
                        }
                    }
                }
            }
        }
    }
    c.check("box tetrahedra have width 1", wide.is_empty() && empty > 0, format!("{empty} classes, {} wider", wide.len()));
    c.check("sampled emptiness by enumeration", brute_bad.is_empty(), format!("{sampled} sampled, bad {brute_bad:?}"));
    c.check("sampled lattice_width = 1", sample_bad.is_empty(), format!("bad {sample_bad:?}"));
    let mut bad = Vec::new();
    for q in 1..=30 {
        for p in (0..q.max(1)).filter(|&p| gcd(p, q) == 1) {
            let t = standard_tpq(p, q);
            let v: [LatticePoint3; 4] = t.points().try_into().unwrap();
            if !is_empty_tetra_bruteforce(&v).unwrap() || lattice_width(&t).unwrap().width != 1 {
                bad.push((p, q));
            }
        }
    }
    c.check("T(p,q) empty and width 1 for q <= 30", bad.is_empty(), format!("{bad:?}"));
    c
}

fn lemma_a() -> Criterion {
    let mut c = Criterion::new(4, "congruence test = enumeration for q <= 20");
    let mut bad = Vec::new();
    let mut count = 0;
    for q in 1..=20 {
        for a in 0..q {
            for b in 0..q {
                let t = [pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(a, b, q)];
                count += 1;
                if lemma_a_predicate(a, b, q) != is_empty_tetra_bruteforce(&t).unwrap() {
                    bad.push((a, b, q));
                }
            }
        }
    }
    c.check("all (a,b,q)", bad.is_empty(), format!("{count} cases, mismatches {bad:?}"));
    c
}

fn tpq_law() -> Criterion {
    let mut c = Criterion::new(5, "T(p,q) ~ T(p',q) iff p' = ±p^(±1) mod q, q <= 15");
    let mut bad = Vec::new();
    let mut pairs = 0;
    for q in 1..=15i64 {
        let ps: Vec<i64> = (0..q.max(1)).filter(|&p| gcd(p, q) == 1).collect();
        for &p in &ps {
            let inv = mod_inverse(p, q).unwrap_or(0);
            let orbit: BTreeSet<i64> = [p, -p, inv, -inv].iter().map(|x| x.rem_euclid(q)).collect();
            for &p2 in &ps {
                pairs += 1;
                let eq = z_equivalent(&standard_tpq(p, q), &standard_tpq(p2, q)).unwrap().is_some();
                if eq != orbit.contains(&p2.rem_euclid(q)) {
                    bad.push((p, p2, q));
                }
            }
        }
    }
    c.check("law on all pairs", bad.is_empty(), format!("{pairs} pairs, mismatches {bad:?}"));
    c
}

fn gate(sweep: &SweepReport) -> Criterion {
    let mut c = Criterion::new(6, "box sweep: width-1 signatures, structure form with h in {-1,-2}");
    c.check("(3,2),(2,2),(2,1) all width 1", sweep.gate_violations.is_empty(), format!("{} violations", sweep.gate_violations.len()));
    c.check("(3,1) vectors (-3q,q,q,q,0), q in {1,3}", sweep.law_violations.is_empty(), format!("{} violations", sweep.law_violations.len()));
    let allowed = [Signature::new(3, 1), Signature::new(4, 1)];
    for w in &sweep.wide {
        let s = w.vector.signature();
        c.check(format!("{} signature", w.vector), allowed.contains(&s), format!("{s:?}"));
        c.check(format!("{} structure form", w.vector), w.structure_failures == 0, format!("{} failures", w.structure_failures));
        let ok_h = !w.h_values.is_empty() && w.h_values.iter().all(|h| [-1, -2].contains(h));
        c.check(format!("{} h values", w.vector), ok_h, format!("{:?}", w.h_values));
        let sym = w.vector.is_symmetric();
        let want: BTreeSet<i64> = [if sym { -2 } else { -1 }].into();
        c.check(format!("{} h = -2 iff symmetric", w.vector), w.h_values == want, format!("symmetric {sym}, h {:?}", w.h_values));
    }
    c.check("sweep reached side 4", sweep.side == MAX_SIDE, format!("{}", sweep.side));
    c
}

fn irredundancy() -> Criterion {
    let mut c = Criterion::new(7, "width-1 families (2,1) and (3,2) are irredundant");
    let mut w21 = Vec::new();
    for q in 1..=10 {
        for p in (0..=q / 2).filter(|&p| gcd(p, q) == 1) {
            w21.push(Family::W1_21 { p, q });
        }
    }
    let reps: Vec<PointConfiguration> = w21.iter().map(representative).collect();
    let mut clash = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if z_equivalent(&reps[i], &reps[j]).unwrap().is_some() {
                clash.push((w21[i], w21[j]));
            }
        }
    }
    c.check("(2,1) members pairwise inequivalent", clash.is_empty(), format!("{} members, clashes {clash:?}", w21.len()));
    let fams: BTreeSet<String> =
        reps.iter().map(|r| classify_size5(r).unwrap().into_record().unwrap().family.to_string()).collect();
    c.check("(2,1) records distinct", fams.len() == w21.len(), format!("{}", fams.len()));

    let mut w32 = Vec::new();
    for s in 2..=10 {
        for a in 1..=s / 2 {
            let b = s - a;
            if gcd(a, b) == 1 {
                w32.push(Family::W1_32 { a, b });
            }
        }
    }
    let vecs: Vec<FivePointVector> = w32.iter().map(|f| five_point_vector(&representative(f)).unwrap()).collect();
    let primitive = vecs.iter().all(|v| v.content() == 1);
    let sorted: BTreeSet<[i64; 5]> = vecs.iter().map(|v| v.sorted()).collect();
    c.check("(3,2) vectors primitive", primitive, format!("{vecs:?}"));
    c.check("(3,2) sorted vectors distinct", sorted.len() == w32.len(), format!("{} of {}", sorted.len(), w32.len()));
    let reps: Vec<PointConfiguration> = w32.iter().map(representative).collect();
    let mut clash = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if z_equivalent(&reps[i], &reps[j]).unwrap().is_some() {
                clash.push((w32[i], w32[j]));
            }
        }
    }
    c.check("(3,2) members pairwise inequivalent", clash.is_empty(), format!("{} members, clashes {clash:?}", w32.len()));
    c
}

fn minimality_suite() -> Criterion {
    let mut c = Criterion::new(8, "minimality: the infinite family, its apex extension, the nine classes");
    let diamond = diamond_key().unwrap();
    for k in 1..=10 {
        let p = lemma_tetrahedron(k, false).unwrap();
        let v: [LatticePoint3; 4] = p.points().try_into().unwrap();
        let interior = interior_lattice_points(&p).unwrap().len() as i64;
        let vol = tetra_volume(v[0], v[1], v[2], v[3]).unwrap();
        c.check(format!("k = {k} has k-1 interior points"), interior == k - 1, format!("{interior}"));
        c.check(format!("k = {k} has volume 4k"), vol == 4 * k, format!("{vol}"));
        let r = minimality_report(&p).unwrap();
        c.check(format!("k = {k} is minimal"), r.verdict == Verdict::Minimal, format!("{} (width {})", r.verdict, r.width));
        let q = lemma_tetrahedron(k, true).unwrap();
        let rq = minimality_report(&q).unwrap();
        c.check(format!("k = {k} with apex is quasi-minimal"), rq.verdict == Verdict::QuasiMinimal, format!("{}", rq.verdict));
        for (name, poly, rep) in [("", &p, &r), (" with apex", &q, &rq)] {
            if !matches!(rep.verdict, Verdict::Minimal | Verdict::QuasiMinimal) {
                continue;
            }
            let ok = match projection_dichotomy_check(poly).unwrap() {
                ProjectionReport::SmallCase { size } => size <= SMALL_CASE_BOUND,
                ProjectionReport::Spanning { .. } => false,
                ProjectionReport::Projected(pr) => {
                    pr.unique_lifts
                        && pr.verdict.is_some()
                        && (rep.verdict != Verdict::Minimal || polygon_key(&pr.polygon).unwrap() == diamond)
                }
            };
            c.check(format!("k = {k}{name} small or projects"), ok, format!("size {}", rep.size));
        }
    }
    for r in enumerate_size5_width_ge2().unwrap() {
        let m = minimality_report(&r.representative).unwrap();
        c.check(format!("{} minimal", r.family), m.verdict == Verdict::Minimal, m.verdict.to_string());
    }
    c
}

fn lambda_pq() -> Criterion {
    let mut c = Criterion::new(9, "change of lattice and the fundamental rectangle");
    let mut bad = Vec::new();
    for q in 1..=20 {
        for p in (1..=q).filter(|&p| gcd(p, q) == 1) {
            if !verify_change_of_coordinates(p, q).unwrap() {
                bad.push((p, q));
            }
        }
    }
    c.check("change of coordinates, q <= 20", bad.is_empty(), format!("{bad:?}"));
    let (mut not_t2, mut literal, mut observed) = (Vec::new(), Vec::new(), Vec::new());
    for q in 2..=50 {
        for p in (1..q).filter(|&p| gcd(p, q) == 1) {
            let (in_t2, in_t1) = fundamental_rectangle_check(p, q).unwrap();
            if !in_t2 {
                not_t2.push((p, q));
            }
            if in_t1 != (2..=q - 2).contains(&p) {
                literal.push((p, q));
            }
            if in_t1 != (p != 1) {
                observed.push((p, q));
            }
        }
    }
    c.check("in_t2 always", not_t2.is_empty(), format!("{not_t2:?}"));
    let shown: Vec<_> = literal.iter().take(6).collect();
    c.check("in_t1 iff 2 <= p <= q-2", literal.is_empty(), format!("{} exceptions, first {shown:?}", literal.len()));
    c.check("in_t1 iff p != 1", observed.is_empty(), format!("{observed:?}"));
    c
}

fn properties() -> Criterion {
    let mut c = Criterion::new(10, "property suites: invariance, width oracle, hull membership");
    let mut r = common::rng(0x5eed);
    let (mut pairs, mut bad) = (0, Vec::new());
    while pairs < 10_000 {
        let n = r.gen_range(4..=6);
        let p = common::random_points(&mut r, n, -3, 3);
        if p.dim() != 3 {
            continue;
        }
        let m = common::random_unimodular(&mut r, 6, 20);
        let q = apply_map(&m, &p).unwrap();
        pairs += 1;
        let wp = lattice_width(&p).unwrap().width;
        let wq = lattice_width(&q).unwrap().width;
        let vp = volume_vector(&p).unwrap().entries;
        let vq: Vec<i64> = volume_vector(&q).unwrap().entries.iter().map(|x| x * m.det()).collect();
        let sig = n != 5 || signature(&p).unwrap() == signature(&q).unwrap();
        let fpv = n != 5 || five_point_vector(&p).unwrap() == five_point_vector(&q).unwrap();
        let size = lattice_points_in_hull(&p).unwrap().len() == lattice_points_in_hull(&q).unwrap().len();
        if wp != wq || vp != vq || !sig || !fpv || !size {
            bad.push(p.to_arrays());
        }
    }
    c.check("invariance on 10^4 pairs", bad.is_empty(), format!("{pairs} pairs, {} bad", bad.len()));
    let (mut cases, mut bad) = (0, Vec::new());
    while cases < 1000 {
        let n = r.gen_range(4..=6);
        let p = common::random_points(&mut r, n, -2, 2);
        if p.dim() != 3 {
            continue;
        }
        cases += 1;
        let w = lattice_width(&p).unwrap().width;
        if w != common::width_oracle(&p, 10) {
            bad.push(p.to_arrays());
        }
    }
    c.check("width = oracle on 10^3 configurations", bad.is_empty(), format!("{cases} cases, bad {bad:?}"));
    let (mut cases, mut bad) = (0, Vec::new());
    while cases < 2000 {
        let t = common::random_points(&mut r, 4, -5, 5);
        if t.dim() != 3 {
            continue;
        }
        cases += 1;
        let d = r.gen_range(1..=7);
        let x = [r.gen_range(-5 * d..=5 * d), r.gen_range(-5 * d..=5 * d), r.gen_range(-5 * d..=5 * d)];
        let tv: [[i64; 3]; 4] = t.to_arrays().try_into().unwrap();
        let rp = RationalPoint3::from_scaled(x[0], x[1], x[2], d).unwrap();
        if hull_contains(&t, &rp).unwrap() != common::barycentric_inside(tv, x, d) {
            bad.push((tv, x, d));
        }
    }
    c.check("hull membership = barycentric", bad.is_empty(), format!("{cases} cases, bad {bad:?}"));
    c
}

fn main() {
    let t = Instant::now();
    let sweep = box_sweep(MAX_SIDE).unwrap();
    eprintln!("box sweep: {} configurations in {:.1}s", sweep.configurations, t.elapsed().as_secs_f64());
    let criteria = vec![
        census_and_sweep(&sweep),
        table_exactness(),
        empty_tetra_width(),
        lemma_a(),
        tpq_law(),
        gate(&sweep),
        irredundancy(),
        minimality_suite(),
        lambda_pq(),
        properties(),
    ];
    let mut unexpected = Vec::new();
    for c in &criteria {
        println!("criterion {:>2}: {}  {}", c.id, if c.passed() { "PASS" } else { "FAIL" }, c.title);
        for (name, ok, detail) in &c.checks {
            let known = KNOWN_FAILURES.contains(&(c.id, name.as_str()));
            if !ok {
                println!("    failed: {name}: {detail}{}", if known { "  (known)" } else { "" });
            }
            if *ok == known {
                unexpected.push(format!("{}: {name} ({})", c.id, if *ok { "passed, expected to fail" } else { "failed" }));
            }
        }
    }
    for (id, name) in KNOWN_FAILURES {
        let present = criteria.iter().any(|c| c.id == *id && c.checks.iter().any(|(n, _, _)| n == name));
        if !present {
            unexpected.push(format!("{id}: {name} was not run"));
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcomes:\n{}", unexpected.join("\n"));
        std::process::exit(1);
    }
    println!("acceptance: only the known failures");
}
