//! The commands behind the `latpoly` binary. Each returns the text to print
//! and the exit status, so they can be driven without a process.

use serde::Serialize;
use serde_json::json;

use crate::classify::atlas::{atlas_json, build_atlas};
use crate::classify::{classify_size5, Classification};
use crate::document::{ParseError, PolytopeDocument};
use crate::empty_tetra::classify_empty;
use crate::equivalence::z_equivalent;
use crate::error::Error;
use crate::hull::lattice_points_in_hull;
use crate::invariants::{five_point_vector, is_dps, volume_vector, MAX_VOLUME_VECTOR_POINTS};
use crate::minimality::{minimality_report, projection_dichotomy_check, minimal_polygons, Verdict};
use crate::plane::enumerate_polygons;
use crate::point::LatticePoint3;
use crate::width::lattice_width;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Domain(#[from] Error),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }
}

type CmdResult = Result<Outcome, CliError>;

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn lines(v: &[String]) -> String {
    let mut s = v.join("\n");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct InvariantsReport {
    label: Option<String>,
    points: usize,
    size: usize,
    dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    volume_vector: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    five_point_vector: Option<[i64; 5]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    signature: Option<[usize; 2]>,
    width: i64,
    witness: String,
    dps: bool,
}

pub fn cmd_invariants(doc: &PolytopeDocument, json: bool) -> CmdResult {
    let cfg = doc.configuration()?;
    let all = lattice_points_in_hull(&cfg)?;
    let w = lattice_width(&cfg)?;
    let full = cfg.dim() == 3;
    let vv = (full && cfg.len() <= MAX_VOLUME_VECTOR_POINTS).then(|| volume_vector(&cfg)).transpose()?;
    let fpv = (full && cfg.len() == 5).then(|| five_point_vector(&cfg)).transpose()?;
    let r = InvariantsReport {
        label: doc.label.clone(),
        points: cfg.len(),
        size: all.len(),
        dimension: cfg.dim(),
        volume_vector: vv.map(|v| v.entries),
        five_point_vector: fpv.map(|v| v.entries()),
        signature: fpv.map(|v| {
            let s = v.signature();
            [s.pos, s.neg]
        }),
        width: w.width,
        witness: w.witness.to_string(),
        dps: is_dps(&cfg)?,
    };
    if json {
        return Ok(Outcome::ok(to_json(&r)));
    }
    let mut out = Vec::new();
    if let Some(l) = &r.label {
        out.push(format!("label {l}"));
    }
    out.push(format!("size {}", r.size));
    out.push(format!("dimension {}", r.dimension));
    if let Some(v) = &r.volume_vector {
        out.push(format!("volumes {v:?}"));
    }
    if let (Some(v), Some(s)) = (fpv, r.signature) {
        out.push(format!("vector {v}"));
        out.push(format!("signature ({},{})", s[0], s[1]));
    }
    out.push(format!("width {} via {}", r.width, r.witness));
    out.push(format!("dps {}", r.dps));
    Ok(Outcome::ok(lines(&out)))
}

pub fn cmd_classify(doc: &PolytopeDocument, json: bool) -> CmdResult {
    let cfg = doc.configuration()?;
    match classify_size5(&cfg)? {
        Classification::Unsized5 { size } => {
            let s = if json { to_json(&json!({ "unsized": size })) } else { format!("unsized: {size} lattice points\n") };
            Ok(Outcome::ok(s))
        }
        Classification::Size5(r) => {
            if json {
                return Ok(Outcome::ok(to_json(&r)));
            }
            Ok(Outcome::ok(lines(&[
                format!("family {}", r.family),
                format!("signature ({},{})", r.signature.pos, r.signature.neg),
                format!("width {}", r.width),
                format!("vector {}", r.vector),
                format!("representative {}", points_text(r.representative.points())),
                format!("witness {}", r.witness),
            ])))
        }
    }
}

fn points_text(pts: &[LatticePoint3]) -> String {
    pts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn cmd_equiv(a: &PolytopeDocument, b: &PolytopeDocument, json: bool) -> CmdResult {
    let m = z_equivalent(&a.configuration()?, &b.configuration()?)?;
    let code = if m.is_some() { EXIT_OK } else { EXIT_NEGATIVE };
    let stdout = if json {
        to_json(&json!({ "equivalent": m.is_some(), "map": m }))
    } else {
        match m {
            Some(m) => format!("equivalent\nmap {m}\n"),
            None => "not equivalent\n".to_string(),
        }
    };
    Ok(Outcome { stdout, code })
}

pub fn cmd_empty_tetra(doc: &PolytopeDocument, json: bool) -> CmdResult {
    let cfg = doc.configuration()?;
    let v: [LatticePoint3; 4] = cfg
        .points()
        .try_into()
        .map_err(|_| Error::Size { expected: "4", found: cfg.len() })?;
    match classify_empty(&v) {
        Ok((class, m)) => {
            let stdout = if json {
                to_json(&json!({ "empty": true, "p": class.p(), "q": class.q(), "map": m }))
            } else {
                format!("empty {class}\nmap {m}\n")
            };
            Ok(Outcome::ok(stdout))
        }
        Err(Error::NotEmpty) => {
            let stdout = if json { to_json(&json!({ "empty": false })) } else { "not empty\n".to_string() };
            Ok(Outcome { stdout, code: EXIT_NEGATIVE })
        }
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_width(doc: &PolytopeDocument, json: bool) -> CmdResult {
    let w = lattice_width(&doc.configuration()?)?;
    let stdout = if json { to_json(&w) } else { format!("width {}\nfunctional {}\n", w.width, w.witness) };
    Ok(Outcome::ok(stdout))
}

pub fn cmd_atlas(size: usize, widths_only: bool) -> CmdResult {
    let atlas = build_atlas(size)?;
    if widths_only {
        return Ok(Outcome::ok(format!("max width {}\n", atlas.max_width)));
    }
    Ok(Outcome::ok(atlas_json(&atlas)))
}

pub fn cmd_minimality(doc: &PolytopeDocument, json: bool) -> CmdResult {
    let cfg = doc.configuration()?;
    let r = minimality_report(&cfg)?;
    let projection = (cfg.dim() == 3 && matches!(r.verdict, Verdict::Minimal | Verdict::QuasiMinimal))
        .then(|| projection_dichotomy_check(&cfg))
        .transpose()?;
    if json {
        return Ok(Outcome::ok(to_json(&json!({ "report": r, "projection": projection }))));
    }
    let mut out = vec![format!("verdict {}", r.verdict), format!("size {}", r.size), format!("width {}", r.width)];
    for d in &r.deleted {
        let what = match d.width {
            Some(w) => format!("width {w}"),
            None => format!("dimension {}", d.dimension),
        };
        out.push(format!("delete {} -> {}{}", d.vertex, what, if d.in_vert_star { " *" } else { "" }));
    }
    if let Some(p) = projection {
        out.push(format!("projection {}", serde_json::to_string(&p).expect("serializable")));
    }
    Ok(Outcome::ok(lines(&out)))
}

pub fn cmd_polygons(max_size: usize, minimal_only: bool, json: bool) -> CmdResult {
    if !(3..=8).contains(&max_size) {
        return Err(Error::InvalidParameters(format!("max size must be in 3..=8, got {max_size}")).into());
    }
    if minimal_only {
        let list = minimal_polygons(max_size)?;
        if json {
            let v: Vec<_> = list.iter().map(|(c, v)| json!({ "class": c, "verdict": v })).collect();
            return Ok(Outcome::ok(to_json(&v)));
        }
        let out: Vec<String> =
            list.iter().map(|(c, v)| format!("{v} size {} width {} {:?}", c.size, c.width, c.points)).collect();
        return Ok(Outcome::ok(lines(&out)));
    }
    let classes = enumerate_polygons(max_size)?;
    if json {
        return Ok(Outcome::ok(to_json(&classes)));
    }
    let mut out = Vec::new();
    for n in 3..=max_size {
        out.push(format!("size {n}: {} classes", classes.iter().filter(|c| c.size == n).count()));
    }
    for c in &classes {
        out.push(format!("{} {:?}", c.size, c.points));
    }
    Ok(Outcome::ok(lines(&out)))
}
