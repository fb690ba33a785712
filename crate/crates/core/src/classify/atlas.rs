//! JSON atlas of the classification: the infinite width-one families as
//! symbolic stanzas and the width-two classes as computed by the census.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::Signature;

use super::census::enumerate_size5_width_ge2;
use super::{table, Family};

/// A coordinate or vector entry: a number, or a symbol for parametric rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Sym(&'static str),
}

impl From<i64> for Entry {
    fn from(v: i64) -> Self {
        Entry::Int(v)
    }
}

impl From<&'static str> for Entry {
    fn from(v: &'static str) -> Self {
        Entry::Sym(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasRecord {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<Signature>,
    pub width: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume: Option<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume_vector: Option<Vec<Entry>>,
    pub representative: Vec<[Entry; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameters: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Atlas {
    pub generator: String,
    pub size: usize,
    pub max_width: i64,
    pub records: Vec<AtlasRecord>,
}

fn ints(v: &[i64]) -> Vec<Entry> {
    v.iter().map(|&x| Entry::Int(x)).collect()
}

fn point(x: impl Into<Entry>, y: impl Into<Entry>, z: impl Into<Entry>) -> [Entry; 3] {
    [x.into(), y.into(), z.into()]
}

fn fixed_record(family: &Family) -> AtlasRecord {
    let row = table::row(family);
    AtlasRecord {
        family: family.tag().to_string(),
        signature: Some(row.signature),
        width: row.width,
        volume: None,
        volume_vector: Some(ints(&row.vector.entries())),
        representative: row.representative.points().iter().map(|p| point(p.x, p.y, p.z)).collect(),
        parameters: None,
    }
}

fn width_one_stanzas() -> Vec<AtlasRecord> {
    let w21 = AtlasRecord {
        family: "W1-(2,1)".into(),
        signature: Some(Signature::new(2, 1)),
        width: 1,
        volume: None,
        volume_vector: Some(vec!["-2q".into(), "q".into(), 0.into(), "q".into(), 0.into()]),
        representative: vec![point(0, 0, 0), point(1, 0, 0), point(0, 0, 1), point(-1, 0, 0), point("p", "q", 1)],
        parameters: Some("0 <= p <= q/2, gcd(p,q) = 1"),
    };
    let w32 = AtlasRecord {
        family: "W1-(3,2)".into(),
        signature: Some(Signature::new(3, 2)),
        width: 1,
        volume: None,
        volume_vector: Some(vec!["-a-b".into(), "a".into(), "b".into(), 1.into(), (-1).into()]),
        representative: vec![point(0, 0, 0), point(1, 0, 0), point(0, 1, 0), point(0, 0, 1), point("a", "b", 1)],
        parameters: Some("0 < a <= b, gcd(a,b) = 1"),
    };
    vec![fixed_record(&Family::W1_22), w21, w32, fixed_record(&Family::W1_31)]
}

fn tetrahedron_stanza() -> AtlasRecord {
    AtlasRecord {
        family: "T(p,q)".into(),
        signature: None,
        width: 1,
        volume: Some("q".into()),
        volume_vector: None,
        representative: vec![point(0, 0, 0), point(1, 0, 0), point(0, 0, 1), point("p", "q", 1)],
        parameters: Some("q >= 1, 0 <= p < q, gcd(p,q) = 1; T(p,q) ~ T(p',q) iff p' = +-p^(+-1) mod q"),
    }
}

/// The atlas for polytopes with `size` lattice points, `size ∈ {4, 5}`.
pub fn build_atlas(size: usize) -> Result<Atlas> {
    let generator = format!("latpoly {}", env!("CARGO_PKG_VERSION"));
    match size {
        4 => Ok(Atlas { generator, size, max_width: 1, records: vec![tetrahedron_stanza()] }),
        5 => {
            let mut records = width_one_stanzas();
            let wide = enumerate_size5_width_ge2()?;
            let max_width = wide.iter().map(|r| r.width).max().unwrap_or(1);
            for r in wide {
                records.push(AtlasRecord {
                    family: r.family.tag().to_string(),
                    signature: Some(r.signature),
                    width: r.width,
                    volume: None,
                    volume_vector: Some(ints(&r.vector.entries())),
                    representative: r.representative.points().iter().map(|p| point(p.x, p.y, p.z)).collect(),
                    parameters: None,
                });
            }
            Ok(Atlas { generator, size, max_width, records })
        }
        _ => Err(Error::InvalidParameters(format!("no atlas for size {size}; sizes 4 and 5 are available"))),
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn atlas_json(atlas: &Atlas) -> String {
    let mut s = serde_json::to_string_pretty(atlas).expect("atlas serializes");
    s.push('\n');
    s
}
