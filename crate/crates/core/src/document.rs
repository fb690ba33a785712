//! Point lists on disk.
//!
//! Text: one `x y z` per line, `#` starts a comment, and a comment of the
//! form `# label: ...` names the document. JSON: `{"points": [[x,y,z], ...],
//! "label": "..."}` or a bare array of triples.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::PointConfiguration;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("json: {0}")]
    Json(String),
    #[error("no points")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDocument {
    pub points: Vec<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl PolytopeDocument {
    pub fn new(points: Vec<[i64; 3]>) -> Self {
        PolytopeDocument { points, label: None }
    }

    pub fn from_configuration(cfg: &PointConfiguration) -> Self {
        Self::new(cfg.to_arrays())
    }

    pub fn configuration(&self) -> crate::error::Result<PointConfiguration> {
        PointConfiguration::from_arrays(&self.points)
    }

    /// JSON if the first non-blank character opens an object or array.
    pub fn detect(input: &str) -> Format {
        match input.trim_start().chars().next() {
            Some('{') | Some('[') => Format::Json,
            _ => Format::Text,
        }
    }

    pub fn parse(input: &str) -> Result<Self, ParseError> {
        match Self::detect(input) {
            Format::Json => Self::parse_json(input),
            Format::Text => Self::parse_text(input),
        }
    }

    pub fn parse_text(input: &str) -> Result<Self, ParseError> {
        let mut doc = PolytopeDocument::new(Vec::new());
        for (i, raw) in input.lines().enumerate() {
            let (body, comment) = match raw.find('#') {
                Some(k) => (&raw[..k], Some(&raw[k + 1..])),
                None => (raw, None),
            };
            if let Some(label) = comment.and_then(|c| c.trim().strip_prefix("label:")) {
                if doc.label.is_none() {
                    doc.label = Some(label.trim().to_string());
                }
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            if fields.len() != 3 {
                return Err(ParseError::Line { line: i + 1, msg: format!("expected 3 integers, found {}", fields.len()) });
            }
            let mut p = [0i64; 3];
            for (slot, f) in p.iter_mut().zip(&fields) {
                *slot = f.parse().map_err(|_| ParseError::Line { line: i + 1, msg: format!("not an integer: {f:?}") })?;
            }
            doc.points.push(p);
        }
        if doc.points.is_empty() {
            return Err(ParseError::Empty);
        }
        Ok(doc)
    }

    pub fn parse_json(input: &str) -> Result<Self, ParseError> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Shape {
            Doc(PolytopeDocument),
            Bare(Vec<[i64; 3]>),
        }
        let doc = match serde_json::from_str::<Shape>(input).map_err(|e| ParseError::Json(e.to_string()))? {
            Shape::Doc(d) => d,
            Shape::Bare(points) => PolytopeDocument::new(points),
        };
        if doc.points.is_empty() {
            return Err(ParseError::Empty);
        }
        Ok(doc)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => self.render_json(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        if let Some(l) = &self.label {
            s.push_str(&format!("# label: {l}\n"));
        }
        for p in &self.points {
            s.push_str(&format!("{} {} {}\n", p[0], p[1], p[2]));
        }
        s
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }
}
