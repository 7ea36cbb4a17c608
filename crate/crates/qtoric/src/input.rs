//! JSON input files: `{name, m, vertices, facets, lambda, base_facet?}`.

use std::fs;
use std::path::Path;

use qtoric_core::quasitoric::QuasitoricData;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed input: {0}")]
    Shape(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputFile {
    pub name: String,
    pub m: usize,
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<usize>>,
    pub lambda: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_facet: Option<usize>,
}

impl InputFile {
    /// Structural checks that make the file unusable as data at all.
    /// Everything geometric is left to validation.
    fn check_shape(&self) -> Result<(), ParseError> {
        let n = self.vertices.len();
        if self.lambda.len() != n {
            return Err(ParseError::Shape(format!("lambda has {} rows for {n} vertices", self.lambda.len())));
        }
        if let Some((i, row)) = self.lambda.iter().enumerate().find(|(_, r)| r.len() != self.m) {
            return Err(ParseError::Shape(format!("lambda row {i} has length {}, expected m = {}", row.len(), self.m)));
        }
        for (i, f) in self.facets.iter().enumerate() {
            if let Some(v) = f.iter().find(|&&v| v >= n) {
                return Err(ParseError::Shape(format!("facet {i} names vertex {v}; only {n} vertices")));
            }
        }
        if let Some(b) = self.base_facet.filter(|&b| b >= self.facets.len()) {
            return Err(ParseError::Shape(format!("base_facet {b} out of range; {} facets", self.facets.len())));
        }
        Ok(())
    }
}

impl From<InputFile> for QuasitoricData {
    fn from(f: InputFile) -> Self {
        QuasitoricData {
            name: f.name,
            m: f.m,
            vertices: f.vertices,
            facets: f.facets,
            lambda: f.lambda,
            base_facet: f.base_facet,
        }
    }
}

impl From<&QuasitoricData> for InputFile {
    fn from(d: &QuasitoricData) -> Self {
        InputFile {
            name: d.name.clone(),
            m: d.m,
            vertices: d.vertices.clone(),
            facets: d.facets.clone(),
            lambda: d.lambda.clone(),
            base_facet: d.base_facet,
        }
    }
}

pub fn parse_input(text: &str) -> Result<QuasitoricData, ParseError> {
    let file: InputFile = serde_json::from_str(text)?;
    file.check_shape()?;
    Ok(file.into())
}

pub fn read_input(path: &Path) -> Result<QuasitoricData, ParseError> {
    let text =
        fs::read_to_string(path).map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
    parse_input(&text)
}

/// Canonical serialization: fixed key order, one facet or lambda row per line.
pub fn to_json(d: &QuasitoricData) -> String {
    let f = InputFile::from(d);
    let row = |xs: String| format!("    [{xs}]");
    let join = |rows: Vec<String>| rows.join(",\n");
    let mut out = String::from("{\n");
    out += &format!("  \"name\": {},\n", serde_json::to_string(&f.name).expect("string serializes"));
    out += &format!("  \"m\": {},\n", f.m);
    out += &format!("  \"vertices\": {},\n", serde_json::to_string(&f.vertices).expect("strings serialize"));
    let facets = f.facets.iter().map(|r| row(join_nums(r))).collect();
    out += &format!("  \"facets\": [\n{}\n  ],\n", join(facets));
    let lambda = f.lambda.iter().map(|r| row(join_nums(r))).collect();
    out += &format!("  \"lambda\": [\n{}\n  ]", join(lambda));
    if let Some(b) = f.base_facet {
        out += &format!(",\n  \"base_facet\": {b}");
    }
    out += "\n}\n";
    out
}

fn join_nums<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}
