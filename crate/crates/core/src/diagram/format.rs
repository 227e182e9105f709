//! The diagram file format: a JSON object
//!
//! ```json
//! { "name": "fig8-ubercrossing",
//!   "surface": "sphere",
//!   "crossings": [ { "id": 0, "levels": [1,3,5,2,4] } ],
//!   "edges": [ [[0,0],[0,1]], [[0,2],[0,3]] ] }
//! ```
//!
//! Edge slots are numbered against the levels exactly as written in the file.

use serde::{Deserialize, Serialize};

use super::{MulticrossingDiagram, RawSlot, Surface};
use crate::error::DiagramError;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramFile {
    name: String,
    #[serde(default = "default_surface")]
    surface: String,
    crossings: Vec<CrossingEntry>,
    edges: Vec<[[u32; 2]; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossingEntry {
    id: u32,
    levels: Vec<u32>,
}

fn default_surface() -> String {
    "auto".to_string()
}

pub fn parse_diagram(text: &str) -> Result<MulticrossingDiagram, DiagramError> {
    let file: DiagramFile = serde_json::from_str(text).map_err(|e| DiagramError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let surface: Surface = file.surface.parse()?;
    let crossings: Vec<(u32, Vec<u32>)> =
        file.crossings.into_iter().map(|c| (c.id, c.levels)).collect();
    let edges: Vec<(RawSlot, RawSlot)> = file
        .edges
        .iter()
        .map(|[a, b]| ((a[0], a[1]), (b[0], b[1])))
        .collect();
    MulticrossingDiagram::from_raw(file.name, surface, &crossings, &edges)
}

/// Writes a diagram in canonical form (top strand first, canonical slots).
pub fn to_json(d: &MulticrossingDiagram) -> String {
    let crossings = d
        .crossings()
        .iter()
        .map(|c| CrossingEntry {
            id: c.id(),
            levels: c.levels().to_vec(),
        })
        .collect();
    let id = |ci: usize| d.crossings()[ci].id();
    let edges = d
        .edges()
        .into_iter()
        .map(|(a, b)| [[id(a.crossing), a.slot], [id(b.crossing), b.slot]])
        .collect();
    let file = DiagramFile {
        name: d.name().to_string(),
        surface: d.declared_surface().to_string(),
        crossings,
        edges,
    };
    let mut out = String::new();
    out.push_str("{ \"name\": ");
    out.push_str(&serde_json::to_string(&file.name).unwrap());
    out.push_str(",\n  \"surface\": ");
    out.push_str(&serde_json::to_string(&file.surface).unwrap());
    out.push_str(",\n  \"crossings\": [\n");
    let rows: Vec<String> = file
        .crossings
        .iter()
        .map(|c| format!("    {}", serde_json::to_string(c).unwrap()))
        .collect();
    out.push_str(&rows.join(",\n"));
    out.push_str(" ],\n  \"edges\": [\n");
    let rows: Vec<String> = file
        .edges
        .iter()
        .map(|e| format!("    {}", serde_json::to_string(e).unwrap()))
        .collect();
    out.push_str(&rows.join(",\n"));
    out.push_str(" ] }\n");
    out
}
