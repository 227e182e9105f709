//! Everything known about one diagram, in one serializable value.

use serde::Serialize;

use crate::decomposition::{crossing_signature, dual_consistency_from, face_sizes, FaceSizeRecord};
use crate::diagram::MulticrossingDiagram;
use crate::error::{DiagramError, InvariantError};
use crate::volume::{density_bounds, DensityReport, VolumeBoundReport};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossingSummary {
    pub crossing: u32,
    pub levels: Vec<u32>,
    pub signature: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Totals {
    pub face_centered: u64,
    pub crossing_centered: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalyzeOutput {
    pub name: String,
    pub surface: String,
    pub genus: u32,
    pub component_genera: Vec<u32>,
    pub link_components: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub crossings: Vec<CrossingSummary>,
    pub face_sizes: Vec<FaceSizeRecord>,
    pub tetrahedra: Totals,
    pub mccb: f64,
    pub mfcb: f64,
    pub octahedral: f64,
    pub density: DensityReport,
    pub volume: VolumeBoundReport,
    pub warnings: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Internal(#[from] InvariantError),
}

pub fn analyze(d: &MulticrossingDiagram) -> Result<AnalyzeOutput, AnalyzeError> {
    let component_genera = d.component_genera()?;
    let genus: u32 = component_genera.iter().sum();
    let signatures: Vec<_> = d.crossings().iter().map(crossing_signature).collect();
    let records = face_sizes(d);
    let dual = dual_consistency_from(d, &records)?;
    let volume = VolumeBoundReport::new(d, &signatures, &records, genus);
    Ok(AnalyzeOutput {
        name: d.name().to_string(),
        surface: d.declared_surface().to_string(),
        genus,
        component_genera,
        link_components: d.link_components().len(),
        vertices: d.vertex_count(),
        edges: d.edge_count(),
        faces: records.len(),
        crossings: d
            .crossings()
            .iter()
            .zip(&signatures)
            .map(|(c, s)| CrossingSummary {
                crossing: c.id(),
                levels: c.levels().to_vec(),
                signature: s.sizes.clone(),
            })
            .collect(),
        face_sizes: records,
        tetrahedra: Totals {
            face_centered: dual.face_total,
            crossing_centered: dual.crossing_total,
        },
        mccb: volume.mccb,
        mfcb: volume.mfcb,
        octahedral: volume.octahedral,
        density: density_bounds(d),
        warnings: volume.warnings.clone(),
        volume,
    })
}
