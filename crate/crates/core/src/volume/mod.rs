//! Volume upper bounds from the bipyramid decompositions.

mod lobachevsky;
mod table;

use std::f64::consts::PI;

use serde::Serialize;

pub use lobachevsky::lobachevsky;
pub use table::{table1, worst_case_signature, TableRow};

use crate::decomposition::{crossing_signature, face_sizes, FaceSizeRecord, Signature};
use crate::diagram::{Crossing, MulticrossingDiagram};

/// Volume of the regular ideal octahedron, 8Λ(π/4).
pub fn v_oct() -> f64 {
    maxvol(4)
}

/// Largest volume of a hyperbolic bipyramid with `m` equatorial edges.
///
/// For `m ≥ 3` this is the regular ideal bipyramid, `m` ideal tetrahedra with
/// dihedral angle 2π/m about the axis: `2m Λ(π/m)`. Bipyramids with at most
/// two equatorial vertices are flat.
pub fn maxvol(m: u32) -> f64 {
    if m <= 2 {
        return 0.0;
    }
    let mf = m as f64;
    let v = 2.0 * mf * lobachevsky::lob(PI / mf);
    debug_assert!(v < 2.0 * PI * (mf / 2.0).ln());
    v
}

fn binomial2(n: usize) -> f64 {
    (n * (n - 1) / 2) as f64
}

/// MCCB contribution of one crossing: Σᵢ maxvol(|B_{c,i}|).
pub fn crossing_mccb(c: &Crossing) -> f64 {
    signature_volume(&crossing_signature(c).sizes)
}

pub fn signature_volume(sizes: &[u32]) -> f64 {
    sizes.iter().map(|&m| maxvol(m)).sum()
}

pub fn mccb(d: &MulticrossingDiagram) -> f64 {
    d.crossings().iter().map(crossing_mccb).sum()
}

pub fn mfcb(d: &MulticrossingDiagram) -> f64 {
    face_sizes(d).iter().map(|r| maxvol(r.size)).sum()
}

/// Thurston's bound after perturbing every n-crossing into C(n,2) 2-crossings.
pub fn octahedral_bound(d: &MulticrossingDiagram) -> f64 {
    d.crossings()
        .iter()
        .map(|c| binomial2(c.size()) * v_oct())
        .sum()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityReport {
    pub crossing_count: usize,
    /// mccb / number of crossings.
    pub mccb_per_crossing: Option<f64>,
    /// mccb / number of 3-crossings, when every crossing has three strands.
    pub triple_density_bound: Option<f64>,
    /// The maximal triple volume density, 2 v_oct.
    pub triple_reference: f64,
}

pub fn density_bounds(d: &MulticrossingDiagram) -> DensityReport {
    let count = d.crossing_count();
    let total = mccb(d);
    let all_triple = count > 0 && d.crossings().iter().all(|c| c.size() == 3);
    DensityReport {
        crossing_count: count,
        mccb_per_crossing: (count > 0).then(|| total / count as f64),
        triple_density_bound: all_triple.then(|| total / count as f64),
        triple_reference: 2.0 * v_oct(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossingVolume {
    pub crossing: u32,
    pub levels: Vec<u32>,
    pub signature: Vec<u32>,
    pub volumes: Vec<f64>,
    pub octahedra: usize,
    pub tetrahedra: u64,
    pub mccb: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FaceVolume {
    pub face: usize,
    pub size: u32,
    pub volume: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VolumeBoundReport {
    pub mccb: f64,
    pub mfcb: f64,
    pub octahedral: f64,
    pub tetrahedron_total: u64,
    pub per_crossing: Vec<CrossingVolume>,
    pub per_face: Vec<FaceVolume>,
    pub genus: u32,
    pub warnings: Vec<String>,
}

impl VolumeBoundReport {
    pub fn new(
        d: &MulticrossingDiagram,
        signatures: &[Signature],
        faces: &[FaceSizeRecord],
        genus: u32,
    ) -> Self {
        let per_crossing: Vec<CrossingVolume> = d
            .crossings()
            .iter()
            .zip(signatures)
            .map(|(c, sig)| {
                let volumes: Vec<f64> = sig.sizes.iter().map(|&m| maxvol(m)).collect();
                CrossingVolume {
                    crossing: c.id(),
                    levels: c.levels().to_vec(),
                    signature: sig.sizes.clone(),
                    mccb: volumes.iter().sum(),
                    volumes,
                    octahedra: sig.octahedra(),
                    tetrahedra: sig.total(),
                }
            })
            .collect();
        let per_face: Vec<FaceVolume> = faces
            .iter()
            .map(|r| FaceVolume {
                face: r.face,
                size: r.size,
                volume: maxvol(r.size),
            })
            .collect();
        let mut warnings = Vec::new();
        if genus > 0 {
            warnings.push(format!(
                "diagram embeds in a surface of genus {genus}; the volume bounds are proved for \
                 planar projections and applied here as for the torus weave quotients"
            ));
        }
        let degenerate = faces.iter().filter(|r| r.size <= 2).count();
        if degenerate > 0 {
            warnings.push(format!(
                "{degenerate} face bipyramid(s) of size <= 2 counted with zero volume"
            ));
        }
        VolumeBoundReport {
            mccb: per_crossing.iter().map(|c| c.mccb).sum(),
            mfcb: per_face.iter().map(|f| f.volume).sum(),
            octahedral: octahedral_bound(d),
            tetrahedron_total: per_crossing.iter().map(|c| c.tetrahedra).sum(),
            per_crossing,
            per_face,
            genus,
            warnings,
        }
    }
}

/// Formats `x` with six significant digits, the precision of the published
/// bound tables.
pub fn format_sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.5e}");
    let exp: i32 = sci.split('e').nth(1).unwrap().parse().unwrap();
    if exp >= 5 {
        let rounded: f64 = sci.parse().unwrap();
        format!("{rounded:.0}")
    } else {
        let decimals = (5 - exp) as usize;
        format!("{x:.decimals$}")
    }
}
