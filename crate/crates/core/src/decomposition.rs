//! The two dual bipyramid decompositions of a link complement.
//!
//! Face-centered: one bipyramid per face of the projection graph, whose size
//! is the sum over the face's corners of the level gap between the two
//! strands meeting there. Crossing-centered: one bipyramid between each pair
//! of adjacent levels `i, i+1` of every crossing, whose size is twice the
//! number of cyclically adjacent strand pairs whose level interval straddles
//! `i + 1/2`. Both decompositions cut into the same tetrahedra.

use serde::Serialize;

use crate::diagram::{Crossing, Face, MulticrossingDiagram};
use crate::error::InvariantError;

/// Crossing-centered bipyramid sizes, top to bottom: `sizes[i - 1]` is the
/// bipyramid between levels `i` and `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    pub sizes: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossing: Option<u32>,
}

impl Signature {
    pub fn total(&self) -> u64 {
        self.sizes.iter().map(|&m| m as u64).sum()
    }

    pub fn octahedra(&self) -> usize {
        self.sizes.iter().filter(|&&m| m == 4).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceSizeRecord {
    pub face: usize,
    pub size: u32,
    pub contributions: Vec<CornerContribution>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CornerContribution {
    pub crossing: u32,
    pub arrival: u32,
    pub departure: u32,
    pub levels: (u32, u32),
    pub size: u32,
}

/// Signature sizes computed with a difference array over level intervals:
/// linear in the crossing size.
pub fn signature_sizes(levels: &[u32]) -> Vec<u32> {
    let n = levels.len();
    // each adjacent pair (a, b) covers bipyramids min(a,b) ..= max(a,b)-1
    let mut delta = vec![0i64; n + 1];
    for j in 0..n {
        let a = levels[j];
        let b = levels[(j + 1) % n];
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        delta[lo as usize] += 2;
        delta[hi as usize] -= 2;
    }
    let mut sizes = Vec::with_capacity(n.saturating_sub(1));
    let mut running = 0i64;
    for d in &delta[1..n] {
        running += d;
        sizes.push(running as u32);
    }
    sizes
}

/// Signature sizes by direct count: for each `i`, twice the number of
/// cyclic pairs with `min < i + 1/2 < max`. Quadratic; kept as a cross-check.
pub fn signature_sizes_by_count(levels: &[u32]) -> Vec<u32> {
    let n = levels.len();
    (1..n as u32)
        .map(|i| {
            let mid = 2 * i + 1; // compare doubled values to stay in integers
            let hits = (0..n)
                .filter(|&j| {
                    let a = 2 * levels[j];
                    let b = 2 * levels[(j + 1) % n];
                    a.min(b) < mid && mid < a.max(b)
                })
                .count();
            2 * hits as u32
        })
        .collect()
}

pub fn crossing_signature(c: &Crossing) -> Signature {
    let sizes = signature_sizes(c.levels());
    debug_assert_eq!(sizes, signature_sizes_by_count(c.levels()));
    Signature {
        sizes,
        crossing: Some(c.id()),
    }
}

/// Sum of `|l_j - l_{j+1}|` over cyclically adjacent strands.
pub fn cyclic_gap_sum(levels: &[u32]) -> u64 {
    let n = levels.len();
    (0..n)
        .map(|j| levels[j].abs_diff(levels[(j + 1) % n]) as u64)
        .sum()
}

/// Tetrahedra in all crossing-centered bipyramids of `c`, computed both from
/// the signature and as twice the cyclic level-gap sum.
pub fn crossing_tetrahedron_count(c: &Crossing) -> Result<u64, InvariantError> {
    let by_signature = crossing_signature(c).total();
    let by_gaps = 2 * cyclic_gap_sum(c.levels());
    if by_signature != by_gaps {
        return Err(InvariantError::TetrahedronCount {
            levels: c.levels().to_vec(),
            by_signature,
            by_gaps,
        });
    }
    Ok(by_signature)
}

pub fn face_size_records(d: &MulticrossingDiagram, faces: &[Face]) -> Vec<FaceSizeRecord> {
    faces
        .iter()
        .enumerate()
        .map(|(k, face)| {
            let contributions: Vec<CornerContribution> = face
                .corners
                .iter()
                .map(|corner| {
                    let c = &d.crossings()[corner.crossing];
                    let a = c.level_at_slot(corner.arrival);
                    let b = c.level_at_slot(corner.departure);
                    CornerContribution {
                        crossing: c.id(),
                        arrival: corner.arrival,
                        departure: corner.departure,
                        levels: (a, b),
                        size: a.abs_diff(b),
                    }
                })
                .collect();
            FaceSizeRecord {
                face: k,
                size: contributions.iter().map(|c| c.size).sum(),
                contributions,
            }
        })
        .collect()
}

/// Face-centered bipyramid sizes for every traced face.
pub fn face_sizes(d: &MulticrossingDiagram) -> Vec<FaceSizeRecord> {
    face_size_records(d, &d.trace_faces())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingBookkeeping {
    pub crossing: u32,
    /// Tetrahedra the crossing-centered bipyramids at this crossing hold.
    pub crossing_tetrahedra: u64,
    /// Sum of face corner contributions made at this crossing.
    pub corner_tetrahedra: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualReport {
    pub face_total: u64,
    pub crossing_total: u64,
    pub per_crossing: Vec<CrossingBookkeeping>,
}

/// Checks that both decompositions hold the same number of tetrahedra, in
/// total and crossing by crossing.
pub fn dual_consistency_check(d: &MulticrossingDiagram) -> Result<DualReport, InvariantError> {
    dual_consistency_from(d, &face_sizes(d))
}

pub(crate) fn dual_consistency_from(
    d: &MulticrossingDiagram,
    records: &[FaceSizeRecord],
) -> Result<DualReport, InvariantError> {
    let mut corner_sums = vec![0u64; d.crossing_count()];
    let index_of: std::collections::HashMap<u32, usize> = d
        .crossings()
        .iter()
        .enumerate()
        .map(|(i, c)| (c.id(), i))
        .collect();
    for rec in records {
        for contribution in &rec.contributions {
            corner_sums[index_of[&contribution.crossing]] += contribution.size as u64;
        }
    }
    let mut per_crossing = Vec::with_capacity(d.crossing_count());
    for (c, &corner_tetrahedra) in d.crossings().iter().zip(&corner_sums) {
        per_crossing.push(CrossingBookkeeping {
            crossing: c.id(),
            crossing_tetrahedra: crossing_tetrahedron_count(c)?,
            corner_tetrahedra,
        });
    }
    let face_total: u64 = records.iter().map(|r| r.size as u64).sum();
    let crossing_total: u64 = per_crossing.iter().map(|b| b.crossing_tetrahedra).sum();
    let first_bad = per_crossing
        .iter()
        .find(|b| b.crossing_tetrahedra != b.corner_tetrahedra)
        .map(|b| b.crossing);
    if face_total != crossing_total || first_bad.is_some() {
        return Err(InvariantError::DualMismatch {
            face_total,
            crossing_total,
            first_crossing: first_bad,
        });
    }
    Ok(DualReport {
        face_total,
        crossing_total,
        per_crossing,
    })
}
