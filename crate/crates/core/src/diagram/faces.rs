use serde::Serialize;

use super::{MulticrossingDiagram, SlotRef};
use crate::error::DiagramError;

/// Where a face boundary turns at a crossing: it arrives along the edge at
/// `arrival` and leaves along the edge at `departure = arrival + 1 (mod 2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Corner {
    pub crossing: usize,
    pub arrival: u32,
    pub departure: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub corners: Vec<Corner>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }
}

impl MulticrossingDiagram {
    /// Traces every face, outer face included. Faces start at the first
    /// untraced arrival in (crossing, slot) order, so the output is
    /// deterministic.
    pub fn trace_faces(&self) -> Vec<Face> {
        let mut seen: Vec<Vec<bool>> = self
            .crossings
            .iter()
            .map(|c| vec![false; c.slot_count() as usize])
            .collect();
        let mut faces = Vec::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for s in 0..c.slot_count() {
                if seen[ci][s as usize] {
                    continue;
                }
                let mut corners = Vec::new();
                let mut at = SlotRef::new(ci, s);
                while !seen[at.crossing][at.slot as usize] {
                    seen[at.crossing][at.slot as usize] = true;
                    let m = self.crossings[at.crossing].slot_count();
                    let departure = (at.slot + 1) % m;
                    corners.push(Corner {
                        crossing: at.crossing,
                        arrival: at.slot,
                        departure,
                    });
                    at = self.partner(SlotRef::new(at.crossing, departure));
                }
                debug_assert_eq!(at, SlotRef::new(ci, s));
                faces.push(Face { corners });
            }
        }
        faces
    }

    /// Genus of the embedding surface of each connected component of the
    /// projection graph, from V - E + F = 2 - 2g.
    pub fn component_genera(&self) -> Result<Vec<u32>, DiagramError> {
        let components = self.graph_components();
        let mut component_of = vec![0; self.crossings.len()];
        for (k, comp) in components.iter().enumerate() {
            for &v in comp {
                component_of[v] = k;
            }
        }
        let mut euler = vec![0i64; components.len()];
        for (k, comp) in components.iter().enumerate() {
            for &v in comp {
                euler[k] += 1 - self.crossings[v].size() as i64;
            }
        }
        for face in self.trace_faces() {
            euler[component_of[face.corners[0].crossing]] += 1;
        }
        euler
            .into_iter()
            .map(|chi| {
                let twice = 2 - chi;
                if twice < 0 || twice % 2 != 0 {
                    Err(DiagramError::BadEmbedding { euler: chi })
                } else {
                    Ok((twice / 2) as u32)
                }
            })
            .collect()
    }

    /// Total genus: the genus of the surface when the diagram is connected.
    pub fn genus(&self) -> Result<u32, DiagramError> {
        Ok(self.component_genera()?.iter().sum())
    }
}
