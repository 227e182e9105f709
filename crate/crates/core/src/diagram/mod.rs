//! Multicrossing link diagrams.
//!
//! A diagram is a set of crossings together with a perfect matching on their
//! slots. The clockwise slot order at each crossing is a rotation system, so
//! the matching alone fixes an embedding of the projection graph in an
//! orientable surface. Faces, link components and genus all fall out of it.

mod crossing;
mod faces;
mod format;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use crossing::Crossing;
pub use faces::{Corner, Face};
pub use format::{parse_diagram, to_json};

use crate::error::DiagramError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Surface {
    Sphere,
    Torus,
    Auto,
}

impl Surface {
    pub fn as_str(self) -> &'static str {
        match self {
            Surface::Sphere => "sphere",
            Surface::Torus => "torus",
            Surface::Auto => "auto",
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Surface {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sphere" => Ok(Surface::Sphere),
            "torus" => Ok(Surface::Torus),
            "auto" => Ok(Surface::Auto),
            other => Err(DiagramError::UnknownSurface(other.to_string())),
        }
    }
}

/// A slot on a crossing, addressed by the crossing's index in the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotRef {
    pub crossing: usize,
    pub slot: u32,
}

impl SlotRef {
    pub fn new(crossing: usize, slot: u32) -> Self {
        SlotRef { crossing, slot }
    }
}

/// A slot addressed by crossing id, numbered against the crossing's levels as
/// originally written (before canonical rotation).
pub type RawSlot = (u32, u32);

#[derive(Debug, Clone, PartialEq)]
pub struct MulticrossingDiagram {
    name: String,
    surface: Surface,
    crossings: Vec<Crossing>,
    // partner[c][s] is the slot joined to slot s of crossing c.
    partner: Vec<Vec<SlotRef>>,
}

impl MulticrossingDiagram {
    /// Builds and validates a diagram from crossings given as `(id, levels)`
    /// in any rotation and edges given against that same rotation.
    pub fn from_raw(
        name: impl Into<String>,
        surface: Surface,
        crossings: &[(u32, Vec<u32>)],
        edges: &[(RawSlot, RawSlot)],
    ) -> Result<Self, DiagramError> {
        let mut index = HashMap::new();
        let mut built = Vec::with_capacity(crossings.len());
        for (id, levels) in crossings {
            if index.insert(*id, built.len()).is_some() {
                return Err(DiagramError::DuplicateCrossing(*id));
            }
            built.push(Crossing::new(*id, levels)?);
        }

        let mut partner: Vec<Vec<Option<SlotRef>>> = built
            .iter()
            .map(|c| vec![None; c.slot_count() as usize])
            .collect();
        let resolve = |(id, raw): RawSlot| -> Result<SlotRef, DiagramError> {
            let &ci = index.get(&id).ok_or(DiagramError::UnknownCrossing(id))?;
            let c = &built[ci];
            if raw >= c.slot_count() {
                return Err(DiagramError::SlotOutOfRange {
                    crossing: id,
                    slot: raw,
                    slots: c.slot_count(),
                });
            }
            Ok(SlotRef::new(ci, c.canonical_slot(raw)))
        };
        for &(a, b) in edges {
            let ra = resolve(a)?;
            let rb = resolve(b)?;
            for (here, there, raw) in [(ra, rb, a), (rb, ra, b)] {
                let cell = &mut partner[here.crossing][here.slot as usize];
                // a slot paired with itself counts as matched twice
                if cell.is_some() || ra == rb {
                    return Err(DiagramError::SlotMatchedTwice {
                        crossing: raw.0,
                        slot: raw.1,
                        offset: built[here.crossing].rotation(),
                    });
                }
                *cell = Some(there);
            }
        }

        let mut matched = Vec::with_capacity(partner.len());
        for (ci, slots) in partner.into_iter().enumerate() {
            let c = &built[ci];
            let mut row = Vec::with_capacity(slots.len());
            for (s, p) in slots.into_iter().enumerate() {
                match p {
                    Some(p) => row.push(p),
                    None => {
                        return Err(DiagramError::SlotUnmatched {
                            crossing: c.id(),
                            slot: c.raw_slot(s as u32),
                            offset: c.rotation(),
                        })
                    }
                }
            }
            matched.push(row);
        }

        let diagram = MulticrossingDiagram {
            name: name.into(),
            surface,
            crossings: built,
            partner: matched,
        };
        diagram.check_surface()?;
        Ok(diagram)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn declared_surface(&self) -> Surface {
        self.surface
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.crossings.len()
    }

    /// E = Σ n_c.
    pub fn edge_count(&self) -> usize {
        self.crossings.iter().map(Crossing::size).sum()
    }

    pub fn partner(&self, at: SlotRef) -> SlotRef {
        self.partner[at.crossing][at.slot as usize]
    }

    /// Each edge once, as canonical slot pairs with the smaller end first.
    pub fn edges(&self) -> Vec<(SlotRef, SlotRef)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (ci, row) in self.partner.iter().enumerate() {
            for (s, &p) in row.iter().enumerate() {
                let here = SlotRef::new(ci, s as u32);
                if here <= p {
                    out.push((here, p));
                }
            }
        }
        out
    }

    /// Link components: orbits of "follow the edge, then pass straight
    /// through the crossing". Each component is listed by the slots it
    /// arrives at, starting from its smallest.
    pub fn link_components(&self) -> Vec<Vec<SlotRef>> {
        let mut seen: Vec<Vec<bool>> = self
            .crossings
            .iter()
            .map(|c| vec![false; c.slot_count() as usize])
            .collect();
        let mut components = Vec::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for s in 0..c.slot_count() {
                if seen[ci][s as usize] {
                    continue;
                }
                let start = SlotRef::new(ci, s);
                let mut orbit = Vec::new();
                let mut at = start;
                loop {
                    // `at` is where we leave a crossing along an edge
                    let arrive = self.partner(at);
                    seen[at.crossing][at.slot as usize] = true;
                    seen[arrive.crossing][arrive.slot as usize] = true;
                    orbit.push(arrive);
                    let cross = &self.crossings[arrive.crossing];
                    at = SlotRef::new(arrive.crossing, cross.through(arrive.slot));
                    if at == start {
                        break;
                    }
                }
                components.push(orbit);
            }
        }
        components
    }

    /// Connected components of the projection graph, as sorted crossing indices.
    pub fn graph_components(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (a, b) in self.edges() {
            let ra = find(&mut parent, a.crossing);
            let rb = find(&mut parent, b.crossing);
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot_of_root = HashMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            let g = *slot_of_root.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(v);
        }
        groups
    }

    fn check_surface(&self) -> Result<(), DiagramError> {
        let genera = self.component_genera()?;
        let total: u32 = genera.iter().sum();
        let ok = match self.surface {
            Surface::Auto => true,
            Surface::Sphere => total == 0,
            Surface::Torus => total == 1,
        };
        if ok {
            Ok(())
        } else {
            Err(DiagramError::SurfaceMismatch {
                declared: self.surface.to_string(),
                found: genera,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petal() -> MulticrossingDiagram {
        MulticrossingDiagram::from_raw(
            "petal",
            Surface::Sphere,
            &[(0, vec![1, 3, 5, 2, 4])],
            &[
                ((0, 0), (0, 1)),
                ((0, 2), (0, 3)),
                ((0, 4), (0, 5)),
                ((0, 6), (0, 7)),
                ((0, 8), (0, 9)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn counts() {
        let d = petal();
        assert_eq!(d.vertex_count(), 1);
        assert_eq!(d.edge_count(), 5);
        assert_eq!(d.edges().len(), 5);
        assert_eq!(d.link_components().len(), 1);
        assert_eq!(d.link_components()[0].len(), 5);
    }

    #[test]
    fn slot_matched_twice() {
        let err = MulticrossingDiagram::from_raw(
            "bad",
            Surface::Auto,
            &[(0, vec![1, 2])],
            &[((0, 0), (0, 1)), ((0, 1), (0, 2)), ((0, 3), (0, 3))],
        )
        .unwrap_err();
        assert!(err.to_string().contains("slot matched twice"), "{err}");
    }

    #[test]
    fn self_loop_on_one_slot_is_rejected() {
        let err = MulticrossingDiagram::from_raw(
            "bad",
            Surface::Auto,
            &[(0, vec![1, 2])],
            &[((0, 0), (0, 0)), ((0, 1), (0, 2))],
        )
        .unwrap_err();
        assert!(matches!(err, DiagramError::SlotMatchedTwice { .. }), "{err}");
    }

    #[test]
    fn unmatched_and_out_of_range() {
        let err = MulticrossingDiagram::from_raw(
            "bad",
            Surface::Auto,
            &[(0, vec![1, 2])],
            &[((0, 0), (0, 1))],
        )
        .unwrap_err();
        assert!(matches!(err, DiagramError::SlotUnmatched { slot: 2, .. }));
        let err = MulticrossingDiagram::from_raw(
            "bad",
            Surface::Auto,
            &[(0, vec![1, 2])],
            &[((0, 0), (0, 4)), ((0, 1), (0, 2))],
        )
        .unwrap_err();
        assert!(matches!(err, DiagramError::SlotOutOfRange { slot: 4, .. }));
        let err = MulticrossingDiagram::from_raw(
            "bad",
            Surface::Auto,
            &[(0, vec![1, 2])],
            &[((0, 0), (9, 1))],
        )
        .unwrap_err();
        assert_eq!(err, DiagramError::UnknownCrossing(9));
    }

    #[test]
    fn rotation_is_applied_to_edges() {
        // levels written starting from the bottom strand; slots follow suit
        let d = MulticrossingDiagram::from_raw(
            "rot",
            Surface::Sphere,
            &[(3, vec![2, 1])],
            &[((3, 0), (3, 1)), ((3, 2), (3, 3))],
        )
        .unwrap();
        let c = &d.crossings()[0];
        assert_eq!(c.levels(), &[1, 2]);
        assert_eq!(c.rotation(), 1);
        // raw 0 -> canonical 3, raw 1 -> canonical 0
        assert_eq!(d.partner(SlotRef::new(0, 3)), SlotRef::new(0, 0));
    }
}
