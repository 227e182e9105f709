//! Bipyramid decompositions of multicrossing link complements.
//!
//! Given a multicrossing projection of a link, the complement splits into
//! face-centered bipyramids (one per face of the projection graph) and,
//! dually, into crossing-centered bipyramids (one between each pair of
//! adjacent levels at every crossing). Summing maximal bipyramid volumes over
//! either decomposition bounds the hyperbolic volume of the link from above.
//!
//! * [`diagram`]: the diagram model, file format, face tracing and genus.
//! * [`decomposition`]: bipyramid sizes and the duality check.
//! * [`realization`]: building a crossing with a prescribed signature.
//! * [`volume`]: the Lobachevsky function and the volume bounds.
//! * [`enumeration`]: exhaustive census of single crossings.
//! * [`report`]: the combined analysis of one diagram.

pub mod builtin;
pub mod decomposition;
pub mod diagram;
pub mod enumeration;
pub mod error;
pub mod realization;
pub mod report;
pub mod volume;

pub use decomposition::{crossing_signature, face_sizes, FaceSizeRecord, Signature};
pub use diagram::{parse_diagram, Crossing, Face, MulticrossingDiagram, SlotRef, Surface};
pub use error::{DiagramError, InvariantError, NumericError, SequenceError};
pub use realization::{is_admissible, realize, SizeSequence};
pub use report::{analyze, AnalyzeOutput};
pub use volume::{lobachevsky, maxvol, mccb, mfcb, octahedral_bound, v_oct, VolumeBoundReport};
