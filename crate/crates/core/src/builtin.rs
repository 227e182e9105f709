//! Built-in example diagrams.
//!
//! Planar examples come from braid closures. The torus examples are the
//! quotients of the square, triple and right-triangle weaves by their
//! translation lattices, written out by hand.

use crate::diagram::{MulticrossingDiagram, RawSlot, Surface};

/// Closure of a braid on `strands` strands. Each letter `±i` (1-based) is a
/// crossing of positions `i-1` and `i`; positive letters put the strand
/// entering from the upper left on top.
///
/// At each crossing the slots run clockwise from the upper-left end:
/// 0 = NW, 1 = NE, 2 = SE, 3 = SW, so opposite slots lie on one strand.
pub fn braid_closure(name: &str, strands: usize, word: &[i32]) -> MulticrossingDiagram {
    assert!(strands >= 2);
    let mut crossings = Vec::new();
    let mut edges: Vec<(RawSlot, RawSlot)> = Vec::new();
    // for each position: first slot reached from the top, and the slot the
    // strand currently hangs from
    let mut first: Vec<Option<RawSlot>> = vec![None; strands];
    let mut hanging: Vec<Option<RawSlot>> = vec![None; strands];
    for (k, &letter) in word.iter().enumerate() {
        let i = letter.unsigned_abs() as usize;
        assert!(i >= 1 && i < strands, "generator out of range");
        let id = k as u32;
        crossings.push((id, if letter > 0 { vec![1, 2] } else { vec![2, 1] }));
        for (pos, slot) in [(i - 1, 0), (i, 1)] {
            match hanging[pos] {
                Some(above) => edges.push((above, (id, slot))),
                None => first[pos] = Some((id, slot)),
            }
        }
        hanging[i - 1] = Some((id, 3));
        hanging[i] = Some((id, 2));
    }
    for pos in 0..strands {
        let top = first[pos].expect("every braid position must be used");
        edges.push((hanging[pos].unwrap(), top));
    }
    MulticrossingDiagram::from_raw(name, Surface::Sphere, &crossings, &edges)
        .expect("braid closures are planar")
}

pub fn trefoil() -> MulticrossingDiagram {
    braid_closure("trefoil", 2, &[1, 1, 1])
}

pub fn figure_eight() -> MulticrossingDiagram {
    braid_closure("fig8-standard", 3, &[1, -2, 1, -2])
}

/// The petal projection of the figure-eight knot: one 5-crossing 13524 whose
/// neighbouring strand ends are joined by loops.
pub fn fig8_ubercrossing() -> MulticrossingDiagram {
    petal("fig8-ubercrossing", &[1, 3, 5, 2, 4])
}

/// A single crossing with each boundary slot `2k` looped to `2k + 1`.
pub fn petal(name: &str, levels: &[u32]) -> MulticrossingDiagram {
    let slots = 2 * levels.len() as u32;
    let edges: Vec<(RawSlot, RawSlot)> = (0..slots / 2).map(|k| ((0, 2 * k), (0, 2 * k + 1))).collect();
    MulticrossingDiagram::from_raw(name, Surface::Sphere, &[(0, levels.to_vec())], &edges)
        .expect("petal diagrams are planar")
}

/// One 2-crossing with two loops: the figure-eight-shaped unknot diagram.
pub fn unknot_2() -> MulticrossingDiagram {
    petal("unknot-2", &[1, 2])
}

/// The square weave on the torus: four alternating 2-crossings on a 2 × 2
/// grid. Slots 0..4 point N, E, S, W.
pub fn square_weave() -> MulticrossingDiagram {
    let id = |x: u32, y: u32| (x % 2) + 2 * (y % 2);
    let mut crossings = Vec::new();
    let mut edges = Vec::new();
    for y in 0..2 {
        for x in 0..2 {
            // vertical strand on top where x + y is even
            let levels = if (x + y) % 2 == 0 { vec![1, 2] } else { vec![2, 1] };
            crossings.push((id(x, y), levels));
            edges.push(((id(x, y), 1), (id(x + 1, y), 3)));
            edges.push(((id(x, y), 0), (id(x, y + 1), 2)));
        }
    }
    MulticrossingDiagram::from_raw("square-weave", Surface::Torus, &crossings, &edges)
        .expect("square weave quotient")
}

/// The triple weave on the torus: one 3-crossing per row of the triangular
/// lattice, modulo the translations by (1, 0) and twice the row step. Slots
/// 0..6 point at 0°, −60°, −120°, 180°, 120°, 60°; strand 0 runs along the
/// rows. Row 0 carries a crossing of type 123, row 1 one of type 132.
pub fn triple_weave() -> MulticrossingDiagram {
    // lattice steps for slots 0..6, as (along row, rows up)
    const STEP: [(i32, i32); 6] = [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];
    let crossings = vec![(0, vec![1, 2, 3]), (1, vec![3, 2, 1])];
    let mut edges = Vec::new();
    for row in 0..2i32 {
        for (slot, &(_, dy)) in STEP.iter().enumerate().take(3) {
            let there = (row + dy).rem_euclid(2) as u32;
            edges.push(((row as u32, slot as u32), (there, slot as u32 + 3)));
        }
    }
    MulticrossingDiagram::from_raw("triple-weave", Surface::Torus, &crossings, &edges)
        .expect("triple weave quotient")
}

/// The right-triangle weave on the torus: the 4-crossing 1243 at the square
/// corners and a 2-crossing at the square centre. Corner slots 0..8 point
/// E, SE, S, SW, W, NW, N, NE; centre slots 0..4 point NE, SE, SW, NW. The
/// diagonals carry the top and bottom strands of the 4-crossing, and cross
/// at the centre with the corner's top strand underneath.
pub fn right_triangle_weave() -> MulticrossingDiagram {
    // corner strands: 0 horizontal, 1 SE-NW, 2 vertical, 3 SW-NE
    let corner = (0, vec![3, 1, 2, 4]);
    // centre strand 0 is SW-NE (corner level 4), strand 1 is SE-NW (corner level 1)
    let centre = (1, vec![1, 2]);
    let edges = [
        ((0, 0), (0, 4)),
        ((0, 2), (0, 6)),
        ((0, 7), (1, 2)),
        ((0, 1), (1, 3)),
        ((0, 3), (1, 0)),
        ((0, 5), (1, 1)),
    ];
    MulticrossingDiagram::from_raw(
        "right-triangle-weave",
        Surface::Torus,
        &[corner, centre],
        &edges,
    )
    .expect("right triangle weave quotient")
}

/// Every built-in diagram, keyed by name.
pub fn builtin_examples() -> Vec<MulticrossingDiagram> {
    vec![
        trefoil(),
        figure_eight(),
        fig8_ubercrossing(),
        unknot_2(),
        square_weave(),
        triple_weave(),
        right_triangle_weave(),
    ]
}

pub fn builtin_example(name: &str) -> Option<MulticrossingDiagram> {
    builtin_examples().into_iter().find(|d| d.name() == name)
}
