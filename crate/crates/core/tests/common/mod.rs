#![allow(dead_code)]

use bipyr::diagram::{MulticrossingDiagram, RawSlot, Surface};
use rand::seq::SliceRandom;
use rand::Rng;

pub type RawCrossing = (u32, Vec<u32>);

/// A random diagram in raw form: crossings of 2..=max_size strands with
/// shuffled levels, and a uniformly random perfect matching on the slots.
pub fn random_raw<R: Rng>(
    rng: &mut R,
    max_crossings: usize,
    max_size: usize,
) -> (Vec<RawCrossing>, Vec<(RawSlot, RawSlot)>) {
    let count = rng.gen_range(1..=max_crossings);
    let mut crossings = Vec::with_capacity(count);
    let mut slots = Vec::new();
    for id in 0..count as u32 {
        let n = rng.gen_range(2..=max_size);
        let mut levels: Vec<u32> = (1..=n as u32).collect();
        levels.shuffle(rng);
        for s in 0..2 * n as u32 {
            slots.push((id, s));
        }
        crossings.push((id, levels));
    }
    slots.shuffle(rng);
    let edges = slots.chunks(2).map(|p| (p[0], p[1])).collect();
    (crossings, edges)
}

pub fn random_diagram<R: Rng>(rng: &mut R, max_crossings: usize, max_size: usize) -> MulticrossingDiagram {
    let (crossings, edges) = random_raw(rng, max_crossings, max_size);
    MulticrossingDiagram::from_raw("random", Surface::Auto, &crossings, &edges).unwrap()
}

/// Rotates the written level order of every crossing by `shift(id)` positions,
/// renumbering edge slots so the same diagram is described.
pub fn rotate_raw(
    crossings: &[RawCrossing],
    edges: &[(RawSlot, RawSlot)],
    shift: impl Fn(u32) -> usize,
) -> (Vec<RawCrossing>, Vec<(RawSlot, RawSlot)>) {
    let sizes: std::collections::HashMap<u32, usize> =
        crossings.iter().map(|(id, l)| (*id, l.len())).collect();
    let rotated = crossings
        .iter()
        .map(|(id, l)| {
            let n = l.len();
            let r = shift(*id) % n;
            (*id, (0..n).map(|j| l[(j + r) % n]).collect())
        })
        .collect();
    let remap = |(id, s): RawSlot| {
        let m = 2 * sizes[&id] as u32;
        let r = (shift(id) % sizes[&id]) as u32;
        (id, (s + m - r) % m)
    };
    let edges = edges.iter().map(|&(a, b)| (remap(a), remap(b))).collect();
    (rotated, edges)
}

/// Signature straight from the interval-containment reading: bipyramid
/// `[i, i+1]` gains a tetrahedron from each side of every cyclic strand pair
/// whose level interval contains it.
pub fn brute_signature(levels: &[u32]) -> Vec<u32> {
    let n = levels.len();
    let mut out = Vec::new();
    for i in 1..n as u32 {
        let mut count = 0;
        for j in 0..n {
            let a = levels[j];
            let b = levels[(j + 1) % n];
            let (lo, hi) = (a.min(b), a.max(b));
            if lo <= i && i < hi {
                count += 2;
            }
        }
        out.push(count);
    }
    out
}

/// All permutations of 1..=n with 1 first, by recursive insertion.
pub fn canonical_perms(n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, left: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..left.len() {
            let x = left.remove(k);
            prefix.push(x);
            go(prefix, left, out);
            prefix.pop();
            left.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut vec![1], &mut (2..=n as u32).collect(), &mut out);
    out
}

/// Admissible sequences of a given length, enumerated without pruning from
/// all {-4, 0, +4} gap words.
pub fn brute_admissible(len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let words = 3usize.pow(len.saturating_sub(1) as u32);
    'word: for w in 0..words {
        let mut seq = vec![4i64];
        let mut code = w;
        for _ in 1..len {
            let gap = (code % 3) as i64 * 4 - 4;
            code /= 3;
            let next = seq.last().unwrap() + gap;
            if next < 4 {
                continue 'word;
            }
            seq.push(next);
        }
        if *seq.last().unwrap() == 4 {
            out.push(seq.into_iter().map(|x| x as u32).collect());
        }
    }
    out.sort();
    out
}
