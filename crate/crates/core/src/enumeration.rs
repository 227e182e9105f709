//! Exhaustive census of single n-crossings.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::signature_sizes;
use crate::diagram::Crossing;
use crate::error::{InvariantError, NumericError};
use crate::realization::is_admissible;
use crate::volume::{signature_volume, table1, v_oct};

pub const DEFAULT_CAP: usize = 12;

/// Canonical level sequences (level 1 at position 0) grouped by signature.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: usize,
    pub fold_reflections: bool,
    /// Configurations counted: (n-1)!, or the number of reflection classes.
    pub total: usize,
    pub entries: BTreeMap<Vec<u32>, Vec<Vec<u32>>>,
}

impl Census {
    pub fn counts(&self) -> BTreeMap<Vec<u32>, usize> {
        self.entries
            .iter()
            .map(|(sig, perms)| (sig.clone(), perms.len()))
            .collect()
    }

    /// Every (levels, signature) pair in lexicographic order of levels.
    pub fn rows(&self) -> Vec<(Vec<u32>, Vec<u32>)> {
        let mut rows: Vec<(Vec<u32>, Vec<u32>)> = self
            .entries
            .iter()
            .flat_map(|(sig, perms)| perms.iter().map(move |p| (p.clone(), sig.clone())))
            .collect();
        rows.sort();
        rows
    }
}

/// Rearranges `xs` into the next permutation in lexicographic order.
fn next_permutation(xs: &mut [u32]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// The reflection partner of a canonical sequence: same crossing seen from
/// below, i.e. cyclic order reversed with level 1 kept first.
pub fn reflect(levels: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(levels.len());
    out.push(levels[0]);
    out.extend(levels[1..].iter().rev());
    out
}

/// All canonical level sequences for n-crossings, lexicographically ordered.
/// Work is split by the level at position 1.
pub fn canonical_sequences(n: usize) -> Vec<Vec<u32>> {
    if n == 2 {
        return vec![vec![1, 2]];
    }
    (2..=n as u32)
        .into_par_iter()
        .map(|second| {
            let mut rest: Vec<u32> = (2..=n as u32).filter(|&l| l != second).collect();
            let mut out = Vec::new();
            loop {
                let mut levels = Vec::with_capacity(n);
                levels.push(1);
                levels.push(second);
                levels.extend_from_slice(&rest);
                out.push(levels);
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            out
        })
        .flatten()
        .collect()
}

pub fn enumerate_crossings(n: usize, fold_reflections: bool) -> Result<Census, NumericError> {
    enumerate_crossings_capped(n, fold_reflections, DEFAULT_CAP)
}

pub fn enumerate_crossings_capped(
    n: usize,
    fold_reflections: bool,
    cap: usize,
) -> Result<Census, NumericError> {
    if n > cap {
        return Err(NumericError::AboveCap { n, cap });
    }
    if n < 2 {
        return Err(NumericError::SizeTooSmall(n));
    }
    let signed: Vec<(Vec<u32>, Vec<u32>)> = canonical_sequences(n)
        .into_par_iter()
        .filter(|levels| !fold_reflections || *levels <= reflect(levels))
        .map(|levels| {
            let sig = signature_sizes(&levels);
            (levels, sig)
        })
        .collect();
    let total = signed.len();
    let mut entries: BTreeMap<Vec<u32>, Vec<Vec<u32>>> = BTreeMap::new();
    for (levels, sig) in signed {
        entries.entry(sig).or_default().push(levels);
    }
    Ok(Census {
        n,
        fold_reflections,
        total,
        entries,
    })
}

/// Admissible sequences of length `len`, by walking gaps in {-4, 0, +4}.
pub fn admissible_sequences(len: usize) -> Vec<Vec<u32>> {
    fn extend(seq: &mut Vec<u32>, len: usize, out: &mut Vec<Vec<u32>>) {
        let last = *seq.last().unwrap();
        let remaining = len - seq.len();
        if remaining == 0 {
            if last == 4 {
                out.push(seq.clone());
            }
            return;
        }
        // must be able to come back down to 4
        for next in [last.wrapping_sub(4), last, last + 4] {
            if next >= 4 && (next - 4) as usize / 4 < remaining {
                seq.push(next);
                extend(seq, len, out);
                seq.pop();
            }
        }
    }
    if len == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    extend(&mut vec![4], len, &mut out);
    out.sort();
    out
}

/// Admissible sequences (any length) with Σmᵢ ≤ `max_sum`.
pub fn admissible_sequences_up_to_sum(max_sum: u32) -> Vec<Vec<u32>> {
    fn extend(seq: &mut Vec<u32>, sum: u32, max_sum: u32, out: &mut Vec<Vec<u32>>) {
        let last = *seq.last().unwrap();
        if last == 4 {
            out.push(seq.clone());
        }
        for next in [last.wrapping_sub(4), last, last + 4] {
            // coming back to 4 afterwards costs at least 4 more
            let closing = if next == 4 { 0 } else { 4 };
            if next >= 4 && sum + next + closing <= max_sum {
                seq.push(next);
                extend(seq, sum + next, max_sum, out);
                seq.pop();
            }
        }
    }
    let mut out = Vec::new();
    if max_sum >= 4 {
        extend(&mut vec![4], 4, max_sum, &mut out);
    }
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub achieved: Vec<Vec<u32>>,
    pub admissible: Vec<Vec<u32>>,
    /// One witness per achieved signature (the lexicographically first).
    pub witnesses: Vec<(Vec<u32>, Vec<u32>)>,
}

/// Checks that the signatures achieved by n-crossings are exactly the
/// admissible sequences of length n - 1.
pub fn verify_classification(n: usize) -> Result<ClassificationReport, InvariantError> {
    let census = enumerate_crossings(n, false).map_err(|_| InvariantError::Classification {
        n,
        achieved_only: Vec::new(),
        admissible_only: Vec::new(),
    })?;
    let achieved: BTreeSet<Vec<u32>> = census.entries.keys().cloned().collect();
    let admissible: BTreeSet<Vec<u32>> = admissible_sequences(n - 1).into_iter().collect();
    debug_assert!(admissible.iter().all(|s| is_admissible(s).is_ok()));
    if achieved != admissible {
        return Err(InvariantError::Classification {
            n,
            achieved_only: achieved.difference(&admissible).cloned().collect(),
            admissible_only: admissible.difference(&achieved).cloned().collect(),
        });
    }
    Ok(ClassificationReport {
        n,
        witnesses: census
            .entries
            .iter()
            .map(|(sig, perms)| (sig.clone(), perms[0].clone()))
            .collect(),
        achieved: achieved.into_iter().collect(),
        admissible: admissible.into_iter().collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub min_mccb: f64,
    pub min_witnesses: Vec<Vec<u32>>,
    pub max_mccb: f64,
    pub max_witnesses: Vec<Vec<u32>>,
}

/// Smallest and largest MCCB contribution of a single n-crossing, checked
/// against (n-1) v_oct and the worst-case table value.
pub fn extremal_stats(n: usize) -> Result<ExtremalReport, InvariantError> {
    const TOL: f64 = 1e-9;
    let census = enumerate_crossings(n, false).expect("n within cap");
    let mut by_volume: Vec<(f64, &Vec<Vec<u32>>)> = census
        .entries
        .iter()
        .map(|(sig, perms)| (signature_volume(sig), perms))
        .collect();
    by_volume.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (min_mccb, min_perms) = by_volume[0];
    let (max_mccb, max_perms) = *by_volume.last().unwrap();

    let best = (n - 1) as f64 * v_oct();
    if (min_mccb - best).abs() > TOL * best {
        return Err(InvariantError::Extremal {
            n,
            what: "minimum",
            got: min_mccb,
            expected: best,
        });
    }
    if n >= 3 {
        let worst = table1(&[n]).expect("n >= 3")[0].worst_mccb;
        if (max_mccb - worst).abs() > TOL * worst {
            return Err(InvariantError::Extremal {
                n,
                what: "maximum",
                got: max_mccb,
                expected: worst,
            });
        }
    }
    Ok(ExtremalReport {
        n,
        min_mccb,
        min_witnesses: min_perms.clone(),
        max_mccb,
        max_witnesses: max_perms.clone(),
    })
}

/// Signature of the identity crossing 1, 2, …, n.
pub fn identity_signature(n: usize) -> Vec<u32> {
    signature_sizes(Crossing::identity(n).levels())
}
