//! Building a crossing with a prescribed crossing-centered signature.
//!
//! A sequence `m_1, …, m_k` is admissible when it starts and ends with 4 and
//! neighbouring entries differ by 0 or 4. Every admissible sequence is the
//! signature of some (k+1)-crossing. Two constructions build one:
//!
//! * [`add4`] wraps a crossing in a new top and bottom strand, turning
//!   `m` into `4, m + 4, 4`;
//! * [`concatenate`] stacks one crossing under another, joining their
//!   signatures at a shared 4.
//!
//! Each construction re-checks its output signature before returning it.

use serde::Serialize;

use crate::decomposition::signature_sizes;
use crate::diagram::Crossing;
use crate::error::{InvariantError, SequenceError};

/// Default cap on Σmᵢ for [`realize`].
pub const DEFAULT_MAX_SUM: u64 = 40_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SizeSequence(pub Vec<u32>);

impl SizeSequence {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&m| m as u64).sum()
    }
}

impl std::str::FromStr for SizeSequence {
    type Err = SequenceError;

    /// Comma-separated integers, e.g. `4,8,8,4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| SequenceError::Parse(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SizeSequence(entries))
    }
}

/// Checks both admissibility conditions; the error names the first failure.
/// Gap indices are 1-based: gap `i` lies between `m_i` and `m_{i+1}`.
pub fn is_admissible(s: &[u32]) -> Result<(), SequenceError> {
    let (&first, &last) = match (s.first(), s.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(SequenceError::Empty),
    };
    if first != 4 {
        return Err(SequenceError::FirstNotFour(first));
    }
    for (i, w) in s.windows(2).enumerate() {
        let gap = w[0].abs_diff(w[1]);
        if gap != 0 && gap != 4 {
            return Err(SequenceError::BadGap { index: i + 1, gap });
        }
    }
    if last != 4 {
        return Err(SequenceError::LastNotFour(last));
    }
    Ok(())
}

fn verified(
    operation: &'static str,
    levels: Vec<u32>,
    expected: &[u32],
) -> Result<Crossing, InvariantError> {
    let got = signature_sizes(&levels);
    if got != expected {
        return Err(InvariantError::Construction {
            operation,
            levels,
            got,
            expected: expected.to_vec(),
        });
    }
    Ok(Crossing::new(0, &levels).expect("construction yields a permutation"))
}

/// Adds a new top strand just clockwise of the bottom strand and a new bottom
/// strand just clockwise of that. Signature `m` becomes `4, m + 4, 4`.
pub fn add4(c: &Crossing) -> Result<Crossing, InvariantError> {
    let n = c.size() as u32;
    let bottom = c.bottom_position();
    let mut levels: Vec<u32> = Vec::with_capacity(c.size() + 2);
    for (j, &l) in c.levels().iter().enumerate() {
        levels.push(l + 1);
        if j == bottom {
            levels.push(1);
            levels.push(n + 2);
        }
    }
    let mut expected = vec![4];
    expected.extend(signature_sizes(c.levels()).iter().map(|m| m + 4));
    expected.push(4);
    verified("add4", levels, &expected)
}

/// Stacks `lower` beneath `upper`: `upper` loses its bottom strand, `lower`
/// loses its top strand, and the remaining strands of `lower` go into the two
/// opposite regions just clockwise of where `upper`'s bottom strand was,
/// keeping their cyclic order with the old top strand first.
///
/// The signature of the result is `upper`'s followed by `lower`'s without its
/// leading 4.
pub fn concatenate(upper: &Crossing, lower: &Crossing) -> Result<Crossing, InvariantError> {
    let u = upper.size() as u32;
    let top = upper.levels();
    let bottom = upper.bottom_position();
    // lower is canonical, so its top strand sits at position 0
    let tail: Vec<u32> = lower.levels()[1..].iter().map(|&l| l + u - 2).collect();

    let mut expected = signature_sizes(upper.levels());
    expected.extend_from_slice(&signature_sizes(lower.levels())[1..]);

    let splice = |inserted: &[u32]| {
        let mut levels = Vec::with_capacity(top.len() + inserted.len() - 1);
        levels.extend_from_slice(&top[..bottom]);
        levels.extend_from_slice(inserted);
        levels.extend_from_slice(&top[bottom + 1..]);
        levels
    };
    match verified("concatenate", splice(&tail), &expected) {
        Ok(c) => Ok(c),
        Err(first) => {
            // the other interleaving of lower's endpoint arcs
            let reversed: Vec<u32> = tail.iter().rev().copied().collect();
            verified("concatenate", splice(&reversed), &expected).map_err(|_| first)
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum RealizeError {
    #[error(transparent)]
    Inadmissible(#[from] SequenceError),
    #[error(transparent)]
    Internal(#[from] InvariantError),
}

/// Realizes an admissible sequence with the default size cap.
pub fn realize(s: &[u32]) -> Result<Crossing, RealizeError> {
    realize_capped(s, DEFAULT_MAX_SUM)
}

/// Builds a crossing whose signature is `s`.
///
/// The sequence is split at every interior 4; each piece has no interior 4
/// and is built by peeling off its outer 4s, subtracting 4 from what is left
/// and wrapping the smaller crossing with [`add4`]. Pieces are then joined
/// right to left, which is the same as always splitting at the leftmost
/// interior 4.
pub fn realize_capped(s: &[u32], max_sum: u64) -> Result<Crossing, RealizeError> {
    is_admissible(s)?;
    let sum: u64 = s.iter().map(|&m| m as u64).sum();
    if sum > max_sum {
        return Err(SequenceError::TooLarge { sum, cap: max_sum }.into());
    }
    if s.iter().all(|&m| m == 4) {
        return Ok(Crossing::identity(s.len() + 1));
    }
    let cuts: Vec<usize> = (1..s.len() - 1).filter(|&i| s[i] == 4).collect();
    let mut bounds = vec![0];
    bounds.extend(&cuts);
    bounds.push(s.len() - 1);
    let mut pieces = bounds.windows(2).map(|w| &s[w[0]..=w[1]]).rev();
    let mut acc = realize_piece(pieces.next().unwrap())?;
    for piece in pieces {
        acc = concatenate(&realize_piece(piece)?, &acc)?;
    }
    Ok(acc)
}

// A piece has 4 at both ends and nowhere else.
fn realize_piece(s: &[u32]) -> Result<Crossing, InvariantError> {
    match s.len() {
        1 | 2 => Ok(Crossing::identity(s.len() + 1)),
        _ => {
            let inner: Vec<u32> = s[1..s.len() - 1].iter().map(|m| m - 4).collect();
            let core = if inner.iter().all(|&m| m == 4) {
                Crossing::identity(inner.len() + 1)
            } else {
                realize_capped(&inner, u64::MAX).map_err(|e| match e {
                    RealizeError::Internal(e) => e,
                    RealizeError::Inadmissible(_) => unreachable!("inner of a piece is admissible"),
                })?
            };
            add4(&core)
        }
    }
}
