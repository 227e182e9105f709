use serde::{Deserialize, Serialize};

use crate::error::DiagramError;

/// One n-crossing: the levels of its strands read clockwise from above.
///
/// Position `j` holds strand `j`; level 1 is the top strand. Stored levels are
/// always in canonical rotation, with the top strand at position 0. The disk
/// around the crossing carries `2n` slots numbered clockwise, and strand `j`
/// owns slots `j` and `j + n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    id: u32,
    levels: Vec<u32>,
    #[serde(skip)]
    rotation: u32,
}

impl Crossing {
    /// Validates `levels` and rotates them into canonical form.
    pub fn new(id: u32, levels: &[u32]) -> Result<Self, DiagramError> {
        check_permutation(id, levels)?;
        let top = levels.iter().position(|&l| l == 1).unwrap();
        let n = levels.len();
        let canonical = (0..n).map(|j| levels[(j + top) % n]).collect();
        Ok(Crossing {
            id,
            levels: canonical,
            rotation: top as u32,
        })
    }

    /// A free-standing crossing (id 0). Panics on an invalid permutation.
    pub fn from_levels(levels: &[u32]) -> Self {
        Crossing::new(0, levels).expect("invalid level permutation")
    }

    /// The crossing whose levels are `1, 2, …, n` clockwise.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 2);
        Crossing {
            id: 0,
            levels: (1..=n as u32).collect(),
            rotation: 0,
        }
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn with_id(mut self, id: u32) -> Self {
        self.id = id;
        self
    }

    pub fn size(&self) -> usize {
        self.levels.len()
    }

    pub fn slot_count(&self) -> u32 {
        2 * self.levels.len() as u32
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    /// Positions the input was rotated by to put the top strand first.
    pub fn rotation(&self) -> u32 {
        self.rotation
    }

    /// Maps a slot numbered against the original (pre-canonical) rotation to
    /// the canonical numbering.
    pub fn canonical_slot(&self, raw_slot: u32) -> u32 {
        let m = self.slot_count();
        (raw_slot + m - self.rotation % m) % m
    }

    /// Inverse of [`Crossing::canonical_slot`].
    pub fn raw_slot(&self, slot: u32) -> u32 {
        (slot + self.rotation) % self.slot_count()
    }

    pub fn level_at_slot(&self, slot: u32) -> u32 {
        self.levels[slot as usize % self.levels.len()]
    }

    /// The slot at the other end of the strand through `slot`.
    pub fn through(&self, slot: u32) -> u32 {
        (slot + self.levels.len() as u32) % self.slot_count()
    }

    /// Position of the bottom strand (level n).
    pub fn bottom_position(&self) -> usize {
        let n = self.levels.len() as u32;
        self.levels.iter().position(|&l| l == n).unwrap()
    }

    /// The same crossing viewed from below: cyclic order reversed.
    pub fn mirrored(&self) -> Self {
        let n = self.levels.len();
        let mut levels = Vec::with_capacity(n);
        levels.push(self.levels[0]);
        levels.extend(self.levels[1..].iter().rev());
        Crossing {
            id: self.id,
            levels,
            rotation: 0,
        }
    }

    /// The crossing turned upside down: level `l` becomes `n + 1 - l`.
    pub fn flipped(&self) -> Self {
        let n = self.levels.len() as u32;
        let flipped: Vec<u32> = self.levels.iter().map(|&l| n + 1 - l).collect();
        Crossing::new(self.id, &flipped).unwrap()
    }
}

fn check_permutation(id: u32, levels: &[u32]) -> Result<(), DiagramError> {
    let n = levels.len();
    if n < 2 {
        return Err(DiagramError::TooFewStrands {
            crossing: id,
            size: n,
        });
    }
    let mut seen = vec![false; n];
    for &l in levels {
        let ok = l >= 1 && (l as usize) <= n && !seen[l as usize - 1];
        if !ok {
            return Err(DiagramError::NotAPermutation {
                crossing: id,
                size: n,
                levels: levels.to_vec(),
            });
        }
        seen[l as usize - 1] = true;
    }
    Ok(())
}
