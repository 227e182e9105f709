use serde::Serialize;

use super::{binomial2, signature_volume, v_oct};
use crate::error::NumericError;

/// Best-case, worst-case and octahedral bound contributed by one n-crossing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub best_mccb: f64,
    pub worst_mccb: f64,
    pub octahedral: f64,
}

/// The admissible signature of largest sum for an n-crossing:
/// `4, 8, …, 4⌊n/2⌋, …, 8, 4`.
pub fn worst_case_signature(n: usize) -> Vec<u32> {
    (1..n).map(|i| 4 * i.min(n - i) as u32).collect()
}

pub fn table1(ns: &[usize]) -> Result<Vec<TableRow>, NumericError> {
    ns.iter()
        .map(|&n| {
            if n < 3 {
                return Err(NumericError::SizeTooSmall(n));
            }
            Ok(TableRow {
                n,
                best_mccb: (n - 1) as f64 * v_oct(),
                worst_mccb: signature_volume(&worst_case_signature(n)),
                octahedral: binomial2(n) * v_oct(),
            })
        })
        .collect()
}
