//! The Lobachevsky function Λ(θ) = −∫₀^θ ln|2 sin t| dt.
//!
//! Λ is odd and π-periodic with Fourier series ½ Σ sin(2kθ)/k². Summing that
//! series directly converges like 1/k, so after reducing θ into [−π/2, π/2]
//! we use its resummed form in x = 2θ ∈ [−π, π]:
//!
//! ```text
//! 2Λ(x/2) = x − x ln|x| + Σ_{k≥1} 2ζ(2k) / ((2π)^{2k} · 2k(2k+1)) · x^{2k+1}
//! ```
//!
//! whose terms shrink at least like 4^{-k} on the reduced range.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::NumericError;

const TERMS: usize = 40;

fn coefficients() -> &'static [f64; TERMS] {
    static COEFFS: OnceLock<[f64; TERMS]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut c = [0.0; TERMS];
        let two_pi_sq = (2.0 * PI) * (2.0 * PI);
        let mut scale = 1.0;
        for (i, slot) in c.iter_mut().enumerate() {
            let k = (i + 1) as f64;
            scale /= two_pi_sq;
            *slot = 2.0 * zeta_even(i + 1) * scale / (2.0 * k * (2.0 * k + 1.0));
        }
        c
    })
}

/// ζ(2k) for k ≥ 1: a short partial sum plus an Euler–Maclaurin tail.
fn zeta_even(k: usize) -> f64 {
    if k == 1 {
        return PI * PI / 6.0;
    }
    let s = 2.0 * k as f64;
    const N: usize = 64;
    let mut sum = 0.0;
    for n in (1..N).rev() {
        sum += (n as f64).powf(-s);
    }
    let nf = N as f64;
    let tail = nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s) + s / 12.0 * nf.powf(-s - 1.0)
        - s * (s + 1.0) * (s + 2.0) / 720.0 * nf.powf(-s - 3.0);
    sum + tail
}

fn reduced(theta: f64) -> f64 {
    theta - PI * (theta / PI).round()
}

/// Λ(θ), accurate to about 1e-15 absolute.
pub fn lobachevsky(theta: f64) -> Result<f64, NumericError> {
    if !theta.is_finite() {
        return Err(NumericError::NonFinite(theta));
    }
    let r = reduced(theta);
    if r == 0.0 {
        return Ok(0.0);
    }
    let x = 2.0 * r;
    let x2 = x * x;
    // Horner in x² over the resummed tail
    let coeffs = coefficients();
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * x2 + c;
    }
    let clausen = x - x * x.abs().ln() + acc * x2 * x;
    Ok(0.5 * clausen)
}

/// Λ(θ) for arguments already known to be finite.
pub(crate) fn lob(theta: f64) -> f64 {
    lobachevsky(theta).expect("finite argument")
}
