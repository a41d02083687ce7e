//! State scalars read directly off a DWF: the Minkowski squared norm
//! S²_(n) = Tr(ρρ̃), pure-state n-concurrence, mixedness and the
//! indistinguishability of a state from its spin flip.
//!
//! All DWF-side formulas use the inner-product rule
//! Tr(ρσ) = N·Σ_α W_α V_α.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quantops::pauli_weight;
use crate::transform::{DwfVector, HadamardTransform, StokesVector, TransformKind};

/// Purity slack accepted by [`concurrence_pure`].
pub const PURITY_TOL: f64 = 1e-6;
/// Negative round-off under the concurrence square root tolerated as zero.
pub const CLAMP_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StateScalars {
    pub minkowski_sq: f64,
    pub purity: f64,
    pub mixedness: f64,
    pub indistinguishability: f64,
    /// Present only for pure states.
    pub concurrence: Option<f64>,
    /// |S² + M − I|
    pub identity_residual: f64,
}

fn order(w: &DwfVector) -> f64 {
    (1u32 << w.n()) as f64
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn spin_flipped(w: &DwfVector, t: &HadamardTransform) -> Result<Vec<f64>> {
    if t.kind() != TransformKind::SpinFlipDwf {
        return Err(Error::InvalidArgument(format!(
            "expected the spin-flip DWF transform, got {:?}",
            t.kind()
        )));
    }
    t.apply(w.values())
}

/// N·Σ_k (−1)^wt(k) S_k², wt(k) the number of non-identity Pauli factors.
/// Equals Tr(ρρ̃) with S_{0…0} = 1/2^n.
pub fn minkowski_sq_from_stokes(s: &StokesVector) -> f64 {
    let n = s.n();
    let sum: f64 = s
        .values()
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let sign = if pauli_weight(k, n).is_multiple_of(2) { 1.0 } else { -1.0 };
            sign * v * v
        })
        .sum();
    (1u32 << n) as f64 * sum
}

/// N·Wᵀ·(T·W) = Tr(ρρ̃), for pure and mixed states alike.
pub fn minkowski_sq_from_dwf(w: &DwfVector, t: &HadamardTransform) -> Result<f64> {
    let flipped = spin_flipped(w, t)?;
    Ok(order(w) * dot(w.values(), &flipped))
}

/// Tr(ρ²) = N·Σ W_α².
pub fn purity(w: &DwfVector) -> f64 {
    order(w) * dot(w.values(), w.values())
}

/// M(ρ) = 1 − Tr(ρ²) = 1 − N·Σ W_α².
pub fn mixedness(w: &DwfVector) -> f64 {
    1.0 - purity(w)
}

/// I(ρ,ρ̃) = 1 − ½·Tr[(ρ − ρ̃)²] = 1 − (N/2)·|W − W̃|².
pub fn indistinguishability(w: &DwfVector, t: &HadamardTransform) -> Result<f64> {
    let flipped = spin_flipped(w, t)?;
    let dist: f64 = w
        .values()
        .iter()
        .zip(&flipped)
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    Ok(1.0 - 0.5 * order(w) * dist)
}

/// C = √(N·Wᵀ·T·W) for a pure state.
pub fn concurrence_pure(w: &DwfVector, t: &HadamardTransform) -> Result<f64> {
    let p = purity(w);
    if (p - 1.0).abs() > PURITY_TOL {
        return Err(Error::invariant("concurrence needs a pure state", (p - 1.0).abs()));
    }
    let sq = minkowski_sq_from_dwf(w, t)?;
    if sq < -CLAMP_TOL {
        return Err(Error::invariant("negative Tr(ρρ̃)", -sq));
    }
    Ok(sq.max(0.0).sqrt())
}

pub fn state_scalars(w: &DwfVector, t: &HadamardTransform) -> Result<StateScalars> {
    let minkowski_sq = minkowski_sq_from_dwf(w, t)?;
    let purity = purity(w);
    let mixedness = 1.0 - purity;
    let indistinguishability = indistinguishability(w, t)?;
    let concurrence = if (purity - 1.0).abs() <= PURITY_TOL {
        Some(concurrence_pure(w, t)?)
    } else {
        None
    };
    Ok(StateScalars {
        minkowski_sq,
        purity,
        mixedness,
        indistinguishability,
        concurrence,
        identity_residual: (minkowski_sq + mixedness - indistinguishability).abs(),
    })
}
