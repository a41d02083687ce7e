//! Random states for property checks and sampling demos.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::quantops::{ComplexMatrix, DensityMatrix, StateVector};

fn gaussian(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state vector of `n` qubits.
pub fn pure_vector(n: u32, rng: &mut impl Rng) -> StateVector {
    let dim = 1usize << n;
    let v = StateVector::from_fn(dim, |_, _| gaussian(rng));
    let norm = v.norm();
    v.unscale(norm)
}

pub fn pure_state(n: u32, rng: &mut impl Rng) -> DensityMatrix {
    DensityMatrix::from_pure(&pure_vector(n, rng)).expect("nonzero vector")
}

/// Mixed state from the Hilbert–Schmidt (Ginibre) ensemble.
pub fn mixed_state(n: u32, rng: &mut impl Rng) -> DensityMatrix {
    let dim = 1usize << n;
    let g = ComplexMatrix::from_fn(dim, |_, _| gaussian(rng));
    let gg = &g * &g.adjoint();
    let tr = gg.trace().re;
    DensityMatrix::new(gg.scale_real(1.0 / tr)).expect("Ginibre product is a state")
}

/// Haar-random single-qubit unitary.
pub fn qubit_unitary(rng: &mut impl Rng) -> ComplexMatrix {
    let v = pure_vector(1, rng);
    let (a, b) = (v[0], v[1]);
    let phase = Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    ComplexMatrix::from_fn(2, |r, c| match (r, c) {
        (0, 0) => a,
        (0, 1) => -b.conj() * phase,
        (1, 0) => b,
        _ => a.conj() * phase,
    })
}
