//! Operator algebra on the 2^n-dimensional Hilbert space: Pauli tensors,
//! phase-space translation unitaries, mutually unbiased bases, line
//! projectors and phase-point operators.

mod matrix;
mod mub;
mod points;

pub use matrix::{
    pauli, pauli_labels, pauli_tensor, pauli_weight, ComplexMatrix, DensityMatrix, StateVector,
    CHAIN_TOL, EXACT_TOL, PSD_TOL,
};
pub use mub::{assign_net, build_mubs, LineAssignment, MubSystem};
pub use points::{
    density_from_dwf, dwf_from_density, dwf_of_operator, operator_from_dwf,
    phase_point_operators, PhasePointOperators,
};

use crate::gf2n::{FieldBasis, FieldElement};

/// Unitary for the phase-space translation `(alpha, beta)`:
/// `⊗_k X^(a_k) Z^(b_k)`, where `a` are the coordinates of `alpha` in the
/// field basis and `b` those of `beta` in the dual basis. Factor `k`
/// corresponds to basis element `e_k`; factor 0 is the most significant
/// qubit. No global phase is attached.
///
/// Acting on computational states, `X^α |q⟩ = |q + α⟩` and
/// `Z^β |q⟩ = (-1)^Tr(qβ) |q⟩`.
pub fn translation_unitary(alpha: FieldElement, beta: FieldElement, basis: &FieldBasis) -> ComplexMatrix {
    let a = basis.coordinates(alpha);
    let b = basis.dual_coordinates(beta);
    let x = pauli(1).expect("valid index");
    let z = pauli(3).expect("valid index");
    let id = ComplexMatrix::identity(2);
    (0..basis.field().degree()).fold(ComplexMatrix::identity(1), |acc, k| {
        let factor = match (a >> k & 1, b >> k & 1) {
            (0, 0) => id.clone(),
            (1, 0) => x.clone(),
            (0, 1) => z.clone(),
            _ => &x * &z,
        };
        acc.kron(&factor)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::Gf2n;
    use num_complex::Complex64;

    fn el(b: u8) -> FieldElement {
        FieldElement::from_bits(b)
    }

    #[test]
    fn single_qubit_translations() {
        let basis = FieldBasis::polynomial(Gf2n::new(1).unwrap());
        assert_eq!(translation_unitary(el(0), el(0), &basis), ComplexMatrix::identity(2));
        assert_eq!(translation_unitary(el(1), el(0), &basis), pauli(1).unwrap());
        // X·Z = -iσy
        let xz = translation_unitary(el(1), el(1), &basis);
        let expect = pauli(2).unwrap().scale(Complex64::new(0.0, -1.0));
        assert!(xz.approx_eq(&expect, 1e-15));
    }

    #[test]
    fn translations_are_unitary_and_multiply_projectively() {
        for n in 1..=3 {
            let f = Gf2n::new(n).unwrap();
            let basis = FieldBasis::polynomial(f);
            let dim = f.order();
            for a in f.elements() {
                for b in f.elements() {
                    let t = translation_unitary(a, b, &basis);
                    assert!((&t * &t.adjoint()).approx_eq(&ComplexMatrix::identity(dim), 1e-12));
                    for c in f.elements() {
                        let u = translation_unitary(c, el(0), &basis);
                        let prod = &t * &u;
                        let direct = translation_unitary(a + c, b, &basis);
                        // equal up to a sign
                        let plus = prod.approx_eq(&direct, 1e-12);
                        let minus = prod.approx_eq(&direct.scale_real(-1.0), 1e-12);
                        assert!(plus || minus);
                    }
                }
            }
        }
    }

    #[test]
    fn shift_and_phase_actions() {
        let f = Gf2n::new(2).unwrap();
        let basis = FieldBasis::polynomial(f);
        // computational index of q: coordinate k lives on factor k, factor 0 most significant
        let ket_index = |q: FieldElement| -> usize {
            let x = basis.coordinates(q);
            (0..2).map(|k| ((x >> k & 1) as usize) << (1 - k)).sum()
        };
        for alpha in f.elements() {
            let t = translation_unitary(alpha, el(0), &basis);
            for q in f.elements() {
                let out = ket_index(q + alpha);
                assert!((t.get(out, ket_index(q)).re - 1.0).abs() < 1e-15);
            }
        }
        for beta in f.elements() {
            let t = translation_unitary(el(0), beta, &basis);
            for q in f.elements() {
                let sign = if f.trace(f.mul(q, beta)) == 0 { 1.0 } else { -1.0 };
                let i = ket_index(q);
                assert!((t.get(i, i).re - sign).abs() < 1e-15);
            }
        }
    }
}
