use num_complex::Complex64;

use super::matrix::{ComplexMatrix, DensityMatrix, CHAIN_TOL};
use super::mub::LineAssignment;
use crate::error::{Error, Result};
use crate::phasespace::{PhasePoint, QuantumNet};
use crate::transform::DwfVector;

/// The N² phase-point operators A_α of one quantum net, indexed by
/// `q·N + p`, together with the line assignment they were built from.
#[derive(Clone, Debug)]
pub struct PhasePointOperators {
    assignment: LineAssignment,
    ops: Vec<ComplexMatrix>,
}

impl PhasePointOperators {
    pub fn net(&self) -> &QuantumNet {
        self.assignment.net()
    }

    pub fn degree(&self) -> u32 {
        self.assignment.space().degree()
    }

    /// N = 2^n
    pub fn order(&self) -> usize {
        self.assignment.space().order()
    }

    pub fn assignment(&self) -> &LineAssignment {
        &self.assignment
    }

    pub fn ops(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    pub fn at(&self, pt: PhasePoint) -> &ComplexMatrix {
        &self.ops[pt.index(self.order())]
    }
}

/// A_α = Σ_{λ ∋ α} Q(λ) − I for every point, checked against the
/// phase-point invariants (Hermitian, unit trace, Tr(A_α A_β) = N δ_αβ,
/// Σ_α A_α = N·I).
pub fn phase_point_operators(assignment: &LineAssignment) -> Result<PhasePointOperators> {
    let space = assignment.space();
    let dim = space.order();
    let id = ComplexMatrix::identity(dim);

    let ops: Vec<ComplexMatrix> = space
        .points()
        .iter()
        .map(|&pt| {
            let sum = space
                .lines_through(pt)
                .fold(ComplexMatrix::zeros(dim), |acc, line| {
                    &acc + assignment.projector(line.striation, line.c)
                });
            &sum - &id
        })
        .collect();

    for (k, a) in ops.iter().enumerate() {
        let h = a.hermiticity_residual();
        if h > CHAIN_TOL {
            return Err(Error::invariant(format!("A_{k} is not Hermitian"), h));
        }
        let t = (a.trace() - Complex64::new(1.0, 0.0)).norm();
        if t > CHAIN_TOL {
            return Err(Error::invariant(format!("Tr A_{k} != 1"), t));
        }
    }
    for (i, a) in ops.iter().enumerate() {
        for (j, b) in ops.iter().enumerate().skip(i) {
            let expect = if i == j { dim as f64 } else { 0.0 };
            let r = (a.trace_product(b) - Complex64::new(expect, 0.0)).norm();
            if r > CHAIN_TOL {
                return Err(Error::invariant(
                    format!("Tr(A_{i} A_{j}) != N δ"),
                    r,
                ));
            }
        }
    }
    let total = ops.iter().fold(ComplexMatrix::zeros(dim), |acc, a| &acc + a);
    let r = total.max_abs_diff(&id.scale_real(dim as f64));
    if r > CHAIN_TOL {
        return Err(Error::invariant("Σ A_α != N·I", r));
    }

    Ok(PhasePointOperators {
        assignment: assignment.clone(),
        ops,
    })
}

/// (1/N)·Tr(X A_α) for every point; `X` must make every trace real.
/// Works for any Hermitian operator, not only states.
pub fn dwf_of_operator(x: &ComplexMatrix, ops: &PhasePointOperators) -> Result<Vec<f64>> {
    let dim = ops.order();
    if x.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: x.dim(),
        });
    }
    ops.ops()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let t = x.trace_product(a);
            if t.im.abs() > CHAIN_TOL {
                Err(Error::invariant(
                    format!("Tr(X A_{k}) has an imaginary part"),
                    t.im.abs(),
                ))
            } else {
                Ok(t.re / dim as f64)
            }
        })
        .collect()
}

/// Σ_α w_α A_α, with no normalization requirement.
pub fn operator_from_dwf(values: &[f64], ops: &PhasePointOperators) -> Result<ComplexMatrix> {
    if values.len() != ops.ops().len() {
        return Err(Error::DimensionMismatch {
            expected: ops.ops().len(),
            actual: values.len(),
        });
    }
    Ok(values
        .iter()
        .zip(ops.ops())
        .fold(ComplexMatrix::zeros(ops.order()), |acc, (&w, a)| {
            &acc + &a.scale_real(w)
        }))
}

/// W_α = (1/N)·Tr(ρ A_α).
pub fn dwf_from_density(rho: &DensityMatrix, ops: &PhasePointOperators) -> Result<DwfVector> {
    let values = dwf_of_operator(rho.matrix(), ops)?;
    DwfVector::new(ops.degree(), values)
}

/// ρ = Σ_α W_α A_α. The DWF must sum to 1 and reconstruct a valid state.
pub fn density_from_dwf(w: &DwfVector, ops: &PhasePointOperators) -> Result<DensityMatrix> {
    let total: f64 = w.values().iter().sum();
    if (total - 1.0).abs() > CHAIN_TOL {
        return Err(Error::invariant("DWF does not sum to 1", (total - 1.0).abs()));
    }
    let rho = operator_from_dwf(w.values(), ops)?;
    DensityMatrix::with_tolerance(rho, CHAIN_TOL)
}
