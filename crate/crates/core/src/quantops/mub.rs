use std::sync::Arc;

use num_complex::Complex64;

use super::matrix::{ComplexMatrix, StateVector, CHAIN_TOL, EXACT_TOL};
use super::translation_unitary;
use crate::error::{Error, Result};
use crate::gf2n::{FieldBasis, FieldElement};
use crate::phasespace::{PhaseSpace, QuantumNet};

/// The N+1 mutually unbiased bases, basis `i` attached to striation `i`.
///
/// Basis `i` is the common eigenbasis of the translations that leave the
/// lines of striation `i` invariant. Its generators are the translations by
/// `e_k · d` (d the striation direction, e_k the field basis). Each generator
/// `U` squares to ±1; `G = U` or `G = iU` is then a Hermitian involution,
/// and vectors are ordered by their ±1 eigenvalues under `G_0, G_1, …`
/// lexicographically with +1 first.
#[derive(Clone, Debug)]
pub struct MubSystem {
    basis: Arc<FieldBasis>,
    space: Arc<PhaseSpace>,
    bases: Vec<Vec<StateVector>>,
}

impl MubSystem {
    pub fn field_basis(&self) -> &FieldBasis {
        &self.basis
    }

    pub fn space(&self) -> &PhaseSpace {
        &self.space
    }

    pub fn bases(&self) -> &[Vec<StateVector>] {
        &self.bases
    }

    pub fn degree(&self) -> u32 {
        self.space.degree()
    }

    /// Striation index → basis index. The identity by construction.
    pub fn basis_for_striation(&self, striation: usize) -> &[StateVector] {
        &self.bases[striation]
    }
}

fn hermitian_generator(u: ComplexMatrix) -> ComplexMatrix {
    let sq = &u * &u;
    if sq.get(0, 0).re > 0.0 {
        u
    } else {
        u.scale(Complex64::new(0.0, 1.0))
    }
}

/// Rotate so the first entry of non-negligible modulus is real positive.
fn fix_phase(v: StateVector) -> StateVector {
    let lead = v
        .iter()
        .find(|z| z.norm() > 1e-9)
        .copied()
        .unwrap_or(Complex64::new(1.0, 0.0));
    let phase = lead.conj() / lead.norm();
    v * phase
}

/// Build the MUB system for the given field basis.
pub fn build_mubs(basis: &FieldBasis) -> Result<MubSystem> {
    let space = PhaseSpace::new(*basis.field());
    let field = *basis.field();
    let n = field.degree() as usize;
    let dim = field.order();
    let id = ComplexMatrix::identity(dim);

    let mut bases = Vec::with_capacity(dim + 1);
    for striation in space.striations() {
        let (dq, dp) = striation.direction();
        let generators: Vec<ComplexMatrix> = basis
            .basis()
            .iter()
            .map(|&e| {
                let u = translation_unitary(field.mul(e, dq), field.mul(e, dp), basis);
                hermitian_generator(u)
            })
            .collect();

        for (i, g) in generators.iter().enumerate() {
            for h in &generators[i + 1..] {
                let comm = &(g * h) - &(h * g);
                let r = comm.max_abs_diff(&ComplexMatrix::zeros(dim));
                if r > EXACT_TOL {
                    return Err(Error::Numerical(format!(
                        "generators of striation {} do not commute (residual {r:e})",
                        striation.index
                    )));
                }
            }
        }

        let mut vectors = Vec::with_capacity(dim);
        for j in 0..dim {
            // bit (n-1-k) of j set <=> eigenvalue -1 under generator k
            let signs: Vec<f64> = (0..n)
                .map(|k| if j >> (n - 1 - k) & 1 == 1 { -1.0 } else { 1.0 })
                .collect();
            let proj = generators.iter().zip(&signs).fold(id.clone(), |acc, (g, &s)| {
                let half = (&id + &g.scale_real(s)).scale_real(0.5);
                &acc * &half
            });
            let rank = proj.trace().re;
            if (rank - 1.0).abs() > CHAIN_TOL {
                return Err(Error::Numerical(format!(
                    "joint eigenspace {j} of striation {} has dimension {rank}",
                    striation.index
                )));
            }
            let col = (0..dim)
                .max_by(|&a, &b| {
                    let na = proj.inner().column(a).norm();
                    let nb = proj.inner().column(b).norm();
                    na.total_cmp(&nb)
                })
                .expect("dim > 0");
            let raw: StateVector = proj.inner().column(col).into_owned();
            let v = fix_phase(raw.unscale(raw.norm()));
            for (g, &s) in generators.iter().zip(&signs) {
                let r = (g.apply(&v) - &v * Complex64::new(s, 0.0)).norm();
                if r > CHAIN_TOL {
                    return Err(Error::Numerical(format!(
                        "simultaneous diagonalization failed for striation {} (residual {r:e})",
                        striation.index
                    )));
                }
            }
            vectors.push(v);
        }
        bases.push(vectors);
    }

    Ok(MubSystem {
        basis: Arc::new(basis.clone()),
        space: Arc::new(space),
        bases,
    })
}

/// Vector assigned to every line under one quantum net, indexed
/// `[striation][intercept]`.
#[derive(Clone, Debug)]
pub struct LineAssignment {
    net: QuantumNet,
    space: Arc<PhaseSpace>,
    vectors: Vec<Vec<StateVector>>,
    projectors: Vec<Vec<ComplexMatrix>>,
}

impl LineAssignment {
    pub fn net(&self) -> &QuantumNet {
        &self.net
    }

    pub fn space(&self) -> &PhaseSpace {
        &self.space
    }

    pub fn vector(&self, striation: usize, intercept: FieldElement) -> &StateVector {
        &self.vectors[striation][intercept.index()]
    }

    /// Q(λ) = |v_λ⟩⟨v_λ|
    pub fn projector(&self, striation: usize, intercept: FieldElement) -> &ComplexMatrix {
        &self.projectors[striation][intercept.index()]
    }
}

/// Attach MUB vectors to lines for `net`.
///
/// The line `c = 0` of striation `i` gets vector `offsets[i]` of basis `i`;
/// the line with intercept `c` gets `T_τ` applied to it, τ being any
/// translation carrying line 0 onto line c. Every such τ is checked to give
/// the same projector.
pub fn assign_net(mubs: &MubSystem, net: &QuantumNet) -> Result<LineAssignment> {
    let space = &mubs.space;
    let basis = &mubs.basis;
    if net.degree() != space.degree() {
        return Err(Error::InvalidArgument(format!(
            "net for {} qubits used with a {}-qubit MUB system",
            net.degree(),
            space.degree()
        )));
    }

    let mut vectors = Vec::with_capacity(space.striations().len());
    let mut projectors = Vec::with_capacity(space.striations().len());
    for striation in space.striations() {
        let offset = net.offsets()[striation.index];
        let anchor = &mubs.bases[striation.index][offset.index()];
        let shifts = space.invariant_translations(striation);

        let mut line_vectors = Vec::with_capacity(space.order());
        for line in &striation.lines {
            let (a, b) = space.translation_to_line(striation.index, line.c);
            let v = fix_phase(translation_unitary(a, b, basis).apply(anchor));
            for &(da, db) in &shifts {
                let alt = translation_unitary(a + da, b + db, basis).apply(anchor);
                let overlap = v.dotc(&alt).norm();
                let r = (overlap - 1.0).abs();
                if r > EXACT_TOL {
                    return Err(Error::invariant(
                        format!(
                            "line assignment is not translation covariant (striation {}, c = {})",
                            striation.index, line.c
                        ),
                        r,
                    ));
                }
            }
            line_vectors.push(v);
        }
        projectors.push(line_vectors.iter().map(ComplexMatrix::projector).collect());
        vectors.push(line_vectors);
    }

    Ok(LineAssignment {
        net: net.clone(),
        space: Arc::clone(&mubs.space),
        vectors,
        projectors,
    })
}
