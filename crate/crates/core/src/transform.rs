//! Signed-matrix transforms between DWF and Stokes vectors.
//!
//! For each quantum net there is a matrix `H` with entries `±1/N` and
//! `S = H·W`. Since `N·H` is a Hadamard matrix of order N², `H` itself is
//! orthogonal and `W = Hᵀ·S`. The spin flip acts on DWFs through a second
//! signed matrix `T` (`W̃ = T·W`), the same for every net, and
//! `H̃ = H·T` maps a DWF straight to the Stokes vector of its spin flip.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2n::{check_degree, FieldElement};
use crate::phasespace::{enumerate_nets, QuantumNet};
use crate::quantops::{
    dwf_of_operator, pauli, pauli_labels, pauli_tensor, ComplexMatrix, DensityMatrix,
    PhasePointOperators, CHAIN_TOL,
};
use crate::Frame;

/// Phase-space DWF values, index `q·N + p`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DwfVector {
    n: u32,
    values: Vec<f64>,
}

impl DwfVector {
    pub fn new(n: u32, values: Vec<f64>) -> Result<Self> {
        check_degree(n)?;
        let expected = 1usize << (2 * n);
        if values.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                actual: values.len(),
            });
        }
        Ok(DwfVector { n, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// Stokes parameters S_{i_1…i_n} = (1/2^n)·Tr(ρ σ_{i_1}⊗…⊗σ_{i_n}),
/// index base-4 big-endian in (i_1, …, i_n).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StokesVector {
    n: u32,
    values: Vec<f64>,
}

impl StokesVector {
    pub fn new(n: u32, values: Vec<f64>) -> Result<Self> {
        check_degree(n)?;
        let expected = 1usize << (2 * n);
        if values.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                actual: values.len(),
            });
        }
        Ok(StokesVector { n, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn get(&self, labels: &[usize]) -> f64 {
        let idx = labels.iter().fold(0, |acc, &l| acc * 4 + l);
        self.values[idx]
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformKind {
    /// H: S = H·W
    StokesFromDwf,
    /// T: W̃ = T·W
    SpinFlipDwf,
    /// H̃ = H·T: S̃ = H̃·W
    SpinFlipStokes,
}

/// A `4^n × 4^n` matrix stored as exact signs with implicit scale `1/N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HadamardTransform {
    n: u32,
    net_index: u128,
    kind: TransformKind,
    signs: Vec<i8>,
}

impl HadamardTransform {
    fn from_signs(n: u32, net_index: u128, kind: TransformKind, signs: Vec<i8>) -> Self {
        debug_assert_eq!(signs.len(), 1 << (4 * n));
        HadamardTransform {
            n,
            net_index,
            kind,
            signs,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Net the transform was built from.
    pub fn net_index(&self) -> u128 {
        self.net_index
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    /// Matrix dimension, N².
    pub fn dim(&self) -> usize {
        1 << (2 * self.n)
    }

    /// The scale factor 1/N.
    pub fn scale(&self) -> f64 {
        1.0 / (1u32 << self.n) as f64
    }

    pub fn sign(&self, row: usize, col: usize) -> i8 {
        self.signs[row * self.dim() + col]
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.sign(row, col) as f64 * self.scale()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign_rows(&self) -> Vec<Vec<i8>> {
        self.signs.chunks(self.dim()).map(<[i8]>::to_vec).collect()
    }

    /// Dense matrix with the scale applied.
    pub fn matrix(&self) -> Vec<Vec<f64>> {
        self.sign_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|s| s as f64 * self.scale()).collect())
            .collect()
    }

    /// `mat · v`
    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        self.check_len(v.len())?;
        let d = self.dim();
        let scale = self.scale();
        Ok(self
            .signs
            .chunks(d)
            .map(|row| row.iter().zip(v).map(|(&s, &x)| s as f64 * x).sum::<f64>() * scale)
            .collect())
    }

    /// `matᵀ · v`
    pub fn apply_transpose(&self, v: &[f64]) -> Result<Vec<f64>> {
        self.check_len(v.len())?;
        let d = self.dim();
        let scale = self.scale();
        let mut out = vec![0.0; d];
        for (row, &x) in self.signs.chunks(d).zip(v) {
            for (o, &s) in out.iter_mut().zip(row) {
                *o += s as f64 * x;
            }
        }
        out.iter_mut().for_each(|o| *o *= scale);
        Ok(out)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: len,
            })
        }
    }

    /// `(N·mat)(N·mat)ᵀ = N²·I`, checked in exact integer arithmetic.
    pub fn is_hadamard(&self) -> bool {
        let d = self.dim();
        let rows: Vec<&[i8]> = self.signs.chunks(d).collect();
        rows.iter().enumerate().all(|(i, a)| {
            rows.iter().enumerate().all(|(j, b)| {
                let dot: i32 = a.iter().zip(b.iter()).map(|(&x, &y)| x as i32 * y as i32).sum();
                dot == if i == j { d as i32 } else { 0 }
            })
        })
    }

    /// Inverse of an orthogonal signed matrix: its transpose.
    pub fn inverse_matrix(&self) -> Vec<Vec<f64>> {
        let d = self.dim();
        (0..d)
            .map(|r| (0..d).map(|c| self.entry(c, r)).collect())
            .collect()
    }

    pub fn to_export(&self) -> HadamardExport {
        HadamardExport {
            n: self.n,
            net_index: self.net_index,
            kind: self.kind,
            scale: format!("1/{}", 1u32 << self.n),
            signs: self.sign_rows(),
        }
    }

    pub fn from_export(export: &HadamardExport) -> Result<Self> {
        check_degree(export.n)?;
        let d = 1usize << (2 * export.n);
        let expected_scale = format!("1/{}", 1u32 << export.n);
        if export.scale != expected_scale {
            return Err(Error::InvalidArgument(format!(
                "scale {} does not match {expected_scale}",
                export.scale
            )));
        }
        if export.signs.len() != d || export.signs.iter().any(|r| r.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                actual: export.signs.len(),
            });
        }
        if export.signs.iter().flatten().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidArgument("sign entries must be ±1".into()));
        }
        Ok(HadamardTransform::from_signs(
            export.n,
            export.net_index,
            export.kind,
            export.signs.concat(),
        ))
    }
}

/// JSON form of a transform. Rows follow the Stokes order for H and H̃ and
/// the DWF order for T; columns always follow the DWF order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HadamardExport {
    pub n: u32,
    pub net_index: u128,
    pub kind: TransformKind,
    pub scale: String,
    pub signs: Vec<Vec<i8>>,
}

fn to_sign(value: f64, order: usize, what: &str) -> Result<i8> {
    let scaled = value * order as f64;
    let sign = if scaled >= 0.0 { 1 } else { -1 };
    let r = (scaled - sign as f64).abs() / order as f64;
    if r > CHAIN_TOL {
        return Err(Error::invariant(format!("{what} entry is not ±1/N"), r));
    }
    Ok(sign)
}

/// S = H·W for the net of `ops`: row `k` of H is the DWF of the `k`-th
/// Pauli tensor.
pub fn build_h(ops: &PhasePointOperators) -> Result<HadamardTransform> {
    let n = ops.degree();
    let order = ops.order();
    let d = order * order;
    let mut signs = Vec::with_capacity(d * d);
    for k in 0..d {
        let row = dwf_of_operator(&pauli_tensor(&pauli_labels(k, n))?, ops)?;
        for v in row {
            signs.push(to_sign(v, order, "H")?);
        }
    }
    Ok(HadamardTransform::from_signs(
        n,
        ops.net().index(),
        TransformKind::StokesFromDwf,
        signs,
    ))
}

fn require_kind(t: &HadamardTransform, kind: TransformKind) -> Result<()> {
    if t.kind() == kind {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "expected a {kind:?} transform, got {:?}",
            t.kind()
        )))
    }
}

/// S = H·W
pub fn stokes_from_dwf(w: &DwfVector, h: &HadamardTransform) -> Result<StokesVector> {
    require_kind(h, TransformKind::StokesFromDwf)?;
    StokesVector::new(w.n(), h.apply(w.values())?)
}

/// W = H⁻¹·S = Hᵀ·S
pub fn dwf_from_stokes(s: &StokesVector, h: &HadamardTransform) -> Result<DwfVector> {
    require_kind(h, TransformKind::StokesFromDwf)?;
    DwfVector::new(s.n(), h.apply_transpose(s.values())?)
}

/// Stokes vector by direct traces against Pauli tensors.
pub fn stokes_from_density(rho: &DensityMatrix) -> StokesVector {
    let n = rho.n();
    let scale = 1.0 / rho.dim() as f64;
    let values = (0..1usize << (2 * n))
        .map(|k| {
            let p = pauli_tensor(&pauli_labels(k, n)).expect("labels in range");
            rho.matrix().trace_product(&p).re * scale
        })
        .collect();
    StokesVector { n, values }
}

/// Σ_k S_k σ_k, with no state validation.
pub fn operator_from_stokes(s: &StokesVector) -> ComplexMatrix {
    let n = s.n();
    s.values()
        .iter()
        .enumerate()
        .fold(ComplexMatrix::zeros(1 << n), |acc, (k, &v)| {
            let p = pauli_tensor(&pauli_labels(k, n)).expect("labels in range");
            &acc + &p.scale_real(v)
        })
}

pub fn density_from_stokes(s: &StokesVector) -> Result<DensityMatrix> {
    DensityMatrix::with_tolerance(operator_from_stokes(s), CHAIN_TOL)
}

fn sigma_y_tensor(n: u32) -> ComplexMatrix {
    let y = pauli(2).expect("valid index");
    (0..n).fold(ComplexMatrix::identity(1), |acc, _| acc.kron(&y))
}

/// X ↦ σ_y^⊗n X* σ_y^⊗n for any operator of dimension 2^n.
pub fn spin_flip_operator(x: &ComplexMatrix) -> ComplexMatrix {
    let n = x.dim().trailing_zeros();
    let y = sigma_y_tensor(n);
    &(&y * &x.conjugate()) * &y
}

/// ρ̃ = σ_y^⊗n ρ* σ_y^⊗n
pub fn spin_flip_density(rho: &DensityMatrix) -> DensityMatrix {
    DensityMatrix::new(spin_flip_operator(rho.matrix())).expect("spin flip preserves states")
}

/// W̃ = T·W. Column β of T is the DWF of the spin-flipped A_β.
pub fn build_t(ops: &PhasePointOperators) -> Result<HadamardTransform> {
    let order = ops.order();
    let d = order * order;
    let mut columns = Vec::with_capacity(d);
    for a in ops.ops() {
        columns.push(dwf_of_operator(&spin_flip_operator(a), ops)?);
    }
    let mut signs = Vec::with_capacity(d * d);
    for row in 0..d {
        for col in &columns {
            signs.push(to_sign(col[row], order, "T")?);
        }
    }
    Ok(HadamardTransform::from_signs(
        ops.degree(),
        ops.net().index(),
        TransformKind::SpinFlipDwf,
        signs,
    ))
}

/// H̃ = H·T, computed on the integer sign matrices:
/// N·H̃ = (N·H)(N·T)/N must again have ±1 entries.
pub fn build_h_tilde(h: &HadamardTransform, t: &HadamardTransform) -> Result<HadamardTransform> {
    require_kind(h, TransformKind::StokesFromDwf)?;
    require_kind(t, TransformKind::SpinFlipDwf)?;
    if h.n() != t.n() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            actual: t.dim(),
        });
    }
    let d = h.dim();
    let order = 1i32 << h.n();
    let mut signs = Vec::with_capacity(d * d);
    for r in 0..d {
        for c in 0..d {
            let dot: i32 = (0..d).map(|k| h.sign(r, k) as i32 * t.sign(k, c) as i32).sum();
            if dot.abs() != order {
                return Err(Error::invariant(
                    "H·T entry is not ±1/N",
                    (dot.abs() - order).abs() as f64 / (order * order) as f64,
                ));
            }
            signs.push(dot.signum() as i8);
        }
    }
    Ok(HadamardTransform::from_signs(
        h.n(),
        h.net_index(),
        TransformKind::SpinFlipStokes,
        signs,
    ))
}

/// S̃ = H̃·W
pub fn spin_flip_stokes_from_dwf(w: &DwfVector, h_tilde: &HadamardTransform) -> Result<StokesVector> {
    require_kind(h_tilde, TransformKind::SpinFlipStokes)?;
    StokesVector::new(w.n(), h_tilde.apply(w.values())?)
}

/// W̃ = T·W
pub fn spin_flip_dwf(w: &DwfVector, t: &HadamardTransform) -> Result<DwfVector> {
    require_kind(t, TransformKind::SpinFlipDwf)?;
    DwfVector::new(w.n(), t.apply(w.values())?)
}

/// The net obtained by spin-flipping every line vector of `net`.
///
/// The flipped assignment is again translation covariant, so it is fixed
/// by the flipped vectors on the lines through the origin. Its H equals
/// H̃ = H·T of the original net.
pub fn spin_flipped_net(frame: &Frame, net: &QuantumNet) -> Result<QuantumNet> {
    let mubs = frame.mubs();
    let y = sigma_y_tensor(frame.degree());
    let offsets = net
        .offsets()
        .iter()
        .zip(mubs.bases())
        .map(|(offset, basis)| {
            let v = &basis[offset.index()];
            let flipped = y.apply(&v.map(|z| z.conj()));
            basis
                .iter()
                .position(|u| (u.dotc(&flipped).norm() - 1.0).abs() < CHAIN_TOL)
                .map(|j| FieldElement::from_bits(j as u8))
                .ok_or_else(|| {
                    Error::Numerical("spin-flipped vector left its basis".into())
                })
        })
        .collect::<Result<Vec<_>>>()?;
    QuantumNet::from_offsets(frame.degree(), offsets)
}

/// The whole set of H matrices for an enumerable qubit count (n ≤ 2),
/// indexed by net.
#[derive(Clone, Debug)]
pub struct HadamardFamily {
    n: u32,
    members: Vec<HadamardTransform>,
    lookup: HashMap<Vec<i8>, u128>,
}

impl HadamardFamily {
    pub fn build(n: u32) -> Result<Self> {
        let frame = Frame::new(n)?;
        let nets: Vec<QuantumNet> = enumerate_nets(n)?.collect();
        let members = nets
            .par_iter()
            .map(|net| build_h(&frame.operators_for(net)?))
            .collect::<Result<Vec<_>>>()?;
        let lookup = members
            .iter()
            .map(|h| (h.signs().to_vec(), h.net_index()))
            .collect();
        Ok(HadamardFamily { n, members, lookup })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn members(&self) -> &[HadamardTransform] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Number of distinct sign matrices in the family.
    pub fn distinct(&self) -> usize {
        self.lookup.len()
    }

    /// Net index of the family member whose sign matrix equals `m`, if any.
    pub fn find(&self, m: &HadamardTransform) -> Option<u128> {
        if m.n() != self.n {
            return None;
        }
        self.lookup.get(m.signs()).copied()
    }
}
