use std::ops::{Add, Mul, Sub};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type StateVector = DVector<Complex64>;

/// Entrywise tolerance for algebraic identities on exact inputs.
pub const EXACT_TOL: f64 = 1e-10;
/// Tolerance for chained numerical constructions.
pub const CHAIN_TOL: f64 = 1e-8;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Square complex matrix. Dimensions here never exceed 16.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix(DMatrix<Complex64>);

impl ComplexMatrix {
    pub fn from_inner(m: DMatrix<Complex64>) -> Self {
        assert!(m.is_square(), "ComplexMatrix must be square");
        ComplexMatrix(m)
    }

    pub fn inner(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn identity(dim: usize) -> Self {
        ComplexMatrix(DMatrix::identity(dim, dim))
    }

    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix(DMatrix::zeros(dim, dim))
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        ComplexMatrix(DMatrix::from_fn(dim, dim, f))
    }

    /// |v⟩⟨v|
    pub fn projector(v: &StateVector) -> Self {
        ComplexMatrix(v * v.adjoint())
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.0[(r, c)]
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    /// Tr(self · other) without forming the product.
    pub fn trace_product(&self, other: &ComplexMatrix) -> Complex64 {
        let d = self.dim();
        let mut acc = ZERO;
        for i in 0..d {
            for j in 0..d {
                acc += self.0[(i, j)] * other.0[(j, i)];
            }
        }
        acc
    }

    pub fn adjoint(&self) -> Self {
        ComplexMatrix(self.0.adjoint())
    }

    pub fn conjugate(&self) -> Self {
        ComplexMatrix(self.0.map(|z| z.conj()))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        ComplexMatrix(&self.0 * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn kron(&self, other: &ComplexMatrix) -> Self {
        ComplexMatrix(self.0.kronecker(&other.0))
    }

    pub fn apply(&self, v: &StateVector) -> StateVector {
        &self.0 * v
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &ComplexMatrix, tol: f64) -> bool {
        self.dim() == other.dim() && self.max_abs_diff(other) <= tol
    }

    pub fn hermiticity_residual(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let herm = (&self.0 + self.0.adjoint()) * Complex64::new(0.5, 0.0);
        let mut ev: Vec<f64> = herm.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 + &rhs.0)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 - &rhs.0)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix(&self.0 * &rhs.0)
    }
}

/// Single-qubit Pauli matrix: 0 = I, 1 = σx, 2 = σy, 3 = σz.
pub fn pauli(index: usize) -> Result<ComplexMatrix> {
    let entries = match index {
        0 => [ONE, ZERO, ZERO, ONE],
        1 => [ZERO, ONE, ONE, ZERO],
        2 => [ZERO, -I, I, ZERO],
        3 => [ONE, ZERO, ZERO, -ONE],
        _ => {
            return Err(Error::InvalidArgument(format!(
                "Pauli index {index} is not in 0..=3"
            )))
        }
    };
    Ok(ComplexMatrix(DMatrix::from_row_slice(2, 2, &entries)))
}

/// σ_{i_1} ⊗ … ⊗ σ_{i_n}, first factor most significant.
pub fn pauli_tensor(indices: &[usize]) -> Result<ComplexMatrix> {
    if indices.is_empty() || indices.len() > crate::gf2n::MAX_DEGREE as usize {
        return Err(Error::InvalidArgument(format!(
            "expected 1..=4 Pauli indices, got {}",
            indices.len()
        )));
    }
    indices.iter().try_fold(ComplexMatrix::identity(1), |acc, &i| {
        Ok(acc.kron(&pauli(i)?))
    })
}

/// Decode a Stokes index into its Pauli labels (base 4, big-endian).
pub fn pauli_labels(index: usize, n: u32) -> Vec<usize> {
    (0..n)
        .rev()
        .map(|k| (index >> (2 * k)) & 3)
        .collect()
}

/// Number of non-identity factors in a Stokes index.
pub fn pauli_weight(index: usize, n: u32) -> u32 {
    pauli_labels(index, n).iter().filter(|&&l| l != 0).count() as u32
}

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    n: u32,
    mat: ComplexMatrix,
}

/// Lowest eigenvalue still accepted as positive semidefinite.
pub const PSD_TOL: f64 = 1e-8;

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(mat, EXACT_TOL)
    }

    /// Validate with a looser tolerance for Hermiticity and trace, used for
    /// values read from files or produced by long numerical chains.
    pub fn with_tolerance(mat: ComplexMatrix, tol: f64) -> Result<Self> {
        let dim = mat.dim();
        if dim < 2 || !dim.is_power_of_two() || dim > 1 << crate::gf2n::MAX_DEGREE {
            return Err(Error::InvalidArgument(format!(
                "density matrix dimension {dim} is not 2^n with 1 <= n <= 4"
            )));
        }
        let herm = mat.hermiticity_residual();
        if herm > tol {
            return Err(Error::invariant("density matrix is not Hermitian", herm));
        }
        let tr = mat.trace();
        let tr_err = (tr - ONE).norm();
        if tr_err > tol {
            return Err(Error::invariant("density matrix trace is not 1", tr_err));
        }
        let min_ev = mat.hermitian_eigenvalues()[0];
        if min_ev < -PSD_TOL.max(tol) {
            return Err(Error::invariant(
                "density matrix is not positive semidefinite",
                -min_ev,
            ));
        }
        Ok(DensityMatrix {
            n: dim.trailing_zeros(),
            mat,
        })
    }

    pub fn from_pure(psi: &StateVector) -> Result<Self> {
        let norm = psi.norm();
        if norm < EXACT_TOL {
            return Err(Error::InvalidArgument("zero state vector".into()));
        }
        Self::new(ComplexMatrix::projector(&(psi / Complex64::new(norm, 0.0))))
    }

    pub fn maximally_mixed(n: u32) -> Result<Self> {
        crate::gf2n::check_degree(n)?;
        let dim = 1usize << n;
        Self::new(ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// Tr(ρ²)
    pub fn purity(&self) -> f64 {
        self.mat.trace_product(&self.mat).re
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_tensor_examples() {
        assert_eq!(pauli_tensor(&[0]).unwrap(), ComplexMatrix::identity(2));
        let z = pauli_tensor(&[3]).unwrap();
        assert_eq!(z.get(0, 0), ONE);
        assert_eq!(z.get(1, 1), -ONE);
        assert_eq!(z.get(0, 1), ZERO);
        let xx = pauli_tensor(&[1, 1]).unwrap();
        let anti = ComplexMatrix::from_fn(4, |r, c| if r + c == 3 { ONE } else { ZERO });
        assert_eq!(xx, anti);
        assert!(pauli_tensor(&[4]).is_err());
        assert!(pauli_tensor(&[]).is_err());
        assert!(pauli_tensor(&[0, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn pauli_orthogonality() {
        for n in 1..=3u32 {
            let count = 1usize << (2 * n);
            let ps: Vec<_> = (0..count)
                .map(|k| pauli_tensor(&pauli_labels(k, n)).unwrap())
                .collect();
            for (i, a) in ps.iter().enumerate() {
                for (j, b) in ps.iter().enumerate() {
                    let expect = if i == j { (1 << n) as f64 } else { 0.0 };
                    assert!((a.trace_product(b) - c(expect, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn labels_are_big_endian() {
        assert_eq!(pauli_labels(0b0111, 2), vec![1, 3]);
        assert_eq!(pauli_weight(0b0111, 2), 2);
        assert_eq!(pauli_weight(0b0100, 2), 1);
    }

    #[test]
    fn density_validation() {
        assert!(DensityMatrix::maximally_mixed(2).is_ok());
        let bad_trace = ComplexMatrix::identity(2);
        assert!(matches!(
            DensityMatrix::new(bad_trace),
            Err(Error::Invariant { .. })
        ));
        let non_herm = ComplexMatrix::from_fn(2, |r, col| match (r, col) {
            (0, 0) | (1, 1) => c(0.5, 0.0),
            (0, 1) => c(0.1, 0.0),
            _ => ZERO,
        });
        assert!(DensityMatrix::new(non_herm).is_err());
        let negative = ComplexMatrix::from_fn(2, |r, col| match (r, col) {
            (0, 0) => c(1.5, 0.0),
            (1, 1) => c(-0.5, 0.0),
            _ => ZERO,
        });
        assert!(DensityMatrix::new(negative).is_err());
        assert!(DensityMatrix::new(ComplexMatrix::identity(3).scale_real(1.0 / 3.0)).is_err());
    }
}
