//! Conversions between the density matrix, Stokes vector and discrete
//! Wigner function (DWF) of n-qubit polarization states.
//!
//! Phase space is the N×N grid over GF(2^n) (N = 2^n). A *quantum net*
//! attaches one vector of a mutually unbiased basis to each phase-space
//! line; every net fixes a set of phase-point operators A_α, hence a DWF,
//! and a signed matrix `H` with `S = H·W`. There are N^(N+1) nets.
//!
//! ```
//! use dwfkit::{transform, Frame};
//!
//! let frame = Frame::new(1)?;
//! let ops = frame.operators(0)?;
//! let h = transform::build_h(&ops)?;
//! assert!(h.is_hadamard());
//! # Ok::<(), dwfkit::Error>(())
//! ```
//!
//! Runnable walkthroughs live in `examples/`.

pub mod cli;
pub mod entangle;
mod error;
pub mod gf2n;
pub mod phasespace;
pub mod quantops;
pub mod random;
pub mod transform;

pub use error::{Error, Result};

use gf2n::{FieldBasis, Gf2n};
use phasespace::{PhaseSpace, QuantumNet};
use quantops::{assign_net, build_mubs, phase_point_operators, MubSystem, PhasePointOperators};

/// The net-independent part of the construction for one qubit count: field,
/// basis, geometry and MUBs. Phase-point operators for any net are derived
/// from it.
#[derive(Clone, Debug)]
pub struct Frame {
    mubs: MubSystem,
}

impl Frame {
    /// Default field (pinned modulus) with its polynomial basis.
    pub fn new(n: u32) -> Result<Self> {
        Self::with_basis(&FieldBasis::polynomial(Gf2n::new(n)?))
    }

    pub fn with_basis(basis: &FieldBasis) -> Result<Self> {
        Ok(Frame {
            mubs: build_mubs(basis)?,
        })
    }

    pub fn degree(&self) -> u32 {
        self.mubs.degree()
    }

    /// N = 2^n
    pub fn order(&self) -> usize {
        self.mubs.space().order()
    }

    pub fn mubs(&self) -> &MubSystem {
        &self.mubs
    }

    pub fn space(&self) -> &PhaseSpace {
        self.mubs.space()
    }

    pub fn field_basis(&self) -> &FieldBasis {
        self.mubs.field_basis()
    }

    pub fn net(&self, index: u128) -> Result<QuantumNet> {
        QuantumNet::from_index(self.degree(), index)
    }

    pub fn operators(&self, net_index: u128) -> Result<PhasePointOperators> {
        self.operators_for(&self.net(net_index)?)
    }

    pub fn operators_for(&self, net: &QuantumNet) -> Result<PhasePointOperators> {
        phase_point_operators(&assign_net(&self.mubs, net)?)
    }
}
