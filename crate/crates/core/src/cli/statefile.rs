//! The JSON state file shared by every command.
//!
//! ```json
//! {
//!   "representation": "dwf",
//!   "n": 1,
//!   "net_index": 0,
//!   "data": [0.5, 0.5, 0.0, 0.0],
//!   "meta": { "modulus": 3, "field_basis": [1], "tool_version": "0.1.0", ... }
//! }
//! ```
//!
//! `data` is `{"re": [[..]], "im": [[..]]}` for density matrices and a flat
//! array for Stokes and DWF vectors. `net_index` is required for `dwf` and
//! rejected otherwise.

use std::io::{Read, Write};
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2n::{default_modulus, FieldBasis, Gf2n};
use crate::quantops::{operator_from_dwf, ComplexMatrix, DensityMatrix};
use crate::transform::{operator_from_stokes, DwfVector, StokesVector};
use crate::Frame;

/// Tolerance for state invariants of loaded files.
pub const LOAD_TOL: f64 = 1e-6;

pub const STOKES_ORDER: &str =
    "index = sum_k i_k * 4^(n-1-k) over Pauli labels (i_1..i_n), 0=I 1=X 2=Y 3=Z; S = Tr(rho sigma)/2^n";
pub const DWF_ORDER: &str =
    "index = q*N + p, q and p as integer bit patterns in the polynomial basis";

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Density,
    Stokes,
    Dwf,
}

impl std::str::FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "density" => Ok(Representation::Density),
            "stokes" => Ok(Representation::Stokes),
            "dwf" => Ok(Representation::Dwf),
            other => Err(Error::InvalidArgument(format!(
                "unknown representation {other:?} (expected density, stokes or dwf)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Matrix { re: Vec<Vec<f64>>, im: Vec<Vec<f64>> },
    Vector(Vec<f64>),
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field_basis: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tool_version: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stokes_order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dwf_order: Option<String>,
}

impl Meta {
    pub fn current(n: u32) -> Result<Self> {
        let field = Gf2n::new(n)?;
        let basis = FieldBasis::polynomial(field);
        Ok(Meta {
            modulus: Some(field.modulus()),
            field_basis: Some(basis.basis().iter().map(|e| e.bits()).collect()),
            tool_version: Some(env!("CARGO_PKG_VERSION").to_string()),
            stokes_order: Some(STOKES_ORDER.to_string()),
            dwf_order: Some(DWF_ORDER.to_string()),
        })
    }

    /// Files written under another modulus or basis cannot be read here.
    fn check(&self, n: u32) -> Result<()> {
        let expected = Meta::current(n)?;
        if let Some(m) = self.modulus {
            if Some(m) != expected.modulus {
                return Err(Error::InvalidArgument(format!(
                    "file uses modulus {m}, this build uses {}",
                    default_modulus(n)?
                )));
            }
        }
        if let Some(b) = &self.field_basis {
            if Some(b) != expected.field_basis.as_ref() {
                return Err(Error::InvalidArgument(format!(
                    "file uses field basis {b:?}, this build uses the polynomial basis"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub representation: Representation,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub net_index: Option<u128>,
    pub data: Payload,
    #[serde(default)]
    pub meta: Meta,
}

/// A loaded and validated state.
#[derive(Clone, Debug)]
pub enum State {
    Density(DensityMatrix),
    Stokes(StokesVector),
    Dwf { net_index: u128, w: DwfVector },
}

impl State {
    pub fn n(&self) -> u32 {
        match self {
            State::Density(rho) => rho.n(),
            State::Stokes(s) => s.n(),
            State::Dwf { w, .. } => w.n(),
        }
    }

    pub fn representation(&self) -> Representation {
        match self {
            State::Density(_) => Representation::Density,
            State::Stokes(_) => Representation::Stokes,
            State::Dwf { .. } => Representation::Dwf,
        }
    }
}

fn shape_error(what: &str, expected: usize, actual: usize) -> Error {
    Error::InvalidState(format!("{what}: expected {expected} entries, got {actual}"))
}

impl StateFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn read_from(path: &Path) -> Result<Self> {
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        } else {
            std::fs::read_to_string(path)?
        };
        Self::from_json(&text)
    }

    pub fn write_to(&self, path: &Path) -> Result<()> {
        let text = self.to_json()?;
        if path.as_os_str() == "-" {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.write_all(b"\n")?;
        } else {
            std::fs::write(path, text + "\n")?;
        }
        Ok(())
    }

    /// Check shape, metadata and state invariants, returning the typed state.
    /// DWF files need a [`Frame`] for the reconstruction check.
    pub fn load(&self, frame: Option<&Frame>) -> Result<State> {
        self.load_checked(frame).map_err(|e| match e {
            Error::Invariant { .. } | Error::DimensionMismatch { .. } => e,
            other => Error::InvalidState(other.to_string()),
        })
    }

    fn load_checked(&self, frame: Option<&Frame>) -> Result<State> {
        let n = self.n;
        crate::gf2n::check_degree(n)?;
        self.meta.check(n)?;
        let dim = 1usize << n;
        match (self.representation, &self.data) {
            (Representation::Density, Payload::Matrix { re, im }) => {
                if self.net_index.is_some() {
                    return Err(Error::InvalidArgument(
                        "net_index is only allowed for dwf files".into(),
                    ));
                }
                if re.len() != dim || im.len() != dim {
                    return Err(shape_error("density rows", dim, re.len().max(im.len())));
                }
                if let Some(row) = re.iter().chain(im.iter()).find(|r| r.len() != dim) {
                    return Err(shape_error("density row", dim, row.len()));
                }
                let mat = ComplexMatrix::from_fn(dim, |r, c| Complex64::new(re[r][c], im[r][c]));
                Ok(State::Density(DensityMatrix::with_tolerance(mat, LOAD_TOL)?))
            }
            (Representation::Stokes, Payload::Vector(values)) => {
                if self.net_index.is_some() {
                    return Err(Error::InvalidArgument(
                        "net_index is only allowed for dwf files".into(),
                    ));
                }
                if values.len() != dim * dim {
                    return Err(shape_error("stokes vector", dim * dim, values.len()));
                }
                let s = StokesVector::new(n, values.clone())?;
                let lead = (values[0] - 1.0 / dim as f64).abs();
                if lead > LOAD_TOL {
                    return Err(Error::invariant("S_0..0 != 1/2^n", lead));
                }
                DensityMatrix::with_tolerance(operator_from_stokes(&s), LOAD_TOL)?;
                Ok(State::Stokes(s))
            }
            (Representation::Dwf, Payload::Vector(values)) => {
                let net_index = self.net_index.ok_or_else(|| {
                    Error::InvalidArgument("dwf files need a net_index".into())
                })?;
                if values.len() != dim * dim {
                    return Err(shape_error("dwf vector", dim * dim, values.len()));
                }
                let w = DwfVector::new(n, values.clone())?;
                let sum_err = (w.sum() - 1.0).abs();
                if sum_err > LOAD_TOL {
                    return Err(Error::invariant("DWF does not sum to 1", sum_err));
                }
                let owned;
                let frame = match frame {
                    Some(f) if f.degree() == n => f,
                    _ => {
                        owned = Frame::new(n)?;
                        &owned
                    }
                };
                let ops = frame.operators(net_index)?;
                DensityMatrix::with_tolerance(operator_from_dwf(w.values(), &ops)?, LOAD_TOL)?;
                Ok(State::Dwf { net_index, w })
            }
            (repr, _) => Err(Error::InvalidArgument(format!(
                "payload shape does not match representation {repr:?}"
            ))),
        }
    }

    pub fn from_state(state: &State) -> Result<Self> {
        let n = state.n();
        let (net_index, data) = match state {
            State::Density(rho) => {
                let dim = rho.dim();
                let m = rho.matrix();
                let re = (0..dim).map(|r| (0..dim).map(|c| m.get(r, c).re).collect()).collect();
                let im = (0..dim).map(|r| (0..dim).map(|c| m.get(r, c).im).collect()).collect();
                (None, Payload::Matrix { re, im })
            }
            State::Stokes(s) => (None, Payload::Vector(s.values().to_vec())),
            State::Dwf { net_index, w } => (Some(*net_index), Payload::Vector(w.values().to_vec())),
        };
        Ok(StateFile {
            representation: state.representation(),
            n,
            net_index,
            data,
            meta: Meta::current(n)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const H_DENSITY: &str = r#"{"representation":"density","n":1,
        "data":{"re":[[1,0],[0,0]],"im":[[0,0],[0,0]]}}"#;

    #[test]
    fn parses_minimal_density_file() {
        let f = StateFile::from_json(H_DENSITY).unwrap();
        assert!(matches!(f.load(None).unwrap(), State::Density(_)));
    }

    #[test]
    fn written_files_reload() {
        let f = StateFile::from_json(H_DENSITY).unwrap();
        let state = f.load(None).unwrap();
        let out = StateFile::from_state(&state).unwrap();
        let text = out.to_json().unwrap();
        let again = StateFile::from_json(&text).unwrap();
        assert_eq!(again, out);
        again.load(None).unwrap();
        assert_eq!(again.meta.modulus, Some(0b11));
    }

    #[test]
    fn rejects_bad_files() {
        let bad = [
            // trace 2
            r#"{"representation":"density","n":1,"data":{"re":[[1,0],[0,1]],"im":[[0,0],[0,0]]}}"#,
            // wrong size
            r#"{"representation":"stokes","n":1,"data":[0.5,0,0]}"#,
            // S_0 wrong
            r#"{"representation":"stokes","n":1,"data":[1,0,0,0]}"#,
            // missing net
            r#"{"representation":"dwf","n":1,"data":[0.25,0.25,0.25,0.25]}"#,
            // net out of range
            r#"{"representation":"dwf","n":1,"net_index":8,"data":[0.25,0.25,0.25,0.25]}"#,
            // not normalized
            r#"{"representation":"dwf","n":1,"net_index":0,"data":[0.5,0.5,0.5,0]}"#,
            // not positive: W = (1, 0, 0, 0) reconstructs A_00, which has eigenvalue (1-√3)/2
            r#"{"representation":"dwf","n":1,"net_index":0,"data":[1,0,0,0]}"#,
            // net index on a stokes file
            r#"{"representation":"stokes","n":1,"net_index":0,"data":[0.5,0,0,0.5]}"#,
            // foreign modulus
            r#"{"representation":"stokes","n":2,"data":[0.25,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],"meta":{"modulus":5}}"#,
            // payload shape mismatch
            r#"{"representation":"density","n":1,"data":[0.5,0.5]}"#,
        ];
        for text in bad {
            let f = StateFile::from_json(text).unwrap();
            assert!(f.load(None).is_err(), "accepted {text}");
        }
        assert!(StateFile::from_json("{not json").is_err());
        assert!(StateFile::from_json(r#"{"representation":"spin","n":1,"data":[]}"#).is_err());
    }
}
