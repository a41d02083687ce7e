use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use serde::{Serialize, Serializer};

use super::statefile::{Meta, Representation, State, StateFile, LOAD_TOL};
use crate::entangle::{minkowski_sq_from_stokes, state_scalars};
use crate::error::{Error, Result};
use crate::gf2n::FieldElement;
use crate::phasespace::QuantumNet;
use crate::quantops::{dwf_from_density, operator_from_dwf, DensityMatrix};
use crate::transform::{
    build_h, build_h_tilde, build_t, dwf_from_stokes, operator_from_stokes, stokes_from_density,
    stokes_from_dwf, DwfVector, HadamardExport, StokesVector,
};
use crate::Frame;

/// Round to 15 significant digits for reporting.
pub fn sig15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

fn density_of(state: &State, frame: &Frame) -> Result<DensityMatrix> {
    match state {
        State::Density(rho) => Ok(rho.clone()),
        // load already checked these at file tolerance
        State::Stokes(s) => DensityMatrix::with_tolerance(operator_from_stokes(s), LOAD_TOL),
        State::Dwf { net_index, w } => {
            let ops = frame.operators(*net_index)?;
            DensityMatrix::with_tolerance(operator_from_dwf(w.values(), &ops)?, LOAD_TOL)
        }
    }
}

fn stokes_of(state: &State, frame: &Frame) -> Result<StokesVector> {
    match state {
        State::Density(rho) => Ok(stokes_from_density(rho)),
        State::Stokes(s) => Ok(s.clone()),
        State::Dwf { net_index, w } => {
            let h = build_h(&frame.operators(*net_index)?)?;
            stokes_from_dwf(w, &h)
        }
    }
}

fn dwf_of(state: &State, frame: &Frame, net_index: u128) -> Result<DwfVector> {
    match state {
        State::Dwf { net_index: k, w } if *k == net_index => Ok(w.clone()),
        State::Density(rho) => dwf_from_density(rho, &frame.operators(net_index)?),
        other => {
            let s = stokes_of(other, frame)?;
            dwf_from_stokes(&s, &build_h(&frame.operators(net_index)?)?)
        }
    }
}

/// Load and convert to `target`. `net` is required when converting to a
/// DWF; a DWF source carries its own net.
pub fn convert(input: &StateFile, target: Representation, net: Option<u128>) -> Result<StateFile> {
    let frame = Frame::new(input.n)?;
    let state = input.load(Some(&frame))?;
    let out = match target {
        Representation::Density => State::Density(density_of(&state, &frame)?),
        Representation::Stokes => State::Stokes(stokes_of(&state, &frame)?),
        Representation::Dwf => {
            let net_index = net.ok_or_else(|| {
                Error::InvalidArgument("converting to dwf needs --net".into())
            })?;
            frame.net(net_index)?;
            State::Dwf {
                net_index,
                w: dwf_of(&state, &frame, net_index)?,
            }
        }
    };
    StateFile::from_state(&out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KindArg {
    H,
    T,
    HTilde,
}

impl std::str::FromStr for KindArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" => Ok(KindArg::H),
            "T" => Ok(KindArg::T),
            "H_tilde" => Ok(KindArg::HTilde),
            other => Err(Error::InvalidArgument(format!(
                "unknown kind {other:?} (expected H, T or H_tilde)"
            ))),
        }
    }
}

pub fn export_hadamard(n: u32, net_index: u128, kind: KindArg) -> Result<HadamardExport> {
    match n {
        1 | 2 => {}
        3 if net_index == 0 => {}
        3 => {
            return Err(Error::InvalidArgument(
                "export for n = 3 is limited to net 0".into(),
            ))
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "export supports n <= 3, got {n}"
            )))
        }
    }
    let frame = Frame::new(n)?;
    let ops = frame.operators(net_index)?;
    let m = match kind {
        KindArg::H => build_h(&ops)?,
        KindArg::T => build_t(&ops)?,
        KindArg::HTilde => build_h_tilde(&build_h(&ops)?, &build_t(&ops)?)?,
    };
    Ok(m.to_export())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shots {
    Exact,
    Count(u64),
}

impl std::str::FromStr for Shots {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "exact" {
            return Ok(Shots::Exact);
        }
        match s.parse::<i64>() {
            Ok(k) if k > 0 => Ok(Shots::Count(k as u64)),
            _ => Err(Error::InvalidArgument(format!(
                "shots must be a positive integer or \"exact\", got {s:?}"
            ))),
        }
    }
}

impl Serialize for Shots {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Shots::Exact => s.serialize_str("exact"),
            Shots::Count(k) => s.serialize_u64(*k),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MeasurementReport {
    pub n: u32,
    pub net_index: u128,
    pub striation_index: usize,
    /// Tr(ρ Q(λ)) for each line, ordered by intercept.
    pub probabilities: Vec<f64>,
    /// Σ W_α over each line.
    pub dwf_line_sums: Vec<f64>,
    pub shots: Shots,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub estimates: Option<Vec<f64>>,
}

/// Multinomial draw by successive conditional binomials.
pub fn sample_counts(probabilities: &[f64], shots: u64, seed: u64) -> Result<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut remaining = shots;
    let mut mass = 1.0;
    let mut counts = Vec::with_capacity(probabilities.len());
    for (i, &p) in probabilities.iter().enumerate() {
        let p = p.max(0.0);
        let k = if i + 1 == probabilities.len() {
            remaining
        } else if remaining == 0 || mass <= 0.0 {
            0
        } else {
            let q = (p / mass).clamp(0.0, 1.0);
            Binomial::new(remaining, q)
                .map_err(|e| Error::Numerical(format!("binomial sampler: {e}")))?
                .sample(&mut rng)
        };
        counts.push(k);
        remaining -= k;
        mass -= p;
    }
    Ok(counts)
}

pub fn measure(
    input: &StateFile,
    striation: usize,
    shots: Shots,
    seed: u64,
    net: Option<u128>,
) -> Result<MeasurementReport> {
    let frame = Frame::new(input.n)?;
    let state = input.load(Some(&frame))?;
    if striation > frame.order() {
        return Err(Error::InvalidArgument(format!(
            "striation index {striation} exceeds N = {}",
            frame.order()
        )));
    }
    let net_index = match (&state, net) {
        (_, Some(k)) => k,
        (State::Dwf { net_index, .. }, None) => *net_index,
        _ => 0,
    };
    let ops = frame.operators(net_index)?;
    let rho = density_of(&state, &frame)?;
    let w = dwf_of(&state, &frame, net_index)?;
    let order = frame.order();
    let lines = &frame.space().striations()[striation].lines;
    let probabilities: Vec<f64> = lines
        .iter()
        .map(|l| rho.matrix().trace_product(ops.assignment().projector(striation, l.c)).re)
        .collect();
    let dwf_line_sums: Vec<f64> = lines
        .iter()
        .map(|l| l.points.iter().map(|pt| w.values()[pt.index(order)]).sum())
        .collect();
    let (seed, counts, estimates) = match shots {
        Shots::Exact => (None, None, None),
        Shots::Count(k) => {
            let counts = sample_counts(&probabilities, k, seed)?;
            let est = counts.iter().map(|&c| c as f64 / k as f64).collect();
            (Some(seed), Some(counts), Some(est))
        }
    };
    Ok(MeasurementReport {
        n: input.n,
        net_index,
        striation_index: striation,
        probabilities: probabilities.into_iter().map(sig15).collect(),
        dwf_line_sums: dwf_line_sums.into_iter().map(sig15).collect(),
        shots,
        seed,
        counts,
        estimates,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalarReport {
    pub n: u32,
    pub net_index: u128,
    pub minkowski_sq: f64,
    pub minkowski_sq_stokes_route: f64,
    pub purity: f64,
    pub mixedness: f64,
    pub indistinguishability: f64,
    pub concurrence: Option<f64>,
    /// |S² + M − I|
    pub identity_residual: f64,
}

/// Entanglement scalars, computed on the DWF of the state under `net`
/// (the file's own net for DWF input, net 0 otherwise).
pub fn report(input: &StateFile, net: Option<u128>) -> Result<ScalarReport> {
    let frame = Frame::new(input.n)?;
    let state = input.load(Some(&frame))?;
    let net_index = match (&state, net) {
        (_, Some(k)) => k,
        (State::Dwf { net_index, .. }, None) => *net_index,
        _ => 0,
    };
    let ops = frame.operators(net_index)?;
    let w = dwf_of(&state, &frame, net_index)?;
    let t = build_t(&ops)?;
    let sc = state_scalars(&w, &t)?;
    let stokes_route = minkowski_sq_from_stokes(&stokes_of(&state, &frame)?);
    Ok(ScalarReport {
        n: input.n,
        net_index,
        minkowski_sq: sig15(sc.minkowski_sq),
        minkowski_sq_stokes_route: sig15(stokes_route),
        purity: sig15(sc.purity),
        mixedness: sig15(sc.mixedness),
        indistinguishability: sig15(sc.indistinguishability),
        concurrence: sc.concurrence.map(sig15),
        identity_residual: sig15(sc.identity_residual),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GeometryDump {
    pub n: u32,
    pub order: usize,
    pub meta: Meta,
    pub points: Vec<PointOut>,
    pub striations: Vec<StriationOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointOut {
    pub index: usize,
    pub q: FieldElement,
    pub p: FieldElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct StriationOut {
    pub index: usize,
    pub a: FieldElement,
    pub b: FieldElement,
    pub direction: (FieldElement, FieldElement),
    pub lines: Vec<LineOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LineOut {
    pub intercept: FieldElement,
    pub points: Vec<usize>,
}

pub fn dump_geometry(n: u32) -> Result<GeometryDump> {
    let space = crate::phasespace::build_phase_space(n)?;
    let order = space.order();
    Ok(GeometryDump {
        n,
        order,
        meta: Meta::current(n)?,
        points: space
            .points()
            .iter()
            .map(|pt| PointOut {
                index: pt.index(order),
                q: pt.q,
                p: pt.p,
            })
            .collect(),
        striations: space
            .striations()
            .iter()
            .map(|s| StriationOut {
                index: s.index,
                a: s.a,
                b: s.b,
                direction: s.direction(),
                lines: s
                    .lines
                    .iter()
                    .map(|l| LineOut {
                        intercept: l.c,
                        points: l.points.iter().map(|pt| pt.index(order)).collect(),
                    })
                    .collect(),
            })
            .collect(),
    })
}

/// Nets exercised by `verify`.
pub(crate) fn nets_for(n: u32, full: bool) -> Result<Vec<u128>> {
    let count = QuantumNet::count(n)?;
    Ok(match (n, full) {
        (1, _) | (2, true) => (0..count).collect(),
        (2, false) => (0..64).map(|k| k * 16 + (k % 16)).collect(),
        _ => vec![0, 1, count / 3, count - 1],
    })
}
