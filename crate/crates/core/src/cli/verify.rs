//! Self-check of the whole construction for one qubit count.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::entangle::{concurrence_pure, minkowski_sq_from_stokes, state_scalars};
use crate::error::{Error, Result};
use crate::quantops::{
    dwf_from_density, dwf_of_operator, pauli, translation_unitary, ComplexMatrix, DensityMatrix,
    StateVector, CHAIN_TOL, EXACT_TOL,
};
use crate::random::{mixed_state, pure_state};
use crate::transform::{
    build_h, build_h_tilde, build_t, density_from_stokes, dwf_from_stokes, spin_flip_density,
    spin_flipped_net, stokes_from_density, stokes_from_dwf, HadamardTransform,
};
use crate::Frame;

const SIGNS_ONE_QUBIT: [[i8; 4]; 4] = [
    [1, 1, 1, 1],
    [1, -1, 1, -1],
    [1, -1, -1, 1],
    [1, 1, -1, -1],
];

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Depth {
    Quick,
    Full,
}

impl std::str::FromStr for Depth {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Depth::Quick),
            "full" => Ok(Depth::Full),
            other => Err(Error::InvalidArgument(format!(
                "unknown depth {other:?} (expected quick or full)"
            ))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub max_residual: f64,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: u32,
    pub depth: Depth,
    pub nets_checked: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// Residual accumulator keyed by check name.
#[derive(Default)]
struct Tally {
    worst: BTreeMap<&'static str, f64>,
    errors: Vec<String>,
}

impl Tally {
    fn record(&mut self, name: &'static str, residual: f64) {
        let r = if residual.is_nan() { f64::INFINITY } else { residual };
        let e = self.worst.entry(name).or_insert(0.0);
        *e = e.max(r);
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (k, v) in other.worst {
            self.record(k, v);
        }
        self.errors.extend(other.errors);
        self
    }
}

fn tolerance(name: &str) -> f64 {
    match name {
        "phase_point_algebra" | "covariance" => CHAIN_TOL,
        _ => EXACT_TOL,
    }
}

fn mismatch(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn field_checks(frame: &Frame, t: &mut Tally) {
    let f = frame.field_basis().field();
    let els: Vec<_> = f.elements().collect();
    let mut bad = 0usize;
    for &a in &els {
        if !a.is_zero() {
            match f.inv(a) {
                Ok(b) if f.mul(a, b).bits() == 1 => {}
                _ => bad += 1,
            }
        }
        for &b in &els {
            if f.mul(a, b) != f.mul(b, a) {
                bad += 1;
            }
            for &c in &els {
                if f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))
                    || f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))
                {
                    bad += 1;
                }
            }
        }
    }
    t.record("field_axioms", bad as f64);

    let fb = frame.field_basis();
    let mut bad = 0usize;
    for (i, &e) in fb.basis().iter().enumerate() {
        for (j, &d) in fb.dual().iter().enumerate() {
            if f.trace(f.mul(e, d)) != u8::from(i == j) {
                bad += 1;
            }
        }
    }
    t.record("dual_basis", bad as f64);
}

fn geometry_checks(frame: &Frame, t: &mut Tally) {
    let space = frame.space();
    let order = space.order();
    let mut bad = 0usize;
    if space.striations().len() != order + 1 {
        bad += 1;
    }
    for s in space.striations() {
        let mut seen = vec![0usize; order * order];
        for line in &s.lines {
            if line.points.len() != order {
                bad += 1;
            }
            for pt in &line.points {
                seen[pt.index(order)] += 1;
            }
        }
        bad += seen.iter().filter(|&&k| k != 1).count();
    }
    let pts = space.points();
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            let joint = space.lines().filter(|l| l.contains(a) && l.contains(b)).count();
            if joint != 1 {
                bad += 1;
            }
        }
    }
    t.record("geometry", bad as f64);
}

fn mub_checks(frame: &Frame, t: &mut Tally) {
    let bases = frame.mubs().bases();
    let inv_n = 1.0 / frame.order() as f64;
    let mut worst: f64 = 0.0;
    for (i, bi) in bases.iter().enumerate() {
        for (j, bj) in bases.iter().enumerate().skip(i) {
            for (k, u) in bi.iter().enumerate() {
                for (l, v) in bj.iter().enumerate() {
                    let ov = u.dotc(v).norm_sqr();
                    let expect = match (i == j, k == l) {
                        (false, _) => inv_n,
                        (true, true) => 1.0,
                        (true, false) => 0.0,
                    };
                    worst = worst.max((ov - expect).abs());
                }
            }
        }
    }
    t.record("mub_unbiased", worst);
}

fn one_qubit_checks(frame: &Frame, t: &mut Tally) -> Result<()> {
    let ops = frame.operators(0)?;
    let mut worst: f64 = 0.0;
    for (k, row) in SIGNS_ONE_QUBIT.iter().enumerate() {
        let w = dwf_of_operator(&pauli(k)?, &ops)?;
        let expect: Vec<f64> = row.iter().map(|&s| 0.5 * s as f64).collect();
        worst = worst.max(max_diff(&w, &expect));
    }
    t.record("pauli_dwf_table", worst);
    let h = build_h(&ops)?;
    let expect: Vec<Vec<i8>> = SIGNS_ONE_QUBIT.iter().map(|r| r.to_vec()).collect();
    t.record("one_qubit_hadamard", mismatch(h.sign_rows() == expect && h.scale() == 0.5));
    Ok(())
}

fn two_qubit_checks(frame: &Frame, t: &mut Tally) -> Result<()> {
    let ops = frame.operators(0)?;
    let tr = build_t(&ops)?;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let state = |amps: [f64; 4]| {
        DensityMatrix::from_pure(&StateVector::from_iterator(
            4,
            amps.iter().map(|&a| Complex64::new(a, 0.0)),
        ))
    };
    let bell = dwf_from_density(&state([r, 0.0, 0.0, r])?, &ops)?;
    t.record("bell_concurrence", (concurrence_pure(&bell, &tr)? - 1.0).abs());
    let hh = dwf_from_density(&state([1.0, 0.0, 0.0, 0.0])?, &ops)?;
    t.record("product_concurrence", concurrence_pure(&hh, &tr)?.abs());
    Ok(())
}

fn covariance_residual(frame: &Frame, ops: &crate::quantops::PhasePointOperators) -> f64 {
    let space = frame.space();
    let order = space.order();
    let mut worst: f64 = 0.0;
    for tau in space.points() {
        let u = translation_unitary(tau.q, tau.p, frame.field_basis());
        let ud = u.adjoint();
        for &pt in space.points() {
            let moved = &(&u * ops.at(pt)) * &ud;
            let target = pt.translate(tau.q, tau.p);
            worst = worst.max(moved.max_abs_diff(&ops.ops()[target.index(order)]));
        }
    }
    worst
}

fn per_net(frame: &Frame, net_index: u128, t0: &HadamardTransform, states: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let n = frame.degree();
    let order = frame.order();
    let ops = frame.operators(net_index)?;

    let mut line_sum: f64 = 0.0;
    for line in frame.space().lines() {
        let sum = line
            .points
            .iter()
            .fold(ComplexMatrix::zeros(order), |acc, pt| &acc + ops.at(*pt));
        let q = ops.assignment().projector(line.striation, line.c).scale_real(order as f64);
        line_sum = line_sum.max(sum.max_abs_diff(&q));
    }
    t.record("phase_point_algebra", line_sum);
    t.record("covariance", covariance_residual(frame, &ops));

    let h = build_h(&ops)?;
    t.record("hadamard_property", mismatch(h.is_hadamard()));
    let tr = build_t(&ops)?;
    t.record("spin_flip_net_independence", mismatch(tr.signs() == t0.signs()));
    let mut inv: f64 = 0.0;
    for j in 0..order * order {
        let mut e = vec![0.0; order * order];
        e[j] = 1.0;
        let back = tr.apply(&tr.apply(&e)?)?;
        inv = inv.max(max_diff(&back, &e));
    }
    t.record("spin_flip_involution", inv);
    let ht = build_h_tilde(&h, &tr)?;
    let partner = spin_flipped_net(frame, ops.net())?;
    let hp = build_h(&frame.operators_for(&partner)?)?;
    t.record("h_tilde_closure", mismatch(ht.signs() == hp.signs()));

    let mut rng = ChaCha8Rng::seed_from_u64(net_index as u64 ^ (n as u64) << 60);
    for k in 0..states {
        let rho = if k % 2 == 0 {
            pure_state(n, &mut rng)
        } else {
            mixed_state(n, &mut rng)
        };
        let w = dwf_from_density(&rho, &ops)?;
        let s_density = stokes_from_density(&rho);
        let s_dwf = stokes_from_dwf(&w, &h)?;
        t.record("stokes_dual_route", max_diff(s_dwf.values(), s_density.values()));

        let back = crate::quantops::density_from_dwf(&w, &ops)?;
        let mut rt = back.matrix().max_abs_diff(rho.matrix());
        let w2 = dwf_from_stokes(&s_density, &h)?;
        rt = rt.max(max_diff(w2.values(), w.values()));
        let s2 = stokes_from_density(&density_from_stokes(&s_density)?);
        rt = rt.max(max_diff(s2.values(), s_density.values()));
        t.record("round_trip", rt);

        let sc = state_scalars(&w, &tr)?;
        t.record("scalar_identity", sc.identity_residual);
        let direct = rho.matrix().trace_product(spin_flip_density(&rho).matrix()).re;
        let via_stokes = minkowski_sq_from_stokes(&s_density);
        t.record(
            "minkowski_routes",
            (sc.minkowski_sq - direct).abs().max((via_stokes - direct).abs()),
        );
    }
    Ok(t)
}

/// Run every check for `n` qubits. Nets are sampled for `Quick`; `Full`
/// covers every net for n ≤ 2.
pub fn verify(n: u32, depth: Depth) -> Result<VerifyReport> {
    let limit = match depth {
        Depth::Quick => 3,
        Depth::Full => 2,
    };
    if n == 0 || n > limit {
        return Err(Error::InvalidArgument(format!(
            "verify --depth {depth:?} supports 1 <= n <= {limit}, got {n}"
        ).to_lowercase()));
    }
    let frame = Frame::new(n)?;
    let nets = super::commands::nets_for(n, depth == Depth::Full)?;
    let states = match depth {
        Depth::Quick => 2,
        Depth::Full => 4,
    };

    let mut tally = Tally::default();
    field_checks(&frame, &mut tally);
    geometry_checks(&frame, &mut tally);
    mub_checks(&frame, &mut tally);
    if n == 1 {
        one_qubit_checks(&frame, &mut tally)?;
    }
    if n == 2 {
        two_qubit_checks(&frame, &mut tally)?;
    }

    let t0 = build_t(&frame.operators(0)?)?;
    let mut results: Vec<(u128, Result<Tally>)> = nets
        .par_iter()
        .map(|&k| (k, per_net(&frame, k, &t0, states)))
        .collect();
    results.sort_by_key(|(k, _)| *k);
    for (k, r) in results {
        match r {
            Ok(t) => tally = tally.merge(t),
            Err(e) => tally.errors.push(format!("net {k}: {e}")),
        }
    }

    let mut checks: Vec<Check> = tally
        .worst
        .iter()
        .map(|(&name, &r)| {
            let tol = tolerance(name);
            Check {
                name: name.to_string(),
                passed: r <= tol,
                max_residual: r,
                tolerance: tol,
                detail: None,
            }
        })
        .collect();
    if !tally.errors.is_empty() {
        checks.push(Check {
            name: "construction".into(),
            passed: false,
            max_residual: f64::INFINITY,
            tolerance: 0.0,
            detail: Some(tally.errors.join("; ")),
        });
    }
    Ok(VerifyReport {
        n,
        depth,
        nets_checked: nets.len(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
