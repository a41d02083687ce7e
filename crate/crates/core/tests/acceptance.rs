//! Acceptance criteria 1 to 9. Each test writes one `criterion N: PASS|FAIL`
//! line to stderr (uncaptured) and then asserts.

use std::io::Write;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dwfkit::entangle::{concurrence_pure, state_scalars};
use dwfkit::quantops::{dwf_from_density, dwf_of_operator, density_from_dwf, DensityMatrix, StateVector};
use dwfkit::random::{mixed_state, pure_state};
use dwfkit::transform::{
    build_h, build_h_tilde, build_t, dwf_from_stokes, stokes_from_density, stokes_from_dwf,
    HadamardFamily,
};
use dwfkit::Frame;

type M = DMatrix<Complex64>;

fn verdict(criterion: u32, ok: bool, detail: &str) {
    let line = format!(
        "criterion {criterion}: {} {detail}\n",
        if ok { "PASS" } else { "FAIL" }
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Pauli matrices built here rather than taken from the library.
fn oracle_pauli(k: usize) -> M {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    match k {
        0 => M::from_row_slice(2, 2, &[one, z, z, one]),
        1 => M::from_row_slice(2, 2, &[z, one, one, z]),
        2 => M::from_row_slice(2, 2, &[z, -i, i, z]),
        _ => M::from_row_slice(2, 2, &[one, z, z, -one]),
    }
}

fn oracle_tensor(index: usize, n: u32) -> M {
    (0..n).fold(M::identity(1, 1), |acc, k| {
        acc.kronecker(&oracle_pauli(index >> (2 * (n - 1 - k)) & 3))
    })
}

/// S_k = Tr(ρ σ_k) / 2^n
fn oracle_stokes(rho: &M, n: u32) -> Vec<f64> {
    let dim = (1usize << n) as f64;
    (0..1usize << (2 * n))
        .map(|k| (rho * oracle_tensor(k, n)).trace().re / dim)
        .collect()
}

/// Tr(ρ σ_y^⊗n ρ* σ_y^⊗n)
fn oracle_tr_rho_flip(rho: &M, n: u32) -> f64 {
    let yy = (0..n).fold(M::identity(1, 1), |acc, _| acc.kronecker(&oracle_pauli(2)));
    (rho * &yy * rho.conjugate() * &yy).trace().re
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn random_states(n: u32, count: usize, seed: u64) -> Vec<DensityMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            if k % 2 == 0 {
                pure_state(n, &mut rng)
            } else {
                mixed_state(n, &mut rng)
            }
        })
        .collect()
}

/// Nets exercised by the route and round-trip criteria.
fn tested_nets(n: u32) -> Vec<u128> {
    match n {
        1 => (0..8).collect(),
        2 => (0..64).map(|k| k * 16 + (k * 7) % 16).collect(),
        _ => vec![0],
    }
}

// DWFs of I, X, Y, Z as grids: rows p = A (top) and p = D (bottom),
// columns q = H and q = V. H, D are 0 and V, A are 1.
const PAULI_GRIDS: [[[f64; 2]; 2]; 4] = [
    [[0.5, 0.5], [0.5, 0.5]],
    [[-0.5, -0.5], [0.5, 0.5]],
    [[-0.5, 0.5], [0.5, -0.5]],
    [[0.5, -0.5], [0.5, -0.5]],
];

fn pauli_grid_vector(k: usize) -> Vec<f64> {
    let grid = PAULI_GRIDS[k];
    let mut w = vec![0.0; 4];
    for q in 0..2 {
        for p in 0..2 {
            let row = 1 - p;
            w[q * 2 + p] = grid[row][q];
        }
    }
    w
}

const FORWARD_SIGNS: [[i8; 4]; 4] = [
    [1, 1, 1, 1],
    [1, -1, 1, -1],
    [1, -1, -1, 1],
    [1, 1, -1, -1],
];

// The quoted single-qubit inverse, entries times 2.
const QUOTED_INVERSE_SIGNS: [[i8; 4]; 4] = [
    [1, 1, 1, 1],
    [1, -1, 1, -1],
    [1, 1, -1, -1],
    [1, -1, -1, 1],
];

#[test]
fn criterion_1_pauli_dwf_table() {
    let start = Instant::now();
    let frame = Frame::new(1).unwrap();
    let ops = frame.operators(0).unwrap();
    let mut worst: f64 = 0.0;
    for k in 0..4 {
        let op = dwfkit::quantops::ComplexMatrix::from_inner(oracle_pauli(k));
        let w = dwf_of_operator(&op, &ops).unwrap();
        worst = worst.max(max_diff(&w, &pauli_grid_vector(k)));
    }
    let elapsed = start.elapsed();
    let ok = worst < 1e-12 && elapsed < Duration::from_secs(1);
    verdict(1, ok, &format!("max |W - grid| = {worst:.1e}, {elapsed:.2?}"));
    assert!(ok);
}

#[test]
fn criterion_2_one_qubit_hadamard_and_inverse() {
    let start = Instant::now();
    let frame = Frame::new(1).unwrap();
    let h = build_h(&frame.operators(0).unwrap()).unwrap();

    let forward: Vec<Vec<i8>> = FORWARD_SIGNS.iter().map(|r| r.to_vec()).collect();
    let forward_ok = h.sign_rows() == forward && h.scale() == 0.5;

    let nh = DMatrix::from_fn(4, 4, |r, col| 4.0 * h.entry(r, col));
    let hadamard_res = (&nh * nh.transpose() - DMatrix::identity(4, 4) * 16.0).amax();
    let hadamard_ok = hadamard_res == 0.0;

    let hm = DMatrix::from_fn(4, 4, |r, col| h.entry(r, col));
    let inverse = hm.clone().try_inverse().unwrap();
    let lib_inverse = h.inverse_matrix();
    let lib_res = (0..4)
        .flat_map(|r| (0..4).map(move |col| (r, col)))
        .map(|(r, col)| (inverse[(r, col)] - lib_inverse[r][col]).abs())
        .fold(0.0, f64::max);
    let quoted = DMatrix::from_fn(4, 4, |r, col| 0.5 * QUOTED_INVERSE_SIGNS[r][col] as f64);
    let quoted_res = (&inverse - &quoted).amax();
    let quoted_ok = quoted_res < 1e-12;

    let elapsed = start.elapsed();
    let ok = forward_ok && hadamard_ok && lib_res < 1e-12 && quoted_ok && elapsed < Duration::from_secs(1);
    verdict(
        2,
        ok,
        &format!(
            "H = forward sign matrix: {forward_ok}; N·H·(N·H)ᵀ = N²·I: {hadamard_ok}; \
             inverse = quoted inverse: {quoted_ok} (max diff {quoted_res:.2}), {elapsed:.2?}"
        ),
    );
    assert!(forward_ok && hadamard_ok && lib_res < 1e-12);
    assert!(quoted_ok, "computed inverse differs from the quoted inverse by {quoted_res}");
}

#[test]
fn criterion_3_phase_point_algebra() {
    let mut worst: f64 = 0.0;
    let mut n3_time = Duration::ZERO;
    for n in 1..=3 {
        let start = Instant::now();
        let frame = Frame::new(n).unwrap();
        let ops = frame.operators(0).unwrap();
        let dim = frame.order();
        let a: Vec<&M> = ops.ops().iter().map(|m| m.inner()).collect();
        for (i, ai) in a.iter().enumerate() {
            worst = worst.max((ai.trace() - c(1.0, 0.0)).norm());
            for (j, aj) in a.iter().enumerate() {
                let expect = if i == j { dim as f64 } else { 0.0 };
                worst = worst.max(((*ai * *aj).trace() - c(expect, 0.0)).norm());
            }
        }
        let total = a.iter().fold(M::zeros(dim, dim), |acc, m| acc + *m);
        worst = worst.max((total - M::identity(dim, dim) * c(dim as f64, 0.0)).camax());
        for line in frame.space().lines() {
            let sum = line
                .points
                .iter()
                .fold(M::zeros(dim, dim), |acc, pt| acc + ops.at(*pt).inner());
            let v = ops.assignment().vector(line.striation, line.c);
            let q = v * v.adjoint();
            worst = worst.max((sum - q * c(dim as f64, 0.0)).camax());
        }
        if n == 3 {
            n3_time = start.elapsed();
        }
    }
    let ok = worst < 1e-8 && n3_time < Duration::from_secs(30);
    verdict(3, ok, &format!("max residual {worst:.1e}, n=3 in {n3_time:.2?}"));
    assert!(ok);
}

#[test]
fn criterion_4_mutually_unbiased() {
    let mut worst: f64 = 0.0;
    for n in 1..=3 {
        let frame = Frame::new(n).unwrap();
        let bases: &[Vec<StateVector>] = frame.mubs().bases();
        assert_eq!(bases.len(), frame.order() + 1);
        let inv_n = 1.0 / frame.order() as f64;
        for (i, bi) in bases.iter().enumerate() {
            for (j, bj) in bases.iter().enumerate() {
                for (k, u) in bi.iter().enumerate() {
                    for (l, v) in bj.iter().enumerate() {
                        let ov = u.dotc(v).norm_sqr();
                        let expect = if i != j {
                            inv_n
                        } else if k == l {
                            1.0
                        } else {
                            0.0
                        };
                        worst = worst.max((ov - expect).abs());
                    }
                }
            }
        }
    }
    let ok = worst < 1e-10;
    verdict(4, ok, &format!("max ||<v|u>|² - 1/N| = {worst:.1e} for n ≤ 3"));
    assert!(ok);
}

#[test]
fn criterion_5_stokes_routes_agree() {
    let mut worst: f64 = 0.0;
    let mut evaluated = 0usize;
    for n in 1..=3 {
        let frame = Frame::new(n).unwrap();
        let states = random_states(n, 100, 500 + n as u64);
        let oracle: Vec<Vec<f64>> = states
            .iter()
            .map(|r| oracle_stokes(r.matrix().inner(), n))
            .collect();
        for net in tested_nets(n) {
            let ops = frame.operators(net).unwrap();
            let h = build_h(&ops).unwrap();
            for (rho, s) in states.iter().zip(&oracle) {
                let w = dwf_from_density(rho, &ops).unwrap();
                let via_h = stokes_from_dwf(&w, &h).unwrap();
                worst = worst.max(max_diff(via_h.values(), s));
                evaluated += 1;
            }
        }
    }
    let ok = worst < 1e-10;
    verdict(5, ok, &format!("max |H·W - S| = {worst:.1e} over {evaluated} state/net pairs"));
    assert!(ok);
}

#[test]
fn criterion_6_spin_flip_structure() {
    let start = Instant::now();
    let mut t_same = true;
    let mut involution = true;
    let mut closure = true;
    for n in 1..=2 {
        let frame = Frame::new(n).unwrap();
        let family = HadamardFamily::build(n).unwrap();
        let t0 = build_t(&frame.operators(0).unwrap()).unwrap();
        let dim = frame.order() * frame.order();
        let tm = DMatrix::from_fn(dim, dim, |r, col| t0.entry(r, col));
        involution &= (&tm * &tm - DMatrix::identity(dim, dim)).amax() < 1e-10;
        for h in family.members() {
            let ops = frame.operators(h.net_index()).unwrap();
            let t = build_t(&ops).unwrap();
            let diff = (0..dim)
                .flat_map(|r| (0..dim).map(move |col| (r, col)))
                .map(|(r, col)| (t.entry(r, col) - t0.entry(r, col)).abs())
                .fold(0.0, f64::max);
            t_same &= diff < 1e-10;
            let ht = build_h_tilde(h, &t).unwrap();
            closure &= family.find(&ht).is_some();
        }
    }
    let elapsed = start.elapsed();
    let ok = t_same && involution && closure && elapsed < Duration::from_secs(300);
    verdict(
        6,
        ok,
        &format!("T net-independent: {t_same}; T² = I: {involution}; H·T in family (8 + 1024 nets): {closure}; {elapsed:.2?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_7_entanglement_scalars() {
    let frame = Frame::new(2).unwrap();
    let ops = frame.operators(0).unwrap();
    let t = build_t(&ops).unwrap();
    let pure = |amps: [Complex64; 4]| {
        DensityMatrix::from_pure(&StateVector::from_row_slice(&amps)).unwrap()
    };
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let z = c(0.0, 0.0);
    let bells = [
        [c(r, 0.0), z, z, c(r, 0.0)],
        [c(r, 0.0), z, z, c(-r, 0.0)],
        [z, c(r, 0.0), c(r, 0.0), z],
        [z, c(r, 0.0), c(-r, 0.0), z],
    ];
    let mut bell_res: f64 = 0.0;
    for amps in bells {
        let w = dwf_from_density(&pure(amps), &ops).unwrap();
        bell_res = bell_res.max((concurrence_pure(&w, &t).unwrap() - 1.0).abs());
    }
    let hh = dwf_from_density(&pure([c(1.0, 0.0), z, z, z]), &ops).unwrap();
    let hh_res = concurrence_pure(&hh, &t).unwrap().abs();

    let mut sweep_res: f64 = 0.0;
    for k in 0..=64 {
        let theta = std::f64::consts::PI * k as f64 / 64.0;
        let rho = pure([c(theta.cos(), 0.0), z, z, c(theta.sin(), 0.0)]);
        let w = dwf_from_density(&rho, &ops).unwrap();
        let conc = concurrence_pure(&w, &t).unwrap();
        let oracle = oracle_tr_rho_flip(rho.matrix().inner(), 2).max(0.0).sqrt();
        sweep_res = sweep_res
            .max((conc - oracle).abs())
            .max((conc - (2.0 * theta).sin().abs()).abs());
    }

    let mut identity_res: f64 = 0.0;
    for n in 1..=3 {
        let frame = Frame::new(n).unwrap();
        let ops = frame.operators(0).unwrap();
        let t = build_t(&ops).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(700 + n as u64);
        for _ in 0..100 {
            let rho = mixed_state(n, &mut rng);
            let sc = state_scalars(&dwf_from_density(&rho, &ops).unwrap(), &t).unwrap();
            let m = rho.matrix().inner();
            let purity = (m * m).trace().re;
            let flip = oracle_tr_rho_flip(m, n);
            identity_res = identity_res
                .max(sc.identity_residual)
                .max((sc.minkowski_sq - flip).abs())
                .max((sc.mixedness - (1.0 - purity)).abs());
        }
    }
    let ok = bell_res < 1e-10 && hh_res < 1e-10 && sweep_res < 1e-8 && identity_res < 1e-10;
    verdict(
        7,
        ok,
        &format!(
            "Bell {bell_res:.1e}; HH {hh_res:.1e}; θ-sweep {sweep_res:.1e}; |S² + M - I| {identity_res:.1e}"
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_8_round_trips() {
    let mut worst: f64 = 0.0;
    for n in 1..=3 {
        let frame = Frame::new(n).unwrap();
        let states = random_states(n, 40, 800 + n as u64);
        for net in tested_nets(n) {
            let ops = frame.operators(net).unwrap();
            let h = build_h(&ops).unwrap();
            for rho in &states {
                let w = dwf_from_density(rho, &ops).unwrap();
                let back = density_from_dwf(&w, &ops).unwrap();
                worst = worst.max(back.matrix().max_abs_diff(rho.matrix()));
                let s = stokes_from_density(rho);
                let s_back = stokes_from_dwf(&dwf_from_stokes(&s, &h).unwrap(), &h).unwrap();
                worst = worst.max(max_diff(s_back.values(), s.values()));
            }
        }
    }
    let ok = worst < 1e-10;
    verdict(8, ok, &format!("max round-trip residual {worst:.1e}"));
    assert!(ok);
}

#[test]
fn criterion_9_property_substitution() {
    // The only fixed reference values are the Pauli DWF grids and the two
    // one-qubit matrices (criteria 1 and 2); everything else is
    // property-based (criteria 3 to 8 and tests/properties.rs).
    verdict(9, true, "no fixed reference values beyond criteria 1 and 2; property suites stand in");
}
