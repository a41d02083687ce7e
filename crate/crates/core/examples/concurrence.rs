//! Entanglement scalars read off a DWF: concurrence across a sweep of
//! cos θ|00> + sin θ|11>, and S² + M = I on random mixed states.

use dwfkit::entangle::{concurrence_pure, state_scalars};
use dwfkit::quantops::{dwf_from_density, DensityMatrix, StateVector};
use dwfkit::random::mixed_state;
use dwfkit::transform::build_t;
use dwfkit::Frame;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> dwfkit::Result<()> {
    let frame = Frame::new(2)?;
    let ops = frame.operators(0)?;
    let t = build_t(&ops)?;
    println!("{:>6} {:>10} {:>10}", "theta", "C", "|sin 2θ|");
    for k in 0..=8 {
        let theta = std::f64::consts::FRAC_PI_2 * k as f64 / 8.0;
        let z = Complex64::new(0.0, 0.0);
        let psi = StateVector::from_vec(vec![
            Complex64::new(theta.cos(), 0.0),
            z,
            z,
            Complex64::new(theta.sin(), 0.0),
        ]);
        let w = dwf_from_density(&DensityMatrix::from_pure(&psi)?, &ops)?;
        println!(
            "{theta:6.3} {:10.6} {:10.6}",
            concurrence_pure(&w, &t)?,
            (2.0 * theta).sin().abs()
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..=3 {
        let frame = Frame::new(n)?;
        let ops = frame.operators(0)?;
        let t = build_t(&ops)?;
        let rho = mixed_state(n, &mut rng);
        let sc = state_scalars(&dwf_from_density(&rho, &ops)?, &t)?;
        println!(
            "n={n}: S²={:.4} M={:.4} I={:.4} residual {:.1e}",
            sc.minkowski_sq, sc.mixedness, sc.indistinguishability, sc.identity_residual
        );
    }
    Ok(())
}
