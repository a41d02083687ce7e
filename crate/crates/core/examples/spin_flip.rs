//! The spin flip ρ -> σy⊗n ρ* σy⊗n as a fixed matrix T on DWFs, and the
//! net whose H equals H·T.

use dwfkit::quantops::{dwf_from_density, DensityMatrix, StateVector};
use dwfkit::transform::{build_h, build_h_tilde, build_t, spin_flip_density, spin_flip_dwf, spin_flipped_net};
use dwfkit::Frame;
use num_complex::Complex64;

fn main() -> dwfkit::Result<()> {
    let frame = Frame::new(1)?;
    let ops = frame.operators(0)?;
    let t = build_t(&ops)?;
    println!("T (n=1) = {:?} x {}", t.sign_rows(), t.scale());

    let psi = StateVector::from_vec(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]);
    let rho = DensityMatrix::from_pure(&psi)?;
    let w = dwf_from_density(&rho, &ops)?;
    let flipped = spin_flip_dwf(&w, &t)?;
    let direct = dwf_from_density(&spin_flip_density(&rho), &ops)?;
    println!("W        = {:.3?}", w.values());
    println!("T W      = {:.3?}", flipped.values());
    println!("W(ρ̃)     = {:.3?}", direct.values());

    for n in 1..=3 {
        let frame = Frame::new(n)?;
        let net = frame.net(1)?;
        let ops = frame.operators_for(&net)?;
        let ht = build_h_tilde(&build_h(&ops)?, &build_t(&ops)?)?;
        let partner = spin_flipped_net(&frame, &net)?;
        let hp = build_h(&frame.operators_for(&partner)?)?;
        println!(
            "n={n}: H(1)·T = H({}) : {}",
            partner.index(),
            ht.signs() == hp.signs()
        );
    }
    Ok(())
}
