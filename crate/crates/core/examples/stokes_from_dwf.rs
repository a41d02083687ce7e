//! S = H W: the Hadamard transform from a DWF to the Stokes vector, for
//! net 0 and a few other nets, and its inverse Hᵀ.

use dwfkit::quantops::{dwf_from_density, DensityMatrix, StateVector};
use dwfkit::transform::{build_h, dwf_from_stokes, stokes_from_density, stokes_from_dwf};
use dwfkit::Frame;
use num_complex::Complex64;

fn main() -> dwfkit::Result<()> {
    let frame = Frame::new(1)?;
    // (|H> + i|V>)/sqrt 2 rotated a little towards H
    let (a, b) = (0.8f64.sqrt(), 0.2f64.sqrt());
    let psi = StateVector::from_vec(vec![Complex64::new(a, 0.0), Complex64::new(0.0, b)]);
    let rho = DensityMatrix::from_pure(&psi)?;
    println!("Stokes from the density matrix: {:?}", stokes_from_density(&rho).values());

    for net in [0, 3, 7] {
        let ops = frame.operators(net)?;
        let h = build_h(&ops)?;
        let w = dwf_from_density(&rho, &ops)?;
        let s = stokes_from_dwf(&w, &h)?;
        println!("net {net}: H signs {:?} x {}", h.sign_rows(), h.scale());
        println!("        W = {:.3?}", w.values());
        println!("        S = {:.3?}", s.values());
        let back = dwf_from_stokes(&s, &h)?;
        assert!(back.values().iter().zip(w.values()).all(|(x, y)| (x - y).abs() < 1e-12));
    }

    let h2 = build_h(&Frame::new(2)?.operators(0)?)?;
    println!("n=2 net 0: Hadamard = {}, scale {}", h2.is_hadamard(), h2.scale());
    Ok(())
}
