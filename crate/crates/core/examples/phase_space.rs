//! The N x N phase space over GF(2^n): striations of parallel lines and
//! how the translations move points.

use dwfkit::phasespace::{build_phase_space, QuantumNet};

fn main() -> dwfkit::Result<()> {
    let space = build_phase_space(1)?;
    for s in space.striations() {
        let lines: Vec<Vec<usize>> = s
            .lines
            .iter()
            .map(|l| l.points.iter().map(|p| p.index(space.order())).collect())
            .collect();
        println!("striation {} (a={}, b={}): {lines:?}", s.index, s.a.bits(), s.b.bits());
    }

    let space = build_phase_space(2)?;
    let origin = space.points()[0];
    println!(
        "n=2: {} points, {} striations, {} lines through the origin",
        space.points().len(),
        space.striations().len(),
        space.lines_through(origin).count()
    );
    for n in 1..=4 {
        println!("n={n}: {} quantum nets", QuantumNet::count(n)?);
    }
    let net = QuantumNet::from_index(2, 1000)?;
    let offsets: Vec<u8> = net.offsets().iter().map(|o| o.bits()).collect();
    println!("net 1000 of n=2 has offsets {offsets:?}");
    Ok(())
}
