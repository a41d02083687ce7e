//! Mutually unbiased bases from the translation operators. For one qubit
//! they are the H/V, D/A and R/L polarization bases.

use dwfkit::Frame;

fn main() -> dwfkit::Result<()> {
    let frame = Frame::new(1)?;
    for (s, basis) in frame.mubs().bases().iter().enumerate() {
        let vs: Vec<String> = basis
            .iter()
            .map(|v| format!("({:.3}, {:.3})", v[0], v[1]))
            .collect();
        println!("striation {s}: {}", vs.join("  "));
    }

    for n in 1..=3 {
        let frame = Frame::new(n)?;
        let bases = frame.mubs().bases();
        let inv = 1.0 / frame.order() as f64;
        let mut worst: f64 = 0.0;
        for (i, a) in bases.iter().enumerate() {
            for b in &bases[i + 1..] {
                for u in a {
                    for v in b {
                        worst = worst.max((u.dotc(v).norm_sqr() - inv).abs());
                    }
                }
            }
        }
        println!("n={n}: {} bases, max ||<u|v>|^2 - 1/N| = {worst:.1e}", bases.len());
    }
    Ok(())
}
