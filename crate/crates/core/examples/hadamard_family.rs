//! The family of H matrices over every net, and closure of H·T inside it.

use std::time::Instant;

use dwfkit::transform::{build_h_tilde, build_t, HadamardFamily};
use dwfkit::Frame;

fn main() -> dwfkit::Result<()> {
    for n in 1..=2 {
        let start = Instant::now();
        let family = HadamardFamily::build(n)?;
        let frame = Frame::new(n)?;
        let t = build_t(&frame.operators(0)?)?;
        let mut partners = Vec::new();
        for h in family.members() {
            let ht = build_h_tilde(h, &t)?;
            partners.push(family.find(&ht).expect("H·T is in the family"));
        }
        println!(
            "n={n}: {} nets, {} distinct matrices, closure checked in {:.2?}",
            family.len(),
            family.distinct(),
            start.elapsed()
        );
        let shown: Vec<String> = partners.iter().take(8).enumerate().map(|(k, p)| format!("{k}->{p}")).collect();
        println!("  spin-flip partners: {} ...", shown.join(" "));
    }
    Ok(())
}
