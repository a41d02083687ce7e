//! Multiplication table, traces and the trace-dual basis of GF(2^n).

use dwfkit::gf2n::{FieldBasis, Gf2n};

fn main() -> dwfkit::Result<()> {
    let field = Gf2n::new(2)?;
    println!("GF(4), modulus {:#b}", field.modulus());
    for a in field.elements() {
        let row: Vec<String> = field.elements().map(|b| field.mul(a, b).bits().to_string()).collect();
        println!("  {} * _ = {}", a.bits(), row.join(" "));
    }

    for n in 1..=4 {
        let field = Gf2n::new(n)?;
        let traces: Vec<u8> = field.elements().map(|x| field.trace(x)).collect();
        let basis = FieldBasis::polynomial(field);
        let bits = |v: &[dwfkit::gf2n::FieldElement]| v.iter().map(|e| e.bits()).collect::<Vec<_>>();
        println!(
            "n={n}: traces {traces:?}, basis {:?}, dual {:?}",
            bits(basis.basis()),
            bits(basis.dual())
        );
    }

    // every nonzero element has an inverse
    let f8 = Gf2n::new(3)?;
    for a in f8.elements().skip(1) {
        let inv = f8.inv(a)?;
        assert_eq!(f8.mul(a, inv).bits(), 1);
    }
    Ok(())
}
