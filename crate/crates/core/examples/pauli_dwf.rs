//! DWFs of the single-qubit Paulis under net 0, printed as 2x2 grids
//! (columns q = H, V; rows p = A above D), and the trace rule
//! Tr(XY) = N * sum W^X W^Y.

use dwfkit::quantops::{dwf_of_operator, pauli};
use dwfkit::Frame;

fn main() -> dwfkit::Result<()> {
    let frame = Frame::new(1)?;
    let ops = frame.operators(0)?;
    let names = ["I", "X", "Y", "Z"];
    let mut dwfs = Vec::new();
    for (k, name) in names.iter().enumerate() {
        let w = dwf_of_operator(&pauli(k)?, &ops)?;
        println!("W^{name}:");
        println!("  A | {:5.2} {:5.2}", w[1], w[3]);
        println!("  D | {:5.2} {:5.2}", w[0], w[2]);
        dwfs.push(w);
    }

    for i in 0..4 {
        let row: Vec<f64> = (0..4)
            .map(|j| 2.0 * dwfs[i].iter().zip(&dwfs[j]).map(|(a, b)| a * b).sum::<f64>())
            .collect();
        println!("Tr({} _) = {row:?}", names[i]);
    }
    Ok(())
}
