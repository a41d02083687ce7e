//! Striation measurements: exact line probabilities next to sampled
//! frequencies for a random two-qubit state.

use dwfkit::cli::{measure, Shots, State, StateFile};
use dwfkit::random::mixed_state;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> dwfkit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let file = StateFile::from_state(&State::Density(mixed_state(2, &mut rng)))?;
    for striation in 0..5 {
        let exact = measure(&file, striation, Shots::Exact, 0, None)?;
        let sampled = measure(&file, striation, Shots::Count(100_000), 7, None)?;
        println!("striation {striation}");
        for (k, p) in exact.probabilities.iter().enumerate() {
            println!(
                "  line {k}: p = {p:.4}  line sum = {:.4}  sampled = {:.4}",
                exact.dwf_line_sums[k],
                sampled.estimates.as_ref().unwrap()[k]
            );
        }
    }
    Ok(())
}
