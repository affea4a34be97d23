//! How many distinct values the cross ratio takes over all orderings of a
//! configuration: 6 of 24 on the line, 30 of 120 in the plane.

use cpn_cross::{permutation_values, sampling};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for dim in [1, 2] {
        let pts = sampling::general_position(&mut rng, dim, dim + 3);
        let sweep = permutation_values(&pts).unwrap();
        println!(
            "CP^{dim}: {} orderings, {} distinct values, multiplicities {:?}",
            sweep.total(),
            sweep.distinct_count(),
            sweep.multiplicities()
        );
        for class in sweep.classes.iter().take(3) {
            println!("  first reached by {:?}: {}", class.witness, class.value);
        }
    }
}
