//! The unique map taking N+2 given points to N+2 others, solved exactly and
//! in floating point.

use cpn_cross::{sampling, solve_correspondence, ExtendedPoint, GaussianRational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = GaussianRational;

fn main() {
    // z -> 1 - z swaps 0 and 1 and fixes infinity.
    let z = |x: i64| ExtendedPoint::<Q>::from_ints(&[x]);
    let inf = ExtendedPoint::infinity();
    let chi = solve_correspondence(&[z(0), z(1), inf.clone()], &[z(1), z(0), inf]).unwrap();
    let m = chi.associated_matrix().canonicalize();
    for row in m.inner().rows() {
        println!(
            "  {}",
            row.iter().map(|x| format!("{x:>6}")).collect::<String>()
        );
    }

    // A random pair of configurations in C^3.
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let src = sampling::independent_affine_configuration(&mut rng, 3, 0.2);
    let dst = sampling::independent_affine_configuration(&mut rng, 3, 0.2);
    let exact = solve_correspondence(&src, &dst).unwrap();
    let float = solve_correspondence(
        &src.iter().map(ExtendedPoint::to_float).collect::<Vec<_>>(),
        &dst.iter().map(ExtendedPoint::to_float).collect::<Vec<_>>(),
    )
    .unwrap();
    for (s, d) in src.iter().zip(&dst) {
        let e = exact.evaluate(s).unwrap();
        let f = float.evaluate(&s.to_float()).unwrap();
        println!(
            "exact hit: {}, float within tolerance: {}",
            &e == d,
            f == d.to_float()
        );
    }
    println!(
        "float matrix matches exact up to scale: {}",
        float
            .associated_matrix()
            .projectively_equal(&exact.associated_matrix().to_float())
    );
}
