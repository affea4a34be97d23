//! A linear fractional map of two variables, its associated matrix, and
//! composition and inversion through matrices.

use cpn_cross::{ExtendedPoint, GaussianRational, LinearFractionalMap, Scalar, SquareMatrix};

type Q = GaussianRational;

fn main() {
    let int = |n: i64| Q::from_ints(n, 0);
    // phi(z) = ((z1 + 1) / (3 - z1), 2 z2 / (3 - z1))
    let phi = LinearFractionalMap::new(
        SquareMatrix::from_ints(&[&[1, 0], &[0, 2]]).unwrap(),
        vec![int(1), int(0)],
        vec![int(-1), int(0)],
        int(3),
    )
    .unwrap();

    let m = phi.associated_matrix();
    for row in m.inner().rows() {
        println!(
            "{}",
            row.iter().map(|x| format!("{x:>8}")).collect::<String>()
        );
    }

    let p = ExtendedPoint::Finite(vec![int(1), int(1)]);
    println!("phi(1, 1) = {}", phi.evaluate(&p).unwrap());
    println!(
        "phi(3, 0) = {}",
        phi.evaluate(&ExtendedPoint::Finite(vec![int(3), int(0)]))
            .unwrap()
    );

    let inv = phi.invert().unwrap();
    let q = ExtendedPoint::Finite(vec![int(0), int(5)]);
    let back = inv.evaluate(&phi.evaluate(&q).unwrap()).unwrap();
    println!("phi^-1(phi(0, 5)) = {back}");

    let twice = phi.compose(&phi).unwrap();
    println!(
        "det of phi∘phi matrix = {}",
        twice.associated_matrix().det()
    );
}
