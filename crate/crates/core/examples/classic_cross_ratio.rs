//! The cross ratio of four points on the Riemann sphere, and the same value
//! computed from homogeneous coordinates.

use cpn_cross::{cross_ratio_1d, cross_ratio_hom, lift, ExtendedPoint, GaussianRational, Scalar};

type Q = GaussianRational;

fn main() {
    let z = [2, 3, 4, 5].map(|x| ExtendedPoint::<Q>::from_ints(&[x]));
    let r = cross_ratio_1d([&z[0], &z[1], &z[2], &z[3]]).unwrap();
    println!("(2, 3; 4, 5) = {r}");

    // Factors containing infinity drop out: (z1, ∞; z3, z4) = (z1 - z3) / (z1 - z4).
    let inf = ExtendedPoint::infinity();
    let r = cross_ratio_1d([&z[0], &inf, &z[2], &z[3]]).unwrap();
    println!("(2, ∞; 4, 5) = {r}");

    // The homogeneous formula, applied to lifts (z, 1) and (1, 0), agrees.
    let pts: Vec<_> = [&z[0], &inf, &z[2], &z[3]].into_iter().map(lift).collect();
    println!("homogeneous    = {}", cross_ratio_hom(&pts).unwrap());

    // A Gaussian-rational quadruple.
    let w = [(1, 2), (0, -1), (3, 0), (-2, 1)]
        .map(|(re, im)| ExtendedPoint::scalar(Q::from_ints(re, im)));
    let r = cross_ratio_1d([&w[0], &w[1], &w[2], &w[3]]).unwrap();
    println!("(1+2i, -i; 3, -2+i) = {}", r.finite().unwrap());
}
