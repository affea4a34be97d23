//! The scalar cross ratio and the cross-ratio N-tuple in CP^2, and the
//! reduction of the CP^2 cross ratio to the one on the line.

use cpn_cross::ProjectivePoint;
use cpn_cross::{
    cross_ratio_hom, cross_ratio_tuple, reduction_pair, ExtendedPoint, GaussianRational,
};

type Q = GaussianRational;

fn affine(c: &[i64]) -> ProjectivePoint<Q> {
    ExtendedPoint::from_ints(c).lift()
}

fn main() {
    let pts: Vec<_> = [[2, 0], [1, 0], [0, 1], [1, 1], [0, 0]]
        .iter()
        .map(|c| affine(c))
        .collect();
    let t = cross_ratio_tuple(&pts).unwrap();
    println!("tuple  = {t}");

    let pts: Vec<_> = [[2, 9], [3, 1], [4, 7], [5, -2], [1, 1]]
        .iter()
        .map(|c| affine(c))
        .collect();
    println!("scalar = {}", cross_ratio_hom(&pts).unwrap());

    // Points of the line embedded in the plane, with (0, 1, 0) appended.
    let line: Vec<_> = [2, 3, 4, 5].iter().map(|&x| affine(&[x])).collect();
    let (plane, on_line) = reduction_pair(&line, 17).unwrap();
    println!("in CP^2: {plane}\non CP^1: {on_line}");
}
