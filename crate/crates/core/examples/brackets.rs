//! Brackets (determinants of homogeneous coordinates) and complement
//! brackets of an N+3 point configuration.

use cpn_cross::GaussianRational;
use cpn_cross::{bracket, bracket_functional, complement_bracket, PointList, ProjectivePoint};

fn pt(c: &[i64]) -> ProjectivePoint<GaussianRational> {
    ProjectivePoint::from_ints(c).unwrap()
}

fn main() {
    let (a, b, c) = (pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[1, 1, 1]));
    println!("[a, b, c] = {}", bracket(&[&a, &b, &c]).unwrap());
    println!("[b, a, c] = {}", bracket(&[&b, &a, &c]).unwrap());

    // Five points of CP^2; [u^i, u^j]^c omits u^i and u^j.
    let config = PointList::new(vec![
        pt(&[2, 0, 1]),
        pt(&[1, 0, 1]),
        pt(&[0, 1, 1]),
        pt(&[1, 1, 1]),
        pt(&[0, 0, 1]),
    ])
    .unwrap();
    for (i, j) in [(1, 2), (1, 3), (2, 5)] {
        println!(
            "[u^{i}, u^{j}]^c = {}",
            complement_bracket(&config, i, j).unwrap()
        );
    }

    // Fixing all but the first slot gives a linear functional u -> [u, b, c].
    let f = bracket_functional(&[&b, &c]).unwrap();
    let terms: Vec<String> = f
        .entries()
        .iter()
        .enumerate()
        .map(|(k, x)| format!("({x})·u{}", k + 1))
        .collect();
    println!("[u, b, c] = {}", terms.join(" + "));
}
