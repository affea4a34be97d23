//! Four points lie on a circle or line exactly when their cross ratio is real.

use cpn_cross::{circline_through, contains, cross_ratio_1d, is_concyclic, ExtendedPoint};
use cpn_cross::{GaussianRational, Scalar};

type Q = GaussianRational;

fn main() {
    let z = |re: i64, im: i64| ExtendedPoint::scalar(Q::from_ints(re, im));
    let cases = [
        (
            "square on the unit circle",
            [z(1, 0), z(0, 1), z(-1, 0), z(0, -1)],
        ),
        (
            "0, 1, ∞, i",
            [z(0, 0), z(1, 0), ExtendedPoint::infinity(), z(0, 1)],
        ),
        ("collinear", [z(0, 0), z(1, 0), z(2, 0), z(3, 0)]),
        ("3 + 4i on |z| = 5", [z(3, 4), z(5, 0), z(0, 5), z(-4, -3)]),
    ];
    for (name, p) in &cases {
        let r = cross_ratio_1d([&p[0], &p[1], &p[2], &p[3]]).unwrap();
        let real = is_concyclic([&p[0], &p[1], &p[2], &p[3]]).unwrap();
        let c = circline_through(&p[1], &p[2], &p[3]).unwrap();
        let on = contains(&c, &p[0]).unwrap();
        println!("{name}: cross ratio {r}\n  real: {real}, first point on {c}: {on}");
    }
}
