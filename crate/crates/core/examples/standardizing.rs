//! The independence hypothesis and the map sending N+2 points to the
//! standard frame (1, …, 1), e_{N+1}, e_1, …, e_N.

use cpn_cross::transitivity::standard_targets;
use cpn_cross::{check_independence, standardizing_map, GaussianRational, ProjectivePoint};

type Q = GaussianRational;

fn pt(c: &[i64]) -> ProjectivePoint<Q> {
    ProjectivePoint::from_ints(c).unwrap()
}

fn main() {
    let pts = vec![
        pt(&[1, 0, 1]),
        pt(&[0, 1, 1]),
        pt(&[1, 1, 1]),
        pt(&[0, 0, 1]),
    ];
    let w = check_independence(&pts).unwrap();
    let c: Vec<String> = w.coefficients().iter().map(ToString::to_string).collect();
    println!("u^2 = Σ c_k u^(k+2) with c = ({})", c.join(", "));

    let m = standardizing_map(&pts).unwrap();
    println!("standardizing matrix:");
    for row in m.inner().rows() {
        println!(
            "  {}",
            row.iter().map(|x| format!("{x:>6}")).collect::<String>()
        );
    }
    for (k, (p, target)) in pts.iter().zip(standard_targets::<Q>(2)).enumerate() {
        let img = m.apply(p).unwrap().canonicalize();
        println!("  u^{} -> {img} (target {target})", k + 2);
    }

    let bad = vec![
        pt(&[1, 1, 0]),
        pt(&[1, 0, 0]),
        pt(&[0, 1, 0]),
        pt(&[0, 0, 1]),
    ];
    println!("{}", check_independence(&bad).unwrap_err());
}
