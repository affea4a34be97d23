//! Seeded random instances for property checks, the `verify` command and
//! the examples. Everything is drawn as small Gaussian rationals, so the
//! same instance can be replayed on either backend.

use rand::Rng;

use crate::geometry1d::{circline_through, contains};
use crate::numeric::{GaussianRational, Scalar, SquareMatrix};
use crate::projective::{ExtendedPoint, ProjectivePoint};
use crate::transitivity::check_independence;

type Q = GaussianRational;

/// A Gaussian rational with numerators in `-range..=range` and
/// denominators in `1..=max_den`.
pub fn gaussian_rational<R: Rng>(rng: &mut R, range: i64, max_den: i64) -> Q {
    Q::from_ratios(
        rng.gen_range(-range..=range),
        rng.gen_range(1..=max_den),
        rng.gen_range(-range..=range),
        rng.gen_range(1..=max_den),
    )
}

/// A real rational `p/q`.
pub fn real_rational<R: Rng>(rng: &mut R, range: i64, max_den: i64) -> Q {
    Q::from_ratios(
        rng.gen_range(-range..=range),
        rng.gen_range(1..=max_den),
        0,
        1,
    )
}

pub fn nonzero_gaussian<R: Rng>(rng: &mut R, range: i64, max_den: i64) -> Q {
    loop {
        let z = gaussian_rational(rng, range, max_den);
        if !z.is_zero() {
            return z;
        }
    }
}

pub fn finite_point<R: Rng>(rng: &mut R, dim: usize) -> ExtendedPoint<Q> {
    ExtendedPoint::Finite((0..dim).map(|_| gaussian_rational(rng, 9, 4)).collect())
}

/// A random point of `CP^dim` with rational homogeneous coordinates.
pub fn projective_point<R: Rng>(rng: &mut R, dim: usize) -> ProjectivePoint<Q> {
    loop {
        let coords = (0..=dim).map(|_| gaussian_rational(rng, 9, 4)).collect();
        if let Ok(p) = ProjectivePoint::new(coords) {
            return p;
        }
    }
}

/// `count` points of `CP^dim`, redrawn until every `(dim+1)`-subset is
/// linearly independent (general position).
pub fn general_position<R: Rng>(rng: &mut R, dim: usize, count: usize) -> Vec<ProjectivePoint<Q>> {
    loop {
        let pts: Vec<_> = (0..count).map(|_| projective_point(rng, dim)).collect();
        if in_general_position(&pts) {
            return pts;
        }
    }
}

fn in_general_position(pts: &[ProjectivePoint<Q>]) -> bool {
    let k = pts.first().map_or(0, |p| p.dim() + 1);
    let mut idx: Vec<usize> = (0..k).collect();
    if k > pts.len() {
        return true;
    }
    loop {
        let cols: Vec<&[Q]> = idx.iter().map(|&i| pts[i].coords()).collect();
        if SquareMatrix::from_columns(&cols).unwrap().det().is_zero() {
            return false;
        }
        // next k-combination of 0..len
        let n = pts.len();
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return true;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `dim + 2` points of `CP^dim` satisfying the independence hypothesis.
pub fn independent_configuration<R: Rng>(rng: &mut R, dim: usize) -> Vec<ProjectivePoint<Q>> {
    loop {
        let pts: Vec<_> = (0..dim + 2).map(|_| projective_point(rng, dim)).collect();
        if check_independence(&pts).is_ok() {
            return pts;
        }
    }
}

/// Affine version of [`independent_configuration`], including points at
/// infinity with probability `inf_prob`.
pub fn independent_affine_configuration<R: Rng>(
    rng: &mut R,
    dim: usize,
    inf_prob: f64,
) -> Vec<ExtendedPoint<Q>> {
    loop {
        let pts: Vec<ExtendedPoint<Q>> = (0..dim + 2)
            .map(|_| {
                if rng.gen_bool(inf_prob) {
                    let d: Vec<Q> = (0..dim).map(|_| gaussian_rational(rng, 9, 4)).collect();
                    ExtendedPoint::at_infinity(d).unwrap_or_else(|_| finite_point(rng, dim))
                } else {
                    finite_point(rng, dim)
                }
            })
            .collect();
        let lifted: Vec<_> = pts.iter().map(ExtendedPoint::lift).collect();
        if check_independence(&lifted).is_ok() {
            return pts;
        }
    }
}

/// An invertible `dim × dim` matrix with Gaussian-integer entries in `[-range, range]`.
pub fn invertible_matrix<R: Rng>(rng: &mut R, dim: usize, range: i64) -> SquareMatrix<Q> {
    loop {
        let entries = (0..dim * dim)
            .map(|_| Q::from_ints(rng.gen_range(-range..=range), rng.gen_range(-range..=range)))
            .collect();
        let m = SquareMatrix::new(dim, entries).expect("square");
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Four distinct points of the Riemann sphere, one of them `∞` with
/// probability `inf_prob`.
pub fn sphere_quadruple<R: Rng>(rng: &mut R, inf_prob: f64) -> [ExtendedPoint<Q>; 4] {
    loop {
        let mut zs: Vec<ExtendedPoint<Q>> = (0..4).map(|_| finite_point(rng, 1)).collect();
        if rng.gen_bool(inf_prob) {
            let k = rng.gen_range(0..4);
            zs[k] = ExtendedPoint::infinity();
        }
        if distinct(&zs) {
            return zs.try_into().expect("four points");
        }
    }
}

fn distinct(zs: &[ExtendedPoint<Q>]) -> bool {
    (0..zs.len()).all(|a| (a + 1..zs.len()).all(|b| zs[a] != zs[b]))
}

/// Four distinct points on one rational circle or line. Circle points use
/// `t ↦ ((1−t²)/(1+t²), 2t/(1+t²))`, rotated, scaled and translated; a
/// line may include `∞`.
pub fn circline_quadruple<R: Rng>(rng: &mut R, line_prob: f64) -> [ExtendedPoint<Q>; 4] {
    loop {
        let center = gaussian_rational(rng, 5, 3);
        let r = nonzero_gaussian(rng, 4, 3);
        let line = rng.gen_bool(line_prob);
        let zs: Vec<ExtendedPoint<Q>> = (0..4)
            .map(|k| {
                let (n, d) = (rng.gen_range(-9i64..=9), rng.gen_range(1i64..=6));
                if line {
                    if k == 3 && rng.gen_bool(0.5) {
                        return ExtendedPoint::infinity();
                    }
                    ExtendedPoint::scalar(center.clone() + Q::from_ratios(n, d, 0, 1) * r.clone())
                } else {
                    let (n2, d2) = (n * n, d * d);
                    let unit = Q::from_ratios(d2 - n2, d2 + n2, 2 * n * d, d2 + n2);
                    ExtendedPoint::scalar(center.clone() + r.clone() * unit)
                }
            })
            .collect();
        if distinct(&zs) {
            return zs.try_into().expect("four points");
        }
    }
}

/// Four distinct finite points with the first off the circline through
/// the other three.
pub fn off_circline_quadruple<R: Rng>(rng: &mut R) -> [ExtendedPoint<Q>; 4] {
    loop {
        let zs = sphere_quadruple(rng, 0.0);
        let c = circline_through(&zs[1], &zs[2], &zs[3]).expect("distinct points");
        if !contains(&c, &zs[0]).expect("dimension 1") {
            return zs;
        }
    }
}
