//! Seeded randomized property suites, run by `cpn-cross verify`.
//!
//! Instances are drawn exactly (small Gaussian rationals) and replayed on
//! the requested backend, so a seed names the same instances on both.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::crossratio::{
    cross_ratio_1d, cross_ratio_hom, cross_ratio_tuple, permutation_values, reduction_pair,
};
use crate::geometry1d::{circline_through, contains, is_concyclic};
use crate::lfm::ProjectiveMatrix;
use crate::numeric::{Backend, GaussianRational, Scalar};
use crate::projective::{ExtendedPoint, ProjectivePoint};
use crate::sampling;
use crate::transitivity::{
    solve_correspondence, solve_correspondence_projective, standard_targets, standardizing_map,
};

type Q = GaussianRational;
type Outcome = std::result::Result<(), String>;

/// Pass/fail counts for one property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// Message from the first failing trial, if any.
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub seed: u64,
    pub backend: Backend,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> usize {
        self.suites.iter().map(|s| s.passed).sum()
    }

    pub fn failed(&self) -> usize {
        self.suites.iter().map(|s| s.failed).sum()
    }

    pub fn is_ok(&self) -> bool {
        self.failed() == 0
    }
}

fn tally(name: &'static str, outcomes: impl IntoIterator<Item = Outcome>) -> SuiteReport {
    let mut report = SuiteReport {
        name,
        passed: 0,
        failed: 0,
        first_failure: None,
    };
    for outcome in outcomes {
        match outcome {
            Ok(()) => report.passed += 1,
            Err(msg) => {
                report.failed += 1;
                report.first_failure.get_or_insert(msg);
            }
        }
    }
    report
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn replay<S: Scalar>(pts: &[ProjectivePoint<Q>]) -> Vec<ProjectivePoint<S>> {
    pts.iter().map(ProjectivePoint::replay).collect()
}

fn apply_all<S: Scalar>(
    m: &ProjectiveMatrix<S>,
    pts: &[ProjectivePoint<S>],
) -> Result<Vec<ProjectivePoint<S>>, String> {
    pts.iter()
        .map(|p| m.apply(p).map_err(|e| e.to_string()))
        .collect()
}

fn agreement<S: Scalar>(rng: &mut ChaCha8Rng, trials: usize) -> SuiteReport {
    tally(
        "agreement",
        (0..trials).map(|_| {
            let zs = sampling::sphere_quadruple(rng, 0.3).map(|z| z.replay::<S>());
            let direct =
                cross_ratio_1d([&zs[0], &zs[1], &zs[2], &zs[3]]).map_err(|e| e.to_string())?;
            let lifted: Vec<_> = zs.iter().map(ExtendedPoint::lift).collect();
            let hom = cross_ratio_hom(&lifted).map_err(|e| e.to_string())?;
            ensure(direct.approx_eq(&hom), || format!("{direct:?} != {hom:?}"))
        }),
    )
}

fn representatives<S: Scalar>(rng: &mut ChaCha8Rng, trials: usize) -> SuiteReport {
    tally(
        "representatives",
        (1..=4).flat_map(|n| (0..trials).map(move |_| n)).map(|n| {
            let pts = sampling::general_position(rng, n, n + 3);
            let scaled: Vec<_> = pts
                .iter()
                .map(|p| {
                    p.scaled(&sampling::nonzero_gaussian(rng, 5, 3))
                        .expect("nonzero")
                })
                .collect();
            let (pts, scaled) = (replay::<S>(&pts), replay::<S>(&scaled));
            let e = |e: crate::error::Error| e.to_string();
            let (a, b) = (
                cross_ratio_hom(&pts).map_err(e)?,
                cross_ratio_hom(&scaled).map_err(e)?,
            );
            ensure(a.approx_eq(&b), || format!("N={n}: scalar {a:?} != {b:?}"))?;
            let (a, b) = (
                cross_ratio_tuple(&pts).map_err(e)?,
                cross_ratio_tuple(&scaled).map_err(e)?,
            );
            ensure(a.approx_eq(&b), || format!("N={n}: tuple {a:?} != {b:?}"))
        }),
    )
}

fn matrix_invariance<S: Scalar>(rng: &mut ChaCha8Rng, trials: usize) -> SuiteReport {
    tally(
        "matrix_invariance",
        (1..=4).flat_map(|n| (0..trials).map(move |_| n)).map(|n| {
            let pts = sampling::general_position(rng, n, n + 3);
            let m = ProjectiveMatrix::new(sampling::invertible_matrix(rng, n + 1, 3))
                .expect("square")
                .replay::<S>();
            let pts = replay::<S>(&pts);
            let img = apply_all(&m, &pts)?;
            let e = |e: crate::error::Error| e.to_string();
            let (a, b) = (
                cross_ratio_hom(&pts).map_err(e)?,
                cross_ratio_hom(&img).map_err(e)?,
            );
            ensure(a.approx_eq(&b), || format!("N={n}: scalar {a:?} != {b:?}"))?;
            let (a, b) = (
                cross_ratio_tuple(&pts).map_err(e)?,
                cross_ratio_tuple(&img).map_err(e)?,
            );
            ensure(a.approx_eq(&b), || format!("N={n}: tuple {a:?} != {b:?}"))
        }),
    )
}

fn reduction<S: Scalar>(rng: &mut ChaCha8Rng, trials: usize) -> SuiteReport {
    use rand::Rng;
    tally(
        "reduction",
        (2..=4).flat_map(|n| (0..trials).map(move |_| n)).map(|n| {
            let pts = replay::<S>(&sampling::general_position(rng, n - 1, n + 2));
            let (lhs, rhs) = reduction_pair(&pts, rng.gen()).map_err(|e| e.to_string())?;
            ensure(lhs.approx_eq(&rhs), || format!("N={n}: {lhs:?} != {rhs:?}"))
        }),
    )
}

fn permutations<S: Scalar>(rng: &mut ChaCha8Rng, trials: usize) -> SuiteReport {
    tally(
        "permutations",
        [(1, 6), (2, 30)]
            .into_iter()
            .flat_map(|c| (0..trials).map(move |_| c))
            .map(|(n, expected)| {
                let pts = replay::<S>(&sampling::general_position(rng, n, n + 3));
                let sweep = permutation_values(&pts).map_err(|e| e.to_string())?;
                let m = sweep.multiplicities();
                ensure(m.len() == expected && m.iter().all(|&k| k == 4), || {
                    format!("N={n}: multiplicities {m:?}")
                })
            }),
    )
}

fn standardizing<S: Scalar>(rng: &mut ChaCha8Rng, trials: usize) -> SuiteReport {
    tally(
        "standardizing",
        (1..=3).flat_map(|n| (0..trials).map(move |_| n)).map(|n| {
            let pts = replay::<S>(&sampling::independent_configuration(rng, n));
            let m = standardizing_map(&pts).map_err(|e| e.to_string())?;
            ensure(m.is_invertible(), || {
                format!("N={n}: singular standardizing map")
            })?;
            let img = apply_all(&m, &pts)?;
            ensure(img == standard_targets::<S>(n), || {
                format!("N={n}: images {img:?}")
            })
        }),
    )
}

fn correspondence<S: Scalar>(rng: &mut ChaCha8Rng, trials: usize) -> SuiteReport {
    tally(
        "correspondence",
        (1..=3).flat_map(|n| (0..trials).map(move |_| n)).map(|n| {
            let src = sampling::independent_affine_configuration(rng, n, 0.2);
            let dst = sampling::independent_affine_configuration(rng, n, 0.2);
            let src: Vec<ExtendedPoint<S>> = src.iter().map(|z| z.replay()).collect();
            let dst: Vec<ExtendedPoint<S>> = dst.iter().map(|z| z.replay()).collect();
            let e = |e: crate::error::Error| e.to_string();
            let chi = solve_correspondence(&src, &dst).map_err(e)?;
            for (s, d) in src.iter().zip(&dst) {
                let w = chi.evaluate(s).map_err(e)?;
                ensure(w == *d, || format!("N={n}: {s:?} -> {w:?}, wanted {d:?}"))?;
            }
            let back = solve_correspondence(&dst, &src).map_err(e)?;
            let round = back
                .associated_matrix()
                .matmul(&chi.associated_matrix())
                .map_err(e)?;
            ensure(round.is_scalar_multiple_of_identity(), || {
                format!("N={n}: backward after forward is {round:?}")
            })
        }),
    )
}

fn uniqueness<S: Scalar>(rng: &mut ChaCha8Rng, trials: usize) -> SuiteReport {
    tally(
        "uniqueness",
        (1..=3).flat_map(|n| (0..trials).map(move |_| n)).map(|n| {
            let pts = replay::<S>(&sampling::independent_configuration(rng, n));
            let e = |e: crate::error::Error| e.to_string();
            let fixed = solve_correspondence_projective(&pts, &pts).map_err(e)?;
            ensure(fixed.is_scalar_multiple_of_identity(), || {
                format!("N={n}: fixing map {fixed:?}")
            })?;
            let m = ProjectiveMatrix::new(sampling::invertible_matrix(rng, n + 1, 3))
                .expect("square")
                .replay::<S>();
            let img = apply_all(&m, &pts)?;
            let solved = solve_correspondence_projective(&pts, &img).map_err(e)?;
            ensure(solved.projectively_equal(&m), || {
                format!("N={n}: recovered {solved:?}, applied {m:?}")
            })
        }),
    )
}

fn concyclic<S: Scalar>(rng: &mut ChaCha8Rng, trials: usize) -> SuiteReport {
    use rand::Rng;
    tally(
        "concyclic",
        (0..trials).map(|_| {
            let on = rng.gen_bool(0.5);
            let zs = if on {
                sampling::circline_quadruple(rng, 0.3)
            } else {
                sampling::off_circline_quadruple(rng)
            };
            let zs = zs.map(|z| z.replay::<S>());
            let e = |e: crate::error::Error| e.to_string();
            let real = is_concyclic([&zs[0], &zs[1], &zs[2], &zs[3]]).map_err(e)?;
            let c = circline_through(&zs[1], &zs[2], &zs[3]).map_err(e)?;
            let member = contains(&c, &zs[0]).map_err(e)?;
            ensure(real == on && member == on, || {
                format!("sampled on={on}, real={real}, member={member}: {zs:?}")
            })
        }),
    )
}

type Suite = fn(&mut ChaCha8Rng, usize) -> SuiteReport;

/// Run every suite with `trials` instances per dimension.
pub fn run_verify<S: Scalar>(seed: u64, trials: usize) -> VerifyReport {
    let suites: [Suite; 9] = [
        agreement::<S>,
        representatives::<S>,
        matrix_invariance::<S>,
        reduction::<S>,
        permutations::<S>,
        standardizing::<S>,
        correspondence::<S>,
        uniqueness::<S>,
        concyclic::<S>,
    ];
    let suites = suites
        .iter()
        .enumerate()
        .map(|(k, suite)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
            suite(&mut rng, trials)
        })
        .collect();
    VerifyReport {
        seed,
        backend: S::BACKEND,
        suites,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Complex64;

    #[test]
    fn exact_suites_pass() {
        let report = run_verify::<Q>(7, 3);
        for s in &report.suites {
            assert_eq!(s.failed, 0, "{}: {:?}", s.name, s.first_failure);
        }
        assert_eq!(report.suites.len(), 9);
    }

    #[test]
    fn float_suites_pass() {
        let report = run_verify::<Complex64>(7, 3);
        for s in &report.suites {
            assert_eq!(s.failed, 0, "{}: {:?}", s.name, s.first_failure);
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        assert_eq!(run_verify::<Q>(11, 2), run_verify::<Q>(11, 2));
    }
}
