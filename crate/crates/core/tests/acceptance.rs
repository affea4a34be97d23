//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
//! if any criterion fails. Run with `cargo test --test acceptance`.
//!
//! Every exact instance is replayed on the float backend and the results
//! are compared at the crate-wide relative tolerance (criterion 11).

use std::time::Instant;

use cpn_cross::numeric::{agrees_with_exact, Complex64, SquareMatrix};
use cpn_cross::sampling;
use cpn_cross::transitivity::{solve_correspondence_projective, standard_targets};
use cpn_cross::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = GaussianRational;
type F = Complex64;

/// Failures collected while running one criterion.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn ok<T>(&mut self, r: Result<T>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }
}

/// Float replays of exact results (criterion 11), shared by all criteria.
#[derive(Default)]
struct Replay(Tally);

impl Replay {
    fn value(&mut self, float: Result<CrossRatioValue<F>>, exact: &CrossRatioValue<Q>, ctx: &str) {
        let ok = match (&float, exact) {
            (Ok(CrossRatioValue::Infinity), CrossRatioValue::Infinity) => true,
            (Ok(CrossRatioValue::Finite(f)), CrossRatioValue::Finite(e)) => agrees_with_exact(f, e),
            _ => false,
        };
        self.0
            .check(ok, || format!("{ctx}: float {float:?} vs exact {exact:?}"));
    }

    fn tuple(&mut self, float: Result<CrossRatioTuple<F>>, exact: &CrossRatioTuple<Q>, ctx: &str) {
        match float {
            Ok(t) => {
                for (f, e) in t.components().iter().zip(exact.components()) {
                    self.value(Ok(f.clone()), e, ctx);
                }
            }
            Err(e) => self
                .0
                .check(false, || format!("{ctx}: float tuple failed: {e}")),
        }
    }

    fn matrix(
        &mut self,
        float: Result<ProjectiveMatrix<F>>,
        exact: &ProjectiveMatrix<Q>,
        ctx: &str,
    ) {
        let ok = float
            .as_ref()
            .is_ok_and(|f| f.projectively_equal(&exact.to_float()));
        self.0.check(ok, || {
            format!("{ctx}: float matrix {float:?} vs exact {exact:?}")
        });
    }

    fn flag(&mut self, float: Result<bool>, exact: bool, ctx: &str) {
        let ok = float.as_ref().is_ok_and(|&f| f == exact);
        self.0
            .check(ok, || format!("{ctx}: float {float:?} vs exact {exact}"));
    }
}

fn floats(pts: &[ProjectivePoint<Q>]) -> Vec<ProjectivePoint<F>> {
    pts.iter().map(ProjectivePoint::to_float).collect()
}

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + criterion)
}

/// Criterion 1: the classic cross ratio equals the homogeneous one.
fn agreement(t: &mut Tally, replay: &mut Replay) -> String {
    let mut rng = rng(1);
    let mut with_inf = 0;
    for _ in 0..500 {
        let z = sampling::sphere_quadruple(&mut rng, 0.3);
        with_inf += z.iter().any(ExtendedPoint::is_infinite) as usize;
        let lifted: Vec<_> = z.iter().map(lift).collect();
        let (Some(a), Some(b)) = (
            t.ok(
                cross_ratio_1d([&z[0], &z[1], &z[2], &z[3]]),
                "cross_ratio_1d",
            ),
            t.ok(cross_ratio_hom(&lifted), "cross_ratio_hom"),
        ) else {
            continue;
        };
        t.check(a == b, || format!("{z:?}: {a:?} != {b:?}"));
        let zf = z.map(|p| p.to_float());
        replay.value(
            cross_ratio_1d([&zf[0], &zf[1], &zf[2], &zf[3]]),
            &a,
            "agreement 1d",
        );
        replay.value(cross_ratio_hom(&floats(&lifted)), &a, "agreement hom");
    }
    format!("500 quadruples ({with_inf} with ∞)")
}

/// Criterion 2: rescaling representatives changes nothing.
fn representatives(t: &mut Tally, replay: &mut Replay) -> String {
    let mut rng = rng(2);
    for n in 1..=4 {
        for _ in 0..200 {
            let pts = sampling::general_position(&mut rng, n, n + 3);
            let scaled: Vec<_> = pts
                .iter()
                .map(|p| {
                    p.scaled(&sampling::nonzero_gaussian(&mut rng, 7, 4))
                        .unwrap()
                })
                .collect();
            if let (Some(a), Some(b)) = (
                t.ok(cross_ratio_hom(&pts), "hom"),
                t.ok(cross_ratio_hom(&scaled), "hom rescaled"),
            ) {
                t.check(a == b, || format!("N={n}: scalar {a:?} != {b:?}"));
                replay.value(cross_ratio_hom(&floats(&scaled)), &a, "rescaled hom");
            }
            if let (Some(a), Some(b)) = (
                t.ok(cross_ratio_tuple(&pts), "tuple"),
                t.ok(cross_ratio_tuple(&scaled), "tuple rescaled"),
            ) {
                t.check(a == b, || format!("N={n}: tuple {a:?} != {b:?}"));
                replay.tuple(cross_ratio_tuple(&floats(&scaled)), &a, "rescaled tuple");
            }
        }
    }
    "200 instances for each N = 1..4".into()
}

/// Criterion 3: invertible matrices preserve the cross ratio.
fn matrix_invariance(t: &mut Tally, replay: &mut Replay) -> String {
    let mut rng = rng(3);
    let mut float_fail = 0;
    for n in 1..=4 {
        for _ in 0..200 {
            let pts = sampling::general_position(&mut rng, n, n + 3);
            let m = ProjectiveMatrix::new(sampling::invertible_matrix(&mut rng, n + 1, 5)).unwrap();
            let img: Vec<_> = pts.iter().map(|p| apply_matrix(&m, p).unwrap()).collect();
            let (mf, pf) = (m.to_float(), floats(&pts));
            let img_f: Vec<_> = pf.iter().map(|p| apply_matrix(&mf, p).unwrap()).collect();

            if let (Some(a), Some(b)) = (
                t.ok(cross_ratio_hom(&pts), "hom"),
                t.ok(cross_ratio_hom(&img), "hom image"),
            ) {
                t.check(a == b, || format!("N={n}: scalar {a:?} != {b:?}"));
                let (fa, fb) = (cross_ratio_hom(&pf), cross_ratio_hom(&img_f));
                if !matches!((&fa, &fb), (Ok(x), Ok(y)) if x.approx_eq(y)) {
                    float_fail += 1;
                    t.check(false, || format!("N={n}: float scalar {fa:?} vs {fb:?}"));
                }
                replay.value(fb, &a, "float image hom");
            }
            if let (Some(a), Some(b)) = (
                t.ok(cross_ratio_tuple(&pts), "tuple"),
                t.ok(cross_ratio_tuple(&img), "tuple image"),
            ) {
                t.check(a == b, || format!("N={n}: tuple {a:?} != {b:?}"));
                let (fa, fb) = (cross_ratio_tuple(&pf), cross_ratio_tuple(&img_f));
                if !matches!((&fa, &fb), (Ok(x), Ok(y)) if x.approx_eq(y)) {
                    float_fail += 1;
                    t.check(false, || format!("N={n}: float tuple {fa:?} vs {fb:?}"));
                }
                replay.tuple(fb, &a, "float image tuple");
            }
        }
    }
    format!("200 matrices for each N = 1..4, exact and float ({float_fail} float misses)")
}

/// Criterion 4: the cross ratio in CP^N reduces to the one in CP^{N-1}.
fn reduction(t: &mut Tally, replay: &mut Replay) -> String {
    let mut rng = rng(4);
    for n in 2..=4 {
        for _ in 0..100 {
            let pts = sampling::general_position(&mut rng, n - 1, n + 2);
            let seed: u64 = rng.gen();
            let Some((lhs, rhs)) = t.ok(reduction_pair(&pts, seed), "reduction_pair") else {
                continue;
            };
            t.check(lhs == rhs, || format!("N={n}: {lhs:?} != {rhs:?}"));
            match reduction_pair(&floats(&pts), seed) {
                Ok((fl, fr)) => {
                    replay.value(Ok(fl), &lhs, "reduction lhs");
                    replay.value(Ok(fr), &rhs, "reduction rhs");
                }
                Err(e) => replay.value(Err(e), &lhs, "reduction"),
            }
        }
    }
    "100 configurations for each N = 2..4".into()
}

/// Criterion 5: 6 and 30 distinct values, each taken 4 times.
fn permutations(t: &mut Tally, replay: &mut Replay) -> String {
    let mut rng = rng(5);
    for (n, expected) in [(1, 6), (2, 30)] {
        for _ in 0..20 {
            let pts = sampling::general_position(&mut rng, n, n + 3);
            let Some(sweep) = t.ok(permutation_values(&pts), "sweep") else {
                continue;
            };
            let m = sweep.multiplicities();
            t.check(m.len() == expected && m.iter().all(|&k| k == 4), || {
                format!("N={n}: multiplicities {m:?}")
            });
            match permutation_values(&floats(&pts)) {
                Ok(fs) => {
                    replay.0.check(fs.multiplicities() == m, || {
                        format!("N={n}: float multiplicities {:?}", fs.multiplicities())
                    });
                    for (f, e) in fs.classes.iter().zip(&sweep.classes) {
                        replay.value(Ok(f.value.clone()), &e.value, "permutation class");
                    }
                }
                Err(e) => replay.0.check(false, || format!("float sweep: {e}")),
            }
        }
    }
    "20 instances each in CP^1 (24 orderings) and CP^2 (120 orderings)".into()
}

/// The three-bracket products of the N = 2 standardizing matrix, evaluated
/// column by column with `u = e_k`.
fn bracket_product_matrix(u: &[ProjectivePoint<Q>]) -> SquareMatrix<Q> {
    let b = |pts: [&ProjectivePoint<Q>; 3]| bracket(&pts).unwrap();
    let (u2, u3, u4, u5) = (&u[0], &u[1], &u[2], &u[3]);
    let mut m = SquareMatrix::zeros(3);
    for k in 0..3 {
        let e = ProjectivePoint::basis(2, k + 1);
        m.set(0, k, b([&e, u3, u5]) * b([u2, u4, u5]) * b([u2, u3, u4]));
        m.set(1, k, b([&e, u3, u4]) * b([u2, u3, u5]) * b([u2, u4, u5]));
        m.set(2, k, b([&e, u4, u5]) * b([u2, u3, u4]) * b([u2, u3, u5]));
    }
    m
}

/// Criterion 6: the standardizing map hits the standard points.
fn standardizing(t: &mut Tally, replay: &mut Replay) -> String {
    let mut rng = rng(6);
    for n in 1..=3 {
        let targets = standard_targets::<Q>(n);
        for _ in 0..100 {
            let pts = sampling::independent_configuration(&mut rng, n);
            let Some(m) = t.ok(standardizing_map(&pts), "standardizing_map") else {
                continue;
            };
            t.check(m.is_invertible(), || format!("N={n}: singular"));
            for (k, (p, target)) in pts.iter().zip(&targets).enumerate() {
                let img = m.apply(p).unwrap();
                t.check(img.projectively_equal(target), || {
                    format!("N={n}: u^{} maps to {img:?}", k + 2)
                });
            }
            if n == 2 {
                let expect = bracket_product_matrix(&pts);
                t.check(m.inner() == &expect, || {
                    format!("entries {m:?} != {expect:?}")
                });
            }
            replay.matrix(standardizing_map(&floats(&pts)), &m, "standardizing");
        }
    }
    "100 instances for each N = 1..3; N = 2 entries equal the bracket products".into()
}

/// Criterion 7: the solver reproduces every correspondence.
fn correspondence(t: &mut Tally, replay: &mut Replay) -> String {
    let mut rng = rng(7);
    for n in 1..=3 {
        for _ in 0..100 {
            let src = sampling::independent_affine_configuration(&mut rng, n, 0.2);
            let dst = sampling::independent_affine_configuration(&mut rng, n, 0.2);
            let (Some(chi), Some(back)) = (
                t.ok(solve_correspondence(&src, &dst), "forward"),
                t.ok(solve_correspondence(&dst, &src), "backward"),
            ) else {
                continue;
            };
            for (z, w) in src.iter().zip(&dst) {
                let got = chi.evaluate(z);
                t.check(got.as_ref() == Ok(w), || {
                    format!("N={n}: {z:?} -> {got:?}, want {w:?}")
                });
            }
            let round = back.compose(&chi).unwrap().associated_matrix();
            t.check(round.is_scalar_multiple_of_identity(), || {
                format!("N={n}: {round:?}")
            });

            let (sf, df): (Vec<_>, Vec<_>) = src
                .iter()
                .zip(&dst)
                .map(|(a, b)| (a.to_float(), b.to_float()))
                .unzip();
            let float = solve_correspondence(&sf, &df);
            if let Ok(f) = &float {
                for (z, w) in sf.iter().zip(&df) {
                    let got = f.evaluate(z);
                    replay
                        .0
                        .check(got.as_ref() == Ok(w), || format!("float {z:?} -> {got:?}"));
                }
            }
            replay.matrix(
                float.map(|f| f.associated_matrix()),
                &chi.associated_matrix(),
                "solver",
            );
        }
    }
    "100 pairs for each N = 1..3, forward and backward".into()
}

/// Criterion 8: a map fixing the configuration is the identity.
fn fixed_configurations(t: &mut Tally, replay: &mut Replay) -> String {
    let mut rng = rng(8);
    for k in 0..100 {
        let n = 1 + k % 3;
        let pts = sampling::independent_configuration(&mut rng, n);
        let Some(m) = t.ok(solve_correspondence_projective(&pts, &pts), "solve") else {
            continue;
        };
        t.check(is_scalar_multiple_of_identity(&m), || {
            format!("N={n}: {m:?}")
        });
        let pf = floats(&pts);
        replay.matrix(solve_correspondence_projective(&pf, &pf), &m, "fixed");
    }
    "100 instances, N cycling through 1..3".into()
}

/// Criterion 9: real cross ratio iff concyclic.
fn concyclic(t: &mut Tally, replay: &mut Replay) -> String {
    let mut rng = rng(9);
    let mut lines = 0;
    for on in [true, false] {
        for _ in 0..200 {
            let z = if on {
                sampling::circline_quadruple(&mut rng, 0.25)
            } else {
                sampling::off_circline_quadruple(&mut rng)
            };
            let Some(value) = t.ok(cross_ratio_1d([&z[0], &z[1], &z[2], &z[3]]), "cross ratio")
            else {
                continue;
            };
            let c = circline_through(&z[1], &z[2], &z[3]).unwrap();
            lines += c.is_line() as usize;
            let member = contains(&c, &z[0]).unwrap();
            t.check(value.is_real() == on, || {
                format!("on={on}: value {value:?} for {z:?}")
            });
            t.check(member == on, || {
                format!("on={on}: membership {member} for {z:?}")
            });

            let zf = z.map(|p| p.to_float());
            replay.value(
                cross_ratio_1d([&zf[0], &zf[1], &zf[2], &zf[3]]),
                &value,
                "concyclic value",
            );
            replay.flag(
                is_concyclic([&zf[0], &zf[1], &zf[2], &zf[3]]),
                on,
                "float realness",
            );
            let cf = circline_through(&zf[1], &zf[2], &zf[3]).unwrap();
            replay.flag(contains(&cf, &zf[0]), on, "float membership");
        }
    }
    format!("200 on circlines ({lines} lines among all), 200 off")
}

/// Criterion 10: hand-derived fixtures.
fn fixtures(t: &mut Tally, replay: &mut Replay) -> String {
    let q = |n: i64, d: i64| Q::from_ratios(n, d, 0, 1);
    let int = |n: i64| Q::from_ints(n, 0);

    let a = SquareMatrix::from_ints(&[&[1, 0], &[0, 2]]).unwrap();
    let phi =
        LinearFractionalMap::new(a, vec![int(1), int(0)], vec![int(-1), int(0)], int(3)).unwrap();
    let m = phi.associated_matrix();
    let expect = SquareMatrix::from_ints(&[&[1, 0, 1], &[0, 2, 0], &[-1, 0, 3]]).unwrap();
    t.check(m.inner() == &expect, || format!("associated matrix {m:?}"));
    let one = ExtendedPoint::Finite(vec![int(1), int(1)]);
    let fixed = phi.evaluate(&one);
    t.check(fixed.as_ref() == Ok(&one), || {
        format!("phi(1,1) = {fixed:?}")
    });
    let fixed_f = phi.to_float().evaluate(&one.to_float());
    replay.0.check(fixed_f == Ok(one.to_float()), || {
        format!("float phi(1,1) = {fixed_f:?}")
    });

    let z = [2, 3, 4, 5].map(|x| ExtendedPoint::<Q>::from_ints(&[x]));
    let r = cross_ratio_1d([&z[0], &z[1], &z[2], &z[3]]);
    t.check(r == Ok(CrossRatioValue::Finite(q(4, 3))), || {
        format!("(2,3;4,5) = {r:?}")
    });
    if let Ok(r) = &r {
        let zf = z.map(|p| p.to_float());
        replay.value(cross_ratio_1d([&zf[0], &zf[1], &zf[2], &zf[3]]), r, "4/3");
    }

    let pts: Vec<_> = [[2, 0], [1, 0], [0, 1], [1, 1], [0, 0]]
        .iter()
        .map(|c| ExtendedPoint::<Q>::from_ints(c).lift())
        .collect();
    let tuple = cross_ratio_tuple(&pts);
    let got = tuple.as_ref().ok().and_then(CrossRatioTuple::to_finite);
    t.check(got == Some(vec![q(1, 1), q(1, 2)]), || {
        format!("tuple {tuple:?}")
    });
    if let Ok(tuple) = &tuple {
        replay.tuple(cross_ratio_tuple(&floats(&pts)), tuple, "(1, 1/2)");
    }

    let pts: Vec<_> = [[1, 0, 1], [0, 1, 1], [1, 1, 1], [0, 0, 1]]
        .iter()
        .map(|c| ProjectivePoint::<Q>::from_ints(c).unwrap())
        .collect();
    let w = check_independence(&pts).map(|w| w.coefficients().to_vec());
    t.check(w == Ok(vec![int(-1), int(1), int(1)]), || {
        format!("witness {w:?}")
    });
    let wf = check_independence(&floats(&pts)).map(|w| w.coefficients().to_vec());
    let ok = matches!((&wf, &w), (Ok(f), Ok(e)) if f.iter().zip(e).all(|(a, b)| agrees_with_exact(a, b)));
    replay.0.check(ok, || format!("float witness {wf:?}"));

    "Example map and fixed point, 4/3, (1, 1/2), witness (-1, 1, 1)".into()
}

type Criterion = fn(&mut Tally, &mut Replay) -> String;

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("classic and homogeneous cross ratios agree", agreement),
        ("independent of representatives", representatives),
        ("invariant under invertible matrices", matrix_invariance),
        ("reduces from CP^N to CP^(N-1)", reduction),
        ("permutation value counts", permutations),
        ("standardizing map", standardizing),
        ("correspondence solver", correspondence),
        (
            "fixed configurations give the identity",
            fixed_configurations,
        ),
        ("real cross ratio iff concyclic", concyclic),
        ("hand-derived fixtures", fixtures),
    ];
    let mut replay = Replay::default();
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut tally = Tally::default();
        let detail = run(&mut tally, &mut replay);
        failed += report(k + 1, title, &detail, &tally, start);
    }
    let start = Instant::now();
    let detail = "every exact instance above replayed in f64, relative tolerance 1e-9".to_string();
    failed += report(
        11,
        "float backend agrees with exact",
        &detail,
        &replay.0,
        start,
    );

    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 11 acceptance criteria passed");
}

fn report(id: usize, title: &str, detail: &str, t: &Tally, start: Instant) -> usize {
    let status = if t.failures.is_empty() {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "{status} [{id:>2}] {title}: {detail}; {}/{} checks ({:.1}s)",
        t.checks - t.failures.len(),
        t.checks,
        start.elapsed().as_secs_f64()
    );
    for f in t.failures.iter().take(3) {
        println!("       {f}");
    }
    (!t.failures.is_empty()) as usize
}
