//! Cross-ratio evaluators.
//!
//! * [`cross_ratio_1d`] evaluates the classic four-point formula on the
//!   Riemann sphere directly, cancelling factors that involve `∞`.
//! * [`cross_ratio_hom`] is the bracket form on `N + 3` points of `CP^N`:
//!
//!   ```text
//!   [u1, u3, u5, …, u_{N+3}] [u2, u4, u5, …, u_{N+3}]
//!   -------------------------------------------------
//!   [u1, u4, u5, …, u_{N+3}] [u2, u3, u5, …, u_{N+3}]
//!   ```
//!
//! * [`cross_ratio_tuple`] is the `N`-component version whose `i`-th entry
//!   (`i = 4, …, N+3`) is `[u2,ui]ᶜ[u1,u3]ᶜ / ([u1,ui]ᶜ[u2,u3]ᶜ)`. As a
//!   function of `u1` it is a linear fractional map; see
//!   [`crate::transitivity::standardizing_map`].
//!
//! Zero policy: a zero numerator over a nonzero denominator is `Finite(0)`,
//! a zero denominator over a nonzero numerator is [`CrossRatioValue::Infinity`],
//! and `0/0` is [`Error::DegenerateConfiguration`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bracket::{scaled_bracket, PointList, ScaledBracket};
use crate::error::{Error, Result};
use crate::numeric::{Complex64, GaussianRational, Scalar};
use crate::projective::{ExtendedPoint, ProjectivePoint};

#[derive(Debug, Clone, PartialEq)]
pub enum CrossRatioValue<S> {
    Finite(S),
    Infinity,
}

impl<S: Scalar> CrossRatioValue<S> {
    pub fn finite(&self) -> Option<&S> {
        match self {
            CrossRatioValue::Finite(v) => Some(v),
            CrossRatioValue::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, CrossRatioValue::Infinity)
    }

    /// Real, or `∞` (a point of the extended real line).
    pub fn is_real(&self) -> bool {
        match self {
            CrossRatioValue::Finite(v) => v.is_real(),
            CrossRatioValue::Infinity => true,
        }
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        match (self, other) {
            (CrossRatioValue::Finite(a), CrossRatioValue::Finite(b)) => a.approx_eq(b),
            (CrossRatioValue::Infinity, CrossRatioValue::Infinity) => true,
            _ => false,
        }
    }

    /// As a point of the Riemann sphere.
    pub fn to_extended(&self) -> ExtendedPoint<S> {
        match self {
            CrossRatioValue::Finite(v) => ExtendedPoint::scalar(v.clone()),
            CrossRatioValue::Infinity => ExtendedPoint::infinity(),
        }
    }
}

impl CrossRatioValue<GaussianRational> {
    pub fn to_float(&self) -> CrossRatioValue<Complex64> {
        match self {
            CrossRatioValue::Finite(v) => CrossRatioValue::Finite(v.to_complex64()),
            CrossRatioValue::Infinity => CrossRatioValue::Infinity,
        }
    }
}

impl<S: std::fmt::Display> std::fmt::Display for CrossRatioValue<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CrossRatioValue::Finite(z) => z.fmt(f),
            CrossRatioValue::Infinity => write!(f, "∞"),
        }
    }
}

/// The cross-ratio `N`-tuple, components ordered by `i = 4, …, N+3`.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossRatioTuple<S> {
    components: Vec<CrossRatioValue<S>>,
}

impl<S: Scalar> CrossRatioTuple<S> {
    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[CrossRatioValue<S>] {
        &self.components
    }

    /// Every component is `∞`: the image lies on the hyperplane at infinity.
    pub fn is_at_infinity(&self) -> bool {
        self.components.iter().all(CrossRatioValue::is_infinite)
    }

    /// The affine point, when every component is finite.
    pub fn to_finite(&self) -> Option<Vec<S>> {
        self.components
            .iter()
            .map(|c| c.finite().cloned())
            .collect()
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.approx_eq(b))
    }
}

impl CrossRatioTuple<GaussianRational> {
    pub fn to_float(&self) -> CrossRatioTuple<Complex64> {
        CrossRatioTuple {
            components: self
                .components
                .iter()
                .map(CrossRatioValue::to_float)
                .collect(),
        }
    }
}

impl<S: std::fmt::Display> std::fmt::Display for CrossRatioTuple<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn ratio_of<S: Scalar>(
    num: [&ScaledBracket<S>; 2],
    den: [&ScaledBracket<S>; 2],
    what: &str,
) -> Result<CrossRatioValue<S>> {
    let num_zero = num.iter().any(|b| b.is_zero());
    let den_zero = den.iter().any(|b| b.is_zero());
    match (num_zero, den_zero) {
        (true, true) => Err(Error::DegenerateConfiguration(format!(
            "{what}: numerator and denominator brackets both vanish"
        ))),
        (true, false) => Ok(CrossRatioValue::Finite(S::zero())),
        (false, true) => Ok(CrossRatioValue::Infinity),
        (false, false) => Ok(CrossRatioValue::Finite(
            num[0].value.clone() * num[1].value.clone()
                / (den[0].value.clone() * den[1].value.clone()),
        )),
    }
}

/// Classic cross ratio `(z1−z3)(z2−z4) / ((z1−z4)(z2−z3))` of four distinct
/// points of the Riemann sphere. Any factor involving `∞` is cancelled.
pub fn cross_ratio_1d<S: Scalar>(z: [&ExtendedPoint<S>; 4]) -> Result<CrossRatioValue<S>> {
    if let Some(p) = z.iter().find(|p| p.dim() != 1) {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: p.dim(),
        });
    }
    for a in 0..4 {
        for b in a + 1..4 {
            if z[a] == z[b] {
                return Err(Error::DistinctnessViolation {
                    first: a + 1,
                    second: b + 1,
                });
            }
        }
    }
    let factor = |a: usize, b: usize| match (z[a].as_finite(), z[b].as_finite()) {
        (Some(x), Some(y)) => x[0].clone() - y[0].clone(),
        _ => S::one(),
    };
    let num = factor(0, 2) * factor(1, 3);
    let den = factor(0, 3) * factor(1, 2);
    if den.is_zero() {
        return Ok(CrossRatioValue::Infinity);
    }
    Ok(CrossRatioValue::Finite(num / den))
}

fn ensure_config<S: Scalar>(points: &[ProjectivePoint<S>]) -> Result<PointList<S>> {
    let pl = PointList::new(points.to_vec())?;
    if pl.len() != pl.dim() + 3 {
        return Err(Error::ArityMismatch {
            expected: pl.dim() + 3,
            found: pl.len(),
        });
    }
    Ok(pl)
}

/// Bracket of `u^{first}, u^{second}, u^5, …, u^{N+3}` (1-based).
fn tail_bracket<S: Scalar>(
    points: &[ProjectivePoint<S>],
    first: usize,
    second: usize,
) -> Result<ScaledBracket<S>> {
    let mut cols = vec![&points[first - 1], &points[second - 1]];
    cols.extend(points.iter().skip(4));
    scaled_bracket(&cols)
}

/// The scalar cross ratio of `N + 3` pairwise distinct points of `CP^N`.
pub fn cross_ratio_hom<S: Scalar>(points: &[ProjectivePoint<S>]) -> Result<CrossRatioValue<S>> {
    let pl = ensure_config(points)?;
    pl.ensure_distinct()?;
    let p = pl.points();
    let b13 = tail_bracket(p, 1, 3)?;
    let b24 = tail_bracket(p, 2, 4)?;
    let b14 = tail_bracket(p, 1, 4)?;
    let b23 = tail_bracket(p, 2, 3)?;
    ratio_of([&b13, &b24], [&b14, &b23], "cross ratio")
}

/// The two-component cross ratio on five points of `CP^2`, bracket for bracket:
///
/// ```text
/// ( [u1,u3,u5][u2,u4,u5] / ([u1,u4,u5][u2,u3,u5]),
///   [u1,u3,u4][u2,u4,u5] / ([u1,u4,u5][u2,u3,u4]) )
/// ```
pub fn cross_ratio_pair<S: Scalar>(
    points: &[ProjectivePoint<S>],
) -> Result<(CrossRatioValue<S>, CrossRatioValue<S>)> {
    let pl = ensure_config(points)?;
    if pl.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: pl.dim(),
        });
    }
    pl.ensure_distinct_from(2)?;
    let u = |i: usize| pl.point(i);
    let b = |i, j, k| scaled_bracket(&[u(i), u(j), u(k)]);
    let first = ratio_of(
        [&b(1, 3, 5)?, &b(2, 4, 5)?],
        [&b(1, 4, 5)?, &b(2, 3, 5)?],
        "pair",
    )?;
    let second = ratio_of(
        [&b(1, 3, 4)?, &b(2, 4, 5)?],
        [&b(1, 4, 5)?, &b(2, 3, 4)?],
        "pair",
    )?;
    Ok((first, second))
}

/// The cross-ratio `N`-tuple of `N + 3` points.
///
/// `u^2, …, u^{N+3}` must be pairwise distinct and satisfy the independence
/// hypothesis (otherwise [`Error::DegenerateConfiguration`]); `u^1` is the
/// free argument and may coincide with any of them. When `u^1` is sent to
/// the hyperplane at infinity (`[u2,u3]ᶜ = 0`) every component is `∞`.
pub fn cross_ratio_tuple<S: Scalar>(points: &[ProjectivePoint<S>]) -> Result<CrossRatioTuple<S>> {
    let pl = ensure_config(points)?;
    pl.ensure_distinct_from(2)?;
    let last = pl.len();

    if pl.scaled_complement(1, 2)?.is_zero() {
        return Err(Error::DegenerateConfiguration(format!(
            "u^3, …, u^{last} are linearly dependent"
        )));
    }
    let constants = (3..=last)
        .map(|i| {
            let k = pl.scaled_complement(1, i)?;
            if k.is_zero() {
                Err(Error::DegenerateConfiguration(format!(
                    "complement bracket [u^1, u^{i}]^c vanishes"
                )))
            } else {
                Ok(k)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let k13 = &constants[0];

    let l3 = pl.scaled_complement(2, 3)?;
    if l3.is_zero() {
        return Ok(CrossRatioTuple {
            components: vec![CrossRatioValue::Infinity; pl.dim()],
        });
    }
    let components = (4..=last)
        .map(|i| {
            let li = pl.scaled_complement(2, i)?;
            ratio_of([&li, k13], [&constants[i - 3], &l3], "tuple")
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossRatioTuple { components })
}

/// One class of equal cross-ratio values across a permutation sweep.
#[derive(Debug, Clone)]
pub struct ValueClass<S> {
    pub value: CrossRatioValue<S>,
    pub multiplicity: usize,
    /// First permutation (in lexicographic order, 1-based) producing the value.
    pub witness: Vec<usize>,
}

/// The multiset of cross-ratio values over every ordering of the input.
#[derive(Debug, Clone)]
pub struct PermutationValues<S> {
    pub classes: Vec<ValueClass<S>>,
}

impl<S> PermutationValues<S> {
    pub fn distinct_count(&self) -> usize {
        self.classes.len()
    }

    pub fn total(&self) -> usize {
        self.classes.iter().map(|c| c.multiplicity).sum()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.multiplicity).collect()
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Evaluate [`cross_ratio_hom`] on all `(N+3)!` orderings and group equal
/// values (tolerance-based clustering on the float backend).
pub fn permutation_values<S: Scalar>(
    points: &[ProjectivePoint<S>],
) -> Result<PermutationValues<S>> {
    ensure_config(points)?;
    let mut perm: Vec<usize> = (0..points.len()).collect();
    let mut classes: Vec<ValueClass<S>> = Vec::new();
    loop {
        let ordered: Vec<_> = perm.iter().map(|&k| points[k].clone()).collect();
        let one_based = || perm.iter().map(|k| k + 1).collect::<Vec<_>>();
        let value = cross_ratio_hom(&ordered).map_err(|e| Error::DegeneratePermutation {
            permutation: one_based(),
            reason: e.to_string(),
        })?;
        match classes.iter_mut().find(|c| c.value.approx_eq(&value)) {
            Some(class) => class.multiplicity += 1,
            None => classes.push(ValueClass {
                value,
                multiplicity: 1,
                witness: one_based(),
            }),
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(PermutationValues { classes })
}

/// Embed a point of `CP^{N-1}` into `CP^N` by inserting `filler` as the
/// penultimate coordinate.
pub fn embed_with_filler<S: Scalar>(u: &ProjectivePoint<S>, filler: S) -> ProjectivePoint<S> {
    let c = u.coords();
    let (head, last) = c.split_at(c.len() - 1);
    let coords = head
        .iter()
        .cloned()
        .chain([filler, last[0].clone()])
        .collect();
    ProjectivePoint::new(coords).expect("embedding keeps a nonzero coordinate")
}

/// Check that the cross ratio in `CP^N` reduces to the one in `CP^{N-1}`.
///
/// `points` are `N + 2` points of `CP^{N-1}` (`N ≥ 2`). Returns
/// `(lhs, rhs)`: `rhs` is their cross ratio; `lhs` is the cross ratio in
/// `CP^N` of their embeddings (penultimate coordinates drawn from `seed`)
/// followed by `(0, …, 0, 1, 0)`.
pub fn reduction_pair<S: Scalar>(
    points: &[ProjectivePoint<S>],
    seed: u64,
) -> Result<(CrossRatioValue<S>, CrossRatioValue<S>)> {
    let pl = PointList::new(points.to_vec())?;
    let lower = pl.dim();
    if pl.len() != lower + 3 {
        return Err(Error::ArityMismatch {
            expected: lower + 3,
            found: pl.len(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lifted: Vec<_> = points
        .iter()
        .map(|u| {
            let filler = S::from_ints(rng.gen_range(-9..=9), rng.gen_range(-9..=9));
            embed_with_filler(u, filler)
        })
        .collect();
    lifted.push(ProjectivePoint::basis(lower + 1, lower + 1));

    let degenerate = |e: Error| match e {
        Error::DistinctnessViolation { first, second } => {
            Error::DegenerateConfiguration(format!("points {first} and {second} coincide"))
        }
        other => other,
    };
    let rhs = cross_ratio_hom(points).map_err(degenerate)?;
    let lhs = cross_ratio_hom(&lifted).map_err(degenerate)?;
    Ok((lhs, rhs))
}
