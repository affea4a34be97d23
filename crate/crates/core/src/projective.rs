//! Homogeneous coordinates on `CP^N` and the last-coordinate chart that
//! identifies `(z_1, …, z_N, 1)` with the affine point `z ∈ C^N`.

use crate::error::{Error, Result};
use crate::numeric::{Backend, Complex64, GaussianRational, Scalar, ABS_FLOOR};

/// A point of `CP^N`: `N + 1` homogeneous coordinates, not all zero.
///
/// `==` is projective equality (proportional coordinates). Use
/// [`ProjectivePoint::coords`] to compare representatives.
#[derive(Debug, Clone)]
pub struct ProjectivePoint<S> {
    coords: Vec<S>,
}

impl<S: Scalar> ProjectivePoint<S> {
    pub fn new(coords: Vec<S>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: coords.len(),
            });
        }
        if !has_nonzero(&coords) {
            return Err(Error::ZeroVector);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| S::from_ints(c, 0)).collect())
    }

    /// Ambient affine dimension `N`.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    /// Standard basis vector `e_k` (1-based `k`) of `C^{N+1}`, as a point.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut coords = vec![S::zero(); dim + 1];
        coords[k - 1] = S::one();
        ProjectivePoint { coords }
    }

    /// `Σ e_k`, the all-ones vector.
    pub fn ones(dim: usize) -> Self {
        ProjectivePoint {
            coords: vec![S::one(); dim + 1],
        }
    }

    /// The representative `λ·u`. `λ` must be nonzero.
    pub fn scaled(&self, lambda: &S) -> Result<Self> {
        Self::new(
            self.coords
                .iter()
                .map(|c| c.clone() * lambda.clone())
                .collect(),
        )
    }

    fn max_modulus(&self) -> (usize, f64) {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, c)| (i, c.magnitude()))
            .fold((0, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc })
    }

    /// Index used to normalize: last nonzero (exact), largest modulus (float).
    fn pivot(&self) -> usize {
        match S::BACKEND {
            Backend::Exact => self
                .coords
                .iter()
                .rposition(|c| !c.is_zero())
                .expect("projective point has a nonzero coordinate"),
            Backend::Float => self.max_modulus().0,
        }
    }

    /// Whether the last coordinate vanishes (relative to the point's scale on floats).
    pub fn is_at_infinity(&self) -> bool {
        let last = self.coords.last().expect("nonempty");
        match S::BACKEND {
            Backend::Exact => last.is_zero(),
            Backend::Float => last.is_negligible(self.max_modulus().1),
        }
    }

    /// Stable representative: divide by the last nonzero coordinate (exact)
    /// or by the largest-modulus coordinate (float).
    pub fn canonicalize(&self) -> Self {
        let k = self.pivot();
        let p = self.coords[k].clone();
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i == k {
                    S::one()
                } else {
                    c.clone() / p.clone()
                }
            })
            .collect();
        ProjectivePoint { coords }
    }

    /// True iff `q = λ·self` for some nonzero `λ`.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let k = self.pivot();
        let (pk, qk) = (&self.coords[k], &other.coords[k]);
        match S::BACKEND {
            Backend::Exact => {
                !qk.is_zero()
                    && self
                        .coords
                        .iter()
                        .zip(&other.coords)
                        .all(|(p, q)| p.clone() * qk.clone() == q.clone() * pk.clone())
            }
            Backend::Float => {
                if qk.is_negligible(other.max_modulus().1) {
                    return false;
                }
                self.coords
                    .iter()
                    .zip(&other.coords)
                    .all(|(p, q)| (p.clone() / pk.clone()).approx_eq(&(q.clone() / qk.clone())))
            }
        }
    }
}

impl<S: Scalar> PartialEq for ProjectivePoint<S> {
    fn eq(&self, other: &Self) -> bool {
        self.projectively_equal(other)
    }
}

impl ProjectivePoint<GaussianRational> {
    pub fn to_float(&self) -> ProjectivePoint<Complex64> {
        self.replay()
    }

    /// The same point on another backend (the identity on the exact one).
    pub fn replay<T: Scalar>(&self) -> ProjectivePoint<T> {
        ProjectivePoint {
            coords: self.coords.iter().map(T::from_exact).collect(),
        }
    }
}

fn join<T: std::fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

impl<S: std::fmt::Display> std::fmt::Display for ProjectivePoint<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", join(&self.coords, " : "))
    }
}

/// `(z_1, …, z_N)`, or `∞(d_1, …, d_N)` for a direction at infinity.
impl<S: std::fmt::Display> std::fmt::Display for ExtendedPoint<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtendedPoint::Finite(c) => write!(f, "({})", join(c, ", ")),
            ExtendedPoint::AtInfinity(d) if d.len() == 1 => write!(f, "∞"),
            ExtendedPoint::AtInfinity(d) => write!(f, "∞({})", join(d, ", ")),
        }
    }
}

/// `projectively_equal(p, q)`.
pub fn projectively_equal<S: Scalar>(p: &ProjectivePoint<S>, q: &ProjectivePoint<S>) -> bool {
    p.projectively_equal(q)
}

/// `canonicalize(u)`.
pub fn canonicalize<S: Scalar>(u: &ProjectivePoint<S>) -> ProjectivePoint<S> {
    u.canonicalize()
}

fn has_nonzero<S: Scalar>(v: &[S]) -> bool {
    match S::BACKEND {
        Backend::Exact => v.iter().any(|c| !c.is_zero()),
        Backend::Float => v.iter().any(|c| c.magnitude() > ABS_FLOOR),
    }
}

/// An affine point of `C^N`, or a point on the hyperplane at infinity given
/// by a direction (compared up to scale).
#[derive(Debug, Clone)]
pub enum ExtendedPoint<S> {
    Finite(Vec<S>),
    AtInfinity(Vec<S>),
}

impl<S: Scalar> ExtendedPoint<S> {
    pub fn finite(coords: Vec<S>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(ExtendedPoint::Finite(coords))
    }

    pub fn at_infinity(direction: Vec<S>) -> Result<Self> {
        if direction.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if !has_nonzero(&direction) {
            return Err(Error::ZeroVector);
        }
        Ok(ExtendedPoint::AtInfinity(direction))
    }

    /// The point `∞` of the Riemann sphere (`N = 1`).
    pub fn infinity() -> Self {
        ExtendedPoint::AtInfinity(vec![S::one()])
    }

    /// A point of `C` (`N = 1`).
    pub fn scalar(z: S) -> Self {
        ExtendedPoint::Finite(vec![z])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        ExtendedPoint::Finite(coords.iter().map(|&c| S::from_ints(c, 0)).collect())
    }

    pub fn dim(&self) -> usize {
        match self {
            ExtendedPoint::Finite(c) | ExtendedPoint::AtInfinity(c) => c.len(),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedPoint::AtInfinity(_))
    }

    pub fn as_finite(&self) -> Option<&[S]> {
        match self {
            ExtendedPoint::Finite(c) => Some(c),
            ExtendedPoint::AtInfinity(_) => None,
        }
    }

    /// `Finite(z) ↦ (z, 1)`, `AtInfinity(d) ↦ (d, 0)`.
    pub fn lift(&self) -> ProjectivePoint<S> {
        let coords = match self {
            ExtendedPoint::Finite(z) => z.iter().cloned().chain([S::one()]).collect(),
            ExtendedPoint::AtInfinity(d) => d.iter().cloned().chain([S::zero()]).collect(),
        };
        ProjectivePoint { coords }
    }
}

impl<S: Scalar> PartialEq for ExtendedPoint<S> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ExtendedPoint::Finite(a), ExtendedPoint::Finite(b)) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.approx_eq(y))
            }
            (ExtendedPoint::AtInfinity(_), ExtendedPoint::AtInfinity(_)) => {
                self.lift().projectively_equal(&other.lift())
            }
            _ => false,
        }
    }
}

impl ExtendedPoint<GaussianRational> {
    pub fn to_float(&self) -> ExtendedPoint<Complex64> {
        self.replay()
    }

    pub fn replay<T: Scalar>(&self) -> ExtendedPoint<T> {
        match self {
            ExtendedPoint::Finite(c) => {
                ExtendedPoint::Finite(c.iter().map(T::from_exact).collect())
            }
            ExtendedPoint::AtInfinity(c) => {
                ExtendedPoint::AtInfinity(c.iter().map(T::from_exact).collect())
            }
        }
    }
}

/// `lift(z)`.
pub fn lift<S: Scalar>(z: &ExtendedPoint<S>) -> ProjectivePoint<S> {
    z.lift()
}

/// Read a homogeneous point in the last-coordinate chart.
pub fn project<S: Scalar>(u: &ProjectivePoint<S>) -> ExtendedPoint<S> {
    let (head, last) = u.coords.split_at(u.dim());
    if u.is_at_infinity() {
        ExtendedPoint::AtInfinity(head.to_vec())
    } else {
        let last = last[0].clone();
        ExtendedPoint::Finite(head.iter().map(|c| c.clone() / last.clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = GaussianRational;

    fn pt(c: &[i64]) -> ProjectivePoint<Q> {
        ProjectivePoint::from_ints(c).unwrap()
    }

    #[test]
    fn lift_fixtures() {
        assert_eq!(
            ExtendedPoint::<Q>::from_ints(&[2, 0]).lift().coords(),
            pt(&[2, 0, 1]).coords()
        );
        assert_eq!(
            ExtendedPoint::<Q>::infinity().lift().coords(),
            pt(&[1, 0]).coords()
        );
        let e2_inf =
            ExtendedPoint::<Q>::at_infinity(vec![Q::from_ints(0, 0), Q::from_ints(1, 0)]).unwrap();
        assert_eq!(e2_inf.lift().coords(), pt(&[0, 1, 0]).coords());
    }

    #[test]
    fn project_fixtures() {
        assert_eq!(project(&pt(&[2, 0, 1])), ExtendedPoint::from_ints(&[2, 0]));
        assert_eq!(project(&pt(&[4, 2, 2])), ExtendedPoint::from_ints(&[2, 1]));
        match project(&pt(&[0, 1, 0])) {
            ExtendedPoint::AtInfinity(d) => {
                assert_eq!(d, vec![Q::from_ints(0, 0), Q::from_ints(1, 0)])
            }
            other => panic!("expected a point at infinity, got {other:?}"),
        }
    }

    #[test]
    fn projective_equality_fixtures() {
        assert!(pt(&[1, 2, 3]).projectively_equal(&pt(&[2, 4, 6])));
        assert!(!pt(&[1, 0, 0]).projectively_equal(&pt(&[0, 1, 0])));
        let i = Q::from_ints(0, 1);
        let a =
            ProjectivePoint::new(vec![i.clone(), Q::from_ints(-1, 0), Q::from_ints(0, 0)]).unwrap();
        let b = ProjectivePoint::new(vec![Q::from_ints(1, 0), i, Q::from_ints(0, 0)]).unwrap();
        assert!(a.projectively_equal(&b));
        assert!(!pt(&[1, 2, 3]).projectively_equal(&pt(&[1, 2])));
    }

    #[test]
    fn canonicalize_fixtures() {
        assert_eq!(
            pt(&[2, 4, 2]).canonicalize().coords(),
            pt(&[1, 2, 1]).coords()
        );
        assert_eq!(
            pt(&[3, 0, 0]).canonicalize().coords(),
            pt(&[1, 0, 0]).coords()
        );
        let f = pt(&[2, -8, 4]).to_float().canonicalize();
        assert_eq!(f.coords()[1], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(
            ProjectivePoint::<Q>::from_ints(&[0, 0, 0]).unwrap_err(),
            Error::ZeroVector
        );
        assert_eq!(
            ProjectivePoint::<Complex64>::from_ints(&[0, 0]).unwrap_err(),
            Error::ZeroVector
        );
        assert!(ExtendedPoint::<Q>::at_infinity(vec![Q::from_ints(0, 0)]).is_err());
    }

    #[test]
    fn float_equality_is_scale_free() {
        let p = pt(&[3, -1, 7]).to_float();
        let q = p.scaled(&Complex64::new(1e6, -2e6)).unwrap();
        assert!(p.projectively_equal(&q));
        let r = pt(&[3, -1, 8]).to_float();
        assert!(!p.projectively_equal(&r));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn gauss() -> impl Strategy<Value = Q> {
            (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
                .prop_map(|(a, b, c, d)| Q::from_ratios(a, b, c, d))
        }

        fn point() -> impl Strategy<Value = ProjectivePoint<Q>> {
            (1usize..=4)
                .prop_flat_map(|n| prop::collection::vec(gauss(), n + 1))
                .prop_filter_map("zero vector", |c| ProjectivePoint::new(c).ok())
        }

        fn extended() -> impl Strategy<Value = ExtendedPoint<Q>> {
            (1usize..=4).prop_flat_map(|n| {
                (prop::collection::vec(gauss(), n), any::<bool>()).prop_filter_map(
                    "zero direction",
                    |(c, inf)| {
                        if inf {
                            ExtendedPoint::at_infinity(c).ok()
                        } else {
                            ExtendedPoint::finite(c).ok()
                        }
                    },
                )
            })
        }

        proptest! {
            #[test]
            fn project_lift_round_trip(z in extended()) {
                prop_assert_eq!(project(&z.lift()), z);
            }

            #[test]
            fn rescaling_preserves_class(u in point(), lambda in gauss()) {
                prop_assume!(!lambda.is_zero());
                prop_assert!(u.projectively_equal(&u.scaled(&lambda).unwrap()));
            }

            #[test]
            fn canonicalize_idempotent(u in point()) {
                let c = u.canonicalize();
                let cc = c.canonicalize();
                prop_assert_eq!(cc.coords(), c.coords());
                prop_assert!(c.projectively_equal(&u));
                let f = u.to_float().canonicalize();
                let ff = f.canonicalize();
                for (a, b) in f.coords().iter().zip(ff.coords()) {
                    prop_assert!(a.approx_eq(b));
                }
            }

            #[test]
            fn equality_is_an_equivalence(
                u in point(),
                a in gauss(),
                b in gauss(),
                w in point(),
            ) {
                prop_assume!(!a.is_zero() && !b.is_zero());
                let v = u.scaled(&a).unwrap();
                let x = v.scaled(&b).unwrap();
                prop_assert!(u.projectively_equal(&u));
                prop_assert!(v.projectively_equal(&u));
                prop_assert!(u.projectively_equal(&x));
                // symmetry on an arbitrary pair
                prop_assert_eq!(u.projectively_equal(&w), w.projectively_equal(&u));
                // transitivity through v
                if w.projectively_equal(&v) {
                    prop_assert!(w.projectively_equal(&u));
                }
            }
        }
    }
}
