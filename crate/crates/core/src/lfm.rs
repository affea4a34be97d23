//! Linear fractional maps `φ(z) = (Az + B) / (⟨z, C⟩ + D)` of `C^N` and
//! their associated matrices
//!
//! ```text
//! m_φ = | A   B |
//!       | C*  D |
//! ```
//!
//! acting on homogeneous coordinates. `⟨z, C⟩ = Σ z_k · conj(C_k)`, so the
//! bottom row of `m_φ` is the entrywise conjugate of `C`. `C` is stored as
//! written in the formula; only [`LinearFractionalMap::associated_matrix`]
//! and [`LinearFractionalMap::from_matrix`] conjugate it.

use crate::error::{Error, Result};
use crate::numeric::{Backend, Complex64, GaussianRational, Scalar, SquareMatrix, REL_TOL};
use crate::projective::{project, ExtendedPoint, ProjectivePoint};

/// An `(N+1) × (N+1)` matrix acting on `CP^N`, compared up to nonzero scale.
#[derive(Debug, Clone)]
pub struct ProjectiveMatrix<S> {
    inner: SquareMatrix<S>,
}

impl<S: Scalar> ProjectiveMatrix<S> {
    pub fn new(inner: SquareMatrix<S>) -> Result<Self> {
        if inner.dim() < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: inner.dim(),
            });
        }
        Ok(ProjectiveMatrix { inner })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        Self::new(SquareMatrix::from_rows(rows)?)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(SquareMatrix::from_ints(rows)?)
    }

    pub fn identity(dim: usize) -> Self {
        ProjectiveMatrix {
            inner: SquareMatrix::identity(dim + 1),
        }
    }

    /// Ambient affine dimension `N`.
    pub fn dim(&self) -> usize {
        self.inner.dim() - 1
    }

    pub fn inner(&self) -> &SquareMatrix<S> {
        &self.inner
    }

    pub fn into_inner(self) -> SquareMatrix<S> {
        self.inner
    }

    pub fn det(&self) -> S {
        self.inner.det()
    }

    pub fn is_invertible(&self) -> bool {
        !self.inner.is_singular()
    }

    pub fn scaled(&self, k: &S) -> Self {
        ProjectiveMatrix {
            inner: self.inner.scaled(k),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        Ok(ProjectiveMatrix {
            inner: self.inner.matmul(&other.inner)?,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(ProjectiveMatrix {
            inner: self.inner.inverse()?,
        })
    }

    /// `m · u`, or [`Error::DegeneratePoint`] if that is the zero vector.
    pub fn apply(&self, u: &ProjectivePoint<S>) -> Result<ProjectivePoint<S>> {
        let v = self.inner.mul_vec(u.coords())?;
        ProjectivePoint::new(v).map_err(|e| match e {
            Error::ZeroVector => Error::DegeneratePoint,
            other => other,
        })
    }

    fn as_point(&self) -> Option<ProjectivePoint<S>> {
        ProjectivePoint::new(self.inner.entries().to_vec()).ok()
    }

    /// Scale so that the last nonzero entry (row-major) is 1 on the exact
    /// backend, or the largest-modulus entry is 1 on the float backend.
    pub fn canonicalize(&self) -> Self {
        match self.as_point() {
            Some(p) => ProjectiveMatrix {
                inner: SquareMatrix::new(self.inner.dim(), p.canonicalize().into_coords())
                    .expect("same shape"),
            },
            None => self.clone(),
        }
    }

    /// Equal up to a nonzero scalar factor.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        match (self.as_point(), other.as_point()) {
            (Some(p), Some(q)) => p.projectively_equal(&q),
            _ => false,
        }
    }

    /// `λ · I` for some nonzero `λ`.
    pub fn is_scalar_multiple_of_identity(&self) -> bool {
        let n = self.inner.dim();
        let d0 = self.inner.get(0, 0).clone();
        match S::BACKEND {
            Backend::Exact => {
                !d0.is_zero()
                    && (0..n).all(|i| {
                        (0..n).all(|j| {
                            let x = self.inner.get(i, j);
                            if i == j {
                                *x == d0
                            } else {
                                x.is_zero()
                            }
                        })
                    })
            }
            Backend::Float => {
                let scale = self
                    .inner
                    .entries()
                    .iter()
                    .map(Scalar::magnitude)
                    .fold(0.0, f64::max);
                if scale == 0.0 {
                    return false;
                }
                (0..n).all(|i| {
                    (0..n).all(|j| {
                        let x = self.inner.get(i, j).clone();
                        let off = if i == j { x - d0.clone() } else { x };
                        off.magnitude() <= REL_TOL * scale
                    })
                })
            }
        }
    }
}

impl<S: Scalar> PartialEq for ProjectiveMatrix<S> {
    fn eq(&self, other: &Self) -> bool {
        self.projectively_equal(other)
    }
}

impl ProjectiveMatrix<GaussianRational> {
    pub fn to_float(&self) -> ProjectiveMatrix<Complex64> {
        self.replay()
    }

    pub fn replay<T: Scalar>(&self) -> ProjectiveMatrix<T> {
        ProjectiveMatrix {
            inner: self.inner.replay(),
        }
    }
}

/// `apply_matrix(m, u)`.
pub fn apply_matrix<S: Scalar>(
    m: &ProjectiveMatrix<S>,
    u: &ProjectivePoint<S>,
) -> Result<ProjectivePoint<S>> {
    m.apply(u)
}

/// The data `(A, B, C, D)` of a linear fractional map of `C^N`.
///
/// Nothing forces `det m_φ ≠ 0`; check [`LinearFractionalMap::is_invertible`].
#[derive(Debug, Clone, PartialEq)]
pub struct LinearFractionalMap<S> {
    a: SquareMatrix<S>,
    b: Vec<S>,
    c: Vec<S>,
    d: S,
}

impl<S: Scalar> LinearFractionalMap<S> {
    pub fn new(a: SquareMatrix<S>, b: Vec<S>, c: Vec<S>, d: S) -> Result<Self> {
        let n = a.dim();
        for v in [&b, &c] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        Ok(LinearFractionalMap { a, b, c, d })
    }

    pub fn identity(dim: usize) -> Self {
        LinearFractionalMap {
            a: SquareMatrix::identity(dim),
            b: vec![S::zero(); dim],
            c: vec![S::zero(); dim],
            d: S::one(),
        }
    }

    /// The one-variable map `z ↦ (az + b) / (cz + d)`.
    pub fn mobius(a: S, b: S, c: S, d: S) -> Self {
        LinearFractionalMap {
            a: SquareMatrix::diagonal(&[a]),
            b: vec![b],
            c: vec![c.conj()],
            d,
        }
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn a(&self) -> &SquareMatrix<S> {
        &self.a
    }

    pub fn b(&self) -> &[S] {
        &self.b
    }

    pub fn c(&self) -> &[S] {
        &self.c
    }

    pub fn d(&self) -> &S {
        &self.d
    }

    /// `[[A, B], [C*, D]]`.
    pub fn associated_matrix(&self) -> ProjectiveMatrix<S> {
        let n = self.dim();
        let mut rows: Vec<Vec<S>> = self
            .a
            .rows()
            .zip(&self.b)
            .map(|(row, b)| row.iter().cloned().chain([b.clone()]).collect())
            .collect();
        rows.push(
            self.c
                .iter()
                .map(Scalar::conj)
                .chain([self.d.clone()])
                .collect(),
        );
        let inner = SquareMatrix::from_rows(rows).expect("block shape");
        debug_assert_eq!(inner.dim(), n + 1);
        ProjectiveMatrix { inner }
    }

    /// Read `(A, B, C, D)` back off a matrix, conjugating the bottom row.
    pub fn from_matrix(m: &ProjectiveMatrix<S>) -> Self {
        let n = m.dim();
        let inner = m.inner();
        let a = SquareMatrix::from_rows((0..n).map(|r| inner.row(r)[..n].to_vec()).collect())
            .expect("top-left block");
        let b = (0..n).map(|r| inner.get(r, n).clone()).collect();
        let c = inner.row(n)[..n].iter().map(Scalar::conj).collect();
        LinearFractionalMap {
            a,
            b,
            c,
            d: inner.get(n, n).clone(),
        }
    }

    /// `φ(z)`, computed as `project(m_φ · lift(z))`. A vanishing denominator
    /// gives a point at infinity; points at infinity are mapped through
    /// their direction vector.
    pub fn evaluate(&self, z: &ExtendedPoint<S>) -> Result<ExtendedPoint<S>> {
        if z.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: z.dim(),
            });
        }
        Ok(project(&self.associated_matrix().apply(&z.lift())?))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let m = self
            .associated_matrix()
            .matmul(&other.associated_matrix())?;
        Ok(Self::from_matrix(&m))
    }

    pub fn invert(&self) -> Result<Self> {
        Ok(Self::from_matrix(&self.associated_matrix().inverse()?))
    }

    pub fn is_invertible(&self) -> bool {
        self.associated_matrix().is_invertible()
    }
}

impl LinearFractionalMap<GaussianRational> {
    pub fn to_float(&self) -> LinearFractionalMap<Complex64> {
        LinearFractionalMap::from_matrix(&self.associated_matrix().to_float())
    }
}
