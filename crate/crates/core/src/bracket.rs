//! The determinant bracket `[u^1, …, u^{N+1}]` and its relatives.
//!
//! A bracket depends on the representatives chosen for its points (each
//! scale factor multiplies through). Only the ratios assembled in
//! [`crate::crossratio`] are invariants.

use crate::error::{Error, Result};
use crate::numeric::{Covector, Scalar, SquareMatrix};
use crate::projective::ProjectivePoint;

/// Determinant of the matrix whose columns are the given points, in order.
pub fn bracket<S: Scalar>(points: &[&ProjectivePoint<S>]) -> Result<S> {
    Ok(bracket_matrix(points)?.det())
}

/// Whether a bracket vanishes: exactly, or relative to Hadamard's bound on floats.
pub fn bracket_vanishes<S: Scalar>(points: &[&ProjectivePoint<S>]) -> Result<bool> {
    let m = bracket_matrix(points)?;
    Ok(m.det().is_negligible(m.hadamard_bound()))
}

/// A bracket value together with the scale used for its float zero test.
#[derive(Debug, Clone)]
pub(crate) struct ScaledBracket<S> {
    pub value: S,
    pub scale: f64,
}

impl<S: Scalar> ScaledBracket<S> {
    pub fn is_zero(&self) -> bool {
        self.value.is_negligible(self.scale)
    }
}

pub(crate) fn scaled_bracket<S: Scalar>(
    points: &[&ProjectivePoint<S>],
) -> Result<ScaledBracket<S>> {
    let m = bracket_matrix(points)?;
    Ok(ScaledBracket {
        value: m.det(),
        scale: m.hadamard_bound(),
    })
}

fn bracket_matrix<S: Scalar>(points: &[&ProjectivePoint<S>]) -> Result<SquareMatrix<S>> {
    let n = points.len();
    if let Some(p) = points.iter().find(|p| p.dim() + 1 != n) {
        return Err(Error::ArityMismatch {
            expected: p.dim() + 1,
            found: n,
        });
    }
    if n == 0 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: 0,
        });
    }
    let cols: Vec<&[S]> = points.iter().map(|p| p.coords()).collect();
    SquareMatrix::from_columns(&cols)
}

/// An ordered configuration of points of a common `CP^N`.
#[derive(Debug, Clone)]
pub struct PointList<S> {
    dim: usize,
    points: Vec<ProjectivePoint<S>>,
}

impl<S: Scalar> PointList<S> {
    pub fn new(points: Vec<ProjectivePoint<S>>) -> Result<Self> {
        let dim = points
            .first()
            .map(|p| p.dim())
            .ok_or(Error::ArityMismatch {
                expected: 1,
                found: 0,
            })?;
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(PointList { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjectivePoint<S>] {
        &self.points
    }

    /// The point `u^i` (1-based).
    pub fn point(&self, i: usize) -> &ProjectivePoint<S> {
        &self.points[i - 1]
    }

    /// Reject any projectively coincident pair among the 1-based indices `from..=len`.
    pub fn ensure_distinct_from(&self, from: usize) -> Result<()> {
        for a in from..=self.len() {
            for b in a + 1..=self.len() {
                if self.point(a).projectively_equal(self.point(b)) {
                    return Err(Error::DistinctnessViolation {
                        first: a,
                        second: b,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn ensure_distinct(&self) -> Result<()> {
        self.ensure_distinct_from(1)
    }

    fn complement(&self, i: usize, j: usize) -> Result<Vec<&ProjectivePoint<S>>> {
        let len = self.len();
        if len != self.dim + 3 {
            return Err(Error::ArityMismatch {
                expected: self.dim + 3,
                found: len,
            });
        }
        for idx in [i, j] {
            if idx == 0 || idx > len {
                return Err(Error::IndexOutOfRange { index: idx, len });
            }
        }
        if i >= j {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: j - 1,
            });
        }
        Ok(self
            .points
            .iter()
            .enumerate()
            .filter(|(k, _)| k + 1 != i && k + 1 != j)
            .map(|(_, p)| p)
            .collect())
    }

    /// `[u^i, u^j]^c`: the bracket of every point except the `i`-th and
    /// `j`-th (1-based, `i < j`), in their original order.
    pub fn complement_bracket(&self, i: usize, j: usize) -> Result<S> {
        bracket(&self.complement(i, j)?)
    }

    pub(crate) fn scaled_complement(&self, i: usize, j: usize) -> Result<ScaledBracket<S>> {
        scaled_bracket(&self.complement(i, j)?)
    }
}

/// `complement_bracket(pl, i, j)`.
pub fn complement_bracket<S: Scalar>(pl: &PointList<S>, i: usize, j: usize) -> Result<S> {
    pl.complement_bracket(i, j)
}

/// The covector `f` with `f · u = [u, w^1, …, w^N]` for all `u`, from the
/// signed minors of the fixed columns.
pub fn bracket_functional<S: Scalar>(fixed: &[&ProjectivePoint<S>]) -> Result<Covector<S>> {
    let n = fixed.len();
    if let Some(p) = fixed.iter().find(|p| p.dim() != n) {
        return Err(Error::ArityMismatch {
            expected: p.dim(),
            found: n,
        });
    }
    if n == 0 {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: 0,
        });
    }
    let entries = (0..=n)
        .map(|skip| {
            let minor = {
                let cols: Vec<Vec<S>> = fixed
                    .iter()
                    .map(|p| {
                        p.coords()
                            .iter()
                            .enumerate()
                            .filter(|(r, _)| *r != skip)
                            .map(|(_, c)| c.clone())
                            .collect()
                    })
                    .collect();
                let refs: Vec<&[S]> = cols.iter().map(Vec::as_slice).collect();
                SquareMatrix::from_columns(&refs)
                    .expect("minor is square")
                    .det()
            };
            if skip % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
        .collect();
    Ok(Covector::new(entries))
}
