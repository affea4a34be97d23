//! The independence hypothesis, the standardizing map, and the unique map
//! through `N + 2` point correspondences.
//!
//! Configurations are written `u^2, …, u^{N+3}` (index 0 of a slice is
//! `u^2`), leaving `u^1` for the free argument of the cross-ratio tuple.

use crate::bracket::{bracket_functional, bracket_vanishes, scaled_bracket};
use crate::error::{Error, IndependenceViolation, Result, Side};
use crate::lfm::{LinearFractionalMap, ProjectiveMatrix};
use crate::numeric::{Covector, Scalar, SquareMatrix};
use crate::projective::{ExtendedPoint, ProjectivePoint};

/// Coefficients with `u^2 = Σ_k c_k · u^{k+2}`, all nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceWitness<S> {
    coefficients: Vec<S>,
}

impl<S: Scalar> IndependenceWitness<S> {
    pub fn coefficients(&self) -> &[S] {
        &self.coefficients
    }
}

fn ensure_arity<S: Scalar>(points: &[ProjectivePoint<S>]) -> Result<usize> {
    let dim = points
        .first()
        .map(|p| p.dim())
        .ok_or(Error::ArityMismatch {
            expected: 3,
            found: 0,
        })?;
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        });
    }
    if points.len() != dim + 2 {
        return Err(Error::ArityMismatch {
            expected: dim + 2,
            found: points.len(),
        });
    }
    Ok(dim)
}

/// Verify that `u^3, …, u^{N+3}` are independent and that every coefficient
/// of `u^2` in that basis is nonzero.
pub fn check_independence<S: Scalar>(
    points: &[ProjectivePoint<S>],
) -> Result<IndependenceWitness<S>> {
    ensure_arity(points)?;
    let (target, basis) = points.split_first().expect("arity checked");
    let basis: Vec<&ProjectivePoint<S>> = basis.iter().collect();
    if bracket_vanishes(&basis)? {
        return Err(IndependenceViolation::DependentBasis.into());
    }
    // Cramer: coefficient k vanishes iff the bracket with u^2 in slot k does.
    for k in 0..basis.len() {
        let mut swapped = basis.clone();
        swapped[k] = target;
        if bracket_vanishes(&swapped)? {
            return Err(IndependenceViolation::ZeroCoefficient(k + 1).into());
        }
    }
    let cols: Vec<&[S]> = basis.iter().map(|p| p.coords()).collect();
    let m = SquareMatrix::from_columns(&cols)?;
    let sol = m.solve(&Covector::new(target.coords().to_vec()))?;
    Ok(IndependenceWitness {
        coefficients: sol.into_entries(),
    })
}

/// Targets of the standardizing map, in order: `Σ e_k` for `u^2`,
/// `e_{N+1}` for `u^3`, then `e_1, …, e_N` for `u^4, …, u^{N+3}`.
pub fn standard_targets<S: Scalar>(dim: usize) -> Vec<ProjectivePoint<S>> {
    let mut out = vec![
        ProjectivePoint::ones(dim),
        ProjectivePoint::basis(dim, dim + 1),
    ];
    out.extend((1..=dim).map(|k| ProjectivePoint::basis(dim, k)));
    out
}

/// The matrix of the unique map sending `u^2, …, u^{N+3}` to
/// [`standard_targets`].
///
/// Output coordinate `j ≤ N` is `[u, u^3, …, û^{j+3}, …]` times
/// `[u^1,u^3]ᶜ · Π_{i≠j+3} [u^1,u^i]ᶜ`; coordinate `N+1` is
/// `[u, u^4, …, u^{N+3}] · Π_i [u^1,u^i]ᶜ`. For `N = 2` the rows are
///
/// ```text
/// [u,u3,u5][u2,u4,u5][u2,u3,u4]
/// [u,u3,u4][u2,u3,u5][u2,u4,u5]
/// [u,u4,u5][u2,u3,u4][u2,u3,u5]
/// ```
pub fn standardizing_map<S: Scalar>(points: &[ProjectivePoint<S>]) -> Result<ProjectiveMatrix<S>> {
    check_independence(points)?;
    let dim = points[0].dim();
    let last = dim + 3;
    let u = |i: usize| &points[i - 2];

    let without = |skip: usize, from: usize| -> Vec<&ProjectivePoint<S>> {
        (from..=last).filter(|&i| i != skip).map(u).collect()
    };
    // [u^1, u^i]^c for i = 3..=N+3: u^2..u^{N+3} with u^i removed.
    let constants = (3..=last)
        .map(|i| {
            let b = scaled_bracket(&without(i, 2))?;
            if b.is_zero() {
                return Err(Error::DegenerateConfiguration(format!(
                    "complement bracket [u^1, u^{i}]^c vanishes"
                )));
            }
            Ok(b.value)
        })
        .collect::<Result<Vec<S>>>()?;
    let k = |i: usize| constants[i - 3].clone();
    let product_except = |skip: Option<usize>| {
        (4..=last)
            .filter(|&i| Some(i) != skip)
            .fold(S::one(), |acc, i| acc * k(i))
    };

    let mut rows = Vec::with_capacity(dim + 1);
    for j in 1..=dim {
        let f = bracket_functional(&without(j + 3, 3))?;
        let scale = k(3) * product_except(Some(j + 3));
        rows.push(f.scaled(&scale).into_entries());
    }
    let f = bracket_functional(&without(3, 3))?;
    rows.push(f.scaled(&product_except(None)).into_entries());
    ProjectiveMatrix::from_rows(rows)
}

fn tag(side: Side) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Independence(violation) => Error::SideIndependence { side, violation },
        other => other,
    }
}

/// The matrix of the unique map with `u^i ↦ v^i` for every `i`:
/// `m_ψ⁻¹ · m_φ`, where `m_φ`, `m_ψ` standardize the two configurations.
pub fn solve_correspondence_projective<S: Scalar>(
    src: &[ProjectivePoint<S>],
    dst: &[ProjectivePoint<S>],
) -> Result<ProjectiveMatrix<S>> {
    if src.len() != dst.len() {
        return Err(Error::ArityMismatch {
            expected: src.len(),
            found: dst.len(),
        });
    }
    let phi = standardizing_map(src).map_err(tag(Side::Source))?;
    let psi = standardizing_map(dst).map_err(tag(Side::Destination))?;
    if phi.dim() != psi.dim() {
        return Err(Error::DimensionMismatch {
            expected: phi.dim(),
            found: psi.dim(),
        });
    }
    psi.inverse()?.matmul(&phi)
}

/// The unique linear fractional map `χ` with `χ(z^i) = w^i`.
pub fn solve_correspondence<S: Scalar>(
    src: &[ExtendedPoint<S>],
    dst: &[ExtendedPoint<S>],
) -> Result<LinearFractionalMap<S>> {
    let lift = |pts: &[ExtendedPoint<S>]| pts.iter().map(ExtendedPoint::lift).collect::<Vec<_>>();
    let m = solve_correspondence_projective(&lift(src), &lift(dst))?;
    Ok(LinearFractionalMap::from_matrix(&m))
}

/// `is_scalar_multiple_of_identity(m)`.
pub fn is_scalar_multiple_of_identity<S: Scalar>(m: &ProjectiveMatrix<S>) -> bool {
    m.is_scalar_multiple_of_identity()
}
