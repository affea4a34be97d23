//! Circles and lines on the Riemann sphere, and the concyclicity test by
//! realness of the cross ratio.

use crate::crossratio::cross_ratio_1d;
use crate::error::{Error, Result};
use crate::numeric::{Backend, Scalar, REL_TOL};
use crate::projective::ExtendedPoint;

/// A circle, or a line (a circle through `∞`).
#[derive(Debug, Clone, PartialEq)]
pub enum Circline<S> {
    /// `|z − center|² = radius_sq`; `radius_sq` is real and positive.
    Circle { center: S, radius_sq: S },
    /// `{point + t·direction : t real} ∪ {∞}`.
    Line { point: S, direction: S },
}

impl<S: Scalar> Circline<S> {
    pub fn is_line(&self) -> bool {
        matches!(self, Circline::Line { .. })
    }
}

impl<S: std::fmt::Display> std::fmt::Display for Circline<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Circline::Circle { center, radius_sq } => write!(f, "|z - ({center})|² = {radius_sq}"),
            Circline::Line { point, direction } => write!(f, "({point}) + t·({direction})"),
        }
    }
}

fn scalar_of<S: Scalar>(z: &ExtendedPoint<S>) -> Result<Option<S>> {
    if z.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: z.dim(),
        });
    }
    Ok(z.as_finite().map(|c| c[0].clone()))
}

/// Whether `w` is real, with `scale` the size of the factors that produced it.
fn real_within<S: Scalar>(w: &S, scale: f64) -> bool {
    match S::BACKEND {
        Backend::Exact => w.is_real(),
        Backend::Float => w.to_complex64().im.abs() <= REL_TOL * scale,
    }
}

fn ensure_distinct<S: Scalar>(zs: &[&ExtendedPoint<S>]) -> Result<()> {
    for a in 0..zs.len() {
        for b in a + 1..zs.len() {
            if zs[a] == zs[b] {
                return Err(Error::DistinctnessViolation {
                    first: a + 1,
                    second: b + 1,
                });
            }
        }
    }
    Ok(())
}

/// The unique circline through three distinct points.
pub fn circline_through<S: Scalar>(
    z1: &ExtendedPoint<S>,
    z2: &ExtendedPoint<S>,
    z3: &ExtendedPoint<S>,
) -> Result<Circline<S>> {
    let zs = [scalar_of(z1)?, scalar_of(z2)?, scalar_of(z3)?];
    ensure_distinct(&[z1, z2, z3])?;
    let finite: Vec<S> = zs.into_iter().flatten().collect();
    if let [p, q] = &finite[..] {
        return Ok(Circline::Line {
            point: p.clone(),
            direction: q.clone() - p.clone(),
        });
    }
    let [z1, z2, z3] = &finite[..] else {
        unreachable!("distinct points include at most one ∞")
    };
    let a = z2.clone() - z1.clone();
    let b = z3.clone() - z1.clone();
    let w = a.conj() * b.clone();
    if real_within(&w, a.magnitude() * b.magnitude()) {
        return Ok(Circline::Line {
            point: z1.clone(),
            direction: a,
        });
    }
    // circumcenter relative to z1
    let rel =
        (a.square_modulus() * b.clone() - b.square_modulus() * a.clone()) / (w.clone() - w.conj());
    Ok(Circline::Circle {
        center: z1.clone() + rel.clone(),
        radius_sq: rel.square_modulus(),
    })
}

/// Membership of `z` in `c`. `∞` lies on every line and on no circle.
pub fn contains<S: Scalar>(c: &Circline<S>, z: &ExtendedPoint<S>) -> Result<bool> {
    let Some(z) = scalar_of(z)? else {
        return Ok(c.is_line());
    };
    Ok(match c {
        Circline::Circle { center, radius_sq } => {
            (z - center.clone()).square_modulus().approx_eq(radius_sq)
        }
        Circline::Line { point, direction } => {
            let offset = z - point.clone();
            let scale = offset.magnitude() * direction.magnitude();
            real_within(&(offset * direction.conj()), scale)
        }
    })
}

/// Four distinct points lie on one circline iff their cross ratio is real
/// (`∞` included).
pub fn is_concyclic<S: Scalar>(z: [&ExtendedPoint<S>; 4]) -> Result<bool> {
    Ok(cross_ratio_1d(z)?.is_real())
}
