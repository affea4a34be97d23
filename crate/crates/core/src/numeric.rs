//! Scalar fields and the small dense linear algebra the rest of the crate
//! is built on.
//!
//! Two backends implement [`Scalar`]:
//!
//! * [`GaussianRational`] — complex numbers with arbitrary-precision rational
//!   parts. Every identity in this crate holds with `==` on this backend.
//! * [`Complex64`] — a pair of `f64`. Comparisons go through
//!   [`Scalar::approx_eq`] (relative `1e-9`, absolute floor `1e-12`).
//!
//! Backends never mix: every container is generic over one `S: Scalar`.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

pub use num_complex::Complex64;

use crate::error::{Error, Result};

/// Exact complex scalar: rational real and imaginary parts, always reduced.
pub type GaussianRational = Complex<BigRational>;

/// Relative tolerance for float comparisons.
pub const REL_TOL: f64 = 1e-9;
/// Absolute floor for float comparisons.
pub const ABS_FLOOR: f64 = 1e-12;
/// Relative size below which a float determinant or bracket counts as zero.
pub const SINGULAR_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    Float,
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

impl std::str::FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(Error::Parse(format!("unknown backend `{other}`"))),
        }
    }
}

/// A complex scalar field with a decidable (exact) or tolerant (float) zero test.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;

    /// The Gaussian integer `re + im·i`.
    fn from_ints(re: i64, im: i64) -> Self;

    /// `re_num/re_den + (im_num/im_den)·i`. Denominators must be nonzero.
    fn from_ratios(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self;

    fn conj(&self) -> Self;

    /// Exact zero test on the exact backend, `== 0.0` on the float backend.
    fn is_zero(&self) -> bool;

    /// Approximate modulus, used for pivoting and scale estimates.
    fn magnitude(&self) -> f64;

    /// Equality on the exact backend; tolerant equality on the float backend.
    fn approx_eq(&self, other: &Self) -> bool;

    /// Zero relative to `scale`: exact zero test, or `|z| <= 1e-12 * scale` for floats.
    fn is_negligible(&self, scale: f64) -> bool;

    /// Imaginary part vanishes (exactly, or `|Im| <= 1e-9 * max(1, |Re|)`).
    fn is_real(&self) -> bool;

    fn to_complex64(&self) -> Complex64;

    /// The nearest value of this backend to an exact scalar.
    fn from_exact(z: &GaussianRational) -> Self;

    fn square_modulus(&self) -> Self {
        self.clone() * self.conj()
    }

    fn is_one(&self) -> bool {
        self.approx_eq(&Self::one())
    }
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

impl Scalar for GaussianRational {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        num_traits::Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn from_ints(re: i64, im: i64) -> Self {
        Complex::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    fn from_ratios(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Complex::new(ratio(re_num, re_den), ratio(im_num, im_den))
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn magnitude(&self) -> f64 {
        self.to_complex64().norm()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn is_negligible(&self, _scale: f64) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn is_real(&self) -> bool {
        num_traits::Zero::is_zero(&self.im)
    }

    fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    fn from_exact(z: &GaussianRational) -> Self {
        z.clone()
    }
}

impl Scalar for Complex64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_ints(re: i64, im: i64) -> Self {
        Complex64::new(re as f64, im as f64)
    }

    fn from_ratios(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Complex64::new(re_num as f64 / re_den as f64, im_num as f64 / im_den as f64)
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        let diff = (self - other).norm();
        let scale = self.norm().max(other.norm());
        diff <= (REL_TOL * scale).max(ABS_FLOOR)
    }

    fn is_negligible(&self, scale: f64) -> bool {
        self.norm() <= SINGULAR_FLOOR * scale
    }

    fn is_real(&self) -> bool {
        self.im.abs() <= REL_TOL * self.re.abs().max(1.0)
    }

    fn to_complex64(&self) -> Complex64 {
        *self
    }

    fn from_exact(z: &GaussianRational) -> Self {
        z.to_complex64()
    }
}

/// Convert an exact scalar to the float backend.
pub fn to_float(z: &GaussianRational) -> Complex64 {
    z.to_complex64()
}

/// Tolerant comparison of two floats against an exact reference, using the
/// crate-wide relative tolerance.
pub fn agrees_with_exact(float: &Complex64, exact: &GaussianRational) -> bool {
    float.approx_eq(&exact.to_complex64())
}

/// A fixed-length row of scalars: a linear functional `u ↦ Σ f_k u_k`, or
/// simply a coefficient vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Covector<S> {
    entries: Vec<S>,
}

impl<S: Scalar> Covector<S> {
    pub fn new(entries: Vec<S>) -> Self {
        Covector { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    /// Plain (bilinear, unconjugated) pairing with a vector.
    pub fn apply(&self, v: &[S]) -> Result<S> {
        if v.len() != self.entries.len() {
            return Err(Error::DimensionMismatch {
                expected: self.entries.len(),
                found: v.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(v)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }

    pub fn scaled(&self, k: &S) -> Self {
        Covector::new(self.entries.iter().map(|e| e.clone() * k.clone()).collect())
    }
}

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> SquareMatrix<S> {
    pub fn new(dim: usize, entries: Vec<S>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(SquareMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(dim, entries)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[&[S]]) -> Result<Self> {
        let dim = cols.len();
        if let Some(bad) = cols.iter().find(|c| c.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in cols {
                entries.push(c[r].clone());
            }
        }
        Self::new(dim, entries)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| S::from_ints(x, 0)).collect())
                .collect(),
        )
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![S::one(); dim])
    }

    pub fn diagonal(diag: &[S]) -> Self {
        let dim = diag.len();
        let mut entries = vec![S::zero(); dim * dim];
        for (i, d) in diag.iter().enumerate() {
            entries[i * dim + i] = d.clone();
        }
        SquareMatrix { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        SquareMatrix {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: S) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.entries[r * self.dim..(r + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim)
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.dim).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn scaled(&self, k: &S) -> Self {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.clone() * k.clone()).collect(),
        }
    }

    pub fn swap_columns(&self, a: usize, b: usize) -> Self {
        let mut out = self.clone();
        for r in 0..self.dim {
            out.entries.swap(r * self.dim + a, r * self.dim + b);
        }
        out
    }

    /// Largest Euclidean row norm (float estimate).
    pub fn max_row_norm(&self) -> f64 {
        self.rows()
            .map(|r| r.iter().map(|e| e.magnitude().powi(2)).sum::<f64>().sqrt())
            .fold(0.0, f64::max)
    }

    /// Product of the Euclidean column norms: Hadamard's bound on `|det|`.
    pub fn hadamard_bound(&self) -> f64 {
        (0..self.dim)
            .map(|c| {
                (0..self.dim)
                    .map(|r| self.get(r, c).magnitude().powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .product()
    }

    /// Exact: Bareiss fraction-free elimination. Float: LU with partial pivoting.
    pub fn det(&self) -> S {
        match S::BACKEND {
            Backend::Exact => det_bareiss(self.dim, self.entries.clone()),
            Backend::Float => det_partial_pivot(self.dim, self.entries.clone()),
        }
    }

    /// Whether the determinant is zero (exactly) or below the conditioning
    /// floor `1e-12 · (max row norm)^dim` (float).
    pub fn is_singular(&self) -> bool {
        let d = self.det();
        match S::BACKEND {
            Backend::Exact => d.is_zero(),
            Backend::Float => {
                d.magnitude() < SINGULAR_FLOOR * self.max_row_norm().powi(self.dim as i32)
                    || d.is_zero()
            }
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = S::zero();
                for k in 0..n {
                    acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
                }
                entries.push(acc);
            }
        }
        Ok(SquareMatrix { dim: n, entries })
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(self
            .rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_singular() {
            return Err(Error::SingularMatrix);
        }
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for k in 0..n {
            let p = choose_pivot::<S>(n, &a, k).ok_or(Error::SingularMatrix)?;
            if p != k {
                swap_rows(n, &mut a, p, k);
                swap_rows(n, &mut inv, p, k);
            }
            let pivot = a[k * n + k].clone();
            for j in 0..n {
                a[k * n + j] = a[k * n + j].clone() / pivot.clone();
                inv[k * n + j] = inv[k * n + j].clone() / pivot.clone();
            }
            for i in 0..n {
                if i == k || a[i * n + k].is_zero() {
                    continue;
                }
                let factor = a[i * n + k].clone();
                for j in 0..n {
                    a[i * n + j] = a[i * n + j].clone() - factor.clone() * a[k * n + j].clone();
                    inv[i * n + j] =
                        inv[i * n + j].clone() - factor.clone() * inv[k * n + j].clone();
                }
            }
        }
        Ok(SquareMatrix {
            dim: n,
            entries: inv,
        })
    }

    /// Solve `self · x = rhs` by Gaussian elimination.
    pub fn solve(&self, rhs: &Covector<S>) -> Result<Covector<S>> {
        let n = self.dim;
        if rhs.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rhs.dim(),
            });
        }
        if self.is_singular() {
            return Err(Error::SingularMatrix);
        }
        let mut a = self.entries.clone();
        let mut b = rhs.entries().to_vec();
        for k in 0..n {
            let p = choose_pivot::<S>(n, &a, k).ok_or(Error::SingularMatrix)?;
            if p != k {
                swap_rows(n, &mut a, p, k);
                b.swap(p, k);
            }
            for i in k + 1..n {
                if a[i * n + k].is_zero() {
                    continue;
                }
                let factor = a[i * n + k].clone() / a[k * n + k].clone();
                for j in k..n {
                    a[i * n + j] = a[i * n + j].clone() - factor.clone() * a[k * n + j].clone();
                }
                b[i] = b[i].clone() - factor * b[k].clone();
            }
        }
        let mut x = vec![S::zero(); n];
        for i in (0..n).rev() {
            let mut acc = b[i].clone();
            for j in i + 1..n {
                acc = acc - a[i * n + j].clone() * x[j].clone();
            }
            x[i] = acc / a[i * n + i].clone();
        }
        Ok(Covector::new(x))
    }

    /// Equality with per-backend tolerance.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.approx_eq(b))
    }
}

impl SquareMatrix<GaussianRational> {
    pub fn to_float(&self) -> SquareMatrix<Complex64> {
        self.replay()
    }

    pub fn replay<T: Scalar>(&self) -> SquareMatrix<T> {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(T::from_exact).collect(),
        }
    }
}

/// `det(m)`.
pub fn det<S: Scalar>(m: &SquareMatrix<S>) -> S {
    m.det()
}

/// `a · b`.
pub fn matmul<S: Scalar>(a: &SquareMatrix<S>, b: &SquareMatrix<S>) -> Result<SquareMatrix<S>> {
    a.matmul(b)
}

/// `m⁻¹`, or [`Error::SingularMatrix`].
pub fn inverse<S: Scalar>(m: &SquareMatrix<S>) -> Result<SquareMatrix<S>> {
    m.inverse()
}

/// The `x` with `m · x = rhs`.
pub fn solve_linear<S: Scalar>(m: &SquareMatrix<S>, rhs: &Covector<S>) -> Result<Covector<S>> {
    m.solve(rhs)
}

fn swap_rows<S>(n: usize, a: &mut [S], r1: usize, r2: usize) {
    for j in 0..n {
        a.swap(r1 * n + j, r2 * n + j);
    }
}

// Exact: first nonzero entry at or below the diagonal. Float: largest modulus.
fn choose_pivot<S: Scalar>(n: usize, a: &[S], k: usize) -> Option<usize> {
    match S::BACKEND {
        Backend::Exact => (k..n).find(|&i| !a[i * n + k].is_zero()),
        Backend::Float => {
            let (best, mag) = (k..n)
                .map(|i| (i, a[i * n + k].magnitude()))
                .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            (mag > 0.0).then_some(best)
        }
    }
}

fn det_bareiss<S: Scalar>(n: usize, mut a: Vec<S>) -> S {
    let mut negate = false;
    let mut prev = S::one();
    for k in 0..n.saturating_sub(1) {
        match choose_pivot::<S>(n, &a, k) {
            None => return S::zero(),
            Some(p) if p != k => {
                swap_rows(n, &mut a, p, k);
                negate = !negate;
            }
            Some(_) => {}
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a[i * n + j].clone() * pivot.clone()
                    - a[i * n + k].clone() * a[k * n + j].clone())
                    / prev.clone();
                a[i * n + j] = v;
            }
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

fn det_partial_pivot<S: Scalar>(n: usize, mut a: Vec<S>) -> S {
    let mut d = S::one();
    for k in 0..n {
        let Some(p) = choose_pivot::<S>(n, &a, k) else {
            return S::zero();
        };
        if p != k {
            swap_rows(n, &mut a, p, k);
            d = -d;
        }
        let pivot = a[k * n + k].clone();
        d = d * pivot.clone();
        for i in k + 1..n {
            let factor = a[i * n + k].clone() / pivot.clone();
            for j in k + 1..n {
                a[i * n + j] = a[i * n + j].clone() - factor.clone() * a[k * n + j].clone();
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = GaussianRational;

    fn q(re: i64) -> Q {
        Q::from_ints(re, 0)
    }

    // Laplace expansion along the first row; independent of both elimination routes.
    fn cofactor_det(m: &SquareMatrix<Q>) -> Q {
        let n = m.dim();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Q::zero();
        for c in 0..n {
            let minor: Vec<Vec<Q>> = (1..n)
                .map(|r| {
                    (0..n)
                        .filter(|&cc| cc != c)
                        .map(|cc| m.get(r, cc).clone())
                        .collect()
                })
                .collect();
            let term = m.get(0, c).clone() * cofactor_det(&SquareMatrix::from_rows(minor).unwrap());
            acc = if c % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    #[test]
    fn det_fixtures() {
        assert_eq!(SquareMatrix::<Q>::identity(3).det(), q(1));
        let m = SquareMatrix::<Q>::from_ints(&[&[2, 1], &[3, 1]]).unwrap();
        assert_eq!(m.det(), q(-1));
        let ex = SquareMatrix::<Q>::from_ints(&[&[1, 0, 1], &[0, 2, 0], &[-1, 0, 3]]).unwrap();
        assert_eq!(ex.det(), q(8));
        assert_eq!(cofactor_det(&ex), q(8));
    }

    #[test]
    fn det_needs_row_swap() {
        let m = SquareMatrix::<Q>::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]).unwrap();
        assert_eq!(m.det(), q(-5));
        assert_eq!(m.to_float().det(), Complex64::new(-5.0, 0.0));
    }

    #[test]
    fn matmul_fixtures() {
        let ex = SquareMatrix::<Q>::from_ints(&[&[1, 0, 1], &[0, 2, 0], &[-1, 0, 3]]).unwrap();
        let sq = SquareMatrix::<Q>::from_ints(&[&[0, 0, 4], &[0, 4, 0], &[-4, 0, 8]]).unwrap();
        assert_eq!(ex.matmul(&ex).unwrap(), sq);
        assert_eq!(SquareMatrix::identity(3).matmul(&ex).unwrap(), ex);
        assert_eq!(
            ex.matmul(&ex.inverse().unwrap()).unwrap(),
            SquareMatrix::identity(3)
        );
        let small = SquareMatrix::<Q>::identity(2);
        assert!(matches!(
            ex.matmul(&small),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverse_fixtures() {
        assert_eq!(
            SquareMatrix::<Q>::identity(4).inverse().unwrap(),
            SquareMatrix::identity(4)
        );
        let m = SquareMatrix::<Q>::from_ints(&[&[1, 1], &[0, 1]]).unwrap();
        let expect = SquareMatrix::<Q>::from_ints(&[&[1, -1], &[0, 1]]).unwrap();
        assert_eq!(m.inverse().unwrap(), expect);
        assert_eq!(
            SquareMatrix::<Q>::zeros(3).inverse(),
            Err(Error::SingularMatrix)
        );
        assert_eq!(
            SquareMatrix::<Complex64>::zeros(2).inverse(),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn solve_fixtures() {
        let rhs = Covector::new(vec![q(4), q(-2), q(7)]);
        assert_eq!(SquareMatrix::identity(3).solve(&rhs).unwrap(), rhs);

        let two = SquareMatrix::<Q>::diagonal(&[q(2), q(2), q(2)]);
        let sol = two.solve(&Covector::new(vec![q(2), q(2), q(2)])).unwrap();
        assert_eq!(sol.entries(), &[q(1), q(1), q(1)]);

        let cols: [&[Q]; 3] = [
            &[q(0), q(1), q(1)],
            &[q(1), q(1), q(1)],
            &[q(0), q(0), q(1)],
        ];
        let m = SquareMatrix::from_columns(&cols).unwrap();
        let sol = m.solve(&Covector::new(vec![q(1), q(0), q(1)])).unwrap();
        assert_eq!(sol.entries(), &[q(-1), q(1), q(1)]);

        let singular = SquareMatrix::<Q>::from_ints(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(
            singular.solve(&Covector::new(vec![q(1), q(1)])),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn gaussian_entries() {
        // [[i, 1], [1, i]] has det i·i − 1 = −2.
        let m = SquareMatrix::<Q>::from_rows(vec![
            vec![Q::from_ints(0, 1), q(1)],
            vec![q(1), Q::from_ints(0, 1)],
        ])
        .unwrap();
        assert_eq!(m.det(), q(-2));
        assert_eq!(cofactor_det(&m), q(-2));
    }

    #[test]
    fn column_swap_and_duplicate_column() {
        let m = SquareMatrix::<Q>::from_ints(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]).unwrap();
        assert_eq!(m.swap_columns(0, 2).det(), -m.det());
        let dup = SquareMatrix::<Q>::from_ints(&[&[3, 1, 3], &[1, 5, 1], &[2, 6, 2]]).unwrap();
        assert!(dup.det().is_zero());
    }

    #[test]
    fn float_tolerances() {
        let a = Complex64::new(1.0, 0.0);
        assert!(a.approx_eq(&Complex64::new(1.0 + 1e-12, 0.0)));
        assert!(!a.approx_eq(&Complex64::new(1.0 + 1e-6, 0.0)));
        assert!(Complex64::new(0.0, 1e-13).approx_eq(&Complex64::new(0.0, 0.0)));
        assert!(Complex64::new(5.0, 1e-10).is_real());
        assert!(!Complex64::new(5.0, 1e-3).is_real());
    }

    #[test]
    fn backend_parse() {
        assert_eq!("exact".parse::<Backend>().unwrap(), Backend::Exact);
        assert_eq!("float".parse::<Backend>().unwrap(), Backend::Float);
        assert!("double".parse::<Backend>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn gaussian_matrix(max_dim: usize) -> impl Strategy<Value = SquareMatrix<Q>> {
            (1..=max_dim).prop_flat_map(|n| {
                prop::collection::vec((-10i64..=10, -10i64..=10), n * n).prop_map(move |v| {
                    SquareMatrix::new(n, v.into_iter().map(|(a, b)| Q::from_ints(a, b)).collect())
                        .unwrap()
                })
            })
        }

        fn same_dim_pair() -> impl Strategy<Value = (SquareMatrix<Q>, SquareMatrix<Q>)> {
            (1..=6usize).prop_flat_map(|n| {
                let entries = prop::collection::vec((-10i64..=10, -10i64..=10), n * n);
                (entries.clone(), entries).prop_map(move |(a, b)| {
                    let mk = |v: Vec<(i64, i64)>| {
                        SquareMatrix::new(
                            n,
                            v.into_iter().map(|(x, y)| Q::from_ints(x, y)).collect(),
                        )
                        .unwrap()
                    };
                    (mk(a), mk(b))
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(100))]

            #[test]
            fn det_is_multiplicative((a, b) in same_dim_pair()) {
                prop_assert_eq!(a.matmul(&b).unwrap().det(), a.det() * b.det());
            }

            #[test]
            fn bareiss_matches_cofactor(m in gaussian_matrix(5)) {
                prop_assert_eq!(m.det(), cofactor_det(&m));
            }

            #[test]
            fn float_det_tracks_exact(m in gaussian_matrix(6)) {
                let exact = m.det();
                let float = m.to_float().det();
                prop_assert!(agrees_with_exact(&float, &exact), "{exact} vs {float}");
            }

            #[test]
            fn inverse_round_trip(m in gaussian_matrix(5)) {
                prop_assume!(!m.det().is_zero());
                let inv = m.inverse().unwrap();
                prop_assert_eq!(m.matmul(&inv).unwrap(), SquareMatrix::identity(m.dim()));

                let f = m.to_float();
                let prod = f.matmul(&f.inverse().unwrap()).unwrap();
                let id = SquareMatrix::<Complex64>::identity(m.dim());
                let bound = 1e-9 * f.max_row_norm().max(1.0);
                for (x, y) in prod.entries().iter().zip(id.entries()) {
                    prop_assert!((x - y).norm() <= bound);
                }
            }
        }
    }
}
