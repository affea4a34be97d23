//! Cross ratios on complex projective space `CP^N` and the linear
//! fractional maps that preserve them.
//!
//! Every algorithm is generic over a [`Scalar`] backend: exact Gaussian
//! rationals ([`GaussianRational`]) or `f64` complex numbers
//! ([`Complex64`]) with documented tolerances. The two never mix; a
//! computation is instantiated for one backend at compile time.
//!
//! ```
//! use cpn_cross::{cross_ratio_1d, CrossRatioValue, ExtendedPoint, GaussianRational, Scalar};
//!
//! let z = [2, 3, 4, 5].map(|x| ExtendedPoint::<GaussianRational>::from_ints(&[x]));
//! let r = cross_ratio_1d([&z[0], &z[1], &z[2], &z[3]]).unwrap();
//! assert_eq!(r, CrossRatioValue::Finite(GaussianRational::from_ratios(4, 3, 0, 1)));
//! ```

pub mod bracket;
pub mod cli;
pub mod crossratio;
pub mod error;
pub mod geometry1d;
pub mod json;
pub mod lfm;
pub mod numeric;
pub mod projective;
pub mod sampling;
pub mod transitivity;
pub mod verify;

pub use bracket::{bracket, bracket_functional, complement_bracket, PointList};
pub use crossratio::{
    cross_ratio_1d, cross_ratio_hom, cross_ratio_pair, cross_ratio_tuple, permutation_values,
    reduction_pair, CrossRatioTuple, CrossRatioValue, PermutationValues,
};
pub use error::{Error, IndependenceViolation, Result, Side};
pub use geometry1d::{circline_through, contains, is_concyclic, Circline};
pub use lfm::{apply_matrix, LinearFractionalMap, ProjectiveMatrix};
pub use numeric::{Backend, Complex64, GaussianRational, Scalar, SquareMatrix};
pub use projective::{lift, project, ExtendedPoint, ProjectivePoint};
pub use transitivity::{
    check_independence, is_scalar_multiple_of_identity, solve_correspondence, standardizing_map,
    IndependenceWitness,
};
