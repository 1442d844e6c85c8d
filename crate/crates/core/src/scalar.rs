use std::fmt::Debug;

use num_traits::Num;

/// Coefficients of incidence functions and Möbius tables.
///
/// Any commutative ring with exact equality works for convolution; inversion
/// additionally divides by identity values, so it needs a field such as
/// [`crate::Rational`] to be exact.
pub trait Scalar: Num + Clone + Debug {}

impl<T: Num + Clone + Debug> Scalar for T {}
