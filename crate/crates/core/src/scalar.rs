//! Floating-point abstraction the numeric code is generic over.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::str::FromStr;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};
use serde::{de::DeserializeOwned, Serialize};

/// Scalar type for scores, distances and derived statistics.
///
/// Implemented by `f32` and `f64` through the blanket impl; any float type
/// with the same trait surface works as well.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum<Self>
    + FromStr
    + Display
    + Debug
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` constant into the scalar type.
    fn cast(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 constant converts")
    }

    /// Converts a count into the scalar type.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("usize converts to scalar")
    }
}

impl<T> Scalar for T where
    T: Float
        + FromPrimitive
        + ToPrimitive
        + NumAssign
        + Sum<Self>
        + FromStr
        + Display
        + Debug
        + Serialize
        + DeserializeOwned
        + Send
        + Sync
        + 'static
{
}
