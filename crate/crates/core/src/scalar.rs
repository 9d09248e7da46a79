//! Numeric abstraction shared by the metric routines.
//!
//! Centrality, clustering and path statistics only need field arithmetic and
//! an ordering, so they are written against [`Scalar`]. That lets the same
//! code run in `f64`, `f32`, or exactly in rationals (used by the oracle
//! suites to compare betweenness against path enumeration without rounding).

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, ToPrimitive};

/// Number type usable for centrality scores and averages.
pub trait Scalar: Num + Clone + PartialOrd + Debug + FromPrimitive + ToPrimitive + Send + Sync {
    /// Converts a count. Panics only if the count is not representable.
    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("count not representable in scalar type")
    }

    /// Lossy conversion for reporting.
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where T: Num + Clone + PartialOrd + Debug + FromPrimitive + ToPrimitive + Send + Sync {}

/// Ratio of two counts in the scalar type; `0` when the denominator is zero.
pub(crate) fn ratio<T: Scalar>(num: u64, den: u64) -> T {
    if den == 0 {
        T::zero()
    } else {
        T::from_count(num) / T::from_count(den)
    }
}
