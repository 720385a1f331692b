//! Floating-point abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst};

/// Real scalar the Gaussian machinery is generic over.
///
/// Tolerances are associated with the type so that `f32` builds do not
/// inherit checks that only make sense in double precision.
pub trait Scalar:
    Float + FloatConst + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Allowed deficit below 1 for a symplectic eigenvalue of a physical state.
    const PHYSICALITY_TOL: Self;
    /// Maximum distance from 1 for a symplectic eigenvalue of a pure state.
    const PURITY_TOL: Self;
    /// Relative tolerance for symmetry of covariance matrices.
    const SYMMETRY_TOL: Self;
    /// Tolerance on `S Ω Sᵀ = Ω`, relative to `max(1, ‖S‖²)`.
    const SYMPLECTIC_TOL: Self;

    /// Converts an `f64` literal. Every literal used in this crate is
    /// representable in both supported types.
    fn lit(x: f64) -> Self;

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::lit(0.5)
    }
}

impl Scalar for f64 {
    const PHYSICALITY_TOL: f64 = 1e-9;
    const PURITY_TOL: f64 = 1e-8;
    const SYMMETRY_TOL: f64 = 1e-12;
    const SYMPLECTIC_TOL: f64 = 1e-12;

    #[inline]
    fn lit(x: f64) -> f64 {
        x
    }
}

impl Scalar for f32 {
    const PHYSICALITY_TOL: f32 = 1e-4;
    const PURITY_TOL: f32 = 1e-3;
    const SYMMETRY_TOL: f32 = 1e-5;
    const SYMPLECTIC_TOL: f32 = 1e-5;

    #[inline]
    fn lit(x: f64) -> f32 {
        x as f32
    }
}
