//! From black-hole mass and mode frequency to effective squeezing.
//!
//! Natural units throughout (`G = c = ħ = k_B = 1`); mass and frequency
//! only ever enter through their product.

use crate::error::{invalid_argument, Result};
use crate::Scalar;

/// Black-hole mass and one mode frequency.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HorizonParams<T> {
    mass: T,
    frequency: T,
}

impl<T: Scalar> HorizonParams<T> {
    pub fn new(mass: T, frequency: T) -> Result<Self> {
        check_positive("mass", mass)?;
        check_positive("frequency", frequency)?;
        Ok(Self { mass, frequency })
    }

    pub fn mass(&self) -> T {
        self.mass
    }

    pub fn frequency(&self) -> T {
        self.frequency
    }
}

fn check_positive<T: Scalar>(name: &str, x: T) -> Result<()> {
    if x > T::zero() && x.is_finite() {
        Ok(())
    } else {
        Err(invalid_argument(format!(
            "{name} must be positive and finite, got {x}"
        )))
    }
}

/// Squeezing seen by freely falling observers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum KruskalSqueezing<T> {
    Finite(T),
    /// The `ξ → ∞` (EPR) limit. Only dedicated limit formulas apply.
    Infinite,
}

impl<T: Scalar> KruskalSqueezing<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            Self::Finite(xi) => Some(xi),
            Self::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Self::Infinite)
    }
}

/// Kruskal squeezing `ξ` together with the horizon-induced squeezings `l`
/// (frequency λ) and `n` (frequency ν).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SqueezingTriple<T> {
    xi: KruskalSqueezing<T>,
    l: T,
    n: T,
}

impl<T: Scalar> SqueezingTriple<T> {
    pub fn new(xi: T, l: T, n: T) -> Result<Self> {
        check_squeezing("xi", xi)?;
        Self::with_kruskal(KruskalSqueezing::Finite(xi), l, n)
    }

    pub fn infinite(l: T, n: T) -> Result<Self> {
        Self::with_kruskal(KruskalSqueezing::Infinite, l, n)
    }

    pub fn with_kruskal(xi: KruskalSqueezing<T>, l: T, n: T) -> Result<Self> {
        if let KruskalSqueezing::Finite(x) = xi {
            check_squeezing("xi", x)?;
        }
        check_squeezing("l", l)?;
        check_squeezing("n", n)?;
        Ok(Self { xi, l, n })
    }

    /// Maps `(ξ, M, λ, ν)` to the triple through [`squeezing_parameter`].
    pub fn from_horizon(xi: KruskalSqueezing<T>, mass: T, lambda: T, nu: T) -> Result<Self> {
        let l = squeezing_parameter(HorizonParams::new(mass, lambda)?);
        let n = squeezing_parameter(HorizonParams::new(mass, nu)?);
        Self::with_kruskal(xi, l, n)
    }

    pub fn xi(&self) -> KruskalSqueezing<T> {
        self.xi
    }

    pub fn l(&self) -> T {
        self.l
    }

    pub fn n(&self) -> T {
        self.n
    }
}

fn check_squeezing<T: Scalar>(name: &str, x: T) -> Result<()> {
    if x >= T::zero() && x.is_finite() {
        Ok(())
    } else {
        Err(invalid_argument(format!(
            "squeezing {name} must be finite and non-negative, got {x}"
        )))
    }
}

/// Effective squeezing `r` with `cosh r = (1 − e^{−2πMα})^{−1/2}`.
///
/// Evaluated as `r = atanh(e^{−πMα})`, which is the same relation
/// (`tanh² r = 1 − 1/cosh² r = e^{−2πMα}`) without the cancellation in
/// `1 − e^{−2πMα}` for large `Mα`.
pub fn squeezing_parameter<T: Scalar>(p: HorizonParams<T>) -> T {
    (-T::PI() * p.mass * p.frequency).exp().atanh()
}

/// `e^{2πλM} + e^{2πνM} − e^{2πM(λ+ν)}`; non-negative exactly when the
/// outer modes are separable even for infinite Kruskal squeezing.
///
/// Overflows for large `M(λ+ν)`; [`survives_at_infinite_squeezing`] uses a
/// rescaled form with the same sign.
pub fn vanishing_expression<T: Scalar>(mass: T, lambda: T, nu: T) -> T {
    let a = T::two() * T::PI() * mass;
    (a * lambda).exp() + (a * nu).exp() - (a * (lambda + nu)).exp()
}

/// `vanishing_expression / e^{2πM(λ+ν)} = e^{−2πνM} + e^{−2πλM} − 1`.
fn scaled_vanishing_expression<T: Scalar>(mass: T, lambda: T, nu: T) -> T {
    let a = T::two() * T::PI() * mass;
    (-a * nu).exp() + (-a * lambda).exp() - T::one()
}

/// Whether entanglement between the outer modes survives in the `ξ → ∞`
/// limit, i.e. `e^{2πλM} + e^{2πνM} − e^{2πM(λ+ν)} < 0`.
pub fn survives_at_infinite_squeezing<T: Scalar>(mass: T, lambda: T, nu: T) -> Result<bool> {
    check_positive("mass", mass)?;
    check_positive("lambda", lambda)?;
    check_positive("nu", nu)?;
    Ok(scaled_vanishing_expression(mass, lambda, nu) < T::zero())
}

/// The same predicate written in squeezing variables: `sinh l · sinh n < 1`.
pub fn survives_at_infinite_squeezing_sinh<T: Scalar>(mass: T, lambda: T, nu: T) -> Result<bool> {
    let l = squeezing_parameter(HorizonParams::new(mass, lambda)?);
    let n = squeezing_parameter(HorizonParams::new(mass, nu)?);
    Ok(l.sinh() * n.sinh() < T::one())
}

/// The unique mass `M*` with `e^{2πλM*} + e^{2πνM*} = e^{2πM*(λ+ν)}`.
///
/// Below `M*` the outer modes are separable for any Kruskal squeezing.
/// Found by bisection on a bracket grown geometrically from `M = 1e-6`,
/// iterated until the midpoint no longer moves.
pub fn critical_mass<T: Scalar>(lambda: T, nu: T) -> Result<T> {
    check_positive("lambda", lambda)?;
    check_positive("nu", nu)?;
    let h = |m: T| scaled_vanishing_expression(m, lambda, nu);

    let mut lo = T::lit(1e-6);
    // h(0⁺) = 1; shrink only for enormous frequencies
    while h(lo) <= T::zero() {
        lo = lo * T::half();
        if lo == T::zero() {
            return Err(invalid_argument(
                "frequencies too large to bracket the critical mass",
            ));
        }
    }
    let mut hi = lo;
    while h(hi) > T::zero() {
        lo = hi;
        hi = hi * T::two();
        if !hi.is_finite() {
            return Err(invalid_argument(
                "frequencies too small to bracket the critical mass",
            ));
        }
    }
    for _ in 0..400 {
        let mid = lo + (hi - lo) * T::half();
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + (hi - lo) * T::half())
}
