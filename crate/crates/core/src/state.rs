//! Kruskal two-mode squeezed state and its four-mode Schwarzschild image.
//!
//! The four-mode state is built twice: as `O Oᵀ` from the product of
//! squeezers, and directly from closed-form 2×2 blocks. The two routes are
//! kept independent so each can check the other.

use crate::error::{invalid_argument, Result};
use crate::gaussian::{two_mode_squeezer, CovarianceMatrix};
use crate::horizon::{KruskalSqueezing, SqueezingTriple};
use crate::linalg::Matrix;
use crate::Scalar;

/// Mode order of the four-mode state: `(λ_in, λ_out, ν_out, ν_in)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourModeLayout;

impl FourModeLayout {
    pub const LAMBDA_IN: usize = 0;
    pub const LAMBDA_OUT: usize = 1;
    pub const NU_OUT: usize = 2;
    pub const NU_IN: usize = 3;

    pub const N_MODES: usize = 4;
    /// Modes accessible outside the horizon.
    pub const OUTER: [usize; 2] = [Self::LAMBDA_OUT, Self::NU_OUT];
    pub const INNER: [usize; 2] = [Self::LAMBDA_IN, Self::NU_IN];

    pub fn name(mode: usize) -> &'static str {
        match mode {
            Self::LAMBDA_IN => "lambda_in",
            Self::LAMBDA_OUT => "lambda_out",
            Self::NU_OUT => "nu_out",
            Self::NU_IN => "nu_in",
            _ => "?",
        }
    }
}

/// `Γ(ξ) Γ(ξ)ᵀ`: diagonal blocks `cosh(2ξ) I₂`, off-diagonal `sinh(2ξ) Z₂`.
pub fn kruskal_state<T: Scalar>(xi: T) -> Result<CovarianceMatrix<T>> {
    if !xi.is_finite() {
        return Err(invalid_argument(format!("xi must be finite, got {xi}")));
    }
    let gamma = two_mode_squeezer(xi, 0, 1, 2)?;
    let m = gamma.matrix();
    Ok(CovarianceMatrix::from_trusted(m * &m.transpose()))
}

fn finite_xi<T: Scalar>(t: &SqueezingTriple<T>) -> Result<T> {
    match t.xi() {
        KruskalSqueezing::Finite(xi) => Ok(xi),
        KruskalSqueezing::Infinite => Err(invalid_argument(
            "the four-mode state has no covariance matrix at infinite Kruskal squeezing",
        )),
    }
}

/// `O Oᵀ` with `O = Γ_{ν_in,ν_out}(n) Γ_{λ_in,λ_out}(l) Γ_{λ_out,ν_out}(ξ)`.
///
/// The Kruskal squeezer acts on the slots that become the outer modes; the
/// inner slots start in the vacuum.
pub fn schwarzschild_state_product<T: Scalar>(
    t: &SqueezingTriple<T>,
) -> Result<CovarianceMatrix<T>> {
    use FourModeLayout as L;
    let xi = finite_xi(t)?;
    let kruskal = two_mode_squeezer(xi, L::LAMBDA_OUT, L::NU_OUT, L::N_MODES)?;
    let lambda = two_mode_squeezer(t.l(), L::LAMBDA_IN, L::LAMBDA_OUT, L::N_MODES)?;
    let nu = two_mode_squeezer(t.n(), L::NU_IN, L::NU_OUT, L::N_MODES)?;
    let o = nu.compose(&lambda)?.compose(&kruskal)?;
    let m = o.matrix();
    Ok(CovarianceMatrix::from_trusted(m * &m.transpose()))
}

/// The same state assembled from its closed-form blocks.
pub fn schwarzschild_state_blocks<T: Scalar>(
    t: &SqueezingTriple<T>,
) -> Result<CovarianceMatrix<T>> {
    use FourModeLayout as L;
    let xi = finite_xi(t)?;
    let (c2xi, s2xi) = ((T::two() * xi).cosh(), (T::two() * xi).sinh());
    let cxi_sq = xi.cosh().powi(2);
    // (inner slot, outer slot, squeezing) for each frequency
    let freqs = [
        (L::LAMBDA_IN, L::LAMBDA_OUT, t.l()),
        (L::NU_IN, L::NU_OUT, t.n()),
    ];

    let mut m = Matrix::zeros(2 * L::N_MODES);
    // `diag` selects I₂ (true) or Z₂ (false)
    let mut put = |a: usize, b: usize, v: T, diag: bool| {
        let sign = if diag { T::one() } else { -T::one() };
        for (p, q) in [(a, b), (b, a)] {
            m[(2 * p, 2 * q)] = v;
            m[(2 * p + 1, 2 * q + 1)] = sign * v;
        }
    };

    for &(inner, outer, x) in &freqs {
        let (cx, sx) = (x.cosh(), x.sinh());
        put(inner, inner, cx * cx + c2xi * sx * sx, true);
        put(outer, outer, cx * cx * c2xi + sx * sx, true);
        put(inner, outer, cxi_sq * (T::two() * x).sinh(), false);
    }
    for (k, &(x_in, _, x)) in freqs.iter().enumerate() {
        let (y_in, y_out, y) = freqs[1 - k];
        put(x_in, y_out, y.cosh() * s2xi * x.sinh(), true);
        if k == 0 {
            put(x_in, y_in, s2xi * x.sinh() * y.sinh(), false);
        }
    }
    put(
        L::LAMBDA_OUT,
        L::NU_OUT,
        t.l().cosh() * t.n().cosh() * s2xi,
        false,
    );

    Ok(CovarianceMatrix::from_trusted(m))
}
