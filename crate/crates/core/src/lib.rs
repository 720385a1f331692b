//! Entanglement and correlations of a two-mode squeezed scalar field seen
//! across a Schwarzschild horizon, computed with Gaussian covariance
//! matrices.
//!
//! A two-mode squeezed state of Kruskal squeezing `ξ` between frequencies
//! `λ` and `ν` splits, for observers outside the horizon, into four modes
//! `(λ_in, λ_out, ν_out, ν_in)`. Each frequency picks up its own squeezing
//! (`l`, `n`) set by the black-hole mass. The crate provides
//!
//! * [`gaussian`]: covariance matrices, symplectic maps, partial traces and
//!   symplectic spectra,
//! * [`horizon`]: the mass/frequency to squeezing map and the critical mass
//!   below which outer entanglement vanishes,
//! * [`state`]: the Kruskal and four-mode states, built two independent ways,
//! * [`correlations`]: entropies, mutual information and contangles,
//!   including the residual multipartite contangle,
//! * [`fock`]: a truncated number-basis check of the squeezer.
//!
//! All numerics are generic over [`Scalar`] (`f64` and `f32`); the aliases
//! below fix `f64`.

pub mod correlations;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod horizon;
pub mod linalg;
mod scalar;
pub mod state;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use horizon::KruskalSqueezing;
pub use state::FourModeLayout;

pub type Matrix = linalg::Matrix<f64>;
pub type CovarianceMatrix = gaussian::CovarianceMatrix<f64>;
pub type SymplecticMatrix = gaussian::SymplecticMatrix<f64>;
pub type SymplecticSpectrum = gaussian::SymplecticSpectrum<f64>;
pub type HorizonParams = horizon::HorizonParams<f64>;
pub type SqueezingTriple = horizon::SqueezingTriple<f64>;
pub type CorrelationReport = correlations::CorrelationReport<f64>;
pub type LimitReport = correlations::LimitReport<f64>;
pub type Report = correlations::Report<f64>;
pub type TruncatedTwoModeState = fock::TruncatedTwoModeState<f64>;

/// Single-precision variants.
pub mod f32 {
    pub type Matrix = crate::linalg::Matrix<f32>;
    pub type CovarianceMatrix = crate::gaussian::CovarianceMatrix<f32>;
    pub type SymplecticMatrix = crate::gaussian::SymplecticMatrix<f32>;
    pub type SqueezingTriple = crate::horizon::SqueezingTriple<f32>;
    pub type CorrelationReport = crate::correlations::CorrelationReport<f32>;
}
