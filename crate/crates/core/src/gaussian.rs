//! Symplectic algebra on covariance matrices of zero-mean Gaussian states.
//!
//! Quadratures are ordered `(x₁, p₁, …, x_N, p_N)` and the vacuum has the
//! identity as covariance matrix. First moments are always zero.

use crate::error::{invalid_argument, invalid_state, Result};
use crate::linalg::Matrix;
use crate::Scalar;

/// The symplectic form `Ω = ⊕ [[0, 1], [-1, 0]]` on `n_modes` modes.
pub fn symplectic_form<T: Scalar>(n_modes: usize) -> Result<Matrix<T>> {
    if n_modes == 0 {
        return Err(invalid_argument("symplectic form needs at least one mode"));
    }
    Ok(Matrix::from_fn(2 * n_modes, |i, j| {
        if i / 2 != j / 2 {
            T::zero()
        } else if i % 2 == 0 && j % 2 == 1 {
            T::one()
        } else if i % 2 == 1 && j % 2 == 0 {
            -T::one()
        } else {
            T::zero()
        }
    }))
}

fn modes_of<T: Scalar>(m: &Matrix<T>) -> Result<usize> {
    if m.dim() == 0 || m.dim() % 2 != 0 {
        return Err(invalid_argument(format!(
            "phase-space matrix must have positive even dimension, got {}",
            m.dim()
        )));
    }
    Ok(m.dim() / 2)
}

/// A real matrix `S` with `S Ω Sᵀ = Ω`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticMatrix<T> {
    n_modes: usize,
    matrix: Matrix<T>,
}

impl<T: Scalar> SymplecticMatrix<T> {
    /// Validates the symplectic condition to `T::SYMPLECTIC_TOL`, scaled by
    /// `max(1, ‖S‖²)` since entries grow like `e^r` under squeezing.
    pub fn new(matrix: Matrix<T>) -> Result<Self> {
        let n_modes = modes_of(&matrix)?;
        let s = Self { n_modes, matrix };
        let defect = s.symplectic_defect();
        let scale = s.matrix.max_abs().powi(2).max(T::one());
        if defect > T::SYMPLECTIC_TOL * scale {
            return Err(invalid_argument(format!(
                "matrix is not symplectic (defect {defect:e})"
            )));
        }
        Ok(s)
    }

    pub fn identity(n_modes: usize) -> Result<Self> {
        if n_modes == 0 {
            return Err(invalid_argument(
                "symplectic matrix needs at least one mode",
            ));
        }
        Ok(Self {
            n_modes,
            matrix: Matrix::identity(2 * n_modes),
        })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    /// `‖S Ω Sᵀ − Ω‖_max`.
    pub fn symplectic_defect(&self) -> T {
        let omega = symplectic_form(self.n_modes).expect("n_modes >= 1");
        let lhs = &(&self.matrix * &omega) * &self.matrix.transpose();
        lhs.max_abs_diff(&omega)
    }

    /// The product `self · other`, i.e. `other` acts first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n_modes != other.n_modes {
            return Err(invalid_argument(format!(
                "cannot compose symplectic maps on {} and {} modes",
                self.n_modes, other.n_modes
            )));
        }
        Ok(Self {
            n_modes: self.n_modes,
            matrix: &self.matrix * &other.matrix,
        })
    }
}

/// Two-mode squeezer `Γ_{i,j}(r)` embedded in `n_modes` modes.
///
/// Diagonal blocks of the two squeezed modes are `cosh(r) I₂`, the
/// off-diagonal blocks `sinh(r) Z₂` with `Z₂ = diag(1, -1)`. All other modes
/// are left alone. The map is symmetric in `i` and `j`.
pub fn two_mode_squeezer<T: Scalar>(
    r: T,
    i: usize,
    j: usize,
    n_modes: usize,
) -> Result<SymplecticMatrix<T>> {
    if n_modes == 0 {
        return Err(invalid_argument("squeezer needs at least one mode"));
    }
    if i == j {
        return Err(invalid_argument(format!(
            "two-mode squeezer needs distinct modes, got {i} twice"
        )));
    }
    if i >= n_modes || j >= n_modes {
        return Err(invalid_argument(format!(
            "mode index out of range: ({i}, {j}) with {n_modes} modes"
        )));
    }
    let (c, s) = (r.cosh(), r.sinh());
    let mut m = Matrix::identity(2 * n_modes);
    for (a, b) in [(i, j), (j, i)] {
        m[(2 * a, 2 * a)] = c;
        m[(2 * a + 1, 2 * a + 1)] = c;
        m[(2 * a, 2 * b)] = s;
        m[(2 * a + 1, 2 * b + 1)] = -s;
    }
    Ok(SymplecticMatrix { n_modes, matrix: m })
}

/// Covariance matrix of a physical zero-mean Gaussian state.
#[derive(Clone, Debug, PartialEq)]
pub struct CovarianceMatrix<T> {
    n_modes: usize,
    matrix: Matrix<T>,
}

impl<T: Scalar> CovarianceMatrix<T> {
    /// Checks symmetry, positive definiteness and the uncertainty relation
    /// (every symplectic eigenvalue at least `1 - T::PHYSICALITY_TOL`).
    pub fn new(matrix: Matrix<T>) -> Result<Self> {
        let n_modes = modes_of(&matrix)?;
        if !matrix.is_symmetric(T::SYMMETRY_TOL) {
            return Err(invalid_state("covariance matrix is not symmetric"));
        }
        let spectrum = symplectic_eigenvalues(&matrix)?;
        let smallest = spectrum.smallest();
        if smallest < T::one() - T::PHYSICALITY_TOL {
            return Err(invalid_state(format!(
                "covariance matrix violates the uncertainty relation \
                 (smallest symplectic eigenvalue {smallest})"
            )));
        }
        Ok(Self { n_modes, matrix })
    }

    /// Wraps a matrix produced by a construction that preserves
    /// physicality on its own.
    pub(crate) fn from_trusted(matrix: Matrix<T>) -> Self {
        debug_assert!(matrix.dim() % 2 == 0 && matrix.dim() > 0);
        Self {
            n_modes: matrix.dim() / 2,
            matrix,
        }
    }

    pub fn vacuum(n_modes: usize) -> Result<Self> {
        if n_modes == 0 {
            return Err(invalid_argument("state needs at least one mode"));
        }
        Ok(Self::from_trusted(Matrix::identity(2 * n_modes)))
    }

    /// Single-mode thermal state `a · I₂` with `a ≥ 1`.
    pub fn thermal(a: T) -> Result<Self> {
        if !(a >= T::one() - T::PHYSICALITY_TOL) {
            return Err(invalid_argument(format!(
                "thermal variance must be at least 1, got {a}"
            )));
        }
        Ok(Self::from_trusted(Matrix::identity(2).scale(a)))
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    /// The 2×2 block coupling modes `i` and `j`, row-major.
    pub fn block(&self, i: usize, j: usize) -> [[T; 2]; 2] {
        let m = &self.matrix;
        [
            [m[(2 * i, 2 * j)], m[(2 * i, 2 * j + 1)]],
            [m[(2 * i + 1, 2 * j)], m[(2 * i + 1, 2 * j + 1)]],
        ]
    }

    pub fn determinant(&self) -> T {
        self.matrix.determinant()
    }

    pub fn symplectic_spectrum(&self) -> SymplecticSpectrum<T> {
        symplectic_eigenvalues(&self.matrix).expect("validated covariance matrix")
    }
}

fn det2<T: Scalar>(b: [[T; 2]; 2]) -> T {
    b[0][0] * b[1][1] - b[0][1] * b[1][0]
}

/// Congruence `S σ Sᵀ`.
pub fn apply_symplectic<T: Scalar>(
    s: &SymplecticMatrix<T>,
    sigma: &CovarianceMatrix<T>,
) -> Result<CovarianceMatrix<T>> {
    if s.n_modes != sigma.n_modes {
        return Err(invalid_argument(format!(
            "symplectic map acts on {} modes, state has {}",
            s.n_modes, sigma.n_modes
        )));
    }
    let out = &(&s.matrix * &sigma.matrix) * &s.matrix.transpose();
    Ok(CovarianceMatrix::from_trusted(out))
}

/// Reduced state on the modes in `keep`, in the order given.
pub fn partial_trace<T: Scalar>(
    sigma: &CovarianceMatrix<T>,
    keep: &[usize],
) -> Result<CovarianceMatrix<T>> {
    if keep.is_empty() {
        return Err(invalid_argument(
            "partial trace must keep at least one mode",
        ));
    }
    for (k, &mode) in keep.iter().enumerate() {
        if mode >= sigma.n_modes {
            return Err(invalid_argument(format!(
                "mode {mode} out of range for a {}-mode state",
                sigma.n_modes
            )));
        }
        if keep[..k].contains(&mode) {
            return Err(invalid_argument(format!("mode {mode} listed twice")));
        }
    }
    let rows: Vec<usize> = keep.iter().flat_map(|&m| [2 * m, 2 * m + 1]).collect();
    Ok(CovarianceMatrix::from_trusted(
        sigma.matrix.submatrix(&rows),
    ))
}

/// Symplectic eigenvalues in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticSpectrum<T> {
    values: Vec<T>,
}

impl<T: Scalar> SymplecticSpectrum<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn largest(&self) -> T {
        self.values[0]
    }

    pub fn smallest(&self) -> T {
        *self.values.last().expect("spectrum is never empty")
    }

    /// `∏ ν_k²`, which equals `det σ`.
    pub fn product_of_squares(&self) -> T {
        self.values.iter().fold(T::one(), |acc, &v| acc * v * v)
    }
}

/// Symplectic eigenvalues of a symmetric positive-definite matrix.
///
/// With `σ = L Lᵀ`, the symmetric matrix `Lᵀ Ωᵀ σ Ω L` is similar to
/// `-(Ωσ)²`, whose eigenvalues are the squared symplectic eigenvalues,
/// each appearing twice. Adjacent pairs of the sorted spectrum are averaged
/// before taking the square root.
pub fn symplectic_eigenvalues<T: Scalar>(sigma: &Matrix<T>) -> Result<SymplecticSpectrum<T>> {
    let n_modes = modes_of(sigma)?;
    let chol = sigma
        .cholesky()
        .ok_or_else(|| invalid_state("matrix is not positive definite"))?;
    let omega = symplectic_form::<T>(n_modes)?;
    let inner = &(&omega.transpose() * sigma) * &omega;
    let k = &(&chol.transpose() * &inner) * &chol;
    let squares = k.symmetric_eigenvalues();
    let values = squares
        .chunks(2)
        .map(|pair| ((pair[0] + pair[1]) * T::half()).max(T::zero()).sqrt())
        .collect();
    Ok(SymplecticSpectrum { values })
}

/// Local invariants of a two-mode state with blocks `[[A, C], [Cᵀ, B]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoModeInvariants<T> {
    /// Seralian `Δ = det A + det B + 2 det C`.
    pub delta: T,
    pub det: T,
    /// `Δ² − 4 det σ`, evaluated in local normal form (see
    /// [`two_mode_invariants`]).
    pub discriminant: T,
}

impl<T: Scalar> TwoModeInvariants<T> {
    /// `(η₊, η₋)` from `2η±² = Δ ± √(Δ² − 4 det σ)`, with `η₋² = det σ / η₊²`.
    pub fn symplectic_eigenvalues(&self) -> (T, T) {
        let plus_sq = (self.delta + self.discriminant.max(T::zero()).sqrt()) * T::half();
        (plus_sq.sqrt(), (self.det / plus_sq).sqrt())
    }
}

/// `Δ`, `det σ` and the discriminant `Δ² − 4 det σ` of a two-mode state.
///
/// Bringing the local blocks to `aI` and `bI` by local symplectic maps, the
/// discriminant is `(a − b)²[(a + b)² + 4 det C] + 4ab(c₁ + c₂)²`, where
/// `c₁, c₂` are the signed singular values of the transformed `C`. This
/// keeps it accurate when the two symplectic eigenvalues nearly coincide,
/// where forming `Δ² − 4 det σ` directly loses half the digits.
pub fn two_mode_invariants<T: Scalar>(sigma: &CovarianceMatrix<T>) -> Result<TwoModeInvariants<T>> {
    if sigma.n_modes != 2 {
        return Err(invalid_argument(format!(
            "two-mode invariants need a two-mode state, got {} modes",
            sigma.n_modes
        )));
    }
    let (a_blk, b_blk, c_blk) = (sigma.block(0, 0), sigma.block(1, 1), sigma.block(0, 1));
    let (a, b, det_c) = (det2(a_blk).sqrt(), det2(b_blk).sqrt(), det2(c_blk));
    let delta = a * a + b * b + T::two() * det_c;

    let c = mul2(
        mul2(local_normalizer(a_blk, a), c_blk),
        transpose2(local_normalizer(b_blk, b)),
    );
    let e = (c[0][0] + c[1][1]) * T::half();
    let h = (c[1][0] - c[0][1]) * T::half();
    let sum_sq = T::lit(4.0) * (e * e + h * h);
    let discriminant =
        (a - b).powi(2) * ((a + b).powi(2) + T::lit(4.0) * det_c) + T::lit(4.0) * a * b * sum_sq;
    Ok(TwoModeInvariants {
        delta,
        det: sigma.determinant(),
        discriminant,
    })
}

/// The local symplectic map `√a · A^{−1/2}` taking `A` to `aI`, where
/// `a = √det A`.
fn local_normalizer<T: Scalar>(blk: [[T; 2]; 2], a: T) -> [[T; 2]; 2] {
    // √A = (A + aI)/t with t = √(tr A + 2a)
    let t = (blk[0][0] + blk[1][1] + T::two() * a).sqrt();
    let k = T::one() / (t * a.sqrt());
    [
        [(blk[1][1] + a) * k, -blk[0][1] * k],
        [-blk[1][0] * k, (blk[0][0] + a) * k],
    ]
}

fn mul2<T: Scalar>(x: [[T; 2]; 2], y: [[T; 2]; 2]) -> [[T; 2]; 2] {
    let mut out = [[T::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

fn transpose2<T: Scalar>(x: [[T; 2]; 2]) -> [[T; 2]; 2] {
    [[x[0][0], x[1][0]], [x[0][1], x[1][1]]]
}

/// `(η₊, η₋)` from `2η±² = Δ ± √(Δ² − 4 det σ)` given only `Δ` and
/// `det σ`.
///
/// `η₋²` is taken as `det σ / η₊²` so it keeps full relative precision
/// when `Δ` is large. Near `η₊ = η₋` the discriminant is a cancelling
/// difference; prefer [`TwoModeInvariants::symplectic_eigenvalues`] when the
/// state itself is available.
pub fn two_mode_symplectic_eigenvalues<T: Scalar>(delta: T, det: T) -> (T, T) {
    let disc = (delta * delta - T::lit(4.0) * det).max(T::zero());
    let plus_sq = (delta + disc.sqrt()) * T::half();
    let minus_sq = det / plus_sq;
    (plus_sq.sqrt(), minus_sq.sqrt())
}

/// Every symplectic eigenvalue within `T::PURITY_TOL` of 1.
pub fn is_pure<T: Scalar>(sigma: &CovarianceMatrix<T>) -> bool {
    sigma
        .symplectic_spectrum()
        .values()
        .iter()
        .all(|&v| (v - T::one()).abs() <= T::PURITY_TOL)
}
