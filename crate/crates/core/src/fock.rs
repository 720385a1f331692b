//! Brute-force check of the two-mode squeezer in a truncated number basis.
//!
//! The state `Σ_k tanhᵏ(r)/cosh(r) |k⟩|k⟩` is cut off at `d` levels per
//! mode. Nothing here uses the covariance-matrix formalism; the results are
//! compared against it in tests.

use num_complex::Complex;

use crate::error::{invalid_argument, Result};
use crate::gaussian::CovarianceMatrix;
use crate::linalg::Matrix;
use crate::Scalar;

/// Schmidt amplitudes of a two-mode squeezed vacuum on `d` levels.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedTwoModeState<T> {
    squeezing: T,
    amplitudes: Vec<T>,
}

/// `amplitude_k = tanhᵏ(r) / cosh(r)` for `k < d`.
pub fn truncated_tms<T: Scalar>(r: T, d: usize) -> Result<TruncatedTwoModeState<T>> {
    if d == 0 {
        return Err(invalid_argument("truncation must keep at least one level"));
    }
    if !(r >= T::zero() && r.is_finite()) {
        return Err(invalid_argument(format!(
            "squeezing must be finite and non-negative, got {r}"
        )));
    }
    let ratio = r.tanh();
    let mut amplitudes = Vec::with_capacity(d);
    let mut a = T::one() / r.cosh();
    for _ in 0..d {
        amplitudes.push(a);
        a = a * ratio;
    }
    Ok(TruncatedTwoModeState {
        squeezing: r,
        amplitudes,
    })
}

impl<T: Scalar> TruncatedTwoModeState<T> {
    pub fn truncation(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn squeezing(&self) -> T {
        self.squeezing
    }

    pub fn amplitudes(&self) -> &[T] {
        &self.amplitudes
    }

    pub fn norm_sq(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, &a| acc + a * a)
    }

    /// `1 − ‖ψ‖²`, the weight lost to truncation.
    pub fn norm_defect(&self) -> T {
        T::one() - self.norm_sq()
    }

    /// Eigenvalues of either reduced density matrix, renormalised.
    pub fn reduced_spectrum(&self) -> Vec<T> {
        let norm = self.norm_sq();
        self.amplitudes.iter().map(|&a| a * a / norm).collect()
    }

    /// Entanglement entropy in bits.
    pub fn reduced_entropy(&self) -> T {
        self.reduced_spectrum()
            .into_iter()
            .filter(|&p| p > T::zero())
            .fold(T::zero(), |acc, p| acc - p * p.log2())
    }

    pub fn mean_occupation(&self) -> T {
        self.reduced_spectrum()
            .into_iter()
            .enumerate()
            .fold(T::zero(), |acc, (k, p)| acc + T::lit(k as f64) * p)
    }

    /// Symmetrised second moments `½⟨{X_i, X_j}⟩` with
    /// `x = a + a†`, `p = i(a† − a)` built from truncated ladder matrices,
    /// ordered `(x₁, p₁, x₂, p₂)`.
    ///
    /// Fails with `InvalidState` when the truncation is too coarse for the
    /// moments to satisfy the uncertainty relation; see
    /// [`second_moment_matrix`](Self::second_moment_matrix) for the raw values.
    pub fn second_moments(&self) -> Result<CovarianceMatrix<T>> {
        CovarianceMatrix::new(self.second_moment_matrix())
    }

    /// The same moments without physicality checks.
    pub fn second_moment_matrix(&self) -> Matrix<T> {
        let d = self.truncation();
        let norm = self.norm_sq();
        let ladder = CMatrix::annihilation(d);
        let dagger = ladder.adjoint();
        let x = ladder.add(&dagger);
        let p = dagger.sub(&ladder).scale(Complex::new(T::zero(), T::one()));
        let id = CMatrix::identity(d);
        let ops = [&id, &x, &p];
        // products[u][v] = ops[u] · ops[v]
        let products: Vec<Vec<CMatrix<T>>> = ops
            .iter()
            .map(|u| ops.iter().map(|v| u.mul(v)).collect())
            .collect();
        // (operator index on mode 1, on mode 2) for x₁, p₁, x₂, p₂
        let quads = [(1, 0), (2, 0), (0, 1), (0, 2)];

        let mut m = Matrix::zeros(4);
        for i in 0..4 {
            for j in i..4 {
                let ((a1, a2), (b1, b2)) = (quads[i], quads[j]);
                let ab = self.expectation(&products[a1][b1], &products[a2][b2]);
                let ba = self.expectation(&products[b1][a1], &products[b2][a2]);
                let v = (ab + ba).re * T::half() / norm;
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        m
    }

    /// `⟨ψ| A ⊗ B |ψ⟩ = Σ_{k,k'} c_k c_{k'} A_{kk'} B_{kk'}` for the
    /// Schmidt-diagonal `|ψ⟩ = Σ_k c_k |k⟩|k⟩`.
    fn expectation(&self, a: &CMatrix<T>, b: &CMatrix<T>) -> Complex<T> {
        let c = &self.amplitudes;
        let mut acc = CMatrix::zero();
        for i in 0..c.len() {
            for j in 0..c.len() {
                acc = acc + a.get(i, j) * b.get(i, j) * (c[i] * c[j]);
            }
        }
        acc
    }
}

#[derive(Clone, Debug)]
struct CMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> CMatrix<T> {
    fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    fn zero() -> Complex<T> {
        Complex::new(T::zero(), T::zero())
    }

    fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                Complex::new(T::one(), T::zero())
            } else {
                Self::zero()
            }
        })
    }

    /// `a|k⟩ = √k |k−1⟩`.
    fn annihilation(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if j == i + 1 {
                Complex::new(T::lit(j as f64).sqrt(), T::zero())
            } else {
                Self::zero()
            }
        })
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.dim + j]
    }

    fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j) + other.get(i, j))
    }

    fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j) - other.get(i, j))
    }

    fn scale(&self, k: Complex<T>) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j) * k)
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut out = vec![Self::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = out[i * n + j] + a * other.get(k, j);
                }
            }
        }
        Self { dim: n, data: out }
    }
}
