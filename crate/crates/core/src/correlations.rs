//! Entropic and contangle quantities of the four-mode state.
//!
//! Entropies are in base 2 (bits / ebits). Contangles use
//! `g[m²] = arcsinh²(√(m² − 1))`, which gives `4ξ²` for a pure two-mode
//! squeezed state of squeezing `ξ`.
//!
//! Functions taking `(xi, l, n)` as scalars are the finite-squeezing
//! closed forms. The `ξ → ∞` limit is only reachable through
//! [`out_out_contangle_inf_squeezing`] and [`Report::KruskalLimit`].

use crate::error::{invalid_argument, Error, Result};
use crate::gaussian::partial_trace;
use crate::horizon::{KruskalSqueezing, SqueezingTriple};
use crate::state::{schwarzschild_state_product, FourModeLayout};
use crate::Scalar;

/// Von Neumann entropy (bits) of a single-mode thermal state with
/// symplectic eigenvalue `x`:
/// `f(x) = (x+1)/2 log₂((x+1)/2) − (x−1)/2 log₂((x−1)/2)`.
pub fn entropy_f<T: Scalar>(x: T) -> Result<T> {
    if !(x >= T::one()) {
        return Err(invalid_argument(format!(
            "entropy function needs x >= 1, got {x}"
        )));
    }
    let plus = (x + T::one()) * T::half();
    let minus = (x - T::one()) * T::half();
    let tail = if minus > T::zero() {
        minus * minus.log2()
    } else {
        T::zero()
    };
    Ok(plus * plus.log2() - tail)
}

/// [`entropy_f`] for a symplectic eigenvalue that may sit a rounding error
/// below 1.
fn entropy_of_eigenvalue<T: Scalar>(x: T) -> T {
    let x = if x < T::one() && x >= T::one() - T::PHYSICALITY_TOL {
        T::one()
    } else {
        x
    };
    entropy_f(x).expect("symplectic eigenvalue of a physical state")
}

/// Entanglement entropy `S_ξ = f(cosh 2ξ)` of the Kruskal state.
pub fn kruskal_entanglement<T: Scalar>(xi: T) -> T {
    entropy_of_eigenvalue((T::two() * xi).cosh())
}

/// Mutual information of the (pure) Kruskal state, `I_ξ = 2 S_ξ`.
pub fn kruskal_mutual_information<T: Scalar>(xi: T) -> T {
    T::two() * kruskal_entanglement(xi)
}

/// `g[m²] = arcsinh²(√(m² − 1))`.
pub fn contangle_g<T: Scalar>(m_sq: T) -> Result<T> {
    if !(m_sq >= T::one()) {
        return Err(invalid_argument(format!(
            "contangle needs m^2 >= 1, got {m_sq}"
        )));
    }
    Ok((m_sq - T::one()).sqrt().asinh().powi(2))
}

/// `g` extended by zero on the separable side `m² < 1`.
fn contangle_g_or_zero<T: Scalar>(m_sq: T) -> T {
    contangle_g(m_sq).unwrap_or_else(|_| T::zero())
}

/// Outer modes are entangled iff `tanh ξ > sinh l · sinh n`.
pub fn outer_entangled<T: Scalar>(xi: T, l: T, n: T) -> bool {
    xi.tanh() > l.sinh() * n.sinh()
}

/// The parameter `m_{λ|ν}` of the outer two-mode state. Meaningful as a
/// contangle argument only when [`outer_entangled`] holds.
pub fn out_out_m<T: Scalar>(xi: T, l: T, n: T) -> T {
    let two = T::two();
    let (c2l, c2n) = ((two * l).cosh(), (two * n).cosh());
    let (c2xi, s2xi) = ((two * xi).cosh(), (two * xi).sinh());
    let cxi_sq = xi.cosh().powi(2);
    let sxi_sq = xi.sinh().powi(2);
    let ss = l.sinh() * n.sinh();
    let num = two * c2l * c2n * cxi_sq + T::lit(3.0) * c2xi - T::lit(4.0) * ss * s2xi - T::one();
    let den = two * ((c2l + c2n) * cxi_sq - two * sxi_sq + two * ss * s2xi);
    num / den
}

/// Contangle `τ_{λ|ν}` between the two outer modes; exactly zero unless
/// `tanh ξ > sinh l · sinh n`.
pub fn out_out_contangle<T: Scalar>(xi: T, l: T, n: T) -> T {
    if !outer_entangled(xi, l, n) {
        return T::zero();
    }
    let m = out_out_m(xi, l, n);
    contangle_g((m * m).max(T::one())).expect("clamped to >= 1")
}

/// Outer-mode contangle in the `ξ → ∞` limit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LimitContangle<T> {
    Finite(T),
    /// `l = n = 0`: the outer modes carry the full EPR correlations.
    Divergent,
}

impl<T: Scalar> LimitContangle<T> {
    pub fn is_positive(self) -> bool {
        match self {
            Self::Finite(v) => v > T::zero(),
            Self::Divergent => true,
        }
    }

    pub fn finite(self) -> Option<T> {
        match self {
            Self::Finite(v) => Some(v),
            Self::Divergent => None,
        }
    }
}

/// `lim_{ξ→∞} τ_{λ|ν}` with
/// `m∞ = [c(2l)c(2n) + 3 − 4s(l)s(n)] / [c(2l) + c(2n) − 2 + 4s(l)s(n)]`,
/// zero once `sinh l · sinh n > 1`.
pub fn out_out_contangle_inf_squeezing<T: Scalar>(l: T, n: T) -> Result<LimitContangle<T>> {
    let ss = l.sinh() * n.sinh();
    let boundary_tol = T::lit(1e-12).max(T::epsilon());
    if (ss - T::one()).abs() <= boundary_tol {
        return Err(Error::DegenerateInput(format!(
            "sinh(l) sinh(n) = {ss} is on the separability boundary"
        )));
    }
    if ss > T::one() {
        return Ok(LimitContangle::Finite(T::zero()));
    }
    let two = T::two();
    // the denominator equals 2(sinh l + sinh n)²
    let den = (two * l).cosh() + (two * n).cosh() - two + T::lit(4.0) * ss;
    if den == T::zero() {
        return Ok(LimitContangle::Divergent);
    }
    let num = (two * l).cosh() * (two * n).cosh() + T::lit(3.0) - T::lit(4.0) * ss;
    let m = num / den;
    Ok(LimitContangle::Finite(
        contangle_g((m * m).max(T::one())).expect("clamped to >= 1"),
    ))
}

/// `det σ^out` and `Δ(σ^out)` of the outer two-mode state in closed form.
///
/// `Δ` is assembled as `2√det + g²` with
/// `g = (cosh 2ξ + 1)(sinh² l − sinh² n)`, which equals the block
/// expansion `det A + det B + 2 det C` without its large cancelling terms.
pub fn outer_invariants<T: Scalar>(xi: T, l: T, n: T) -> (T, T) {
    let root = outer_root(xi, l, n);
    let gap = outer_gap(xi, l, n);
    (root * root, T::two() * root + gap * gap)
}

/// `√det σ^out`.
fn outer_root<T: Scalar>(xi: T, l: T, n: T) -> T {
    let c2xi = (T::two() * xi).cosh();
    let (cl2, sl2) = (l.cosh().powi(2), l.sinh().powi(2));
    let (cn2, sn2) = (n.cosh().powi(2), n.sinh().powi(2));
    (cn2 + c2xi * sn2) * cl2 + sl2 * (c2xi * cn2 + sn2)
}

/// `√(Δ − 2√det) = (cosh 2ξ + 1)|sinh² l − sinh² n|`.
fn outer_gap<T: Scalar>(xi: T, l: T, n: T) -> T {
    ((T::two() * xi).cosh() + T::one()) * (l.sinh().powi(2) - n.sinh().powi(2)).abs()
}

/// Symplectic eigenvalues `(η₊, η₋)` of the outer two-mode state, with the
/// discriminant `Δ² − 4 det = g² (g² + 4√det)` taken in factored form.
pub fn outer_symplectic_eigenvalues<T: Scalar>(xi: T, l: T, n: T) -> (T, T) {
    let root = outer_root(xi, l, n);
    let gap = outer_gap(xi, l, n);
    let delta = T::two() * root + gap * gap;
    let disc_sqrt = gap * (gap * gap + T::lit(4.0) * root).sqrt();
    let plus_sq = (delta + disc_sqrt) * T::half();
    (plus_sq.sqrt(), (root * root / plus_sq).sqrt())
}

/// Mutual information (bits) between the two outer modes from the closed
/// forms of the local determinants, `det σ^out` and `Δ(σ^out)`.
pub fn out_out_mutual_information<T: Scalar>(xi: T, l: T, n: T) -> T {
    let c2xi = (T::two() * xi).cosh();
    // √det of each local block
    let a_lambda = l.cosh().powi(2) * c2xi + l.sinh().powi(2);
    let a_nu = n.cosh().powi(2) * c2xi + n.sinh().powi(2);
    let (plus, minus) = outer_symplectic_eigenvalues(xi, l, n);
    entropy_of_eigenvalue(a_lambda) + entropy_of_eigenvalue(a_nu)
        - entropy_of_eigenvalue(plus)
        - entropy_of_eigenvalue(minus)
}

/// The same mutual information by brute force: build the four-mode state,
/// trace out the inner modes and diagonalise.
pub fn out_out_mutual_information_generic<T: Scalar>(t: &SqueezingTriple<T>) -> Result<T> {
    let state = schwarzschild_state_product(t)?;
    let outer = partial_trace(&state, &FourModeLayout::OUTER)?;
    let local: T = (0..2)
        .map(|k| {
            let reduced = partial_trace(&outer, &[k]).expect("valid mode");
            entropy_of_eigenvalue(reduced.determinant().sqrt())
        })
        .fold(T::zero(), |a, b| a + b);
    let joint = outer
        .symplectic_spectrum()
        .values()
        .iter()
        .fold(T::zero(), |a, &v| a + entropy_of_eigenvalue(v));
    Ok(local - joint)
}

/// Contangle between the inner and outer partner of one frequency, `4x²`.
pub fn in_out_contangle<T: Scalar>(x: T) -> T {
    T::lit(4.0) * x * x
}

/// Contangle between `λ_in` and the other three modes,
/// `arcsinh²(√(a² − 1))` with `a = cosh² l + cosh(2ξ) sinh² l`.
pub fn one_vs_three_contangle<T: Scalar>(xi: T, l_min: T) -> T {
    let a = l_min.cosh().powi(2) + (T::two() * xi).cosh() * l_min.sinh().powi(2);
    contangle_g((a * a).max(T::one())).expect("a >= 1")
}

/// Residual (multipartite) contangle left after removing the in/out pair
/// contribution of the less squeezed frequency.
pub fn residual_contangle<T: Scalar>(xi: T, l: T, n: T) -> T {
    let l_min = l.min(n);
    one_vs_three_contangle(xi, l_min) - in_out_contangle(l_min)
}

/// Upper bound on the tripartite entanglement among `λ_in`, `λ_out` and
/// `ν_out`, with the modes labelled so that `l ≤ n`. Clamped at zero.
pub fn tripartite_upper_bound<T: Scalar>(xi: T, l: T, n: T) -> T {
    let (l, n) = if l <= n { (l, n) } else { (n, l) };
    let t = xi.tanh().powi(2) / n.cosh().powi(2);
    let first = contangle_g_or_zero(((t + T::one()) / (t - T::one())).powi(2))
        - out_out_contangle(xi, l, n);
    let second = contangle_g_or_zero(((t - (T::two() * l).cosh()) / (t - T::one())).powi(2))
        - in_out_contangle(l);
    first.min(second).max(T::zero())
}

/// Every scalar output at one finite parameter point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationReport<T> {
    pub s_kruskal: T,
    pub i_kruskal: T,
    pub tau_out: T,
    pub i_out: T,
    pub tau_in_out_lambda: T,
    pub tau_in_out_nu: T,
    pub tau_1v3: T,
    pub tau_residual: T,
    pub tau_tri_upper: T,
    pub entangled_out: bool,
}

impl<T: Scalar> CorrelationReport<T> {
    /// Field names in declaration order, used as CSV/JSON keys.
    pub const FIELDS: [&'static str; 10] = [
        "s_kruskal",
        "i_kruskal",
        "tau_out",
        "i_out",
        "tau_in_out_lambda",
        "tau_in_out_nu",
        "tau_1v3",
        "tau_residual",
        "tau_tri_upper",
        "entangled_out",
    ];

    pub fn evaluate(xi: T, l: T, n: T) -> Self {
        let s_kruskal = kruskal_entanglement(xi);
        let tau_out = out_out_contangle(xi, l, n);
        let tau_1v3 = one_vs_three_contangle(xi, l.min(n));
        let tau_in_out_min = in_out_contangle(l.min(n));
        Self {
            s_kruskal,
            i_kruskal: T::two() * s_kruskal,
            tau_out,
            i_out: out_out_mutual_information(xi, l, n),
            tau_in_out_lambda: in_out_contangle(l),
            tau_in_out_nu: in_out_contangle(n),
            tau_1v3,
            tau_residual: tau_1v3 - tau_in_out_min,
            tau_tri_upper: tripartite_upper_bound(xi, l, n),
            entangled_out: tau_out > T::zero(),
        }
    }
}

/// What survives of the report in the `ξ → ∞` limit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitReport<T> {
    pub tau_out: LimitContangle<T>,
    pub entangled_out: bool,
}

impl<T: Scalar> LimitReport<T> {
    pub fn evaluate(l: T, n: T) -> Result<Self> {
        let tau_out = out_out_contangle_inf_squeezing(l, n)?;
        Ok(Self {
            tau_out,
            entangled_out: tau_out.is_positive(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Report<T> {
    Finite(CorrelationReport<T>),
    KruskalLimit(LimitReport<T>),
}

impl<T: Scalar> Report<T> {
    pub fn evaluate(t: &SqueezingTriple<T>) -> Result<Self> {
        match t.xi() {
            KruskalSqueezing::Finite(xi) => {
                Ok(Self::Finite(CorrelationReport::evaluate(xi, t.l(), t.n())))
            }
            KruskalSqueezing::Infinite => {
                Ok(Self::KruskalLimit(LimitReport::evaluate(t.l(), t.n())?))
            }
        }
    }

    pub fn entangled_out(&self) -> bool {
        match self {
            Self::Finite(r) => r.entangled_out,
            Self::KruskalLimit(r) => r.entangled_out,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy_f(1.0_f64).unwrap(), 0.0);
        assert!((entropy_f(3.0_f64).unwrap() - 2.0).abs() < 1e-15);
        assert!(entropy_f(0.999_f64).is_err());
        let mut prev = 0.0;
        for k in 1..100 {
            let v = entropy_f(1.0 + k as f64 * 0.1).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn kruskal_quantities() {
        assert_eq!(kruskal_entanglement(0.0_f64), 0.0);
        assert_eq!(kruskal_mutual_information(0.0_f64), 0.0);
        for xi in [0.1, 0.5, 1.0, 2.5] {
            let s: f64 = kruskal_entanglement(xi);
            assert_eq!(kruskal_mutual_information(xi), 2.0 * s);
        }
        let s1 = kruskal_entanglement(1.0_f64);
        assert!((s1 - entropy_f(2.0_f64.cosh()).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn contangle_g_examples() {
        assert_eq!(contangle_g(1.0_f64).unwrap(), 0.0);
        for x in [0.2_f64, 0.9, 1.7] {
            let m = (2.0 * x).cosh();
            assert!((contangle_g(m * m).unwrap() - 4.0 * x * x).abs() < 1e-12);
        }
        assert!(contangle_g(0.5_f64).is_err());
    }

    #[test]
    fn out_out_reduces_to_kruskal_without_horizon() {
        for xi in [0.1_f64, 0.8, 2.0] {
            assert!(
                (out_out_m(xi, 0.0, 0.0) - (2.0 * xi).cosh()).abs() < 1e-12 * (2.0 * xi).cosh()
            );
            assert!((out_out_contangle(xi, 0.0, 0.0) - 4.0 * xi * xi).abs() < 1e-10);
        }
    }

    #[test]
    fn out_out_vanishes_past_threshold() {
        // sinh(1)^2 = 1.38 > tanh(ξ) for every ξ
        assert_eq!(out_out_contangle(3.0_f64, 1.0, 1.0), 0.0);
        assert_eq!(out_out_contangle(0.0_f64, 0.1, 0.1), 0.0);
    }

    #[test]
    fn limit_examples() {
        assert_eq!(
            out_out_contangle_inf_squeezing(0.0_f64, 0.0).unwrap(),
            LimitContangle::Divergent
        );
        let just_past = 1.0_f64.asinh() + 1e-6;
        assert_eq!(
            out_out_contangle_inf_squeezing(just_past, 1.0_f64.asinh()).unwrap(),
            LimitContangle::Finite(0.0)
        );
        let on = 1.0_f64.asinh();
        assert!(matches!(
            out_out_contangle_inf_squeezing(on, on),
            Err(Error::DegenerateInput(_))
        ));
        let v = out_out_contangle_inf_squeezing(0.5_f64, 0.5)
            .unwrap()
            .finite()
            .unwrap();
        assert!(v > 0.0);
        assert!((v - out_out_contangle(20.0, 0.5, 0.5)).abs() < 1e-6);
    }

    #[test]
    fn in_out_values() {
        assert_eq!(in_out_contangle(0.0_f64), 0.0);
        assert_eq!(in_out_contangle(1.0_f64), 4.0);
        assert_eq!(in_out_contangle(0.5_f64), 1.0);
    }

    #[test]
    fn one_vs_three_edges() {
        for l in [0.1_f64, 0.6, 1.4] {
            assert!((one_vs_three_contangle(0.0, l) - 4.0 * l * l).abs() < 1e-12);
        }
        assert_eq!(one_vs_three_contangle(1.3_f64, 0.0), 0.0);
    }

    #[test]
    fn residual_edges() {
        assert_eq!(residual_contangle(2.0_f64, 0.0, 1.0), 0.0);
        for l in [0.2_f64, 1.0, 2.5] {
            assert!(residual_contangle(0.0, l, l + 0.3).abs() < 1e-10);
        }
        // labelling: l_min is always the smaller squeezing
        assert_eq!(
            residual_contangle(1.0_f64, 0.4, 0.9),
            residual_contangle(1.0, 0.9, 0.4)
        );
    }

    #[test]
    fn tripartite_is_zero_without_kruskal_squeezing() {
        for (l, n) in [(0.1_f64, 0.2), (0.5, 0.5), (1.0, 2.0)] {
            assert_eq!(tripartite_upper_bound(0.0, l, n), 0.0);
        }
        assert!(tripartite_upper_bound(1.0_f64, 0.3, 0.4) >= 0.0);
    }

    #[test]
    fn report_invariants() {
        let r = CorrelationReport::evaluate(1.0_f64, 0.3, 0.4);
        assert_eq!(r.i_kruskal, 2.0 * r.s_kruskal);
        assert_eq!(r.tau_residual, r.tau_1v3 - r.tau_in_out_lambda);
        assert_eq!(r.entangled_out, r.tau_out > 0.0);
        let zero = CorrelationReport::evaluate(0.0_f64, 0.7, 0.9);
        assert!(!zero.entangled_out);
        assert_eq!(zero.s_kruskal, 0.0);
    }

    #[test]
    fn report_dispatches_on_kruskal_squeezing() {
        let t = SqueezingTriple::infinite(0.2_f64, 0.3).unwrap();
        match Report::evaluate(&t).unwrap() {
            Report::KruskalLimit(r) => assert!(r.entangled_out),
            Report::Finite(_) => panic!("expected the limit report"),
        }
    }
}
