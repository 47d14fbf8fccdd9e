//! Eigenvalues of `G(r, N)`.
//!
//! The adjacency matrix of `G(r, N)` is circulant, so its eigenvalues are the
//! finite Fourier transform of its first row:
//! `λ_k = u(r, 2kπ/N)` with `u(r, θ) = 2 Σ_{m=1}^{r} cos(mθ) = D_r(θ) − 1`.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::trigsum::{cos_arith_sum, ArithProgression, DEGENERATE_STEP};
use crate::{Error, Result};

/// The circulant graph `G(r, N)`: vertices `0..N`, edges between vertices at
/// circular distance `1..=r`.
///
/// Only `N >= 2r + 1` is admitted. At `N = 2r` the vertex opposite to `i` is
/// reached both as `i + r` and `i − r`; the cosine formula counts it twice
/// while the simple graph has a single edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphSpec {
    r: u64,
    #[serde(rename = "N")]
    n: u64,
}

impl GraphSpec {
    pub fn new(r: u64, n: u64) -> Result<Self> {
        if r == 0 || n < 2 * r + 1 {
            return Err(Error::InvalidSpec { r, n });
        }
        Ok(Self { r, n })
    }

    /// Neighbourhood radius.
    pub fn r(&self) -> u64 {
        self.r
    }

    /// Number of vertices.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> u64 {
        2 * self.r
    }

    /// `2(N − 1)`, the energy of the complete graph on `N` vertices.
    pub fn hyperenergetic_threshold(&self) -> f64 {
        2.0 * (self.n - 1) as f64
    }
}

impl std::fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "G({}, {})", self.r, self.n)
    }
}

/// The `N` eigenvalues of a `G(r, N)`, indexed by Fourier mode `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    spec: GraphSpec,
    values: Vec<f64>,
}

impl Spectrum {
    pub fn spec(&self) -> GraphSpec {
        self.spec
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Eigenvalues in ascending order.
    pub fn sorted(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn trace(&self) -> f64 {
        crate::sum::compensated_sum(self.values.iter().copied())
    }

    pub fn sum_of_squares(&self) -> f64 {
        crate::sum::compensated_sum(self.values.iter().map(|x| x * x))
    }
}

/// `u(r, θ) = 2 Σ_{m=1}^{r} cos(mθ)`.
pub fn partial_cosine_sum(r: u64, theta: f64) -> f64 {
    assert!(r >= 1, "partial_cosine_sum needs r >= 1");
    2.0 * cos_arith_sum(ArithProgression::new(theta, theta, r - 1))
}

/// Dirichlet kernel `D_r(θ) = sin((r + ½)θ) / sin(θ/2) = 1 + u(r, θ)`.
pub fn dirichlet_kernel(r: u64, theta: f64) -> f64 {
    assert!(r >= 1, "dirichlet_kernel needs r >= 1");
    let denom = (0.5 * theta).sin();
    if denom.abs() < DEGENERATE_STEP {
        return (2 * r + 1) as f64;
    }
    ((r as f64 + 0.5) * theta).sin() / denom
}

/// Angle `2kπ/N` of Fourier mode `k`, folded so that modes `k` and `N − k`
/// share the same floating-point input.
pub(crate) fn mode_angle(n: u64, k: u64) -> f64 {
    let k = k.min(n - k);
    TAU * k as f64 / n as f64
}

/// The `k`-th eigenvalue `λ(r, N, k) = u(r, 2kπ/N)`.
///
/// # Panics
///
/// If `k >= N`.
pub fn eigenvalue(spec: GraphSpec, k: u64) -> f64 {
    assert!(k < spec.n, "mode index {k} out of range for {spec}");
    if k == 0 {
        return spec.degree() as f64;
    }
    partial_cosine_sum(spec.r, mode_angle(spec.n, k))
}

pub fn full_spectrum(spec: GraphSpec) -> Spectrum {
    let values = (0..spec.n).map(|k| eigenvalue(spec, k)).collect();
    Spectrum { spec, values }
}
