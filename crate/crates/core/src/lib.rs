//! Spectra and energies of the circulant graphs `G(r, N)`.
//!
//! `G(r, N)` has vertices `0..N` with an edge between `i` and `j` whenever their
//! circular distance is between 1 and `r`. It is `2r`-regular and its
//! eigenvalues are `u(r, 2kπ/N)` where `u(r, θ) = 2 Σ_{m=1}^{r} cos(mθ)`.
//!
//! The crate provides:
//!
//! - [`trigsum`]: closed-form cosine/sine sums over arithmetic progressions, the
//!   kernel every other module evaluates through.
//! - [`spectrum`]: eigenvalues, `u(r, θ)` and the Dirichlet kernel.
//! - [`energy`]: the direct absolute-eigenvalue sum and the closed formulas for
//!   `r = 1`, `r = 2`, `N = 2r + 1` and `N = 2r + 2`.
//! - [`oracle`]: an explicit adjacency matrix diagonalized by cyclic Jacobi,
//!   used as an independent referee for the formula paths.
//! - [`asymptotics`]: the limit `I_r = lim E(r, N)/(N - 1)` computed by
//!   quadrature, by a double trigonometric sum and by a closed finite sum,
//!   together with the Lebesgue constant bounds.
//! - [`scan`]: hyperenergetic classification, range scans, convergence tables
//!   and convergence tables.
//! - [`figures`]: the `(N, E/(N − 1))` series behind the standard plots.

pub mod asymptotics;
pub mod energy;
mod error;
pub mod figures;
pub mod oracle;
pub mod quadrature;
pub mod scan;
pub mod spectrum;
pub mod sum;
pub mod trigsum;

pub use asymptotics::AsymptoticReport;
pub use energy::{EnergyMethod, EnergyReport};
pub use error::{Error, Result};
pub use figures::{FigureData, FigureId};
pub use scan::{Classification, ScanRecord};
pub use spectrum::{GraphSpec, Spectrum};
