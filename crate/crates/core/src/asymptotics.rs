//! The asymptotic energy coefficient `I_r = lim_{N→∞} E(r, N)/(N − 1)`.
//!
//! `I_r = (1/π) ∫_0^π |D_r(θ) − 1| dθ = (1/π) ∫_0^π |u(r, θ)| dθ`, computed
//! three ways:
//!
//! - [`ir_quadrature`]: Gauss–Legendre on each interval between consecutive
//!   zeros of `u(r, ·)`, where the integrand is analytic.
//! - [`ir_double_sum`]: integrating `u` term by term over the sign partition
//!   gives `(4/π) Σ_{k=1}^{r} Σ_{m=0}^{⌊r/2⌋} [sin((2m+1)kπ/(r+1)) − sin(2mkπ/r)]/k`.
//! - [`ir_closed`]: both inner sums over `m` are sine sums along arithmetic
//!   progressions and collapse to closed form, leaving a single sum over `k`.
//!
//! The zeros of `u(r, θ)` in `(0, π)` are `2mπ/r` and `(2m+1)π/(r+1)`; they
//! interleave as `π/(r+1) < 2π/r < 3π/(r+1) < …`, and `u` is positive on the
//! first interval and alternates from there.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::quadrature::GaussLegendre;
use crate::spectrum::{dirichlet_kernel, partial_cosine_sum};
use crate::sum::compensated_sum;
use crate::{Error, Result};

/// Gauss–Legendre nodes per partition interval.
pub const DEFAULT_NODES: usize = 64;

/// Partition points closer than this are merged.
const DEDUP_TOL: f64 = 1e-12;

/// Tolerance for the agreement of the three routes to `I_r`.
pub const AGREEMENT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticReport {
    pub r: u64,
    pub ir_quadrature: f64,
    pub ir_double_sum: f64,
    pub ir_closed: f64,
    /// Lebesgue constant `L_r = (1/π) ∫_0^π |D_r|`.
    pub lebesgue: f64,
    /// `4 ln(2r)/π³`.
    pub lower_bound_log: f64,
    /// `(L_r − 1, L_r + 1)`.
    pub bound_interval: (f64, f64),
}

impl AsymptoticReport {
    /// The closed-form value of `I_r`.
    pub fn ir(&self) -> f64 {
        self.ir_closed
    }

    /// Every consistency property the report must satisfy; returns the first
    /// failure.
    pub fn check(&self) -> Result<()> {
        let values = [self.ir_quadrature, self.ir_double_sum, self.ir_closed];
        let spread = values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
            - values.iter().copied().fold(f64::INFINITY, f64::min);
        if spread.is_nan() || spread >= AGREEMENT_TOL {
            return Err(Error::Invariant(format!(
                "I_{} routes disagree: quadrature {}, double sum {}, closed {}",
                self.r, self.ir_quadrature, self.ir_double_sum, self.ir_closed
            )));
        }
        let ir = self.ir();
        let (lo, hi) = self.bound_interval;
        if !(lo <= ir && ir <= hi) {
            return Err(Error::Invariant(format!(
                "I_{} = {ir} outside Lebesgue interval [{lo}, {hi}]",
                self.r
            )));
        }
        if !(ir > self.lower_bound_log && ir > 0.0) {
            return Err(Error::Invariant(format!(
                "I_{} = {ir} not above 4 ln(2r)/π³ = {}",
                self.r, self.lower_bound_log
            )));
        }
        Ok(())
    }
}

/// Zeros of `u(r, ·)` strictly inside `(0, π)`, ascending.
pub fn sign_change_points(r: u64) -> Vec<f64> {
    assert!(r >= 1);
    let even_family = (1..)
        .take_while(|m| 2 * m < r)
        .map(|m| 2.0 * m as f64 * PI / r as f64);
    let odd_family = (0..)
        .take_while(|m| 2 * m + 1 < r + 1)
        .map(|m| (2 * m + 1) as f64 * PI / (r + 1) as f64);
    let mut points: Vec<f64> = even_family.chain(odd_family).collect();
    points.sort_by(f64::total_cmp);
    points.dedup_by(|b, a| (*b - *a).abs() < DEDUP_TOL);
    points
}

fn with_endpoints(interior: Vec<f64>) -> Vec<f64> {
    let mut breaks = Vec::with_capacity(interior.len() + 2);
    breaks.push(0.0);
    breaks.extend(interior);
    breaks.push(PI);
    breaks
}

/// `I_r` by piecewise Gauss–Legendre quadrature of `|u(r, θ)|/π` over the
/// sign partition.
pub fn ir_quadrature(r: u64, nodes_per_interval: usize) -> f64 {
    assert!(r >= 1);
    assert!(
        nodes_per_interval >= 16,
        "need at least 16 nodes per interval"
    );
    let rule = GaussLegendre::new(nodes_per_interval);
    let breaks = with_endpoints(sign_change_points(r));
    rule.integrate_piecewise(|t| partial_cosine_sum(r, t).abs(), &breaks) / PI
}

/// `I_r` by the double trigonometric sum, evaluated term by term.
pub fn ir_double_sum(r: u64) -> f64 {
    assert!(r >= 1);
    let rf = r as f64;
    let terms = (1..=r).flat_map(|k| {
        let kf = k as f64;
        (0..=r / 2).map(move |m| {
            let mf = m as f64;
            (((2.0 * mf + 1.0) * kf * PI / (rf + 1.0)).sin() - (2.0 * mf * kf * PI / rf).sin()) / kf
        })
    });
    4.0 / PI * compensated_sum(terms)
}

/// `I_r` by a single sum over `k` of the closed inner sums:
///
/// ```text
/// Σ_{m=0}^{h} sin((2m+1)kπ/(r+1)) = [1 − cos((2h+2)kπ/(r+1))] / (2 sin(kπ/(r+1)))
/// Σ_{m=0}^{h} sin(2mkπ/r)         = [cos(kπ/r) − cos((2h+1)kπ/r)] / (2 sin(kπ/r))
/// ```
///
/// with `h = ⌊r/2⌋`. The second sum is identically zero when `r | k`, where
/// the closed form degenerates to 0/0.
pub fn ir_closed(r: u64) -> f64 {
    assert!(r >= 1);
    let h = (r / 2) as f64;
    let rf = r as f64;
    let terms = (1..=r).map(|k| {
        let kf = k as f64;
        let odd_step = kf * PI / (rf + 1.0);
        let odd = (1.0 - ((2.0 * h + 2.0) * odd_step).cos()) / (2.0 * odd_step.sin());
        let even = if k % r == 0 {
            0.0
        } else {
            let step = kf * PI / rf;
            (step.cos() - ((2.0 * h + 1.0) * step).cos()) / (2.0 * step.sin())
        };
        (odd - even) / kf
    });
    4.0 / PI * compensated_sum(terms)
}

/// Lebesgue constant `L_r = (1/π) ∫_0^π |D_r(θ)| dθ`, integrated piecewise
/// between the zeros `2jπ/(2r + 1)` of the Dirichlet kernel.
pub fn lebesgue_constant_with(r: u64, nodes_per_interval: usize) -> f64 {
    assert!(r >= 1);
    let rule = GaussLegendre::new(nodes_per_interval);
    let zeros = (1..=r)
        .map(|j| 2.0 * j as f64 * PI / (2 * r + 1) as f64)
        .collect();
    rule.integrate_piecewise(|t| dirichlet_kernel(r, t).abs(), &with_endpoints(zeros)) / PI
}

pub fn lebesgue_constant(r: u64) -> f64 {
    lebesgue_constant_with(r, DEFAULT_NODES)
}

/// `4 ln(2r)/π³`.
pub fn log_lower_bound(r: u64) -> f64 {
    4.0 * (2.0 * r as f64).ln() / PI.powi(3)
}

/// All routes to `I_r` plus the Lebesgue bounds, verified for consistency.
pub fn asymptotic_report(r: u64) -> Result<AsymptoticReport> {
    if r == 0 {
        return Err(Error::Invariant("I_r needs r >= 1".into()));
    }
    let lebesgue = lebesgue_constant(r);
    let report = AsymptoticReport {
        r,
        ir_quadrature: ir_quadrature(r, DEFAULT_NODES),
        ir_double_sum: ir_double_sum(r),
        ir_closed: ir_closed(r),
        lebesgue,
        lower_bound_log: log_lower_bound(r),
        bound_interval: (lebesgue - 1.0, lebesgue + 1.0),
    };
    report.check()?;
    Ok(report)
}
