//! Energy of `G(r, N)`: the sum of absolute eigenvalues.
//!
//! [`energy_direct`] evaluates `E(r, N) = Σ_k |u(r, 2kπ/N)|` with compensated
//! accumulation. Closed forms are available for the cycle (`r = 1`), for
//! `r = 2`, for the complete graph `G(r, 2r + 1) = K_{2r+1}` and for
//! `G(r, 2r + 2) = K_{2r+2} − M`. [`energy`] picks the cheapest exact route.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::spectrum::{eigenvalue, GraphSpec};
use crate::sum::NeumaierSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnergyMethod {
    Direct,
    ClosedR1,
    ClosedR2,
    ClosedComplete,
    ClosedMatchingComplement,
}

impl EnergyMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            EnergyMethod::Direct => "direct",
            EnergyMethod::ClosedR1 => "closed_r1",
            EnergyMethod::ClosedR2 => "closed_r2",
            EnergyMethod::ClosedComplete => "closed_complete",
            EnergyMethod::ClosedMatchingComplement => "closed_matching_complement",
        }
    }

    /// The closed formula applicable to `spec`, if any, in dispatch order.
    pub fn closed_for(spec: GraphSpec) -> Option<Self> {
        let (r, n) = (spec.r(), spec.n());
        if r == 1 {
            Some(EnergyMethod::ClosedR1)
        } else if r == 2 {
            Some(EnergyMethod::ClosedR2)
        } else if n == 2 * r + 1 {
            Some(EnergyMethod::ClosedComplete)
        } else if n == 2 * r + 2 {
            Some(EnergyMethod::ClosedMatchingComplement)
        } else {
            None
        }
    }
}

impl std::fmt::Display for EnergyMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    #[serde(flatten)]
    pub spec: GraphSpec,
    pub energy: f64,
    pub method: EnergyMethod,
    /// `energy / (N − 1)`.
    pub ratio: f64,
}

impl EnergyReport {
    fn new(spec: GraphSpec, energy: f64, method: EnergyMethod) -> Self {
        let ratio = energy / (spec.n() - 1) as f64;
        Self {
            spec,
            energy,
            method,
            ratio,
        }
    }
}

/// `Σ_k |λ_k|` over all `N` modes.
///
/// Modes `k` and `N − k` evaluate the same angle, so only `k <= N/2` is
/// computed and the interior modes are doubled.
pub fn energy_direct(spec: GraphSpec) -> EnergyReport {
    let n = spec.n();
    let mut acc = NeumaierSum::new();
    acc += spec.degree() as f64;
    for k in 1..=(n - 1) / 2 {
        acc += 2.0 * eigenvalue(spec, k).abs();
    }
    if n.is_multiple_of(2) {
        acc += eigenvalue(spec, n / 2).abs();
    }
    EnergyReport::new(spec, acc.total(), EnergyMethod::Direct)
}

/// Energy of the cycle `C_N = G(1, N)`:
/// `4 sin(π(2⌊N/4⌋ + 1)/N) / sin(π/N)`.
pub fn energy_cycle_closed(n: u64) -> f64 {
    assert!(n >= 3, "cycle needs N >= 3");
    let step = PI / n as f64;
    let last = 2 * (n / 4) + 1;
    4.0 * (step * last as f64).sin() / step.sin()
}

/// Energy of `G(2, N)`:
/// `4 [sin(π(2q + 1)/N) / sin(π/N) + sin(2π(2q + 1)/N) / sin(2π/N)]`, `q = ⌊N/6⌋`.
pub fn energy_r2_closed(n: u64) -> f64 {
    assert!(n >= 5, "G(2, N) needs N >= 5");
    let step = PI / n as f64;
    let last = (2 * (n / 6) + 1) as f64;
    4.0 * ((step * last).sin() / step.sin() + (2.0 * step * last).sin() / (2.0 * step).sin())
}

/// Energy of `G(r, 2r + 2) ≅ K_{2r+2} − M`, which is `4r`.
pub fn energy_matching_complement_closed(r: u64) -> f64 {
    assert!(r >= 1);
    4.0 * r as f64
}

/// Energy by the cheapest exact method available for `spec`.
pub fn energy(spec: GraphSpec) -> EnergyReport {
    match EnergyMethod::closed_for(spec) {
        Some(method) => EnergyReport::new(spec, closed_value(spec, method), method),
        None => energy_direct(spec),
    }
}

/// Energy by the closed formula for `spec`, or `None` if no closed form applies.
pub fn energy_closed(spec: GraphSpec) -> Option<EnergyReport> {
    EnergyMethod::closed_for(spec)
        .map(|method| EnergyReport::new(spec, closed_value(spec, method), method))
}

fn closed_value(spec: GraphSpec, method: EnergyMethod) -> f64 {
    match method {
        EnergyMethod::ClosedR1 => energy_cycle_closed(spec.n()),
        EnergyMethod::ClosedR2 => energy_r2_closed(spec.n()),
        EnergyMethod::ClosedComplete => spec.hyperenergetic_threshold(),
        EnergyMethod::ClosedMatchingComplement => energy_matching_complement_closed(spec.r()),
        EnergyMethod::Direct => unreachable!("direct is not a closed form"),
    }
}
