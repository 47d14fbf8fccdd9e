//! Hyperenergetic classification and scans over `N`.
//!
//! A graph on `N` vertices is hyperenergetic when its energy strictly exceeds
//! `2(N − 1)`, the energy of `K_N`. In floating point the strict inequality is
//! rendered as a three-way outcome: margins within `tol` of zero are
//! [`Classification::Boundary`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::asymptotics::ir_closed;
use crate::energy::energy;
use crate::spectrum::GraphSpec;
use crate::{Error, Result};

/// Default absolute tolerance on the margin `E − 2(N − 1)`.
pub const DEFAULT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Hyperenergetic,
    NonHyperenergetic,
    Boundary,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Hyperenergetic => "hyperenergetic",
            Classification::NonHyperenergetic => "non_hyperenergetic",
            Classification::Boundary => "boundary",
        }
    }

    pub fn from_margin(margin: f64, tol: f64) -> Self {
        if margin.abs() <= tol {
            Classification::Boundary
        } else if margin > tol {
            Classification::Hyperenergetic
        } else {
            Classification::NonHyperenergetic
        }
    }

    pub fn is_hyperenergetic(&self) -> bool {
        matches!(self, Classification::Hyperenergetic)
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Classification {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "hyperenergetic" => Ok(Classification::Hyperenergetic),
            "non_hyperenergetic" => Ok(Classification::NonHyperenergetic),
            "boundary" => Ok(Classification::Boundary),
            other => Err(format!("unknown classification {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    #[serde(flatten)]
    pub spec: GraphSpec,
    pub energy: f64,
    /// `2(N − 1)`.
    pub threshold: f64,
    /// `energy − threshold`.
    pub margin: f64,
    pub classification: Classification,
    pub tol: f64,
}

/// Classifies `spec` against `2(N − 1)` using [`energy`].
pub fn classify(spec: GraphSpec, tol: f64) -> ScanRecord {
    assert!(tol > 0.0, "classification tolerance must be positive");
    let e = energy(spec).energy;
    let threshold = spec.hyperenergetic_threshold();
    let margin = e - threshold;
    ScanRecord {
        spec,
        energy: e,
        threshold,
        margin,
        classification: Classification::from_margin(margin, tol),
        tol,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// Classifies every `G(r, N)` with `max(n_min, 2r + 1) <= N <= n_max`, in
/// ascending `N`. An empty range yields no records.
pub fn scan_range(r: u64, n_min: u64, n_max: u64, tol: f64) -> Result<Vec<ScanRecord>> {
    scan_range_with(r, n_min, n_max, tol, Execution::default())
}

pub fn scan_range_with(
    r: u64,
    n_min: u64,
    n_max: u64,
    tol: f64,
    execution: Execution,
) -> Result<Vec<ScanRecord>> {
    if r == 0 || tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidRange { r, n_min, n_max });
    }
    let first = n_min.max(2 * r + 1);
    if first > n_max {
        return Ok(Vec::new());
    }
    let record = |n: u64| {
        classify(
            GraphSpec::new(r, n).expect("N >= 2r + 1 by construction"),
            tol,
        )
    };
    let records = match execution {
        Execution::Sequential => (first..=n_max).map(record).collect(),
        Execution::Parallel => (first..=n_max).into_par_iter().map(record).collect(),
    };
    Ok(records)
}

/// Counts over a scan. Boundary records count as non-hyperenergetic; they are
/// also tallied separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ScanSummary {
    pub scanned: usize,
    pub hyperenergetic: usize,
    pub non_hyperenergetic: usize,
    pub boundary: usize,
}

impl ScanSummary {
    pub fn of(records: &[ScanRecord]) -> Self {
        let hyperenergetic = records
            .iter()
            .filter(|r| r.classification.is_hyperenergetic())
            .count();
        let boundary = records
            .iter()
            .filter(|r| r.classification == Classification::Boundary)
            .count();
        ScanSummary {
            scanned: records.len(),
            hyperenergetic,
            non_hyperenergetic: records.len() - hyperenergetic,
            boundary,
        }
    }
}

/// One row of a convergence table: `E(r, N)/(N − 1)` and its distance to `I_r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergencePoint {
    #[serde(rename = "N")]
    pub n: u64,
    pub ratio: f64,
    pub deviation: f64,
}

/// `(N, E(r, N)/(N − 1), ratio − I_r)` for each `N` in `ns`.
pub fn convergence_table(r: u64, ns: &[u64]) -> Result<Vec<ConvergencePoint>> {
    let specs = ns
        .iter()
        .map(|&n| GraphSpec::new(r, n))
        .collect::<Result<Vec<_>>>()?;
    let ir = ir_closed(r);
    Ok(specs
        .into_iter()
        .map(|spec| {
            let ratio = energy(spec).ratio;
            ConvergencePoint {
                n: spec.n(),
                ratio,
                deviation: ratio - ir,
            }
        })
        .collect())
}
