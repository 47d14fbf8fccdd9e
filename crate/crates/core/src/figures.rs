//! Data series behind the `E(r, N)/(N − 1)` plots.

use serde::Serialize;

use crate::scan::{convergence_table, ConvergencePoint};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FigureId {
    /// `r = 1`, `N ∈ [100, 300]`.
    Fig2Left,
    /// `r = 2`, `N ∈ [100, 300]`.
    Fig2Right,
    /// `r = 3`, `N ∈ [7, 60]`.
    Fig3Left,
    /// `r = 4`, `N ∈ [9, 300]`.
    Fig3Right,
}

impl FigureId {
    pub const ALL: [FigureId; 4] = [
        FigureId::Fig2Left,
        FigureId::Fig2Right,
        FigureId::Fig3Left,
        FigureId::Fig3Right,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FigureId::Fig2Left => "fig2_left",
            FigureId::Fig2Right => "fig2_right",
            FigureId::Fig3Left => "fig3_left",
            FigureId::Fig3Right => "fig3_right",
        }
    }

    pub fn r(&self) -> u64 {
        match self {
            FigureId::Fig2Left => 1,
            FigureId::Fig2Right => 2,
            FigureId::Fig3Left => 3,
            FigureId::Fig3Right => 4,
        }
    }

    /// Inclusive `N` range on the x-axis.
    pub fn n_range(&self) -> (u64, u64) {
        match self {
            FigureId::Fig2Left | FigureId::Fig2Right => (100, 300),
            FigureId::Fig3Left => (7, 60),
            FigureId::Fig3Right => (9, 300),
        }
    }

    /// Documented y-axis range.
    pub fn y_range(&self) -> (f64, f64) {
        match self {
            FigureId::Fig2Left => (1.277, 1.287),
            FigureId::Fig2Right => (1.659, 1.672),
            FigureId::Fig3Left => (1.6, 2.2),
            FigureId::Fig3Right => (1.77, 2.26),
        }
    }

    /// Horizontal reference line drawn on the plot, if any.
    pub fn reference_line(&self) -> Option<f64> {
        match self {
            FigureId::Fig3Left | FigureId::Fig3Right => Some(2.0),
            _ => None,
        }
    }
}

impl std::fmt::Display for FigureId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for FigureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FigureId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown figure id {s:?} (expected fig2_left, fig2_right, fig3_left or fig3_right)"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureData {
    pub id: FigureId,
    pub r: u64,
    pub n_range: (u64, u64),
    pub y_range: (f64, f64),
    pub points: Vec<ConvergencePoint>,
}

pub fn figure_data(id: FigureId) -> Result<FigureData> {
    let (lo, hi) = id.n_range();
    let ns: Vec<u64> = (lo..=hi).collect();
    Ok(FigureData {
        id,
        r: id.r(),
        n_range: (lo, hi),
        y_range: id.y_range(),
        points: convergence_table(id.r(), &ns)?,
    })
}
