//! Output records. Field names are the CSV headers and JSON keys.

use serde::{Deserialize, Serialize};

use crate::output::{sig15, Record};

fn cell(x: f64) -> String {
    format!("{}", sig15(x))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub k: u64,
    pub eigenvalue: f64,
}

impl Record for SpectrumRow {
    const HEADER: &'static [&'static str] = &["k", "eigenvalue"];

    fn plain_cells(&self) -> Vec<String> {
        vec![self.k.to_string(), cell(self.eigenvalue)]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyRow {
    pub r: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub energy: f64,
    pub method: String,
    pub ratio: f64,
}

impl Record for EnergyRow {
    const HEADER: &'static [&'static str] = &["r", "N", "energy", "method", "ratio"];

    fn plain_cells(&self) -> Vec<String> {
        vec![
            self.r.to_string(),
            self.n.to_string(),
            cell(self.energy),
            self.method.clone(),
            cell(self.ratio),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub r: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub energy: f64,
    pub threshold: f64,
    pub margin: f64,
    pub classification: String,
}

impl Record for ScanRow {
    const HEADER: &'static [&'static str] =
        &["r", "N", "energy", "threshold", "margin", "classification"];

    fn plain_cells(&self) -> Vec<String> {
        vec![
            self.r.to_string(),
            self.n.to_string(),
            cell(self.energy),
            cell(self.threshold),
            cell(self.margin),
            self.classification.clone(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    #[serde(rename = "N")]
    pub n: u64,
    pub ratio: f64,
    pub deviation: f64,
}

impl Record for ConvergenceRow {
    const HEADER: &'static [&'static str] = &["N", "ratio", "deviation"];

    fn plain_cells(&self) -> Vec<String> {
        vec![self.n.to_string(), cell(self.ratio), cell(self.deviation)]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticRow {
    pub r: u64,
    pub ir_quadrature: f64,
    pub ir_double_sum: f64,
    pub ir_closed: f64,
    pub lebesgue: f64,
    pub lower_bound_log: f64,
    pub bound_low: f64,
    pub bound_high: f64,
}

impl Record for AsymptoticRow {
    const HEADER: &'static [&'static str] = &[
        "r",
        "ir_quadrature",
        "ir_double_sum",
        "ir_closed",
        "lebesgue",
        "lower_bound_log",
        "bound_low",
        "bound_high",
    ];

    fn plain_cells(&self) -> Vec<String> {
        let mut cells = vec![self.r.to_string()];
        cells.extend(
            [
                self.ir_quadrature,
                self.ir_double_sum,
                self.ir_closed,
                self.lebesgue,
                self.lower_bound_log,
                self.bound_low,
                self.bound_high,
            ]
            .map(cell),
        );
        cells
    }
}
